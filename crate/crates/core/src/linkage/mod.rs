//! Linkage criteria for presentations with a common factor, the chain step
//! that enlarges a common factor inside an ambient form, and presentation moves.

mod moves;

use crate::error::{Error, Result};
use crate::fields::FieldElem;
use crate::forms::{GramSpace, PfisterPres, QForm};
use crate::linalg;
use crate::oracles::{is_isotropic, Decision, SearchBudget};

pub use moves::{apply_move, apply_tuple_move, Move, MoveTarget, TupleMove};

#[derive(Clone, Debug)]
pub struct LinkageVerdict {
    pub linked: Decision,
    pub omega: QForm,
}

/// Check that `p1` and `p2` end in the same `k` slots.
pub fn check_shared(p1: &PfisterPres, p2: &PfisterPres, k: usize) -> Result<()> {
    if p1.tower() != p2.tower() && **p1.tower() != **p2.tower() {
        return Err(Error::TowerMismatch);
    }
    if k == 0 {
        return Err(Error::NoSharedFactor);
    }
    for p in [p1, p2] {
        if p.fold() < k {
            return Err(Error::SharedSlotMismatch(format!("a {}-fold presentation has no {k} shared slots", p.fold())));
        }
    }
    let (s1, s2) = (p1.with_shared_k(k)?.shared_slots(), p2.with_shared_k(k)?.shared_slots());
    if s1 != s2 {
        let t = p1.tower();
        let show = |s: &[FieldElem]| s.iter().map(|e| t.fmt_elem(e)).collect::<Vec<_>>().join(", ");
        return Err(Error::SharedSlotMismatch(format!("[{}] vs [{}]", show(&s1), show(&s2))));
    }
    Ok(())
}

/// `θ₁ ⊥ θ₂ ⊥ ⟨1⟩` with the last summand quasilinear.
pub fn omega_inseparable(p1: &PfisterPres, p2: &PfisterPres, k: usize) -> Result<QForm> {
    if !p1.tower().is_char2() {
        return Err(Error::WrongCharacteristic(format!("inseparable linkage needs characteristic 2, not {}", p1.tower().characteristic())));
    }
    check_shared(p1, p2, k)?;
    let t1 = p1.with_shared_k(k)?.theta_complement()?;
    let t2 = p2.with_shared_k(k)?.theta_complement()?;
    let one = QForm::char2(p1.tower().clone(), vec![], vec![p1.tower().one()])?;
    t1.orth_sum(&t2)?.orth_sum(&one)
}

/// `θ₁ ⊥ −θ₂`.
pub fn omega_separable(p1: &PfisterPres, p2: &PfisterPres, k: usize) -> Result<QForm> {
    check_shared(p1, p2, k)?;
    let t1 = p1.with_shared_k(k)?.theta_complement()?;
    let t2 = p2.with_shared_k(k)?.theta_complement()?;
    t1.orth_sum(&t2.negate()?)
}

pub fn inseparably_k_linked(p1: &PfisterPres, p2: &PfisterPres, k: usize, budget: &SearchBudget) -> Result<LinkageVerdict> {
    let omega = omega_inseparable(p1, p2, k)?;
    Ok(LinkageVerdict { linked: is_isotropic(&omega, budget)?, omega })
}

pub fn k_plus_one_linked(p1: &PfisterPres, p2: &PfisterPres, k: usize, budget: &SearchBudget) -> Result<LinkageVerdict> {
    let omega = omega_separable(p1, p2, k)?;
    Ok(LinkageVerdict { linked: is_isotropic(&omega, budget)?, omega })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStep {
    pub gamma: FieldElem,
    pub v: Vec<FieldElem>,
}

/// Find `v ≠ 0` orthogonal to both subspaces with `ψ(v) ≠ 0` and return
/// `γ = −ψ(v)`. The common orthogonal complement is enumerated as integer
/// combinations of its echelon basis, by increasing height and then
/// lexicographically with coefficients ordered 0, 1, −1, 2, −2, …, up to
/// `budget.max_coeff_height`.
pub fn chain_step(
    psi: &GramSpace,
    v1: &[Vec<FieldElem>],
    v2: &[Vec<FieldElem>],
    budget: &SearchBudget,
) -> Result<ChainStep> {
    budget.validate()?;
    let n = psi.dim();
    let t = psi.tower().clone();
    for (name, vs) in [("V1", v1), ("V2", v2)] {
        if vs.is_empty() || vs.len() >= n || !vs.len().is_power_of_two() {
            return Err(Error::DimensionMismatch(format!("{name} has {} vectors in a {n}-dimensional space", vs.len())));
        }
        if let Some(u) = vs.iter().find(|u| u.len() != n) {
            return Err(Error::DimensionMismatch(format!("{name} vector of length {} in dimension {n}", u.len())));
        }
        for u in vs {
            for e in u {
                t.check(e)?;
            }
        }
    }
    if v1.len() != v2.len() {
        return Err(Error::DimensionMismatch(format!("V1 has {} vectors, V2 has {}", v1.len(), v2.len())));
    }
    let polar = psi.polar_matrix();
    let rows: Vec<Vec<FieldElem>> = v1
        .iter()
        .chain(v2)
        .map(|u| {
            (0..n)
                .map(|j| u.iter().zip(polar).fold(t.zero(), |acc, (ui, row)| &acc + &(ui * &row[j])))
                .collect()
        })
        .collect();
    let basis = linalg::nullspace(&t, &rows, n);
    if basis.is_empty() {
        return Err(Error::NoAnisotropicVector);
    }
    let p = t.characteristic() as i64;
    let max_h = match p {
        0 => budget.max_coeff_height as i64,
        _ => (budget.max_coeff_height as i64).min((p - 1).max(2) / 2),
    };
    let mut tried = 0u64;
    for h in 1..=max_h {
        // digits index into 0, 1, -1, 2, -2, …, h, -h
        let value = |d: usize| -> i64 { if d % 2 == 1 { (d as i64 + 1) / 2 } else { -(d as i64 / 2) } };
        let mut digits = vec![0usize; basis.len()];
        loop {
            let c: Vec<i64> = digits.iter().map(|&d| value(d)).collect();
            if c.iter().any(|x| x.abs() == h) {
                tried += 1;
                if tried > budget.max_candidates {
                    return Err(Error::NoAnisotropicVector);
                }
                let v: Vec<FieldElem> = (0..n)
                    .map(|j| c.iter().zip(&basis).fold(t.zero(), |acc, (&ci, b)| &acc + &(&t.int(ci) * &b[j])))
                    .collect();
                let q = psi.eval(&v);
                if !q.is_zero() && v.iter().any(|x| !x.is_zero()) {
                    return Ok(ChainStep { gamma: -&q, v });
                }
            }
            if !advance(&mut digits, 2 * h as usize) {
                break;
            }
        }
    }
    Err(Error::NoAnisotropicVector)
}

/// Next vector of `[0, top]^len` in lexicographic order.
fn advance(c: &mut [usize], top: usize) -> bool {
    for i in (0..c.len()).rev() {
        if c[i] < top {
            c[i] += 1;
            c[i + 1..].fill(0);
            return true;
        }
    }
    false
}

/// `⟨⟨γ⟩⟩ ⊗ p`, with `γ` placed as a bilinear slot: appended in
/// characteristic ≠ 2, prepended in characteristic 2 so the
/// Artin–Schreier slot stays last.
pub fn extend_factor(p: &PfisterPres, gamma: &FieldElem) -> Result<PfisterPres> {
    let mut b = p.bilinear_slots().to_vec();
    if p.tower().is_char2() {
        b.insert(0, gamma.clone());
    } else {
        b.push(gamma.clone());
    }
    PfisterPres::new(p.tower().clone(), b, p.as_slot().cloned(), p.shared_k())
}

#[cfg(test)]
mod tests;
