//! Characteristic 2: certificate search over vectors with polynomial
//! coordinates in F₂[x₁,…], after clearing denominators. Forms of dimension
//! at most 2 are decided exactly.
//!
//! Candidates are visited in a fixed order: maximal coordinate degree `d`
//! (some coordinate of degree exactly `d`), then the number of nonzero
//! coordinates, then the support in lexicographic order, then coordinate
//! values in pool order. The first zero in this order is reported.

use super::{Decision, SearchBudget};
use crate::error::{Error, Result};
use crate::fields::gf2::{self, gf64_mul, Gf2Poly, MAX_VARS};
use crate::fields::{FieldElem, FieldTower};
use crate::forms::QForm;

const POINTS: [[u64; MAX_VARS]; 2] = [
    [0x9e37_79b9_7f4a_7c15, 0xc2b2_ae3d_27d4_eb4f, 0x1656_67b1_9e37_79f9, 0x85eb_ca77_c2b2_ae63],
    [0x27d4_eb2f_1656_67c5, 0x94d0_49bb_1331_11eb, 0xbf58_476d_1ce4_e5b9, 0xd6e8_feb8_6659_fd93],
];

fn flat(e: &FieldElem) -> Result<(Gf2Poly, Gf2Poly)> {
    Gf2Poly::from_elem(e)
}

fn frac_elem(t: &FieldTower, n: &Gf2Poly, d: &Gf2Poly) -> Result<FieldElem> {
    n.to_elem(t).checked_div(&d.to_elem(t))
}

fn ceil_half(n: u32) -> u32 {
    n.div_ceil(2)
}

/// `α = f² + f` for some `f` in F₂(x₁,…); `α = N/D` gives `g² + gD = ND`
/// with `f = g/D` and `deg g ≤ max(deg D, ⌈deg ND / 2⌉)`.
pub(crate) fn artin_schreier_root(t: &FieldTower, a: &FieldElem) -> Result<Option<FieldElem>> {
    if a.is_zero() {
        return Ok(Some(t.zero()));
    }
    let (n, d) = flat(a)?;
    let nd = n.mul(&d);
    let bound = d.total_degree().unwrap_or(0).max(ceil_half(nd.total_degree().unwrap_or(0)));
    match gf2::solve_artin_schreier(&d, &nd, t.num_vars(), bound) {
        Some(g) => Ok(Some(frac_elem(t, &g, &d)?)),
        None => Ok(None),
    }
}

/// `√(a/b)` when `a/b` is a square.
fn ratio_sqrt(t: &FieldTower, a: &FieldElem, b: &FieldElem) -> Result<Option<FieldElem>> {
    let (na, da) = flat(a)?;
    let (nb, db) = flat(b)?;
    let (num, den) = (na.mul(&db), da.mul(&nb));
    match num.mul(&den).sqrt() {
        Some(r) => Ok(Some(frac_elem(t, &r, &den)?)),
        None => Ok(None),
    }
}

fn exact_small(f: &QForm) -> Result<Option<Decision>> {
    let t = f.tower();
    let (pairs, quasi) = (f.pairs(), f.quasilinear());
    // a single pair or two quasilinear entries
    if let [(_, a)] = pairs {
        if quasi.is_empty() {
            return Ok(Some(match artin_schreier_root(t, a)? {
                Some(r) => Decision::yes(vec![r, t.one()]),
                None => Decision::No { reason: "Artin-Schreier slot is not of the form f^2 + f".into() },
            }));
        }
    }
    if pairs.is_empty() {
        match quasi {
            [_] => return Ok(Some(Decision::No { reason: "one-dimensional".into() })),
            [a, b] => {
                return Ok(Some(match ratio_sqrt(t, b, a)? {
                    Some(r) => Decision::yes(vec![r, t.one()]),
                    None => Decision::No { reason: "ratio of the entries is not a square".into() },
                }))
            }
            _ => {}
        }
    }
    Ok(None)
}

/// Zero of a single pair or of two quasilinear entries inside a larger form.
fn sub_certificate(f: &QForm) -> Result<Option<Vec<FieldElem>>> {
    let t = f.tower();
    let np = f.pairs().len();
    for (i, (_, a)) in f.pairs().iter().enumerate() {
        if let Some(r) = artin_schreier_root(t, a)? {
            let mut v = vec![t.zero(); f.dim()];
            v[2 * i] = r;
            v[2 * i + 1] = t.one();
            return Ok(Some(v));
        }
    }
    let q = f.quasilinear();
    for i in 0..q.len() {
        for j in i + 1..q.len() {
            if let Some(r) = ratio_sqrt(t, &q[j], &q[i])? {
                let mut v = vec![t.zero(); f.dim()];
                v[2 * np + i] = r;
                v[2 * np + j] = t.one();
                return Ok(Some(v));
            }
        }
    }
    Ok(None)
}

/// Polynomial coefficients after multiplying the form by a common
/// denominator: `sq[p]` multiplies the square of coordinate `p`, and pair
/// `i` has cross coefficient `sq[2i]` on `x_i y_i`.
fn cleared(f: &QForm) -> Result<Vec<Gf2Poly>> {
    let mut raw = Vec::new();
    for (c, a) in f.pairs() {
        raw.push(c.clone());
        raw.push(c * a);
    }
    raw.extend(f.quasilinear().iter().cloned());
    let mut fl = Vec::with_capacity(raw.len());
    let mut dens: Vec<Gf2Poly> = Vec::new();
    for e in &raw {
        if e.is_zero() {
            fl.push((Gf2Poly::zero(), Gf2Poly::one()));
            continue;
        }
        let (n, d) = flat(e)?;
        if !dens.contains(&d) {
            dens.push(d.clone());
        }
        fl.push((n, d));
    }
    Ok(fl
        .into_iter()
        .map(|(n, d)| {
            let mut skipped = false;
            dens.iter().fold(n, |acc, x| {
                if !skipped && *x == d {
                    skipped = true;
                    acc
                } else {
                    acc.mul(x)
                }
            })
        })
        .collect())
}

fn pool(nvars: usize, d: u32) -> Vec<Gf2Poly> {
    let mons = gf2::monomials_upto(nvars, d);
    let m = mons.len();
    let mut out: Vec<(u32, u64, Gf2Poly)> = (1u64..(1 << m))
        .map(|mask| {
            let p = Gf2Poly::from_terms((0..m).filter(|b| mask >> b & 1 == 1).map(|b| mons[b]).collect());
            (p.total_degree().unwrap(), mask, p)
        })
        .collect();
    out.sort_by_key(|(deg, mask, _)| (*deg, *mask));
    out.into_iter().map(|(_, _, p)| p).collect()
}

struct Evaluator {
    npairs: usize,
    coef: Vec<Gf2Poly>,
    coef_at: Vec<[u64; 2]>,
}

impl Evaluator {
    fn value_at(&self, coords: &[(usize, usize)], pool_at: &[[u64; 2]], k: usize) -> u64 {
        let mut acc = 0u64;
        for (idx, &(p, g)) in coords.iter().enumerate() {
            let gv = pool_at[g][k];
            acc ^= gf64_mul(self.coef_at[p][k], gf64_mul(gv, gv));
            if p < 2 * self.npairs && p % 2 == 0 {
                if let Some(&(q, h)) = coords.get(idx + 1) {
                    if q == p + 1 {
                        acc ^= gf64_mul(self.coef_at[p][k], gf64_mul(gv, pool_at[h][k]));
                    }
                }
            }
        }
        acc
    }

    fn exact(&self, coords: &[(usize, usize)], pool: &[Gf2Poly]) -> bool {
        let mut acc = Gf2Poly::zero();
        for (idx, &(p, g)) in coords.iter().enumerate() {
            acc = acc.add(&self.coef[p].mul(&pool[g].square()));
            if p < 2 * self.npairs && p % 2 == 0 {
                if let Some(&(q, h)) = coords.get(idx + 1) {
                    if q == p + 1 {
                        acc = acc.add(&self.coef[p].mul(&pool[g]).mul(&pool[h]));
                    }
                }
            }
        }
        acc.is_zero()
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let w = c.len();
    for i in (0..w).rev() {
        if c[i] < n - w + i {
            c[i] += 1;
            for j in i + 1..w {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

pub(super) fn search(f: &QForm, budget: &SearchBudget) -> Result<Decision> {
    budget.validate()?;
    if let Some(d) = exact_small(f)? {
        return Ok(d);
    }
    if let Some(v) = sub_certificate(f)? {
        return Ok(Decision::yes(v));
    }
    let t = f.tower();
    let nvars = t.num_vars();
    if nvars > MAX_VARS {
        return Err(Error::Unsupported(format!("search over more than {MAX_VARS} variables")));
    }
    let coef = cleared(f)?;
    let pts: Vec<&[u64]> = POINTS.iter().map(|p| &p[..nvars]).collect();
    let coef_at = coef.iter().map(|c| [c.eval64(pts[0]), c.eval64(pts[1])]).collect();
    let ev = Evaluator { npairs: f.pairs().len(), coef, coef_at };
    let n = f.dim();
    let mut count = 0u64;
    for d in 0..=budget.max_total_degree {
        // one nonzero coordinate never gives a zero, so a degree whose
        // single-coordinate stage alone overruns the budget ends the search
        let m = gf2::monomials_upto(nvars, d).len() as u32;
        let m_low = if d == 0 { 0 } else { gf2::monomials_upto(nvars, d - 1).len() as u32 };
        if m >= 26 || (n as u64) * ((1u64 << m) - (1u64 << m_low)) > budget.max_candidates - count {
            return Ok(Decision::Unknown {
                bound: format!("{} candidates, coordinate degree {}", budget.max_candidates, d),
            });
        }
        let pl = pool(nvars, d);
        let pool_at: Vec<[u64; 2]> = pl.iter().map(|g| [g.eval64(pts[0]), g.eval64(pts[1])]).collect();
        let first_top = pl.iter().position(|g| g.total_degree() == Some(d)).unwrap_or(0);
        for w in 1..=n {
            let mut support: Vec<usize> = (0..w).collect();
            loop {
                let mut vals = vec![0usize; w];
                loop {
                    if vals.iter().any(|&g| g >= first_top) {
                        count += 1;
                        if count > budget.max_candidates {
                            return Ok(Decision::Unknown {
                                bound: format!("{} candidates, coordinate degree {}", budget.max_candidates, d),
                            });
                        }
                        let coords: Vec<(usize, usize)> = support.iter().copied().zip(vals.iter().copied()).collect();
                        if ev.value_at(&coords, &pool_at, 0) == 0
                            && ev.value_at(&coords, &pool_at, 1) == 0
                            && ev.exact(&coords, &pl)
                        {
                            let mut v = vec![t.zero(); n];
                            for &(p, g) in &coords {
                                v[p] = pl[g].to_elem(t);
                            }
                            return Ok(Decision::yes(v));
                        }
                    }
                    // odometer, last coordinate fastest
                    let mut i = w;
                    while i > 0 {
                        i -= 1;
                        vals[i] += 1;
                        if vals[i] < pl.len() {
                            break;
                        }
                        vals[i] = 0;
                        if i == 0 {
                            i = usize::MAX;
                            break;
                        }
                    }
                    if i == usize::MAX {
                        break;
                    }
                }
                if !next_combination(&mut support, n) {
                    break;
                }
            }
        }
    }
    Ok(Decision::Unknown { bound: format!("coordinate degree {} exhausted", budget.max_total_degree) })
}
