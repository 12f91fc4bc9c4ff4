//! Sparse multivariate polynomials over the two-element field.
//!
//! Characteristic-2 oracles clear denominators and work here: evaluation of a
//! form at polynomial vectors, Artin–Schreier solvability `f² + f = α`, and
//! square roots.

use super::{FieldElem, FieldTower};
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 4;
const FIELD_BITS: u32 = 16;
const FIELD_MASK: u64 = (1 << FIELD_BITS) - 1;

/// Polynomial over F₂ in at most four variables; a term is a packed exponent
/// vector, 16 bits per variable. Terms are sorted and distinct.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Gf2Poly {
    terms: Vec<u64>,
}

pub fn pack(exps: &[u32]) -> u64 {
    exps.iter().enumerate().fold(0, |acc, (i, &e)| acc | ((e as u64) << (FIELD_BITS * i as u32)))
}

pub fn unpack(t: u64, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| ((t >> (FIELD_BITS * i as u32)) & FIELD_MASK) as u32).collect()
}

fn term_degree(t: u64) -> u32 {
    (0..MAX_VARS).map(|i| ((t >> (FIELD_BITS * i as u32)) & FIELD_MASK) as u32).sum()
}

fn cancel_pairs(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    let mut out = Vec::with_capacity(v.len());
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            out.push(v[i]);
        }
        i = j;
    }
    out
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { terms: vec![0] }
    }

    pub fn from_terms(terms: Vec<u64>) -> Self {
        Gf2Poly { terms: cancel_pairs(terms) }
    }

    pub fn var(i: usize) -> Self {
        Gf2Poly { terms: vec![1u64 << (FIELD_BITS * i as u32)] }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|&t| term_degree(t)).max()
    }

    pub fn add(&self, o: &Gf2Poly) -> Gf2Poly {
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Gf2Poly { terms: out }
    }

    pub fn mul(&self, o: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || o.is_zero() {
            return Gf2Poly::zero();
        }
        if o.terms == [0] {
            return self.clone();
        }
        if self.terms == [0] {
            return o.clone();
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for &a in &self.terms {
            for &b in &o.terms {
                v.push(a + b);
            }
        }
        Gf2Poly { terms: cancel_pairs(v) }
    }

    /// Frobenius: squaring doubles every exponent.
    pub fn square(&self) -> Gf2Poly {
        Gf2Poly { terms: self.terms.iter().map(|&t| t << 1).collect() }
    }

    /// Square root when every exponent is even.
    pub fn sqrt(&self) -> Option<Gf2Poly> {
        let even = (0..MAX_VARS).fold(0u64, |acc, i| acc | (1u64 << (FIELD_BITS * i as u32)));
        if self.terms.iter().any(|&t| t & even != 0) {
            return None;
        }
        Some(Gf2Poly { terms: self.terms.iter().map(|&t| t >> 1).collect() })
    }

    /// Flattens a characteristic-2 element into `(numerator, denominator)`
    /// over F₂[x₁..x_r]; the fraction need not be reduced.
    pub fn from_elem(e: &FieldElem) -> Result<(Gf2Poly, Gf2Poly)> {
        match e {
            FieldElem::Mod(m) if m.modulus() == 2 => {
                Ok((if m.value() == 1 { Gf2Poly::one() } else { Gf2Poly::zero() }, Gf2Poly::one()))
            }
            FieldElem::Fun(f) => {
                if f.var >= MAX_VARS {
                    return Err(Error::Unsupported(format!("more than {MAX_VARS} variables in characteristic 2")));
                }
                let (n, ln) = flatten_poly(f.num.coeffs(), f.var)?;
                let (d, ld) = flatten_poly(f.den.coeffs(), f.var)?;
                Ok((n.mul(&ld), d.mul(&ln)))
            }
            _ => Err(Error::WrongCharacteristic("expected a characteristic-2 element".into())),
        }
    }

    pub fn to_elem(&self, tower: &FieldTower) -> FieldElem {
        let n = tower.num_vars();
        let mut acc = tower.zero();
        for &t in &self.terms {
            let mut m = tower.one();
            for (i, e) in unpack(t, n).into_iter().enumerate() {
                if e > 0 {
                    m = &m * &FieldElem::var_power(&tower.one(), i, e as i64);
                }
            }
            acc = &acc + &m;
        }
        acc
    }
}

// Σ (n_j / d_j) X^j  ↦  (Σ n_j Π_{l≠j} d_l X^j,  Π d_l) over distinct d_l
fn flatten_poly(coeffs: &[FieldElem], var: usize) -> Result<(Gf2Poly, Gf2Poly)> {
    let mut parts = Vec::new();
    let mut dens: Vec<Gf2Poly> = Vec::new();
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (n, d) = Gf2Poly::from_elem(c)?;
        if !dens.contains(&d) {
            dens.push(d.clone());
        }
        parts.push((j, n, d));
    }
    let all = dens.iter().fold(Gf2Poly::one(), |a, d| a.mul(d));
    let mut num = Gf2Poly::zero();
    for (j, n, d) in parts {
        let others = dens.iter().filter(|x| **x != d).fold(Gf2Poly::one(), |a, x| a.mul(x));
        let xj = Gf2Poly { terms: vec![(j as u64) << (FIELD_BITS * var as u32)] };
        num = num.add(&n.mul(&others).mul(&xj));
    }
    Ok((num, all))
}

/// Product in GF(2⁶⁴) = F₂[t]/(t⁶⁴ + t⁴ + t³ + t + 1).
pub fn gf64_mul(a: u64, b: u64) -> u64 {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut b = b;
    let mut i = 0;
    while b != 0 {
        if b & 1 == 1 {
            lo ^= a << i;
            if i > 0 {
                hi ^= a >> (64 - i);
            }
        }
        b >>= 1;
        i += 1;
    }
    // t⁶⁴ ≡ t⁴ + t³ + t + 1
    let fold = |h: u64| (h << 4) ^ (h << 3) ^ (h << 1) ^ h;
    let carry = (hi >> 60) ^ (hi >> 61) ^ (hi >> 63);
    lo ^ fold(hi) ^ fold(carry)
}

impl Gf2Poly {
    /// Value at a point of GF(2⁶⁴)^nvars.
    pub fn eval64(&self, point: &[u64]) -> u64 {
        let mut acc = 0;
        for &t in &self.terms {
            let mut m = 1u64;
            for (i, &x) in point.iter().enumerate() {
                let e = (t >> (FIELD_BITS * i as u32)) & FIELD_MASK;
                for _ in 0..e {
                    m = gf64_mul(m, x);
                }
            }
            acc ^= m;
        }
        acc
    }
}

/// All monomials of total degree `≤ d` in `nvars` variables, by degree then
/// packed value.
pub fn monomials_upto(nvars: usize, d: u32) -> Vec<u64> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<u64>) {
        if i == cur.len() {
            out.push(pack(cur));
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by_key(|&t| (term_degree(t), t));
    out
}

/// Solves `g² + g·d = t` for `g` over F₂ with total degree `≤ bound`.
pub fn solve_artin_schreier(d: &Gf2Poly, t: &Gf2Poly, nvars: usize, bound: u32) -> Option<Gf2Poly> {
    let unknowns = monomials_upto(nvars, bound);
    let cols: Vec<Gf2Poly> = unknowns
        .iter()
        .map(|&m| {
            let g = Gf2Poly { terms: vec![m] };
            g.square().add(&g.mul(d))
        })
        .collect();
    let mut rows: Vec<u64> = cols.iter().flat_map(|c| c.terms.iter().copied()).chain(t.terms.iter().copied()).collect();
    rows.sort_unstable();
    rows.dedup();
    let ncols = unknowns.len();
    let words = (ncols + 1).div_ceil(64);
    let mut mat: Vec<Vec<u64>> = vec![vec![0u64; words]; rows.len()];
    let set = |row: &mut Vec<u64>, c: usize| row[c / 64] ^= 1u64 << (c % 64);
    for (c, col) in cols.iter().enumerate() {
        for term in &col.terms {
            let r = rows.binary_search(term).unwrap();
            set(&mut mat[r], c);
        }
    }
    for term in &t.terms {
        let r = rows.binary_search(term).unwrap();
        set(&mut mat[r], ncols);
    }
    let get = |row: &Vec<u64>, c: usize| (row[c / 64] >> (c % 64)) & 1 == 1;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..mat.len()).find(|&i| get(&mat[i], c)) else {
            continue;
        };
        mat.swap(r, p);
        let pivot_row = mat[r].clone();
        for (i, row) in mat.iter_mut().enumerate() {
            if i != r && get(row, c) {
                for (w, pw) in row.iter_mut().zip(&pivot_row) {
                    *w ^= pw;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if mat[r..].iter().any(|row| get(row, ncols)) {
        return None;
    }
    let mut g = Vec::new();
    for (i, &c) in pivots.iter().enumerate() {
        if get(&mat[i], ncols) {
            g.push(unknowns[c]);
        }
    }
    Some(Gf2Poly::from_terms(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frobenius_and_products() {
        let x = Gf2Poly::var(0);
        let y = Gf2Poly::var(1);
        let s = x.add(&y);
        assert_eq!(s.mul(&s), x.square().add(&y.square()));
        assert_eq!(s.square().sqrt(), Some(s.clone()));
        assert_eq!(x.sqrt(), None);
        assert_eq!(s.add(&s), Gf2Poly::zero());
    }

    #[test]
    fn gf64_field_laws() {
        let (a, b, c) = (0x1234_5678_9abc_def1u64, 0xfedc_ba98_7654_3210u64, 0x8000_0000_0000_0001u64);
        assert_eq!(gf64_mul(a, b), gf64_mul(b, a));
        assert_eq!(gf64_mul(gf64_mul(a, b), c), gf64_mul(a, gf64_mul(b, c)));
        assert_eq!(gf64_mul(a, b ^ c), gf64_mul(a, b) ^ gf64_mul(a, c));
        assert_eq!(gf64_mul(a, 1), a);
        // t⁶³ · t = t⁶⁴ ≡ t⁴ + t³ + t + 1
        assert_eq!(gf64_mul(1 << 63, 2), 0b11011);
        let x = Gf2Poly::var(0);
        let y = Gf2Poly::var(1);
        let p = x.mul(&y).add(&y.square()).add(&Gf2Poly::one());
        let pt = [a, b];
        assert_eq!(p.eval64(&pt), gf64_mul(a, b) ^ gf64_mul(b, b) ^ 1);
    }

    #[test]
    fn artin_schreier_solvable_and_not() {
        let x = Gf2Poly::var(0);
        // α = x² + x has root x
        let alpha = x.square().add(&x);
        let g = solve_artin_schreier(&Gf2Poly::one(), &alpha, 2, 2).unwrap();
        assert_eq!(g.square().add(&g), alpha);
        // α = x is not of the form f² + f
        assert!(solve_artin_schreier(&Gf2Poly::one(), &x, 2, 3).is_none());
    }
}
