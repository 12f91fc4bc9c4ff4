//! Seeded random elements and slot values for generators and tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fields::{BaseField, FieldElem, FieldTower, Poly};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn base_scalar<R: Rng>(t: &FieldTower, rng: &mut R, height: i64) -> FieldElem {
    match t.base() {
        BaseField::Rationals | BaseField::RealsOrdered => {
            let n = rng.gen_range(-height..=height);
            let d = if rng.gen_bool(0.25) { rng.gen_range(1..=height.max(1)) } else { 1 };
            FieldElem::rational(n, d)
        }
        BaseField::PrimeField(p) => FieldElem::modp(rng.gen_range(0..*p as i64), *p),
        BaseField::Char2Rational => FieldElem::modp(rng.gen_range(0..2), 2),
    }
}

fn elem_at<R: Rng>(t: &FieldTower, rng: &mut R, level: usize, deg: usize, height: i64) -> FieldElem {
    if level == 0 {
        return base_scalar(t, rng, height);
    }
    if rng.gen_bool(0.2) {
        return elem_at(t, rng, level - 1, deg, height);
    }
    let v = level - 1;
    let poly = |rng: &mut R, d: usize| -> Poly {
        Poly::from_coeffs((0..=d).map(|_| elem_at(t, rng, v, deg.min(1), height)).collect())
    };
    let nd = rng.gen_range(0..=deg);
    let num = poly(rng, nd);
    let dd = rng.gen_range(0..=deg.min(1));
    let den = if rng.gen_bool(0.5) { Poly::constant(t.one()) } else { poly(rng, dd) };
    if den.is_zero() {
        return elem_at(t, rng, level, deg, height);
    }
    FieldElem::from_polys(v, num, den).expect("nonzero denominator")
}

/// Random element with numerator/denominator degrees at most `deg` in the
/// outermost variable and base coefficients of height at most `height`.
pub fn elem<R: Rng>(t: &FieldTower, rng: &mut R, deg: usize, height: i64) -> FieldElem {
    elem_at(t, rng, t.num_vars(), deg, height)
}

pub fn nonzero_elem<R: Rng>(t: &FieldTower, rng: &mut R, deg: usize, height: i64) -> FieldElem {
    loop {
        let e = elem(t, rng, deg, height);
        if !e.is_zero() {
            return e;
        }
    }
}

/// Random nonzero slot value: a signed product of a small integer and a
/// monomial in the tower's variables.
pub fn slot<R: Rng>(t: &FieldTower, rng: &mut R, height: i64) -> FieldElem {
    let mut e = loop {
        let c = base_scalar(t, rng, height);
        if !c.is_zero() {
            break c;
        }
    };
    for v in 0..t.num_vars() {
        let k = rng.gen_range(0..=2i64);
        if k > 0 {
            e = &e * &FieldElem::var_power(&t.one(), v, k);
        }
    }
    if t.num_vars() > 0 && t.characteristic() == 2 && rng.gen_bool(0.3) {
        e = &e + &t.one();
    }
    e
}
