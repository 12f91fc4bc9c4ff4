//! Canonical field elements.
//!
//! An element is either a base scalar (a rational, or a residue modulo a
//! prime) or a reduced fraction `num/den` of polynomials in one variable whose
//! coefficients are elements that only involve lower-indexed variables. The
//! denominator is monic and coprime to the numerator, and a fraction that is
//! constant in its variable collapses to the level below, so structural
//! equality is field equality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::Poly;
use crate::error::{Error, Result};

/// Residue modulo a prime `p`; `value < p`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct ModP {
    value: u32,
    p: u32,
}

impl ModP {
    pub fn new(v: i64, p: u32) -> Self {
        ModP { value: v.rem_euclid(p as i64) as u32, p }
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        ModP { value: ((self.value as u64 + o.value as u64) % self.p as u64) as u32, p: self.p }
    }

    pub fn mul(self, o: Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        ModP { value: ((self.value as u64 * o.value as u64) % self.p as u64) as u32, p: self.p }
    }

    pub fn neg(self) -> Self {
        ModP { value: (self.p - self.value) % self.p, p: self.p }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = ModP { value: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(self.pow(self.p as u64 - 2))
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFun {
    pub(crate) var: usize,
    pub(crate) num: Poly,
    pub(crate) den: Poly,
}

impl RatFun {
    pub fn var(&self) -> usize {
        self.var
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum FieldElem {
    Rat(BigRational),
    Mod(ModP),
    Fun(Arc<RatFun>),
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(r) => write!(f, "{r}"),
            FieldElem::Mod(m) => write!(f, "{}mod{}", m.value, m.p),
            FieldElem::Fun(r) => write!(f, "({:?})/({:?})@v{}", r.num.c, r.den.c, r.var),
        }
    }
}

impl FieldElem {
    pub fn rational(n: i64, d: i64) -> Self {
        FieldElem::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn modp(v: i64, p: u32) -> Self {
        FieldElem::Mod(ModP::new(v, p))
    }

    /// Number of the highest variable involved plus one; base scalars are level 0.
    pub fn level(&self) -> usize {
        match self {
            FieldElem::Fun(r) => r.var + 1,
            _ => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_zero(),
            FieldElem::Mod(m) => m.value == 0,
            FieldElem::Fun(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElem::Rat(r) => r.is_one(),
            FieldElem::Mod(m) => m.value == 1,
            FieldElem::Fun(_) => false,
        }
    }

    pub fn zero_like(&self) -> Self {
        match self {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::zero()),
            FieldElem::Mod(m) => FieldElem::Mod(ModP { value: 0, p: m.p }),
            FieldElem::Fun(r) => r.den.lead().zero_like(),
        }
    }

    pub fn one_like(&self) -> Self {
        match self {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::one()),
            FieldElem::Mod(m) => FieldElem::Mod(ModP { value: 1 % m.p, p: m.p }),
            FieldElem::Fun(r) => r.den.lead().one_like(),
        }
    }

    /// `n · 1` in the same prime field.
    pub fn int_like(&self, n: i64) -> Self {
        match self.zero_like() {
            FieldElem::Rat(_) => FieldElem::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldElem::Mod(m) => FieldElem::Mod(ModP::new(n, m.p)),
            FieldElem::Fun(_) => unreachable!(),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldElem::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_fun(&self) -> Option<&RatFun> {
        match self {
            FieldElem::Fun(r) => Some(r),
            _ => None,
        }
    }

    /// Characteristic of the prime field this element lives over.
    pub fn characteristic(&self) -> u32 {
        match self.zero_like() {
            FieldElem::Mod(m) => m.p,
            _ => 0,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        match self {
            FieldElem::Rat(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(FieldElem::Rat(r.recip()))
                }
            }
            FieldElem::Mod(m) => m.inv().map(FieldElem::Mod).ok_or(Error::DivisionByZero),
            FieldElem::Fun(f) => {
                let lc_inv = f.num.lead().inv()?;
                Ok(FieldElem::Fun(Arc::new(RatFun {
                    var: f.var,
                    num: f.den.scale(&lc_inv),
                    den: f.num.scale(&lc_inv),
                })))
            }
        }
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            n >>= 1;
        }
        Ok(acc)
    }

    /// Builds the canonical element `num/den` in variable `var`.
    pub fn from_polys(var: usize, num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(den.lead().zero_like());
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g).0, den.divrem(&g).0)
        };
        Ok(Self::finish(var, num, den))
    }

    // coprime inputs
    fn finish(var: usize, num: Poly, den: Poly) -> Self {
        let (num, den) = if den.lead().is_one() {
            (num, den)
        } else {
            let inv = den.lead().inv().expect("nonzero");
            (num.scale(&inv), den.scale(&inv))
        };
        if den.degree() == Some(0) && num.degree() == Some(0) {
            return num.c[0].clone();
        }
        FieldElem::Fun(Arc::new(RatFun { var, num, den }))
    }

    /// The monomial `var^k` (coefficient one) over the prime field of `like`.
    pub fn var_power(like: &FieldElem, var: usize, k: i64) -> Self {
        let one = like.one_like();
        let m = Poly::monomial(one.clone(), k.unsigned_abs() as usize);
        if k >= 0 {
            Self::finish(var, m, Poly::constant(one))
        } else {
            Self::finish(var, Poly::constant(one), m)
        }
    }

    /// Splits off the power of `var`: `self = var^v · u` with `u` a unit at
    /// `var = 0`; returns `v` and the value of `u` at `var = 0`.
    /// Elements not involving `var` have valuation zero.
    pub fn valuation_split(&self, var: usize) -> Result<(i64, FieldElem)> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        if self.level() <= var {
            return Ok((0, self.clone()));
        }
        let f = self.as_fun().expect("level above base");
        if f.var != var {
            return Err(Error::Unsupported(format!(
                "valuation at variable {var} of an element involving a higher variable"
            )));
        }
        let on = f.num.order();
        let od = f.den.order();
        let res = f.num.c[on].checked_div(&f.den.c[od])?;
        Ok((on as i64 - od as i64, res))
    }

    fn add_const(f: &RatFun, c: &FieldElem) -> FieldElem {
        if c.is_zero() {
            return FieldElem::Fun(Arc::new(f.clone()));
        }
        let num = f.num.add(&f.den.scale(c));
        FieldElem::Fun(Arc::new(RatFun { var: f.var, num, den: f.den.clone() }))
    }

    fn mul_const(f: &RatFun, c: &FieldElem) -> FieldElem {
        if c.is_zero() {
            return c.clone();
        }
        FieldElem::Fun(Arc::new(RatFun { var: f.var, num: f.num.scale(c), den: f.den.clone() }))
    }

    fn add_ref(a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x + y),
            (FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod(x.add(*y)),
            _ => {
                let (la, lb) = (a.level(), b.level());
                if la > lb {
                    Self::add_const(a.as_fun().unwrap(), b)
                } else if lb > la {
                    Self::add_const(b.as_fun().unwrap(), a)
                } else {
                    let (f, g) = match (a, b) {
                        (FieldElem::Fun(f), FieldElem::Fun(g)) => (f, g),
                        _ => panic!("mixing elements of different prime fields"),
                    };
                    if f.den == g.den {
                        if f.den.is_one() {
                            let n = f.num.add(&g.num);
                            if n.is_zero() {
                                return f.den.lead().zero_like();
                            }
                            return Self::finish(f.var, n, f.den.clone());
                        }
                        Self::from_polys(f.var, f.num.add(&g.num), f.den.clone()).unwrap()
                    } else {
                        // only a common factor of the denominators can cancel
                        let h = Poly::gcd(&f.den, &g.den);
                        if h.degree() == Some(0) {
                            let num = f.num.mul(&g.den).add(&g.num.mul(&f.den));
                            if num.is_zero() {
                                return f.den.lead().zero_like();
                            }
                            return Self::finish(f.var, num, f.den.mul(&g.den));
                        }
                        let (d1, d2) = (f.den.divrem(&h).0, g.den.divrem(&h).0);
                        let num = f.num.mul(&d2).add(&g.num.mul(&d1));
                        if num.is_zero() {
                            return f.den.lead().zero_like();
                        }
                        let h2 = Poly::gcd(&num, &h);
                        let (num, h) = if h2.degree() == Some(0) {
                            (num, h)
                        } else {
                            (num.divrem(&h2).0, h.divrem(&h2).0)
                        };
                        Self::finish(f.var, num, d1.mul(&d2).mul(&h))
                    }
                }
            }
        }
    }

    fn mul_ref(a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (a, b) {
            (FieldElem::Rat(x), FieldElem::Rat(y)) => FieldElem::Rat(x * y),
            (FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod(x.mul(*y)),
            _ => {
                let (la, lb) = (a.level(), b.level());
                if la > lb {
                    Self::mul_const(a.as_fun().unwrap(), b)
                } else if lb > la {
                    Self::mul_const(b.as_fun().unwrap(), a)
                } else {
                    let (f, g) = match (a, b) {
                        (FieldElem::Fun(f), FieldElem::Fun(g)) => (f, g),
                        _ => panic!("mixing elements of different prime fields"),
                    };
                    let g1 = Poly::gcd(&f.num, &g.den);
                    let g2 = Poly::gcd(&g.num, &f.den);
                    let div = |p: &Poly, d: &Poly| if d.is_one() { p.clone() } else { p.divrem(d).0 };
                    let num = div(&f.num, &g1).mul(&div(&g.num, &g2));
                    let den = div(&f.den, &g2).mul(&div(&g.den, &g1));
                    Self::finish(f.var, num, den)
                }
            }
        }
    }

    fn neg_ref(a: &FieldElem) -> FieldElem {
        match a {
            FieldElem::Rat(x) => FieldElem::Rat(-x),
            FieldElem::Mod(x) => FieldElem::Mod(x.neg()),
            FieldElem::Fun(f) => {
                FieldElem::Fun(Arc::new(RatFun { var: f.var, num: f.num.neg(), den: f.den.clone() }))
            }
        }
    }

    /// Sign of a rational element; `None` for non-rationals.
    pub fn rational_sign(&self) -> Option<i32> {
        self.as_rational().map(|r| {
            if r.is_zero() {
                0
            } else if r.is_positive() {
                1
            } else {
                -1
            }
        })
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem::add_ref(self, o)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem::add_ref(self, &FieldElem::neg_ref(o))
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        FieldElem::mul_ref(self, o)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg_ref(self)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, o: FieldElem) -> FieldElem {
        FieldElem::add_ref(&self, &o)
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, o: FieldElem) -> FieldElem {
        &self - &o
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, o: FieldElem) -> FieldElem {
        FieldElem::mul_ref(&self, &o)
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg_ref(&self)
    }
}
