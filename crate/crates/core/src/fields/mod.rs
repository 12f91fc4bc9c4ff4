//! Computable fields: a base field plus a stack of complete Laurent
//! extensions, with exact canonical elements.
//!
//! Laurent levels are answered with complete-field semantics: an element is
//! stored as a rational function, but squareness and square classes are those
//! of `K((x))`, decided from the valuation and the residue one level down.

mod elem;
pub mod gf2;
pub mod numtheory;
mod parse;
mod poly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

pub use elem::{FieldElem, ModP, RatFun};
pub use numtheory::Place;
pub use poly::Poly;

use crate::error::{Error, Result};
use numtheory::DEFAULT_FACTOR_BOUND;

pub const MAX_PRIME: u32 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseField {
    Rationals,
    /// The rationals with the ordering of the reals: squares are the positives.
    RealsOrdered,
    PrimeField(u32),
    /// The rational function field `F₂(vars)`.
    Char2Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldTower {
    base: BaseField,
    base_vars: Vec<String>,
    laurent_vars: Vec<String>,
    factor_bound: u64,
}

fn valid_ident(s: &str) -> bool {
    let mut ch = s.chars();
    matches!(ch.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && ch.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FieldTower {
    fn new(base: BaseField, base_vars: Vec<String>) -> Self {
        FieldTower { base, base_vars, laurent_vars: Vec::new(), factor_bound: DEFAULT_FACTOR_BOUND }
    }

    pub fn rationals() -> Self {
        Self::new(BaseField::Rationals, Vec::new())
    }

    pub fn reals() -> Self {
        Self::new(BaseField::RealsOrdered, Vec::new())
    }

    pub fn prime_field(p: u32) -> Result<Self> {
        if p == 2 || p > MAX_PRIME || !numtheory::is_prime(p as u64) {
            return Err(Error::InvalidTower(format!("PrimeField needs an odd prime <= {MAX_PRIME}, got {p}")));
        }
        Ok(Self::new(BaseField::PrimeField(p), Vec::new()))
    }

    pub fn char2_rational<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        let mut t = Self::new(BaseField::Char2Rational, Vec::new());
        for v in vars {
            t.push_var(v.as_ref())?;
            let name = t.laurent_vars.pop().unwrap();
            t.base_vars.push(name);
        }
        Ok(t)
    }

    fn push_var(&mut self, name: &str) -> Result<()> {
        if !valid_ident(name) {
            return Err(Error::InvalidTower(format!("bad variable name {name:?}")));
        }
        if self.var_index(name).is_some() {
            return Err(Error::InvalidTower(format!("variable {name} declared twice")));
        }
        self.laurent_vars.push(name.to_string());
        Ok(())
    }

    /// Adjoins a complete Laurent variable on top of the tower.
    pub fn laurent(&self, name: &str) -> Result<Self> {
        let mut t = self.clone();
        t.push_var(name)?;
        Ok(t)
    }

    pub fn with_factor_bound(mut self, bound: u64) -> Self {
        self.factor_bound = bound.max(2);
        self
    }

    pub fn factor_bound(&self) -> u64 {
        self.factor_bound
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn characteristic(&self) -> u32 {
        match self.base {
            BaseField::Rationals | BaseField::RealsOrdered => 0,
            BaseField::PrimeField(p) => p,
            BaseField::Char2Rational => 2,
        }
    }

    pub fn is_char2(&self) -> bool {
        self.characteristic() == 2
    }

    pub fn minus_one_square(&self) -> bool {
        match self.base {
            BaseField::Rationals | BaseField::RealsOrdered => false,
            BaseField::PrimeField(p) => p % 4 == 1,
            BaseField::Char2Rational => true,
        }
    }

    /// Laurent levels sitting over a characteristic-2 base.
    pub fn residue_char_2(&self) -> bool {
        self.is_char2() && !self.laurent_vars.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.base_vars.len() + self.laurent_vars.len()
    }

    pub fn num_base_vars(&self) -> usize {
        self.base_vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        if i < self.base_vars.len() {
            &self.base_vars[i]
        } else {
            &self.laurent_vars[i - self.base_vars.len()]
        }
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        (0..self.num_vars()).find(|&i| self.var_name(i) == name)
    }

    pub fn is_laurent(&self, var: usize) -> bool {
        var >= self.base_vars.len()
    }

    pub fn laurent_vars(&self) -> &[String] {
        &self.laurent_vars
    }

    /// Index of the outermost Laurent variable.
    pub fn outermost_laurent(&self) -> Option<usize> {
        (!self.laurent_vars.is_empty()).then(|| self.num_vars() - 1)
    }

    /// The tower with its outermost Laurent level removed.
    pub fn residue_tower(&self) -> Option<FieldTower> {
        let mut t = self.clone();
        t.laurent_vars.pop().map(|_| t)
    }

    pub fn zero(&self) -> FieldElem {
        self.int(0)
    }

    pub fn one(&self) -> FieldElem {
        self.int(1)
    }

    pub fn int(&self, n: i64) -> FieldElem {
        match self.base {
            BaseField::Rationals | BaseField::RealsOrdered => FieldElem::rational(n, 1),
            BaseField::PrimeField(p) => FieldElem::modp(n, p),
            BaseField::Char2Rational => FieldElem::modp(n, 2),
        }
    }

    pub fn fraction(&self, n: i64, d: i64) -> Result<FieldElem> {
        self.int(n).checked_div(&self.int(d))
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElem> {
        match self.base {
            BaseField::Rationals | BaseField::RealsOrdered => Ok(FieldElem::Rat(r.clone())),
            _ => {
                let p = self.characteristic() as i64;
                let red = |b: &BigInt| -> i64 {
                    let m = b % BigInt::from(p);
                    numtheory::to_i128(&m).unwrap() as i64
                };
                self.int(red(r.numer())).checked_div(&self.int(red(r.denom())))
            }
        }
    }

    pub fn var(&self, i: usize) -> FieldElem {
        FieldElem::var_power(&self.one(), i, 1)
    }

    pub fn var_named(&self, name: &str) -> Option<FieldElem> {
        self.var_index(name).map(|i| self.var(i))
    }

    /// Whether `e` is an element of this tower.
    pub fn contains(&self, e: &FieldElem) -> bool {
        if e.level() > self.num_vars() {
            return false;
        }
        let p = e.characteristic();
        p == self.characteristic() && self.base_kind_matches(e)
    }

    fn base_kind_matches(&self, e: &FieldElem) -> bool {
        match (&self.base, e.zero_like()) {
            (BaseField::Rationals | BaseField::RealsOrdered, FieldElem::Rat(_)) => true,
            (BaseField::PrimeField(p), FieldElem::Mod(m)) => m.modulus() == *p,
            (BaseField::Char2Rational, FieldElem::Mod(m)) => m.modulus() == 2,
            _ => false,
        }
    }

    pub fn check(&self, e: &FieldElem) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::TowerMismatch)
        }
    }

    /// Parses an element from the text grammar (integers, variables,
    /// `+ - * / ^`, parentheses).
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        parse::parse_elem(self, s)
    }

    /// Canonical text form; reparses to the same element.
    pub fn fmt_elem(&self, e: &FieldElem) -> String {
        parse::fmt_elem(self, e)
    }

    /// Valuation at the outermost Laurent variable and the residue one level down.
    pub fn valuation_split(&self, e: &FieldElem) -> Result<(i64, FieldElem)> {
        let var = self
            .outermost_laurent()
            .ok_or_else(|| Error::Unsupported("valuation on a tower without Laurent levels".into()))?;
        e.valuation_split(var)
    }

    pub fn is_square(&self, e: &FieldElem) -> Result<bool> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.check(e)?;
        self.is_square_at(e, self.num_vars())
    }

    fn is_square_at(&self, e: &FieldElem, nvars: usize) -> Result<bool> {
        if nvars == 0 {
            return Ok(self.base_is_square(e));
        }
        let v = nvars - 1;
        if self.is_laurent(v) {
            if self.is_char2() {
                return Err(Error::ResidueChar2);
            }
            let (val, res) = e.valuation_split(v)?;
            Ok(val % 2 == 0 && self.is_square_at(&res, v)?)
        } else if e.level() <= v {
            self.is_square_at(e, v)
        } else {
            let f = e.as_fun().expect("level above base");
            Ok(self.poly_is_square(&f.num, v)? && self.poly_is_square(&f.den, v)?)
        }
    }

    // characteristic 2: a polynomial is a square iff its odd coefficients
    // vanish and its even coefficients are squares
    fn poly_is_square(&self, p: &Poly, v: usize) -> Result<bool> {
        for (i, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i % 2 == 1 || !self.is_square_at(c, v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn base_is_square(&self, e: &FieldElem) -> bool {
        match (&self.base, e) {
            (BaseField::Rationals, FieldElem::Rat(r)) => {
                r.is_positive()
                    && numtheory::is_perfect_square_big(r.numer())
                    && numtheory::is_perfect_square_big(r.denom())
            }
            (BaseField::RealsOrdered, FieldElem::Rat(r)) => r.is_positive(),
            (BaseField::PrimeField(p), FieldElem::Mod(m)) => m.pow((*p as u64 - 1) / 2).value() == 1,
            (BaseField::Char2Rational, FieldElem::Mod(_)) => true,
            _ => unreachable!("element checked against tower"),
        }
    }

    /// Least quadratic nonresidue of the prime base field.
    pub fn nonsquare_rep(&self) -> Option<FieldElem> {
        match self.base {
            BaseField::PrimeField(p) => {
                (2..p as i64).map(|a| self.int(a)).find(|a| !self.base_is_square(a))
            }
            BaseField::Rationals | BaseField::RealsOrdered => Some(self.int(-1)),
            BaseField::Char2Rational => None,
        }
    }

    /// Canonical representative of `e · K^×²`.
    pub fn square_class_rep(&self, e: &FieldElem) -> Result<FieldElem> {
        if e.is_zero() {
            return Err(Error::ZeroElement);
        }
        self.check(e)?;
        self.square_class_at(e, self.num_vars())
    }

    fn square_class_at(&self, e: &FieldElem, nvars: usize) -> Result<FieldElem> {
        if nvars == 0 {
            return self.base_square_class(e);
        }
        let v = nvars - 1;
        if self.is_laurent(v) {
            if self.is_char2() {
                return Err(Error::ResidueChar2);
            }
            let (val, res) = e.valuation_split(v)?;
            let r = self.square_class_at(&res, v)?;
            if val.rem_euclid(2) == 1 {
                Ok(&FieldElem::var_power(&self.one(), v, 1) * &r)
            } else {
                Ok(r)
            }
        } else if e.level() <= v {
            self.square_class_at(e, v)
        } else if self.is_square_at(e, nvars)? {
            Ok(self.one())
        } else {
            Err(Error::Unsupported("square classes of F2(x,...) beyond squares".into()))
        }
    }

    fn base_square_class(&self, e: &FieldElem) -> Result<FieldElem> {
        match (&self.base, e) {
            (BaseField::Rationals, FieldElem::Rat(r)) => {
                let n = numtheory::to_i128(&(r.numer() * r.denom()))?;
                Ok(FieldElem::Rat(BigRational::from_integer(BigInt::from(numtheory::squarefree_part(
                    n,
                    self.factor_bound,
                )?))))
            }
            (BaseField::RealsOrdered, FieldElem::Rat(r)) => Ok(self.int(if r.is_positive() { 1 } else { -1 })),
            (BaseField::PrimeField(_), _) => {
                if self.base_is_square(e) {
                    Ok(self.one())
                } else {
                    Ok(self.nonsquare_rep().unwrap())
                }
            }
            (BaseField::Char2Rational, _) => Ok(self.one()),
            _ => unreachable!("element checked against tower"),
        }
    }

    /// Hilbert symbol of two nonzero rationals at a place.
    pub fn hilbert_symbol(&self, a: &FieldElem, b: &FieldElem, place: Place) -> Result<i32> {
        let to_int = |x: &FieldElem| -> Result<i128> {
            let r = x.as_rational().ok_or_else(|| Error::Unsupported("Hilbert symbol needs rationals".into()))?;
            if x.is_zero() {
                return Err(Error::ZeroElement);
            }
            numtheory::to_i128(&(r.numer() * r.denom()))
        };
        if let Place::FinitePrime(p) = place {
            if !numtheory::is_prime(p) {
                return Err(Error::Unsupported(format!("{p} is not prime")));
            }
        }
        Ok(numtheory::hilbert_int(to_int(a)?, to_int(b)?, place))
    }

    /// Parses a tower description such as `Q`, `reals`, `gf(5)`,
    /// `char2(x, y)` or `laurent(Q, x, y)`.
    pub fn parse(s: &str) -> Result<FieldTower> {
        parse::parse_tower(s)
    }
}

impl fmt::Display for FieldTower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            BaseField::Rationals => "Q".to_string(),
            BaseField::RealsOrdered => "reals".to_string(),
            BaseField::PrimeField(p) => format!("gf({p})"),
            BaseField::Char2Rational => format!("char2({})", self.base_vars.join(", ")),
        };
        if self.laurent_vars.is_empty() {
            write!(f, "{base}")
        } else {
            write!(f, "laurent({base}, {})", self.laurent_vars.join(", "))
        }
    }
}

#[cfg(test)]
mod tests;
