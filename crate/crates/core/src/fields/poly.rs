//! Dense univariate polynomials whose coefficients are field elements of the
//! level directly below the polynomial's variable.

use super::elem::FieldElem;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    // low degree first, no trailing zeros; the zero polynomial is empty
    pub(crate) c: Vec<FieldElem>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn from_coeffs(c: Vec<FieldElem>) -> Self {
        let mut p = Poly { c };
        p.trim();
        p
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `x^k` with coefficient `c`.
    pub fn monomial(c: FieldElem, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![c.zero_like(); k];
        v.push(c);
        Poly { c: v }
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|x| x.is_zero()) {
            self.c.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.c
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> &FieldElem {
        self.c.last().expect("leading coefficient of zero polynomial")
    }

    /// Index of the lowest nonzero coefficient.
    pub fn order(&self) -> usize {
        self.c.iter().position(|x| !x.is_zero()).expect("order of zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Option<&FieldElem> {
        self.c.get(i)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (i, x) in short.c.iter().enumerate() {
            c[i] = &c[i] + x;
        }
        Poly::from_coeffs(c)
    }

    pub fn neg(&self) -> Poly {
        Poly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &FieldElem) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly { c: self.c.iter().map(|x| x * s).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut acc: Vec<Option<FieldElem>> = vec![None; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let t = a * b;
                acc[i + j] = Some(match acc[i + j].take() {
                    Some(s) => &s + &t,
                    None => t,
                });
            }
        }
        let z = self.c[0].zero_like();
        Poly::from_coeffs(acc.into_iter().map(|x| x.unwrap_or_else(|| z.clone())).collect())
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.lead().inv().expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q: Vec<Option<FieldElem>> = Vec::new();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let coef = r.lead() * &inv;
            let shift = rd - dd;
            if q.len() <= shift {
                q.resize(shift + 1, None);
            }
            let mut sub = vec![coef.zero_like(); shift];
            sub.extend(d.c.iter().map(|x| x * &coef));
            let mut nc = r.c.clone();
            for (i, s) in sub.iter().enumerate() {
                nc[i] = &nc[i] - s;
            }
            // exact arithmetic makes the leading term vanish
            nc.pop();
            r = Poly::from_coeffs(nc);
            q[shift] = Some(coef);
        }
        let quot = if q.is_empty() {
            Poly::zero()
        } else {
            let z = d.lead().zero_like();
            Poly::from_coeffs(q.into_iter().map(|x| x.unwrap_or_else(|| z.clone())).collect())
        };
        (quot, r)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let inv = self.lead().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::constant(b.c[0].one_like());
            }
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }
}
