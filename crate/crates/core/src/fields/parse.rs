use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{FieldElem, FieldTower, Poly};
use crate::error::{Error, Result};

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected '{}'", c as char))
        }
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                self.pos += 1;
            }
            Some(std::str::from_utf8(&self.s[start..self.pos]).unwrap())
        } else {
            None
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap())
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

struct ElemParser<'a, 't> {
    lx: Lexer<'a>,
    tower: &'t FieldTower,
}

impl ElemParser<'_, '_> {
    fn expr(&mut self) -> Result<FieldElem> {
        let mut acc = self.term()?;
        loop {
            if self.lx.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.lx.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElem> {
        let mut acc = self.unary()?;
        loop {
            if self.lx.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.lx.eat(b'/') {
                let pos = self.lx.pos;
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|_| Error::Parse { pos, msg: "division by zero".into() })?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElem> {
        if self.lx.eat(b'-') {
            Ok(-&self.unary()?)
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<FieldElem> {
        let base = self.atom()?;
        if self.lx.eat(b'^') {
            let neg = self.lx.eat(b'-');
            let pos = self.lx.pos;
            let Some(n) = self.lx.number() else {
                return self.lx.err("expected integer exponent");
            };
            let n: i64 = n.try_into().map_err(|_| Error::Parse { pos, msg: "exponent too large".into() })?;
            let e = if neg { -n } else { n };
            base.pow(e).map_err(|_| Error::Parse { pos, msg: "negative power of zero".into() })
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<FieldElem> {
        if self.lx.eat(b'(') {
            let e = self.expr()?;
            self.lx.expect(b')')?;
            return Ok(e);
        }
        let pos = self.lx.pos;
        if let Some(n) = self.lx.number() {
            return self.tower.from_rational(&BigRational::from_integer(n));
        }
        if let Some(id) = self.lx.ident() {
            return self
                .tower
                .var_named(id)
                .ok_or(Error::Parse { pos, msg: format!("unknown variable {id} in field {}", self.tower) });
        }
        self.lx.err("expected number, variable or '('")
    }
}

pub(super) fn parse_elem(tower: &FieldTower, s: &str) -> Result<FieldElem> {
    let mut p = ElemParser { lx: Lexer::new(s), tower };
    let e = p.expr()?;
    if !p.lx.at_end() {
        return p.lx.err("unexpected trailing input");
    }
    Ok(e)
}

pub(super) fn fmt_elem(tower: &FieldTower, e: &FieldElem) -> String {
    match e {
        FieldElem::Rat(r) => {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        FieldElem::Mod(m) => m.value().to_string(),
        FieldElem::Fun(f) => {
            let n = fmt_poly(tower, &f.num, f.var);
            if f.den.is_one() {
                n
            } else {
                format!("({})/({})", n, fmt_poly(tower, &f.den, f.var))
            }
        }
    }
}

fn fmt_poly(tower: &FieldTower, p: &Poly, var: usize) -> String {
    let name = tower.var_name(var);
    let mut terms = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        if k == 0 {
            terms.push(fmt_elem(tower, c));
            continue;
        }
        let mon = if k == 1 { name.to_string() } else { format!("{name}^{k}") };
        if c.is_one() {
            terms.push(mon);
        } else if c.characteristic() == 0 && (-c).is_one() {
            terms.push(format!("-{mon}"));
        } else {
            let cs = fmt_elem(tower, c);
            if cs.contains(' ') || cs.contains('/') {
                terms.push(format!("({cs})*{mon}"));
            } else {
                terms.push(format!("{cs}*{mon}"));
            }
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

pub(super) fn parse_tower(s: &str) -> Result<FieldTower> {
    let mut lx = Lexer::new(s);
    let t = tower_expr(&mut lx)?;
    if !lx.at_end() {
        return lx.err("unexpected trailing input after field");
    }
    Ok(t)
}

fn ident_list(lx: &mut Lexer) -> Result<Vec<String>> {
    let mut v = Vec::new();
    loop {
        match lx.ident() {
            Some(id) => v.push(id.to_string()),
            None => return lx.err("expected variable name"),
        }
        if !lx.eat(b',') {
            return Ok(v);
        }
    }
}

fn tower_expr(lx: &mut Lexer) -> Result<FieldTower> {
    let pos = lx.pos;
    let Some(id) = lx.ident() else {
        return lx.err("expected field");
    };
    match id {
        "Q" | "rationals" => Ok(FieldTower::rationals()),
        "R" | "reals" => Ok(FieldTower::reals()),
        "gf" => {
            lx.expect(b'(')?;
            let n = lx.number().ok_or(Error::Parse { pos: lx.pos, msg: "expected prime".into() })?;
            lx.expect(b')')?;
            let p: u32 = n.try_into().map_err(|_| Error::Parse { pos, msg: "prime too large".into() })?;
            FieldTower::prime_field(p)
        }
        "char2" => {
            lx.expect(b'(')?;
            let vars = ident_list(lx)?;
            lx.expect(b')')?;
            FieldTower::char2_rational(&vars)
        }
        "laurent" => {
            lx.expect(b'(')?;
            let mut t = tower_expr(lx)?;
            lx.expect(b',')?;
            for v in ident_list(lx)? {
                t = t.laurent(&v)?;
            }
            lx.expect(b')')?;
            Ok(t)
        }
        other => {
            if let Some(p) = other.strip_prefix('F').and_then(|r| r.parse::<u32>().ok()) {
                return FieldTower::prime_field(p);
            }
            Err(Error::Parse { pos, msg: format!("unknown field {other}") })
        }
    }
}
