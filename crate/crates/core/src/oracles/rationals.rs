//! Rationals: isotropy by local invariants at 2, the primes dividing the
//! entries and the real place; the Witt index by the classification of forms
//! with given dimension, discriminant, Hasse invariants and signature;
//! certificates by height-increasing search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;

use crate::error::Result;
use crate::fields::numtheory::{self, hilbert_int, is_local_square, isqrt_exact, Place};
use crate::fields::{FieldElem, FieldTower};

fn ints(t: &FieldTower, entries: &[FieldElem]) -> Result<Vec<i128>> {
    entries
        .iter()
        .map(|e| {
            let r = e.as_rational().expect("rational entry");
            numtheory::squarefree_part(numtheory::to_i128(&(r.numer() * r.denom()))?, t.factor_bound())
        })
        .collect()
}

/// Squarefree part of `a·b` for squarefree `a`, `b`.
fn sqf_mul(a: i128, b: i128) -> i128 {
    let g = a.unsigned_abs().gcd(&b.unsigned_abs()) as i128;
    (a / g) * (b / g)
}

fn places(a: &[i128], bound: u64) -> Result<Vec<Place>> {
    let mut ps = vec![2u64];
    for &x in a {
        ps.extend(numtheory::prime_divisors(x, bound)?);
    }
    ps.sort_unstable();
    ps.dedup();
    let mut out = vec![Place::RealPlace];
    out.extend(ps.into_iter().map(Place::FinitePrime));
    Ok(out)
}

fn disc(a: &[i128]) -> i128 {
    a.iter().fold(1, |d, &x| sqf_mul(d, x))
}

fn hasse(a: &[i128], v: Place) -> i32 {
    let mut e = 1;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            e *= hilbert_int(a[i], a[j], v);
        }
    }
    e
}

pub(super) fn isotropic_ints(a: &[i128], bound: u64) -> Result<bool> {
    let n = a.len();
    let pos = a.iter().filter(|&&x| x > 0).count();
    if n <= 1 || pos == 0 || pos == n {
        return Ok(false);
    }
    let d = disc(a);
    Ok(match n {
        2 => d == -1,
        3 => places(a, bound)?.into_iter().all(|v| hasse(a, v) == hilbert_int(-1, -d, v)),
        4 => places(a, bound)?
            .into_iter()
            .all(|v| !is_local_square(d, v) || hasse(a, v) == hilbert_int(-1, -1, v)),
        _ => true,
    })
}

/// Whether `f ≅ r·H ⊥ g` for some form `g`, from the invariants of `g`
/// obtained by peeling `r` hyperbolic planes: `d(H ⊥ h) = −d(h)` and
/// `ε(H ⊥ h) = ε(h)·(−1, d(h))`.
fn splits(a: &[i128], r: usize, vs: &[Place]) -> bool {
    let n = a.len();
    let pos = a.iter().filter(|&&x| x > 0).count();
    if pos < r || n - pos < r {
        return false;
    }
    let mut d = disc(a);
    let mut eps: Vec<i32> = vs.iter().map(|&v| hasse(a, v)).collect();
    for _ in 0..r {
        d = -d;
        for (e, &v) in eps.iter_mut().zip(vs) {
            *e *= hilbert_int(-1, d, v);
        }
    }
    match n - 2 * r {
        0 => d == 1 && eps.iter().all(|&e| e == 1),
        1 => eps.iter().all(|&e| e == 1),
        2 => vs.iter().zip(&eps).all(|(&v, &e)| e == 1 || !is_local_square(-d, v)),
        _ => true,
    }
}

pub(super) fn witt_ints(a: &[i128], bound: u64) -> Result<usize> {
    let vs = places(a, bound)?;
    let pos = a.iter().filter(|&&x| x > 0).count();
    let top = pos.min(a.len() - pos);
    Ok((0..=top).rev().find(|&r| splits(a, r, &vs)).unwrap_or(0))
}

pub(super) fn witt(t: &FieldTower, entries: &[FieldElem]) -> Result<usize> {
    witt_ints(&ints(t, entries)?, t.factor_bound())
}

pub(super) fn vector(t: &FieldTower, entries: &[FieldElem]) -> Result<Option<Vec<FieldElem>>> {
    let a = ints(t, entries)?;
    if !isotropic_ints(&a, t.factor_bound())? {
        return Ok(None);
    }
    let v = certificate(&a, t.factor_bound())?;
    let scale: Vec<BigRational> = entries
        .iter()
        .zip(&a)
        .map(|(e, &ai)| {
            // e = ai · s², so a zero of ⟨ai⟩ rescales by 1/s
            let r = e.as_rational().unwrap() / BigRational::from_integer(BigInt::from(ai));
            rational_sqrt(&r).expect("entry in the square class of its representative")
        })
        .collect();
    Ok(Some(v.into_iter().zip(scale).map(|(x, s)| FieldElem::Rat(x / s)).collect()))
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r <= &BigRational::from_integer(0.into()) {
        return None;
    }
    let (n, d) = (r.numer().sqrt(), r.denom().sqrt());
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

fn rat(n: i128) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A nonzero zero of `⟨a⟩` (squarefree entries), which must be isotropic.
fn certificate(a: &[i128], bound: u64) -> Result<Vec<BigRational>> {
    let n = a.len();
    let mut v = vec![rat(0); n];
    for i in 0..n {
        for j in i + 1..n {
            if let Some(r) = isqrt_exact(-a[i] * a[j]) {
                v[i] = rat(r);
                v[j] = rat(a[i]);
                return Ok(v);
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let sub = [a[i], a[j], a[k]];
                if isotropic_ints(&sub, bound)? {
                    let w = ternary(&sub);
                    v[i] = w[0].clone();
                    v[j] = w[1].clone();
                    v[k] = w[2].clone();
                    return Ok(v);
                }
            }
        }
    }
    let idx = if n >= 5 { indefinite_five(a) } else { (0..n).collect() };
    let sub: Vec<i128> = idx.iter().map(|&i| a[i]).collect();
    let w = split_search(&sub, bound)?;
    for (&i, x) in idx.iter().zip(w) {
        v[i] = x;
    }
    Ok(v)
}

/// Integer points `(x, y)` with `max(|x|, |y|) = h`, `x ≥ 0`.
fn shell(h: i128) -> impl Iterator<Item = (i128, i128)> {
    (0..=h).flat_map(move |x| (-h..=h).map(move |y| (x, y))).filter(move |&(x, y)| x.max(y.abs()) == h)
}

/// `a x² + b y² + c z² = 0` for an isotropic ternary form with squarefree
/// entries: search integer `(x, y)` with `−(a x² + b y²)·c` a square.
fn ternary(t: &[i128; 3]) -> [BigRational; 3] {
    let [a, b, c] = *t;
    for h in 1.. {
        for (x, y) in shell(h) {
            let nn = -(a * x * x + b * y * y);
            if nn == 0 {
                continue;
            }
            if let Some(s) = isqrt_exact(nn * c) {
                return [rat(x), rat(y), BigRational::new(BigInt::from(s), BigInt::from(c))];
            }
        }
    }
    unreachable!()
}

/// Five entries with both signs, the first two from the larger sign class,
/// so the last three still have both signs.
fn indefinite_five(a: &[i128]) -> Vec<usize> {
    let pos: Vec<usize> = (0..a.len()).filter(|&i| a[i] > 0).collect();
    let neg: Vec<usize> = (0..a.len()).filter(|&i| a[i] < 0).collect();
    let (big, small) = if pos.len() >= neg.len() { (pos, neg) } else { (neg, pos) };
    let ns = small.len().min(2);
    let mut out: Vec<usize> = big[..5 - ns].to_vec();
    out.extend_from_slice(&small[..ns]);
    out
}

/// Isotropic form of dimension 4 or 5 without isotropic binary or ternary
/// subforms: find `t = a₀x² + a₁y²` with `⟨t, a₂, …⟩` isotropic and recurse.
fn split_search(a: &[i128], bound: u64) -> Result<Vec<BigRational>> {
    for h in 1.. {
        for (x, y) in shell(h) {
            let t = a[0] * x * x + a[1] * y * y;
            if t == 0 {
                continue;
            }
            let tq = numtheory::squarefree_part(t, bound)?;
            let mut sub = vec![tq];
            sub.extend_from_slice(&a[2..]);
            if !isotropic_ints(&sub, bound)? {
                continue;
            }
            let w = certificate(&sub, bound)?;
            let s = isqrt_exact(t / tq).expect("t / sqf(t) is a square");
            // a₀(x w₀/s)² + a₁(y w₀/s)² = t w₀²/s² = tq w₀²
            let f = &w[0] / rat(s);
            let mut out = vec![&f * rat(x), &f * rat(y)];
            out.extend(w.into_iter().skip(1));
            return Ok(out);
        }
    }
    unreachable!()
}
