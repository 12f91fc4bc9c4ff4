//! Integer number theory over the rationals: trial-division factorization,
//! squarefree parts, Legendre and Hilbert symbols, local squares.

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

/// A place of the rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    RealPlace,
    FinitePrime(u64),
}

pub fn to_i128(n: &BigInt) -> Result<i128> {
    n.to_i128().ok_or_else(|| Error::FactorizationTooLarge(n.to_string()))
}

/// Prime factorization of `n > 0` by trial division. Fails when a cofactor
/// survives trial division up to `bound` and is not provably prime.
pub fn factorize(mut n: u128, bound: u64) -> Result<Vec<(u128, u32)>> {
    assert!(n > 0);
    let orig = n;
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if d > bound as u128 {
            return Err(Error::FactorizationTooLarge(orig.to_string()));
        }
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// Signed squarefree part: `n = sqf · s²`.
pub fn squarefree_part(n: i128, bound: u64) -> Result<i128> {
    if n == 0 {
        return Err(Error::ZeroElement);
    }
    let mut r: i128 = n.signum();
    for (p, e) in factorize(n.unsigned_abs(), bound)? {
        if e % 2 == 1 {
            r *= p as i128;
        }
    }
    Ok(r)
}

pub fn prime_divisors(n: i128, bound: u64) -> Result<Vec<u64>> {
    Ok(factorize(n.unsigned_abs(), bound)?.into_iter().map(|(p, _)| p as u64).collect())
}

pub fn is_perfect_square_big(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if n.is_zero() {
        return true;
    }
    let r = n.sqrt();
    &r * &r == *n
}

pub fn isqrt_exact(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).sqrt() as i128;
    (r * r == n).then_some(r)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Legendre symbol `(a/p)` for an odd prime `p`.
pub fn legendre(a: i128, p: u64) -> i32 {
    let m = p as i128;
    let r = a.rem_euclid(m) as u128;
    if r == 0 {
        return 0;
    }
    if pow_mod(r, (p as u128 - 1) / 2, p as u128) == 1 {
        1
    } else {
        -1
    }
}

fn split_p(mut a: i128, p: u64) -> (u32, i128) {
    let p = p as i128;
    let mut v = 0;
    while a % p == 0 {
        a /= p;
        v += 1;
    }
    (v, a)
}

/// Hilbert symbol `(a, b)_v` of nonzero integers.
pub fn hilbert_int(a: i128, b: i128, place: Place) -> i32 {
    assert!(a != 0 && b != 0);
    match place {
        Place::RealPlace => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::FinitePrime(2) => {
            let (alpha, u) = split_p(a, 2);
            let (beta, v) = split_p(b, 2);
            let um = u.rem_euclid(8);
            let vm = v.rem_euclid(8);
            let eps = |x: i128| ((x - 1) / 2) % 2;
            let omega = |x: i128| ((x * x - 1) / 8) % 2;
            let e = eps(um) * eps(vm) + alpha as i128 * omega(vm) + beta as i128 * omega(um);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::FinitePrime(p) => {
            let (alpha, u) = split_p(a, p);
            let (beta, v) = split_p(b, p);
            let eps = ((p - 1) / 2) % 2;
            let mut s = if (alpha as u64 * beta as u64 * eps) % 2 == 1 { -1 } else { 1 };
            if beta % 2 == 1 {
                s *= legendre(u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(v, p);
            }
            s
        }
    }
}

/// Whether the nonzero integer `a` is a square in the completion at `place`.
pub fn is_local_square(a: i128, place: Place) -> bool {
    assert!(a != 0);
    match place {
        Place::RealPlace => a > 0,
        Place::FinitePrime(2) => {
            let (v, u) = split_p(a, 2);
            v % 2 == 0 && u.rem_euclid(8) == 1
        }
        Place::FinitePrime(p) => {
            let (v, u) = split_p(a, p);
            v % 2 == 0 && legendre(u, p) == 1
        }
    }
}
