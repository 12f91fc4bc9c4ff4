//! Ordered reals and prime fields. Entries are square-class representatives.

use crate::fields::{FieldElem, FieldTower, ModP};

fn sign(e: &FieldElem) -> i32 {
    e.rational_sign().expect("rational entry")
}

pub(super) fn reals_vector(t: &FieldTower, entries: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let i = entries.iter().position(|e| sign(e) > 0)?;
    let j = entries.iter().position(|e| sign(e) < 0)?;
    let mut v = vec![t.zero(); entries.len()];
    v[i] = t.one();
    v[j] = t.one();
    Some(v)
}

pub(super) fn reals_witt(entries: &[FieldElem]) -> usize {
    let pos = entries.iter().filter(|e| sign(e) > 0).count();
    pos.min(entries.len() - pos)
}

fn modp(e: &FieldElem) -> ModP {
    match e {
        FieldElem::Mod(m) => *m,
        _ => panic!("prime field entry expected"),
    }
}

fn is_sq(a: ModP) -> bool {
    a.value() == 0 || a.pow((a.modulus() as u64 - 1) / 2).value() == 1
}

fn sqrt(a: ModP) -> Option<ModP> {
    let p = a.modulus();
    (0..p).map(|x| ModP::new(x as i64, p)).find(|x| x.mul(*x) == a)
}

pub(super) fn prime_vector(p: u32, entries: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let n = entries.len();
    let z = ModP::new(0, p);
    let mut v = vec![z; n];
    match n {
        0 | 1 => return None,
        2 => {
            let (a, b) = (modp(&entries[0]), modp(&entries[1]));
            // a x² + b = 0
            let x = sqrt(b.neg().mul(a.inv()?))?;
            v[0] = x;
            v[1] = ModP::new(1, p);
        }
        _ => {
            let (a, b, c) = (modp(&entries[0]), modp(&entries[1]), modp(&entries[2]));
            // a x² + b y² + c = 0 has a solution for some x
            let binv = b.inv()?;
            let (x, y) = (0..p).find_map(|x| {
                let x = ModP::new(x as i64, p);
                let r = a.mul(x).mul(x).add(c).neg().mul(binv);
                is_sq(r).then(|| (x, sqrt(r).unwrap()))
            })?;
            v[0] = x;
            v[1] = y;
            v[2] = ModP::new(1, p);
        }
    }
    Some(v.into_iter().map(FieldElem::Mod).collect())
}

pub(super) fn prime_witt(p: u32, entries: &[FieldElem]) -> usize {
    let n = entries.len();
    if n % 2 == 1 {
        return (n - 1) / 2;
    }
    if n == 0 {
        return 0;
    }
    let d = entries.iter().fold(ModP::new(1, p), |acc, e| acc.mul(modp(e)));
    let sign = if (n / 2) % 2 == 1 { ModP::new(-1, p) } else { ModP::new(1, p) };
    if is_sq(sign.mul(d)) {
        n / 2
    } else {
        n / 2 - 1
    }
}
