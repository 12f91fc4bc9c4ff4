#![allow(dead_code)]

use std::sync::Arc;

use pfister::fields::{FieldElem, FieldTower};
use pfister::forms::{PfisterPres, QForm};
use pfister::sample;
use rand::Rng;

pub const ODD: [&str; 5] = ["Q", "reals", "gf(5)", "laurent(Q, x, y)", "laurent(gf(5), x, y)"];
pub const CHAR2: &str = "char2(x, y)";

pub fn tw(s: &str) -> Arc<FieldTower> {
    Arc::new(FieldTower::parse(s).unwrap())
}

pub fn nonzero_slot<R: Rng>(t: &FieldTower, rng: &mut R, height: i64) -> FieldElem {
    loop {
        let s = sample::slot(t, rng, height);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn random_pres<R: Rng>(t: &Arc<FieldTower>, rng: &mut R, fold: usize, k: usize) -> PfisterPres {
    let nb = fold - usize::from(t.is_char2());
    let b = (0..nb).map(|_| nonzero_slot(t, rng, 5)).collect();
    let a = t.is_char2().then(|| sample::slot(t, rng, 1));
    PfisterPres::new(t.clone(), b, a, k).unwrap()
}

pub fn random_diag<R: Rng>(t: &Arc<FieldTower>, rng: &mut R, n: usize) -> QForm {
    QForm::diag(t.clone(), (0..n).map(|_| nonzero_slot(t, rng, 7)).collect()).unwrap()
}

/// A Yes certificate must be a nonzero zero of the form.
pub fn assert_cert(f: &QForm, d: &pfister::oracles::Decision) {
    if let Some(v) = d.certificate() {
        assert!(v.iter().any(|x| !x.is_zero()), "zero certificate for {f}");
        assert!(f.eval(v).unwrap().is_zero(), "bad certificate for {f}");
    }
}
