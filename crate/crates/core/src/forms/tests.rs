use std::sync::Arc;

use super::*;

fn q() -> Arc<FieldTower> {
    Arc::new(FieldTower::rationals())
}

fn c2() -> Arc<FieldTower> {
    Arc::new(FieldTower::parse("char2(x, y)").unwrap())
}

fn el(t: &FieldTower, s: &str) -> FieldElem {
    t.parse_elem(s).unwrap()
}

fn els(t: &FieldTower, s: &[&str]) -> Vec<FieldElem> {
    s.iter().map(|x| el(t, x)).collect()
}

#[test]
fn expand_two_fold() {
    let t = q();
    let p = PfisterPres::diagonal(&t, els(&t, &["2", "3"]), 0).unwrap();
    assert_eq!(p.expand().unwrap().diagonal(), els(&t, &["1", "-2", "-3", "6"]).as_slice());
    let one = PfisterPres::diagonal(&t, els(&t, &["1"]), 0).unwrap();
    assert_eq!(one.expand().unwrap().diagonal(), els(&t, &["1", "-1"]).as_slice());
    assert_eq!(p.dim(), 4);
}

#[test]
fn expand_char2() {
    let t = c2();
    let p = PfisterPres::quadratic(&t, els(&t, &["x"]), el(&t, "y"), 0).unwrap();
    let f = p.expand().unwrap();
    assert_eq!(f.pairs(), &[(t.one(), el(&t, "y")), (el(&t, "x"), el(&t, "y"))]);
    assert_eq!(f.dim(), 4);
    assert!(PfisterPres::diagonal(&t, els(&t, &["x"]), 0).is_err());
    assert!(PfisterPres::diagonal(&q(), els(&q(), &["0"]), 0).is_err());
}

#[test]
fn sums_and_tensors() {
    let t = q();
    let a = QForm::diag(t.clone(), els(&t, &["1"])).unwrap();
    let b = QForm::diag(t.clone(), els(&t, &["-1"])).unwrap();
    assert_eq!(a.orth_sum(&b).unwrap().diagonal(), els(&t, &["1", "-1"]).as_slice());
    assert_eq!(a.orth_sum(&QForm::empty(t.clone())).unwrap(), a);
    let u = QForm::diag(t.clone(), els(&t, &["1", "-3"])).unwrap();
    let ten = tensor_bilinear(&els(&t, &["1", "-2"]), &u).unwrap();
    assert_eq!(ten.diagonal(), els(&t, &["1", "-3", "-2", "6"]).as_slice());
    let c = tensor_bilinear(&els(&t, &["5"]), &a).unwrap();
    assert_eq!(c.diagonal(), els(&t, &["5"]).as_slice());

    let t2 = c2();
    let ay = QForm::char2(t2.clone(), vec![(t2.one(), el(&t2, "y"))], vec![]).unwrap();
    let s = tensor_bilinear(&els(&t2, &["1", "x"]), &ay).unwrap();
    assert_eq!(s, ay.orth_sum(&ay.scale(&el(&t2, "x")).unwrap()).unwrap());
    assert_eq!(ay.negate().unwrap(), ay);
    assert!(a.orth_sum(&ay).is_err());
}

#[test]
fn diagonal_entries_are_square_classes() {
    let t = Arc::new(FieldTower::parse("laurent(Q, x)").unwrap());
    let f = QForm::diag(t.clone(), els(&t, &["x^2*(1+x)", "18", "-x^3"])).unwrap();
    assert_eq!(f.diagonal(), els(&t, &["1", "2", "-x"]).as_slice());
    assert_eq!(f.negate().unwrap().diagonal(), els(&t, &["-1", "-2", "x"]).as_slice());
}

#[test]
fn theta_complements() {
    let t = q();
    let p = PfisterPres::diagonal(&t, els(&t, &["2", "3"]), 1).unwrap();
    assert_eq!(p.theta_complement().unwrap().diagonal(), els(&t, &["-2", "6"]).as_slice());
    let full = PfisterPres::diagonal(&t, els(&t, &["2", "3"]), 2).unwrap();
    assert_eq!(full.theta_complement().unwrap().dim(), 0);
    assert_eq!(p.with_shared_k(0).unwrap().theta_complement(), Err(Error::NoSharedFactor));

    let t2 = c2();
    let p2 = PfisterPres::quadratic(&t2, els(&t2, &["x"]), el(&t2, "y"), 1).unwrap();
    let th = p2.theta_complement().unwrap();
    assert_eq!(th.pairs(), &[(el(&t2, "x"), el(&t2, "y"))]);
    for (fold, k) in [(3usize, 1usize), (3, 2), (4, 2), (2, 2)] {
        let slots: Vec<FieldElem> = (0..fold).map(|i| t.int(i as i64 + 2)).collect();
        let p = PfisterPres::diagonal(&t, slots, k).unwrap();
        assert_eq!(p.theta_complement().unwrap().dim(), (1 << fold) - (1 << k));
        assert_eq!(p.pi().expand().unwrap().orth_sum(&p.theta_complement().unwrap()).unwrap().dim(), 1 << fold);
    }
}

#[test]
fn gram_examples() {
    let t = q();
    let g = QForm::diag(t.clone(), els(&t, &["1", "-5"])).unwrap().gram();
    assert_eq!(g.polar_matrix()[0][0], t.int(2));
    assert_eq!(g.polar_matrix()[1][1], t.int(-10));
    assert!(!g.is_degenerate());

    let t2 = c2();
    let y = el(&t2, "y");
    let g = QForm::char2(t2.clone(), vec![(t2.one(), y.clone())], vec![]).unwrap().gram();
    assert_eq!(g.polar_matrix(), &[vec![t2.zero(), t2.one()], vec![t2.one(), t2.zero()]]);
    // B(e1, e2) = ψ(e1 + e2) − ψ(e1) − ψ(e2)
    let sum = g.eval(&[t2.one(), t2.one()]);
    assert_eq!(&(&sum - &g.eval(&[t2.one(), t2.zero()])) - &g.eval(&[t2.zero(), t2.one()]), t2.one());
    let g = QForm::char2(t2.clone(), vec![], vec![t2.one()]).unwrap().gram();
    assert!(g.is_degenerate());
    assert_eq!(g.polar_matrix(), &[vec![t2.zero()]]);
}

#[test]
fn eval_matches_gram() {
    let t2 = c2();
    let f = QForm::char2(t2.clone(), vec![(el(&t2, "x"), el(&t2, "y+1"))], vec![el(&t2, "x*y")]).unwrap();
    let v = els(&t2, &["x", "1+y", "y"]);
    assert_eq!(f.eval(&v).unwrap(), f.gram().eval(&v));
    assert!(f.eval(&v[..2]).is_err());
}

#[test]
fn display() {
    let t = q();
    let p = PfisterPres::diagonal(&t, els(&t, &["2", "-3/4"]), 1).unwrap();
    assert_eq!(p.to_string(), "pf[2, -3/4 | 1]");
    assert_eq!(p.expand().unwrap().to_string(), "diag(1, -2, 3, -6)");
    let t2 = c2();
    let p = PfisterPres::quadratic(&t2, els(&t2, &["x"]), el(&t2, "y"), 1).unwrap();
    assert_eq!(p.to_string(), "pf[x ; y | 1]");
    let f = p.theta_complement().unwrap().orth_sum(&QForm::char2(t2.clone(), vec![], vec![t2.one()]).unwrap()).unwrap();
    assert_eq!(f.to_string(), "pairs((x, y)) + quasi(1)");
}
