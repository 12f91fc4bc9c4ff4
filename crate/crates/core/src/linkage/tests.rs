use std::sync::Arc;

use super::*;
use crate::fields::FieldTower;
use crate::oracles::isometric;

fn tw(s: &str) -> Arc<FieldTower> {
    Arc::new(FieldTower::parse(s).unwrap())
}

fn el(t: &FieldTower, s: &str) -> FieldElem {
    t.parse_elem(s).unwrap()
}

fn pf(t: &Arc<FieldTower>, s: &[&str], k: usize) -> PfisterPres {
    PfisterPres::diagonal(t, s.iter().map(|x| el(t, x)).collect(), k).unwrap()
}

fn pf2(t: &Arc<FieldTower>, b: &[&str], a: &str, k: usize) -> PfisterPres {
    PfisterPres::quadratic(t, b.iter().map(|x| el(t, x)).collect(), el(t, a), k).unwrap()
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn same(p: &PfisterPres, q: &PfisterPres) -> Decision {
    isometric(&p.expand().unwrap(), &q.expand().unwrap(), &budget()).unwrap()
}

#[test]
fn move_examples() {
    let q = tw("Q");
    let p = pf(&q, &["2", "3"], 0);
    let tw_ = apply_move(&p, &Move::PairTwist(0)).unwrap();
    assert_eq!(tw_, pf(&q, &["2", "-6"], 0));
    assert!(same(&p, &tw_).is_yes());
    let s = apply_move(&p, &Move::SlotSquareScale(0, q.int(3))).unwrap();
    assert_eq!(s, pf(&q, &["18", "3"], 0));
    let n = apply_move(&p, &Move::NormScale(0, q.int(1), q.int(1))).unwrap();
    assert_eq!(n, pf(&q, &["2", "-3"], 0));
    assert!(same(&p, &n).is_yes());
    assert!(matches!(
        apply_move(&pf(&q, &["4", "3"], 0), &Move::NormScale(0, q.int(2), q.int(1))),
        Err(Error::InvalidMoveParameter(_))
    ));
    assert!(matches!(apply_move(&p, &Move::SlotSquareScale(0, q.zero())), Err(Error::InvalidMoveParameter(_))));
    assert!(matches!(apply_move(&p, &Move::SlotSwap(1)), Err(Error::InvalidMoveParameter(_))));
    assert!(matches!(apply_move(&p, &Move::ArtinSchreierShift(q.one())), Err(Error::InvalidMoveParameter(_))));
}

#[test]
fn char2_move_examples() {
    let t = tw("char2(x, y)");
    let p = pf2(&t, &["y"], "x", 0);
    let s = apply_move(&p, &Move::ArtinSchreierShift(el(&t, "x"))).unwrap();
    assert_eq!(s.as_slot(), Some(&el(&t, "x^2")));
    assert!(same(&p, &s).is_yes());
    let n = apply_move(&p, &Move::Char2NormScale(0, t.one(), t.one())).unwrap();
    assert_eq!(n.bilinear_slots()[0], el(&t, "y*x"));
    assert!(same(&p, &n).is_yes());
    assert!(matches!(apply_move(&p, &Move::SlotSquareScale(1, t.one())), Err(Error::InvalidMoveParameter(_))));
}

#[test]
fn tuple_moves_respect_the_shared_block() {
    let q = tw("Q");
    let ps = vec![pf(&q, &["5", "2", "3"], 1), pf(&q, &["7", "3"], 1)];
    let twist = TupleMove { target: MoveTarget::Member(0), mv: Move::PairTwist(0) };
    let out = apply_tuple_move(&ps, 1, &twist).unwrap();
    assert_eq!(out[0], pf(&q, &["5", "-10", "3"], 1));
    assert_eq!(out[1], ps[1]);
    let reach = TupleMove { target: MoveTarget::Member(1), mv: Move::PairTwist(0) };
    assert!(matches!(apply_tuple_move(&ps, 1, &reach), Err(Error::InvalidMoveParameter(_))));
    let shared = TupleMove { target: MoveTarget::Shared, mv: Move::SlotSquareScale(0, q.int(2)) };
    let out = apply_tuple_move(&ps, 1, &shared).unwrap();
    assert_eq!(out[0].slots()[2], q.int(12));
    assert_eq!(out[1].slots()[1], q.int(12));
    check_shared(&out[0], &out[1], 1).unwrap();

    let t = tw("char2(x, y)");
    let ps = vec![pf2(&t, &["y"], "x", 1), pf2(&t, &["x", "y"], "x", 1)];
    let shift = TupleMove { target: MoveTarget::Shared, mv: Move::ArtinSchreierShift(el(&t, "y")) };
    let out = apply_tuple_move(&ps, 1, &shift).unwrap();
    check_shared(&out[0], &out[1], 1).unwrap();
    let member = TupleMove { target: MoveTarget::Member(0), mv: Move::ArtinSchreierShift(el(&t, "y")) };
    assert!(apply_tuple_move(&ps, 1, &member).is_err());
    let norm = TupleMove { target: MoveTarget::Member(1), mv: Move::Char2NormScale(1, t.one(), t.one()) };
    assert!(apply_tuple_move(&ps, 1, &norm).is_ok());
}

#[test]
fn inseparable_omega() {
    let t = tw("char2(x, y)");
    let p = pf2(&t, &["y"], "x", 1);
    let w = omega_inseparable(&p, &p, 1).unwrap();
    assert_eq!(w.dim(), 5);
    assert_eq!(w.quasilinear(), &[t.one()]);
    assert!(inseparably_k_linked(&p, &p, 1, &budget()).unwrap().linked.is_yes());
    let p3 = pf2(&t, &["x", "y"], "x", 1);
    assert_eq!(omega_inseparable(&p, &p3, 1).unwrap().dim(), 9);
    let other = pf2(&t, &["y"], "y", 1);
    assert!(matches!(omega_inseparable(&p, &other, 1), Err(Error::SharedSlotMismatch(_))));
    assert_eq!(omega_inseparable(&p, &p, 0).unwrap_err(), Error::NoSharedFactor);
    let q = tw("Q");
    assert!(matches!(
        omega_inseparable(&pf(&q, &["2", "3"], 1), &pf(&q, &["2", "3"], 1), 1),
        Err(Error::WrongCharacteristic(_))
    ));
}

#[test]
fn inseparable_search_on_distinct_bilinear_slots() {
    let t = tw("char2(x, y)");
    let v = inseparably_k_linked(&pf2(&t, &["x"], "y", 1), &pf2(&t, &["x + 1"], "y", 1), 1, &budget()).unwrap();
    assert!(!v.linked.is_no());
    if let Some(c) = v.linked.certificate() {
        assert!(v.omega.eval(c).unwrap().is_zero());
    }
}

#[test]
fn separable_omega() {
    let q = tw("Q");
    let p = pf(&q, &["2", "3"], 1);
    let w = omega_separable(&p, &p, 1).unwrap();
    assert_eq!(w.diagonal(), &[q.int(-2), q.int(6), q.int(2), q.int(-6)]);
    assert!(k_plus_one_linked(&p, &p, 1, &budget()).unwrap().linked.is_yes());

    let l = tw("laurent(Q, x, y)");
    let v = k_plus_one_linked(&pf(&l, &["x", "y"], 1), &pf(&l, &["2*x", "y"], 1), 1, &budget()).unwrap();
    assert!(v.linked.is_no());

    let r = tw("reals");
    let m = pf(&r, &["-1", "-1"], 1);
    assert!(k_plus_one_linked(&m, &m, 1, &budget()).unwrap().linked.is_yes());

    let t = tw("char2(x, y)");
    let c = pf2(&t, &["x"], "y", 1);
    let w = omega_separable(&c, &c, 1).unwrap();
    let th = c.theta_complement().unwrap();
    assert_eq!(w, th.orth_sum(&th).unwrap());
}

fn std_basis(n: usize, idx: &[usize]) -> Vec<Vec<FieldElem>> {
    idx.iter()
        .map(|&i| (0..n).map(|j| FieldElem::rational(i64::from(i == j), 1)).collect())
        .collect()
}

#[test]
fn chain_step_example() {
    let q = tw("Q");
    let p = pf(&q, &["2", "3"], 0);
    let psi = p.expand().unwrap().gram();
    let s = chain_step(&psi, &std_basis(4, &[0, 1]), &std_basis(4, &[0, 2]), &budget()).unwrap();
    assert_eq!(s.v, std_basis(4, &[3])[0]);
    assert_eq!(s.gamma, q.int(-6));
    let enlarged = extend_factor(&pf(&q, &["2"], 0), &s.gamma).unwrap();
    assert!(same(&enlarged, &p).is_yes());

    let same_space = chain_step(&psi, &std_basis(4, &[0, 1]), &std_basis(4, &[0, 1]), &budget()).unwrap();
    assert_eq!(same_space.gamma, -&psi.eval(&same_space.v));
    assert!(!same_space.gamma.is_zero());

    assert!(matches!(
        chain_step(&psi, &std_basis(4, &[0, 1]), &std_basis(4, &[0]), &budget()),
        Err(Error::DimensionMismatch(_))
    ));
    let hyp = pf(&q, &["1", "3"], 0).expand().unwrap().gram();
    assert!(chain_step(&hyp, &std_basis(4, &[0, 1]), &std_basis(4, &[0, 2]), &budget()).is_ok());
}

#[test]
fn chain_step_on_isotropic_complement() {
    // ⟨1, 1, 1, -1⟩ restricted to V1 = V2 = span(e1): complement ⟨1, 1, -1⟩
    let q = tw("Q");
    let f = QForm::diag(q.clone(), vec![q.int(1), q.int(1), q.int(1), q.int(-1)]).unwrap();
    let s = chain_step(&f.gram(), &std_basis(4, &[0]), &std_basis(4, &[0]), &budget()).unwrap();
    assert_eq!(s.v[0], q.zero());
    assert!(!s.gamma.is_zero());
}
