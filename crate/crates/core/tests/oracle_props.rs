mod common;

use common::*;
use pfister::forms::QForm;
use pfister::oracles::{
    is_isotropic, isometric, springer_split, witt_index, witt_index_by_splitting, Decision, SearchBudget,
};
use pfister::sample;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn certificates_are_zeros(ti in 0usize..6, seed in any::<u64>()) {
        let t = tw(if ti < 5 { ODD[ti] } else { CHAR2 });
        let mut rng = sample::rng(seed);
        let n: usize = rng.gen_range(1..=5);
        let f = if t.is_char2() {
            let pairs = (0..n.div_ceil(2)).map(|_| (nonzero_slot(&t, &mut rng, 1), sample::elem(&t, &mut rng, 1, 1))).collect();
            QForm::char2(t.clone(), pairs, vec![]).unwrap()
        } else {
            random_diag(&t, &mut rng, n)
        };
        let d = is_isotropic(&f, &budget()).unwrap();
        assert_cert(&f, &d);
        if !t.is_char2() {
            prop_assert!(!d.is_unknown());
        }
    }

    #[test]
    fn forms_with_a_hyperbolic_plane_are_isotropic(seed in any::<u64>()) {
        let t = tw("Q");
        let mut rng = sample::rng(seed);
        let c = nonzero_slot(&t, &mut rng, 50);
        let mut entries = vec![c.clone(), -&c];
        let extra = rng.gen_range(0..=3);
        entries.extend((0..extra).map(|_| nonzero_slot(&t, &mut rng, 50)));
        entries.shuffle(&mut rng);
        let f = QForm::diag(t, entries).unwrap();
        let d = is_isotropic(&f, &budget()).unwrap();
        prop_assert!(d.certificate().is_some());
        assert_cert(&f, &d);
    }

    #[test]
    fn springer_additivity_and_splitting(ti in 0usize..2, seed in any::<u64>()) {
        let t = tw(["laurent(Q, x, y)", "laurent(gf(5), x, y)"][ti]);
        let mut rng = sample::rng(seed);
        let n = rng.gen_range(1..=6);
        let f = random_diag(&t, &mut rng, n);
        let (q0, q1) = springer_split(&f).unwrap();
        prop_assert_eq!(q0.dim() + q1.dim(), f.dim());
        let w = |g: &QForm| if g.dim() == 0 { 0 } else { witt_index(g, &budget()).unwrap().witt_index };
        let total = witt_index(&f, &budget()).unwrap();
        prop_assert!(total.exact);
        prop_assert_eq!(total.witt_index, w(&q0) + w(&q1));
        let by_split = witt_index_by_splitting(&f, &budget()).unwrap();
        prop_assert_eq!(by_split.witt_index, total.witt_index);
    }

    #[test]
    fn pfister_forms_are_anisotropic_or_hyperbolic(ti in 0usize..5, seed in any::<u64>()) {
        let t = tw(ODD[ti]);
        let mut rng = sample::rng(seed);
        let fold = rng.gen_range(1..=4);
        let p = random_pres(&t, &mut rng, fold, 0);
        let w = witt_index(&p.expand().unwrap(), &budget()).unwrap();
        prop_assert!(w.exact);
        prop_assert!(w.witt_index == 0 || w.witt_index == 1 << (fold - 1), "{}: {}", p, w.witt_index);
    }

    #[test]
    fn isometry_is_an_equivalence(ti in 0usize..3, seed in any::<u64>()) {
        let t = tw(["Q", "gf(5)", "laurent(gf(5), x, y)"][ti]);
        let pool: Vec<_> = ["1", "-1", "2", "-2", "x", "-x", "3"]
            .iter()
            .filter_map(|s| t.parse_elem(s).ok())
            .collect();
        let mut rng = sample::rng(seed);
        let n = rng.gen_range(1..=3);
        let mut pick = || QForm::diag(t.clone(), (0..n).map(|_| pool.choose(&mut rng).unwrap().clone()).filter(|e| !e.is_zero()).collect()).unwrap();
        let (f, g, h) = (pick(), pick(), pick());
        if f.dim() != n || g.dim() != n || h.dim() != n {
            return Ok(());
        }
        let iso = |a: &QForm, b: &QForm| -> Decision { isometric(a, b, &budget()).unwrap() };
        prop_assert!(iso(&f, &f).is_yes());
        prop_assert_eq!(iso(&f, &g).is_yes(), iso(&g, &f).is_yes());
        if iso(&f, &g).is_yes() && iso(&g, &h).is_yes() {
            prop_assert!(iso(&f, &h).is_yes());
        }
    }
}
