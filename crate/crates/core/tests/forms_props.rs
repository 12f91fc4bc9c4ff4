mod common;

use common::*;
use pfister::forms::{bilinear_pfister, tensor_bilinear, QForm};
use pfister::oracles::{is_hyperbolic, isometric, SearchBudget};
use pfister::sample;
use proptest::prelude::*;
use rand::Rng;

fn sorted(f: &QForm) -> Vec<String> {
    let mut v: Vec<String> = f.diagonal().iter().map(|e| f.tower().fmt_elem(e)).collect();
    v.sort();
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn expansion_dimension(ti in 0usize..6, seed in any::<u64>()) {
        let t = tw(if ti < 5 { ODD[ti] } else { CHAR2 });
        let mut rng = sample::rng(seed);
        let fold = rng.gen_range(1..=4);
        let p = random_pres(&t, &mut rng, fold, 0);
        prop_assert_eq!(p.expand().unwrap().dim(), 1 << fold);
    }

    #[test]
    fn theta_complements_the_shared_factor(ti in 0usize..6, seed in any::<u64>()) {
        let t = tw(if ti < 5 { ODD[ti] } else { CHAR2 });
        let mut rng = sample::rng(seed);
        let fold = rng.gen_range(2..=3);
        let k = rng.gen_range(1..fold);
        let p = random_pres(&t, &mut rng, fold, k);
        let rhs = p.pi().expand().unwrap().orth_sum(&p.theta_complement().unwrap()).unwrap();
        let d = isometric(&p.expand().unwrap(), &rhs, &SearchBudget::default()).unwrap();
        prop_assert!(!d.is_no());
        if !t.is_char2() {
            prop_assert!(d.is_yes());
        }
    }

    #[test]
    fn pure_part_plus_one_is_the_expansion(ti in 0usize..5, seed in any::<u64>()) {
        let t = tw(ODD[ti]);
        let mut rng = sample::rng(seed);
        let fold = rng.gen_range(1..=4);
        let p = random_pres(&t, &mut rng, fold, 0);
        let one = QForm::diag(t.clone(), vec![t.one()]).unwrap();
        let pure = tensor_bilinear(&bilinear_pfister(&t, p.bilinear_slots(), true), &one).unwrap();
        prop_assert_eq!(sorted(&pure.orth_sum(&one).unwrap()), sorted(&p.expand().unwrap()));
    }

    #[test]
    fn char2_double_is_hyperbolic(seed in any::<u64>()) {
        let t = tw(CHAR2);
        let mut rng = sample::rng(seed);
        let n = rng.gen_range(1..=2);
        let pairs = (0..n).map(|_| (nonzero_slot(&t, &mut rng, 1), sample::elem(&t, &mut rng, 1, 1))).collect();
        let f = QForm::char2(t.clone(), pairs, vec![]).unwrap();
        let d = is_hyperbolic(&f.orth_sum(&f).unwrap(), &SearchBudget::default()).unwrap();
        prop_assert!(d.is_yes(), "{} ⊥ itself: {}", f, d);
    }
}
