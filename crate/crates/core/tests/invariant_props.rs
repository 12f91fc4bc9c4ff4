mod common;

use common::*;
use pfister::invariant::{generate_linked_pair, invariant_pair, invariant_tuple, LinkedTuple, Profile};
use pfister::oracles::{isometric, SearchBudget};
use pfister::sample;
use proptest::prelude::*;
use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn fold_arithmetic(ti in 0usize..6, seed in any::<u64>()) {
        let t = tw(if ti < 5 { ODD[ti] } else { CHAR2 });
        let mut rng = sample::rng(seed);
        let k = rng.gen_range(1..=2);
        let m = rng.gen_range(2..=4);
        let folds: Vec<usize> = (0..m).map(|_| k + rng.gen_range(0..=2)).collect();
        let tuple = generate_linked_pair(seed, &Profile::new(t, folds.clone(), k)).unwrap();
        let r = invariant_tuple(&tuple).unwrap();
        prop_assert_eq!(r.fold, folds.iter().sum::<usize>() - k * (m - 1));
        prop_assert_eq!(r.presentation.fold(), r.fold);
    }

    #[test]
    fn shared_factor_is_neutral(ti in 0usize..6, seed in any::<u64>()) {
        let t = tw(if ti < 5 { ODD[ti] } else { CHAR2 });
        let mut rng = sample::rng(seed);
        let k = rng.gen_range(1..=2);
        let tuple = generate_linked_pair(seed, &Profile::new(t, vec![k + rng.gen_range(0..=2), k], k)).unwrap();
        let ps = tuple.presentations();
        prop_assert_eq!(&invariant_pair(&ps[0], &ps[1], k).unwrap().presentation, &ps[0]);
        let pi = ps[0].pi();
        let triple = LinkedTuple::new(vec![pi.clone(), pi.clone(), pi.clone()], k).unwrap();
        prop_assert_eq!(invariant_tuple(&triple).unwrap().presentation, pi);
    }

    #[test]
    fn generation_is_deterministic(seed in any::<u64>()) {
        let p = Profile::new(tw("laurent(gf(5), x, y)"), vec![3, 2], 1);
        prop_assert_eq!(generate_linked_pair(seed, &p).unwrap(), generate_linked_pair(seed, &p).unwrap());
    }

    #[test]
    fn member_order_does_not_matter(ti in 0usize..5, seed in any::<u64>()) {
        let t = tw(ODD[ti]);
        let mut rng = sample::rng(seed);
        let k = rng.gen_range(1..=2);
        let folds = vec![k + rng.gen_range(0..=2), k + rng.gen_range(0..=2)];
        let tuple = generate_linked_pair(seed, &Profile::new(t, folds, k)).unwrap();
        let ps = tuple.presentations();
        let a = invariant_pair(&ps[0], &ps[1], k).unwrap().presentation.expand().unwrap();
        let b = invariant_pair(&ps[1], &ps[0], k).unwrap().presentation.expand().unwrap();
        prop_assert!(isometric(&a, &b, &SearchBudget::default()).unwrap().is_yes());
    }
}
