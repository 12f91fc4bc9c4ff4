mod common;

use common::*;
use pfister::fields::FieldElem;
use pfister::forms::PfisterPres;
use pfister::invariant::{generate_linked_pair, Profile};
use pfister::linkage::{apply_move, chain_step, extend_factor, omega_inseparable, omega_separable, Move};
use pfister::oracles::{is_isotropic, isometric, witt_index, SearchBudget};
use pfister::sample;
use proptest::prelude::*;
use rand::Rng;

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn random_move<R: Rng>(p: &PfisterPres, rng: &mut R) -> Move {
    let t = p.tower();
    let nb = p.bilinear_slots().len();
    let e = |rng: &mut R| sample::nonzero_elem(t, rng, 1, 4);
    loop {
        let pick = rng.gen_range(0..6);
        match pick {
            0 if nb >= 1 => return Move::SlotSquareScale(rng.gen_range(0..nb), e(rng)),
            1 if nb >= 2 => return Move::SlotSwap(rng.gen_range(0..nb - 1)),
            2 if nb >= 2 => return Move::PairTwist(rng.gen_range(0..nb - 1)),
            3 if nb >= 2 => return Move::NormScale(rng.gen_range(0..nb - 1), sample::elem(t, rng, 1, 4), e(rng)),
            4 if t.is_char2() => return Move::ArtinSchreierShift(sample::elem(t, rng, 1, 2)),
            5 if t.is_char2() && nb >= 1 => {
                return Move::Char2NormScale(rng.gen_range(0..nb), e(rng), sample::elem(t, rng, 1, 2))
            }
            _ => {}
        }
    }
}

fn move_soundness(tower: &str, seed: u64) -> Result<(), TestCaseError> {
    let t = tw(tower);
    let mut rng = sample::rng(seed);
    let fold = rng.gen_range(if t.is_char2() { 2 } else { 1 }..=3);
    let p = random_pres(&t, &mut rng, fold, 0);
    let m = random_move(&p, &mut rng);
    let Ok(q) = apply_move(&p, &m) else {
        return Ok(());
    };
    let b = if t.is_char2() { SearchBudget { max_candidates: 20_000, ..budget() } } else { budget() };
    let d = isometric(&p.expand().unwrap(), &q.expand().unwrap(), &b).unwrap();
    prop_assert!(!d.is_no(), "{:?} on {}", m, p);
    if !t.is_char2() {
        prop_assert!(d.is_yes());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn moves_preserve_the_form_q(seed in any::<u64>()) { move_soundness("Q", seed)?; }
    #[test]
    fn moves_preserve_the_form_reals(seed in any::<u64>()) { move_soundness("reals", seed)?; }
    #[test]
    fn moves_preserve_the_form_gf5(seed in any::<u64>()) { move_soundness("gf(5)", seed)?; }
    #[test]
    fn moves_preserve_the_form_laurent_q(seed in any::<u64>()) { move_soundness("laurent(Q, x, y)", seed)?; }
    #[test]
    fn moves_preserve_the_form_laurent_gf5(seed in any::<u64>()) { move_soundness("laurent(gf(5), x, y)", seed)?; }
    #[test]
    fn moves_preserve_the_form_char2(seed in any::<u64>()) { move_soundness(CHAR2, seed)?; }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn separable_witness_matches_witt_index(ti in 0usize..2, seed in any::<u64>()) {
        let t = tw(["Q", "laurent(Q, x, y)"][ti]);
        let mut rng = sample::rng(seed);
        let k = rng.gen_range(1..=2);
        let mut p = Profile::new(t, vec![k + rng.gen_range(1..=2), k + rng.gen_range(1..=2)], k);
        p.height = 20;
        let inst = generate_linked_pair(seed, &p).unwrap();
        let ps = inst.presentations();
        let omega = omega_separable(&ps[0], &ps[1], k).unwrap();
        let d = is_isotropic(&omega, &budget()).unwrap();
        assert_cert(&omega, &d);
        let sum = ps[0].expand().unwrap().orth_sum(&ps[1].expand().unwrap().negate().unwrap()).unwrap();
        let w = witt_index(&sum, &budget()).unwrap();
        prop_assert!(w.exact);
        prop_assert_eq!(d.is_yes(), w.witt_index >= 1 << (k + 1));
    }

    #[test]
    fn inseparable_witness_dimension(seed in any::<u64>()) {
        let t = tw(CHAR2);
        let mut rng = sample::rng(seed);
        let k = rng.gen_range(1..=3);
        let (m, n) = (rng.gen_range(0..=3), rng.gen_range(0..=3));
        let inst = generate_linked_pair(seed, &Profile::new(t, vec![m + k, n + k], k)).unwrap();
        let ps = inst.presentations();
        let w = omega_inseparable(&ps[0], &ps[1], k).unwrap();
        prop_assert_eq!(w.dim(), (1 << (m + k)) + (1 << (n + k)) - (1 << (k + 1)) + 1);
    }

    #[test]
    fn chain_step_completes_the_factor(seed in any::<u64>()) {
        let t = tw("Q");
        let mut rng = sample::rng(seed);
        let psi = random_pres(&t, &mut rng, 2, 0);
        let e = |i: usize| (0..4).map(|j| t.int(i64::from(i == j))).collect::<Vec<FieldElem>>();
        let s = chain_step(&psi.expand().unwrap().gram(), &[e(0), e(1)], &[e(0), e(2)], &budget()).unwrap();
        let a = PfisterPres::diagonal(&t, vec![psi.bilinear_slots()[0].clone()], 0).unwrap();
        let enlarged = extend_factor(&a, &s.gamma).unwrap();
        prop_assert!(isometric(&enlarged.expand().unwrap(), &psi.expand().unwrap(), &budget()).unwrap().is_yes());
    }
}
