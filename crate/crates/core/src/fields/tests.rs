use proptest::prelude::*;

use super::*;

fn q(n: i64, d: i64) -> FieldElem {
    FieldElem::rational(n, d)
}

#[test]
fn canonical_forms() {
    assert_eq!(q(6, 4), q(3, 2));
    let k = FieldTower::char2_rational(&["x", "y"]).unwrap();
    let e = k.parse_elem("(x^2+x)/x").unwrap();
    assert_eq!(e, k.parse_elem("x+1").unwrap());
    let l = FieldTower::rationals().laurent("x").unwrap();
    let e = l.parse_elem("(x^2-x)/x").unwrap();
    assert_eq!(e, l.parse_elem("x-1").unwrap());
    assert_eq!(l.fmt_elem(&e), "x + -1");
    assert_eq!(FieldTower::rationals().parse_elem("1/0").unwrap_err().to_string().contains("division"), true);
}

#[test]
fn sums_cancel_common_denominator_factors() {
    let l = FieldTower::rationals().laurent("x").unwrap();
    let p = |s: &str| l.parse_elem(s).unwrap();
    assert_eq!(&p("1/(x*(x+1))") + &p("1/(x*(x-1))"), p("2/(x^2-1)"));
    assert_eq!(&p("1/(x+1)") + &p("-1/(x+1)"), l.zero());
    assert_eq!(&p("x/(x+1)") + &p("1/(x+1)"), l.one());
}

#[test]
fn nested_sums_stay_small() {
    let t = FieldTower::parse("laurent(Q, x, y)").unwrap();
    let p = |s: &str| t.parse_elem(s).unwrap();
    let s = p("((4/3 - 2/3*x) - 1/12*y)/(-4/3 + y)");
    let u = p("((1 - 1/8*x)/(-1/3 + x) + ((-1/8*x)/(-1/3 + x))*y)/((1/2 + x)/(-1/3 + x) + y)");
    let s2 = &s * &s;
    let au2 = &p("5/4") * &(&u * &u);
    let start = std::time::Instant::now();
    let sum = &s2 + &au2;
    assert!(start.elapsed().as_secs() < 2);
    assert_eq!(&sum - &au2, s2);
}

#[test]
fn squares() {
    let qq = FieldTower::rationals();
    assert!(qq.is_square(&q(9, 4)).unwrap());
    assert!(!qq.is_square(&q(2, 1)).unwrap());
    let f5 = FieldTower::prime_field(5).unwrap();
    assert!(!f5.is_square(&f5.int(2)).unwrap());
    assert!(f5.is_square(&f5.int(-1)).unwrap());
    let l = qq.laurent("x").unwrap();
    assert!(l.is_square(&l.parse_elem("x^2*(1+x)").unwrap()).unwrap());
    assert!(!l.is_square(&l.parse_elem("x^3").unwrap()).unwrap());
    assert!(!l.is_square(&l.parse_elem("2*x^2").unwrap()).unwrap());
    assert_eq!(qq.is_square(&qq.zero()), Err(Error::ZeroElement));
    let c2 = FieldTower::char2_rational(&["x", "y"]).unwrap();
    assert!(c2.is_square(&c2.parse_elem("x^2 + y^4/x^2").unwrap()).unwrap());
    assert!(!c2.is_square(&c2.parse_elem("x^2 + y").unwrap()).unwrap());
}

#[test]
fn square_classes() {
    let qq = FieldTower::rationals();
    assert_eq!(qq.square_class_rep(&q(18, 1)).unwrap(), q(2, 1));
    assert_eq!(qq.square_class_rep(&q(-3, 4)).unwrap(), q(-3, 1));
    assert_eq!(qq.square_class_rep(&q(5, 3)).unwrap(), q(15, 1));
    let f5 = FieldTower::prime_field(5).unwrap();
    assert_eq!(f5.square_class_rep(&f5.int(-1)).unwrap(), f5.one());
    assert_eq!(f5.square_class_rep(&f5.int(3)).unwrap(), f5.int(2));
    let l = qq.laurent("x").unwrap();
    let e = l.parse_elem("x^3*(1+x)^2*4").unwrap();
    assert_eq!(l.square_class_rep(&e).unwrap(), l.var(0));
    let e = l.parse_elem("-12*x^4/(1-x)").unwrap();
    assert_eq!(l.square_class_rep(&e).unwrap(), q(-3, 1));
}

#[test]
fn valuations() {
    let l = FieldTower::rationals().laurent("x").unwrap();
    let p = |s: &str| l.parse_elem(s).unwrap();
    assert_eq!(l.valuation_split(&p("5*x")).unwrap(), (1, q(5, 1)));
    assert_eq!(l.valuation_split(&p("x^2+x^3")).unwrap(), (2, q(1, 1)));
    assert_eq!(l.valuation_split(&p("7")).unwrap(), (0, q(7, 1)));
    assert_eq!(l.valuation_split(&p("(3+x)/(2*x^2)")).unwrap(), (-2, q(3, 2)));
    assert_eq!(l.valuation_split(&l.zero()), Err(Error::ZeroElement));
}

#[test]
fn nested_laurent_residues() {
    let t = FieldTower::prime_field(5).unwrap().laurent("x").unwrap().laurent("y").unwrap();
    let e = t.parse_elem("x*y^3 + 2*y^4").unwrap();
    let (v, r) = t.valuation_split(&e).unwrap();
    assert_eq!(v, 3);
    let inner = t.residue_tower().unwrap();
    assert_eq!(r, inner.parse_elem("x").unwrap());
    assert_eq!(t.square_class_rep(&e).unwrap(), t.parse_elem("x*y").unwrap());
}

#[test]
fn hilbert_examples() {
    let qq = FieldTower::rationals();
    assert_eq!(qq.hilbert_symbol(&q(-1, 1), &q(-1, 1), Place::RealPlace).unwrap(), -1);
    assert_eq!(qq.hilbert_symbol(&q(-1, 1), &q(-1, 1), Place::FinitePrime(2)).unwrap(), -1);
    for b in [-7, -2, 3, 10] {
        for pl in [Place::RealPlace, Place::FinitePrime(2), Place::FinitePrime(3), Place::FinitePrime(7)] {
            assert_eq!(qq.hilbert_symbol(&q(1, 1), &q(b, 1), pl).unwrap(), 1);
        }
    }
    assert_eq!(qq.hilbert_symbol(&q(0, 1), &q(1, 1), Place::RealPlace), Err(Error::ZeroElement));
}

#[test]
fn tower_parse_and_flags() {
    for s in ["Q", "reals", "gf(5)", "char2(x, y)", "laurent(gf(5), x, y)", "laurent(Q, t)"] {
        assert_eq!(FieldTower::parse(s).unwrap().to_string(), s);
    }
    assert_eq!(FieldTower::parse("F13").unwrap(), FieldTower::prime_field(13).unwrap());
    assert!(FieldTower::parse("gf(4)").is_err());
    assert!(FieldTower::parse("laurent(Q, x, x)").is_err());
    assert!(FieldTower::parse("laurent(char2(x), x)").is_err());
    assert!(FieldTower::parse("gf(5)").unwrap().minus_one_square());
    assert!(!FieldTower::parse("gf(7)").unwrap().minus_one_square());
    assert!(!FieldTower::parse("laurent(Q, x)").unwrap().minus_one_square());
    assert!(FieldTower::parse("char2(x)").unwrap().minus_one_square());
    assert!(FieldTower::parse("laurent(char2(x), t)").unwrap().residue_char_2());
}

#[test]
fn print_parse_round_trip() {
    let t = FieldTower::parse("laurent(gf(7), x, y)").unwrap();
    for s in ["3*x^2 + -1", "(x + 1)/(y^2 + 3*x)", "x*y^-1", "6", "(2*y)/(x^2*y + 5)"] {
        let e = t.parse_elem(s).unwrap();
        assert_eq!(t.parse_elem(&t.fmt_elem(&e)).unwrap(), e, "{s}");
    }
    let c = FieldTower::parse("char2(x, y)").unwrap();
    let e = c.parse_elem("(x*y + y^3)/(x + 1)").unwrap();
    assert_eq!(c.parse_elem(&c.fmt_elem(&e)).unwrap(), e);
}

fn towers() -> Vec<FieldTower> {
    vec![
        FieldTower::rationals(),
        FieldTower::prime_field(5).unwrap(),
        FieldTower::parse("laurent(Q, x)").unwrap(),
        FieldTower::parse("laurent(gf(5), x, y)").unwrap(),
        FieldTower::parse("char2(x, y)").unwrap(),
    ]
}

fn nonzero(t: &FieldTower, seed: u64) -> FieldElem {
    let mut rng = crate::sample::rng(seed);
    crate::sample::nonzero_elem(t, &mut rng, 2, 9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(ti in 0usize..5, s in any::<u64>()) {
        let t = &towers()[ti];
        let mut rng = crate::sample::rng(s);
        let a = crate::sample::elem(t, &mut rng, 2, 9);
        let b = crate::sample::elem(t, &mut rng, 2, 9);
        let c = crate::sample::elem(t, &mut rng, 2, 9);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn squares_and_nonsquares(ti in 0usize..5, s in any::<u64>()) {
        let t = &towers()[ti];
        let e = nonzero(t, s);
        prop_assert!(t.is_square(&(&e * &e)).unwrap());
        if let Some(ns) = t.nonsquare_rep() {
            if t.characteristic() != 2 {
                prop_assert!(!t.is_square(&(&(&e * &e) * &ns)).unwrap());
            }
        }
    }

    #[test]
    fn square_class_invariant(ti in 0usize..4, s in any::<u64>()) {
        let t = &towers()[ti];
        let e = nonzero(t, s);
        let f = nonzero(t, s.wrapping_add(17));
        let ef2 = &e * &(&f * &f);
        prop_assert_eq!(t.square_class_rep(&ef2).unwrap(), t.square_class_rep(&e).unwrap());
        let r = t.square_class_rep(&e).unwrap();
        prop_assert!(t.is_square(&(&r * &e)).unwrap());
    }

    #[test]
    fn valuation_round_trip(s in any::<u64>()) {
        let t = FieldTower::parse("laurent(Q, x)").unwrap();
        let e = nonzero(&t, s);
        let (v, r) = t.valuation_split(&e).unwrap();
        let u = e.checked_div(&(&FieldElem::var_power(&t.one(), 0, v) * &r)).unwrap();
        let (uv, ur) = t.valuation_split(&u).unwrap();
        prop_assert_eq!(uv, 0);
        prop_assert!(ur.is_one());
    }
}

#[test]
fn hilbert_product_formula() {
    let grid = [1i128, -1, 2, -2, 5, -5, 7, -7, 10, -10];
    for &a in &grid {
        for &b in &grid {
            let mut primes = numtheory::prime_divisors(2 * a * b, 100).unwrap();
            primes.dedup();
            let prod: i32 = primes
                .iter()
                .map(|&p| numtheory::hilbert_int(a, b, Place::FinitePrime(p)))
                .product::<i32>()
                * numtheory::hilbert_int(a, b, Place::RealPlace);
            assert_eq!(prod, 1, "({a},{b})");
        }
    }
}
