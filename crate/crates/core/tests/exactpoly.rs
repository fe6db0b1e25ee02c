use proptest::prelude::*;
use rational_landen::cli::parse_polynomial;
use rational_landen::exactpoly::{ExactScalar, Polynomial, RationalFunction};

fn scalar() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=6, -20i64..=20, 1i64..=6)
        .prop_map(|(a, b, c, d)| &ExactScalar::ratio(a, b) + &(&ExactScalar::ratio(c, d) * &ExactScalar::i()))
}

fn poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(scalar(), 0..=max_len).prop_map(Polynomial::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly(5), b in poly(5), c in poly(5)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn division_reconstructs(a in poly(8), b in nonzero_poly(4)) {
        let (q, r) = a.divmod(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_finds_planted_factors(f in nonzero_poly(3), g in nonzero_poly(3), h in nonzero_poly(3)) {
        let g1 = (&f * &g).gcd(&(&f * &h));
        // f divides the gcd, and the gcd divides both products
        prop_assert!(g1.divmod(&f).unwrap().1.is_zero());
        prop_assert!((&f * &g).divmod(&g1).unwrap().1.is_zero());
        prop_assert!((&f * &h).divmod(&g1).unwrap().1.is_zero());
        prop_assert!(g1.leading().unwrap().is_one());
    }

    #[test]
    fn reduced_functions_evaluate_like_the_originals(n in poly(5), d in nonzero_poly(5), x in -9i64..=9) {
        let r = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let x = ExactScalar::from_int(x);
        let dx = d.evaluate(&x);
        if !dx.is_zero() {
            prop_assert_eq!(r.evaluate(&x).unwrap(), &n.evaluate(&x) / &dx);
        }
    }

    #[test]
    fn parser_round_trips_real_polynomials(c in prop::collection::vec((-30i64..=30, 1i64..=7), 1..6)) {
        let p = Polynomial::new(c.iter().map(|&(a, b)| ExactScalar::ratio(a, b)).collect());
        let text = p.display_in("z");
        prop_assert_eq!(parse_polynomial(&text).unwrap(), p);
    }
}
