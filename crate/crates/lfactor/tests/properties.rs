//! Law-level properties of the factor calculus, checked on randomized
//! inputs.

use proptest::prelude::*;

use lfactor::{
    alpha_gl_at, atomize, expand_segment, gcd_products, sign_class, DiscreteSeriesParam, Kernel,
    LFactor, LProduct, Rat, Sign, SignClass, SigmaTail,
};

fn rat_quarters() -> impl Strategy<Value = Rat> {
    (-24i64..=24).prop_map(Rat::quarters)
}

fn small_param() -> impl Strategy<Value = DiscreteSeriesParam> {
    prop_oneof![
        Just(DiscreteSeriesParam::empty()),
        Just(DiscreteSeriesParam::new(vec![3, 1], SigmaTail::Generic).unwrap()),
        Just(DiscreteSeriesParam::new(vec![2, 0], SigmaTail::Generic).unwrap()),
        Just(DiscreteSeriesParam::new(vec![3, -1], SigmaTail::Generic).unwrap()),
        Just(DiscreteSeriesParam::new(vec![5, 3, 1, -1], SigmaTail::Generic).unwrap()),
        Just(DiscreteSeriesParam::new(vec![4, 2], SigmaTail::Trivial).unwrap()),
        Just(DiscreteSeriesParam::new(vec![6, 0], SigmaTail::Standard).unwrap()),
    ]
}

fn kernel() -> impl Strategy<Value = Kernel> {
    prop_oneof![
        Just(Kernel::Rho),
        Just(Kernel::RhoMinus),
        Just(Kernel::TauSigma),
        Just(Kernel::TauTau),
        (1i64..=5, 1i64..=5).prop_map(|(a, b)| Kernel::speh(a, b).unwrap()),
        (1i64..=5, proptest::bool::ANY)
            .prop_map(|(a, plus)| Kernel::twisted(a, if plus { Sign::Plus } else { Sign::Minus })
                .unwrap()),
        (1i64..=4, small_param()).prop_map(|(a, r)| Kernel::tensor_discrete(a, r).unwrap()),
    ]
}

fn factor() -> impl Strategy<Value = LFactor> {
    (prop_oneof![Just(-2i64), Just(-1), Just(1), Just(2)], rat_quarters(), kernel())
        .prop_map(|(k, q, ker)| LFactor::new(k, q, ker).unwrap())
}

fn product() -> impl Strategy<Value = LProduct> {
    proptest::collection::vec((factor(), -3i64..=3), 0..6).prop_map(|entries| {
        let mut p = LProduct::one();
        for (f, e) in entries {
            p.insert(f, e);
        }
        p
    })
}

proptest! {
    #[test]
    fn product_multiplication_commutes(x in product(), y in product()) {
        prop_assert_eq!(x.mul(&y), y.mul(&x));
    }

    #[test]
    fn product_multiplication_associates(x in product(), y in product(), z in product()) {
        prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
    }

    #[test]
    fn inverse_cancels(x in product()) {
        prop_assert!(x.mul(&x.inverse()).is_one());
    }

    #[test]
    fn division_is_multiplication_by_inverse(x in product(), y in product()) {
        prop_assert_eq!(x.div(&y), x.mul(&y.inverse()));
    }

    #[test]
    fn atomize_is_idempotent(x in product()) {
        let once = atomize(&x);
        prop_assert!(once.is_fully_atomic());
        prop_assert_eq!(atomize(&once), once.clone());
        // pair kernels are refined away entirely
        prop_assert!(once.iter().all(|(f, _)| *f.kernel() != Kernel::TauTau));
    }

    #[test]
    fn atomize_is_multiplicative(x in product(), y in product()) {
        prop_assert_eq!(atomize(&x.mul(&y)), atomize(&x).mul(&atomize(&y)));
    }

    #[test]
    fn atomize_commutes_with_translate(x in product(), q in -8i64..=8) {
        let delta = Rat::quarters(q);
        prop_assert_eq!(atomize(&x.translate(delta)), atomize(&x).translate(delta));
    }

    #[test]
    fn atomize_commutes_with_reflect(x in product()) {
        prop_assert_eq!(atomize(&x.reflect()), atomize(&x).reflect());
    }

    #[test]
    fn reflect_is_an_involution(x in product()) {
        prop_assert_eq!(x.reflect().reflect(), x.clone());
    }

    #[test]
    fn translate_composes_additively(x in product(), q1 in -8i64..=8, q2 in -8i64..=8) {
        let (d1, d2) = (Rat::quarters(q1), Rat::quarters(q2));
        prop_assert_eq!(x.translate(d1).translate(d2), x.translate(d1 + d2));
    }

    #[test]
    fn factor_pole_re_flips_under_reflect(f in factor()) {
        prop_assert_eq!(f.reflect().pole_re(), -f.pole_re());
    }

    #[test]
    fn sign_class_swaps_under_reflect(x in product()) {
        let expected = match sign_class(&x) {
            SignClass::Nonpositive => SignClass::Nonnegative,
            SignClass::Nonnegative => SignClass::Nonpositive,
            other => other,
        };
        prop_assert_eq!(sign_class(&x.reflect()), expected);
    }

    #[test]
    fn segment_expansion_is_symmetric_and_sized(
        a in 1i64..=9, r in 1i64..=9, q in -8i64..=8
    ) {
        let shift = Rat::quarters(q);
        let lhs = expand_segment(2, shift, a, r).unwrap();
        let rhs = expand_segment(2, shift, r, a).unwrap();
        prop_assert_eq!(&lhs, &rhs);
        let total: i64 = lhs.iter().map(|(_, e)| e).sum();
        prop_assert_eq!(total, a.min(r));
    }

    #[test]
    fn gl_factor_is_symmetric_in_slot_swap(
        c in 1i64..=5, d in 1i64..=5, a in 1i64..=4, b in 1i64..=4, q in -4i64..=4
    ) {
        let shift = Rat::quarters(q);
        let lhs = atomize(&alpha_gl_at(2, shift, c, d, a, b).unwrap());
        let rhs = atomize(&alpha_gl_at(2, shift, d, c, b, a).unwrap());
        prop_assert_eq!(&lhs, &rhs);
        let n = alpha_gl_at(2, shift, c, d, a, b).unwrap();
        let composite: i64 = n.iter().map(|(_, e)| e).sum();
        prop_assert_eq!(composite, c.min(d));
        // each of the min(c,d) segment factors refines into min(a,b)
        // pair atoms, each of which splits into two one-sided atoms
        let atoms: i64 = lhs.iter().map(|(_, e)| e).sum();
        prop_assert_eq!(atoms, 2 * c.min(d) * a.min(b));
    }

    #[test]
    fn gcd_is_symmetric_and_reflexive(x in product(), y in product()) {
        prop_assert_eq!(gcd_products(&x, &y), gcd_products(&y, &x));
        prop_assert_eq!(gcd_products(&x, &x), x.clone());
    }

    #[test]
    fn gcd_divides_both(x in product(), y in product()) {
        let g = gcd_products(&x, &y);
        for (f, e) in g.iter() {
            let (ex, ey) = (x.exponent_of(f), y.exponent_of(f));
            prop_assert_eq!(e.signum(), ex.signum());
            prop_assert_eq!(e.signum(), ey.signum());
            prop_assert!(e.abs() <= ex.abs() && e.abs() <= ey.abs());
        }
    }

    #[test]
    fn valid_tail_parameters_validate(
        start in 0i64..=6, steps in proptest::collection::vec(1i64..=3, 0..3)
    ) {
        // build a strictly decreasing same-parity list ending at >= -1
        let mut entries = vec![];
        let mut v = start * 2 + 1; // odd family
        entries.push(v);
        for s in steps {
            v -= 2 * s;
            if v < -1 { break; }
            entries.push(v);
        }
        if entries.len() % 2 == 1 {
            // drop to even count, or extend if possible
            if *entries.last().unwrap() >= 1 {
                let next = entries.last().unwrap() - 2;
                entries.push(next);
            } else {
                entries.pop();
            }
        }
        prop_assert!(DiscreteSeriesParam::new(entries, SigmaTail::Generic).is_ok());
    }
}

#[test]
fn tail_parameter_violations_report_first_broken_clause() {
    use lfactor::ParamViolation as V;
    let new = |v: Vec<i64>| DiscreteSeriesParam::new(v, SigmaTail::Generic);
    assert!(matches!(new(vec![1, 1]).unwrap_err(), V::NotStrictlyDecreasing { .. }));
    assert!(matches!(new(vec![3, 1, 1, 0]).unwrap_err(), V::NotStrictlyDecreasing { .. }));
    assert!(matches!(new(vec![3, 2]).unwrap_err(), V::ParityMismatch { .. }));
    assert!(matches!(new(vec![1, -3]).unwrap_err(), V::BelowFloor { .. }));
    assert!(matches!(new(vec![5, 3, 1]).unwrap_err(), V::OddCount(3)));
}
