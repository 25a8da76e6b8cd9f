mod strategies;

use proptest::prelude::*;
use sgap_core::cfrac::{
    cf_of_quadratic, cf_of_rational, classify_real, gapset_of_cf, gapset_of_real,
    nonmixing_perturbation, real_of_gapset,
};
use sgap_core::gapset::{are_conjugate, is_mixing, DeltaBound};
use sgap_core::{CFNumber, Error, ExactReal, GapSet, QuadraticSurd, Rational, Verdict};
use strategies::periodic_set;

fn rational() -> impl Strategy<Value = Rational> {
    (0i128..100_000, 1i128..10_000).prop_map(|(p, q)| Rational::new(p, q))
}

/// Value from the first 40 digits; long periods overflow the exact form.
fn approx(cf: &CFNumber) -> f64 {
    let digit = |i: usize| cf.digit(i).unwrap() as f64;
    let tail = (1..39).rev().fold(digit(39), |x, i| digit(i) + 1.0 / x);
    cf.a0 as f64 + 1.0 / tail
}

fn is_excluded(r: &Rational) -> bool {
    *r.numer() == 1
}

proptest! {
    #[test]
    fn rationals_round_trip(r in rational()) {
        prop_assume!(!is_excluded(&r));
        let x = ExactReal::Rational(r);
        let g = gapset_of_real(&x).unwrap();
        prop_assert_eq!(real_of_gapset(&g).unwrap().1, Some(x));
    }

    #[test]
    fn rational_expansions_never_end_in_one(r in rational()) {
        let cf = cf_of_rational(&r).unwrap();
        if !cf.pre.is_empty() {
            prop_assert_ne!(cf.pre.last(), Some(&1));
        }
        prop_assert!((cf.value().unwrap().to_f64() - *r.numer() as f64 / *r.denom() as f64).abs() < 1e-9);
    }

    #[test]
    fn periodic_sets_round_trip(g in periodic_set(5)) {
        let (_, x) = real_of_gapset(&g).unwrap();
        let x = x.unwrap();
        prop_assert!(matches!(x, ExactReal::QuadraticSurd(_)));
        prop_assert_eq!(gapset_of_real(&x).unwrap(), g);
    }

    #[test]
    fn quadratic_periods_are_primitive(a in -20i128..20, b in 1i128..5, c in 1i128..20, d in 2i128..30) {
        let s = match QuadraticSurd::new(a, b, c, d) {
            Ok(s) if s.signum() > 0 => s,
            _ => return Ok(()),
        };
        let cf = cf_of_quadratic(&s).unwrap();
        let l = cf.period.len();
        prop_assert!(l >= 1);
        for k in 1..l {
            if l.is_multiple_of(k) {
                prop_assert!(cf.period.chunks(k).any(|c| c != &cf.period[..k]));
            }
        }
        prop_assert!((approx(&cf) - s.to_f64()).abs() < 1e-9);
    }

    #[test]
    fn rationals_classify_as_finite_type(r in rational()) {
        prop_assume!(!is_excluded(&r));
        let c = classify_real(&cf_of_rational(&r).unwrap()).unwrap();
        prop_assert_eq!(c.sft, Verdict::True);
    }

    #[test]
    fn quadratics_classify_as_sofic(g in periodic_set(5)) {
        let (cf, _) = real_of_gapset(&g).unwrap();
        prop_assert_eq!(classify_real(&cf).unwrap().sofic, Verdict::True);
    }

    #[test]
    fn bounded_digits_are_almost_specified(digits in proptest::collection::vec(1u64..6, 1..20), m in 5u64..10) {
        let cf = CFNumber::prefix(1, digits, DeltaBound::Yes(m)).unwrap();
        prop_assert_eq!(classify_real(&cf).unwrap().almost_specified, Verdict::True);
    }

    #[test]
    fn perturbation_changes_one_digit(
        a0 in 0u64..4,
        period in proptest::collection::vec(1u64..4, 1..3),
        g in 2u64..4,
        n in 1usize..12,
    ) {
        // scale so that every s + 1 is a multiple of g
        let a0 = g * (a0 + 1) - 1;
        let period: Vec<u64> = period.into_iter().map(|m| m * g).collect();
        let x = CFNumber::new(a0, Vec::new(), period).unwrap();
        prop_assert_eq!(is_mixing(&gapset_of_cf(&x).unwrap()), Verdict::False);
        let y = nonmixing_perturbation(&x, n).unwrap();
        prop_assert_eq!((0..40).filter(|&i| x.digit(i) != y.digit(i)).count(), 1);
        prop_assert_eq!(is_mixing(&gapset_of_cf(&y).unwrap()), Verdict::False);
    }
}

#[test]
fn exclusion_removes_the_duplicate_class() {
    for n in 1..=10u64 {
        let e = gapset_of_real(&ExactReal::Rational(Rational::new(1, n as i128))).unwrap_err();
        assert_eq!(e, Error::ExcludedPoint { n, hint: format!("delta:{n};1") });
        let a: GapSet = format!("finite:0,{n}").parse().unwrap();
        let b: GapSet = format!("delta:{n};1").parse().unwrap();
        assert!(are_conjugate(&a, &b).unwrap().is_conjugate());
    }
}
