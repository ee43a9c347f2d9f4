//! Algebraic and numeric properties of exact rational functions.

use nevgraph::numcheck::{derivative_check, eval_complex, upper_point};
use nevgraph::{Monomial, Polynomial, RatFun, Var};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .map(|(c, a, b, l)| {
                let m = Monomial::var_pow(Var::Z, a)
                    .mul(&Monomial::var_pow(Var::W, b))
                    .mul(&Monomial::var_pow(Var::Lambda, l));
                Polynomial::term(c, m)
            })
            .fold(Polynomial::zero(), |acc, t| &acc + &t)
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(), nonzero_poly()).prop_map(|(p, q)| RatFun::new(p, q).expect("nonzero denominator"))
}

/// Relative gap between `exact` and `numeric` at ten seeded points, or
/// `None` if a point lands too close to a pole of either side.
fn numeric_gap(exact: &RatFun, numeric: impl Fn(Complex64, Complex64, Complex64) -> Option<Complex64>, seed: u64) -> Option<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let (z, w, l) = (upper_point(&mut rng), upper_point(&mut rng), upper_point(&mut rng));
        let a = eval_complex(exact, z, w, l).ok()?;
        let b = numeric(z, w, l)?;
        if !b.is_finite() || b.norm() > 1e8 {
            return None;
        }
        worst = worst.max((a - b).norm() / b.norm().max(1e-300));
    }
    Some(worst)
}

fn at(r: &RatFun, z: Complex64, w: Complex64, l: Complex64) -> Option<Complex64> {
    eval_complex(r, z, w, l).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normalization_cancels_common_factors(r in ratfun(), m in nonzero_poly()) {
        let again = RatFun::new(r.num() * &m, r.den() * &m).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(r.den().leading_coefficient() > 0.into());
    }

    #[test]
    fn field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a - &a, RatFun::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.reciprocal().unwrap(), RatFun::one());
        }
    }

    #[test]
    fn text_and_json_round_trip(a in ratfun()) {
        prop_assert_eq!(&a.to_string().parse::<RatFun>().unwrap(), &a);
        prop_assert_eq!(&RatFun::from_json(&a.to_json()).unwrap(), &a);
    }

    #[test]
    fn arithmetic_matches_complex_evaluation(a in ratfun(), b in ratfun(), seed in any::<u64>()) {
        let sum = &a + &b;
        let prod = &a * &b;
        let checks = [
            numeric_gap(&sum, |z, w, l| Some(at(&a, z, w, l)? + at(&b, z, w, l)?), seed),
            numeric_gap(&prod, |z, w, l| Some(at(&a, z, w, l)? * at(&b, z, w, l)?), seed),
        ];
        for gap in checks.into_iter().flatten() {
            prop_assert!(gap < 1e-8, "gap {}", gap);
        }
        if !b.is_zero() {
            let quot = a.checked_div(&b).unwrap();
            if let Some(gap) = numeric_gap(&quot, |z, w, l| Some(at(&a, z, w, l)? / at(&b, z, w, l)?), seed) {
                prop_assert!(gap < 1e-8, "gap {}", gap);
            }
        }
    }

    #[test]
    fn substitution_matches_composition(a in ratfun(), s in ratfun(), seed in any::<u64>()) {
        if let Ok(composed) = a.substitute(Var::Z, &s) {
            if let Some(gap) = numeric_gap(&composed, |z, w, l| at(&a, at(&s, z, w, l)?, w, l), seed) {
                prop_assert!(gap < 1e-8, "gap {}", gap);
            }
        }
    }

    #[test]
    fn derivative_matches_finite_differences(a in ratfun(), seed in any::<u64>()) {
        for v in [Var::Z, Var::W, Var::Lambda] {
            if let Ok(gap) = derivative_check(&a, v, 5, seed) {
                prop_assert!(gap < 1e-5, "gap {} in {:?}", gap, v);
            }
        }
    }
}
