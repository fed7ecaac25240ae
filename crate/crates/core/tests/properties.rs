use proptest::prelude::*;

use qscheme_core::classifier::{admissible_patterns, validate, ZeroPattern};
use qscheme_core::engine::{expansion, monic_poly, PolySystem};
use qscheme_core::exact::{qpoch, rat, DensePoly, Rational};
use qscheme_core::par::Exec;
use qscheme_core::symmetry::{apply_gauge, canonical_vector, canonicalize, dualize, q_invert, ChartId, GaugeAction};
use qscheme_core::verify::random_vectors;

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| rat(n, d))
}

fn nonzero() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

fn q_value() -> impl Strategy<Value = Rational> {
    nonzero().prop_filter("q avoids 0 and +-1", |q| q.abs() != Rational::one())
}

fn poly(max_degree: usize) -> impl Strategy<Value = DensePoly> {
    prop::collection::vec(rational(), 0..=max_degree + 1).prop_map(DensePoly::new)
}

fn gauge() -> impl Strategy<Value = GaugeAction> {
    (rational(), nonzero(), rational(), nonzero()).prop_map(|(t, m, s, r)| GaugeAction::new(t, m, s, r).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn qpoch_splits(b in rational(), q in q_value(), m in 0usize..6, n in 0usize..6) {
        let tail = qpoch(&(&b * q.powi(m as i64)), &q, n);
        prop_assert_eq!(qpoch(&b, &q, m + n), qpoch(&b, &q, m) * tail);
    }

    #[test]
    fn qpoch_vanishes_on_negative_powers(q in q_value(), m in 0usize..5, extra in 1usize..4) {
        // (q^-m; q)_k = 0 once k > m
        prop_assert!(qpoch(&q.powi(-(m as i64)), &q, m + extra).is_zero());
    }

    #[test]
    fn division_identity(a in poly(6), b in poly(4)) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.is_zero() || rem.degree() < b.degree());
    }

    #[test]
    fn div_linear_is_synthetic_division(p in poly(6), root in rational()) {
        let (quot, rem) = p.div_linear(&root);
        prop_assert_eq!(rem.clone(), p.eval(&root));
        prop_assert_eq!(&(&quot * &DensePoly::linear_root(&root)) + &DensePoly::constant(rem), p);
    }

    #[test]
    fn affine_composition_evaluates(p in poly(5), a in rational(), b in rational(), x in rational()) {
        prop_assert_eq!(p.compose_affine(&a, &b).eval(&x), p.eval(&(&a * &x + &b)));
    }

    #[test]
    fn gauge_composition_is_sequential(seed in any::<u64>(), g1 in gauge(), g2 in gauge()) {
        let pv = random_vectors(seed, 1, 3).remove(0);
        prop_assert_eq!(apply_gauge(&apply_gauge(&pv, &g1), &g2), apply_gauge(&pv, &g1.then(&g2)));
        prop_assert_eq!(apply_gauge(&apply_gauge(&pv, &g1), &g1.inverse()), pv);
    }

    #[test]
    fn gauge_moves_polynomials(seed in any::<u64>(), g in gauge()) {
        let pv = random_vectors(seed, 1, 5).remove(0);
        let moved = apply_gauge(&pv, &g);
        prop_assert!(moved.structural_report().structural_ok());
        for n in 0..=5 {
            prop_assert_eq!(monic_poly(&moved, n).unwrap(), g.transform_poly(&monic_poly(&pv, n).unwrap()));
        }
    }

    #[test]
    fn involutions(seed in any::<u64>()) {
        let pv = random_vectors(seed, 1, 4).remove(0);
        prop_assert_eq!(q_invert(&q_invert(&pv)), pv.clone());
        if let Ok(d) = dualize(&pv, 4) {
            prop_assert!(d.structural_report().structural_ok());
            prop_assert_eq!(dualize(&d, 4).unwrap(), pv);
        }
    }

    #[test]
    fn q_inversion_keeps_everything(seed in any::<u64>()) {
        let pv = random_vectors(seed, 1, 5).remove(0);
        let inv = q_invert(&pv);
        for k in -3..=8 {
            prop_assert_eq!(inv.x(k), pv.x(k));
            prop_assert_eq!(inv.h(k), pv.h(k));
            prop_assert_eq!(inv.g(k), pv.g(k));
        }
        for n in 0..=5 {
            prop_assert_eq!(monic_poly(&inv, n).unwrap(), monic_poly(&pv, n).unwrap());
        }
    }

    #[test]
    fn canonicalize_is_idempotent(seed in any::<u64>()) {
        let pv = random_vectors(seed, 1, 2).remove(0);
        for chart in ChartId::ALL {
            if let Ok(c) = canonical_vector(&pv, chart) {
                prop_assert_eq!(canonical_vector(&c, chart).unwrap(), c.clone());
                prop_assert_eq!(canonicalize(&c, chart).unwrap(), canonicalize(&pv, chart).unwrap());
            }
        }
    }

    #[test]
    fn recurrence_and_eigen_hold(seed in any::<u64>()) {
        let pv = random_vectors(seed, 1, 7).remove(0);
        let sys = PolySystem::new(&pv, 7).unwrap();
        for n in 0..=6 {
            prop_assert!(sys.recurrence_check(n).unwrap());
            prop_assert!(sys.eigen_check(n).unwrap());
            prop_assert!(!sys.breaks_three_term(n).unwrap());
        }
        for n in 0..=7 {
            prop_assert_eq!(sys.from_newton(&sys.to_newton(sys.u(n)).unwrap()), sys.u(n).clone());
        }
    }

    #[test]
    fn newton_coefficients_ratio(seed in any::<u64>()) {
        let pv = random_vectors(seed, 1, 6).remove(0);
        let e = expansion(&pv, 6).unwrap();
        for n in 0..=6 {
            prop_assert!(e.get(n, n).is_one());
            for k in 0..n {
                let want = e.get(n, k + 1) * pv.g(k as i64 + 1) / (pv.h(n as i64) - pv.h(k as i64));
                prop_assert_eq!(e.get(n, k).clone(), want);
            }
        }
    }

    #[test]
    fn pattern_operations(bits in 0u32..(1 << 11)) {
        let p = ZeroPattern::new(std::array::from_fn(|i| bits & (1 << i) != 0));
        prop_assert_eq!(p.mirror().mirror(), p);
        // rule 5 puts two blacks in the third row, so the dual of an
        // admissible pattern is again dualizable
        if validate(&p).is_empty() {
            if let Some(d) = p.dual() {
                prop_assert_eq!(d.dual(), Some(p));
            }
        }
        prop_assert_eq!(p.to_code().parse::<ZeroPattern>().unwrap(), p);
        prop_assert_eq!(validate(&p).is_empty(), validate(&p.mirror()).is_empty());
    }
}

#[test]
fn admissible_set_is_mirror_closed() {
    let all = admissible_patterns(Exec::Sequential);
    assert_eq!(all.len(), 61);
    assert!(all.iter().all(|p| all.contains(&p.mirror())));
    assert_eq!(all, admissible_patterns(Exec::default()));
}
