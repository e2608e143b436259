use layerconvex::bounds::*;
use layerconvex::geometry::LayerConfig;
use layerconvex::validate::{g_forms_gap, theorem_grid_violations};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(d: usize, r: f64, alpha: f64) -> BoundParams {
    BoundParams::new(d, r, alpha).unwrap()
}

#[test]
fn union_bound_guarantee_on_grid() {
    let (checked, violations) = theorem_grid_violations().unwrap();
    assert_eq!(violations, 0);
    assert!(checked > 0);
}

#[test]
fn g_forms_agree_on_random_draws() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut compared = 0;
    for _ in 0..10_000 {
        let p = params(
            rng.random_range(1..=200),
            rng.random_range(0.01..0.99),
            rng.random_range(0.001..0.999),
        );
        if let Some(gap) = g_forms_gap(&p).unwrap() {
            compared += 1;
            assert!(gap <= 1e-12, "{p:?}: {gap:e}");
        }
    }
    assert!(compared > 9_000);
}

#[test]
fn g_matches_naive_evaluation_where_stable() {
    // plain sqrt of the original expression, only where 1 + t is far from 1
    for (d, r, a) in [(2, 0.5, 0.5), (5, 0.3, 0.2), (7, 0.6, 0.1), (3, 0.8, 0.9)] {
        let p = params(d, r, a);
        let s = (1.0 - r * r).sqrt();
        let t = 2.0 * a * s.powi(d as i32) / r.powi(2 * d as i32);
        assert!(t > 1e-3);
        let naive = (r / s).powi(d as i32) * ((1.0 + t).sqrt() - 1.0);
        assert!((bound_g(&p).unwrap() / naive - 1.0).abs() < 1e-12);
    }
}

#[test]
fn f_is_monotone_on_grids() {
    let radii = [0.0, 0.25, 0.5, 0.75, 0.9];
    let alphas = [0.01, 0.1, 0.5, 0.9];
    for d in 1..=40 {
        for &r in &radii {
            let fs: Vec<f64> = alphas.iter().map(|&a| bound_f(&params(d, r, a))).collect();
            assert!(fs.windows(2).all(|w| w[1] > w[0]));
            for &a in &alphas {
                assert!(bound_f(&params(d + 1, r, a)) > bound_f(&params(d, r, a)));
            }
        }
        for &a in &alphas {
            for w in radii.windows(2) {
                let (lo, hi) = (bound_f(&params(d, w[0], a)), bound_f(&params(d, w[1], a)));
                // 1 - r^d rounds to 1 once r^d is below the f64 resolution
                if w[1].powi(d as i32) > 1e-12 {
                    assert!(hi < lo, "d={d} a={a} r={w:?}");
                } else {
                    assert!(hi <= lo, "d={d} a={a} r={w:?}");
                }
            }
        }
    }
}

#[test]
fn statement_asymptotics_at_d400() {
    for r in [0.9, CRITICAL_RADIUS, 0.5] {
        let p = params(400, r, 0.1);
        let ratio = (ln_bound_g(&p).unwrap() - ln_asymptotic_g(&p).unwrap()).exp();
        assert!((ratio - 1.0).abs() <= 1e-3, "r={r}: {ratio}");
        let fg = (ln_ratio_f_over_g(&p).unwrap() - ln_asymptotic_ratio_f_over_g(&p).unwrap()).exp();
        assert!((fg - 1.0).abs() <= 1e-2, "r={r}: {fg}");
    }
}

#[test]
fn regime_labels_follow_radius() {
    for r in [0.79, 0.85, 0.9, 0.999] {
        assert_eq!(classify_regime(r).unwrap().case, Regime::Supercritical);
    }
    for r in [0.01, 0.3, 0.5, 0.78] {
        assert_eq!(classify_regime(r).unwrap().case, Regime::Subcritical);
    }
    let rc = classify_regime(CRITICAL_RADIUS + 5e-13).unwrap();
    assert_eq!(rc.case, Regime::Critical);
    assert!((rc.r_star.powi(4) + rc.r_star.powi(2) - 1.0).abs() < 1e-14);
}

#[test]
fn exact_ratio_diverges_in_every_regime() {
    for r in [0.9, CRITICAL_RADIUS, 0.5] {
        let ln: Vec<f64> = [50, 100, 200, 400]
            .iter()
            .map(|&d| ln_ratio_f_over_g(&params(d, r, 0.1)).unwrap())
            .collect();
        assert!(ln.windows(2).all(|w| w[1] > w[0]), "r={r}: {ln:?}");
    }
}

#[test]
fn g_log_form_reaches_large_dimensions() {
    for d in [600, 1000, 5000] {
        let p = params(d, 0.5, 0.1);
        let ln_g = ln_bound_g(&p).unwrap();
        assert!(ln_g.is_finite());
        let ratio = (ln_g - ln_asymptotic_g(&p).unwrap()).exp();
        assert!((ratio - 1.0).abs() < 1e-9);
    }
}

proptest! {
    #[test]
    fn sharp_bound_dominates_simplified(n in 1u64..100_000, d in 1usize..1500, r in 0.0f64..0.999) {
        let b = prob_lower_bound(n, &LayerConfig::new(d, r).unwrap()).unwrap();
        prop_assert!(b.sharp >= b.simplified);
        prop_assert!(b.sharp <= 1.0);
        prop_assert_eq!(b.vacuous, b.sharp <= 0.0);
    }

    #[test]
    fn admissible_n_keeps_guarantee(d in 1usize..60, r in 0.0f64..0.999, a in 0.001f64..0.999) {
        let p = params(d, r, a);
        if let Some(n) = admissible_n(&p) {
            prop_assert!((n as f64) < bound_f(&p));
            prop_assert!(((n + 1) as f64) >= bound_f(&p) * (1.0 - 1e-12));
            let lb = prob_lower_bound(n, &p.layer()).unwrap();
            prop_assert!(lb.simplified > 1.0 - a);
        } else {
            prop_assert!(bound_f(&p) <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn log_and_linear_f_agree(d in 1usize..900, r in 0.0f64..0.999, a in 0.001f64..0.999) {
        let p = params(d, r, a);
        let f = bound_f(&p);
        prop_assert!((ln_bound_f(&p) - f.ln()).abs() < 1e-12 * f.ln().abs().max(1.0));
    }
}
