use layerconvex::bounds::{prob_lower_bound, BoundParams};
use layerconvex::geometry::LayerConfig;
use layerconvex::hull::oracle_one_convex_2d;
use layerconvex::montecarlo::*;

fn experiment(d: usize, r: f64, n: usize, trials: u64, seed: u64) -> Experiment {
    Experiment::new(LayerConfig::new(d, r).unwrap(), n, trials, seed).unwrap()
}

#[test]
fn four_points_in_disk_match_oracle_simulation() {
    let exp = experiment(2, 0.0, 4, 100_000, 4);
    let opts = RunOptions::default();
    let lp = estimate_p_one_convex(&exp, &opts).unwrap();
    let oracle = simulate(&exp, &opts, oracle_one_convex_2d).unwrap();
    // same streams, same point sets: the counts must coincide
    assert_eq!(lp.successes, oracle.successes);
    // the oracle-only run on fresh streams lands on 0.7045 within its interval
    let fresh = simulate(
        &experiment(2, 0.0, 4, 100_000, 40),
        &opts,
        oracle_one_convex_2d,
    )
    .unwrap();
    assert!(
        fresh.ci_low < 0.7045 + 1e-3 && fresh.ci_high > 0.7045 - 1e-3,
        "{fresh:?}"
    );
    assert!((lp.p_hat - fresh.p_hat).abs() < 3.0 * (lp.half_width() + fresh.half_width()));
}

#[test]
fn full_success_intervals_contain_one() {
    for (d, n) in [(2, 3), (3, 4), (5, 6), (9, 10)] {
        for seed in 0..5 {
            let e =
                estimate_p_one_convex(&experiment(d, 0.3, n, 300, seed), &RunOptions::default())
                    .unwrap();
            assert_eq!(e.successes, e.trials);
            assert!(e.ci_low <= 1.0 && e.ci_high == 1.0);
            assert!(e.ci_low <= e.p_hat && e.p_hat <= e.ci_high);
        }
    }
}

#[test]
fn more_points_do_not_help() {
    let opts = RunOptions::default();
    for (d, r, n) in [(2, 0.0, 4), (3, 0.5, 6), (4, 0.8, 10)] {
        let a = estimate_p_one_convex(&experiment(d, r, n, 4_000, 9), &opts).unwrap();
        let b = estimate_p_one_convex(&experiment(d, r, n + 5, 4_000, 10), &opts).unwrap();
        assert!(
            a.p_hat >= b.p_hat - 2.0 * (a.half_width() + b.half_width()),
            "{a:?} {b:?}"
        );
    }
}

#[test]
fn verify_theorem_examples() {
    let opts = RunOptions::default();
    let r = verify_theorem(&BoundParams::new(10, 0.5, 0.1).unwrap(), 10_000, 1, &opts).unwrap();
    assert_eq!(r.n, 10);
    assert!((r.f - 10.114_346_246_792_227).abs() < 1e-12);
    assert!(r.estimate.p_hat > 0.9 && r.passed());

    let r = verify_theorem(&BoundParams::new(6, 0.0, 0.5).unwrap(), 10_000, 2, &opts).unwrap();
    assert_eq!(r.n, 5);
    assert!(r.estimate.p_hat > 0.5 && r.passed());
    assert!(r.slack > 0.0);
}

#[test]
fn union_bound_is_not_undercut_in_low_dimension() {
    // small d, where the bound is informative and p < 1 is visible
    let opts = RunOptions::default();
    for (d, r, alpha) in [(6, 0.0, 0.9), (7, 0.3, 0.9), (8, 0.6, 0.9), (9, 0.0, 0.9)] {
        let report =
            verify_theorem(&BoundParams::new(d, r, alpha).unwrap(), 4_000, 17, &opts).unwrap();
        let est = report.estimate;
        assert!(
            est.p_hat + est.half_width() >= report.lower_bound.sharp,
            "{report:?}"
        );
        assert!(report.passed());
    }
}

#[test]
fn sharp_bound_for_estimate_example() {
    let lb = prob_lower_bound(10, &LayerConfig::new(10, 0.5).unwrap()).unwrap();
    assert!((lb.sharp - (1.0 - 90.0 / 1023.0)).abs() < 1e-15);
}
