use layerconvex::geometry::{radial_cdf, sample_layer_point, sample_layer_points, LayerConfig};
use layerconvex::montecarlo::{ks_critical_value, ks_statistic, trial_points, Experiment};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 100_000;

fn norms(cfg: &LayerConfig, n: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| sample_layer_point(cfg, &mut rng).norm())
        .collect()
}

#[test]
fn squared_norm_uniform_in_disk() {
    let cfg = LayerConfig::new(2, 0.0).unwrap();
    let sq: Vec<f64> = norms(&cfg, SAMPLES, 1).into_iter().map(|n| n * n).collect();
    let stat = ks_statistic(&sq, |t| t.clamp(0.0, 1.0)).unwrap();
    assert!(
        stat < ks_critical_value(SAMPLES, 1e-4).unwrap(),
        "KS {stat}"
    );
}

#[test]
fn radial_probability_at_point_eight() {
    let cfg = LayerConfig::new(5, 0.5).unwrap();
    let ns = norms(&cfg, SAMPLES, 2);
    let empirical = ns.iter().filter(|&&n| n <= 0.8).count() as f64 / SAMPLES as f64;
    // exact value 0.3059922580..., four standard errors
    let se = (0.306 * 0.694 / SAMPLES as f64).sqrt();
    assert!((empirical - 0.305_992_258).abs() < 4.0 * se, "{empirical}");
}

#[test]
fn norms_follow_radial_law_across_layers() {
    let critical = ks_critical_value(SAMPLES, 1e-4).unwrap();
    let mut seed = 10;
    for d in [1, 2, 7, 20, 50] {
        for r in [0.0, 0.3, 0.7, 0.95] {
            let cfg = LayerConfig::new(d, r).unwrap();
            seed += 1;
            let stat = ks_statistic(&norms(&cfg, SAMPLES, seed), |t| {
                radial_cdf(t, &cfg).unwrap()
            })
            .unwrap();
            assert!(stat < critical, "d={d} r={r} KS={stat}");
        }
    }
}

#[test]
fn ks_statistic_below_1_95_scale() {
    let cfg = LayerConfig::new(5, 0.5).unwrap();
    let stat = ks_statistic(&norms(&cfg, SAMPLES, 99), |t| radial_cdf(t, &cfg).unwrap()).unwrap();
    assert!(stat < 1.95 / (SAMPLES as f64).sqrt(), "{stat}");
}

#[test]
fn wrong_law_is_rejected() {
    // norms from d=5 tested against the d=4 law
    let cfg = LayerConfig::new(5, 0.0).unwrap();
    let wrong = LayerConfig::new(4, 0.0).unwrap();
    let stat = ks_statistic(&norms(&cfg, SAMPLES, 3), |t| radial_cdf(t, &wrong).unwrap()).unwrap();
    assert!(stat > ks_critical_value(SAMPLES, 1e-4).unwrap());
}

#[test]
fn directions_are_isotropic() {
    for d in [2, 3, 8, 30] {
        let cfg = LayerConfig::new(d, 0.6).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(d as u64);
        let mut mean = vec![0.0; d];
        for _ in 0..SAMPLES {
            let p = sample_layer_point(&cfg, &mut rng);
            let n = p.norm();
            for (m, c) in mean.iter_mut().zip(p.coords()) {
                *m += c / n;
            }
        }
        let len = mean
            .iter()
            .map(|m| (m / SAMPLES as f64).powi(2))
            .sum::<f64>()
            .sqrt();
        assert!(len < 0.02, "d={d}: {len}");
    }
}

#[test]
fn trial_points_ignore_thread_context() {
    let exp = Experiment::new(LayerConfig::new(6, 0.4).unwrap(), 5, 10, 123).unwrap();
    let here: Vec<_> = (0..10).map(|t| trial_points(&exp, t)).collect();
    let there = std::thread::spawn(move || {
        (0..10)
            .rev()
            .map(|t| trial_points(&exp, t))
            .collect::<Vec<_>>()
    })
    .join()
    .unwrap();
    assert!(here.iter().eq(there.iter().rev()));
}

proptest! {
    #[test]
    fn samples_stay_in_layer(d in 1usize..64, r in 0.0f64..0.9999, seed in any::<u64>()) {
        let cfg = LayerConfig::new(d, r).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for p in sample_layer_points(&cfg, 20, &mut rng) {
            let n = p.norm();
            prop_assert_eq!(p.dim(), d);
            prop_assert!(n >= r - 1e-12 && n <= 1.0 + 1e-12, "norm {} outside [{}, 1]", n, r);
        }
    }

    #[test]
    fn radial_cdf_is_monotone(d in 1usize..200, r in 0.0f64..0.99, a in 0.0f64..1.0, b in 0.0f64..1.0) {
        let cfg = LayerConfig::new(d, r).unwrap();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let t = |u: f64| r + u * (1.0 - r);
        prop_assert!(radial_cdf(t(lo), &cfg).unwrap() <= radial_cdf(t(hi), &cfg).unwrap());
    }
}
