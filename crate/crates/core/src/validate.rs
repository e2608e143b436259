//! Property suites behind `layerconvex validate`.
//!
//! Each suite draws from its own seeded stream and reports a single
//! pass/fail line. `Quick` shrinks sample counts so the whole run finishes
//! in seconds; `Full` uses the production sizes (10^4 to 10^5 samples).

use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundParams, CRITICAL_RADIUS};
use crate::geometry::{radial_cdf, sample_layer_point, sample_layer_points, LayerConfig};
use crate::hull::{self, hull_area_2d, oracle_one_convex_2d, PointSet};
use crate::montecarlo::{self, Experiment, RunOptions};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(Error::InvalidArgument(format!("unknown level '{other}'"))),
        }
    }
}

impl Level {
    fn pick<T>(self, quick: T, full: T) -> T {
        match self {
            Level::Quick => quick,
            Level::Full => full,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

type Suite = fn(Level, u64, &RunOptions) -> Result<(bool, String)>;

const SUITES: &[(&str, Suite)] = &[
    ("oracle_equivalence", oracle_equivalence),
    ("certificate_soundness", certificate_soundness),
    ("sampler_ks", sampler_ks),
    ("sampler_isotropy", sampler_isotropy),
    ("theorem_self_consistency", theorem_self_consistency),
    ("g_identity", g_identity),
    ("asymptotics", asymptotics),
    ("volume_bound", volume_bound),
    ("theorem_verification", theorem_verification),
    ("reproducibility", reproducibility),
];

/// Runs every suite; a suite that errors counts as failed.
pub fn run_all(level: Level, seed: u64, opts: &RunOptions) -> Vec<SuiteResult> {
    SUITES
        .iter()
        .enumerate()
        .map(|(i, (name, suite))| {
            let start = Instant::now();
            let (passed, detail) = match suite(level, seed.wrapping_add(i as u64), opts) {
                Ok(outcome) => outcome,
                Err(e) => (false, format!("error: {e}")),
            };
            SuiteResult {
                name: name.to_string(),
                passed,
                detail,
                seconds: start.elapsed().as_secs_f64(),
            }
        })
        .collect()
}

fn disk_set(rng: &mut ChaCha8Rng, r: f64, k: usize) -> PointSet {
    let cfg = LayerConfig::new(2, r).expect("valid layer");
    PointSet::new(sample_layer_points(&cfg, k, rng)).expect("uniform dimension")
}

fn oracle_equivalence(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let instances = level.pick(2_000, 10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    for i in 0..instances {
        let r = if i % 2 == 0 { 0.0 } else { 0.5 };
        let k = rng.random_range(3..=12);
        let set = disk_set(&mut rng, r, k);
        if hull::is_one_convex(&set, 1e-9)? != oracle_one_convex_2d(&set)? {
            disagreements += 1;
        }
    }
    Ok((
        disagreements == 0,
        format!("{disagreements} disagreements in {instances} planar sets"),
    ))
}

fn certificate_soundness(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let queries = level.pick(2_000, 10_000);
    let tol = 1e-9;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..queries {
        let d = rng.random_range(1..=8);
        let cfg = LayerConfig::new(d, rng.random_range(0.0..0.9))?;
        let set = PointSet::new(sample_layer_points(
            &cfg,
            rng.random_range(1..=15),
            &mut rng,
        ))?;
        let x = sample_layer_point(&cfg, &mut rng);
        if !hull::in_convex_hull(&x, &set, tol)?.verify(&x, &set, tol) {
            bad += 1;
        }
    }
    Ok((
        bad == 0,
        format!("{bad} unsound certificates in {queries} queries"),
    ))
}

fn sampler_ks(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let samples = level.pick(20_000, 100_000);
    let mut cases = vec![(2, 0.0), (5, 0.5), (20, 0.9)];
    if level == Level::Full {
        for d in [1, 3, 10, 25, 50] {
            for r in [0.0, 0.3, 0.7, 0.95] {
                cases.push((d, r));
            }
        }
    }
    let critical = montecarlo::ks_critical_value(samples, 1e-4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for &(d, r) in &cases {
        let cfg = LayerConfig::new(d, r)?;
        let norms: Vec<f64> = (0..samples)
            .map(|_| sample_layer_point(&cfg, &mut rng).norm())
            .collect();
        let stat =
            montecarlo::ks_statistic(&norms, |t| radial_cdf(t.clamp(r, 1.0), &cfg).unwrap_or(0.0))?;
        worst = worst.max(stat);
    }
    Ok((
        worst < critical,
        format!(
            "max KS {worst:.5} vs critical {critical:.5} over {} layers",
            cases.len()
        ),
    ))
}

fn sampler_isotropy(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let samples = level.pick(20_000, 100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for d in [2, 3, 10] {
        let cfg = LayerConfig::new(d, 0.5)?;
        let mut mean = vec![0.0; d];
        for _ in 0..samples {
            let p = sample_layer_point(&cfg, &mut rng);
            let norm = p.norm();
            for (m, c) in mean.iter_mut().zip(p.coords()) {
                *m += c / norm;
            }
        }
        let len = mean
            .iter()
            .map(|m| (m / samples as f64).powi(2))
            .sum::<f64>()
            .sqrt();
        worst = worst.max(len);
    }
    Ok((worst < 0.02, format!("max mean-direction norm {worst:.5}")))
}

/// `n < f` implies `1 - n^2 / (2^d (1 - r^d)) > 1 - alpha` on the grid.
pub fn theorem_grid_violations() -> Result<(usize, usize)> {
    let mut checked = 0;
    let mut violations = 0;
    for d in 2..=30 {
        for r in [0.0, 0.25, 0.5, 0.75, 0.9] {
            for alpha in [0.01, 0.1, 0.5] {
                let p = BoundParams::new(d, r, alpha)?;
                let Some(n) = bounds::admissible_n(&p) else {
                    continue;
                };
                checked += 1;
                let lb = bounds::prob_lower_bound(n, &p.layer())?;
                if !((n as f64) < bounds::bound_f(&p) && lb.simplified > 1.0 - alpha) {
                    violations += 1;
                }
            }
        }
    }
    Ok((checked, violations))
}

fn theorem_self_consistency(_: Level, _: u64, _: &RunOptions) -> Result<(bool, String)> {
    let (checked, violations) = theorem_grid_violations()?;
    Ok((
        violations == 0,
        format!("{violations} violations in {checked} grid cells"),
    ))
}

/// Relative gap between the direct and rationalized forms of `g`, or
/// `None` when the direct form leaves the normal range.
pub fn g_forms_gap(p: &BoundParams) -> Result<Option<f64>> {
    let direct = bounds::bound_g_direct(p)?;
    let rational = bounds::bound_g(p)?;
    if !direct.is_normal() || !rational.is_normal() {
        return Ok(None);
    }
    Ok(Some((direct - rational).abs() / rational))
}

fn g_identity(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let draws = level.pick(2_000, 10_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut compared = 0;
    for _ in 0..draws {
        let p = BoundParams::new(
            rng.random_range(1..=200),
            rng.random_range(0.01..0.99),
            rng.random_range(0.001..0.999),
        )?;
        if let Some(gap) = g_forms_gap(&p)? {
            compared += 1;
            worst = worst.max(gap);
        }
    }
    Ok((
        worst <= 1e-12 && compared > 0,
        format!("max relative gap {worst:.2e} over {compared} representable draws"),
    ))
}

fn asymptotics(_: Level, _: u64, _: &RunOptions) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for r in [0.9, CRITICAL_RADIUS, 0.5] {
        let p = BoundParams::new(400, r, 0.1)?;
        let g_ratio = (bounds::ln_bound_g(&p)? - bounds::ln_asymptotic_g(&p)?).exp();
        let fg_ratio =
            (bounds::ln_ratio_f_over_g(&p)? - bounds::ln_asymptotic_ratio_f_over_g(&p)?).exp();
        let growing = [50, 100, 200, 400]
            .windows(2)
            .map(|w| -> Result<bool> {
                let a = bounds::ln_ratio_f_over_g(&BoundParams::new(w[0], r, 0.1)?)?;
                let b = bounds::ln_ratio_f_over_g(&BoundParams::new(w[1], r, 0.1)?)?;
                Ok(b > a)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|x| x);
        ok &= (0.999..=1.001).contains(&g_ratio) && (0.99..=1.01).contains(&fg_ratio) && growing;
        parts.push(format!("r={r:.4}: g/g~={g_ratio:.6} (f/g)/~={fg_ratio:.6}"));
    }
    Ok((ok, parts.join("; ")))
}

fn volume_bound(level: Level, seed: u64, _: &RunOptions) -> Result<(bool, String)> {
    let per_k = level.pick(10_000, 100_000);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut violations = 0;
    let mut tightest: f64 = 0.0;
    for k in 3..=12 {
        let cap = k as f64 * std::f64::consts::PI / 4.0;
        for _ in 0..per_k {
            let area = hull_area_2d(&disk_set(&mut rng, 0.0, k))?;
            tightest = tightest.max(area / cap);
            if area > cap {
                violations += 1;
            }
        }
    }
    Ok((
        violations == 0,
        format!("{violations} violations; largest area / (k pi / 4) = {tightest:.4}"),
    ))
}

fn theorem_verification(level: Level, seed: u64, opts: &RunOptions) -> Result<(bool, String)> {
    let trials = level.pick(2_000, 10_000);
    let cases: &[(usize, f64, f64)] = match level {
        Level::Quick => &[(10, 0.5, 0.1), (6, 0.0, 0.5)],
        Level::Full => &[
            (10, 0.5, 0.1),
            (8, 0.0, 0.25),
            (12, 0.7, 0.1),
            (6, 0.0, 0.5),
        ],
    };
    let mut ok = true;
    let mut parts = Vec::new();
    for &(d, r, alpha) in cases {
        let report =
            montecarlo::verify_theorem(&BoundParams::new(d, r, alpha)?, trials, seed, opts)?;
        ok &= report.passed();
        parts.push(format!(
            "(d={d},r={r},a={alpha}) n={} p={:.4} lb={:.4}",
            report.n, report.estimate.p_hat, report.lower_bound.sharp
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn reproducibility(level: Level, seed: u64, opts: &RunOptions) -> Result<(bool, String)> {
    let trials = level.pick(1_000, 10_000);
    // one admissible-n run plus a low-dimensional one where failures occur
    let experiments = [
        Experiment::new(LayerConfig::new(12, 0.7)?, 20, trials, seed)?,
        Experiment::new(LayerConfig::new(3, 0.5)?, 10, trials, seed)?,
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for exp in &experiments {
        let counts = [1, 2, 8]
            .into_iter()
            .map(|jobs| {
                let o = RunOptions {
                    jobs: Some(jobs),
                    max_work: opts.max_work,
                };
                montecarlo::estimate_p_one_convex(exp, &o).map(|e| e.successes)
            })
            .collect::<Result<Vec<_>>>()?;
        ok &= counts.windows(2).all(|w| w[0] == w[1]);
        parts.push(format!("d={} n={}: {counts:?}", exp.cfg.d(), exp.n));
    }
    Ok((
        ok,
        format!("successes at 1/2/8 workers, {}", parts.join("; ")),
    ))
}
