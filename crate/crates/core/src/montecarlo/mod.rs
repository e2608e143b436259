//! Seeded Monte Carlo estimation of the probability that `n` uniform layer
//! points are 1-convex.
//!
//! Trial `i` draws its points from its own ChaCha8 stream: the master seed
//! fixes the key and `i` selects the stream. Trials never share generator
//! state, and the per-trial verdicts are combined by summing success counts,
//! so results do not depend on the number of workers or on scheduling.

pub mod stats;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundParams, ProbLowerBound};
use crate::geometry::{sample_layer_points, LayerConfig};
use crate::hull::{self, PointSet};
use crate::{Error, Result};
pub use stats::{ks_critical_value, ks_statistic, wilson_interval, Interval, Z_95};

/// Default cap on `trials * n * d`.
pub const DEFAULT_MAX_WORK: u128 = 100_000_000_000;

/// Default membership tolerance for trials.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Experiment {
    pub cfg: LayerConfig,
    /// Points per trial.
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub tol: f64,
}

impl Experiment {
    pub fn new(cfg: LayerConfig, n: usize, trials: u64, seed: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be at least 1".into()));
        }
        if trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        Ok(Experiment {
            cfg,
            n,
            trials,
            seed,
            tol: DEFAULT_TOLERANCE,
        })
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn work_units(&self) -> u128 {
        self.trials as u128 * self.n as u128 * self.cfg.d() as u128
    }
}

/// Execution knobs that do not affect results.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    pub max_work: u128,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            jobs: None,
            max_work: DEFAULT_MAX_WORK,
        }
    }
}

impl RunOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        RunOptions {
            jobs: Some(jobs),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MCEstimate {
    pub successes: u64,
    pub trials: u64,
    pub p_hat: f64,
    /// 95% Wilson interval.
    pub ci_low: f64,
    pub ci_high: f64,
    /// Seconds.
    pub wall_time: f64,
}

impl MCEstimate {
    pub fn from_counts(successes: u64, trials: u64, wall_time: f64) -> Result<Self> {
        let iv = wilson_interval(successes, trials, Z_95)?;
        Ok(MCEstimate {
            successes,
            trials,
            p_hat: successes as f64 / trials as f64,
            ci_low: iv.low,
            ci_high: iv.high,
            wall_time,
        })
    }

    pub fn half_width(&self) -> f64 {
        0.5 * (self.ci_high - self.ci_low)
    }
}

/// Generator for trial `trial` under `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// The point set drawn in trial `trial` of `exp`.
pub fn trial_points(exp: &Experiment, trial: u64) -> PointSet {
    let mut rng = trial_rng(exp.seed, trial);
    PointSet::new(sample_layer_points(&exp.cfg, exp.n, &mut rng)).expect("uniform dimension")
}

/// Runs every trial of `exp` through `verdict` and counts successes.
pub fn simulate<F>(exp: &Experiment, opts: &RunOptions, verdict: F) -> Result<MCEstimate>
where
    F: Fn(&PointSet) -> Result<bool> + Sync,
{
    let requested = exp.work_units();
    if requested > opts.max_work {
        return Err(Error::ResourceCap {
            requested,
            cap: opts.max_work,
        });
    }
    let start = Instant::now();
    let count = || {
        (0..exp.trials)
            .into_par_iter()
            .map(|t| verdict(&trial_points(exp, t)).map(u64::from))
            .try_reduce(|| 0, |a, b| Ok(a + b))
    };
    let successes = match opts.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?
            .install(count)?,
        None => count()?,
    };
    MCEstimate::from_counts(successes, exp.trials, start.elapsed().as_secs_f64())
}

/// Estimates `P(A_n)` with the simplex-based 1-convexity test.
pub fn estimate_p_one_convex(exp: &Experiment, opts: &RunOptions) -> Result<MCEstimate> {
    let tol = exp.tol;
    if !(hull::MIN_TOLERANCE..=hull::MAX_TOLERANCE).contains(&tol) {
        return Err(Error::InvalidTolerance(tol));
    }
    simulate(exp, opts, |set| hull::is_one_convex(set, tol))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub params: BoundParams,
    pub f: f64,
    /// Largest integer strictly below `f`.
    pub n: u64,
    pub target: f64,
    pub estimate: MCEstimate,
    pub lower_bound: ProbLowerBound,
    /// Wilson lower limit above `1 - alpha - half_width`.
    pub meets_target: bool,
    /// Wilson lower limit above the sharp union bound minus `half_width`.
    pub meets_union_bound: bool,
    /// `p_hat - (1 - alpha)`.
    pub slack: f64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.meets_target && self.meets_union_bound
    }
}

/// Simulates at the largest `n` strictly below `f` and checks that the
/// estimate does not contradict `P(A_n) > 1 - alpha`.
///
/// A failure here points at a bug rather than bad luck: the inequality is
/// proven, and the check allows one interval half-width of slack.
pub fn verify_theorem(
    p: &BoundParams,
    trials: u64,
    seed: u64,
    opts: &RunOptions,
) -> Result<TheoremReport> {
    let f = bounds::bound_f(p);
    if f < 2.0 {
        return Err(Error::NoAdmissibleN(f));
    }
    let n = bounds::admissible_n(p).ok_or(Error::NoAdmissibleN(f))?;
    let exp = Experiment::new(p.layer(), n as usize, trials, seed)?;
    let estimate = estimate_p_one_convex(&exp, opts)?;
    let lower_bound = bounds::prob_lower_bound(n, &p.layer())?;
    let target = 1.0 - p.alpha();
    let half = estimate.half_width();
    Ok(TheoremReport {
        params: *p,
        f,
        n,
        target,
        estimate,
        lower_bound,
        meets_target: estimate.ci_low > target - half,
        meets_union_bound: estimate.ci_low > lower_bound.sharp - half,
        slack: estimate.p_hat - target,
    })
}
