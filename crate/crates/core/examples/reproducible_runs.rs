//! Trial `i` always draws from its own stream of the seed, so the count of
//! successes does not depend on how many worker threads run the trials.

use layerconvex::geometry::LayerConfig;
use layerconvex::montecarlo::{estimate_p_one_convex, Experiment, RunOptions};

fn main() -> layerconvex::Result<()> {
    let exp = Experiment::new(LayerConfig::new(3, 0.5)?, 10, 2_000, 42)?;
    for jobs in [1, 2, 4, 8] {
        let est = estimate_p_one_convex(&exp, &RunOptions::with_jobs(jobs))?;
        println!(
            "{jobs} workers: {} / {} in {:.3}s",
            est.successes, est.trials, est.wall_time
        );
    }
    Ok(())
}
