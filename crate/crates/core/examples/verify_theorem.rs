//! Pick the largest `n` below `f(d, r, alpha)` and check by simulation that
//! `n` layer points are in convex position with probability above `1 - alpha`.

use layerconvex::bounds::BoundParams;
use layerconvex::montecarlo::{verify_theorem, RunOptions};

fn main() -> layerconvex::Result<()> {
    let opts = RunOptions::default();
    for (d, r, alpha) in [(10, 0.5, 0.1), (8, 0.0, 0.25), (12, 0.7, 0.1)] {
        let report = verify_theorem(&BoundParams::new(d, r, alpha)?, 10_000, 20_240_917, &opts)?;
        let est = &report.estimate;
        println!(
            "d={d:>2} r={r} alpha={alpha}: f={:.3} n={} p_hat={:.4} ci=[{:.4}, {:.4}] target {:.2} -> {}",
            report.f,
            report.n,
            est.p_hat,
            est.ci_low,
            est.ci_high,
            report.target,
            if report.passed() { "ok" } else { "FAILED" }
        );
    }
    Ok(())
}
