//! Estimate the probability that `n` uniform layer points are in convex
//! position, with a 95% Wilson interval and the union lower bound.
//!
//! cargo run --release --example estimate_probability -- 6 0.3

use layerconvex::bounds::prob_lower_bound;
use layerconvex::geometry::LayerConfig;
use layerconvex::montecarlo::{estimate_p_one_convex, Experiment, RunOptions};

fn main() -> layerconvex::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(6, |s| s.parse().expect("dimension"));
    let r: f64 = args
        .next()
        .map_or(0.3, |s| s.parse().expect("inner radius"));
    let cfg = LayerConfig::new(d, r)?;
    let opts = RunOptions::default();

    println!(
        "{:>4} {:>8} {:>18} {:>10}",
        "n", "p_hat", "95% interval", "bound"
    );
    for n in [d + 1, d + 3, 2 * d, 3 * d, 5 * d] {
        let exp = Experiment::new(cfg, n, 5_000, 11)?;
        let est = estimate_p_one_convex(&exp, &opts)?;
        let lb = prob_lower_bound(n as u64, &cfg)?;
        println!(
            "{n:>4} {:>8.4} [{:.4}, {:.4}] {:>10.4}",
            est.p_hat, est.ci_low, est.ci_high, lb.sharp
        );
    }
    Ok(())
}
