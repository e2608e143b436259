//! Print the two thresholds `f` and `g` and their ratio across dimensions,
//! along with the largest sample size that keeps the guarantee.
//!
//! cargo run --example bounds_table -- 0.5 0.1

use layerconvex::bounds::{
    admissible_n, classify_regime, ln_ratio_f_over_g, log2_bound_f, log2_bound_g, BoundParams,
};

fn main() -> layerconvex::Result<()> {
    let mut args = std::env::args().skip(1);
    let r: f64 = args
        .next()
        .map_or(0.5, |s| s.parse().expect("inner radius"));
    let alpha: f64 = args.next().map_or(0.1, |s| s.parse().expect("alpha"));

    if r > 0.0 {
        println!("r={r} alpha={alpha}, regime {}", classify_regime(r)?.case);
    }
    println!(
        "{:>6} {:>12} {:>12} {:>14} {:>12}",
        "d", "log2 f", "log2 g", "log2 (f/g)", "n"
    );
    for d in [2, 5, 10, 20, 50, 100, 200, 500, 1000] {
        let p = BoundParams::new(d, r, alpha)?;
        let (g, ratio) = if r > 0.0 {
            (
                format!("{:.4}", log2_bound_g(&p)?),
                format!("{:.4}", ln_ratio_f_over_g(&p)? / std::f64::consts::LN_2),
            )
        } else {
            ("-".into(), "-".into())
        };
        let n = match admissible_n(&p) {
            Some(n) => n.to_string(),
            None if log2_bound_f(&p) >= 64.0 => "beyond u64".to_string(),
            None => "none".to_string(),
        };
        println!(
            "{d:>6} {:>12.4} {g:>12} {ratio:>14} {n:>12}",
            log2_bound_f(&p)
        );
    }
    Ok(())
}
