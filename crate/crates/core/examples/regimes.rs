//! Compare `g` with its large-dimension approximation on each side of the
//! critical radius, and watch `f / g` grow.

use layerconvex::bounds::{
    classify_regime, ln_asymptotic_g, ln_asymptotic_ratio_f_over_g, ln_bound_g, ln_ratio_f_over_g,
    BoundParams, CRITICAL_RADIUS,
};

fn main() -> layerconvex::Result<()> {
    println!("critical radius {CRITICAL_RADIUS:.16}");
    for r in [0.9, CRITICAL_RADIUS, 0.5] {
        println!("\nr = {r:.6} ({})", classify_regime(r)?.case);
        println!(
            "{:>6} {:>14} {:>14} {:>14}",
            "d", "g/approx", "(f/g)/approx", "log2 (f/g)"
        );
        for d in [25, 50, 100, 200, 400, 800] {
            let p = BoundParams::new(d, r, 0.1)?;
            let g = (ln_bound_g(&p)? - ln_asymptotic_g(&p)?).exp();
            let ln_fg = ln_ratio_f_over_g(&p)?;
            let fg = (ln_fg - ln_asymptotic_ratio_f_over_g(&p)?).exp();
            println!(
                "{d:>6} {g:>14.8} {fg:>14.8} {:>14.3}",
                ln_fg / std::f64::consts::LN_2
            );
        }
    }
    Ok(())
}
