//! Draw points uniformly from a spherical layer and compare their radii
//! with the exact radial distribution.
//!
//! cargo run --example sample_layer -- 5 0.5

use layerconvex::geometry::{layer_volume, radial_cdf, sample_layer_point, LayerConfig};
use layerconvex::montecarlo::{ks_critical_value, ks_statistic};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> layerconvex::Result<()> {
    let mut args = std::env::args().skip(1);
    let d: usize = args.next().map_or(5, |s| s.parse().expect("dimension"));
    let r: f64 = args
        .next()
        .map_or(0.5, |s| s.parse().expect("inner radius"));
    let cfg = LayerConfig::new(d, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);

    let samples = 50_000;
    let norms: Vec<f64> = (0..samples)
        .map(|_| sample_layer_point(&cfg, &mut rng).norm())
        .collect();

    println!("layer d={d} r={r}, volume {:.6}", layer_volume(&cfg));
    println!("{:>6} {:>10} {:>10}", "t", "empirical", "exact");
    for i in 0..=5 {
        let t = r + (1.0 - r) * i as f64 / 5.0;
        let below = norms.iter().filter(|&&x| x <= t).count() as f64 / samples as f64;
        println!("{t:>6.3} {below:>10.4} {:>10.4}", radial_cdf(t, &cfg)?);
    }

    let stat = ks_statistic(&norms, |t| radial_cdf(t, &cfg).unwrap())?;
    let crit = ks_critical_value(samples, 1e-4)?;
    println!("KS statistic {stat:.5}, critical value at 1e-4 {crit:.5}");
    Ok(())
}
