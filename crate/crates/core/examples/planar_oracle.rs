//! In the plane, the linear-programming test and a Graham scan must give the
//! same answer on every point set. Also checks hull areas against `k pi / 4`.

use layerconvex::geometry::{sample_layer_points, LayerConfig};
use layerconvex::hull::{convex_hull_2d, hull_area_2d, is_one_convex, oracle_one_convex_2d};
use layerconvex::PointSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> layerconvex::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cfg = LayerConfig::new(2, 0.3)?;

    let mut agree = 0;
    let mut convex = 0;
    let rounds = 2_000;
    for _ in 0..rounds {
        let k = rng.random_range(3..=10);
        let set = PointSet::new(sample_layer_points(&cfg, k, &mut rng))?;
        let lp = is_one_convex(&set, 1e-9)?;
        if lp == oracle_one_convex_2d(&set)? {
            agree += 1;
        }
        convex += lp as usize;
    }
    println!("{agree}/{rounds} agreements, {convex} sets in convex position");

    let disk = LayerConfig::new(2, 0.0)?;
    for k in [3, 6, 12] {
        let set = PointSet::new(sample_layer_points(&disk, k, &mut rng))?;
        let hull = convex_hull_2d(&set)?;
        let area = hull_area_2d(&set)?;
        println!(
            "k={k:>2}: {} hull vertices, area {area:.4} <= {:.4}",
            hull.len(),
            k as f64 * std::f64::consts::PI / 4.0
        );
    }
    Ok(())
}
