//! Uniform sampling in the spherical layer `B_d \ rB_d` and ball volumes.
//!
//! A layer point is built from an isotropic direction (a normalized vector
//! of independent standard normal deviates) and a radius drawn by inverting
//! the radial law `P(|X| <= t) = (t^d - r^d) / (1 - r^d)`. The cost is
//! `O(d)` per point whatever the value of `r`.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest dimension accepted by [`LayerConfig`].
pub const MAX_DIMENSION: usize = 1_000_000;

/// Direction vectors shorter than this are discarded and redrawn.
const MIN_DIRECTION_NORM: f64 = 1e-300;

/// A position in `d`-dimensional Euclidean space.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() || coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidPoint);
        }
        Ok(Point(coords))
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }
}

impl From<Point> for Vec<f64> {
    fn from(p: Point) -> Self {
        p.0
    }
}

/// The layer between the balls of radii `r` and `1` in dimension `d`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LayerConfig {
    d: usize,
    r: f64,
}

impl LayerConfig {
    pub fn new(d: usize, r: f64) -> Result<Self> {
        if d == 0 || d > MAX_DIMENSION {
            return Err(Error::InvalidDimension {
                got: d,
                max: MAX_DIMENSION,
            });
        }
        if !(0.0..1.0).contains(&r) {
            return Err(Error::InvalidRadius(r));
        }
        Ok(LayerConfig { d, r })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    /// `1 - r^d`, accurate when `r^d` is close to one or underflows.
    pub fn shell_fraction(&self) -> f64 {
        one_minus_pow(self.r, self.d)
    }

    /// `ln(1 - r^d)`.
    pub fn ln_shell_fraction(&self) -> f64 {
        if self.r == 0.0 {
            return 0.0;
        }
        let x = self.d as f64 * self.r.ln();
        if x < -std::f64::consts::LN_2 {
            (-x.exp()).ln_1p()
        } else {
            (-x.exp_m1()).ln()
        }
    }
}

/// `1 - r^d` for `0 <= r < 1`; exact at `r = 0`.
pub(crate) fn one_minus_pow(r: f64, d: usize) -> f64 {
    if r == 0.0 {
        1.0
    } else {
        -(d as f64 * r.ln()).exp_m1()
    }
}

/// Natural log of the unit `d`-ball volume `pi^(d/2) / Gamma(d/2 + 1)`.
///
/// Uses the recurrence `gamma_d = gamma_(d-2) * 2 pi / d` from
/// `gamma_0 = 1` and `gamma_1 = 2`, accumulated in log space.
pub fn ln_ball_volume(d: usize) -> Result<f64> {
    if d == 0 {
        return Err(Error::InvalidDimension {
            got: d,
            max: MAX_DIMENSION,
        });
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let (mut acc, mut k) = if d.is_multiple_of(2) { (0.0, 2) } else { (2f64.ln(), 3) };
    while k <= d {
        acc += (two_pi / k as f64).ln();
        k += 2;
    }
    Ok(acc)
}

/// Volume `gamma_d` of the unit `d`-ball, so that `Vol(rB_d) = gamma_d r^d`.
pub fn ball_volume(d: usize) -> Result<f64> {
    Ok(ln_ball_volume(d)?.exp())
}

/// Volume of the layer, `gamma_d (1 - r^d)`.
pub fn layer_volume(cfg: &LayerConfig) -> f64 {
    // d is validated by the config
    ball_volume(cfg.d()).expect("valid dimension") * cfg.shell_fraction()
}

/// Radial CDF of a uniform layer point, `(t^d - r^d) / (1 - r^d)` on `[r, 1]`.
pub fn radial_cdf(t: f64, cfg: &LayerConfig) -> Result<f64> {
    let r = cfg.r();
    if !(r..=1.0).contains(&t) {
        return Err(Error::OutOfRange { t, r });
    }
    let d = cfg.d() as f64;
    let value = (t.powf(d) - r.powf(d)) / cfg.shell_fraction();
    Ok(value.clamp(0.0, 1.0))
}

/// Draws one point uniformly from the layer.
pub fn sample_layer_point<R: Rng + ?Sized>(cfg: &LayerConfig, rng: &mut R) -> Point {
    let d = cfg.d();
    let mut coords = vec![0.0; d];
    let norm = loop {
        for c in coords.iter_mut() {
            *c = rng.sample(StandardNormal);
        }
        let norm = coords.iter().map(|c| c * c).sum::<f64>().sqrt();
        if norm >= MIN_DIRECTION_NORM {
            break norm;
        }
    };
    let radius = sample_radius(cfg, rng.random::<f64>());
    let scale = radius / norm;
    for c in coords.iter_mut() {
        *c *= scale;
    }
    Point(coords)
}

/// Draws `n` independent layer points.
pub fn sample_layer_points<R: Rng + ?Sized>(
    cfg: &LayerConfig,
    n: usize,
    rng: &mut R,
) -> Vec<Point> {
    (0..n).map(|_| sample_layer_point(cfg, rng)).collect()
}

/// Inverse of [`radial_cdf`]: `(r^d + u (1 - r^d))^(1/d)`.
pub fn sample_radius(cfg: &LayerConfig, u: f64) -> f64 {
    let d = cfg.d() as f64;
    let r = cfg.r();
    let inner = if r == 0.0 { 0.0 } else { r.powf(d) };
    let base = inner + u * cfg.shell_fraction();
    let radius = if base <= 0.0 {
        0.0
    } else {
        (base.ln() / d).exp()
    };
    radius.clamp(r, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ball_volume_small_dimensions() {
        assert_relative_eq!(ball_volume(1).unwrap(), 2.0, max_relative = 1e-15);
        assert_relative_eq!(
            ball_volume(2).unwrap(),
            std::f64::consts::PI,
            max_relative = 1e-15
        );
        assert_relative_eq!(
            ball_volume(3).unwrap(),
            4.188_790_204_786_391,
            max_relative = 1e-14
        );
        assert!(ball_volume(0).is_err());
    }

    #[test]
    fn ball_volume_matches_gamma_closed_form() {
        // pi^5 / 5! for d = 10
        let pi5 = std::f64::consts::PI.powi(5);
        assert_relative_eq!(ball_volume(10).unwrap(), pi5 / 120.0, max_relative = 1e-13);
    }

    #[test]
    fn layer_volume_values() {
        let full = LayerConfig::new(2, 0.0).unwrap();
        assert_relative_eq!(
            layer_volume(&full),
            std::f64::consts::PI,
            max_relative = 1e-15
        );
        let half = LayerConfig::new(2, 0.5).unwrap();
        assert_relative_eq!(
            layer_volume(&half),
            2.356_194_490_192_345,
            max_relative = 1e-14
        );
        let thin = LayerConfig::new(10, 1.0 - 1e-9).unwrap();
        let v = layer_volume(&thin);
        assert!(v > 0.0 && v < 1e-8 * ball_volume(10).unwrap());
    }

    #[test]
    fn config_rejects_bad_inputs() {
        assert!(LayerConfig::new(0, 0.5).is_err());
        assert!(LayerConfig::new(3, 1.0).is_err());
        assert!(LayerConfig::new(3, -0.1).is_err());
        assert!(LayerConfig::new(3, f64::NAN).is_err());
        assert!(LayerConfig::new(MAX_DIMENSION + 1, 0.5).is_err());
    }

    #[test]
    fn radial_cdf_endpoints_and_value() {
        let cfg = LayerConfig::new(5, 0.5).unwrap();
        assert_eq!(radial_cdf(0.5, &cfg).unwrap(), 0.0);
        assert_eq!(radial_cdf(1.0, &cfg).unwrap(), 1.0);
        // (0.8^5 - 0.5^5) / (1 - 0.5^5), evaluated at 40 digits
        assert_relative_eq!(
            radial_cdf(0.8, &cfg).unwrap(),
            0.305_992_258_064_516_13,
            max_relative = 1e-14
        );
        assert!(radial_cdf(0.4, &cfg).is_err());
        assert!(radial_cdf(1.1, &cfg).is_err());
    }

    #[test]
    fn thin_layer_containment() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for d in [1, 2, 7, 100] {
            let cfg = LayerConfig::new(d, 0.999).unwrap();
            for _ in 0..2000 {
                let n = sample_layer_point(&cfg, &mut rng).norm();
                assert!((0.999 - 1e-12..=1.0 + 1e-12).contains(&n), "d={d} norm={n}");
            }
        }
    }

    #[test]
    fn high_dimension_radius_stays_in_layer() {
        let cfg = LayerConfig::new(100_000, 0.9).unwrap();
        assert_eq!(cfg.shell_fraction(), 1.0);
        for u in [0.0, 1e-300, 0.5, 1.0] {
            let rho = sample_radius(&cfg, u);
            assert!((0.9..=1.0).contains(&rho));
        }
    }

    #[test]
    fn r_zero_radius_at_u_zero() {
        let cfg = LayerConfig::new(3, 0.0).unwrap();
        assert_eq!(sample_radius(&cfg, 0.0), 0.0);
        assert_eq!(sample_radius(&cfg, 1.0), 1.0);
    }

    #[test]
    fn shell_fraction_precision_near_one() {
        let cfg = LayerConfig::new(3, 1e-6).unwrap();
        assert_eq!(cfg.shell_fraction(), 1.0 - 1e-18);
        let cfg = LayerConfig::new(2, 1.0 - 1e-12).unwrap();
        assert_relative_eq!(cfg.shell_fraction(), 2e-12, max_relative = 1e-3);
    }

    #[test]
    fn seeded_sequences_repeat() {
        let cfg = LayerConfig::new(4, 0.3).unwrap();
        let a = sample_layer_points(&cfg, 10, &mut ChaCha8Rng::seed_from_u64(9));
        let b = sample_layer_points(&cfg, 10, &mut ChaCha8Rng::seed_from_u64(9));
        assert_eq!(a, b);
    }
}
