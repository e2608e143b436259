//! Closed-form bounds on the number of layer points that are 1-convex
//! with probability above `1 - alpha`.
//!
//! * `f = sqrt(alpha 2^d (1 - r^d))` is the union-bound threshold: any
//!   `n < f` gives `P(A_n) >= 1 - n^2 / (2^d (1 - r^d)) > 1 - alpha`.
//! * `g = (r / sqrt(1 - r^2))^d (sqrt(1 + 2 alpha (1 - r^2)^(d/2) / r^(2d)) - 1)`
//!   is the earlier threshold, defined for `0 < r < 1` only.
//!
//! Quantities whose exponent grows with `d` are carried as natural logs and
//! exponentiated only on request, so `d` in the thousands is fine.

use serde::{Deserialize, Serialize};

use crate::geometry::{one_minus_pow, LayerConfig};
use crate::{Error, Result};

/// Root in `(0, 1)` of `r^4 + r^2 - 1 = 0`, i.e. `sqrt((sqrt(5) - 1) / 2)`.
pub const CRITICAL_RADIUS: f64 = 0.786_151_377_757_423_3;

/// Half-width of the band around [`CRITICAL_RADIUS`] classified as critical.
pub const CRITICAL_BAND: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    d: usize,
    r: f64,
    alpha: f64,
}

impl BoundParams {
    pub fn new(d: usize, r: f64, alpha: f64) -> Result<Self> {
        LayerConfig::new(d, r)?;
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::InvalidAlpha(alpha));
        }
        Ok(BoundParams { d, r, alpha })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn layer(&self) -> LayerConfig {
        LayerConfig::new(self.d, self.r).expect("validated on construction")
    }

    fn require_positive_r(&self) -> Result<()> {
        if self.r > 0.0 {
            Ok(())
        } else {
            Err(Error::RadiusZeroForG(self.r))
        }
    }
}

/// `ln(1 + e^x)` without overflow.
fn softplus(x: f64) -> f64 {
    x.max(0.0) + (-x.abs()).exp().ln_1p()
}

/// `ln f = (ln alpha + d ln 2 + ln(1 - r^d)) / 2`.
pub fn ln_bound_f(p: &BoundParams) -> f64 {
    0.5 * (p.alpha.ln() + p.d as f64 * std::f64::consts::LN_2 + p.layer().ln_shell_fraction())
}

/// The admissible-size bound `f = sqrt(alpha 2^d (1 - r^d))`.
pub fn bound_f(p: &BoundParams) -> f64 {
    if p.d < 1000 {
        (p.alpha * 2f64.powi(p.d as i32) * one_minus_pow(p.r, p.d)).sqrt()
    } else {
        ln_bound_f(p).exp()
    }
}

pub fn log2_bound_f(p: &BoundParams) -> f64 {
    ln_bound_f(p) / std::f64::consts::LN_2
}

/// Largest integer strictly below `f`, or `None` when that is zero or does
/// not fit in a `u64`.
pub fn admissible_n(p: &BoundParams) -> Option<u64> {
    let f = bound_f(p);
    if !f.is_finite() || f >= u64::MAX as f64 {
        return None;
    }
    let mut n = f.ceil() as u64 - 1;
    // n^2 < alpha 2^d (1 - r^d) must hold for the guarantee
    let budget = p.alpha * 2f64.powi(p.d.min(1023) as i32) * one_minus_pow(p.r, p.d);
    while n > 0 && p.d < 1000 && (n as f64) * (n as f64) >= budget {
        n -= 1;
    }
    (n >= 1).then_some(n)
}

/// `ln g` via the rationalized form
/// `g = 2 alpha / (r^d (sqrt(1 + 2 alpha q^d) + 1))`, `q = sqrt(1 - r^2) / r^2`.
pub fn ln_bound_g(p: &BoundParams) -> Result<f64> {
    p.require_positive_r()?;
    let d = p.d as f64;
    let r = p.r;
    let ln_q = 0.5 * ((1.0 - r) * (1.0 + r)).ln() - 2.0 * r.ln();
    let ln_inner = (2.0 * p.alpha).ln() + d * ln_q;
    // ln(sqrt(1 + e^L) + 1) = softplus(softplus(L) / 2)
    let ln_den = softplus(0.5 * softplus(ln_inner));
    Ok((2.0 * p.alpha).ln() - d * r.ln() - ln_den)
}

/// The prior bound `g`, evaluated through [`ln_bound_g`].
pub fn bound_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_bound_g(p)?.exp())
}

pub fn log2_bound_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_bound_g(p)? / std::f64::consts::LN_2)
}

/// `g` evaluated literally as written, without the rationalization.
///
/// `sqrt(1 + t) - 1` is taken as `expm1(ln1p(t) / 2)` so that small `t`
/// keeps full precision. May overflow or underflow for large `d`.
pub fn bound_g_direct(p: &BoundParams) -> Result<f64> {
    p.require_positive_r()?;
    let d = p.d as f64;
    let r = p.r;
    let one_minus_r2 = (1.0 - r) * (1.0 + r);
    let lead = (r / one_minus_r2.sqrt()).powf(d);
    let t = 2.0 * p.alpha * one_minus_r2.powf(d / 2.0) / r.powf(2.0 * d);
    Ok(lead * (0.5 * t.ln_1p()).exp_m1())
}

/// Union-bound lower bounds on `P(A_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbLowerBound {
    /// `1 - n (n - 1) / (2^d (1 - r^d))`.
    pub sharp: f64,
    /// `1 - n^2 / (2^d (1 - r^d))`.
    pub simplified: f64,
    /// The sharp bound is nonpositive and says nothing.
    pub vacuous: bool,
}

pub fn prob_lower_bound(n: u64, cfg: &LayerConfig) -> Result<ProbLowerBound> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be at least 1".into()));
    }
    let ln_den = cfg.d() as f64 * std::f64::consts::LN_2 + cfg.ln_shell_fraction();
    let nf = n as f64;
    let term = |numer: f64| {
        if numer == 0.0 {
            0.0
        } else if cfg.d() < 1000 {
            numer / (2f64.powi(cfg.d() as i32) * cfg.shell_fraction())
        } else {
            (numer.ln() - ln_den).exp()
        }
    };
    let sharp = 1.0 - term(nf * (nf - 1.0));
    let simplified = 1.0 - term(nf * nf);
    Ok(ProbLowerBound {
        sharp,
        simplified,
        vacuous: sharp <= 0.0,
    })
}

/// Asymptotic regime of `g` as `d` grows with `r` and `alpha` fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Regime {
    /// `r > r*`: `g ~ alpha / r^d`.
    Supercritical,
    /// `r = r*`: `g ~ (sqrt(1 + 2 alpha) - 1) / r^d`.
    Critical,
    /// `r < r*`: `g ~ sqrt(2 alpha) / (1 - r^2)^(d/4)`.
    Subcritical,
}

impl Regime {
    pub fn label(&self) -> &'static str {
        match self {
            Regime::Supercritical => "SUPERCRITICAL",
            Regime::Critical => "CRITICAL",
            Regime::Subcritical => "SUBCRITICAL",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeClass {
    pub case: Regime,
    pub r_star: f64,
}

pub fn classify_regime(r: f64) -> Result<RegimeClass> {
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusZeroForG(r));
    }
    let case = if (r - CRITICAL_RADIUS).abs() <= CRITICAL_BAND {
        Regime::Critical
    } else if r > CRITICAL_RADIUS {
        Regime::Supercritical
    } else {
        Regime::Subcritical
    };
    Ok(RegimeClass {
        case,
        r_star: CRITICAL_RADIUS,
    })
}

/// `ln` of the leading-order form of `g` for the regime of `r`.
pub fn ln_asymptotic_g(p: &BoundParams) -> Result<f64> {
    let regime = classify_regime(p.r)?.case;
    let d = p.d as f64;
    let a = p.alpha;
    Ok(match regime {
        Regime::Supercritical => a.ln() - d * p.r.ln(),
        Regime::Critical => (0.5 * (2.0 * a).ln_1p()).exp_m1().ln() - d * p.r.ln(),
        Regime::Subcritical => 0.5 * (2.0 * a).ln() - 0.25 * d * ((1.0 - p.r) * (1.0 + p.r)).ln(),
    })
}

pub fn asymptotic_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_asymptotic_g(p)?.exp())
}

/// `ln` of the leading-order form of `f / g` for the regime of `r`.
pub fn ln_asymptotic_ratio_f_over_g(p: &BoundParams) -> Result<f64> {
    let regime = classify_regime(p.r)?.case;
    let d = p.d as f64;
    let a = p.alpha;
    let sqrt2 = std::f64::consts::SQRT_2;
    Ok(match regime {
        Regime::Supercritical => -0.5 * a.ln() + d * (p.r * sqrt2).ln(),
        Regime::Critical => {
            ((1.0 + 2.0 * a).sqrt() + 1.0).ln() - (2.0 * a.sqrt()).ln()
                + 0.5 * d * (5f64.sqrt() - 1.0).ln()
        }
        Regime::Subcritical => {
            -0.5 * std::f64::consts::LN_2
                + 0.5 * d * (2.0 * ((1.0 - p.r) * (1.0 + p.r)).sqrt()).ln()
        }
    })
}

pub fn asymptotic_ratio_f_over_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_asymptotic_ratio_f_over_g(p)?.exp())
}

pub fn log2_asymptotic_ratio_f_over_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_asymptotic_ratio_f_over_g(p)? / std::f64::consts::LN_2)
}

/// `ln(f / g)` from the exact closed forms.
pub fn ln_ratio_f_over_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_bound_f(p) - ln_bound_g(p)?)
}

pub fn ratio_f_over_g(p: &BoundParams) -> Result<f64> {
    Ok(ln_ratio_f_over_g(p)?.exp())
}
