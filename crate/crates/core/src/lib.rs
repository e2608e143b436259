//! Convex position of uniform random points in a spherical layer.
//!
//! Points are drawn uniformly from the layer `B_d \ rB_d` between the
//! concentric balls of radii `r` and `1`. A finite set is *1-convex* when
//! every one of its points is a vertex of the convex hull. This crate
//! provides:
//!
//! * [`geometry`]: exact uniform sampling in the layer and ball volumes,
//! * [`hull`]: convex-hull membership through a two-phase simplex
//!   feasibility solve, 1-convexity, and planar oracles,
//! * [`bounds`]: closed forms for the admissible-size bounds `f` and `g`,
//!   the union-bound probability guarantee and the asymptotic regimes,
//! * [`montecarlo`]: seeded, schedule-independent Monte Carlo estimation of
//!   the 1-convexity probability with Wilson intervals and KS utilities,
//! * [`validate`]: the property suites run by `layerconvex validate`,
//! * [`cli`]: the command-line front end and its JSON/CSV records.
//!
//! See the `examples/` directory of this crate for one runnable program per
//! capability.

pub mod bounds;
pub mod cli;
mod error;
pub mod geometry;
pub mod hull;
pub mod montecarlo;
pub mod validate;

pub use error::{Error, Result};
pub use geometry::{LayerConfig, Point};
pub use hull::{MembershipVerdict, PointSet};
