//! Convex-hull membership and 1-convexity of finite point sets.
//!
//! Membership of `x` in `conv(Y_1, ..., Y_m)` is the feasibility of
//! `{ lambda >= 0, sum lambda_j = 1, sum lambda_j Y_j = x }`, decided by the
//! two-phase simplex in [`simplex`]. Every verdict carries a certificate:
//! convex weights when inside, a separating direction when outside.
//!
//! Points lying exactly on the boundary of the hull of the others count as
//! inside, and so do repeated points. A set with a repeated point is
//! therefore never 1-convex.

pub mod planar;
pub mod simplex;

use serde::{Deserialize, Serialize};

use crate::geometry::Point;
use crate::{Error, Result};
use simplex::LpOutcome;

pub use planar::{convex_hull_2d, hull_area_2d, oracle_one_convex_2d};

pub const MIN_TOLERANCE: f64 = 1e-12;
pub const MAX_TOLERANCE: f64 = 1e-6;

/// An ordered collection of points of one common dimension.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(first) = points.first() {
            let d = first.dim();
            if let Some(bad) = points.iter().find(|p| p.dim() != d) {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: bad.dim(),
                });
            }
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: Vec<Vec<f64>>) -> Result<Self> {
        let points = coords
            .into_iter()
            .map(Point::new)
            .collect::<Result<Vec<_>>>()?;
        Self::new(points)
    }

    /// Common dimension, or `None` for the empty set.
    pub fn dim(&self) -> Option<usize> {
        self.points.first().map(Point::dim)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn push(&mut self, p: Point) -> Result<()> {
        if let Some(d) = self.dim() {
            if p.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: p.dim(),
                });
            }
        }
        self.points.push(p);
        Ok(())
    }

    /// The set with the point at `index` removed.
    pub fn without(&self, index: usize) -> PointSet {
        let mut points = self.points.clone();
        points.remove(index);
        PointSet { points }
    }
}

impl From<PointSet> for Vec<Point> {
    fn from(s: PointSet) -> Self {
        s.points
    }
}

/// Outcome of a hull membership query, with its certificate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum MembershipVerdict {
    /// Convex weights, one per set member, reproducing the query point.
    Inside { weights: Vec<f64> },
    /// `<direction, x> >= max_j <direction, Y_j> + margin` with `margin > 0`.
    Outside { direction: Vec<f64>, margin: f64 },
}

impl MembershipVerdict {
    pub fn is_inside(&self) -> bool {
        matches!(self, MembershipVerdict::Inside { .. })
    }

    /// Re-checks the certificate against the query.
    ///
    /// Inside: weights `>= -tol`, summing to one within `10 tol`, and
    /// reproducing `x` within `10 tol` per coordinate. Outside: the
    /// direction separates `x` from every member by more than `tol`.
    pub fn verify(&self, x: &Point, set: &PointSet, tol: f64) -> bool {
        match self {
            MembershipVerdict::Inside { weights } => {
                if weights.len() != set.len() || weights.iter().any(|&w| w < -tol) {
                    return false;
                }
                let sum: f64 = weights.iter().sum();
                if (sum - 1.0).abs() > 10.0 * tol {
                    return false;
                }
                x.coords().iter().enumerate().all(|(k, &xk)| {
                    let combo: f64 = weights
                        .iter()
                        .zip(set.iter())
                        .map(|(w, y)| w * y.coords()[k])
                        .sum();
                    (combo - xk).abs() <= 10.0 * tol
                })
            }
            MembershipVerdict::Outside { direction, .. } => {
                if direction.len() != x.dim() {
                    return false;
                }
                let at_x = dot(direction, x.coords());
                let best = set
                    .iter()
                    .map(|y| dot(direction, y.coords()))
                    .fold(f64::NEG_INFINITY, f64::max);
                at_x > best + tol
            }
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn check_tolerance(tol: f64) -> Result<()> {
    if (MIN_TOLERANCE..=MAX_TOLERANCE).contains(&tol) {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(tol))
    }
}

/// Decides whether `x` lies in the convex hull of `members`.
fn decide(x: &[f64], members: &[&[f64]], tol: f64) -> Result<MembershipVerdict> {
    let d = x.len();
    if members.is_empty() {
        let mut direction = vec![0.0; d];
        direction[0] = 1.0;
        return Ok(MembershipVerdict::Outside {
            direction,
            margin: f64::INFINITY,
        });
    }
    let m = members.len();
    let mut a: Vec<Vec<f64>> = (0..d)
        .map(|k| members.iter().map(|y| y[k]).collect())
        .collect();
    a.push(vec![1.0; m]);
    let mut b = x.to_vec();
    b.push(1.0);

    match simplex::solve(&a, &b, &vec![0.0; m], tol)? {
        LpOutcome::Optimal { x: weights, .. } => Ok(MembershipVerdict::Inside { weights }),
        LpOutcome::Infeasible { farkas, .. } => {
            let direction = farkas[..d].to_vec();
            let best = members
                .iter()
                .map(|y| dot(&direction, y))
                .fold(f64::NEG_INFINITY, f64::max);
            let margin = dot(&direction, x) - best;
            Ok(MembershipVerdict::Outside { direction, margin })
        }
        // zero objective over a bounded region
        LpOutcome::Unbounded => unreachable!("feasibility program cannot be unbounded"),
    }
}

/// Decides `x ∈ conv(set)` and returns a verifiable certificate.
///
/// `tol` must lie in `[1e-12, 1e-6]`; a least L1 violation of the
/// combination constraints at most `tol` counts as inside.
pub fn in_convex_hull(x: &Point, set: &PointSet, tol: f64) -> Result<MembershipVerdict> {
    check_tolerance(tol)?;
    if let Some(d) = set.dim() {
        if d != x.dim() {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: x.dim(),
            });
        }
    }
    let members: Vec<&[f64]> = set.iter().map(Point::coords).collect();
    decide(x.coords(), &members, tol)
}

/// Index of the first point lying in the hull of the others, if any.
pub fn first_non_vertex(set: &PointSet, tol: f64) -> Result<Option<usize>> {
    check_tolerance(tol)?;
    let coords: Vec<&[f64]> = set.iter().map(Point::coords).collect();
    if coords.len() <= 1 {
        return Ok(None);
    }
    let mut others: Vec<&[f64]> = Vec::with_capacity(coords.len() - 1);
    for i in 0..coords.len() {
        others.clear();
        others.extend(
            coords
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, c)| *c),
        );
        if decide(coords[i], &others, tol)?.is_inside() {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// True iff every point of `set` lies outside the hull of the others.
///
/// Sets with at most one point are 1-convex.
pub fn is_one_convex(set: &PointSet, tol: f64) -> Result<bool> {
    Ok(first_non_vertex(set, tol)?.is_none())
}
