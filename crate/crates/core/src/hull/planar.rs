//! Planar convex hulls with exact orientation signs.
//!
//! These routines never touch the simplex code and serve as the ground
//! truth for [`super::is_one_convex`] in two dimensions.

use robust::{orient2d, Coord};

use super::PointSet;
use crate::{Error, Result};

fn planar_coords(set: &PointSet) -> Result<Vec<[f64; 2]>> {
    match set.dim() {
        Some(2) | None => Ok(set.iter().map(|p| [p.coords()[0], p.coords()[1]]).collect()),
        Some(d) => Err(Error::DimensionMismatch {
            expected: 2,
            got: d,
        }),
    }
}

/// Positive when `o -> a -> b` turns counter-clockwise, exact in sign.
fn orientation(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    orient2d(
        Coord { x: o[0], y: o[1] },
        Coord { x: a[0], y: a[1] },
        Coord { x: b[0], y: b[1] },
    )
}

/// Strict hull vertices in counter-clockwise order (monotone chain).
///
/// Collinear boundary points and repeated points are dropped.
pub fn convex_hull_2d(set: &PointSet) -> Result<Vec<[f64; 2]>> {
    let mut pts = planar_coords(set)?;
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return Ok(pts);
    }
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower
            && orientation(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0
        {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    Ok(hull)
}

/// True iff every input point is a strict vertex of the planar hull.
pub fn oracle_one_convex_2d(set: &PointSet) -> Result<bool> {
    let n = set.len();
    if n <= 1 {
        planar_coords(set)?;
        return Ok(true);
    }
    Ok(convex_hull_2d(set)?.len() == n)
}

/// Area of the planar convex hull by the shoelace formula.
pub fn hull_area_2d(set: &PointSet) -> Result<f64> {
    let hull = convex_hull_2d(set)?;
    if hull.len() < 3 {
        return Ok(0.0);
    }
    let twice: f64 = (0..hull.len())
        .map(|i| {
            let p = hull[i];
            let q = hull[(i + 1) % hull.len()];
            p[0] * q[1] - q[0] * p[1]
        })
        .sum();
    Ok(0.5 * twice.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn set(points: &[[f64; 2]]) -> PointSet {
        PointSet::from_coords(points.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn regular_polygon(k: usize) -> Vec<[f64; 2]> {
        (0..k)
            .map(|i| {
                let t = 2.0 * std::f64::consts::PI * i as f64 / k as f64;
                [t.cos(), t.sin()]
            })
            .collect()
    }

    #[test]
    fn triangle_and_collinear() {
        assert!(oracle_one_convex_2d(&set(&[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])).unwrap());
        assert!(!oracle_one_convex_2d(&set(&[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])).unwrap());
        // exact sign on a nearly-collinear triple
        let eps = f64::EPSILON;
        assert!(oracle_one_convex_2d(&set(&[[0.0, 0.0], [0.5, 0.5 + eps], [1.0, 1.0]])).unwrap());
    }

    #[test]
    fn pentagon_is_convex() {
        assert!(oracle_one_convex_2d(&set(&regular_polygon(5))).unwrap());
    }

    #[test]
    fn duplicates_and_small_sets() {
        assert!(!oracle_one_convex_2d(&set(&[[0.0, 0.0], [0.0, 0.0]])).unwrap());
        assert!(oracle_one_convex_2d(&set(&[[0.3, 0.1]])).unwrap());
        assert!(oracle_one_convex_2d(&set(&[[0.3, 0.1], [0.0, 1.0]])).unwrap());
        assert!(oracle_one_convex_2d(&PointSet::default()).unwrap());
    }

    #[test]
    fn rejects_other_dimensions() {
        let s = PointSet::from_coords(vec![vec![0.0, 0.0, 0.0]]).unwrap();
        assert!(oracle_one_convex_2d(&s).is_err());
        assert!(hull_area_2d(&s).is_err());
    }

    #[test]
    fn areas() {
        let square = set(&[[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
        assert_relative_eq!(hull_area_2d(&square).unwrap(), 1.0);
        assert_eq!(hull_area_2d(&set(&[[0.0, 0.0], [1.0, 3.0]])).unwrap(), 0.0);
        assert_eq!(
            hull_area_2d(&set(&[[0.0, 0.0], [1.0, 1.0], [3.0, 3.0]])).unwrap(),
            0.0
        );
        // 3 sqrt(3) / 4 at 40 digits
        assert_relative_eq!(
            hull_area_2d(&set(&regular_polygon(3))).unwrap(),
            1.299_038_105_676_658,
            max_relative = 1e-14
        );
    }
}
