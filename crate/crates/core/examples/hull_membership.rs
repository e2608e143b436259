//! Decide whether a point lies in the convex hull of a finite set, and look
//! at the certificate that comes back with each answer.

use layerconvex::hull::{first_non_vertex, in_convex_hull, is_one_convex, MembershipVerdict};
use layerconvex::{Point, PointSet};

const TOL: f64 = 1e-9;

fn main() -> layerconvex::Result<()> {
    let tetra = PointSet::from_coords(vec![
        vec![0.0, 0.0, 0.0],
        vec![1.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.0, 0.0, 1.0],
    ])?;

    for coords in [
        vec![0.2, 0.2, 0.2],
        vec![0.5, 0.5, 0.5],
        vec![1.0, 0.0, 0.0],
    ] {
        let x = Point::new(coords.clone())?;
        let verdict = in_convex_hull(&x, &tetra, TOL)?;
        match &verdict {
            MembershipVerdict::Inside { weights } => {
                println!("{coords:?} inside, weights {weights:.4?}")
            }
            MembershipVerdict::Outside { direction, margin } => {
                println!(
                    "{coords:?} outside, separating direction {direction:.4?} margin {margin:.4}"
                )
            }
        }
        assert!(verdict.verify(&x, &tetra, TOL));
    }

    println!(
        "tetrahedron vertices in convex position: {}",
        is_one_convex(&tetra, TOL)?
    );

    let mut with_centroid = tetra.clone();
    with_centroid.push(Point::new(vec![0.25, 0.25, 0.25])?)?;
    println!(
        "adding the centroid: in convex position {}, first interior index {:?}",
        is_one_convex(&with_centroid, TOL)?,
        first_non_vertex(&with_centroid, TOL)?
    );
    Ok(())
}
