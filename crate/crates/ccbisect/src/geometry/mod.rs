//! Geometric primitives for d = 2, 3: vectors, rotations, shape membership,
//! convex clipping, star-fan decomposition and placed-shape mass fractions.

mod aabb;
mod circle;
mod clip;
mod cutter;
mod placed;
pub(crate) mod placement;
mod polytope;
mod rotation;
mod starfan;
mod vector;

pub use aabb::Aabb;
pub use circle::circle_polygon_area;
pub use clip::{clip_convex, clip_halfplane, clip_to_box, polygon_box_area, shoelace};
pub use cutter::CutterSpec;
pub use placed::{BoxClass, PlacedQuery};
pub use placement::Placement;
pub use polytope::{clip_polytope, cube_polytope, polytope_volume, Polytope};
pub use rotation::Rotation;
pub use starfan::star_fan;
pub use vector::{Vec2, Vec3, Vector};

use crate::error::Result;

/// Membership test for a point against a placed cutter.
///
/// A `HalfSpace` placement tests `<x, n> >= offset`; a `Body` placement maps
/// `x` back into the cutter's local frame and tests the base shape.
pub fn contains<const D: usize>(
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
    x: Vector<D>,
) -> Result<bool> {
    Ok(PlacedQuery::new(cutter, placement)?.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn unit_square_verts() -> Vec<Vec2> {
        vec![
            Vec2::new(-0.5, -0.5),
            Vec2::new(0.5, -0.5),
            Vec2::new(0.5, 0.5),
            Vec2::new(-0.5, 0.5),
        ]
    }

    #[test]
    fn contains_disk_scaled() {
        let cutter = CutterSpec::Disk { radius: 1.0 };
        let p = Placement::body(Vec2::new(0.0, 0.0), 2.0, Rotation::identity(), false);
        assert!(contains(&cutter, &p, Vec2::new(1.5, 0.0)).unwrap());
        assert!(!contains(&cutter, &p, Vec2::new(2.5, 0.0)).unwrap());
    }

    #[test]
    fn contains_axis_box_edge() {
        let cutter = CutterSpec::AxisBox {
            half_extents: Vector([1.0, 1.0]),
        };
        let p = Placement::body(Vec2::new(0.0, 0.0), 1.0, Rotation::identity(), false);
        assert!(!contains(&cutter, &p, Vec2::new(1.01, 0.0)).unwrap());
        assert!(contains(&cutter, &p, Vec2::new(0.99, 0.0)).unwrap());
    }

    #[test]
    fn contains_rotated_square_matches_inverse_transform_oracle() {
        // Point-in-rotated-square checked against rotating the point back.
        let cutter = CutterSpec::star_polygon(unit_square_verts(), Vec2::new(0.0, 0.0));
        let theta = std::f64::consts::FRAC_PI_4;
        let p = Placement::body(Vec2::new(0.0, 0.0), 1.0, Rotation::from_angle(theta), false);
        let x = Vec2::new(0.7, 0.0);
        assert!(contains(&cutter, &p, x).unwrap());

        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..500 {
            let x = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let got = contains(&cutter, &p, x).unwrap();
            let back = Rotation::from_angle(-theta).apply(x);
            let expect = back[0].abs() <= 0.5 && back[1].abs() <= 0.5;
            // Skip points within float noise of the boundary.
            if (back[0].abs() - 0.5).abs() < 1e-9 || (back[1].abs() - 0.5).abs() < 1e-9 {
                continue;
            }
            assert_eq!(got, expect, "x = {x:?}");
        }
    }

    #[test]
    fn contains_rigid_motion_invariant() {
        let cutter = CutterSpec::star_polygon(unit_square_verts(), Vec2::new(0.1, 0.0));
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let c = Vec2::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let s = rng.gen_range(0.3..2.0);
            let th = rng.gen_range(0.0..std::f64::consts::TAU);
            let x = Vec2::new(rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
            let p0 = Placement::body(c, s, Rotation::from_angle(th), false);

            // Apply an extra rigid motion to both placement and query point.
            let dth = rng.gen_range(0.0..std::f64::consts::TAU);
            let shift = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let rot = Rotation::from_angle(dth);
            let p1 = Placement::body(
                rot.apply(c) + shift,
                s,
                rot.compose(&Rotation::from_angle(th)),
                false,
            );
            let x1 = rot.apply(x) + shift;

            // Boundary-grazing points can flip; compare via a safe margin.
            let inner = PlacedQuery::new(&cutter, &p0).unwrap();
            let d_local = inner.boundary_margin(x);
            if d_local.abs() < 1e-9 {
                continue;
            }
            assert_eq!(
                contains(&cutter, &p0, x).unwrap(),
                contains(&cutter, &p1, x1).unwrap()
            );
        }
    }
}
