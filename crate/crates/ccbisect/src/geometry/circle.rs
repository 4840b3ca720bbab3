//! Area of the intersection of a disk with a polygon.

use super::aabb::Aabb;
use super::vector::Vec2;

/// Signed area of `disk(0, r) ∩ P` for a simple polygon `P` (positive when
/// `P` is CCW). Standard edge-sweep: each directed edge contributes the
/// disk-clipped triangle (origin, a, b), with straight parts as cross
/// products and outside parts as circular sectors.
pub fn circle_polygon_area(r: f64, poly: &[Vec2]) -> f64 {
    if poly.len() < 3 || r <= 0.0 {
        return 0.0;
    }
    let r2 = r * r;
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        acc += edge_term(r2, a, b);
    }
    acc
}

fn sector(r2: f64, x: Vec2, y: Vec2) -> f64 {
    0.5 * r2 * x.cross(&y).atan2(x.dot(&y))
}

fn edge_term(r2: f64, a: Vec2, b: Vec2) -> f64 {
    let a_in = a.norm_sq() <= r2;
    let b_in = b.norm_sq() <= r2;
    if a_in && b_in {
        return 0.5 * a.cross(&b);
    }
    // Segment/circle intersection: |a + t d|^2 = r^2.
    let d = b - a;
    let qa = d.norm_sq();
    if qa < 1e-300 {
        return 0.0;
    }
    let qb = a.dot(&d);
    let qc = a.norm_sq() - r2;
    let disc = qb * qb - qa * qc;
    if disc <= 0.0 {
        // No chord: the whole edge subtends a sector.
        return sector(r2, a, b);
    }
    let sq = disc.sqrt();
    let t1 = ((-qb - sq) / qa).clamp(0.0, 1.0);
    let t2 = ((-qb + sq) / qa).clamp(0.0, 1.0);
    if t2 <= t1 {
        return sector(r2, a, b);
    }
    let p1 = a + d * t1;
    let p2 = a + d * t2;
    sector(r2, a, p1) + 0.5 * p1.cross(&p2) + sector(r2, p2, b)
}

/// Area of `disk(c, r) ∩ B`.
pub fn circle_box_area(c: Vec2, r: f64, b: &Aabb<2>) -> f64 {
    // quick accept / reject
    let d2 = b.dist_sq_to_point(&c);
    if d2 >= r * r {
        return 0.0;
    }
    if b.max_dist_to_point(&c) <= r {
        return b.volume();
    }
    let corners: Vec<Vec2> = b.corners_ccw().iter().map(|p| *p - c).collect();
    circle_polygon_area(r, &corners).clamp(0.0, b.volume())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    use std::f64::consts::PI;

    #[test]
    fn box_inside_circle() {
        let b = Aabb::from_center_half(Vec2::new(0.1, 0.0), 0.2);
        assert!((circle_box_area(Vec2::new(0.0, 0.0), 2.0, &b) - b.volume()).abs() < 1e-14);
    }

    #[test]
    fn circle_inside_box() {
        let b = Aabb::from_center_half(Vec2::new(0.0, 0.0), 5.0);
        let area = circle_box_area(Vec2::new(0.3, -0.2), 1.0, &b);
        assert!((area - PI).abs() < 1e-12);
    }

    #[test]
    fn half_overlap() {
        // circle centered on a box edge, small enough to stay inside
        // the other three edges: exactly half the disk is inside.
        let b = Aabb::new(Vec2::new(0.0, -5.0), Vec2::new(10.0, 5.0));
        let area = circle_box_area(Vec2::new(0.0, 0.0), 1.0, &b);
        assert!((area - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn matches_monte_carlo() {
        let mut rng = StdRng::seed_from_u64(9);
        for _ in 0..30 {
            let c = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let r = rng.gen_range(0.2..1.5);
            let b = Aabb::new(
                Vec2::new(rng.gen_range(-1.5..0.0), rng.gen_range(-1.5..0.0)),
                Vec2::new(rng.gen_range(0.1..1.5), rng.gen_range(0.1..1.5)),
            );
            let exact = circle_box_area(c, r, &b);
            let n = 200_000;
            let mut hits = 0u32;
            for _ in 0..n {
                let p = Vec2::new(
                    rng.gen_range(b.lo[0]..b.hi[0]),
                    rng.gen_range(b.lo[1]..b.hi[1]),
                );
                if p.dist(&c) <= r {
                    hits += 1;
                }
            }
            let mc = b.volume() * hits as f64 / n as f64;
            assert!(
                (exact - mc).abs() < 4e-3 * b.volume().max(1.0),
                "exact {exact} mc {mc}"
            );
        }
    }
}
