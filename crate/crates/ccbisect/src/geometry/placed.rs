//! World-frame view of a placed cutter: membership, axis-box mass fractions
//! and exact inside/outside/straddle classification of boxes.
//!
//! Built once per mass query and reused across every kernel of a measure.

use super::aabb::Aabb;
use super::circle::circle_box_area;
use super::clip::{
    clip_convex, clip_halfplane, point_in_polygon, polygon_box_area, segment_intersects_box,
    shoelace,
};
use super::cutter::{drop2, CutterSpec};
use super::placement::{body_to_world, world_to_body, Placement};
use super::polytope::{clip_polytope, cube_polytope, polytope_volume};
use super::starfan::star_fan;
use super::vector::{Vec2, Vec3, Vector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxClass {
    Inside,
    Outside,
    Straddle,
}

pub struct PlacedQuery<const D: usize> {
    repr: Repr,
}

enum Repr {
    S2(Shape2),
    S3(Shape3),
}

enum Shape2 {
    Circle {
        c: Vec2,
        r: f64,
    },
    /// Convex CCW polygon.
    Convex {
        poly: Vec<Vec2>,
        bbox: Aabb<2>,
    },
    /// Star-shaped polygon as a positive triangle fan.
    Fan {
        tris: Vec<[Vec2; 3]>,
        outline: Vec<Vec2>,
        bbox: Aabb<2>,
    },
    /// Outer polygon minus hole.
    Holed {
        outer: Vec<Vec2>,
        hole: Vec<Vec2>,
        bbox: Aabb<2>,
    },
    Half {
        n: Vec2,
        offset: f64,
    },
}

enum Shape3 {
    Ball {
        c: Vec3,
        r: f64,
    },
    OrientedBox {
        c: Vec3,
        axes: [Vec3; 3],
        half: [f64; 3],
        bbox: Aabb<3>,
        circum: f64,
        axis_aligned: bool,
    },
    Cylinder {
        c: Vec3,
        w: Vec3,
        e1: Vec3,
        e2: Vec3,
        r: f64,
        h: f64,
        bbox: Aabb<3>,
        circum: f64,
    },
    Half {
        n: Vec3,
        offset: f64,
    },
}

fn bbox_of(points: &[Vec2]) -> Aabb<2> {
    let mut lo = Vec2::splat(f64::INFINITY);
    let mut hi = Vec2::splat(f64::NEG_INFINITY);
    for p in points {
        lo = lo.min_with(p);
        hi = hi.max_with(p);
    }
    Aabb::new(lo, hi)
}

impl<const D: usize> PlacedQuery<D> {
    pub fn new(cutter: &CutterSpec<D>, placement: &Placement<D>) -> Result<Self> {
        cutter.validate()?;
        let repr = match D {
            2 => Repr::S2(build_shape2(cutter, placement)?),
            3 => Repr::S3(build_shape3(cutter, placement)?),
            _ => {
                return Err(Error::DimensionMismatch {
                    expected: 2,
                    got: D,
                })
            }
        };
        Ok(PlacedQuery { repr })
    }

    pub fn contains(&self, x: Vector<D>) -> bool {
        match &self.repr {
            Repr::S2(s) => s.contains(drop2(x)),
            Repr::S3(s) => s.contains(to3(x)),
        }
    }

    /// Fraction of the box volume covered by the placed cutter, in [0, 1].
    pub fn fraction(&self, b: &Aabb<D>) -> f64 {
        let vol = b.volume();
        if vol <= 0.0 {
            return 0.0;
        }
        let f = match &self.repr {
            Repr::S2(s) => s.area_in(&aabb2(b)) / vol,
            Repr::S3(s) => s.volume_in(&aabb3(b)) / vol,
        };
        f.clamp(0.0, 1.0)
    }

    /// Exact-when-`Inside`/`Outside` classification; `Straddle` may be
    /// conservative.
    pub fn classify(&self, b: &Aabb<D>) -> BoxClass {
        match &self.repr {
            Repr::S2(s) => s.classify(&aabb2(b)),
            Repr::S3(s) => s.classify(&aabb3(b)),
        }
    }

    /// Rough signed distance from `x` to the boundary (positive inside).
    /// Diagnostic only.
    pub fn boundary_margin(&self, x: Vector<D>) -> f64 {
        match &self.repr {
            Repr::S2(s) => s.boundary_margin(drop2(x)),
            Repr::S3(s) => s.boundary_margin(to3(x)),
        }
    }
}

fn to3<const D: usize>(v: Vector<D>) -> Vec3 {
    debug_assert!(D == 3);
    Vec3::new(v[0], v[1], v[2])
}

fn aabb2<const D: usize>(b: &Aabb<D>) -> Aabb<2> {
    Aabb::new(drop2(b.lo), drop2(b.hi))
}

fn aabb3<const D: usize>(b: &Aabb<D>) -> Aabb<3> {
    Aabb::new(to3(b.lo), to3(b.hi))
}

fn convexity(poly: &[Vec2]) -> bool {
    let n = poly.len();
    let scale = poly.iter().map(|p| p.norm()).fold(1e-12, f64::max);
    (0..n).all(|i| {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        let c = poly[(i + 2) % n];
        (b - a).cross(&(c - b)) >= -1e-12 * scale * scale
    })
}

fn build_shape2<const D: usize>(
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> Result<Shape2> {
    let (center, scale, rotation, reflected) = match placement {
        Placement::HalfSpace { normal, offset } => {
            let n = drop2(*normal)
                .normalized()
                .ok_or_else(|| Error::InvalidCutter("zero half-space normal".into()))?;
            return Ok(Shape2::Half { n, offset: *offset });
        }
        Placement::Body {
            center,
            scale,
            rotation,
            reflected,
        } => (*center, *scale, rotation, *reflected),
    };
    if scale <= 0.0 || !scale.is_finite() {
        return Err(Error::InvalidCutter(format!("scale {scale}")));
    }
    let p = cutter.star_point();
    let place = |y: Vec2| -> Vec2 {
        let w = body_to_world(
            p,
            center,
            scale,
            rotation,
            reflected,
            super::cutter::lift::<D>(y),
        );
        drop2(w)
    };
    Ok(match cutter {
        CutterSpec::Disk { radius } => Shape2::Circle {
            c: drop2(center),
            r: scale * radius,
        },
        CutterSpec::AxisBox { .. } => {
            let mut poly: Vec<Vec2> = cutter.outline2().unwrap().iter().map(|v| place(*v)).collect();
            if shoelace(&poly) < 0.0 {
                poly.reverse();
            }
            let bbox = bbox_of(&poly);
            Shape2::Convex { poly, bbox }
        }
        CutterSpec::StarPolygon {
            vertices,
            star_point,
            ..
        } => {
            let mut outline: Vec<Vec2> = vertices.iter().map(|v| place(*v)).collect();
            if shoelace(&outline) < 0.0 {
                outline.reverse();
            }
            let bbox = bbox_of(&outline);
            if convexity(&outline) {
                Shape2::Convex {
                    poly: outline,
                    bbox,
                }
            } else {
                let sp = place(*star_point);
                let tris = star_fan(&outline, sp)?;
                Shape2::Fan {
                    tris,
                    outline,
                    bbox,
                }
            }
        }
        CutterSpec::PolygonWithHole { outer, hole, .. } => {
            let mut outer_w: Vec<Vec2> = outer.iter().map(|v| place(*v)).collect();
            let mut hole_w: Vec<Vec2> = hole.iter().map(|v| place(*v)).collect();
            if shoelace(&outer_w) < 0.0 {
                outer_w.reverse();
            }
            if shoelace(&hole_w) < 0.0 {
                hole_w.reverse();
            }
            let bbox = bbox_of(&outer_w);
            Shape2::Holed {
                outer: outer_w,
                hole: hole_w,
                bbox,
            }
        }
        CutterSpec::Cylinder { .. } => {
            return Err(Error::DimensionMismatch { expected: 3, got: 2 })
        }
    })
}

impl Shape2 {
    fn contains(&self, x: Vec2) -> bool {
        match self {
            Shape2::Circle { c, r } => x.dist(c) <= *r,
            Shape2::Convex { poly, .. } => {
                let n = poly.len();
                (0..n).all(|i| {
                    let a = poly[i];
                    let b = poly[(i + 1) % n];
                    (b - a).cross(&(x - a)) >= 0.0
                })
            }
            Shape2::Fan { outline, .. } => point_in_polygon(outline, x),
            Shape2::Holed { outer, hole, .. } => {
                point_in_polygon(outer, x) && !point_in_polygon(hole, x)
            }
            Shape2::Half { n, offset } => x.dot(n) >= *offset,
        }
    }

    fn area_in(&self, b: &Aabb<2>) -> f64 {
        match self {
            Shape2::Circle { c, r } => circle_box_area(*c, *r, b),
            Shape2::Convex { poly, bbox } => {
                if !bbox.intersects(b) {
                    return 0.0;
                }
                clip_convex(poly, b)
            }
            Shape2::Fan { tris, bbox, .. } => {
                if !bbox.intersects(b) {
                    return 0.0;
                }
                tris.iter().map(|t| clip_convex(t, b)).sum()
            }
            Shape2::Holed {
                outer,
                hole,
                bbox,
            } => {
                if !bbox.intersects(b) {
                    return 0.0;
                }
                polygon_box_area(outer, b) - polygon_box_area(hole, b)
            }
            Shape2::Half { n, offset } => {
                let kept = clip_halfplane(&b.corners_ccw(), *n, *offset);
                shoelace(&kept).max(0.0)
            }
        }
    }

    fn classify(&self, b: &Aabb<2>) -> BoxClass {
        match self {
            Shape2::Circle { c, r } => {
                if b.dist_sq_to_point(c) >= r * r {
                    BoxClass::Outside
                } else if b.max_dist_to_point(c) <= *r {
                    BoxClass::Inside
                } else {
                    BoxClass::Straddle
                }
            }
            Shape2::Half { n, offset } => {
                let d: Vec<f64> = b.corners_ccw().iter().map(|p| p.dot(n) - offset).collect();
                if d.iter().all(|v| *v >= 0.0) {
                    BoxClass::Inside
                } else if d.iter().all(|v| *v <= 0.0) {
                    BoxClass::Outside
                } else {
                    BoxClass::Straddle
                }
            }
            Shape2::Convex { poly, bbox } | Shape2::Fan {
                outline: poly,
                bbox,
                ..
            } => {
                if !bbox.intersects(b) {
                    return BoxClass::Outside;
                }
                if boundary_crosses(poly, b) {
                    return BoxClass::Straddle;
                }
                if self.contains(b.center()) {
                    BoxClass::Inside
                } else {
                    BoxClass::Outside
                }
            }
            Shape2::Holed {
                outer,
                hole,
                bbox,
            } => {
                if !bbox.intersects(b) {
                    return BoxClass::Outside;
                }
                if boundary_crosses(outer, b) || boundary_crosses(hole, b) {
                    return BoxClass::Straddle;
                }
                let c = b.center();
                if point_in_polygon(outer, c) && !point_in_polygon(hole, c) {
                    BoxClass::Inside
                } else {
                    BoxClass::Outside
                }
            }
        }
    }

    fn boundary_margin(&self, x: Vec2) -> f64 {
        let dist_to_poly = |poly: &[Vec2]| -> f64 {
            let n = poly.len();
            (0..n)
                .map(|i| dist_point_segment(x, poly[i], poly[(i + 1) % n]))
                .fold(f64::INFINITY, f64::min)
        };
        match self {
            Shape2::Circle { c, r } => r - x.dist(c),
            Shape2::Convex { poly, .. } | Shape2::Fan { outline: poly, .. } => {
                let d = dist_to_poly(poly);
                if self.contains(x) {
                    d
                } else {
                    -d
                }
            }
            Shape2::Holed { outer, hole, .. } => {
                let d = dist_to_poly(outer).min(dist_to_poly(hole));
                if self.contains(x) {
                    d
                } else {
                    -d
                }
            }
            Shape2::Half { n, offset } => x.dot(n) - offset,
        }
    }
}

fn boundary_crosses(poly: &[Vec2], b: &Aabb<2>) -> bool {
    let n = poly.len();
    (0..n).any(|i| segment_intersects_box(poly[i], poly[(i + 1) % n], b))
}

fn dist_point_segment(x: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let t = ((x - a).dot(&ab) / ab.norm_sq().max(1e-300)).clamp(0.0, 1.0);
    x.dist(&(a + ab * t))
}

fn build_shape3<const D: usize>(
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> Result<Shape3> {
    let (center, scale, rotation, reflected) = match placement {
        Placement::HalfSpace { normal, offset } => {
            let n = to3(*normal)
                .normalized()
                .ok_or_else(|| Error::InvalidCutter("zero half-space normal".into()))?;
            return Ok(Shape3::Half { n, offset: *offset });
        }
        Placement::Body {
            center,
            scale,
            rotation,
            reflected,
        } => (to3(*center), *scale, rotation, *reflected),
    };
    if scale <= 0.0 || !scale.is_finite() {
        return Err(Error::InvalidCutter(format!("scale {scale}")));
    }
    // World direction of local axis a, including the reflection flip.
    let axis_dir = |a: usize| -> Vec3 {
        let mut e = Vector::<D>::axis(a);
        if reflected {
            e[0] = -e[0];
        }
        to3(rotation.apply(e))
    };
    Ok(match cutter {
        CutterSpec::Disk { radius } => Shape3::Ball {
            c: center,
            r: scale * radius,
        },
        CutterSpec::AxisBox { half_extents } => {
            let axes = [axis_dir(0), axis_dir(1), axis_dir(2)];
            let half = [
                scale * half_extents[0],
                scale * half_extents[1],
                scale * half_extents[2],
            ];
            let ext = Vec3::from_fn(|i| {
                (0..3).map(|a| axes[a][i].abs() * half[a]).sum::<f64>()
            });
            let bbox = Aabb::new(center - ext, center + ext);
            let circum = half.iter().map(|h| h * h).sum::<f64>().sqrt();
            let axis_aligned = (0..3).all(|a| {
                (0..3).all(|i| {
                    let want = if i == a { 1.0 } else { 0.0 };
                    (axes[a][i].abs() - want).abs() < 1e-14
                })
            });
            Shape3::OrientedBox {
                c: center,
                axes,
                half,
                bbox,
                circum,
                axis_aligned,
            }
        }
        CutterSpec::Cylinder {
            radius,
            half_height,
            axis,
        } => {
            let w = axis_dir(*axis);
            let e1 = w.any_perp();
            let e2 = w.cross(&e1);
            let (r, h) = (scale * radius, scale * half_height);
            let ext = Vec3::from_fn(|i| {
                let wa = w[i].abs().min(1.0);
                h * wa + r * (1.0 - wa * wa).max(0.0).sqrt()
            });
            let bbox = Aabb::new(center - ext, center + ext);
            Shape3::Cylinder {
                c: center,
                w,
                e1,
                e2,
                r,
                h,
                bbox,
                circum: (r * r + h * h).sqrt(),
            }
        }
        _ => return Err(Error::DimensionMismatch { expected: 2, got: 3 }),
    })
}

/// 8-point Gauss-Legendre nodes/weights on [-1, 1].
const GL8_X: [f64; 8] = [
    -0.9602898564975363,
    -0.7966664774136267,
    -0.5255324099163290,
    -0.1834346424956498,
    0.1834346424956498,
    0.5255324099163290,
    0.7966664774136267,
    0.9602898564975363,
];
const GL8_W: [f64; 8] = [
    0.1012285362903763,
    0.2223810344533745,
    0.3137066458778873,
    0.3626837833783620,
    0.3626837833783620,
    0.3137066458778873,
    0.2223810344533745,
    0.1012285362903763,
];

impl Shape3 {
    fn contains(&self, x: Vec3) -> bool {
        match self {
            Shape3::Ball { c, r } => x.dist(c) <= *r,
            Shape3::OrientedBox { c, axes, half, .. } => {
                (0..3).all(|a| (x - *c).dot(&axes[a]).abs() <= half[a])
            }
            Shape3::Cylinder { c, w, r, h, .. } => {
                let d = x - *c;
                let z = d.dot(w);
                if z.abs() > *h {
                    return false;
                }
                (d - *w * z).norm() <= *r
            }
            Shape3::Half { n, offset } => x.dot(n) >= *offset,
        }
    }

    fn volume_in(&self, b: &Aabb<3>) -> f64 {
        match self {
            Shape3::Ball { c, r } => {
                if b.dist_sq_to_point(&lift3(*c)) >= r * r {
                    return 0.0;
                }
                if b.max_dist_to_point(&lift3(*c)) <= *r {
                    return b.volume();
                }
                let zlo = b.lo[2].max(c[2] - r);
                let zhi = b.hi[2].min(c[2] + r);
                if zlo >= zhi {
                    return 0.0;
                }
                let box2 = Aabb::new(Vec2::new(b.lo[0], b.lo[1]), Vec2::new(b.hi[0], b.hi[1]));
                integrate_segments(zlo, zhi, &[], 12, |z| {
                    let dz = z - c[2];
                    let rr = (r * r - dz * dz).max(0.0).sqrt();
                    circle_box_area(Vec2::new(c[0], c[1]), rr, &box2)
                })
            }
            Shape3::OrientedBox {
                c,
                axes,
                half,
                bbox,
                axis_aligned,
                ..
            } => {
                if !bbox.intersects(b) {
                    return 0.0;
                }
                if *axis_aligned {
                    return (0..3)
                        .map(|i| {
                            let lo = b.lo[i].max(c[i] - half[i]);
                            let hi = b.hi[i].min(c[i] + half[i]);
                            (hi - lo).max(0.0)
                        })
                        .product();
                }
                let mut poly = cube_polytope(b);
                for a in 0..3 {
                    let ca = c.dot(&axes[a]);
                    poly = clip_polytope(&poly, axes[a], ca - half[a]);
                    if poly.faces.is_empty() {
                        return 0.0;
                    }
                    poly = clip_polytope(&poly, -axes[a], -(ca + half[a]));
                    if poly.faces.is_empty() {
                        return 0.0;
                    }
                }
                polytope_volume(&poly)
            }
            Shape3::Cylinder {
                c,
                w,
                e1,
                e2,
                r,
                h,
                bbox,
                ..
            } => {
                if !bbox.intersects(b) {
                    return 0.0;
                }
                // Local coordinates of the box corners: (xy in the disk
                // plane, z along the axis).
                let corners = b.corners();
                let local: Vec<Vec3> = corners
                    .iter()
                    .map(|p| {
                        let d = to3(*p) - *c;
                        Vec3::new(d.dot(e1), d.dot(e2), d.dot(w))
                    })
                    .collect();
                let zmin = local.iter().map(|p| p[2]).fold(f64::INFINITY, f64::min);
                let zmax = local
                    .iter()
                    .map(|p| p[2])
                    .fold(f64::NEG_INFINITY, f64::max);
                let zlo = zmin.max(-h);
                let zhi = zmax.min(*h);
                if zlo >= zhi {
                    return 0.0;
                }
                let mut breaks: Vec<f64> = local
                    .iter()
                    .map(|p| p[2])
                    .filter(|z| *z > zlo && *z < zhi)
                    .collect();
                breaks.sort_by(f64::total_cmp);
                integrate_segments(zlo, zhi, &breaks, 1, |z| {
                    let poly = cube_slice(&local, z);
                    if poly.len() < 3 {
                        0.0
                    } else {
                        super::circle::circle_polygon_area(*r, &poly).max(0.0)
                    }
                })
            }
            Shape3::Half { n, offset } => {
                let poly = clip_polytope(&cube_polytope(b), *n, *offset);
                polytope_volume(&poly)
            }
        }
    }

    fn classify(&self, b: &Aabb<3>) -> BoxClass {
        match self {
            Shape3::Ball { c, r } => {
                if b.dist_sq_to_point(&lift3(*c)) >= r * r {
                    BoxClass::Outside
                } else if b.max_dist_to_point(&lift3(*c)) <= *r {
                    BoxClass::Inside
                } else {
                    BoxClass::Straddle
                }
            }
            Shape3::Half { n, offset } => {
                let d: Vec<f64> = b.corners().iter().map(|p| to3(*p).dot(n) - offset).collect();
                if d.iter().all(|v| *v >= 0.0) {
                    BoxClass::Inside
                } else if d.iter().all(|v| *v <= 0.0) {
                    BoxClass::Outside
                } else {
                    BoxClass::Straddle
                }
            }
            Shape3::OrientedBox { bbox, circum, c, .. }
            | Shape3::Cylinder {
                bbox, circum, c, ..
            } => {
                if !bbox.intersects(b) {
                    return BoxClass::Outside;
                }
                if b.dist_sq_to_point(&lift3(*c)) > circum * circum {
                    return BoxClass::Outside;
                }
                if b.corners().iter().all(|p| self.contains(to3(*p))) {
                    return BoxClass::Inside; // convex shape
                }
                BoxClass::Straddle
            }
        }
    }

    fn boundary_margin(&self, x: Vec3) -> f64 {
        match self {
            Shape3::Ball { c, r } => r - x.dist(c),
            Shape3::OrientedBox { c, axes, half, .. } => (0..3)
                .map(|a| half[a] - (x - *c).dot(&axes[a]).abs())
                .fold(f64::INFINITY, f64::min),
            Shape3::Cylinder { c, w, r, h, .. } => {
                let d = x - *c;
                let z = d.dot(w);
                (h - z.abs()).min(r - (d - *w * z).norm())
            }
            Shape3::Half { n, offset } => x.dot(n) - offset,
        }
    }
}

fn lift3(v: Vec3) -> Vector<3> {
    v
}

/// Composite Gauss-Legendre over [lo, hi] split at `breaks` (sorted,
/// interior) and further into `min_pieces` per segment.
fn integrate_segments(
    lo: f64,
    hi: f64,
    breaks: &[f64],
    min_pieces: usize,
    f: impl Fn(f64) -> f64,
) -> f64 {
    let mut edges = Vec::with_capacity(breaks.len() + 2);
    edges.push(lo);
    edges.extend_from_slice(breaks);
    edges.push(hi);
    let mut acc = 0.0;
    for win in edges.windows(2) {
        let (a, b) = (win[0], win[1]);
        if b <= a {
            continue;
        }
        let pieces = min_pieces.max(1);
        let step = (b - a) / pieces as f64;
        for k in 0..pieces {
            let s0 = a + step * k as f64;
            let mid = s0 + 0.5 * step;
            let hw = 0.5 * step;
            for (x, w) in GL8_X.iter().zip(GL8_W.iter()) {
                acc += w * hw * f(mid + hw * x);
            }
        }
    }
    acc
}

/// Cross-section polygon (in local xy) of a box given by its 8 transformed
/// corner coordinates, cut at local height z. Corners are indexed by bits
/// (x:1, y:2, z:4) matching `Aabb::corners`; edges connect indices that
/// differ in one bit.
fn cube_slice(local: &[Vec3], z: f64) -> Vec<Vec2> {
    let mut pts: Vec<Vec2> = Vec::with_capacity(6);
    for i in 0..8usize {
        for bit in [1usize, 2, 4] {
            let j = i ^ bit;
            if j < i {
                continue;
            }
            let (a, b) = (local[i], local[j]);
            let (za, zb) = (a[2] - z, b[2] - z);
            if (za > 0.0) != (zb > 0.0) {
                let t = za / (za - zb);
                pts.push(Vec2::new(a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])));
            }
        }
    }
    if pts.len() < 3 {
        return pts;
    }
    let centroid = pts.iter().fold(Vec2::zero(), |acc, p| acc + *p) * (1.0 / pts.len() as f64);
    pts.sort_by(|p, q| {
        let ap = (*p - centroid).angle();
        let aq = (*q - centroid).angle();
        ap.total_cmp(&aq)
    });
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Rotation;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn halfplane_fraction_through_center() {
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let pl = Placement::half_space(Vec2::new(1.0, 0.0), 0.5);
        let q = PlacedQuery::new(&cutter, &pl).unwrap();
        let b = Aabb::from_center_half(Vec2::new(0.5, 3.0), 0.25);
        assert!((q.fraction(&b) - 0.5).abs() < 1e-14);
    }

    #[test]
    fn oriented_box_volume_matches_mc() {
        let cutter: CutterSpec<3> = CutterSpec::AxisBox {
            half_extents: Vector([0.8, 0.5, 0.3]),
        };
        let rot = Rotation::from_axis_angle(
            Vec3::new(1.0, 2.0, -0.5).normalized().unwrap(),
            0.8,
        );
        let pl = Placement::body(Vec3::new(0.1, -0.2, 0.05), 1.3, rot, false);
        let q = PlacedQuery::new(&cutter, &pl).unwrap();
        let b = Aabb::new(Vec3::new(-0.5, -0.6, -0.4), Vec3::new(0.7, 0.5, 0.6));
        let exact = q.fraction(&b);
        let mut rng = StdRng::seed_from_u64(1);
        let n = 400_000;
        let mut hits = 0u32;
        for _ in 0..n {
            let p = Vec3::new(
                rng.gen_range(b.lo[0]..b.hi[0]),
                rng.gen_range(b.lo[1]..b.hi[1]),
                rng.gen_range(b.lo[2]..b.hi[2]),
            );
            if q.contains(p) {
                hits += 1;
            }
        }
        let mc = hits as f64 / n as f64;
        assert!((exact - mc).abs() < 4e-3, "exact {exact} mc {mc}");
    }

    #[test]
    fn cylinder_volume_matches_mc() {
        let cutter: CutterSpec<3> = CutterSpec::Cylinder {
            radius: 0.7,
            half_height: 0.4,
            axis: 2,
        };
        let rot = Rotation::from_axis_angle(
            Vec3::new(0.3, -1.0, 0.4).normalized().unwrap(),
            1.1,
        );
        let pl = Placement::body(Vec3::new(0.0, 0.1, -0.1), 1.2, rot, false);
        let q = PlacedQuery::new(&cutter, &pl).unwrap();
        let b = Aabb::new(Vec3::new(-0.6, -0.5, -0.7), Vec3::new(0.6, 0.7, 0.5));
        let exact = q.fraction(&b);
        let mut rng = StdRng::seed_from_u64(2);
        let n = 400_000;
        let mut hits = 0u32;
        for _ in 0..n {
            let p = Vec3::new(
                rng.gen_range(b.lo[0]..b.hi[0]),
                rng.gen_range(b.lo[1]..b.hi[1]),
                rng.gen_range(b.lo[2]..b.hi[2]),
            );
            if q.contains(p) {
                hits += 1;
            }
        }
        let mc = hits as f64 / n as f64;
        assert!((exact - mc).abs() < 4e-3, "exact {exact} mc {mc}");
    }

    #[test]
    fn ball_volume_full() {
        let cutter: CutterSpec<3> = CutterSpec::Disk { radius: 0.5 };
        let pl = Placement::body(Vec3::new(0.0, 0.0, 0.0), 1.0, Rotation::identity(), false);
        let q = PlacedQuery::new(&cutter, &pl).unwrap();
        let b = Aabb::from_center_half(Vec3::new(0.0, 0.0, 0.0), 2.0);
        let want = 4.0 / 3.0 * std::f64::consts::PI * 0.5f64.powi(3) / b.volume();
        assert!((q.fraction(&b) - want).abs() < 1e-7);
    }

    #[test]
    fn classify_2d_polygon() {
        let cutter = CutterSpec::star_polygon(
            vec![
                Vec2::new(-1.0, -1.0),
                Vec2::new(1.0, -1.0),
                Vec2::new(1.0, 1.0),
                Vec2::new(-1.0, 1.0),
            ],
            Vec2::new(0.0, 0.0),
        );
        let pl = Placement::body(Vec2::new(0.0, 0.0), 1.0, Rotation::identity(), false);
        let q = PlacedQuery::new(&cutter, &pl).unwrap();
        let inside = Aabb::from_center_half(Vec2::new(0.0, 0.0), 0.3);
        let outside = Aabb::from_center_half(Vec2::new(5.0, 0.0), 0.3);
        let straddle = Aabb::from_center_half(Vec2::new(1.0, 0.0), 0.3);
        assert_eq!(q.classify(&inside), BoxClass::Inside);
        assert_eq!(q.classify(&outside), BoxClass::Outside);
        assert_eq!(q.classify(&straddle), BoxClass::Straddle);
    }
}
