//! Planar polygon clipping (Sutherland-Hodgman against half-planes) and
//! signed areas.

use super::aabb::Aabb;
use super::vector::Vec2;

/// Signed area of a polygon; positive for CCW orientation.
pub fn shoelace(poly: &[Vec2]) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let mut acc = 0.0;
    for i in 0..poly.len() {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        acc += a.cross(&b);
    }
    0.5 * acc
}

/// Keeps the part of `poly` with `<x, n> >= offset`.
pub fn clip_halfplane(poly: &[Vec2], n: Vec2, offset: f64) -> Vec<Vec2> {
    if poly.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(poly.len() + 2);
    for i in 0..poly.len() {
        let cur = poly[i];
        let nxt = poly[(i + 1) % poly.len()];
        let dc = cur.dot(&n) - offset;
        let dn = nxt.dot(&n) - offset;
        let cur_in = dc >= 0.0;
        let nxt_in = dn >= 0.0;
        if cur_in {
            out.push(cur);
        }
        if cur_in != nxt_in {
            let denom = dc - dn;
            if denom.abs() > 0.0 {
                let t = dc / denom;
                out.push(cur + (nxt - cur) * t);
            }
        }
    }
    out
}

/// Clips `poly` to an axis-aligned box.
pub fn clip_to_box(poly: &[Vec2], b: &Aabb<2>) -> Vec<Vec2> {
    let mut p = clip_halfplane(poly, Vec2::new(1.0, 0.0), b.lo[0]);
    p = clip_halfplane(&p, Vec2::new(-1.0, 0.0), -b.hi[0]);
    p = clip_halfplane(&p, Vec2::new(0.0, 1.0), b.lo[1]);
    clip_halfplane(&p, Vec2::new(0.0, -1.0), -b.hi[1])
}

/// Area of the intersection of a convex CCW polygon with an axis box.
/// Degenerate (collinear) input yields 0.
pub fn clip_convex(poly: &[Vec2], b: &Aabb<2>) -> f64 {
    shoelace(&clip_to_box(poly, b)).max(0.0)
}

/// Area of `P ∩ B` for an arbitrary simple CCW polygon `P`, computed as a
/// signed fan of triangles from the first vertex. Each fan triangle is
/// clipped convexly; orientation signs make overlaps cancel.
pub fn polygon_box_area(poly: &[Vec2], b: &Aabb<2>) -> f64 {
    if poly.len() < 3 {
        return 0.0;
    }
    let o = poly[0];
    let mut acc = 0.0;
    for i in 1..poly.len() - 1 {
        let (a, c) = (poly[i], poly[i + 1]);
        let s = (a - o).cross(&(c - o));
        if s == 0.0 {
            continue;
        }
        let tri = if s > 0.0 { [o, a, c] } else { [o, c, a] };
        acc += s.signum() * clip_convex(&tri, b);
    }
    acc
}

/// Liang-Barsky segment vs axis box intersection test.
pub fn segment_intersects_box(a: Vec2, c: Vec2, b: &Aabb<2>) -> bool {
    let d = c - a;
    let mut t0: f64 = 0.0;
    let mut t1: f64 = 1.0;
    for i in 0..2 {
        if d[i].abs() < 1e-300 {
            if a[i] < b.lo[i] || a[i] > b.hi[i] {
                return false;
            }
            continue;
        }
        let inv = 1.0 / d[i];
        let (mut ta, mut tb) = ((b.lo[i] - a[i]) * inv, (b.hi[i] - a[i]) * inv);
        if ta > tb {
            std::mem::swap(&mut ta, &mut tb);
        }
        t0 = t0.max(ta);
        t1 = t1.min(tb);
        if t0 > t1 {
            return false;
        }
    }
    true
}

/// Even-odd point-in-polygon via ray crossings.
pub fn point_in_polygon(poly: &[Vec2], x: Vec2) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a.y() > x.y()) != (b.y() > x.y()) {
            let t = (x.y() - a.y()) / (b.y() - a.y());
            if a.x() + t * (b.x() - a.x()) > x.x() {
                inside = !inside;
            }
        }
    }
    inside
}
