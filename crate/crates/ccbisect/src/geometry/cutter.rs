//! Cutter shapes in their local frame.

use super::starfan::star_fan;
use super::vector::{Vec2, Vector};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Angular half-window for blending facet normals across polygon vertices
/// (and box/cylinder edges in d = 3). Supplies the normal continuity that a
/// smooth boundary would give.
pub(crate) const NORMAL_BLEND_WINDOW: f64 = 1e-3;

/// The shape to place. All variants are compact with non-empty interior.
///
/// Polygon variants live in d = 2; `Cylinder` in d = 3. The shape is
/// described in a local frame; placements scale about the star point
/// (`Disk`/`AxisBox`/`Cylinder`: the center; polygons: the given point).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CutterSpec<const D: usize> {
    Disk {
        radius: f64,
    },
    AxisBox {
        half_extents: Vector<D>,
    },
    /// d = 3 only: `{x : |x_perp| <= radius, |x_axis| <= half_height}`.
    Cylinder {
        radius: f64,
        half_height: f64,
        axis: usize,
    },
    /// d = 2 only: simple CCW polygon star-shaped about `star_point`.
    StarPolygon {
        vertices: Vec<Vec2>,
        star_point: Vec2,
        #[serde(default)]
        smooth: bool,
    },
    /// d = 2 only: outer polygon minus a strictly interior hole. Not
    /// star-shaped; scaling is about `anchor`, which must lie in the solid
    /// part so large scalings eventually cover everything.
    PolygonWithHole {
        outer: Vec<Vec2>,
        hole: Vec<Vec2>,
        anchor: Vec2,
    },
}

impl<const D: usize> CutterSpec<D> {
    pub fn star_polygon(vertices: Vec<Vec2>, star_point: Vec2) -> Self {
        CutterSpec::StarPolygon {
            vertices,
            star_point,
            smooth: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            CutterSpec::Disk { radius } => {
                if *radius <= 0.0 || !radius.is_finite() {
                    return Err(Error::InvalidCutter(format!("disk radius {radius}")));
                }
            }
            CutterSpec::AxisBox { half_extents } => {
                if half_extents.0.iter().any(|h| *h <= 0.0 || !h.is_finite()) {
                    return Err(Error::InvalidCutter("non-positive box extent".into()));
                }
            }
            CutterSpec::Cylinder {
                radius,
                half_height,
                axis,
            } => {
                if D != 3 {
                    return Err(Error::DimensionMismatch { expected: 3, got: D });
                }
                if *radius <= 0.0 || *half_height <= 0.0 {
                    return Err(Error::InvalidCutter("non-positive cylinder size".into()));
                }
                if *axis >= 3 {
                    return Err(Error::InvalidCutter(format!("axis index {axis}")));
                }
            }
            CutterSpec::StarPolygon {
                vertices,
                star_point,
                ..
            } => {
                if D != 2 {
                    return Err(Error::DimensionMismatch { expected: 2, got: D });
                }
                star_fan(vertices, *star_point)?;
            }
            CutterSpec::PolygonWithHole { outer, hole, anchor } => {
                if D != 2 {
                    return Err(Error::DimensionMismatch { expected: 2, got: D });
                }
                if super::clip::shoelace(outer) <= 0.0 {
                    return Err(Error::InvalidCutter("outer polygon must be CCW".into()));
                }
                if super::clip::shoelace(hole).abs() <= 0.0 {
                    return Err(Error::InvalidCutter("degenerate hole".into()));
                }
                if !super::clip::point_in_polygon(outer, *anchor)
                    || super::clip::point_in_polygon(hole, *anchor)
                {
                    return Err(Error::InvalidCutter(
                        "anchor must lie in the solid part".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The point placements scale about, in local coordinates.
    pub fn star_point(&self) -> Vector<D> {
        match self {
            CutterSpec::StarPolygon { star_point, .. } => lift::<D>(*star_point),
            CutterSpec::PolygonWithHole { anchor, .. } => lift::<D>(*anchor),
            _ => Vector::zero(),
        }
    }

    /// Radius of a ball around the star point containing the shape.
    pub fn circumradius(&self) -> f64 {
        match self {
            CutterSpec::Disk { radius } => *radius,
            CutterSpec::AxisBox { half_extents } => {
                half_extents.0.iter().map(|h| h * h).sum::<f64>().sqrt()
            }
            CutterSpec::Cylinder {
                radius,
                half_height,
                ..
            } => (radius * radius + half_height * half_height).sqrt(),
            CutterSpec::StarPolygon {
                vertices,
                star_point,
                ..
            } => vertices
                .iter()
                .map(|v| v.dist(star_point))
                .fold(0.0, f64::max),
            CutterSpec::PolygonWithHole { outer, anchor, .. } => outer
                .iter()
                .map(|v| v.dist(anchor))
                .fold(0.0, f64::max),
        }
    }

    pub fn is_star_shaped(&self) -> bool {
        !matches!(self, CutterSpec::PolygonWithHole { .. })
    }

    /// Index of the distinguished direction axis for axis-mode placements.
    pub fn direction_axis(&self) -> usize {
        match self {
            CutterSpec::Cylinder { axis, .. } => *axis,
            _ => D - 1,
        }
    }

    /// Rotational symmetry quotient of the shape about its star point:
    /// placements at theta and theta + quotient coincide. Used to trim
    /// redundant rotation sweeps; 2*pi when no symmetry is known.
    pub fn symmetry_quotient(&self) -> f64 {
        use std::f64::consts::{PI, TAU};
        match self {
            CutterSpec::Disk { .. } => f64::INFINITY, // any rotation
            CutterSpec::AxisBox { half_extents } => {
                let eq = half_extents
                    .0
                    .iter()
                    .all(|h| (h - half_extents[0]).abs() < 1e-12);
                if eq && D == 2 {
                    PI / 2.0
                } else {
                    PI
                }
            }
            _ => TAU,
        }
    }

    /// Outline polygon in local coordinates (d = 2 variants only).
    pub(crate) fn outline2(&self) -> Option<Vec<Vec2>> {
        match self {
            CutterSpec::AxisBox { half_extents } if D == 2 => {
                let (a, b) = (half_extents[0], half_extents[1]);
                Some(vec![
                    Vec2::new(-a, -b),
                    Vec2::new(a, -b),
                    Vec2::new(a, b),
                    Vec2::new(-a, b),
                ])
            }
            CutterSpec::StarPolygon { vertices, .. } => Some(vertices.clone()),
            _ => None,
        }
    }
}

pub(crate) fn lift<const D: usize>(v: Vec2) -> Vector<D> {
    debug_assert!(D == 2);
    Vector::from_fn(|i| v[i])
}

pub(crate) fn drop2<const D: usize>(v: Vector<D>) -> Vec2 {
    debug_assert!(D >= 2);
    Vec2::new(v[0], v[1])
}

/// Where the ray from the star point in direction `u` (unit, local frame)
/// leaves the shape, and the inward unit normal of the supporting boundary
/// element there. Near vertices/edges the normal is blended over
/// [`NORMAL_BLEND_WINDOW`] so it varies continuously with `u`.
pub(crate) struct BoundaryHit<const D: usize> {
    pub t: f64,
    pub inward_normal: Vector<D>,
}

impl<const D: usize> CutterSpec<D> {
    pub(crate) fn boundary_hit(&self, u: Vector<D>) -> Result<BoundaryHit<D>> {
        match self {
            CutterSpec::Disk { radius } => Ok(BoundaryHit {
                t: *radius,
                inward_normal: -u,
            }),
            CutterSpec::AxisBox { half_extents } => {
                if D == 2 {
                    let outline = self.outline2().unwrap();
                    let hit = polygon_boundary_hit(&outline, drop2(self.star_point()), drop2(u))?;
                    Ok(BoundaryHit {
                        t: hit.0,
                        inward_normal: lift::<D>(hit.1),
                    })
                } else {
                    // Blend over the box facets by how close their support
                    // distance is to the hit distance.
                    let mut facets: Vec<(f64, Vector<D>)> = Vec::new();
                    for a in 0..D {
                        if u[a].abs() > 1e-300 {
                            let t = half_extents[a] / u[a].abs();
                            let mut n = Vector::zero();
                            n[a] = -u[a].signum();
                            facets.push((t, n));
                        }
                    }
                    blend_facets(u, facets)
                }
            }
            CutterSpec::Cylinder {
                radius,
                half_height,
                axis,
            } => {
                let mut facets: Vec<(f64, Vector<D>)> = Vec::new();
                let ua = u[*axis];
                let mut radial = u;
                radial[*axis] = 0.0;
                let ur = radial.norm();
                if ua.abs() > 1e-300 {
                    let mut n = Vector::zero();
                    n[*axis] = -ua.signum();
                    facets.push((half_height / ua.abs(), n));
                }
                if ur > 1e-300 {
                    facets.push((radius / ur, -(radial / ur)));
                }
                blend_facets(u, facets)
            }
            CutterSpec::StarPolygon {
                vertices,
                star_point,
                ..
            } => {
                let hit = polygon_boundary_hit(vertices, *star_point, drop2(u))?;
                Ok(BoundaryHit {
                    t: hit.0,
                    inward_normal: lift::<D>(hit.1),
                })
            }
            CutterSpec::PolygonWithHole { outer, anchor, .. } => {
                // Large-scale limits see the outer boundary only.
                let hit = polygon_boundary_hit(outer, *anchor, drop2(u))?;
                Ok(BoundaryHit {
                    t: hit.0,
                    inward_normal: lift::<D>(hit.1),
                })
            }
        }
    }
}

/// Weighted blend of facet normals within a relative support-distance
/// window; exact facet normal away from edges.
fn blend_facets<const D: usize>(
    u: Vector<D>,
    facets: Vec<(f64, Vector<D>)>,
) -> Result<BoundaryHit<D>> {
    let t_hit = facets
        .iter()
        .map(|(t, _)| *t)
        .fold(f64::INFINITY, f64::min);
    if !t_hit.is_finite() {
        return Err(Error::InvalidCutter("degenerate ray".into()));
    }
    let mut acc = Vector::zero();
    for (t, n) in &facets {
        let w = 1.0 - (t - t_hit) / (NORMAL_BLEND_WINDOW * t_hit);
        if w > 0.0 {
            acc += *n * w;
        }
    }
    let n = acc
        .normalized()
        .ok_or_else(|| Error::InvalidCutter("vanishing blended normal".into()))?;
    let _ = u;
    Ok(BoundaryHit {
        t: t_hit,
        inward_normal: n,
    })
}

/// Ray-polygon hit from an interior point `p` in direction `u`, returning
/// `(t, inward_normal)` with vertex-window blending.
fn polygon_boundary_hit(vertices: &[Vec2], p: Vec2, u: Vec2) -> Result<(f64, Vec2)> {
    let n = vertices.len();
    let mut best: Option<(f64, usize, f64)> = None; // (t, edge, edge_param)
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let e = b - a;
        let denom = u.cross(&e);
        if denom.abs() < 1e-300 {
            continue;
        }
        let ap = a - p;
        let t = ap.cross(&e) / denom;
        let s = ap.cross(&u) / denom;
        if t > 1e-12 && (-1e-12..=1.0 + 1e-12).contains(&s) {
            match best {
                Some((tb, _, _)) if tb <= t => {}
                _ => best = Some((t, i, s.clamp(0.0, 1.0))),
            }
        }
    }
    let (t, edge, s) = best.ok_or(Error::NotStarShaped)?;

    let inward = |i: usize| -> Vec2 {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let e = (b - a).normalized().unwrap_or(Vec2::new(1.0, 0.0));
        // CCW polygon: outward normal is e rotated -90 deg; inward is +90.
        e.perp()
    };

    // Angular distance from u to the vertex directions bounding this edge.
    let psi = u.angle();
    let near_vertex = |vi: usize| -> Option<f64> {
        let dir = (vertices[vi] - p).normalized()?;
        let mut d = psi - dir.angle();
        while d > std::f64::consts::PI {
            d -= std::f64::consts::TAU;
        }
        while d < -std::f64::consts::PI {
            d += std::f64::consts::TAU;
        }
        (d.abs() < NORMAL_BLEND_WINDOW).then_some(d)
    };

    // s near 0 -> vertex `edge`; s near 1 -> vertex `edge + 1`.
    let (prev_edge, next_edge, vtx) = if s < 0.5 {
        ((edge + n - 1) % n, edge, edge)
    } else {
        (edge, (edge + 1) % n, (edge + 1) % n)
    };
    let normal = if let Some(d) = near_vertex(vtx) {
        // d < 0: approaching the vertex from the earlier edge side.
        let f = (d + NORMAL_BLEND_WINDOW) / (2.0 * NORMAL_BLEND_WINDOW);
        slerp(inward(prev_edge), inward(next_edge), f.clamp(0.0, 1.0))
    } else {
        inward(edge)
    };
    Ok((t, normal))
}

fn slerp(a: Vec2, b: Vec2, f: f64) -> Vec2 {
    let dot = a.dot(&b).clamp(-1.0, 1.0);
    let omega = dot.acos();
    if omega < 1e-9 {
        return (a * (1.0 - f) + b * f).normalized().unwrap_or(a);
    }
    let so = omega.sin();
    let va = a * (((1.0 - f) * omega).sin() / so);
    let vb = b * ((f * omega).sin() / so);
    (va + vb).normalized().unwrap_or(a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disk_hit() {
        let c: CutterSpec<2> = CutterSpec::Disk { radius: 2.0 };
        let h = c.boundary_hit(Vec2::new(1.0, 0.0).into2()).unwrap();
        assert!((h.t - 2.0).abs() < 1e-14);
        assert!(h.inward_normal.dist(&Vector([-1.0, 0.0])) < 1e-14);
    }

    #[test]
    fn square_facet_normal_and_vertex_blend() {
        let c: CutterSpec<2> = CutterSpec::AxisBox {
            half_extents: [1.0, 1.0],
        };
        // mid-facet: pure inward normal
        let h = c.boundary_hit(Vector([1.0, 0.0])).unwrap();
        assert!((h.t - 1.0).abs() < 1e-12);
        assert!(h.inward_normal.dist(&Vector([-1.0, 0.0])) < 1e-12);
        // across the corner the normal varies continuously
        let corner = std::f64::consts::FRAC_PI_4;
        let before = c
            .boundary_hit(Vector([
                (corner - 2e-3).cos(),
                (corner - 2e-3).sin(),
            ]))
            .unwrap()
            .inward_normal;
        let mid = c
            .boundary_hit(Vector([corner.cos(), corner.sin()]))
            .unwrap()
            .inward_normal;
        let after = c
            .boundary_hit(Vector([
                (corner + 2e-3).cos(),
                (corner + 2e-3).sin(),
            ]))
            .unwrap()
            .inward_normal;
        assert!(before.dist(&Vector([-1.0, 0.0])) < 1e-9);
        assert!(after.dist(&Vector([0.0, -1.0])) < 1e-9);
        // at the corner: symmetric blend
        assert!((mid[0] - mid[1]).abs() < 1e-9);

        // continuity sweep across the window
        let mut prev = before;
        let steps = 200;
        for k in 0..=steps {
            let a = corner - 2e-3 + 4e-3 * k as f64 / steps as f64;
            let n = c
                .boundary_hit(Vector([a.cos(), a.sin()]))
                .unwrap()
                .inward_normal;
            assert!(n.dist(&prev) < 0.05, "jump at {a}");
            prev = n;
        }
    }

    #[test]
    fn cylinder_hit_blend() {
        let c: CutterSpec<3> = CutterSpec::Cylinder {
            radius: 1.0,
            half_height: 0.5,
            axis: 2,
        };
        let h = c.boundary_hit(Vector([0.0, 0.0, 1.0])).unwrap();
        assert!((h.t - 0.5).abs() < 1e-12);
        assert!(h.inward_normal.dist(&Vector([0.0, 0.0, -1.0])) < 1e-12);
        let h = c.boundary_hit(Vector([1.0, 0.0, 0.0])).unwrap();
        assert!((h.t - 1.0).abs() < 1e-12);
    }

    trait Into2 {
        fn into2(self) -> Vector<2>;
    }
    impl Into2 for Vec2 {
        fn into2(self) -> Vector<2> {
            self
        }
    }
}
