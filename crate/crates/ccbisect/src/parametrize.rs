//! Compactified charts from parameter domains to placements bisecting the
//! pinning measure, and the residual map whose zeros are simultaneous
//! bisections.
//!
//! Homothety chart over the unit ball: for `|v| < 1/2` the center is
//! `c(v) = (|v| / (2|v| - 1)) v` (a translation in the `-v` direction that
//! escapes to infinity as `|v| -> 1/2`) with the scale pinned by
//! [`crate::mass_eval::bisect_scale`]. For `|v| >= 1/2` the placement is a
//! bisecting half-space whose normal interpolates from the supporting
//! inward normal `n(u)` at `alpha = 1/2` down to `-u` at `alpha = 1`, so
//! antipodal boundary points carry complementary half-spaces.
//!
//! The axis chart places an axis-symmetric cutter with its direction line
//! through the origin: center `(alpha / (1 - alpha)) u`, degenerating to
//! the bisecting half-space orthogonal to `u` at `alpha = 1`. At
//! `alpha = 0` the placements for `u` and `-u` are the same object.
//!
//! The similarity chart is the homothety chart composed with a fixed
//! rotation (and optional reflection) of the cutter.

use crate::error::{Error, Result};
use crate::geometry::placement::reflect_first;
use crate::geometry::{CutterSpec, Placement, Rotation, Vector};
use crate::mass_eval::{bisect_scale_at, enumerate_scale_roots, mass_in, signed_balance};
use crate::measures::{Measure, MeasureSet};
use serde::Serialize;

/// A point in a compactified parameter domain.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "chart", rename_all = "snake_case")]
pub enum ChartPoint<const D: usize> {
    Homothety {
        v: Vector<D>,
    },
    Axis {
        u: Vector<D>,
        alpha: f64,
    },
    Similarity {
        rotation: Rotation<D>,
        reflected: bool,
        v: Vector<D>,
    },
    /// Selects the `root`-th scale root at the base point's center; used for
    /// cutters without a monotone scale function.
    Branch {
        base: Box<ChartPoint<D>>,
        root: usize,
    },
}

impl<const D: usize> ChartPoint<D> {
    /// The placement this parameter point denotes, bisecting `mu0`.
    pub fn placement(&self, cutter: &CutterSpec<D>, mu0: &Measure<D>) -> Result<Placement<D>> {
        match self {
            ChartPoint::Homothety { v } => homothety_chart(cutter, mu0, *v),
            ChartPoint::Axis { u, alpha } => axis_chart(cutter, mu0, *u, *alpha),
            ChartPoint::Similarity {
                rotation,
                reflected,
                v,
            } => similarity_chart(cutter, mu0, *rotation, *reflected, *v),
            ChartPoint::Branch { base, root } => branch_placement(cutter, mu0, base, *root),
        }
    }
}

/// Normalized signed mass imbalances of measures 1..=d; the zero vector
/// means every non-pinning measure is bisected.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Residual<const D: usize> {
    pub components: [f64; D],
}

impl<const D: usize> Residual<D> {
    pub fn max_abs(&self) -> f64 {
        self.components.iter().fold(0.0, |a, c| a.max(c.abs()))
    }

    pub fn norm(&self) -> f64 {
        self.components.iter().map(|c| c * c).sum::<f64>().sqrt()
    }
}

/// Residual of a placement against the non-pinning measures.
pub fn residual<const D: usize>(
    measures: &MeasureSet<D>,
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> Residual<D> {
    let mut components = [0.0; D];
    for (i, m) in measures.residual_measures().iter().enumerate() {
        components[i] = signed_balance(m, cutter, placement);
    }
    Residual { components }
}

/// Chart evaluation: parameter point -> placement -> residual.
pub fn evaluate<const D: usize>(
    measures: &MeasureSet<D>,
    cutter: &CutterSpec<D>,
    point: &ChartPoint<D>,
) -> Result<(Placement<D>, Residual<D>)> {
    let placement = point.placement(cutter, measures.pinning())?;
    let r = residual(measures, cutter, &placement);
    Ok((placement, r))
}

/// Center magnitudes beyond `HUGE_FACTOR * instance scale` snap to the
/// limiting half-space; the skipped band of the chart is ~1e-7 wide in `v`,
/// far below solver resolution, and the float cancellation of a body at
/// that distance would exceed the snap error.
const HUGE_FACTOR: f64 = 1e6;

fn instance_scale<const D: usize>(cutter: &CutterSpec<D>, mu0: &Measure<D>) -> f64 {
    (mu0.support_bbox().diameter() + cutter.circumradius()).max(1.0)
}

/// Homothety chart on the unit ball (no rotation).
pub fn homothety_chart<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    v: Vector<D>,
) -> Result<Placement<D>> {
    homothety_core(cutter, mu0, v, Rotation::identity(), false)
}

/// Homothety chart in a rotated (optionally reflected) cutter frame.
pub fn similarity_chart<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    rotation: Rotation<D>,
    reflected: bool,
    v: Vector<D>,
) -> Result<Placement<D>> {
    homothety_core(cutter, mu0, v, rotation, reflected)
}

pub(crate) fn homothety_core<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    v: Vector<D>,
    rotation: Rotation<D>,
    reflected: bool,
) -> Result<Placement<D>> {
    cutter.validate()?;
    let nv = v.norm();
    if nv > 1.0 + 1e-9 {
        return Err(Error::ChartDomain(nv));
    }
    let cap = HUGE_FACTOR * instance_scale(cutter, mu0);

    if nv < 0.5 {
        let coef = nv / (2.0 * nv - 1.0);
        let c = v * coef;
        if c.norm() <= cap {
            let s = bisect_scale_at(cutter, mu0, c, rotation, reflected, None)?;
            return Ok(Placement::body(c, s, rotation, reflected));
        }
    }
    // Boundary regime: a bisecting half-space.
    let u = v
        .normalized()
        .expect("|v| >= 1/2 - eps here, never the origin");
    let alpha = nv.clamp(0.5, 1.0);
    let n_dir = if alpha >= 1.0 - 1e-12 {
        // Exact antipodal form on the domain boundary.
        -u
    } else {
        let u_local = reflect_first(rotation.apply_inv(u), reflected);
        let hit = cutter.boundary_hit(u_local)?;
        let n_world = rotation.apply(reflect_first(hit.inward_normal, reflected));
        let blend = n_world * (2.0 - 2.0 * alpha) + u * (1.0 - 2.0 * alpha);
        blend
            .normalized()
            .ok_or_else(|| Error::InvalidCutter("degenerate normal interpolation".into()))?
    };
    bisecting_halfspace(cutter, mu0, n_dir)
}

/// Axis chart for axis-symmetric cutters (d = 3 cylinders; d = 2 boxes).
pub fn axis_chart<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    u_dir: Vector<D>,
    alpha: f64,
) -> Result<Placement<D>> {
    cutter.validate()?;
    match cutter {
        CutterSpec::Cylinder { .. } => {}
        CutterSpec::AxisBox { .. } if D == 2 => {}
        _ => {
            return Err(Error::Unsupported(
                "axis chart needs a cylinder (d=3) or box (d=2) cutter".into(),
            ))
        }
    }
    let u = u_dir
        .normalized()
        .ok_or_else(|| Error::ChartDomain(0.0))?;
    let alpha = alpha.clamp(0.0, 1.0);
    if alpha >= 1.0 - 1e-12 {
        return bisecting_halfspace(cutter, mu0, u);
    }
    let e = Vector::axis(cutter.direction_axis());
    if alpha <= 1e-15 {
        // K(u) = K(-u): canonicalize so both signs build the same object.
        let (uc, _) = u.canonical_sign();
        let rot = Rotation::aligning(e, uc);
        let s = bisect_scale_at(cutter, mu0, Vector::zero(), rot, false, None)?;
        return Ok(Placement::body(Vector::zero(), s, rot, false));
    }
    let dist = alpha / (1.0 - alpha);
    let c = u * dist;
    if c.norm() > HUGE_FACTOR * instance_scale(cutter, mu0) {
        return bisecting_halfspace(cutter, mu0, u);
    }
    let rot = Rotation::aligning(e, u);
    let s = bisect_scale_at(cutter, mu0, c, rot, false, None)?;
    Ok(Placement::body(c, s, rot, false))
}

/// The half-space `{x : <x, n> >= offset}` bisecting `mu0`, with the offset
/// at the midpoint of the interval of bisecting offsets.
///
/// The offset is always solved along the lexicographically positive form of
/// `n`, so the half-spaces returned for `n` and `-n` are exact complements
/// (same boundary hyperplane bits).
pub fn bisecting_halfspace<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    n_dir: Vector<D>,
) -> Result<Placement<D>> {
    let n = n_dir
        .normalized()
        .ok_or_else(|| Error::InvalidCutter("zero half-space normal".into()))?;
    let (n_hat, flipped) = n.canonical_sign();

    let bbox = mu0.support_bbox();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for corner_mask in 0..(1usize << D) {
        let corner = Vector::<D>::from_fn(|i| {
            if corner_mask & (1 << i) == 0 {
                bbox.lo[i]
            } else {
                bbox.hi[i]
            }
        });
        let d = corner.dot(&n_hat);
        lo = lo.min(d);
        hi = hi.max(d);
    }
    let pad = 1e-6 * (hi - lo).max(1.0);
    let (lo, hi) = (lo - pad, hi + pad);

    let total = mu0.total();
    let target = 0.5 * total;
    // mass(o) of {x . n_hat >= o} is nonincreasing in o.
    let mass = |o: f64| mass_in(mu0, cutter, &Placement::half_space(n_hat, o));
    let tol = 1e-12 * (hi - lo).max(1e-12);
    let o_lo = bisect_offset(lo, hi, tol, |o| mass(o) <= target);
    let o_hi = bisect_offset(lo, hi, tol, |o| mass(o) < target);
    let mid = 0.5 * (o_lo + o_hi);

    Ok(if flipped {
        Placement::half_space(-n_hat, -mid)
    } else {
        Placement::half_space(n_hat, mid)
    })
}

fn bisect_offset(mut lo: f64, mut hi: f64, tol: f64, p: impl Fn(f64) -> bool) -> f64 {
    // p monotone false -> true over [lo, hi].
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if p(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

fn branch_placement<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    base: &ChartPoint<D>,
    root: usize,
) -> Result<Placement<D>> {
    let (v, rotation, reflected) = match base {
        ChartPoint::Homothety { v } => (*v, Rotation::identity(), false),
        ChartPoint::Similarity {
            rotation,
            reflected,
            v,
        } => (*v, *rotation, *reflected),
        _ => {
            return Err(Error::Unsupported(
                "branch base must be a homothety or similarity point".into(),
            ))
        }
    };
    let nv = v.norm();
    if nv >= 0.5 {
        // All branches merge into the half-space limit.
        return homothety_core(cutter, mu0, v, rotation, reflected);
    }
    let c = v * (nv / (2.0 * nv - 1.0));
    let roots = enumerate_scale_roots(cutter, mu0, c, rotation, f64::INFINITY)?;
    let s = *roots.get(root).ok_or_else(|| {
        Error::Unsupported(format!(
            "branch {root} out of range: {} scale roots here",
            roots.len()
        ))
    })?;
    Ok(Placement::body(c, s, rotation, reflected))
}

/// Reparametrized scale function over `x` in [-1, 1].
///
/// `phi(s) = (1 - delta)(s - 1)/(s + 1)` maps `[0, inf]` onto
/// `[-1 + delta, 1 - delta]`; interior values are shrunk by `1 - shrink` so
/// they stay strictly inside (-1, 1), and the end segments interpolate
/// linearly to exactly -1 and 1.
pub struct CompactifiedScale<'a, const D: usize> {
    cutter: &'a CutterSpec<D>,
    mu0: &'a Measure<D>,
    pub center: Vector<D>,
    pub rotation: Rotation<D>,
    pub delta: f64,
    pub shrink: f64,
}

pub fn compactified_scale<'a, const D: usize>(
    cutter: &'a CutterSpec<D>,
    mu0: &'a Measure<D>,
    center: Vector<D>,
    rotation: Rotation<D>,
) -> CompactifiedScale<'a, D> {
    CompactifiedScale {
        cutter,
        mu0,
        center,
        rotation,
        delta: 1.0 / 16.0,
        shrink: 1.0 / 32.0,
    }
}

impl<const D: usize> CompactifiedScale<'_, D> {
    pub fn phi(&self, s: f64) -> f64 {
        if s.is_infinite() {
            return 1.0 - self.delta;
        }
        (1.0 - self.delta) * (s - 1.0) / (s + 1.0)
    }

    pub fn phi_inv(&self, x: f64) -> f64 {
        let y = x / (1.0 - self.delta);
        if y >= 1.0 {
            f64::INFINITY
        } else {
            (1.0 + y) / (1.0 - y)
        }
    }

    fn balance(&self, s: f64) -> f64 {
        if s <= 0.0 {
            return -1.0;
        }
        if s.is_infinite() {
            return 1.0;
        }
        signed_balance(
            self.mu0,
            self.cutter,
            &Placement::body(self.center, s, self.rotation, false),
        )
    }

    /// `g'(c, x)`: endpoint values exactly -1 and 1, interior strictly
    /// inside (-1, 1).
    pub fn eval(&self, x: f64) -> f64 {
        if x <= -1.0 {
            return -1.0;
        }
        if x >= 1.0 {
            return 1.0;
        }
        let edge = 1.0 - self.delta;
        let inner = |x: f64| (1.0 - self.shrink) * self.balance(self.phi_inv(x));
        if x.abs() <= edge {
            inner(x)
        } else if x > 0.0 {
            let t = (x - edge) / self.delta;
            inner(edge) * (1.0 - t) + t
        } else {
            let t = (-edge - x) / self.delta;
            inner(-edge) * (1.0 - t) - t
        }
    }
}

/// Checks that a chart output bisects the pinning measure.
pub fn pinning_error<const D: usize>(
    mu0: &Measure<D>,
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> f64 {
    (2.0 * mass_in(mu0, cutter, placement) - mu0.total()).abs() / mu0.total()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec2;
    use crate::measures::Kernel;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn blob_measure(seed: u64, n: usize) -> Measure<2> {
        let mut rng = StdRng::seed_from_u64(seed);
        Measure::from_kernels(
            (0..n)
                .map(|_| Kernel {
                    center: Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)),
                    weight: rng.gen_range(0.3..1.5),
                    radius: rng.gen_range(0.05..0.15),
                })
                .collect(),
        )
        .unwrap()
    }

    fn blob_set(seed: u64) -> MeasureSet<2> {
        MeasureSet::new(vec![
            blob_measure(seed, 5),
            blob_measure(seed + 1000, 5),
            blob_measure(seed + 2000, 5),
        ])
        .unwrap()
    }

    #[test]
    fn center_formula_quarter() {
        // v = (0.25, 0): |v|/(2|v| - 1) = -0.5, so c = (-0.125, 0).
        let m = blob_measure(1, 5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let p = homothety_chart(&cutter, &m, Vec2::new(0.25, 0.0)).unwrap();
        match p {
            Placement::Body { center, .. } => {
                assert!(center.dist(&Vec2::new(-0.125, 0.0)) < 1e-12);
            }
            _ => panic!("expected body"),
        }
    }

    #[test]
    fn center_origin() {
        let m = blob_measure(2, 5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let p = homothety_chart(&cutter, &m, Vec2::new(0.0, 0.0)).unwrap();
        match p {
            Placement::Body { center, scale, .. } => {
                assert_eq!(center, Vec2::new(0.0, 0.0));
                assert!(scale > 0.0);
            }
            _ => panic!("expected body"),
        }
        assert!(pinning_error(&m, &cutter, &p) < 1e-6);
    }

    #[test]
    fn boundary_halfspace_normal() {
        let m = blob_measure(3, 5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let p = homothety_chart(&cutter, &m, Vec2::new(1.0, 0.0)).unwrap();
        match p {
            Placement::HalfSpace { normal, .. } => {
                assert!(normal.dist(&Vec2::new(-1.0, 0.0)) < 1e-12);
            }
            _ => panic!("expected half-space"),
        }
    }

    #[test]
    fn domain_error_beyond_ball() {
        let m = blob_measure(4, 5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        assert!(matches!(
            homothety_chart(&cutter, &m, Vec2::new(1.5, 0.0)),
            Err(Error::ChartDomain(_))
        ));
    }

    #[test]
    fn seam_converges_to_halfspace() {
        // Approaching |v| = 1/2 from inside, the body's residual converges
        // to the residual of the half-space limit.
        let set = blob_set(5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let dir = Vec2::new(1.0, 0.0);
        let limit = homothety_chart(&cutter, set.pinning(), dir * 0.5).unwrap();
        let r_limit = residual(&set, &cutter, &limit);
        let mut worst: f64 = 0.0;
        for k in 3..=6 {
            let eps = 10f64.powi(-k);
            let p = homothety_chart(&cutter, set.pinning(), dir * (0.5 - eps)).unwrap();
            let r = residual(&set, &cutter, &p);
            let diff = (0..2)
                .map(|i| (r.components[i] - r_limit.components[i]).abs())
                .fold(0.0f64, f64::max);
            if k >= 4 {
                worst = worst.max(diff);
            }
        }
        assert!(worst <= 1e-3, "worst = {worst}");
    }

    #[test]
    fn axis_chart_cases() {
        let set = blob_set(6);
        let cutter: CutterSpec<2> = CutterSpec::AxisBox {
            half_extents: Vector([1.0, 1.0]),
        };
        // alpha = 0: u and -u give identical placements.
        let u = Vec2::from_angle(0.37);
        let p1 = axis_chart(&cutter, set.pinning(), u, 0.0).unwrap();
        let p2 = axis_chart(&cutter, set.pinning(), -u, 0.0).unwrap();
        assert_eq!(p1, p2);

        // alpha = 1: bisecting half-space with normal u.
        let p = axis_chart(&cutter, set.pinning(), Vec2::new(0.0, 1.0), 1.0).unwrap();
        match p {
            Placement::HalfSpace { normal, offset } => {
                assert!(normal.dist(&Vec2::new(0.0, 1.0)) < 1e-12);
                let m = mass_in(set.pinning(), &cutter, &Placement::half_space(normal, offset));
                assert!((2.0 * m - set.pinning().total()).abs() < 1e-6 * set.pinning().total());
            }
            _ => panic!("expected half-space"),
        }

        // alpha = 0.5, u = (1, 0): center (1, 0), scale matches a scan.
        let p = axis_chart(&cutter, set.pinning(), Vec2::new(1.0, 0.0), 0.5).unwrap();
        match p {
            Placement::Body { center, scale, rotation, .. } => {
                assert!(center.dist(&Vec2::new(1.0, 0.0)) < 1e-12);
                let target = 0.5 * set.pinning().total();
                let mass = |s: f64| {
                    mass_in(
                        set.pinning(),
                        &cutter,
                        &Placement::body(center, s, rotation, false),
                    )
                };
                let mut lo = 1e-3;
                let mut hi = 64.0;
                for _ in 0..60 {
                    let mid = 0.5 * (lo + hi);
                    if mass(mid) >= target {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                assert!((scale - 0.5 * (lo + hi)).abs() < 1e-6);
            }
            _ => panic!("expected body"),
        }
    }

    #[test]
    fn similarity_reduces_to_homothety_at_zero_angle() {
        let set = blob_set(7);
        let cutter = CutterSpec::star_polygon(
            vec![
                Vec2::new(-0.5, -0.5),
                Vec2::new(0.5, -0.5),
                Vec2::new(0.5, 0.5),
                Vec2::new(-0.5, 0.5),
            ],
            Vec2::new(0.0, 0.0),
        );
        for v in [Vec2::new(0.2, 0.1), Vec2::new(0.7, -0.3), Vec2::new(0.0, 0.0)] {
            let a = homothety_chart(&cutter, set.pinning(), v).unwrap();
            let b =
                similarity_chart(&cutter, set.pinning(), Rotation::identity(), false, v).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn square_quarter_turn_same_residual() {
        let set = blob_set(8);
        let cutter: CutterSpec<2> = CutterSpec::AxisBox {
            half_extents: Vector([1.0, 1.0]),
        };
        let r0 = {
            let p = similarity_chart(
                &cutter,
                set.pinning(),
                Rotation::from_angle(0.3),
                false,
                Vec2::new(0.0, 0.0),
            )
            .unwrap();
            residual(&set, &cutter, &p)
        };
        let r1 = {
            let p = similarity_chart(
                &cutter,
                set.pinning(),
                Rotation::from_angle(0.3 + std::f64::consts::FRAC_PI_2),
                false,
                Vec2::new(0.0, 0.0),
            )
            .unwrap();
            residual(&set, &cutter, &p)
        };
        for i in 0..2 {
            assert!((r0.components[i] - r1.components[i]).abs() < 1e-9);
        }
    }

    #[test]
    fn residual_zero_on_matched_instance() {
        // All three measures identical: the centered bisecting disk
        // bisects every one of them.
        let m = blob_measure(9, 6);
        let set = MeasureSet::new(vec![m.clone(), m.clone(), m]).unwrap();
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let p = homothety_chart(&cutter, set.pinning(), Vec2::new(0.0, 0.0)).unwrap();
        let r = residual(&set, &cutter, &p);
        assert!(r.max_abs() < 1e-9, "residual {:?}", r.components);
    }

    #[test]
    fn boundary_antipodality_all_charts() {
        let set = blob_set(10);
        let square: CutterSpec<2> = CutterSpec::AxisBox {
            half_extents: Vector([1.0, 1.0]),
        };
        let disk: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let mut rng = StdRng::seed_from_u64(99);
        let mut worst: f64 = 0.0;
        for _ in 0..200 {
            let u = Vec2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));

            // homothety
            let a = homothety_chart(&disk, set.pinning(), u).unwrap();
            let b = homothety_chart(&disk, set.pinning(), -u).unwrap();
            let ra = residual(&set, &disk, &a);
            let rb = residual(&set, &disk, &b);
            for i in 0..2 {
                worst = worst.max((ra.components[i] + rb.components[i]).abs());
            }

            // axis at alpha = 1
            let a = axis_chart(&square, set.pinning(), u, 1.0).unwrap();
            let b = axis_chart(&square, set.pinning(), -u, 1.0).unwrap();
            let ra = residual(&set, &square, &a);
            let rb = residual(&set, &square, &b);
            for i in 0..2 {
                worst = worst.max((ra.components[i] + rb.components[i]).abs());
            }

            // similarity at fixed rotation
            let rot = Rotation::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
            let a = similarity_chart(&square, set.pinning(), rot, false, u).unwrap();
            let b = similarity_chart(&square, set.pinning(), rot, false, -u).unwrap();
            let ra = residual(&set, &square, &a);
            let rb = residual(&set, &square, &b);
            for i in 0..2 {
                worst = worst.max((ra.components[i] + rb.components[i]).abs());
            }
        }
        assert!(worst <= 1e-9, "worst antipodal defect {worst}");
    }

    #[test]
    fn mu0_pinned_by_every_chart() {
        let set = blob_set(11);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let mut rng = StdRng::seed_from_u64(12);
        for _ in 0..50 {
            let v = Vec2::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let v = if v.norm() > 1.0 { v / v.norm() } else { v };
            let p = homothety_chart(&cutter, set.pinning(), v).unwrap();
            assert!(pinning_error(set.pinning(), &cutter, &p) < 1e-6);
        }
    }

    #[test]
    fn seam_jump_bounded() {
        // Residual jumps across |v| = 1/2 are comparable to jumps just
        // inside: the chart is continuous through the seam.
        let set = blob_set(13);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let mut rng = StdRng::seed_from_u64(14);
        let h = 5e-4;
        let mut max_straddle: f64 = 0.0;
        let mut max_interior: f64 = 0.0;
        let eval = |v: Vec2| {
            let p = homothety_chart(&cutter, set.pinning(), v).unwrap();
            residual(&set, &cutter, &p)
        };
        for _ in 0..100 {
            let u = Vec2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
            let ra = eval(u * (0.5 - h));
            let rb = eval(u * (0.5 + h));
            let rc = eval(u * (0.5 + 3.0 * h));
            for i in 0..2 {
                max_straddle = max_straddle.max((ra.components[i] - rb.components[i]).abs());
                max_interior = max_interior.max((rb.components[i] - rc.components[i]).abs());
            }
        }
        assert!(
            max_straddle <= 10.0 * max_interior.max(1e-4),
            "straddle {max_straddle} interior {max_interior}"
        );
    }

    #[test]
    fn compactified_scale_conditions() {
        let m = blob_measure(15, 5);
        let cutter: CutterSpec<2> = CutterSpec::Disk { radius: 1.0 };
        let g = compactified_scale(&cutter, &m, Vec2::new(0.1, 0.2), Rotation::identity());
        assert_eq!(g.eval(-1.0), -1.0);
        assert_eq!(g.eval(1.0), 1.0);
        // phi(1) = 0 and phi_inv(0) = 1
        assert!(g.phi(1.0).abs() < 1e-15);
        assert!((g.phi_inv(0.0) - 1.0).abs() < 1e-15);
        let direct = signed_balance(
            &m,
            &cutter,
            &Placement::body(g.center, 1.0, g.rotation, false),
        );
        assert!((g.eval(0.0) - (1.0 - g.shrink) * direct).abs() < 1e-12);

        // interior strictly inside (-1, 1); monotone for the star cutter
        let mut prev = -1.0;
        for k in 1..200 {
            let x = -1.0 + 2.0 * k as f64 / 200.0;
            let y = g.eval(x);
            assert!(y > -1.0 && y < 1.0, "y = {y} at x = {x}");
            assert!(y >= prev - 1e-9, "not monotone at {x}");
            prev = y;
        }
    }
}
