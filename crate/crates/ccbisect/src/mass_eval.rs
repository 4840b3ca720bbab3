//! Mass of a placed cutter, the bisecting scale (midpoint rule) and
//! enumeration of all scale roots for non-star-shaped cutters.
//!
//! For a star-shaped cutter scaled about its star point, the mass inside is
//! nondecreasing in the scale, so the scales at which it captures exactly
//! half of the pinning measure form an interval; `bisect_scale` returns its
//! midpoint via two one-sided predicate bisections. Without star-shapedness
//! the normalized scale function can change sign several times;
//! `enumerate_scale_roots` lists every sign change on a log-spaced scan.

use crate::error::{Error, Result};
use crate::geometry::{BoxClass, CutterSpec, PlacedQuery, Placement, Rotation, Vector};
use crate::measures::Measure;

/// Relative tolerance for scale and offset bisections.
pub const BISECT_REL_TOL: f64 = 1e-10;
/// Cap on exponential bracketing steps.
pub const MAX_DOUBLINGS: usize = 200;

/// Mass of `measure` inside the placed cutter.
pub fn mass_in<const D: usize>(
    measure: &Measure<D>,
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> f64 {
    let q = match PlacedQuery::new(cutter, placement) {
        Ok(q) => q,
        Err(_) => return 0.0,
    };
    let mut acc = 0.0;
    measure.for_each_cell(|b, w| match q.classify(&b) {
        BoxClass::Inside => acc += w,
        BoxClass::Outside => {}
        BoxClass::Straddle => acc += w * q.fraction(&b),
    });
    acc
}

/// Normalized signed mass balance of the pinning measure:
/// `g = (mass inside - mass outside) / total`, in [-1, 1].
pub fn signed_balance<const D: usize>(
    measure: &Measure<D>,
    cutter: &CutterSpec<D>,
    placement: &Placement<D>,
) -> f64 {
    (2.0 * mass_in(measure, cutter, placement) - measure.total()) / measure.total()
}

/// Sampled scale profile at a fixed center and rotation.
#[derive(Clone, Debug)]
pub struct ScaleProfile<const D: usize> {
    pub center: Vector<D>,
    pub rotation: Rotation<D>,
    /// `(s, g(s))` pairs, increasing in `s`.
    pub samples: Vec<(f64, f64)>,
}

pub fn scale_profile<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    center: Vector<D>,
    rotation: Rotation<D>,
    scales: &[f64],
) -> ScaleProfile<D> {
    let samples = scales
        .iter()
        .map(|&s| {
            let p = Placement::body(center, s, rotation, false);
            (s, signed_balance(mu0, cutter, &p))
        })
        .collect();
    ScaleProfile {
        center,
        rotation,
        samples,
    }
}

/// Scale at which the placed cutter captures exactly half of `mu0`,
/// using the midpoint of the interval of bisecting scales.
///
/// `s_min = inf{s : mass(s) >= T/2}` and `s_max = sup{s : mass(s) <= T/2}`
/// are each located by exponential bracketing followed by bisection to
/// relative tolerance 1e-10; the result is their average.
pub fn bisect_scale<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    center: Vector<D>,
    rotation: Rotation<D>,
) -> Result<f64> {
    bisect_scale_at(cutter, mu0, center, rotation, false, None)
}

pub(crate) fn bisect_scale_at<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    center: Vector<D>,
    rotation: Rotation<D>,
    reflected: bool,
    hint: Option<f64>,
) -> Result<f64> {
    if !cutter.is_star_shaped() {
        return Err(Error::NotStarShaped);
    }
    let target = 0.5 * mu0.total();
    let mass = |s: f64| {
        mass_in(
            mu0,
            cutter,
            &Placement::body(center, s, rotation, reflected),
        )
    };

    // Exponential bracketing around the hint (or a support-sized guess).
    let mut s_hi = hint
        .filter(|h| h.is_finite() && *h > 0.0)
        .unwrap_or_else(|| {
            (mu0.support_bbox().diameter() / cutter.circumradius()).max(1e-6)
        });
    let mut n = 0;
    while mass(s_hi) <= target {
        s_hi *= 2.0;
        n += 1;
        if n > MAX_DOUBLINGS {
            return Err(Error::NoBracket(MAX_DOUBLINGS));
        }
    }
    let mut s_lo = s_hi;
    n = 0;
    while mass(s_lo) >= target {
        s_lo *= 0.5;
        n += 1;
        if n > MAX_DOUBLINGS {
            return Err(Error::NoBracket(MAX_DOUBLINGS));
        }
    }

    // mass(s_lo) < target < mass(s_hi); mass nondecreasing in between.
    let s_min = bisect_first(s_lo, s_hi, |s| mass(s) >= target);
    let s_max = bisect_first(s_lo, s_hi, |s| mass(s) > target);
    Ok(0.5 * (s_min + s_max))
}

/// First point where a monotone (false -> true) predicate flips, to
/// relative tolerance [`BISECT_REL_TOL`]. `p(lo)` must be false, `p(hi)` true.
fn bisect_first(mut lo: f64, mut hi: f64, p: impl Fn(f64) -> bool) -> f64 {
    for _ in 0..200 {
        if hi - lo <= BISECT_REL_TOL * hi.abs().max(1e-300) {
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

/// All scales where the normalized balance `g(c, .)` changes sign, sorted
/// ascending.
///
/// The scan grid is 512 log-spaced points from `s_hit/64` to
/// `64 * s_cover` (`s_hit` = first touch, `s_cover` = full cover), clipped
/// to `s_max` when finite. Sign changes are refined by bisection.
/// Zero-touching without a sign change is not detected.
pub fn enumerate_scale_roots<const D: usize>(
    cutter: &CutterSpec<D>,
    mu0: &Measure<D>,
    center: Vector<D>,
    rotation: Rotation<D>,
    s_max: f64,
) -> Result<Vec<f64>> {
    let total = mu0.total();
    let g = |s: f64| {
        (2.0 * mass_in(
            mu0,
            cutter,
            &Placement::body(center, s, rotation, false),
        ) - total)
            / total
    };

    let ref_scale = (mu0.support_bbox().diameter() / cutter.circumradius()).max(1e-9);

    // First-touch scale: largest grid anchor with zero mass.
    let mut s_hit = ref_scale;
    let mut n = 0;
    while g(s_hit) <= -1.0 + 1e-12 {
        s_hit *= 2.0;
        n += 1;
        if n > MAX_DOUBLINGS {
            return Err(Error::NoBracket(MAX_DOUBLINGS));
        }
    }
    n = 0;
    while g(s_hit * 0.5) > -1.0 + 1e-12 {
        s_hit *= 0.5;
        n += 1;
        if n > MAX_DOUBLINGS {
            break; // touches at every scale; scan from a small floor
        }
    }

    // Full-cover scale (may not exist for holed cutters).
    let mut s_cover = s_hit.max(ref_scale);
    let mut covered = false;
    for _ in 0..MAX_DOUBLINGS {
        if g(s_cover) >= 1.0 - 1e-12 {
            covered = true;
            break;
        }
        s_cover *= 2.0;
    }
    if !covered {
        s_cover = s_hit.max(ref_scale) * 2f64.powi(24);
    }

    let mut lo = s_hit / 64.0;
    let mut hi = s_cover * 64.0;
    if s_max.is_finite() && s_max > 0.0 {
        hi = hi.min(s_max);
        lo = lo.min(hi / 2.0);
    }

    const SCAN: usize = 512;
    let ratio = (hi / lo).powf(1.0 / (SCAN as f64 - 1.0));
    let mut roots = Vec::new();
    let mut prev_s = lo;
    let mut prev_g = g(lo);
    for k in 1..SCAN {
        let s = lo * ratio.powi(k as i32);
        let gs = g(s);
        if prev_g == 0.0 {
            roots.push(prev_s);
        } else if prev_g * gs < 0.0 {
            // refine by sign bisection
            let (mut a, mut b, ga) = (prev_s, s, prev_g);
            for _ in 0..200 {
                if b - a <= BISECT_REL_TOL * b {
                    break;
                }
                let mid = 0.5 * (a + b);
                let gm = g(mid);
                if gm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if (gm > 0.0) == (ga > 0.0) {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            roots.push(0.5 * (a + b));
        }
        prev_s = s;
        prev_g = gs;
    }
    roots.dedup_by(|a, b| (*a - *b).abs() <= 1e-9 * b.abs());
    Ok(roots)
}
