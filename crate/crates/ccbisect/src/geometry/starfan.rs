//! Fan decomposition of star-shaped polygons.

use super::clip::shoelace;
use super::vector::Vec2;
use crate::error::{Error, Result};

/// Decomposes a CCW polygon into triangles `(p, v_i, v_{i+1})`.
///
/// The fan partitions the polygon exactly when it is star-shaped about `p`;
/// a fan triangle with negative orientation witnesses the violation and is
/// reported as `StarViolation` with its index.
pub fn star_fan(vertices: &[Vec2], p: Vec2) -> Result<Vec<[Vec2; 3]>> {
    if vertices.len() < 3 {
        return Err(Error::InvalidCutter("polygon needs >= 3 vertices".into()));
    }
    let scale = vertices
        .iter()
        .map(|v| v.dist(&p))
        .fold(0.0f64, f64::max)
        .max(1e-300);
    let n = vertices.len();
    let mut fan = Vec::with_capacity(n);
    for i in 0..n {
        let a = vertices[i];
        let b = vertices[(i + 1) % n];
        let cross = (a - p).cross(&(b - p));
        if cross < -1e-12 * scale * scale {
            return Err(Error::StarViolation { index: i });
        }
        fan.push([p, a, b]);
    }
    Ok(fan)
}
