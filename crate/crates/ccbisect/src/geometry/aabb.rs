//! Axis-aligned boxes.

use super::vector::{Vec2, Vector};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aabb<const D: usize> {
    pub lo: Vector<D>,
    pub hi: Vector<D>,
}

impl<const D: usize> Aabb<D> {
    pub fn new(lo: Vector<D>, hi: Vector<D>) -> Self {
        Aabb { lo, hi }
    }

    pub fn from_center_half(center: Vector<D>, half: f64) -> Self {
        Aabb {
            lo: center - Vector::splat(half),
            hi: center + Vector::splat(half),
        }
    }

    pub fn center(&self) -> Vector<D> {
        (self.lo + self.hi) * 0.5
    }

    pub fn volume(&self) -> f64 {
        (0..D).map(|i| (self.hi[i] - self.lo[i]).max(0.0)).product()
    }

    pub fn diameter(&self) -> f64 {
        (self.hi - self.lo).norm()
    }

    pub fn contains_point(&self, x: &Vector<D>) -> bool {
        (0..D).all(|i| x[i] >= self.lo[i] && x[i] <= self.hi[i])
    }

    pub fn intersects(&self, other: &Aabb<D>) -> bool {
        (0..D).all(|i| self.lo[i] <= other.hi[i] && other.lo[i] <= self.hi[i])
    }

    pub fn union(&self, other: &Aabb<D>) -> Self {
        Aabb {
            lo: self.lo.min_with(&other.lo),
            hi: self.hi.max_with(&other.hi),
        }
    }

    pub fn expand(&self, pad: f64) -> Self {
        Aabb {
            lo: self.lo - Vector::splat(pad),
            hi: self.hi + Vector::splat(pad),
        }
    }

    /// Squared distance from a point to the box (0 when inside).
    pub fn dist_sq_to_point(&self, x: &Vector<D>) -> f64 {
        (0..D)
            .map(|i| {
                let d = if x[i] < self.lo[i] {
                    self.lo[i] - x[i]
                } else if x[i] > self.hi[i] {
                    x[i] - self.hi[i]
                } else {
                    0.0
                };
                d * d
            })
            .sum()
    }

    /// Farthest corner distance from a point.
    pub fn max_dist_to_point(&self, x: &Vector<D>) -> f64 {
        (0..D)
            .map(|i| {
                let d = (x[i] - self.lo[i]).abs().max((x[i] - self.hi[i]).abs());
                d * d
            })
            .sum::<f64>()
            .sqrt()
    }
}

impl Aabb<2> {
    /// Corners in CCW order.
    pub fn corners_ccw(&self) -> [Vec2; 4] {
        [
            Vec2::new(self.lo[0], self.lo[1]),
            Vec2::new(self.hi[0], self.lo[1]),
            Vec2::new(self.hi[0], self.hi[1]),
            Vec2::new(self.lo[0], self.hi[1]),
        ]
    }
}

impl Aabb<3> {
    pub fn corners(&self) -> [Vector<3>; 8] {
        let mut out = [Vector::zero(); 8];
        for (k, c) in out.iter_mut().enumerate() {
            *c = Vector([
                if k & 1 == 0 { self.lo[0] } else { self.hi[0] },
                if k & 2 == 0 { self.lo[1] } else { self.hi[1] },
                if k & 4 == 0 { self.lo[2] } else { self.hi[2] },
            ]);
        }
        out
    }
}
