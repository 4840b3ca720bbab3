//! Fixed-dimension vectors over f64.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::ops::{Add, AddAssign, Div, Index, IndexMut, Mul, Neg, Sub, SubAssign};

/// A point or direction in `R^D`. Serializes as a plain JSON array.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vector<const D: usize>(pub [f64; D]);

impl<const D: usize> Serialize for Vector<D> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter())
    }
}

impl<'de, const D: usize> Deserialize<'de> for Vector<D> {
    fn deserialize<De: Deserializer<'de>>(d: De) -> Result<Self, De::Error> {
        let v = Vec::<f64>::deserialize(d)?;
        if v.len() != D {
            return Err(De::Error::custom(format!(
                "expected {D} coordinates, got {}",
                v.len()
            )));
        }
        Ok(Vector(std::array::from_fn(|i| v[i])))
    }
}

pub type Vec2 = Vector<2>;
pub type Vec3 = Vector<3>;

impl<const D: usize> Vector<D> {
    pub fn zero() -> Self {
        Vector([0.0; D])
    }

    pub fn splat(v: f64) -> Self {
        Vector([v; D])
    }

    pub fn from_fn(f: impl FnMut(usize) -> f64) -> Self {
        Vector(std::array::from_fn(f))
    }

    /// Standard basis vector `e_i`.
    pub fn axis(i: usize) -> Self {
        let mut v = [0.0; D];
        v[i] = 1.0;
        Vector(v)
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, other: &Self) -> f64 {
        (*self - *other).norm()
    }

    /// Unit vector in the same direction, or `None` for (near-)zero input.
    pub fn normalized(&self) -> Option<Self> {
        let n = self.norm();
        if n < 1e-300 {
            None
        } else {
            Some(*self / n)
        }
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }

    pub fn min_with(&self, other: &Self) -> Self {
        Vector::from_fn(|i| self.0[i].min(other.0[i]))
    }

    pub fn max_with(&self, other: &Self) -> Self {
        Vector::from_fn(|i| self.0[i].max(other.0[i]))
    }

    /// Lexicographically canonical sign: flips so the first coordinate with
    /// magnitude above `tol` is positive. Returns (canonical, flipped).
    pub fn canonical_sign(&self) -> (Self, bool) {
        for c in self.0 {
            if c > 1e-14 {
                return (*self, false);
            }
            if c < -1e-14 {
                return (-*self, true);
            }
        }
        (*self, false)
    }
}

impl Vec2 {
    pub fn new(x: f64, y: f64) -> Self {
        Vector([x, y])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    /// Counterclockwise quarter turn.
    pub fn perp(&self) -> Self {
        Vector([-self.0[1], self.0[0]])
    }

    pub fn cross(&self, other: &Self) -> f64 {
        self.0[0] * other.0[1] - self.0[1] * other.0[0]
    }

    pub fn angle(&self) -> f64 {
        self.0[1].atan2(self.0[0])
    }

    pub fn from_angle(theta: f64) -> Self {
        Vector([theta.cos(), theta.sin()])
    }
}

impl Vec3 {
    pub fn new(x: f64, y: f64, z: f64) -> Self {
        Vector([x, y, z])
    }

    pub fn cross(&self, other: &Self) -> Self {
        Vector([
            self.0[1] * other.0[2] - self.0[2] * other.0[1],
            self.0[2] * other.0[0] - self.0[0] * other.0[2],
            self.0[0] * other.0[1] - self.0[1] * other.0[0],
        ])
    }

    /// Some unit vector orthogonal to `self` (assumed unit).
    pub fn any_perp(&self) -> Self {
        let trial = if self.0[0].abs() < 0.9 {
            Vec3::new(1.0, 0.0, 0.0)
        } else {
            Vec3::new(0.0, 1.0, 0.0)
        };
        (trial - *self * trial.dot(self)).normalized().unwrap()
    }
}

impl<const D: usize> Index<usize> for Vector<D> {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl<const D: usize> IndexMut<usize> for Vector<D> {
    fn index_mut(&mut self, i: usize) -> &mut f64 {
        &mut self.0[i]
    }
}

impl<const D: usize> Add for Vector<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Vector::from_fn(|i| self.0[i] + rhs.0[i])
    }
}

impl<const D: usize> AddAssign for Vector<D> {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..D {
            self.0[i] += rhs.0[i];
        }
    }
}

impl<const D: usize> Sub for Vector<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Vector::from_fn(|i| self.0[i] - rhs.0[i])
    }
}

impl<const D: usize> SubAssign for Vector<D> {
    fn sub_assign(&mut self, rhs: Self) {
        for i in 0..D {
            self.0[i] -= rhs.0[i];
        }
    }
}

impl<const D: usize> Neg for Vector<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Vector::from_fn(|i| -self.0[i])
    }
}

impl<const D: usize> Mul<f64> for Vector<D> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        Vector::from_fn(|i| self.0[i] * rhs)
    }
}

impl<const D: usize> Div<f64> for Vector<D> {
    type Output = Self;
    fn div(self, rhs: f64) -> Self {
        Vector::from_fn(|i| self.0[i] / rhs)
    }
}
