//! Proper rotations stored as row-major orthonormal matrices.

use super::vector::{Vec3, Vector};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Rotation of `R^D`, determinant +1, columns orthonormal to 1e-12.
/// Serializes as a row-major nested JSON array.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rotation<const D: usize> {
    /// `m[row][col]`; application is `y_r = sum_c m[r][c] x_c`.
    pub m: [[f64; D]; D],
}

impl<const D: usize> Serialize for Rotation<D> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.m.iter().map(|row| row.to_vec()))
    }
}

impl<'de, const D: usize> Deserialize<'de> for Rotation<D> {
    fn deserialize<De: Deserializer<'de>>(d: De) -> Result<Self, De::Error> {
        let rows = Vec::<Vec<f64>>::deserialize(d)?;
        if rows.len() != D || rows.iter().any(|r| r.len() != D) {
            return Err(De::Error::custom(format!("expected a {D}x{D} matrix")));
        }
        Ok(Rotation {
            m: std::array::from_fn(|r| std::array::from_fn(|c| rows[r][c])),
        })
    }
}

impl<const D: usize> Rotation<D> {
    pub fn identity() -> Self {
        let mut m = [[0.0; D]; D];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Rotation { m }
    }

    pub fn apply(&self, v: Vector<D>) -> Vector<D> {
        Vector::from_fn(|r| (0..D).map(|c| self.m[r][c] * v[c]).sum())
    }

    /// Applies the inverse (= transpose).
    pub fn apply_inv(&self, v: Vector<D>) -> Vector<D> {
        Vector::from_fn(|c| (0..D).map(|r| self.m[r][c] * v[r]).sum())
    }

    /// `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let mut m = [[0.0; D]; D];
        for r in 0..D {
            for c in 0..D {
                m[r][c] = (0..D).map(|k| self.m[r][k] * other.m[k][c]).sum();
            }
        }
        Rotation { m }
    }

    pub fn transpose(&self) -> Self {
        let mut m = [[0.0; D]; D];
        for r in 0..D {
            for c in 0..D {
                m[r][c] = self.m[c][r];
            }
        }
        Rotation { m }
    }

    pub fn column(&self, c: usize) -> Vector<D> {
        Vector::from_fn(|r| self.m[r][c])
    }

    /// Max deviation of `R^T R` from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..D {
            for b in 0..D {
                let dot: f64 = (0..D).map(|r| self.m[r][a] * self.m[r][b]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    pub fn det(&self) -> f64 {
        match D {
            2 => self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0],
            3 => {
                let m = &self.m;
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                    - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            _ => unreachable!("only d = 2, 3 supported"),
        }
    }

    /// Rotation in the plane of `from` and `to` (both unit) mapping `from`
    /// onto `to`, fixing the orthogonal complement. Antiparallel inputs
    /// rotate by pi in a plane containing `from` and an arbitrary
    /// perpendicular.
    pub fn aligning(from: Vector<D>, to: Vector<D>) -> Self {
        let c = from.dot(&to);
        if c > 1.0 - 1e-15 {
            return Self::identity();
        }
        if c < -1.0 + 1e-15 {
            // pi turn: negate the plane spanned by `from` and any perp.
            let p = perp_of(from);
            let mut m = Self::identity().m;
            for r in 0..D {
                for col in 0..D {
                    m[r][col] -= 2.0 * (from[r] * from[col] + p[r] * p[col]);
                }
            }
            return Rotation { m };
        }
        let u2 = (to - from * c).normalized().expect("non-degenerate");
        let s = (to - from * c).norm();
        let mut m = Self::identity().m;
        for r in 0..D {
            for col in 0..D {
                m[r][col] += (c - 1.0) * (from[r] * from[col] + u2[r] * u2[col])
                    + s * (u2[r] * from[col] - from[r] * u2[col]);
            }
        }
        Rotation { m }
    }
}

fn perp_of<const D: usize>(v: Vector<D>) -> Vector<D> {
    // Gram-Schmidt a basis vector against v.
    for i in 0..D {
        let e = Vector::axis(i);
        let w = e - v * v.dot(&e);
        if let Some(u) = w.normalized() {
            if w.norm() > 1e-6 {
                return u;
            }
        }
    }
    unreachable!("no perpendicular found");
}

impl Rotation<2> {
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Rotation {
            m: [[c, -s], [s, c]],
        }
    }

    pub fn angle(&self) -> f64 {
        self.m[1][0].atan2(self.m[0][0])
    }
}

impl Rotation<3> {
    /// Rodrigues formula; `axis` must be unit.
    pub fn from_axis_angle(axis: Vec3, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let k = axis;
        let mut m = [[0.0; 3]; 3];
        for r in 0..3 {
            for col in 0..3 {
                let kk = k[r] * k[col];
                let id = if r == col { 1.0 } else { 0.0 };
                m[r][col] = c * id + (1.0 - c) * kk;
            }
        }
        // + s * [k]_x
        m[0][1] += -s * k[2];
        m[0][2] += s * k[1];
        m[1][0] += s * k[2];
        m[1][2] += -s * k[0];
        m[2][0] += -s * k[1];
        m[2][1] += s * k[0];
        Rotation { m }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Vec2;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn angle_roundtrip() {
        let r = Rotation::from_angle(0.7);
        assert!((r.angle() - 0.7).abs() < 1e-14);
        assert!(r.orthonormality_defect() < 1e-14);
        assert!((r.det() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn aligning_is_proper_and_maps() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let a = Vec2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
            let b = Vec2::from_angle(rng.gen_range(0.0..std::f64::consts::TAU));
            let r = Rotation::aligning(a, b);
            assert!(r.apply(a).dist(&b) < 1e-12);
            assert!(r.orthonormality_defect() < 1e-12);
            assert!((r.det() - 1.0).abs() < 1e-12);
        }
        for _ in 0..200 {
            let a = Vec3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            )
            .normalized()
            .unwrap();
            let b = Vec3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            )
            .normalized()
            .unwrap();
            let r = Rotation::aligning(a, b);
            assert!(r.apply(a).dist(&b) < 1e-12);
            assert!(r.orthonormality_defect() < 1e-12, "{}", r.orthonormality_defect());
            assert!((r.det() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn aligning_antiparallel() {
        let a = Vec3::new(0.0, 0.0, 1.0);
        let r = Rotation::aligning(a, -a);
        assert!(r.apply(a).dist(&-a) < 1e-12);
        assert!((r.det() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn axis_angle_matches_2d_in_plane() {
        let r3 = Rotation::from_axis_angle(Vec3::new(0.0, 0.0, 1.0), 0.9);
        let r2 = Rotation::from_angle(0.9);
        let v = Vec3::new(0.3, -0.4, 0.0);
        let got = r3.apply(v);
        let want = r2.apply(Vec2::new(0.3, -0.4));
        assert!((got[0] - want[0]).abs() < 1e-14);
        assert!((got[1] - want[1]).abs() < 1e-14);
        assert!(got[2].abs() < 1e-14);
    }
}
