//! Concrete copies of a cutter: scaled/rotated/reflected bodies and
//! half-space limits.

use super::rotation::Rotation;
use super::vector::Vector;
use serde::{Deserialize, Serialize};

/// A placed copy. `Body` maps local point `y` to
/// `center + scale * R * M * (y - star_point)` where `M` flips the first
/// coordinate when `reflected`. `HalfSpace` is the set `<x, normal> >= offset`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Placement<const D: usize> {
    Body {
        center: Vector<D>,
        scale: f64,
        rotation: Rotation<D>,
        reflected: bool,
    },
    HalfSpace {
        normal: Vector<D>,
        offset: f64,
    },
}

impl<const D: usize> Placement<D> {
    pub fn body(center: Vector<D>, scale: f64, rotation: Rotation<D>, reflected: bool) -> Self {
        Placement::Body {
            center,
            scale,
            rotation,
            reflected,
        }
    }

    pub fn half_space(normal: Vector<D>, offset: f64) -> Self {
        Placement::HalfSpace { normal, offset }
    }

    pub fn is_half_space(&self) -> bool {
        matches!(self, Placement::HalfSpace { .. })
    }

    pub fn scale(&self) -> Option<f64> {
        match self {
            Placement::Body { scale, .. } => Some(*scale),
            Placement::HalfSpace { .. } => None,
        }
    }
}

pub(crate) fn reflect_first<const D: usize>(mut v: Vector<D>, reflected: bool) -> Vector<D> {
    if reflected {
        v[0] = -v[0];
    }
    v
}

/// World position of a local cutter point under a body placement.
pub(crate) fn body_to_world<const D: usize>(
    star_point: Vector<D>,
    center: Vector<D>,
    scale: f64,
    rotation: &Rotation<D>,
    reflected: bool,
    y: Vector<D>,
) -> Vector<D> {
    center + rotation.apply(reflect_first(y - star_point, reflected)) * scale
}

/// Local cutter coordinates of a world point under a body placement.
pub(crate) fn world_to_body<const D: usize>(
    star_point: Vector<D>,
    center: Vector<D>,
    scale: f64,
    rotation: &Rotation<D>,
    reflected: bool,
    x: Vector<D>,
) -> Vector<D> {
    star_point + reflect_first(rotation.apply_inv(x - center), reflected) / scale
}
