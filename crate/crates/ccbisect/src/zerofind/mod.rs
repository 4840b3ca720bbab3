//! Zero location for residual maps on compactified chart domains.
//!
//! In the plane the solver subdivides the domain into boxes and keeps those
//! whose boundary winding number is nonzero; the root domain's boundary maps
//! to half-space placements whose residual winds an odd number of times, so
//! a certified box always exists for continuous antipodal charts. A damped
//! Newton polish runs from every certified box center. In `R^3` no degree
//! certificate is attempted: multistart Newton over a coarse lattice plus a
//! norm-descent fallback, with failure surfaced as `NoZeroFound`.

mod newton;
mod parity;
mod solve;
mod subdivide;
mod winding;

pub use newton::{damped_newton, NewtonResult};
pub use parity::{homotopy_parity_check, ParityReport};
pub use solve::{solve, BisectionResult, Mode, SolveConfig};
pub use subdivide::{subdivide_solve_2d, PlaneSolve, SubdivideOptions};
pub use winding::{winding_number, WindingOptions};

use crate::parametrize::ChartPoint;
use serde::Serialize;

/// A subdivision box together with its boundary winding number.
#[derive(Clone, Debug, Serialize)]
pub struct WindingCell {
    pub lo: [f64; 2],
    pub hi: [f64; 2],
    pub winding: i32,
}

/// Outcome of a chart-level solve.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport<const D: usize> {
    pub zero: ChartPoint<D>,
    /// Max-abs residual component, recomputed from the zero.
    pub residual_norm: f64,
    pub certificates: Vec<WindingCell>,
    pub evaluations: u64,
    pub depth: usize,
}
