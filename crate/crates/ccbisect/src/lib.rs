//! Simultaneous bisection of `d+1` mass distributions in `R^d` (`d` = 2 or 3)
//! by a scaled translated copy of a fixed compact shape, optionally rotated
//! and reflected.
//!
//! The solver works in three layers:
//!
//! 1. [`parametrize`] maps points of a compact parameter domain to placements
//!    of the shape that already bisect the first measure. The scale is pinned
//!    by a monotone bisection ([`mass_eval::bisect_scale`]); as the parameter
//!    approaches the domain boundary the placement degenerates to a bisecting
//!    half-space, and antipodal boundary points yield complementary
//!    half-spaces.
//! 2. The residual map ([`parametrize::residual`]) collects the signed,
//!    normalized mass imbalances of the remaining `d` measures. Zeros of the
//!    residual over the chart are simultaneous bisections.
//! 3. [`zerofind`] locates zeros with winding-number certified quadtree
//!    subdivision in the plane (multistart Newton in `R^3`), exploiting the
//!    antipodal boundary behavior that guarantees existence.
//!
//! [`oracle`] provides brute-force grid search and a Monte-Carlo mass
//! estimator used as independent ground truth in the test suite.

pub mod error;
pub mod geometry;
pub mod instances;
pub mod mass_eval;
pub mod measures;
pub mod oracle;
pub mod parametrize;
pub mod zerofind;

pub use error::{Error, Result};
pub use geometry::{contains, Aabb, CutterSpec, Placement, Rotation, Vec2, Vec3, Vector};
pub use measures::{load_measures, Measure, MeasureSet};
pub use parametrize::{ChartPoint, Residual};
pub use zerofind::{solve, BisectionResult, Mode, SolveConfig};
