//! Exact arithmetic in truncated big Witt rings and their relatives.
//!
//! * [`algebra`]: coefficient rings (`Z`, `Q`, `Z/m`, `Z[x_1..x_k]`).
//! * [`series`]: truncated unit power series with ghost, orbit and
//!   binomial coordinates.
//! * [`witt`]: the Witt ring, Frobenius, Verschiebung, exterior powers and
//!   Adams operations.
//! * [`symfn`]: symmetric functions in the basis of series coefficients.
//! * [`endo`]: endomorphisms of free modules and rational classes.
//! * [`burnside`]: the Burnside ring of the infinite cyclic group.
//! * [`crysto`]: crystallographic groups, bar cohomology, expansive maps.
//! * [`json`]: the JSON interchange formats.

pub mod algebra;
pub mod burnside;
mod cache;
pub mod crysto;
pub mod endo;
pub mod error;
pub mod json;
pub mod series;
pub mod symfn;
pub mod witt;

pub use algebra::{Elem, Monomial, Poly, Ring};
pub use error::{Error, Result};
pub use series::{BinomialCoords, GhostVector, OrbitCoords, UnitSeries};
