//! Exact scalars, polynomials, truncated series and matrices.

pub mod cyclo;
pub mod matrix;
pub mod poly;
pub mod series;

pub use cyclo::{CycloField, CycloNumber};
pub use matrix::ExactMatrix;
pub use poly::QPoly;
pub use series::QUSeries;
