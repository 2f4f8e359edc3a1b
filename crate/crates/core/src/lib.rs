//! Parking spaces of finite real reflection groups, computed exactly.

pub mod algebra;
pub mod bijections;
pub mod catalan;
mod error;
pub mod flats;
pub mod group;
pub mod invariants;
pub mod parking;
pub mod shi;
pub(crate) mod util;

pub use error::{Error, Result};
