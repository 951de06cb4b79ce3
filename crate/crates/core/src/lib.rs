//! Affine representations of surface groups: exact characters and twisted
//! cohomology, mapping-class dynamics, orbit-closure classification, and
//! geometrization by polygon surgeries.

pub mod arith;
pub mod character;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod group;
pub mod orbit;
pub mod surface;

pub use error::{Error, Result};
