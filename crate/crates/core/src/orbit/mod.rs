//! Closures of images and of mapping-class orbits of characters.

pub mod classify;
pub mod closure;
pub mod hmv;

pub use classify::{classify, Classification, OrbitClosure};
pub use closure::{image_closure, Subgroup};
pub use hmv::{hmv_invariant, Hmv};
