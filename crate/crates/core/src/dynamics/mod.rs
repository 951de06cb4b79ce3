//! Dynamics of the stabilizer of a character on H¹_α.

pub mod chueshev;
pub mod jorgensen;
pub mod predicted;
pub mod walk;

pub use chueshev::{chueshev_matrix, mu_delta, parabolic_pair, ChueshevMatrix, ParabolicPair};
pub use jorgensen::{jorgensen_matrix, jorgensen_scalar, Verdict};
pub use predicted::{predicted_closure, PredictedClosure};
pub use walk::{random_walk, walk_chains, WalkConfig, WalkReport};
