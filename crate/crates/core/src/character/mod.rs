#[allow(clippy::module_inception)]
pub mod character;
pub mod cocycle;
pub mod cohomology;
pub mod period;
pub mod repjson;
pub mod volume;

pub use character::Character;
pub use cocycle::{AffineRep, Cocycle};
pub use cohomology::CohomologyClass;
pub use period::PeriodVector;
pub use volume::{VolSign, VolumeForm};
