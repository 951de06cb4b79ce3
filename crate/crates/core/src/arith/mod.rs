pub mod cyclo;
pub mod linalg;
pub mod num;
pub mod poly;
pub mod real;
pub mod symbols;

pub use cyclo::Cyclo;
pub use num::Num;
pub use real::{ExactReal, LogValue};
pub use symbols::Symbols;
