pub mod catalog;
pub mod dehn;
pub mod mapping;
pub mod word;

pub use mapping::MappingClass;
pub use word::{Presentation, Word};
