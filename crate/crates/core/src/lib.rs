pub mod algebra;
pub mod bitset;
pub mod class_theory;
pub mod cli;
pub mod error;
pub mod formula;
pub mod free;
pub mod semantics;
pub mod starter;
pub use error::{Error, Result};
