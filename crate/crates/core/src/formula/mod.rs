//! The formula language: AST, concrete syntax, supports, and classification.

mod ast;
mod classify;
mod parse;
mod print;
pub mod random;

pub use ast::Formula;
pub use classify::{classify, FormulaClass};
pub use parse::{batch_lines, parse, ParseError, MAX_EXPONENT};
pub use random::{random_formula, GeneratorConfig};
