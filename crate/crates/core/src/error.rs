use std::fmt;

use thiserror::Error;

use crate::formula::ParseError;

/// Which defining law a table failed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axiom {
    /// Cayley table entry out of range.
    Closure,
    Associativity,
    Identity,
    Inverse,
    /// `a -> a∘g` must be a K-linear bijection.
    Linearity,
    /// `(a∘g1)∘g2 = a∘(g1 g2)`.
    Composition,
    /// `a∘1 = a`.
    Unit,
}

impl Axiom {
    /// Numeric id for the three representation axioms; group axioms have none.
    pub fn representation_id(self) -> Option<u8> {
        match self {
            Axiom::Linearity => Some(1),
            Axiom::Composition => Some(2),
            Axiom::Unit => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Closure => "group closure",
            Axiom::Associativity => "group associativity",
            Axiom::Identity => "group identity",
            Axiom::Inverse => "group inverse",
            Axiom::Linearity => "axiom 1 (linearity)",
            Axiom::Composition => "axiom 2 (composition)",
            Axiom::Unit => "axiom 3 (unit)",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("axiom violation: {axiom}: {detail}")]
    AxiomViolation {
        axiom: Axiom,
        /// Element indices of the first failing instance.
        witness: Vec<usize>,
        detail: String,
    },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{what} exceeds guard: {actual} > {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("not a filter: {0}")]
    NotAFilter(String),
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("unbound variable {0}")]
    UnboundVariable(Var),
    #[error("ring mismatch: term over Z/{term} evaluated in a Z/{rep}-module")]
    RingMismatch { term: u32, rep: u32 },
    #[error("formula is not action-type")]
    NotActionType,
    #[error("support not covered: y{0} occurs in the formula but not in Y0")]
    SupportNotCovered(u32),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{path}: {message}")]
    Input { path: String, message: String },
}

/// A variable of either sort, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(u32),
    Y(u32),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X(i) => write!(f, "x{i}"),
            Var::Y(i) => write!(f, "y{i}"),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(what: &'static str, actual: usize, limit: usize) -> Result<()> {
    if actual > limit {
        Err(Error::GuardExceeded {
            what,
            limit,
            actual,
        })
    } else {
        Ok(())
    }
}
