//! Syntactic shapes of axiom formulas.
//!
//! Only quantifier-free shapes are recognized; a formula with a leading
//! quantifier is none of identity, pseudo-, quasi-identity or universal.

use super::ast::Formula;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormulaClass {
    pub is_action_type: bool,
    /// A single equality.
    pub is_identity: bool,
    /// `u1 ∨ … ∨ un` over equalities.
    pub is_pseudo_identity: bool,
    /// `u1 ∧ … ∧ un ⇒ u`, read as `¬(u1 ∧ … ∧ un) ∨ u` or `¬u1 ∨ … ∨ ¬un ∨ u`.
    pub is_quasi_identity: bool,
    /// `u1 ∨ … ∨ un ∨ ¬v1 ∨ … ∨ ¬vm`.
    pub is_universal: bool,
}

impl FormulaClass {
    pub fn action_identity(&self) -> bool {
        self.is_identity && self.is_action_type
    }

    pub fn action_pseudo_identity(&self) -> bool {
        self.is_pseudo_identity && self.is_action_type
    }

    pub fn action_quasi_identity(&self) -> bool {
        self.is_quasi_identity && self.is_action_type
    }

    pub fn action_universal(&self) -> bool {
        self.is_universal && self.is_action_type
    }
}

fn disjuncts<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::Or(a, b) => {
            disjuncts(a, out);
            disjuncts(b, out);
        }
        _ => out.push(f),
    }
}

fn is_conjunction_of_atoms(f: &Formula) -> bool {
    match f {
        Formula::And(a, b) => is_conjunction_of_atoms(a) && is_conjunction_of_atoms(b),
        _ => f.is_atom(),
    }
}

/// `¬(v1 ∧ … ∧ vk)`, which covers the single negated atom.
fn is_negated_premise(f: &Formula) -> bool {
    matches!(f, Formula::Not(c) if is_conjunction_of_atoms(c))
}

pub fn classify(f: &Formula) -> FormulaClass {
    let mut parts = Vec::new();
    disjuncts(f, &mut parts);
    let positive = parts.iter().filter(|p| p.is_atom()).count();
    let all_literal = parts.iter().all(|p| p.is_atom() || is_negated_premise(p));
    FormulaClass {
        is_action_type: f.is_action_type(),
        is_identity: f.is_atom(),
        is_pseudo_identity: positive == parts.len(),
        is_quasi_identity: all_literal && positive == 1,
        is_universal: all_literal,
    }
}
