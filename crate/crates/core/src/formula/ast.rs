use std::collections::BTreeSet;

use crate::free::{FreeWord, ModuleTerm};

/// A formula of the two-sorted language: equalities `w ≡ 0` and `f ≡ 1`
/// closed under `∨ ∧ ¬ ∃x ∃y`. Implication and `∀` exist only as parser sugar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    ActionEq(ModuleTerm),
    GroupEq(FreeWord),
    Or(Box<Formula>, Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Not(Box<Formula>),
    ExistsX(u32, Box<Formula>),
    ExistsY(u32, Box<Formula>),
}

impl Formula {
    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    /// `¬a ∨ b`.
    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::or(Formula::not(a), b)
    }

    pub fn exists_x(x: u32, body: Formula) -> Formula {
        assert!(x >= 1, "variable indices are 1-based");
        Formula::ExistsX(x, Box::new(body))
    }

    pub fn exists_y(y: u32, body: Formula) -> Formula {
        assert!(y >= 1, "variable indices are 1-based");
        Formula::ExistsY(y, Box::new(body))
    }

    /// `¬∃x ¬body`.
    pub fn forall_x(x: u32, body: Formula) -> Formula {
        Formula::not(Formula::exists_x(x, Formula::not(body)))
    }

    pub fn forall_y(y: u32, body: Formula) -> Formula {
        Formula::not(Formula::exists_y(y, Formula::not(body)))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, Formula::ActionEq(_) | Formula::GroupEq(_))
    }

    /// No group equalities and no `∃y`.
    pub fn is_action_type(&self) -> bool {
        match self {
            Formula::ActionEq(_) => true,
            Formula::GroupEq(_) | Formula::ExistsY(..) => false,
            Formula::Or(a, b) | Formula::And(a, b) => a.is_action_type() && b.is_action_type(),
            Formula::Not(a) | Formula::ExistsX(_, a) => a.is_action_type(),
        }
    }

    /// `Δ_Y`: y-indices occurring in atoms. Quantifiers `∃y` do not add
    /// their variable.
    pub fn y_support(&self) -> BTreeSet<u32> {
        match self {
            Formula::ActionEq(w) => w.y_support(),
            Formula::GroupEq(f) => f.support(),
            Formula::Or(a, b) | Formula::And(a, b) => &a.y_support() | &b.y_support(),
            Formula::Not(a) | Formula::ExistsX(_, a) | Formula::ExistsY(_, a) => a.y_support(),
        }
    }

    /// x-indices occurring in atoms or bound by `∃x`.
    pub fn x_support(&self) -> BTreeSet<u32> {
        match self {
            Formula::ActionEq(w) => w.x_support(),
            Formula::GroupEq(_) => BTreeSet::new(),
            Formula::Or(a, b) | Formula::And(a, b) => &a.x_support() | &b.x_support(),
            Formula::Not(a) | Formula::ExistsY(_, a) => a.x_support(),
            Formula::ExistsX(x, a) => {
                let mut s = a.x_support();
                s.insert(*x);
                s
            }
        }
    }

    /// Largest y-index in atoms or bound by `∃y`.
    fn y_extent(&self) -> u32 {
        match self {
            Formula::ActionEq(w) => w.y_support().last().copied().unwrap_or(0),
            Formula::GroupEq(f) => f.support().last().copied().unwrap_or(0),
            Formula::Or(a, b) | Formula::And(a, b) => a.y_extent().max(b.y_extent()),
            Formula::Not(a) | Formula::ExistsX(_, a) => a.y_extent(),
            Formula::ExistsY(y, a) => a.y_extent().max(*y),
        }
    }

    /// Hom-space dimensions `(n, m)` covering every variable, bound or free.
    pub fn dims(&self) -> (u32, u32) {
        let n = self.x_support().last().copied().unwrap_or(0);
        (n, self.y_extent())
    }

    /// The ring of the first module term, if any.
    pub fn modulus(&self) -> Option<u32> {
        match self {
            Formula::ActionEq(w) => Some(w.modulus()),
            Formula::GroupEq(_) => None,
            Formula::Or(a, b) | Formula::And(a, b) => a.modulus().or_else(|| b.modulus()),
            Formula::Not(a) | Formula::ExistsX(_, a) | Formula::ExistsY(_, a) => a.modulus(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::ActionEq(_) | Formula::GroupEq(_) => 0,
            Formula::Or(a, b) | Formula::And(a, b) => 1 + a.depth().max(b.depth()),
            Formula::Not(a) | Formula::ExistsX(_, a) | Formula::ExistsY(_, a) => 1 + a.depth(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free::GroupAlgebraElement;

    fn x1_times_y1_minus_1() -> Formula {
        let u = &GroupAlgebraElement::monomial(3, FreeWord::generator(1), 1) - &GroupAlgebraElement::one(3);
        Formula::ActionEq(ModuleTerm::summand(1, u))
    }

    #[test]
    fn supports() {
        let u = x1_times_y1_minus_1();
        assert_eq!(u.y_support(), BTreeSet::from([1]));
        assert_eq!(u.x_support(), BTreeSet::from([1]));
        let q = Formula::exists_x(3, Formula::not(u.clone()));
        assert_eq!(q.x_support(), BTreeSet::from([1, 3]));
        assert_eq!(q.y_support(), BTreeSet::from([1]));
        assert_eq!(Formula::exists_y(2, u).dims(), (1, 2));
    }

    #[test]
    fn action_type() {
        let u = x1_times_y1_minus_1();
        assert!(u.is_action_type());
        assert!(Formula::exists_x(2, Formula::not(u.clone())).is_action_type());
        assert!(!Formula::or(u.clone(), Formula::GroupEq(FreeWord::one())).is_action_type());
        assert!(!Formula::exists_y(1, u).is_action_type());
    }
}
