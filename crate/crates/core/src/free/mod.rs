//! The free representation `W(X, Y) = (XKF(Y), F(Y))`: reduced words, the
//! group algebra, module terms, and their images under `(α, β)`.

mod group_algebra;
mod term;
mod word;

pub use group_algebra::GroupAlgebraElement;
pub use term::ModuleTerm;
pub use word::{reduce, FreeWord, Letter};

use crate::algebra::{FiniteGroup, Representation};
use crate::error::Result;

/// `f^β` for `β: y_i ↦ beta[i-1]`.
pub fn eval_word(f: &FreeWord, beta: &[usize], group: &FiniteGroup) -> Result<usize> {
    f.eval(beta, group)
}

/// `a∘u^β`, the linear extension of the action to `KF`.
pub fn eval_action(a: usize, u: &GroupAlgebraElement, beta: &[usize], rep: &Representation) -> Result<usize> {
    u.act_on(a, beta, rep)
}

/// `w^(α, β)`.
pub fn eval_module_term(w: &ModuleTerm, alpha: &[usize], beta: &[usize], rep: &Representation) -> Result<usize> {
    w.eval(alpha, beta, rep)
}
