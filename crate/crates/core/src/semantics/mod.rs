//! Val: formulas to subsets of `Hom(W, (V, G)) ≅ V^n × G^m`.
//!
//! Points are indexed mixed-radix with `x1` varying fastest, then the other
//! x's, then `y1`, then the other y's. Quantifiers are cylindrifications along
//! one coordinate; a shadowed quantifier re-cylindrifies the same coordinate.
//! Free variables are read universally: a formula holds when its value is the
//! whole space, with `(n, m)` the largest variable indices it mentions.

mod eval;
mod laws;
mod space;
mod valset;

pub use eval::{frozen_val, holds, holds_with_guard, satisfies_at, val};
pub use laws::{check_support_invariance, check_val_homomorphism, quantifier_axiom_failures};
pub use space::{y0_modify, HomPoint, HomSpace, SpaceShape, DEFAULT_GUARD};
pub use valset::{exists, exists_x, exists_y, ValSet};
