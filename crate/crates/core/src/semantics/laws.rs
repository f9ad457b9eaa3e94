//! Executable checks of the laws the semantics is supposed to satisfy.

use std::collections::BTreeSet;

use super::eval::satisfies_at;
use super::space::{HomPoint, HomSpace};
use super::valset::{exists, ValSet};
use crate::bitset::BitSet;
use crate::error::{Error, Result, Var};
use crate::formula::Formula;

/// Which of the three quantifier axioms fail for `∃ = exists(·, var)` on the
/// pair `(a, b)`: 1 is `∃0 = 0`, 2 is `a ≤ ∃a`, 3 is
/// `∃(a ∧ ∃b) = ∃a ∧ ∃b`.
pub fn quantifier_axiom_failures(a: &ValSet, b: &ValSet, var: Var) -> Result<Vec<u8>> {
    let mut failed = Vec::new();
    if !exists(&ValSet::empty(a.shape()), var)?.is_empty() {
        failed.push(1);
    }
    let ea = exists(a, var)?;
    if !a.is_subset(&ea)? {
        failed.push(2);
    }
    let lhs = exists(&a.intersection(&exists(b, var)?)?, var)?;
    if lhs != ea.intersection(&exists(b, var)?)? {
        failed.push(3);
    }
    Ok(failed)
}

/// Cylindrification by walking points one at a time.
fn exists_pointwise(space: &HomSpace<'_>, set: &ValSet, var: Var) -> BitSet {
    BitSet::from_fn(space.size(), |i| {
        let p = space.point(i);
        let (values, slot) = match var {
            Var::X(x) => (space.rep().module().size(), x as usize - 1),
            Var::Y(y) => (space.rep().group().order(), y as usize - 1),
        };
        (0..values).any(|c| {
            let mut q: HomPoint = p.clone();
            match var {
                Var::X(_) => q.a[slot] = c,
                Var::Y(_) => q.g[slot] = c,
            }
            set.contains(space.index(&q))
        })
    })
}

/// Check that Val commutes with every connective at every node of `u`:
/// atoms against pointwise satisfaction, inner nodes against set operations
/// composed point by point from the children's values. Returns the first
/// failing subformula.
pub fn check_val_homomorphism(space: &HomSpace<'_>, u: &Formula) -> Result<Option<Formula>> {
    let v = space.val(u)?;
    let expected = match u {
        Formula::ActionEq(_) | Formula::GroupEq(_) => BitSet::from_fn(space.size(), |i| {
            let p = space.point(i);
            satisfies_at(u, space.rep(), &p.a, &p.g).unwrap_or(false)
        }),
        Formula::Or(a, b) | Formula::And(a, b) => {
            if let Some(bad) = check_val_homomorphism(space, a)? {
                return Ok(Some(bad));
            }
            if let Some(bad) = check_val_homomorphism(space, b)? {
                return Ok(Some(bad));
            }
            let (va, vb) = (space.val(a)?, space.val(b)?);
            let or = matches!(u, Formula::Or(..));
            BitSet::from_fn(space.size(), |i| {
                if or {
                    va.contains(i) || vb.contains(i)
                } else {
                    va.contains(i) && vb.contains(i)
                }
            })
        }
        Formula::Not(a) | Formula::ExistsX(_, a) | Formula::ExistsY(_, a) => {
            if let Some(bad) = check_val_homomorphism(space, a)? {
                return Ok(Some(bad));
            }
            let va = space.val(a)?;
            match u {
                Formula::Not(_) => BitSet::from_fn(space.size(), |i| !va.contains(i)),
                Formula::ExistsX(x, _) => exists_pointwise(space, &va, Var::X(*x)),
                Formula::ExistsY(y, _) => exists_pointwise(space, &va, Var::Y(*y)),
                _ => unreachable!(),
            }
        }
    };
    Ok((v.bits() != &expected).then(|| u.clone()))
}

/// For action-type `u` and `Y0 ⊇ Δ_Y(u)`: `μ ∈ Val(u) ⟺ μ′ ∈ Val(u)` for every
/// point of the space with `m` y-coordinates. Returns a violating point.
pub fn check_support_invariance(
    u: &Formula,
    rep: &crate::algebra::Representation,
    y0: &BTreeSet<u32>,
    m: u32,
) -> Result<Option<HomPoint>> {
    if !u.is_action_type() {
        return Err(Error::NotActionType);
    }
    if let Some(&y) = u.y_support().difference(y0).next() {
        return Err(Error::SupportNotCovered(y));
    }
    let space = HomSpace::new(rep, u.dims().0, m)?;
    let v = space.val(u)?;
    for i in 0..space.size() {
        let p = space.point(i);
        let q = space.y0_modify(&p, y0);
        if v.contains(i) != v.contains(space.index(&q)) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteModule, FiniteRing, Representation};
    use crate::formula::parse;

    fn r2() -> Representation {
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn support_invariance_examples() {
        let rep = r2();
        let u = parse("x1*(y1 - 1) = 0", 3).unwrap();
        assert_eq!(check_support_invariance(&u, &rep, &BTreeSet::from([1]), 2).unwrap(), None);
        assert_eq!(check_support_invariance(&u, &rep, &BTreeSet::from([1, 2]), 2).unwrap(), None);
        assert_eq!(
            check_support_invariance(&u, &rep, &BTreeSet::new(), 2),
            Err(Error::SupportNotCovered(1))
        );
    }

    #[test]
    fn shrinking_y0_below_the_support_is_detected() {
        // With Y0 = ∅ the modification moves points out of Val, so the
        // covering precondition is doing real work.
        let rep = r2();
        let u = parse("x1*(y1 - 1) = 0", 3).unwrap();
        let space = HomSpace::new(&rep, 1, 1).unwrap();
        let v = space.val(&u).unwrap();
        let empty = BTreeSet::new();
        let moved = (0..space.size()).any(|i| {
            let q = space.y0_modify(&space.point(i), &empty);
            v.contains(i) != v.contains(space.index(&q))
        });
        assert!(moved);
    }

    #[test]
    fn homomorphism_holds_on_a_sample() {
        let rep = r2();
        let space = HomSpace::new(&rep, 2, 2).unwrap();
        for src in [
            "exists y2 (y1*y2 = 1) & ~x1 = 0",
            "exists x1 (x1*(y1 + y2) + x2 = 0) | y2 = 1",
            "~exists x2 (x2*(2) = 0 & ~x2 = 0)",
        ] {
            assert_eq!(check_val_homomorphism(&space, &parse(src, 3).unwrap()).unwrap(), None);
        }
    }
}
