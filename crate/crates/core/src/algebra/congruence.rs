//! Congruences `(V0, H)`, quotients, and invariant submodules.

use std::collections::BTreeSet;

use super::rep::{RepHomomorphism, Representation};
use crate::bitset::BitSet;
use crate::error::{guard, Error, Result};

/// A G-invariant submodule `V0` with a normal subgroup `H` acting trivially
/// on `V/V0`. Both components are sorted element lists.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    pub submodule: Vec<usize>,
    pub normal_subgroup: Vec<usize>,
}

impl Congruence {
    pub fn new(mut submodule: Vec<usize>, mut normal_subgroup: Vec<usize>) -> Self {
        submodule.sort_unstable();
        submodule.dedup();
        normal_subgroup.sort_unstable();
        normal_subgroup.dedup();
        Congruence {
            submodule,
            normal_subgroup,
        }
    }

    /// `({0}, {1})`.
    pub fn identity(rep: &Representation) -> Self {
        Congruence::new(vec![0], vec![rep.group().identity()])
    }

    /// `(V, G)`.
    pub fn full(rep: &Representation) -> Self {
        Congruence::new(rep.module().elements().collect(), rep.group().elements().collect())
    }

    pub fn validate(&self, rep: &Representation) -> Result<()> {
        let m = rep.module();
        let g = rep.group();
        if self.submodule.iter().any(|&a| a >= m.size()) {
            return Err(Error::NotACongruence("submodule element out of range".into()));
        }
        if self.normal_subgroup.iter().any(|&x| x >= g.order()) {
            return Err(Error::NotACongruence("group element out of range".into()));
        }
        let v0 = member_set(m.size(), &self.submodule);
        if !m.is_submodule(&v0) {
            return Err(Error::NotACongruence("V0 is not a submodule".into()));
        }
        if let Some((a, x)) = v0
            .ones()
            .flat_map(|a| g.elements().map(move |x| (a, x)))
            .find(|&(a, x)| !v0.contains(rep.act(a, x)))
        {
            return Err(Error::NotACongruence(format!(
                "V0 is not invariant: {a}∘{x} leaves V0"
            )));
        }
        let h = g.member_set(&self.normal_subgroup);
        if !g.is_normal(&h) {
            return Err(Error::NotACongruence("H is not a normal subgroup".into()));
        }
        for x in h.ones() {
            for a in m.elements() {
                if !v0.contains(m.sub(rep.act(a, x), a)) {
                    return Err(Error::NotACongruence(format!(
                        "{x} acts nontrivially on V/V0: {a}∘{x} - {a} is not in V0"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn member_set(len: usize, elements: &[usize]) -> BitSet {
    let mut set = BitSet::new(len);
    for &e in elements {
        set.insert(e);
    }
    set
}

/// `(V/V0, G/H)` with the induced action and the canonical projection.
pub fn quotient(rep: &Representation, c: &Congruence) -> Result<(Representation, RepHomomorphism)> {
    c.validate(rep)?;
    let m = rep.module();
    let v0 = member_set(m.size(), &c.submodule);
    let (qm, alpha) = m.quotient(&v0)?;
    let (qg, beta) = rep.group().quotient(&c.normal_subgroup)?;
    let mut module_reps = vec![usize::MAX; qm.size()];
    for a in m.elements() {
        if module_reps[alpha[a]] == usize::MAX {
            module_reps[alpha[a]] = a;
        }
    }
    let mut group_reps = vec![usize::MAX; qg.order()];
    for x in rep.group().elements() {
        if group_reps[beta[x]] == usize::MAX {
            group_reps[beta[x]] = x;
        }
    }
    let q = Representation::from_fn(qm, qg, |a, x| alpha[rep.act(module_reps[a], group_reps[x])]);
    Ok((q, RepHomomorphism { alpha, beta }))
}

/// `(V0, H)` for a subgroup `H` and an `H`-invariant submodule `V0`, both
/// relabeled; returns the representation with its embedding into `rep`.
pub fn subrepresentation(
    rep: &Representation,
    submodule: &[usize],
    subgroup: &[usize],
) -> Result<(Representation, RepHomomorphism)> {
    let m = rep.module();
    if submodule.iter().any(|&a| a >= m.size()) {
        return Err(Error::InvalidModule("submodule element out of range".into()));
    }
    let v0 = member_set(m.size(), submodule);
    let (h, beta) = rep.group().subgroup(subgroup)?;
    if let Some((a, x)) = v0
        .ones()
        .flat_map(|a| beta.iter().map(move |&x| (a, x)))
        .find(|&(a, x)| !v0.contains(rep.act(a, x)))
    {
        return Err(Error::InvalidModule(format!(
            "submodule is not invariant: {a}∘{x} leaves it"
        )));
    }
    let (sub, alpha) = m.submodule(&v0)?;
    let mut local = vec![usize::MAX; m.size()];
    for (i, &a) in alpha.iter().enumerate() {
        local[a] = i;
    }
    let sub_rep = Representation::from_fn(sub, h, |a, x| local[rep.act(alpha[a], beta[x])]);
    Ok((sub_rep, RepHomomorphism { alpha, beta }))
}

/// All submodules of V invariant under the given group elements, sorted by
/// (size, elements).
pub fn invariant_submodules(rep: &Representation, acting: &[usize]) -> Vec<Vec<usize>> {
    let m = rep.module();
    let closure = |seed: &[usize]| -> BitSet {
        let mut members = BitSet::new(m.size());
        let mut frontier: Vec<usize> = seed.to_vec();
        members.insert(0);
        for &s in seed {
            members.insert(s);
        }
        frontier.push(0);
        while let Some(a) = frontier.pop() {
            let push = |b: usize, members: &mut BitSet, frontier: &mut Vec<usize>| {
                if !members.contains(b) {
                    members.insert(b);
                    frontier.push(b);
                }
            };
            for &x in acting {
                push(rep.act(a, x), &mut members, &mut frontier);
            }
            let current: Vec<usize> = members.ones().collect();
            for b in current {
                push(m.add(a, b), &mut members, &mut frontier);
            }
        }
        members
    };
    let cyclic: BTreeSet<Vec<usize>> = m.elements().map(|a| closure(&[a]).ones().collect()).collect();
    let mut found = cyclic.clone();
    let mut frontier: Vec<Vec<usize>> = cyclic.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for c in &cyclic {
            let seed: Vec<usize> = s.iter().chain(c).copied().collect();
            let join: Vec<usize> = closure(&seed).ones().collect();
            if found.insert(join.clone()) {
                frontier.push(join);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Every congruence of `rep`, in (submodule, subgroup) order.
pub fn enumerate_congruences(
    rep: &Representation,
    max_points: usize,
    max_subgroup_order: usize,
) -> Result<Vec<Congruence>> {
    guard(
        "|V|·|G| for congruence enumeration",
        rep.module().size() * rep.group().order(),
        max_points,
    )?;
    let all: Vec<usize> = rep.group().elements().collect();
    let submodules = invariant_submodules(rep, &all);
    let normals = rep.group().normal_subgroups(max_subgroup_order)?;
    let mut out = Vec::new();
    for v0 in &submodules {
        for h in &normals {
            let c = Congruence::new(v0.clone(), h.clone());
            if c.validate(rep).is_ok() {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteModule, FiniteRing};

    fn z(n: u32) -> FiniteModule {
        FiniteModule::cyclic(FiniteRing::new(n).unwrap())
    }

    fn r2() -> Representation {
        Representation::new(z(3), FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap()
    }

    #[test]
    fn extreme_congruences() {
        let rep = r2();
        let (q, _) = quotient(&rep, &Congruence::full(&rep)).unwrap();
        assert_eq!(q.module().size(), 1);
        assert_eq!(q.group().order(), 1);
        let (q, proj) = quotient(&rep, &Congruence::identity(&rep)).unwrap();
        assert_eq!(q, rep);
        proj.check(&rep, &q).unwrap();
    }

    #[test]
    fn g_is_not_trivial_on_v() {
        let rep = r2();
        let c = Congruence::new(vec![0], vec![0, 1]);
        assert!(matches!(quotient(&rep, &c), Err(Error::NotACongruence(_))));
    }

    #[test]
    fn congruence_counts() {
        let triv = Representation::trivial(z(2), FiniteGroup::cyclic(2));
        assert_eq!(enumerate_congruences(&triv, 64, 12).unwrap().len(), 4);
        let got = enumerate_congruences(&r2(), 64, 12).unwrap();
        assert_eq!(
            got,
            vec![
                Congruence::new(vec![0], vec![0]),
                Congruence::new(vec![0, 1, 2], vec![0]),
                Congruence::new(vec![0, 1, 2], vec![0, 1]),
            ]
        );
    }

    #[test]
    fn projection_kernel_is_the_congruence() {
        let m = FiniteModule::new(FiniteRing::new(4).unwrap(), vec![2, 4]).unwrap();
        // C2 swapping nothing, negating everything
        let rep = Representation::from_fn(m.clone(), FiniteGroup::cyclic(2), |a, g| if g == 0 { a } else { m.neg(a) });
        for c in enumerate_congruences(&rep, 64, 12).unwrap() {
            let (q, proj) = quotient(&rep, &c).unwrap();
            proj.check(&rep, &q).unwrap();
            let (v0, h) = proj.kernel(&rep);
            assert_eq!(v0, c.submodule);
            assert_eq!(h, c.normal_subgroup);
        }
    }

    #[test]
    fn guard_applies() {
        let m = FiniteModule::new(FiniteRing::new(3).unwrap(), vec![3, 3]).unwrap();
        let rep = Representation::trivial(m, FiniteGroup::cyclic(8));
        assert!(matches!(
            enumerate_congruences(&rep, 64, 12),
            Err(Error::GuardExceeded { .. })
        ));
    }
}
