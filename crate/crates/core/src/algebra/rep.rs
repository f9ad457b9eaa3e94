//! Representations `(V, G)` and their homomorphisms.

use super::group::FiniteGroup;
use super::module::FiniteModule;
use crate::error::{Axiom, Error, Result};

/// Alias for [`Representation::new`].
pub fn validate_representation(module: FiniteModule, group: FiniteGroup, table: Vec<Vec<usize>>) -> Result<Representation> {
    Representation::new(module, group, table)
}

/// A finite K-module with a validated action of a finite group.
///
/// `action[g * |V| + a]` is `a∘g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    module: FiniteModule,
    group: FiniteGroup,
    action: Vec<usize>,
}

impl Representation {
    /// Check the three representation axioms on a full action table (rows
    /// indexed by group element, columns by module element).
    ///
    /// Linearity and bijectivity of every `a -> a∘g` are checked first, then
    /// `a∘1 = a`, then `(a∘g1)∘g2 = a∘(g1 g2)`.
    pub fn new(module: FiniteModule, group: FiniteGroup, table: Vec<Vec<usize>>) -> Result<Self> {
        let v = module.size();
        if table.len() != group.order() {
            return Err(Error::DimensionMismatch(format!(
                "action table has {} rows, group has {} elements",
                table.len(),
                group.order()
            )));
        }
        let mut action = Vec::with_capacity(v * group.order());
        for (g, row) in table.iter().enumerate() {
            if row.len() != v {
                return Err(Error::DimensionMismatch(format!(
                    "action row {g} has {} entries, module has {v} elements",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= v) {
                return Err(Error::DimensionMismatch(format!(
                    "action row {g} names element {bad}, module has {v} elements"
                )));
            }
            action.extend_from_slice(row);
        }
        let rep = Representation {
            module,
            group,
            action,
        };
        rep.check_axioms()?;
        Ok(rep)
    }

    fn check_axioms(&self) -> Result<()> {
        let m = &self.module;
        let ring = m.ring();
        for g in self.group.elements() {
            let mut seen = vec![false; m.size()];
            for a in m.elements() {
                let ag = self.act(a, g);
                if seen[ag] {
                    return Err(violation(
                        Axiom::Linearity,
                        vec![a, g],
                        format!("a -> a∘{g} is not injective at a={a}"),
                    ));
                }
                seen[ag] = true;
                for b in m.elements() {
                    if self.act(m.add(a, b), g) != m.add(ag, self.act(b, g)) {
                        return Err(violation(
                            Axiom::Linearity,
                            vec![a, b, g],
                            format!("(a+b)∘g != a∘g + b∘g for a={a}, b={b}, g={g}"),
                        ));
                    }
                }
                for k in ring.elements() {
                    if self.act(m.scale(k, a), g) != m.scale(k, ag) {
                        return Err(violation(
                            Axiom::Linearity,
                            vec![a, g],
                            format!("(k·a)∘g != k·(a∘g) for k={k}, a={a}, g={g}"),
                        ));
                    }
                }
            }
        }
        let e = self.group.identity();
        for a in m.elements() {
            if self.act(a, e) != a {
                return Err(violation(Axiom::Unit, vec![a], format!("a∘1 != a for a={a}")));
            }
        }
        for g1 in self.group.elements() {
            for g2 in self.group.elements() {
                let g12 = self.group.mul(g1, g2);
                for a in m.elements() {
                    if self.act(self.act(a, g1), g2) != self.act(a, g12) {
                        return Err(violation(
                            Axiom::Composition,
                            vec![a, g1, g2],
                            format!("(a∘g1)∘g2 != a∘(g1 g2) for a={a}, g1={g1}, g2={g2}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Build from an action closure known to satisfy the axioms.
    pub(crate) fn from_fn(
        module: FiniteModule,
        group: FiniteGroup,
        act: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let v = module.size();
        let action = (0..group.order() * v).map(|i| act(i % v, i / v)).collect();
        let rep = Representation {
            module,
            group,
            action,
        };
        debug_assert_eq!(rep.check_axioms(), Ok(()));
        rep
    }

    /// Every group element acts as the identity.
    pub fn trivial(module: FiniteModule, group: FiniteGroup) -> Self {
        Representation::from_fn(module, group, |a, _| a)
    }

    pub fn module(&self) -> &FiniteModule {
        &self.module
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn modulus(&self) -> u32 {
        self.module.ring().modulus()
    }

    #[inline]
    pub fn act(&self, a: usize, g: usize) -> usize {
        self.action[g * self.module.size() + a]
    }

    pub fn action_rows(&self) -> Vec<Vec<usize>> {
        self.action.chunks(self.module.size()).map(|r| r.to_vec()).collect()
    }

    /// Elements acting as the identity on all of V.
    pub fn kernel(&self) -> Vec<usize> {
        self.group
            .elements()
            .filter(|&g| self.module.elements().all(|a| self.act(a, g) == a))
            .collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().len() == 1
    }

    /// `(V, G/N)` for the kernel `N` of the action, with `β0: G → G/N`.
    /// `a∘g = a∘β0(g)` holds for all `a, g`.
    pub fn faithful_quotient(&self) -> (Representation, Vec<usize>) {
        let (quotient, beta0) = self
            .group
            .quotient(&self.kernel())
            .expect("the kernel of an action is normal");
        let mut reps = vec![usize::MAX; quotient.order()];
        for g in self.group.elements() {
            if reps[beta0[g]] == usize::MAX {
                reps[beta0[g]] = g;
            }
        }
        let rep = Representation::from_fn(self.module.clone(), quotient, |a, q| self.act(a, reps[q]));
        (rep, beta0)
    }

    /// `(V, H)` for a subgroup `H` given by its elements. The subgroup is
    /// relabeled in ascending order; the returned vector embeds it into G.
    pub fn restrict(&self, subgroup: &[usize]) -> Result<(Representation, Vec<usize>)> {
        let (h, embedding) = self.group.subgroup(subgroup)?;
        let rep = Representation::from_fn(self.module.clone(), h, |a, x| self.act(a, embedding[x]));
        Ok((rep, embedding))
    }

    /// The same representation with scalars read through `Z/m → Z/n`.
    pub fn lift_ring(&self, modulus: u32) -> Result<Representation> {
        let ring = super::ring::FiniteRing::new(modulus)?;
        let module = self.module.with_ring(ring)?;
        Ok(Representation {
            module,
            group: self.group.clone(),
            action: self.action.clone(),
        })
    }
}

fn violation(axiom: Axiom, witness: Vec<usize>, detail: String) -> Error {
    Error::AxiomViolation {
        axiom,
        witness,
        detail,
    }
}

/// A two-sorted homomorphism `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepHomomorphism {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

impl RepHomomorphism {
    /// Check linearity of α, the homomorphism property of β, and
    /// `(a∘g)^α = a^α ∘ g^β` exhaustively.
    pub fn check(&self, source: &Representation, target: &Representation) -> Result<()> {
        if !source.module().is_linear(target.module(), &self.alpha) {
            return Err(Error::NotAHomomorphism("alpha is not linear".into()));
        }
        if !source.group().is_homomorphism(target.group(), &self.beta) {
            return Err(Error::NotAHomomorphism("beta is not a group homomorphism".into()));
        }
        for g in source.group().elements() {
            for a in source.module().elements() {
                if self.alpha[source.act(a, g)] != target.act(self.alpha[a], self.beta[g]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "(a∘g)^alpha != a^alpha ∘ g^beta at a={a}, g={g}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self, source: &Representation, target: &Representation) -> bool {
        fn bij(map: &[usize], n: usize) -> bool {
            let mut seen = vec![false; n];
            map.len() == n && map.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        }
        bij(&self.alpha, target.module().size()) && bij(&self.beta, target.group().order())
            && source.module().size() == target.module().size()
    }

    /// `(ker α, ker β)`.
    pub fn kernel(&self, source: &Representation) -> (Vec<usize>, Vec<usize>) {
        let v0 = source.module().elements().filter(|&a| self.alpha[a] == 0).collect();
        let h = {
            let e = self.beta[source.group().identity()];
            source.group().elements().filter(|&g| self.beta[g] == e).collect()
        };
        (v0, h)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ring::FiniteRing;

    fn z(n: u32) -> FiniteModule {
        FiniteModule::cyclic(FiniteRing::new(n).unwrap())
    }

    /// Direct triple-loop reading of the axioms.
    fn oracle_valid(m: &FiniteModule, g: &FiniteGroup, t: &[Vec<usize>]) -> bool {
        let lin = g.elements().all(|x| {
            m.elements().all(|a| m.elements().all(|b| t[x][m.add(a, b)] == m.add(t[x][a], t[x][b])))
                && m.elements()
                    .all(|a| m.ring().elements().all(|k| t[x][m.scale(k, a)] == m.scale(k, t[x][a])))
                && {
                    let mut img: Vec<usize> = t[x].clone();
                    img.sort();
                    img.dedup();
                    img.len() == m.size()
                }
        });
        let comp = g.elements().all(|x| {
            g.elements()
                .all(|y| m.elements().all(|a| t[y][t[x][a]] == t[g.mul(x, y)][a]))
        });
        let unit = m.elements().all(|a| t[g.identity()][a] == a);
        lin && comp && unit
    }

    #[test]
    fn negation_on_z3_is_valid() {
        let rep = Representation::new(z(3), FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]);
        assert!(rep.is_ok());
    }

    #[test]
    fn translation_is_not_linear() {
        let err = Representation::new(z(3), FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![1, 2, 0]])
            .unwrap_err();
        match err {
            Error::AxiomViolation { axiom, .. } => assert_eq!(axiom.representation_id(), Some(1)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn validator_agrees_with_oracle_on_all_tables() {
        // Every table C2 x Z/3 -> Z/3 with identity row free as well.
        let m = z(3);
        let g = FiniteGroup::cyclic(2);
        let rows: Vec<Vec<usize>> = (0..27)
            .map(|i| vec![i / 9, i / 3 % 3, i % 3])
            .collect();
        for r0 in &rows {
            for r1 in &rows {
                let t = vec![r0.clone(), r1.clone()];
                let ok = Representation::new(m.clone(), g.clone(), t.clone()).is_ok();
                assert_eq!(ok, oracle_valid(&m, &g, &t), "table {t:?}");
            }
        }
    }

    #[test]
    fn faithful_quotient_of_c4_on_z3() {
        let rep = Representation::from_fn(z(3), FiniteGroup::cyclic(4), |a, g| {
            if g % 2 == 0 {
                a
            } else {
                (2 * a) % 3
            }
        });
        assert_eq!(rep.kernel(), vec![0, 2]);
        let (f, beta0) = rep.faithful_quotient();
        assert_eq!(f.group().order(), 2);
        assert!(f.is_faithful());
        for g in rep.group().elements() {
            for a in rep.module().elements() {
                assert_eq!(rep.act(a, g), f.act(a, beta0[g]));
            }
        }
        let nu = RepHomomorphism {
            alpha: (0..3).collect(),
            beta: beta0,
        };
        nu.check(&rep, &f).unwrap();
    }

    #[test]
    fn faithful_quotient_extremes() {
        let triv = Representation::trivial(z(2), FiniteGroup::cyclic(2));
        let (f, beta0) = triv.faithful_quotient();
        assert_eq!(f.group().order(), 1);
        assert_eq!(beta0, vec![0, 0]);
        let r2 = Representation::from_fn(z(3), FiniteGroup::cyclic(2), |a, g| if g == 0 { a } else { (3 - a) % 3 });
        let (f, beta0) = r2.faithful_quotient();
        assert_eq!(f, r2);
        assert_eq!(beta0, vec![0, 1]);
    }

    #[test]
    fn restriction() {
        let r2 = Representation::from_fn(z(3), FiniteGroup::cyclic(2), |a, g| if g == 0 { a } else { (3 - a) % 3 });
        let (whole, emb) = r2.restrict(&[0, 1]).unwrap();
        assert_eq!(whole, r2);
        assert_eq!(emb, vec![0, 1]);
        let (one, _) = r2.restrict(&[0]).unwrap();
        assert_eq!(one, Representation::trivial(z(3), FiniteGroup::trivial()));
        assert!(matches!(r2.restrict(&[1]), Err(Error::NotASubgroup(_))));
    }
}
