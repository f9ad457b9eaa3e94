//! Finite groups given by Cayley tables.

use std::collections::BTreeSet;

use crate::bitset::BitSet;
use crate::error::{guard, Axiom, Error, Result};

/// A finite group stored as a full multiplication table.
///
/// Elements are the indices `0..order`. Two groups compare equal exactly when
/// their labeled Cayley tables agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    cayley: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validate a row-major Cayley table (row = left factor).
    pub fn from_cayley(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(violation(Axiom::Closure, vec![], "empty group table"));
        }
        let mut cayley = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(violation(
                    Axiom::Closure,
                    vec![i],
                    format!("row {i} has {} entries, expected {order}", row.len()),
                ));
            }
            for (j, &k) in row.iter().enumerate() {
                if k >= order {
                    return Err(violation(
                        Axiom::Closure,
                        vec![i, j],
                        format!("{i}*{j} = {k} is out of range"),
                    ));
                }
            }
            cayley.extend_from_slice(row);
        }
        if identity >= order {
            return Err(violation(
                Axiom::Identity,
                vec![identity],
                format!("identity index {identity} is out of range"),
            ));
        }
        for a in 0..order {
            if cayley[identity * order + a] != a || cayley[a * order + identity] != a {
                return Err(violation(
                    Axiom::Identity,
                    vec![identity, a],
                    format!("{identity} is not a two-sided identity for {a}"),
                ));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = cayley[a * order + b];
                for c in 0..order {
                    let bc = cayley[b * order + c];
                    if cayley[ab * order + c] != cayley[a * order + bc] {
                        return Err(violation(
                            Axiom::Associativity,
                            vec![a, b, c],
                            format!("({a}*{b})*{c} != {a}*({b}*{c})"),
                        ));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            match (0..order).find(|&b| cayley[b * order + a] == identity) {
                Some(b) if cayley[a * order + b] == identity => inverse.push(b),
                _ => {
                    return Err(violation(
                        Axiom::Inverse,
                        vec![a],
                        format!("{a} has no two-sided inverse"),
                    ))
                }
            }
        }
        Ok(FiniteGroup {
            order,
            cayley,
            identity,
            inverse,
        })
    }

    /// Build from a multiplication closure on `0..order`; the closure must
    /// already define a group.
    pub(crate) fn from_fn(order: usize, identity: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let table = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect();
        FiniteGroup::from_cayley(table, identity).expect("constructed table is a group")
    }

    pub fn trivial() -> Self {
        FiniteGroup::cyclic(1)
    }

    /// `C_n` with element `k` standing for `g^k`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        FiniteGroup::from_fn(n, 0, |a, b| (a + b) % n)
    }

    /// Symmetric group on `0..k`, elements indexed by lexicographic rank of
    /// the permutation images; product `a*b` is "apply a, then b".
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let rank = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        FiniteGroup::from_fn(perms.len(), 0, |a, b| {
            let composed: Vec<usize> = (0..k).map(|i| perms[b][perms[a][i]]).collect();
            rank(&composed)
        })
    }

    /// Permutation of `0..k` labeled by element `index` of [`FiniteGroup::symmetric`].
    pub fn symmetric_permutation(k: usize, index: usize) -> Vec<usize> {
        permutations(k).swap_remove(index)
    }

    /// Direct product, mixed-radix indices with the last factor varying fastest.
    pub fn direct_product(factors: &[&FiniteGroup]) -> Self {
        let orders: Vec<usize> = factors.iter().map(|g| g.order).collect();
        let order = orders.iter().product();
        let identity = encode(&factors.iter().map(|g| g.identity).collect::<Vec<_>>(), &orders);
        FiniteGroup::from_fn(order, identity, |a, b| {
            let (xa, xb) = (decode(a, &orders), decode(b, &orders));
            let prod: Vec<usize> = factors
                .iter()
                .enumerate()
                .map(|(i, g)| g.mul(xa[i], xb[i]))
                .collect();
            encode(&prod, &orders)
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.cayley[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        (0..k.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        self.cayley.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, as a membership set.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> BitSet {
        let mut members = BitSet::new(self.order);
        members.insert(self.identity);
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &s in &gens {
                let y = self.mul(x, s);
                if !members.contains(y) {
                    members.insert(y);
                    frontier.push(y);
                }
            }
        }
        members
    }

    /// A generating set found greedily in index order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = self.generated([]);
        for a in self.elements() {
            if !span.contains(a) {
                gens.push(a);
                span = self.generated(gens.iter().copied());
            }
        }
        gens
    }

    pub fn is_subgroup(&self, set: &BitSet) -> bool {
        set.len() == self.order
            && set.contains(self.identity)
            && set
                .ones()
                .all(|a| set.contains(self.inv(a)) && set.ones().all(|b| set.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &BitSet) -> bool {
        self.is_subgroup(set)
            && set.ones().all(|h| {
                self.elements()
                    .all(|g| set.contains(self.mul(self.mul(self.inv(g), h), g)))
            })
    }

    /// Every subgroup exactly once, each as a sorted element list, ordered by
    /// (size, elements).
    pub fn subgroups(&self, max_order: usize) -> Result<Vec<Vec<usize>>> {
        guard("group order for subgroup enumeration", self.order, max_order)?;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let cyclic: BTreeSet<Vec<usize>> = self
            .elements()
            .map(|a| self.generated([a]).ones().collect())
            .collect();
        let mut frontier: Vec<Vec<usize>> = cyclic.iter().cloned().collect();
        found.extend(cyclic.iter().cloned());
        while let Some(h) = frontier.pop() {
            for c in &cyclic {
                let join: Vec<usize> = self.generated(h.iter().chain(c).copied()).ones().collect();
                if found.insert(join.clone()) {
                    frontier.push(join);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    pub fn normal_subgroups(&self, max_order: usize) -> Result<Vec<Vec<usize>>> {
        Ok(self
            .subgroups(max_order)?
            .into_iter()
            .filter(|h| self.is_normal(&self.member_set(h)))
            .collect())
    }

    pub fn member_set(&self, elements: &[usize]) -> BitSet {
        let mut set = BitSet::new(self.order);
        for &e in elements {
            set.insert(e);
        }
        set
    }

    /// The subgroup on `elements` as a group in its own right, relabeled in
    /// ascending order, with the embedding into `self`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        if elements.iter().any(|&e| e >= self.order) {
            return Err(Error::NotASubgroup(format!("element out of range in {elements:?}")));
        }
        let set = self.member_set(elements);
        if set.count() != elements.len() || !self.is_subgroup(&set) {
            return Err(Error::NotASubgroup(format!("{elements:?} is not a subgroup")));
        }
        let embedding: Vec<usize> = set.ones().collect();
        let local = |g: usize| embedding.binary_search(&g).unwrap();
        let group = FiniteGroup::from_fn(embedding.len(), local(self.identity), |a, b| {
            local(self.mul(embedding[a], embedding[b]))
        });
        Ok((group, embedding))
    }

    /// `G/N` for a normal subgroup `N`, cosets numbered by their least element,
    /// with the canonical projection.
    pub fn quotient(&self, normal: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let set = self.member_set(normal);
        if !self.is_normal(&set) {
            return Err(Error::NotACongruence(format!("{normal:?} is not a normal subgroup")));
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut reps = Vec::new();
        for g in self.elements() {
            if projection[g] == usize::MAX {
                let coset = reps.len();
                reps.push(g);
                for n in set.ones() {
                    projection[self.mul(g, n)] = coset;
                }
            }
        }
        let q = FiniteGroup::from_fn(reps.len(), projection[self.identity], |a, b| {
            projection[self.mul(reps[a], reps[b])]
        });
        Ok((q, projection))
    }

    /// Whether `map` is a homomorphism from `self` into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order
            && map.iter().all(|&x| x < target.order)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }
}

fn violation(axiom: Axiom, witness: Vec<usize>, detail: impl Into<String>) -> Error {
    Error::AxiomViolation {
        axiom,
        witness,
        detail: detail.into(),
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in 0..k {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// Mixed-radix encoding, last coordinate varying fastest.
pub(crate) fn encode(coords: &[usize], radices: &[usize]) -> usize {
    coords
        .iter()
        .zip(radices)
        .fold(0, |acc, (&c, &r)| acc * r + c)
}

pub(crate) fn decode(mut index: usize, radices: &[usize]) -> Vec<usize> {
    let mut coords = vec![0; radices.len()];
    for (c, &r) in coords.iter_mut().zip(radices).rev() {
        *c = index % r;
        index /= r;
    }
    coords
}
