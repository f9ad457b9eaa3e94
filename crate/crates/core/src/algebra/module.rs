//! Finite Z/n-modules presented as products of cyclic groups.

use super::group::{decode, encode};
use super::ring::{lcm, FiniteRing};
use super::smith::{diagonalize, integer_kernel};
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// `Z/d_1 × … × Z/d_k` as a module over `Z/n`, each `d_i | n`.
///
/// Elements are indices in mixed radix with the last cyclic coordinate
/// varying fastest; index 0 is the zero vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteModule {
    ring: FiniteRing,
    orders: Vec<usize>,
    size: usize,
}

impl FiniteModule {
    pub fn new(ring: FiniteRing, orders: Vec<u32>) -> Result<Self> {
        let n = ring.modulus();
        let mut size: usize = 1;
        for &d in &orders {
            if d == 0 || !n.is_multiple_of(d) {
                return Err(Error::InvalidModule(format!(
                    "cyclic order {d} does not divide the ring modulus {n}"
                )));
            }
            size = size
                .checked_mul(d as usize)
                .ok_or_else(|| Error::InvalidModule("module too large".into()))?;
        }
        Ok(FiniteModule {
            ring,
            orders: orders.into_iter().map(|d| d as usize).collect(),
            size,
        })
    }

    /// The cyclic module `Z/n` over itself.
    pub fn cyclic(ring: FiniteRing) -> Self {
        FiniteModule::new(ring, vec![ring.modulus()]).expect("n divides n")
    }

    pub fn ring(&self) -> FiniteRing {
        self.ring
    }

    pub fn cyclic_orders(&self) -> Vec<u32> {
        self.orders.iter().map(|&d| d as u32).collect()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn coords(&self, a: usize) -> Vec<usize> {
        decode(a, &self.orders)
    }

    pub fn index(&self, coords: &[usize]) -> usize {
        debug_assert!(coords.iter().zip(&self.orders).all(|(c, d)| c < d));
        encode(coords, &self.orders)
    }

    /// Index of `e_i`, the generator of the i-th cyclic factor.
    pub fn basis(&self, i: usize) -> usize {
        let mut c = vec![0; self.rank()];
        c[i] = 1 % self.orders[i];
        self.index(&c)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        let (mut x, mut y) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for &d in self.orders.iter().rev() {
            out += (x % d + y % d) % d * place;
            place *= d;
            x /= d;
            y /= d;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        let mut x = a;
        let mut out = 0;
        let mut place = 1;
        for &d in self.orders.iter().rev() {
            out += (d - x % d) % d * place;
            place *= d;
            x /= d;
        }
        out
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// `k·a` for a ring element `k` (any residue mod n).
    #[inline]
    pub fn scale(&self, k: u32, a: usize) -> usize {
        let mut x = a;
        let mut out = 0;
        let mut place = 1;
        for &d in self.orders.iter().rev() {
            out += (x % d) * (k as usize % d) % d * place;
            place *= d;
            x /= d;
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.coords(a)
            .iter()
            .zip(&self.orders)
            .map(|(&c, &d)| d / super::ring::gcd(c as u64, d as u64) as usize)
            .fold(1, |acc, o| lcm(acc as u64, o as u64) as usize)
    }

    /// Additive closure of `gens` (equivalently the K-span, K = Z/n).
    pub fn span(&self, gens: impl IntoIterator<Item = usize>) -> BitSet {
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut members = BitSet::new(self.size);
        members.insert(0);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in &gens {
                let y = self.add(x, g);
                if !members.contains(y) {
                    members.insert(y);
                    frontier.push(y);
                }
            }
        }
        members
    }

    pub fn is_submodule(&self, set: &BitSet) -> bool {
        set.len() == self.size
            && set.contains(0)
            && set.ones().all(|a| set.ones().all(|b| set.contains(self.add(a, b))))
    }

    /// The module over the same ring with all scalars read through
    /// `Z/m → Z/n`; requires `n | m`.
    pub fn with_ring(&self, ring: FiniteRing) -> Result<Self> {
        if !ring.modulus().is_multiple_of(self.ring.modulus()) {
            return Err(Error::InvalidModule(format!(
                "Z/{}-module cannot be lifted to Z/{}",
                self.ring.modulus(),
                ring.modulus()
            )));
        }
        FiniteModule::new(ring, self.cyclic_orders())
    }

    /// Direct sum over `Z/lcm(n_i)`; element index is the mixed-radix
    /// encoding of the component tuple.
    pub fn direct_sum(factors: &[&FiniteModule]) -> Result<Self> {
        let modulus = factors
            .iter()
            .fold(1u64, |acc, m| lcm(acc, m.ring.modulus() as u64));
        let ring = FiniteRing::new(
            u32::try_from(modulus).map_err(|_| Error::InvalidModule("modulus overflow".into()))?,
        )?;
        let orders = factors.iter().flat_map(|m| m.cyclic_orders()).collect();
        FiniteModule::new(ring, orders)
    }

    /// Present a submodule as a module in its own right. Returns the module
    /// and the embedding (new index → ambient index).
    pub fn submodule(&self, members: &BitSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(members) {
            return Err(Error::InvalidModule("set is not a submodule".into()));
        }
        let mut gens = Vec::new();
        let mut span = self.span([]);
        for a in members.ones() {
            if !span.contains(a) {
                gens.push(a);
                span = self.span(gens.iter().copied());
            }
        }
        let moduli: Vec<i64> = self.orders.iter().map(|&d| d as i64).collect();
        let gen_coords: Vec<Vec<i64>> = gens
            .iter()
            .map(|&g| self.coords(g).into_iter().map(|c| c as i64).collect())
            .collect();
        let module;
        let mut embedding;
        if gens.is_empty() {
            module = FiniteModule::new(self.ring, vec![])?;
            embedding = vec![0];
        } else {
            let relations = integer_kernel(&gen_coords, &moduli);
            let diag = diagonalize(&relations, gens.len());
            let orders: Vec<u32> = diag.orders().iter().map(|&d| d as u32).collect();
            module = FiniteModule::new(self.ring, orders)?;
            embedding = vec![0; module.size()];
            for (i, slot) in embedding.iter_mut().enumerate() {
                let y: Vec<i64> = module.coords(i).into_iter().map(|c| c as i64).collect();
                let c = diag.lift(&y);
                *slot = gens.iter().zip(&c).fold(0, |acc, (&g, &k)| {
                    self.add(acc, self.scale(k.rem_euclid(self.ring.modulus() as i64) as u32, g))
                });
            }
        }
        debug_assert_eq!(module.size(), members.count());
        Ok((module, embedding))
    }

    /// `V / members` with the canonical projection (ambient index → new index).
    pub fn quotient(&self, members: &BitSet) -> Result<(FiniteModule, Vec<usize>)> {
        if !self.is_submodule(members) {
            return Err(Error::InvalidModule("set is not a submodule".into()));
        }
        let k = self.rank();
        let mut relations: Vec<Vec<i64>> = (0..k)
            .map(|i| {
                let mut row = vec![0; k];
                row[i] = self.orders[i] as i64;
                row
            })
            .collect();
        relations.extend(
            members
                .ones()
                .map(|a| self.coords(a).into_iter().map(|c| c as i64).collect()),
        );
        let (module, projection) = if k == 0 {
            (FiniteModule::new(self.ring, vec![])?, vec![0])
        } else {
            let diag = diagonalize(&relations, k);
            let orders: Vec<u32> = diag.orders().iter().map(|&d| d as u32).collect();
            let module = FiniteModule::new(self.ring, orders)?;
            let projection = self
                .elements()
                .map(|a| {
                    let c: Vec<i64> = self.coords(a).into_iter().map(|x| x as i64).collect();
                    let y: Vec<usize> = diag.coords(&c).into_iter().map(|x| x as usize).collect();
                    module.index(&y)
                })
                .collect();
            (module, projection)
        };
        debug_assert_eq!(module.size() * members.count(), self.size);
        Ok((module, projection))
    }

    /// Whether `map: self → target` is additive (hence K-linear).
    pub fn is_linear(&self, target: &FiniteModule, map: &[usize]) -> bool {
        map.len() == self.size
            && map.iter().all(|&x| x < target.size)
            && self.elements().all(|a| {
                self.elements()
                    .all(|b| map[self.add(a, b)] == target.add(map[a], map[b]))
            })
            && self.elements().all(|a| {
                self.ring
                    .elements()
                    .all(|k| map[self.scale(k, a)] == target.scale(k, map[a]))
            })
    }
}
