//! Cartesian and filtered products of representations.

use std::collections::BTreeSet;

use super::congruence::{quotient, Congruence};
use super::group::{decode, FiniteGroup};
use super::module::FiniteModule;
use super::rep::{RepHomomorphism, Representation};
use crate::error::{guard, Error, Result};

/// Componentwise product of modules, groups, and actions. Factors over
/// different rings are combined over `Z/lcm` of the moduli.
pub fn direct_product(reps: &[&Representation], max_size: usize) -> Result<Representation> {
    if reps.is_empty() {
        return Err(Error::DimensionMismatch("product of no representations".into()));
    }
    let module_size = reps
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.module().size()))
        .unwrap_or(usize::MAX);
    guard("product module size", module_size, max_size)?;
    let group_order = reps
        .iter()
        .try_fold(1usize, |acc, r| acc.checked_mul(r.group().order()))
        .unwrap_or(usize::MAX);
    guard("product group order", group_order, max_size)?;

    let module = FiniteModule::direct_sum(&reps.iter().map(|r| r.module()).collect::<Vec<_>>())?;
    let group = FiniteGroup::direct_product(&reps.iter().map(|r| r.group()).collect::<Vec<_>>());
    let sizes: Vec<usize> = reps.iter().map(|r| r.module().size()).collect();
    let orders: Vec<usize> = reps.iter().map(|r| r.group().order()).collect();
    Ok(Representation::from_fn(module, group, |a, g| {
        let (xa, xg) = (decode(a, &sizes), decode(g, &orders));
        let image: Vec<usize> = reps
            .iter()
            .enumerate()
            .map(|(i, r)| r.act(xa[i], xg[i]))
            .collect();
        super::group::encode(&image, &sizes)
    }))
}

/// Projection of a [`direct_product`] onto factor `j`.
pub fn projection(reps: &[&Representation], product: &Representation, j: usize) -> RepHomomorphism {
    let sizes: Vec<usize> = reps.iter().map(|r| r.module().size()).collect();
    let orders: Vec<usize> = reps.iter().map(|r| r.group().order()).collect();
    RepHomomorphism {
        alpha: product.module().elements().map(|a| decode(a, &sizes)[j]).collect(),
        beta: product.group().elements().map(|g| decode(g, &orders)[j]).collect(),
    }
}

/// A filter on the index set `{0, …, size-1}`, members stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    size: usize,
    members: BTreeSet<u32>,
}

impl Filter {
    pub const MAX_INDEX_SET: usize = 10;

    pub fn new(size: usize, members: impl IntoIterator<Item = u32>) -> Result<Self> {
        if size > Self::MAX_INDEX_SET {
            return Err(Error::NotAFilter(format!(
                "index set of size {size} exceeds {}",
                Self::MAX_INDEX_SET
            )));
        }
        let full = full_mask(size);
        let members: BTreeSet<u32> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::NotAFilter("empty family".into()));
        }
        if let Some(&m) = members.iter().find(|&&m| m & !full != 0) {
            return Err(Error::NotAFilter(format!("{m:#b} is not a subset of I")));
        }
        if members.contains(&0) {
            return Err(Error::NotAFilter("contains the empty set".into()));
        }
        for &a in &members {
            for &b in &members {
                if !members.contains(&(a & b)) {
                    return Err(Error::NotAFilter(format!(
                        "not closed under intersection: {a:#b} ∩ {b:#b}"
                    )));
                }
            }
            for sup in 0..=full {
                if sup & a == a && !members.contains(&sup) {
                    return Err(Error::NotAFilter(format!(
                        "not upward closed: {sup:#b} ⊇ {a:#b} is missing"
                    )));
                }
            }
        }
        Ok(Filter { size, members })
    }

    /// All supersets of `generator`.
    pub fn principal(size: usize, generator: u32) -> Result<Self> {
        let full = full_mask(size);
        Filter::new(size, (0..=full).filter(|s| s & generator == generator))
    }

    /// `{I}`.
    pub fn trivial(size: usize) -> Result<Self> {
        Filter::principal(size, full_mask(size))
    }

    /// The principal ultrafilter at `j`.
    pub fn ultrafilter(size: usize, j: usize) -> Result<Self> {
        if j >= size {
            return Err(Error::NotAFilter(format!("index {j} outside I")));
        }
        Filter::principal(size, 1 << j)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, set: u32) -> bool {
        self.members.contains(&set)
    }

    pub fn is_ultra(&self) -> bool {
        (0..=full_mask(self.size)).all(|s| self.contains(s) ^ self.contains(full_mask(self.size) & !s))
    }
}

fn full_mask(size: usize) -> u32 {
    if size == 32 {
        u32::MAX
    } else {
        (1u32 << size) - 1
    }
}

/// Product of the family modulo the congruence `(v_i) ≡ (w_i) ⟺ {i : v_i = w_i} ∈ D`
/// on both sorts.
pub fn filtered_product(
    reps: &[&Representation],
    filter: &Filter,
    max_size: usize,
) -> Result<Representation> {
    Ok(filtered_product_map(reps, filter, max_size)?.0)
}

/// [`filtered_product`] together with the canonical map onto it from the
/// [`direct_product`] of the same family.
pub fn filtered_product_map(
    reps: &[&Representation],
    filter: &Filter,
    max_size: usize,
) -> Result<(Representation, RepHomomorphism)> {
    if reps.len() != filter.size() {
        return Err(Error::NotAFilter(format!(
            "filter is on {} indices, family has {}",
            filter.size(),
            reps.len()
        )));
    }
    let product = direct_product(reps, max_size)?;
    let sizes: Vec<usize> = reps.iter().map(|r| r.module().size()).collect();
    let orders: Vec<usize> = reps.iter().map(|r| r.group().order()).collect();
    let agree = |coords: Vec<usize>, zero: &dyn Fn(usize) -> usize| -> u32 {
        coords
            .iter()
            .enumerate()
            .filter(|&(i, &c)| c == zero(i))
            .fold(0, |mask, (i, _)| mask | 1 << i)
    };
    let v0: Vec<usize> = product
        .module()
        .elements()
        .filter(|&a| filter.contains(agree(decode(a, &sizes), &|_| 0)))
        .collect();
    let h: Vec<usize> = product
        .group()
        .elements()
        .filter(|&g| filter.contains(agree(decode(g, &orders), &|i| reps[i].group().identity())))
        .collect();
    quotient(&product, &Congruence::new(v0, h))
}
