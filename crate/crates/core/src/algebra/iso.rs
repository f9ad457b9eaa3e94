//! Brute-force isomorphism search for small representations.

use super::group::FiniteGroup;
use super::module::FiniteModule;
use super::rep::{RepHomomorphism, Representation};
use crate::error::{guard, Result};

/// Default bound on `|V|` and `|G|` for isomorphism search.
pub const ISO_GUARD: usize = 16;

/// All isomorphisms `g → h`, each as an element map.
pub fn group_isomorphisms(g: &FiniteGroup, h: &FiniteGroup) -> Vec<Vec<usize>> {
    if g.order() != h.order() {
        return Vec::new();
    }
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = g.element_order(s);
            h.elements().filter(|&t| h.element_order(t) == o).collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(gens.len());
    assign(&candidates, &mut images, &mut |images| {
        if let Some(map) = extend_group_map(g, h, &gens, images) {
            out.push(map);
        }
    });
    out
}

fn extend_group_map(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let value = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = value;
                frontier.push(y);
            } else if map[y] != value {
                return None;
            }
        }
    }
    is_bijection(&map, h.order()).then_some(map)
}

/// All additive bijections `v → w`.
pub fn module_isomorphisms(v: &FiniteModule, w: &FiniteModule) -> Vec<Vec<usize>> {
    if v.size() != w.size() {
        return Vec::new();
    }
    let orders = v.cyclic_orders();
    let candidates: Vec<Vec<usize>> = orders
        .iter()
        .map(|&d| {
            w.elements()
                .filter(|&b| (d as usize).is_multiple_of(w.element_order(b)))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(orders.len());
    assign(&candidates, &mut images, &mut |images| {
        let map: Vec<usize> = v
            .elements()
            .map(|a| {
                v.coords(a)
                    .iter()
                    .zip(images)
                    .fold(0, |acc, (&c, &b)| w.add(acc, w.scale(c as u32, b)))
            })
            .collect();
        if is_bijection(&map, w.size()) {
            out.push(map);
        }
    });
    out
}

/// An isomorphism `(α, β): a → b`, if one exists.
///
/// Ring moduli are not compared: an additive bijection commutes with every
/// integer scalar, so only the underlying two-sorted structure matters.
pub fn find_isomorphism(a: &Representation, b: &Representation, max_side: usize) -> Result<Option<RepHomomorphism>> {
    if a.module().size() != b.module().size() || a.group().order() != b.group().order() {
        return Ok(None);
    }
    guard("module size for isomorphism search", a.module().size(), max_side)?;
    guard("group order for isomorphism search", a.group().order(), max_side)?;
    let betas = group_isomorphisms(a.group(), b.group());
    if betas.is_empty() {
        return Ok(None);
    }
    let gens = a.group().generators();
    let basis: Vec<usize> = (0..a.module().rank()).map(|i| a.module().basis(i)).collect();
    for alpha in module_isomorphisms(a.module(), b.module()) {
        for beta in &betas {
            let equivariant = gens.iter().all(|&s| {
                basis
                    .iter()
                    .all(|&e| alpha[a.act(e, s)] == b.act(alpha[e], beta[s]))
            });
            if equivariant {
                let iso = RepHomomorphism {
                    alpha,
                    beta: beta.clone(),
                };
                debug_assert!(iso.check(a, b).is_ok());
                return Ok(Some(iso));
            }
        }
    }
    Ok(None)
}

pub fn isomorphic(a: &Representation, b: &Representation, max_side: usize) -> Result<bool> {
    Ok(find_isomorphism(a, b, max_side)?.is_some())
}

fn assign(candidates: &[Vec<usize>], chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if chosen.len() == candidates.len() {
        visit(chosen);
        return;
    }
    for &c in &candidates[chosen.len()] {
        chosen.push(c);
        assign(candidates, chosen, visit);
        chosen.pop();
    }
}

fn is_bijection(map: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    map.len() == n
        && map
            .iter()
            .all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::FiniteRing;

    #[test]
    fn automorphism_counts() {
        assert_eq!(group_isomorphisms(&FiniteGroup::cyclic(4), &FiniteGroup::cyclic(4)).len(), 2);
        assert_eq!(group_isomorphisms(&FiniteGroup::symmetric(3), &FiniteGroup::symmetric(3)).len(), 6);
        let v4 = FiniteGroup::direct_product(&[&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)]);
        assert_eq!(group_isomorphisms(&v4, &v4).len(), 6);
        assert!(group_isomorphisms(&v4, &FiniteGroup::cyclic(4)).is_empty());
        let z2sq = FiniteModule::new(FiniteRing::new(2).unwrap(), vec![2, 2]).unwrap();
        assert_eq!(module_isomorphisms(&z2sq, &z2sq).len(), 6);
        let z6 = FiniteModule::cyclic(FiniteRing::new(6).unwrap());
        let z2z3 = FiniteModule::new(FiniteRing::new(6).unwrap(), vec![2, 3]).unwrap();
        assert_eq!(module_isomorphisms(&z2z3, &z6).len(), 2);
    }

    #[test]
    fn distinguishes_actions() {
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        let triv = Representation::trivial(z3.clone(), FiniteGroup::cyclic(2));
        let neg = Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        assert!(!isomorphic(&triv, &neg, ISO_GUARD).unwrap());
        assert!(isomorphic(&neg, &neg, ISO_GUARD).unwrap());
        let iso = find_isomorphism(&neg, &neg, ISO_GUARD).unwrap().unwrap();
        assert!(iso.is_bijective(&neg, &neg));
    }
}
