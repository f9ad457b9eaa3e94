//! Structural invariants of groups, modules and representations, each
//! checked against a direct oracle.

use std::collections::BTreeSet;

use repkit::algebra::{
    direct_product, enumerate_congruences, quotient, FiniteGroup, FiniteModule, FiniteRing, Representation,
};
use repkit::starter::starter_catalog;

fn groups() -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = vec![
        ("C1".into(), FiniteGroup::trivial()),
        ("C6".into(), FiniteGroup::cyclic(6)),
        ("C8".into(), FiniteGroup::cyclic(8)),
        ("S3".into(), FiniteGroup::symmetric(3)),
        (
            "C2xC2xC2".into(),
            FiniteGroup::direct_product(&[&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2)]),
        ),
        ("C2xC4".into(), FiniteGroup::direct_product(&[&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(4)])),
    ];
    out.extend(starter_catalog().into_iter().map(|e| (e.name.to_string(), e.rep.group().clone())));
    out
}

/// Subgroups by testing every subset for containing 1 and closure.
fn subgroups_oracle(g: &FiniteGroup) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.contains(&g.identity()) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&g.mul(a, b)))))
        .collect()
}

#[test]
fn subgroups_match_the_subset_oracle() {
    for (name, g) in groups() {
        let found = g.subgroups(12).unwrap();
        let set: BTreeSet<Vec<usize>> = found.iter().cloned().collect();
        assert_eq!(set.len(), found.len(), "{name}: duplicates");
        assert_eq!(set, subgroups_oracle(&g), "{name}");
    }
}

#[test]
fn subgroup_counts() {
    // C8 has one subgroup per divisor; S3 has 1 + 3 + 1 + 1; (C2)^3 has
    // 1 + 7 + 7 + 1.
    let count = |g: FiniteGroup| g.subgroups(12).unwrap().len();
    assert_eq!(count(FiniteGroup::cyclic(8)), 4);
    assert_eq!(count(FiniteGroup::symmetric(3)), 6);
    let c2 = FiniteGroup::cyclic(2);
    assert_eq!(count(FiniteGroup::direct_product(&[&c2, &c2, &c2])), 16);
}

#[test]
fn module_axioms_hold_exhaustively() {
    let cases: [(u32, Vec<u32>); 5] = [
        (1, vec![1]),
        (6, vec![2, 3]),
        (8, vec![2, 4, 8]),
        (12, vec![12, 6, 2]),
        (4, vec![4, 4, 4, 4]),
    ];
    for (n, orders) in cases {
        let ring = FiniteRing::new(n).unwrap();
        let m = FiniteModule::new(ring, orders.clone()).unwrap();
        assert!(m.size() <= 256);
        assert_eq!(m.coords(m.zero()), vec![0; orders.len()]);
        for a in m.elements() {
            assert_eq!(m.scale(1, a), a, "{orders:?}");
            assert_eq!(m.add(a, m.neg(a)), m.zero());
            for k1 in 0..n {
                for k2 in 0..n {
                    assert_eq!(m.scale(ring.mul(k1, k2), a), m.scale(k1, m.scale(k2, a)));
                    assert_eq!(m.scale(ring.add(k1, k2), a), m.add(m.scale(k1, a), m.scale(k2, a)));
                }
            }
            for b in m.elements() {
                assert_eq!(m.add(a, b), m.add(b, a));
                for k in 0..n {
                    assert_eq!(m.scale(k, m.add(a, b)), m.add(m.scale(k, a), m.scale(k, b)));
                }
            }
        }
    }
}

#[test]
fn module_orders_must_divide_the_modulus() {
    let ring = FiniteRing::new(6).unwrap();
    assert!(FiniteModule::new(ring, vec![4]).is_err());
    assert!(FiniteModule::new(ring, vec![3, 2]).is_ok());
}

#[test]
fn invalid_actions_name_the_axiom() {
    // a∘g = a + 1 on Z/3 is not linear.
    let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
    let err = Representation::new(z3.clone(), FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![1, 2, 0]]).unwrap_err();
    assert!(err.to_string().contains("axiom 1"), "{err}");
    // The identity acting by negation breaks axiom 3.
    let err = Representation::new(z3, FiniteGroup::trivial(), vec![vec![0, 2, 1]]).unwrap_err();
    assert!(err.to_string().contains("axiom 3"), "{err}");
}

#[test]
fn faithful_quotients_are_faithful_and_compatible() {
    for e in starter_catalog() {
        let (bar, beta0) = e.rep.faithful_quotient();
        assert!(bar.is_faithful(), "{}", e.name);
        assert_eq!(bar.module(), e.rep.module());
        assert_eq!(bar.group().order() * e.rep.kernel().len(), e.rep.group().order(), "{}", e.name);
        for g in e.rep.group().elements() {
            for a in e.rep.module().elements() {
                assert_eq!(e.rep.act(a, g), bar.act(a, beta0[g]), "{}", e.name);
            }
        }
    }
}

#[test]
fn quotients_have_the_congruence_as_kernel() {
    for e in starter_catalog() {
        for c in enumerate_congruences(&e.rep, 64, 12).unwrap() {
            let (q, pi) = quotient(&e.rep, &c).unwrap();
            pi.check(&e.rep, &q).unwrap();
            let (v0, h) = pi.kernel(&e.rep);
            assert_eq!((v0, h), (c.submodule.clone(), c.normal_subgroup.clone()), "{}", e.name);
            assert_eq!(q.module().size() * c.submodule.len(), e.rep.module().size());
            assert_eq!(q.group().order() * c.normal_subgroup.len(), e.rep.group().order());
        }
    }
}

#[test]
fn products_have_product_sizes() {
    let c = starter_catalog();
    for a in &c {
        for b in &c {
            let p = direct_product(&[&a.rep, &b.rep], 1 << 16).unwrap();
            assert_eq!(p.module().size(), a.rep.module().size() * b.rep.module().size());
            assert_eq!(p.group().order(), a.rep.group().order() * b.rep.group().order());
            assert_eq!(p.kernel().len(), a.rep.kernel().len() * b.rep.kernel().len(), "{} x {}", a.name, b.name);
        }
    }
}
