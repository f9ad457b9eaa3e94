//! The bundled starter catalog, built from first principles. The files in
//! `catalog/` are this list serialized; a test keeps the two in sync.

use crate::algebra::{direct_product, FiniteGroup, FiniteModule, FiniteRing, Representation};

pub struct StarterEntry {
    pub name: &'static str,
    /// How the tables were obtained.
    pub note: &'static str,
    pub rep: Representation,
}

fn ring(n: u32) -> FiniteRing {
    FiniteRing::new(n).expect("positive modulus")
}

fn rep(module: FiniteModule, group: FiniteGroup, act: impl Fn(&FiniteModule, usize, usize) -> usize) -> Representation {
    let table = group
        .elements()
        .map(|g| module.elements().map(|a| act(&module, a, g)).collect())
        .collect();
    Representation::new(module, group, table).expect("starter entries are representations")
}

fn sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn r1() -> Representation {
    Representation::trivial(FiniteModule::cyclic(ring(2)), FiniteGroup::cyclic(2))
}

pub fn r2() -> Representation {
    rep(FiniteModule::cyclic(ring(3)), FiniteGroup::cyclic(2), |m, a, g| {
        if g == 0 {
            a
        } else {
            m.scale(2, a)
        }
    })
}

pub fn starter_catalog() -> Vec<StarterEntry> {
    let z3 = FiniteModule::cyclic(ring(3));
    let s3 = FiniteGroup::symmetric(3);
    vec![
        StarterEntry {
            name: "trivial",
            note: "the zero module over Z/1 with the trivial group: the one-element representation",
            rep: Representation::trivial(FiniteModule::cyclic(ring(1)), FiniteGroup::trivial()),
        },
        StarterEntry {
            name: "r1",
            note: "C2 acting trivially on Z/2: every a∘g = a",
            rep: r1(),
        },
        StarterEntry {
            name: "r2",
            note: "C2 acting on Z/3 by a∘g = 2a = -a; faithful since 2a != a for a = 1",
            rep: r2(),
        },
        StarterEntry {
            name: "c4_on_z3",
            note: "C4 = <g> acting on Z/3 by a∘g^k = (-1)^k a; g^2 acts trivially, so the kernel is {1, g^2} \
                   and the faithful quotient is C2 acting as r2",
            rep: rep(z3.clone(), FiniteGroup::cyclic(4), |m, a, g| if g % 2 == 0 { a } else { m.neg(a) }),
        },
        StarterEntry {
            name: "r1_x_r2",
            note: "direct product of r1 and r2: V = Z/2 x Z/3 read over Z/6, G = C2 x C2 acting componentwise; \
                   the first factor of G acts trivially, so the kernel has order 2",
            rep: direct_product(&[&r1(), &r2()], 1 << 16).expect("small product"),
        },
        StarterEntry {
            name: "s3_sign_on_z3",
            note: "S3 acting on Z/3 by a∘σ = sign(σ)·a; the kernel is A3 and the faithful quotient is C2 \
                   acting as r2",
            rep: rep(z3.clone(), s3.clone(), |m, a, g| {
                if sign(&FiniteGroup::symmetric_permutation(3, g)) == 1 {
                    a
                } else {
                    m.neg(a)
                }
            }),
        },
        StarterEntry {
            name: "s3_on_f2_squared",
            note: "S3 = GL(2,2) acting on (Z/2)^2 by permuting the nonzero vectors (1,0), (0,1), (1,1); any \
                   permutation of them is additive because the sum of two is the third; faithful",
            rep: {
                let v = FiniteModule::new(ring(2), vec![2, 2]).expect("2 divides 2");
                // Nonzero vectors in the order permuted by S3, as element indices.
                let nonzero = [v.index(&[1, 0]), v.index(&[0, 1]), v.index(&[1, 1])];
                rep(v, s3.clone(), move |_, a, g| {
                    let perm = FiniteGroup::symmetric_permutation(3, g);
                    match nonzero.iter().position(|&b| b == a) {
                        Some(p) => nonzero[perm[p]],
                        None => a,
                    }
                })
            },
        },
        StarterEntry {
            name: "c2_neg_on_z4",
            note: "C2 acting on Z/4 by negation; fixes 0 and 2, swaps 1 and 3; faithful",
            rep: rep(FiniteModule::cyclic(ring(4)), FiniteGroup::cyclic(2), |m, a, g| {
                if g == 0 {
                    a
                } else {
                    m.neg(a)
                }
            }),
        },
        StarterEntry {
            name: "c2_swap_on_z3_squared",
            note: "C2 acting on (Z/3)^2 by swapping the coordinates (u, v) -> (v, u); faithful",
            rep: {
                let v = FiniteModule::new(ring(3), vec![3, 3]).expect("3 divides 3");
                rep(v, FiniteGroup::cyclic(2), |m, a, g| {
                    let c = m.coords(a);
                    if g == 0 {
                        a
                    } else {
                        m.index(&[c[1], c[0]])
                    }
                })
            },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernels_match_the_notes() {
        let c = starter_catalog();
        let kernel = |name: &str| c.iter().find(|e| e.name == name).unwrap().rep.kernel().len();
        assert_eq!(kernel("r1"), 2);
        assert_eq!(kernel("r2"), 1);
        assert_eq!(kernel("c4_on_z3"), 2);
        assert_eq!(kernel("r1_x_r2"), 2);
        assert_eq!(kernel("s3_sign_on_z3"), 3);
        assert_eq!(kernel("s3_on_f2_squared"), 1);
        assert_eq!(kernel("c2_neg_on_z4"), 1);
        assert_eq!(kernel("c2_swap_on_z3_squared"), 1);
    }

    #[test]
    fn sizes_are_desk_scale() {
        for e in starter_catalog() {
            assert!(e.rep.module().size() <= 9 && e.rep.group().order() <= 8, "{}", e.name);
        }
    }
}
