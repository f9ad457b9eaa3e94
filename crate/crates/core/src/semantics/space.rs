use std::fmt;

use crate::algebra::Representation;
use crate::error::{guard, Error, Result, Var};

/// Default bound on `|V|^n · |G|^m`.
pub const DEFAULT_GUARD: usize = 1 << 20;

/// Dimensions of a hom-space, enough to tell whether two value sets live in
/// the same boolean algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SpaceShape {
    pub module_size: usize,
    pub group_order: usize,
    pub n: u32,
    pub m: u32,
}

impl SpaceShape {
    /// `|V|^n`, the length of one β-fiber.
    pub fn fiber(&self) -> usize {
        self.module_size.pow(self.n)
    }

    pub fn size(&self) -> usize {
        self.fiber() * self.group_order.pow(self.m)
    }

    /// Index distance between neighbouring values of one coordinate, and
    /// the number of values it takes.
    pub fn stride(&self, var: Var) -> Result<(usize, usize)> {
        match var {
            Var::X(i) if (1..=self.n).contains(&i) => Ok((self.module_size.pow(i - 1), self.module_size)),
            Var::Y(j) if (1..=self.m).contains(&j) => {
                Ok((self.fiber() * self.group_order.pow(j - 1), self.group_order))
            }
            _ => Err(Error::DimensionMismatch(format!(
                "{var} is not a coordinate of a space with n={} m={}",
                self.n, self.m
            ))),
        }
    }
}

/// `space n=<n> m=<m> |V|=<v> |G|=<g>`.
impl fmt::Display for SpaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "space n={} m={} |V|={} |G|={}",
            self.n, self.m, self.module_size, self.group_order
        )
    }
}

/// A homomorphism `W(X, Y) → (V, G)`, i.e. `(α, β)` with `α(x_i) = a[i-1]`
/// and `β(y_j) = g[j-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomPoint {
    pub a: Vec<usize>,
    pub g: Vec<usize>,
}

/// `Hom(W, (V, G)) ≅ V^n × G^m`, indexed mixed-radix with `x1` fastest, then
/// the remaining x's, then `y1`, then the remaining y's.
#[derive(Clone, Copy, Debug)]
pub struct HomSpace<'r> {
    rep: &'r Representation,
    shape: SpaceShape,
}

impl<'r> HomSpace<'r> {
    pub fn new(rep: &'r Representation, n: u32, m: u32) -> Result<Self> {
        Self::with_guard(rep, n, m, DEFAULT_GUARD)
    }

    pub fn with_guard(rep: &'r Representation, n: u32, m: u32, limit: usize) -> Result<Self> {
        let v = rep.module().size();
        let g = rep.group().order();
        let size = (v as u128).saturating_pow(n) * (g as u128).saturating_pow(m);
        guard(
            "hom-space size |V|^n·|G|^m",
            usize::try_from(size).unwrap_or(usize::MAX),
            limit,
        )?;
        Ok(HomSpace {
            rep,
            shape: SpaceShape {
                module_size: v,
                group_order: g,
                n,
                m,
            },
        })
    }

    pub fn rep(&self) -> &'r Representation {
        self.rep
    }

    pub fn shape(&self) -> SpaceShape {
        self.shape
    }

    pub fn n(&self) -> u32 {
        self.shape.n
    }

    pub fn m(&self) -> u32 {
        self.shape.m
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn point(&self, mut index: usize) -> HomPoint {
        debug_assert!(index < self.size());
        let (v, g) = (self.shape.module_size, self.shape.group_order);
        let a = (0..self.shape.n)
            .map(|_| {
                let c = index % v;
                index /= v;
                c
            })
            .collect();
        let g = (0..self.shape.m)
            .map(|_| {
                let c = index % g;
                index /= g;
                c
            })
            .collect();
        HomPoint { a, g }
    }

    pub fn index(&self, p: &HomPoint) -> usize {
        assert_eq!(p.a.len(), self.shape.n as usize);
        assert_eq!(p.g.len(), self.shape.m as usize);
        let (v, g) = (self.shape.module_size, self.shape.group_order);
        let beta = p.g.iter().rev().fold(0, |acc, &c| acc * g + c);
        p.a.iter().rev().fold(beta, |acc, &c| acc * v + c)
    }

    /// β-fiber index of a tuple of group elements.
    pub fn beta_index(&self, beta: &[usize]) -> usize {
        let g = self.shape.group_order;
        beta.iter().rev().fold(0, |acc, &c| acc * g + c)
    }

    /// The tuple `β` of the fiber with the given index.
    pub fn beta(&self, mut index: usize) -> Vec<usize> {
        let g = self.shape.group_order;
        (0..self.shape.m)
            .map(|_| {
                let c = index % g;
                index /= g;
                c
            })
            .collect()
    }

    /// Replace every group coordinate outside `y0` by the identity.
    pub fn y0_modify(&self, p: &HomPoint, y0: &std::collections::BTreeSet<u32>) -> HomPoint {
        y0_modify(p, y0, self.rep.group().identity())
    }
}

/// `μ′` from `μ`: α unchanged, `β′(y) = β(y)` for `y ∈ Y0` and 1 otherwise.
pub fn y0_modify(p: &HomPoint, y0: &std::collections::BTreeSet<u32>, identity: usize) -> HomPoint {
    HomPoint {
        a: p.a.clone(),
        g: p
            .g
            .iter()
            .enumerate()
            .map(|(j, &g)| if y0.contains(&(j as u32 + 1)) { g } else { identity })
            .collect(),
    }
}
