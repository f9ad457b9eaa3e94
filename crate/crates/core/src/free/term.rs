use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::group_algebra::GroupAlgebraElement;
use super::word::FreeWord;
use crate::algebra::Representation;
use crate::error::{Error, Result, Var};

/// An element `x_1 u_1 + … + x_n u_n` of the free module `XKF`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleTerm {
    modulus: u32,
    summands: BTreeMap<u32, GroupAlgebraElement>,
}

impl ModuleTerm {
    pub fn zero(modulus: u32) -> Self {
        ModuleTerm {
            modulus,
            summands: BTreeMap::new(),
        }
    }

    /// `x_i · u`.
    pub fn summand(var: u32, u: GroupAlgebraElement) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        let mut t = ModuleTerm::zero(u.modulus());
        if !u.is_zero() {
            t.summands.insert(var, u);
        }
        t
    }

    pub fn from_summands(modulus: u32, summands: impl IntoIterator<Item = (u32, GroupAlgebraElement)>) -> Self {
        summands
            .into_iter()
            .fold(ModuleTerm::zero(modulus), |acc, (x, u)| acc.add(&ModuleTerm::summand(x, u)))
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = (u32, &GroupAlgebraElement)> {
        self.summands.iter().map(|(&x, u)| (x, u))
    }

    pub fn add(&self, other: &ModuleTerm) -> ModuleTerm {
        assert_eq!(self.modulus, other.modulus, "module terms over different rings");
        let mut out = self.clone();
        for (&x, u) in &other.summands {
            let sum = match out.summands.get(&x) {
                Some(v) => v + u,
                None => u.clone(),
            };
            if sum.is_zero() {
                out.summands.remove(&x);
            } else {
                out.summands.insert(x, sum);
            }
        }
        out
    }

    pub fn neg(&self) -> ModuleTerm {
        ModuleTerm {
            modulus: self.modulus,
            summands: self.summands.iter().map(|(&x, u)| (x, -u)).collect(),
        }
    }

    /// The free action `w∘f = w f`.
    pub fn act(&self, f: &FreeWord) -> ModuleTerm {
        ModuleTerm {
            modulus: self.modulus,
            summands: self.summands.iter().map(|(&x, u)| (x, u.mul_word(f))).collect(),
        }
    }

    pub fn x_support(&self) -> BTreeSet<u32> {
        self.summands.keys().copied().collect()
    }

    pub fn y_support(&self) -> BTreeSet<u32> {
        self.summands.values().flat_map(|u| u.support()).collect()
    }

    /// `w^α = Σ α(x_i)∘u_i^β` in V.
    pub fn eval(&self, alpha: &[usize], beta: &[usize], rep: &Representation) -> Result<usize> {
        let m = rep.module();
        self.summands.iter().try_fold(m.zero(), |acc, (&x, u)| {
            let a = *alpha
                .get(x as usize - 1)
                .ok_or(Error::UnboundVariable(Var::X(x)))?;
            Ok(m.add(acc, u.act_on(a, beta, rep)?))
        })
    }
}

/// `x1*(y1 + 2) + x3*(1)`; the zero term prints as `0`.
impl fmt::Display for ModuleTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, (x, u)) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "x{x}*({u})")?;
        }
        Ok(())
    }
}
