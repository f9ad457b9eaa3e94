use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::FiniteGroup;
use crate::error::{Error, Result, Var};

/// A generator `y_i` or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub var: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(var: u32, inverse: bool) -> Self {
        assert!(var >= 1, "variable indices are 1-based");
        Letter { var, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            var: self.var,
            inverse: !self.inverse,
        }
    }
}

/// An element of the free group `F(Y)` in reduced form. The empty word is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord(Vec<Letter>);

/// Free reduction: cancel adjacent `y y⁻¹` and `y⁻¹ y` until none remain.
pub fn reduce(letters: impl IntoIterator<Item = Letter>) -> FreeWord {
    let mut stack: Vec<Letter> = Vec::new();
    for l in letters {
        if stack.last() == Some(&l.inv()) {
            stack.pop();
        } else {
            stack.push(l);
        }
    }
    FreeWord(stack)
}

impl FreeWord {
    pub fn one() -> Self {
        FreeWord(Vec::new())
    }

    pub fn generator(var: u32) -> Self {
        FreeWord(vec![Letter::new(var, false)])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        reduce(self.0.iter().chain(&other.0).copied())
    }

    pub fn inv(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inv() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::one(), |acc, _| acc.mul(&base))
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.0.iter().map(|l| l.var).collect()
    }

    /// Image under the homomorphism `F(Y) → G` extending `y_i ↦ beta[i-1]`.
    pub fn eval(&self, beta: &[usize], group: &FiniteGroup) -> Result<usize> {
        self.0.iter().try_fold(group.identity(), |acc, l| {
            let g = *beta
                .get(l.var as usize - 1)
                .ok_or(Error::UnboundVariable(Var::Y(l.var)))?;
            Ok(group.mul(acc, if l.inverse { group.inv(g) } else { g }))
        })
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        reduce(iter)
    }
}

/// `y1*y2^-1*y1^2`; runs of one letter print as powers. The unit prints as `1`.
impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let run = self.0[i..].iter().take_while(|&&m| m == l).count();
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", l.var)?;
            match (run, l.inverse) {
                (1, false) => {}
                (k, false) => write!(f, "^{k}")?,
                (k, true) => write!(f, "^-{k}")?,
            }
            i += run;
        }
        Ok(())
    }
}
