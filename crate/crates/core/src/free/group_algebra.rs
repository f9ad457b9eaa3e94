use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::word::FreeWord;
use crate::algebra::{FiniteRing, Representation};
use crate::error::{Error, Result};

/// An element of the group algebra `KF`, `K = Z/n`.
///
/// Coefficients are stored reduced mod `n` and never zero.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupAlgebraElement {
    modulus: u32,
    terms: BTreeMap<FreeWord, u32>,
}

impl GroupAlgebraElement {
    pub fn zero(modulus: u32) -> Self {
        assert!(modulus >= 1);
        GroupAlgebraElement {
            modulus,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(modulus: u32) -> Self {
        Self::monomial(modulus, FreeWord::one(), 1)
    }

    pub fn monomial(modulus: u32, word: FreeWord, coeff: i64) -> Self {
        Self::from_terms(modulus, [(word, coeff)])
    }

    /// Collect like terms and drop zero coefficients.
    pub fn from_terms(modulus: u32, terms: impl IntoIterator<Item = (FreeWord, i64)>) -> Self {
        let ring = FiniteRing::new(modulus).expect("modulus >= 1");
        let mut out = GroupAlgebraElement::zero(modulus);
        for (word, coeff) in terms {
            out.add_term(word, ring.reduce(coeff));
        }
        out
    }

    fn add_term(&mut self, word: FreeWord, coeff: u32) {
        let ring = self.ring();
        let entry = self.terms.entry(word);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let c = ring.add(*e.get(), coeff);
                if c == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = c;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                if coeff != 0 {
                    e.insert(coeff);
                }
            }
        }
    }

    fn ring(&self) -> FiniteRing {
        FiniteRing::new(self.modulus).expect("modulus >= 1")
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, u32)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn support(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|w| w.support()).collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        let ring = self.ring();
        let k = ring.reduce(k);
        Self::from_terms(
            self.modulus,
            self.terms.iter().map(|(w, &c)| (w.clone(), ring.mul(k, c) as i64)),
        )
    }

    /// Right multiplication by a group element, `u ↦ u f`.
    pub fn mul_word(&self, f: &FreeWord) -> Self {
        Self::from_terms(
            self.modulus,
            self.terms.iter().map(|(w, &c)| (w.mul(f), c as i64)),
        )
    }

    /// `a∘u = Σ k·(a∘β(f))` over the terms `k·f` of `u`.
    pub fn act_on(&self, a: usize, beta: &[usize], rep: &Representation) -> Result<usize> {
        if self.modulus != rep.modulus() {
            return Err(Error::RingMismatch {
                term: self.modulus,
                rep: rep.modulus(),
            });
        }
        let m = rep.module();
        self.terms.iter().try_fold(m.zero(), |acc, (f, &k)| {
            let g = f.eval(beta, rep.group())?;
            Ok(m.add(acc, m.scale(k, rep.act(a, g))))
        })
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "group algebra elements over different rings"
        );
    }
}

impl Add for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: Self) -> GroupAlgebraElement {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Neg for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn neg(self) -> GroupAlgebraElement {
        self.scale(-1)
    }
}

impl Sub for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn sub(self, rhs: Self) -> GroupAlgebraElement {
        self + &(-rhs)
    }
}

/// Convolution product.
impl Mul for &GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn mul(self, rhs: Self) -> GroupAlgebraElement {
        self.check_ring(rhs);
        let ring = self.ring();
        let mut out = GroupAlgebraElement::zero(self.modulus);
        for (f, &a) in &self.terms {
            for (g, &b) in &rhs.terms {
                out.add_term(f.mul(g), ring.mul(a, b));
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for GroupAlgebraElement {
            type Output = GroupAlgebraElement;
            fn $method(self, rhs: Self) -> GroupAlgebraElement {
                (&self).$method(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn neg(self) -> GroupAlgebraElement {
        -&self
    }
}

/// `2 + y1 + 3*y1^-1*y2`; zero prints as `0`.
impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, &c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            match (w.is_one(), c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{w}")?,
                (false, c) => write!(f, "{c}*{w}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FiniteGroup, FiniteModule};

    fn y(i: u32) -> FreeWord {
        FreeWord::generator(i)
    }

    #[test]
    fn difference_of_squares_mod_4() {
        let one = GroupAlgebraElement::one(4);
        let y1 = GroupAlgebraElement::monomial(4, y(1), 1);
        let lhs = &(&one + &y1) * &(&one - &y1);
        let expected = GroupAlgebraElement::from_terms(4, [(FreeWord::one(), 1), (y(1).pow(2), -1)]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn characteristic_two() {
        let y1 = GroupAlgebraElement::monomial(2, y(1), 1);
        assert!((&y1 + &y1).is_zero());
        assert_eq!(&y1 * &GroupAlgebraElement::one(2), y1);
    }

    #[test]
    fn zero_coefficients_are_pruned() {
        let u = GroupAlgebraElement::from_terms(3, [(y(1), 3), (y(2), 1), (y(2), 2)]);
        assert!(u.is_zero());
        assert_eq!(u.to_string(), "0");
    }

    #[test]
    fn action_examples() {
        let z3 = FiniteModule::cyclic(FiniteRing::new(3).unwrap());
        let r2 = Representation::new(z3, FiniteGroup::cyclic(2), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
        let one = GroupAlgebraElement::one(3);
        for a in 0..3 {
            assert_eq!(one.act_on(a, &[], &r2).unwrap(), a);
        }
        let u = &GroupAlgebraElement::monomial(3, y(1), 1) - &one;
        // 1∘(y1 - 1) with y1 ↦ g: 2 - 1 = 1
        assert_eq!(u.act_on(1, &[1], &r2).unwrap(), 1);
        let wrong_ring = GroupAlgebraElement::one(2);
        assert!(matches!(
            wrong_ring.act_on(0, &[], &r2),
            Err(Error::RingMismatch { .. })
        ));
    }

    #[test]
    fn display() {
        let u = GroupAlgebraElement::from_terms(5, [(FreeWord::one(), 2), (y(1), 1), (y(1).inv().mul(&y(2)), -1)]);
        assert_eq!(u.to_string(), "2 + y1 + 4*y1^-1*y2");
    }
}
