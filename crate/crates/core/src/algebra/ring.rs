use crate::error::{Error, Result};

/// The ring Z/n. For `n = 1` this is the zero ring, where `1 = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    modulus: u32,
}

impl FiniteRing {
    pub fn new(modulus: u32) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModule("ring modulus must be at least 1".into()));
        }
        Ok(FiniteRing { modulus })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.modulus
    }

    pub fn one(&self) -> u32 {
        1 % self.modulus
    }

    /// Reduce an arbitrary integer to its residue in `0..n`.
    pub fn reduce(&self, k: i64) -> u32 {
        k.rem_euclid(self.modulus as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.modulus as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        (self.modulus - a % self.modulus) % self.modulus
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.modulus as u64) as u32
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}
