//! Fixed-length dense bitset.

use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut set = BitSet {
            len,
            words: vec![u64::MAX; len.div_ceil(64)],
        };
        set.clear_tail();
        set
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut set = BitSet::new(len);
        for i in 0..len {
            if f(i) {
                set.insert(i);
            }
        }
        set
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        if value {
            self.insert(i);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + bit)
            })
        })
    }

    /// First index where the two sets differ.
    pub fn first_difference(&self, other: &BitSet) -> Option<usize> {
        assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .enumerate()
            .find(|(_, (a, b))| a != b)
            .map(|(k, (a, b))| k * 64 + (a ^ b).trailing_zeros() as usize)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        assert_eq!(self.len, other.len);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn complement(&self) -> BitSet {
        let mut out = BitSet {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    /// Copy of bits `[start, start + len)`.
    pub fn slice(&self, start: usize, len: usize) -> BitSet {
        BitSet::from_fn(len, |i| self.contains(start + i))
    }

    /// Lowercase hex of the integer `sum(bit_i * 2^i)`, most significant digit
    /// first, zero-padded to `ceil(len / 4)` digits.
    pub fn to_hex(&self) -> String {
        let digits = self.len.div_ceil(4);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let word = self.words[d * 4 / 64];
            let nibble = (word >> ((d * 4) % 64)) & 0xf;
            write!(out, "{nibble:x}").unwrap();
        }
        out
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitSet[{}; {}]", self.len, self.to_hex())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_layout() {
        assert_eq!(BitSet::full(6).to_hex(), "3f");
        assert_eq!(BitSet::from_fn(6, |i| i < 4).to_hex(), "0f");
        assert_eq!(BitSet::full(1).to_hex(), "1");
        assert_eq!(BitSet::new(0).to_hex(), "");
        let mut big = BitSet::new(70);
        big.insert(64);
        big.insert(0);
        assert_eq!(big.to_hex(), format!("01{}1", "0".repeat(15)));
    }

    #[test]
    fn complement_masks_tail() {
        let c = BitSet::new(70).complement();
        assert_eq!(c.count(), 70);
        assert!(c.is_full());
        assert!(c.complement().is_empty());
    }

    #[test]
    fn ones_and_difference() {
        let a = BitSet::from_fn(130, |i| i % 3 == 0);
        assert_eq!(a.ones().count(), a.count());
        assert!(a.ones().all(|i| i % 3 == 0));
        let mut b = a.clone();
        b.insert(100);
        assert_eq!(a.first_difference(&b), Some(100));
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
    }
}
