use super::space::SpaceShape;
use crate::bitset::BitSet;
use crate::error::{Error, Result, Var};

/// A subset of a hom-space: an element of the boolean algebra that Val
/// lands in.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ValSet {
    shape: SpaceShape,
    bits: BitSet,
}

impl ValSet {
    pub fn empty(shape: SpaceShape) -> Self {
        ValSet {
            shape,
            bits: BitSet::new(shape.size()),
        }
    }

    pub fn full(shape: SpaceShape) -> Self {
        ValSet {
            shape,
            bits: BitSet::full(shape.size()),
        }
    }

    pub fn from_bits(shape: SpaceShape, bits: BitSet) -> Result<Self> {
        if bits.len() != shape.size() {
            return Err(Error::DimensionMismatch(format!(
                "{} bits for a space of {} points",
                bits.len(),
                shape.size()
            )));
        }
        Ok(ValSet { shape, bits })
    }

    pub fn shape(&self) -> SpaceShape {
        self.shape
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn contains(&self, index: usize) -> bool {
        self.bits.contains(index)
    }

    pub fn count(&self) -> usize {
        self.bits.count()
    }

    pub fn is_full(&self) -> bool {
        self.bits.is_full()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    fn same_space(&self, other: &ValSet) -> Result<()> {
        if self.shape == other.shape {
            Ok(())
        } else {
            Err(Error::DimensionMismatch(format!(
                "value sets over different spaces: `{}` and `{}`",
                self.shape, other.shape
            )))
        }
    }

    pub fn union(&self, other: &ValSet) -> Result<ValSet> {
        self.same_space(other)?;
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        Ok(ValSet { shape: self.shape, bits })
    }

    pub fn intersection(&self, other: &ValSet) -> Result<ValSet> {
        self.same_space(other)?;
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        Ok(ValSet { shape: self.shape, bits })
    }

    pub fn complement(&self) -> ValSet {
        ValSet {
            shape: self.shape,
            bits: self.bits.complement(),
        }
    }

    pub fn is_subset(&self, other: &ValSet) -> Result<bool> {
        self.same_space(other)?;
        Ok(self.bits.is_subset(&other.bits))
    }

    /// The points of the fiber over the β-tuple with index `beta_index`,
    /// as a subset of `V^n`.
    pub fn fiber(&self, beta_index: usize) -> BitSet {
        let len = self.shape.fiber();
        self.bits.slice(beta_index * len, len)
    }

    /// Header line and hex dump, one per line.
    pub fn dump(&self) -> String {
        format!("{}\n{}\n", self.shape, self.bits.to_hex())
    }
}

/// Cylindrification along one coordinate: `p` is in the result iff some
/// point agreeing with `p` off that coordinate is in `set`.
pub fn exists(set: &ValSet, var: Var) -> Result<ValSet> {
    let (stride, radix) = set.shape.stride(var)?;
    Ok(ValSet {
        shape: set.shape,
        bits: cylindrify(&set.bits, stride, radix),
    })
}

pub fn exists_x(set: &ValSet, x: u32) -> Result<ValSet> {
    exists(set, Var::X(x))
}

pub fn exists_y(set: &ValSet, y: u32) -> Result<ValSet> {
    exists(set, Var::Y(y))
}

pub(crate) fn cylindrify(bits: &BitSet, stride: usize, radix: usize) -> BitSet {
    let block = stride * radix;
    let mut out = BitSet::new(bits.len());
    for base in (0..bits.len()).step_by(block) {
        for offset in base..base + stride {
            if (0..radix).any(|c| bits.contains(offset + c * stride)) {
                for c in 0..radix {
                    out.insert(offset + c * stride);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(n: u32, m: u32) -> SpaceShape {
        SpaceShape {
            module_size: 3,
            group_order: 2,
            n,
            m,
        }
    }

    #[test]
    fn cylindrify_each_axis() {
        let s = shape(2, 1);
        let a = ValSet::from_bits(s, BitSet::from_fn(18, |i| i == 4)).unwrap();
        // point 4 = (a1=1, a2=1, g=0)
        let ex1: Vec<usize> = exists_x(&a, 1).unwrap().bits.ones().collect();
        assert_eq!(ex1, vec![3, 4, 5]);
        let ex2: Vec<usize> = exists_x(&a, 2).unwrap().bits.ones().collect();
        assert_eq!(ex2, vec![1, 4, 7]);
        let ey: Vec<usize> = exists_y(&a, 1).unwrap().bits.ones().collect();
        assert_eq!(ey, vec![4, 13]);
        assert!(exists_y(&a, 2).is_err());
    }

    #[test]
    fn mismatched_spaces() {
        let a = ValSet::full(shape(1, 1));
        let b = ValSet::full(shape(1, 2));
        assert!(matches!(a.union(&b), Err(Error::DimensionMismatch(_))));
        assert!(ValSet::from_bits(shape(1, 1), BitSet::new(5)).is_err());
    }

    #[test]
    fn dump_format() {
        let s = SpaceShape {
            module_size: 3,
            group_order: 2,
            n: 1,
            m: 1,
        };
        let a = ValSet::from_bits(s, BitSet::from_fn(6, |i| i < 4)).unwrap();
        assert_eq!(a.dump(), "space n=1 m=1 |V|=3 |G|=2\n0f\n");
    }
}
