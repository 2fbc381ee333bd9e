//! Fixed-width vertex subsets.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::MAX_VERTICES;

/// A subset of `{0, .., n-1}` stored as a single machine word.
///
/// The universe size travels with the set so complements and range checks
/// never need the owning graph. No bit at or above `n` is ever set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: u64,
    n: u8,
}

#[inline]
pub(crate) fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet { bits: 0, n: n as u8 }
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet { bits: universe_mask(n), n: n as u8 }
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        assert!(v < n, "vertex {v} outside universe of size {n}");
        VertexSet { bits: 1 << v, n: n as u8 }
    }

    /// Builds a set from raw bits, rejecting bits outside the universe.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        if bits & !universe_mask(n) != 0 {
            let vertex = 63 - (bits & !universe_mask(n)).leading_zeros() as usize;
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(VertexSet { bits, n: n as u8 })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !universe_mask(n), 0);
        VertexSet { bits, n: n as u8 }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut bits = 0u64;
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            bits |= 1 << v;
        }
        Ok(VertexSet { bits, n: n as u8 })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(self) -> bool {
        self.bits == universe_mask(self.universe())
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.bits >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe(), "vertex {v} outside universe of size {}", self.n);
        self.bits |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        if v < 64 {
            self.bits &= !(1 << v);
        }
    }

    pub fn with(mut self, v: usize) -> Self {
        self.insert(v);
        self
    }

    pub fn without(mut self, v: usize) -> Self {
        self.remove(v);
        self
    }

    /// The vertices of the universe not in `self`.
    #[inline]
    pub fn complement(self) -> Self {
        VertexSet { bits: !self.bits & universe_mask(self.universe()), n: self.n }
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.bits & other.bits == 0
    }

    /// Lowest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter { bits: self.bits }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter {
    bits: u64,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let v = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;

    fn bitor(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, rhs.n);
        VertexSet { bits: self.bits | rhs.bits, n: self.n }
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;

    fn bitand(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, rhs.n);
        VertexSet { bits: self.bits & rhs.bits, n: self.n }
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;

    fn sub(self, rhs: VertexSet) -> VertexSet {
        debug_assert_eq!(self.n, rhs.n);
        VertexSet { bits: self.bits & !rhs.bits, n: self.n }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_out_of_universe_bits() {
        assert!(VertexSet::from_bits(3, 0b1000).is_err());
        assert!(VertexSet::from_vertices(3, [0, 3]).is_err());
        assert_eq!(VertexSet::from_bits(64, u64::MAX).unwrap().len(), 64);
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = VertexSet::from_vertices(5, [1, 3]).unwrap();
        assert_eq!(s.complement().to_vec(), vec![0, 2, 4]);
        assert!(VertexSet::empty(5).complement().is_full());
    }

    proptest! {
        #[test]
        fn set_algebra_matches_iteration(n in 1usize..=64, a: u64, b: u64) {
            let a = VertexSet::from_bits(n, a & universe_mask(n)).unwrap();
            let b = VertexSet::from_bits(n, b & universe_mask(n)).unwrap();
            let union: Vec<_> = (0..n).filter(|&v| a.contains(v) || b.contains(v)).collect();
            prop_assert_eq!((a | b).to_vec(), union);
            prop_assert_eq!((a - b).len() + (a & b).len(), a.len());
            prop_assert!((a & b).is_subset(a));
            prop_assert_eq!(a.complement().complement(), a);
        }
    }
}
