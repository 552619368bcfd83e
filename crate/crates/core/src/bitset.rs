//! Fixed-width vertex sets over at most 64 vertices, backed by a single `u64`.

use std::fmt;

/// Largest vertex count supported by [`VertexSet`] and [`crate::graph::Graph`].
pub const MAX_VERTICES: usize = 64;

/// A set of vertex ids in `0..64`, stored as a bit mask.
///
/// All solver-facing set algebra (union, intersection, difference,
/// cardinality) is a single machine instruction, which is what makes
/// exhaustive search over partitions affordable.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        debug_assert!(v < MAX_VERTICES);
        self.0 & (1u64 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u64 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn remove(&mut self, v: usize) {
        *self = self.without(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest element, or `None` if empty.
    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates elements in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = BitIter;
    fn into_iter(self) -> BitIter {
        self.iter()
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for BitIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.min_elem(), Some(0));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(s.without(0).min_elem(), Some(2));
        assert_eq!(VertexSet::full(3).bits(), 0b111);
        assert!(VertexSet::EMPTY.is_empty());
    }

    #[test]
    fn algebra() {
        let a: VertexSet = [0, 1].into_iter().collect();
        let b: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(a.union(b), [0, 1, 2].into_iter().collect());
        assert_eq!(a.intersection(b), VertexSet::singleton(1));
        assert_eq!(a.difference(b), VertexSet::singleton(0));
        assert!(a.is_subset(VertexSet::full(4)));
        assert!(!a.is_disjoint(b));
        assert!(a.is_disjoint(VertexSet::singleton(3)));
    }

    #[test]
    fn display_is_space_separated() {
        let s: VertexSet = [3, 1].into_iter().collect();
        assert_eq!(s.to_string(), "1 3");
        assert_eq!(VertexSet::EMPTY.to_string(), "");
    }
}
