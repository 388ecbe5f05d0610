//! Bitmask subsets of a small ground set `{0, 1, ..., n-1}`.

use core::fmt;

/// Largest ground set a [`Subset`] can index.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of `{0, ..., 63}` stored as a bitmask. Bit `i` stands for the
/// element at position `i` of the ambient linear order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    #[inline]
    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    /// `{0, ..., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Subset {
        if n >= 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Subset {
        it.into_iter().fold(Subset::EMPTY, |s, i| s.with(i))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    #[inline]
    pub fn without(self, i: usize) -> Subset {
        Subset(self.0 & !(1u64 << i))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Largest element, if any.
    #[inline]
    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Smallest element, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    /// All subsets of `self`, starting with the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            set: self.0,
            next: Some(0),
        }
    }

    /// All supersets of `self` inside `universe`.
    pub fn supersets_within(self, universe: Subset) -> impl Iterator<Item = Subset> {
        let base = self;
        universe
            .difference(self)
            .subsets()
            .map(move |extra| base.union(extra))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Iterator over the elements of a [`Subset`].
#[derive(Clone)]
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Carry-rippler enumeration of the subsets of a bitmask.
#[derive(Clone)]
pub struct Subsets {
    set: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Subset;

    #[inline]
    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        let following = cur.wrapping_sub(self.set) & self.set;
        self.next = if following == 0 { None } else { Some(following) };
        Some(Subset(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    #[test]
    fn subsets_of_sparse_mask() {
        let all: Vec<u64> = Subset(0b101).subsets().map(Subset::bits).collect();
        assert_eq!(all, [0, 1, 4, 5]);
    }

    #[test]
    fn max_and_min() {
        let s = Subset::from_indices([3, 9, 5]);
        assert_eq!(s.max(), Some(9));
        assert_eq!(s.min(), Some(3));
        assert_eq!(Subset::EMPTY.max(), None);
        assert_eq!(s.iter().collect::<Vec<_>>(), [3, 5, 9]);
    }

    #[test]
    fn supersets_count() {
        let base = Subset::from_indices([0, 2]);
        let sup: Vec<Subset> = base.supersets_within(Subset::full(4)).collect();
        assert_eq!(sup.len(), 4);
        assert!(sup.iter().all(|s| base.is_subset_of(*s)));
    }

    #[test]
    fn full_64() {
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::full(0), Subset::EMPTY);
    }
}
