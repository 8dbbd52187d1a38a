//! Bitmask sets over small indexed ground sets.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor, Not, Sub};

/// Largest ground set an [`ElementSet`] can address.
pub const MAX_ELEMENTS: usize = 128;

/// A subset of `{0, .., MAX_ELEMENTS-1}`, stored as a bitmask.
///
/// Matroid ground sets and graph edge sets are both indexed, so every
/// set-valued quantity in the crate (independent sets, sides of a
/// partition, witnesses) is one of these.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "ground of {n} elements exceeds {MAX_ELEMENTS}");
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElementSet(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(ElementSet::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 & (1u128 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        ElementSet(self.0 | (1u128 << i))
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        ElementSet(self.0 & !(1u128 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Ascending iteration over the members.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Spreads the low bits of `mask` onto the members of `self`, in ascending
    /// order: bit `k` of `mask` selects the `k`-th smallest member.
    pub fn select(self, mut mask: u64) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for i in self.iter() {
            if mask == 0 {
                break;
            }
            if mask & 1 == 1 {
                out.insert(i);
            }
            mask >>= 1;
        }
        out
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

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

impl ExactSizeIterator for Iter {}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        ElementSet::from_indices(iter)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & rhs.0)
    }
}

impl BitXor for ElementSet {
    type Output = ElementSet;
    fn bitxor(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 ^ rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: ElementSet) -> ElementSet {
        ElementSet(self.0 & !rhs.0)
    }
}

/// Complement with respect to all `MAX_ELEMENTS` slots; intersect with a
/// ground set before use.
impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> ElementSet {
        ElementSet(!self.0)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_iter() {
        assert_eq!(ElementSet::full(0), ElementSet::EMPTY);
        assert_eq!(ElementSet::full(4).iter().collect::<Vec<_>>(), vec![0, 1, 2, 3]);
        assert_eq!(ElementSet::full(128).len(), 128);
    }

    #[test]
    fn select_spreads_bits() {
        let s = ElementSet::from_indices([2, 5, 9]);
        assert_eq!(s.select(0b101), ElementSet::from_indices([2, 9]));
        assert_eq!(s.select(0), ElementSet::EMPTY);
    }

    #[test]
    fn set_algebra() {
        let a = ElementSet::from_indices([0, 1, 2]);
        let b = ElementSet::from_indices([2, 3]);
        assert_eq!(a - b, ElementSet::from_indices([0, 1]));
        assert_eq!((a & b).first(), Some(2));
        assert!(ElementSet::singleton(1).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.without(0).with(7), ElementSet::from_indices([1, 2, 7]));
    }
}
