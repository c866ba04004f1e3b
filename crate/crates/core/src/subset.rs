//! Fixed-width bit sets over the dense element indices of a ground set.

use std::fmt;

/// Largest ground set an [`ElementSubset`] can address.
pub const MAX_ELEMENTS: usize = 128;

/// A set of element indices in `0..MAX_ELEMENTS`, stored as a single `u128`.
///
/// This is the "still present" set of a game position and doubles as the
/// memo key of the solver, so it is `Copy` and hashes cheaply.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ElementSubset(u128);

impl ElementSubset {
    pub const EMPTY: ElementSubset = ElementSubset(0);

    pub const fn from_bits(bits: u128) -> Self {
        ElementSubset(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_ELEMENTS,
            "ground set of {n} elements exceeds {MAX_ELEMENTS}"
        );
        if n == MAX_ELEMENTS {
            ElementSubset(u128::MAX)
        } else {
            ElementSubset((1u128 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        ElementSubset(1u128 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.0 |= 1u128 << i;
    }

    pub fn remove(&mut self, i: usize) {
        debug_assert!(i < MAX_ELEMENTS);
        self.0 &= !(1u128 << i);
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        let mut s = self;
        s.insert(i);
        s
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        let mut s = self;
        s.remove(i);
        s
    }

    #[must_use]
    pub const fn union(self, other: Self) -> Self {
        ElementSubset(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: Self) -> Self {
        ElementSubset(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: Self) -> Self {
        ElementSubset(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Lowest index in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for ElementSubset {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for ElementSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
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

/// Submask enumeration in increasing numeric order.
pub struct Subsets {
    mask: u128,
    next: Option<u128>,
}

impl Iterator for Subsets {
    type Item = ElementSubset;

    fn next(&mut self) -> Option<ElementSubset> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(ElementSubset(cur))
    }
}
