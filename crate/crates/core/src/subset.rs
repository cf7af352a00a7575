use core::fmt;

/// A subset of the positive roots, one bit per positive-root index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootSubset {
    bits: u64,
    width: u8,
}

impl RootSubset {
    pub fn empty(width: usize) -> Self {
        assert!(width <= 64);
        RootSubset { bits: 0, width: width as u8 }
    }

    pub fn full(width: usize) -> Self {
        Self::from_bits(width, mask(width))
    }

    pub fn from_bits(width: usize, bits: u64) -> Self {
        assert!(width <= 64);
        debug_assert_eq!(bits & !mask(width), 0);
        RootSubset { bits, width: width as u8 }
    }

    pub fn from_indices(width: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(width);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.width());
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.bits &= !(1u64 << i);
    }

    pub fn union(self, o: Self) -> Self {
        RootSubset { bits: self.bits | o.bits, ..self }
    }

    pub fn intersection(self, o: Self) -> Self {
        RootSubset { bits: self.bits & o.bits, ..self }
    }

    pub fn difference(self, o: Self) -> Self {
        RootSubset { bits: self.bits & !o.bits, ..self }
    }

    pub fn complement(self) -> Self {
        RootSubset { bits: !self.bits & mask(self.width()), ..self }
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.bits & o.bits == 0
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.bits & !o.bits == 0
    }

    /// Lowest member index.
    pub fn first(self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut b = self.bits;
        core::iter::from_fn(move || {
            if b == 0 {
                None
            } else {
                let i = b.trailing_zeros() as usize;
                b &= b - 1;
                Some(i)
            }
        })
    }
}

fn mask(width: usize) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl fmt::Debug for RootSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = RootSubset::from_indices(5, [0, 2, 4]);
        let b = RootSubset::from_indices(5, [1, 2]);
        assert_eq!(a.union(b).len(), 4);
        assert_eq!(a.intersection(b), RootSubset::from_indices(5, [2]));
        assert_eq!(a.difference(b), RootSubset::from_indices(5, [0, 4]));
        assert_eq!(a.complement(), RootSubset::from_indices(5, [1, 3]));
        assert_eq!(a.iter().collect::<std::vec::Vec<_>>(), [0, 2, 4]);
        assert_eq!(RootSubset::full(64).complement(), RootSubset::empty(64));
        assert_eq!(b.first(), Some(1));
        assert!(RootSubset::empty(3).first().is_none());
    }
}
