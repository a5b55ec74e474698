use std::fmt;

/// A subset of group elements, bit `i` set when element `i` belongs to it.
///
/// Masks carry no width; the ambient group supplies it wherever complement is
/// taken.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetMask(pub u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn full(n: usize) -> SubsetMask {
        debug_assert!(n <= 64);
        if n == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> SubsetMask {
        SubsetMask(1u64 << i)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> SubsetMask {
        let mut m = 0u64;
        for i in it {
            m |= 1u64 << i;
        }
        SubsetMask(m)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        (self.0 >> i) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn complement(self, n: usize) -> SubsetMask {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    #[inline]
    pub fn union(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | o.0)
    }

    #[inline]
    pub fn intersection(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & o.0)
    }

    #[inline]
    pub fn difference(self, o: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !o.0)
    }

    #[inline]
    pub fn is_subset(self, o: SubsetMask) -> bool {
        self.0 & !o.0 == 0
    }

    #[inline]
    pub fn intersects(self, o: SubsetMask) -> bool {
        self.0 & o.0 != 0
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> MaskIter {
        MaskIter(self.0)
    }

    /// Lowercase hex of the raw bits, without prefix.
    pub fn to_hex(self) -> String {
        format!("{:x}", self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct MaskIter(u64);

impl Iterator for MaskIter {
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
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for MaskIter {}

impl IntoIterator for SubsetMask {
    type Item = usize;
    type IntoIter = MaskIter;

    fn into_iter(self) -> MaskIter {
        self.iter()
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> Self {
        SubsetMask::from_elements(it)
    }
}
