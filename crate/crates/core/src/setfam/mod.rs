//! Subsets of a group, families of subsets, and maximal linked systems.

mod enumerate;
mod mls;
mod phi;

pub use enumerate::{enumerate_mls, for_each_mls, random_mls, EnumBudget, PairOrder};
pub(crate) use mls::circ_with;
pub use mls::{circ, MlsSignature};
pub(crate) use phi::phi_reps;
pub use phi::{circ_family, is_monotone_map, is_symmetric_map, phi, phi_family, phi_inverse, phi_map};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MAX_PIPELINE_ORDER};
use crate::mask::SubsetMask;
use std::sync::Arc;

/// The power set of a small group with its left action tabulated.
#[derive(Clone, Debug)]
pub struct PowerSet {
    group: Arc<FiniteGroup>,
    n: usize,
    /// `shift[x << n | a] = xA`
    shift: Vec<u16>,
}

impl PowerSet {
    pub fn new(group: FiniteGroup) -> Result<PowerSet> {
        let n = group.order();
        if n > MAX_PIPELINE_ORDER {
            return Err(Error::SizeCap { what: "power set", order: n, cap: MAX_PIPELINE_ORDER });
        }
        let size = 1usize << n;
        let mut shift = vec![0u16; n * size];
        for x in 0..n {
            let row = &mut shift[x * size..(x + 1) * size];
            // xA built from xA' with A' = A minus its top element.
            for a in 1..size {
                let top = usize::BITS as usize - 1 - a.leading_zeros() as usize;
                row[a] = row[a & !(1 << top)] | (1 << group.mul(x, top));
            }
        }
        Ok(PowerSet { group: Arc::new(group), n, shift })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `2^n`
    #[inline]
    pub fn size(&self) -> usize {
        1 << self.n
    }

    /// `2^(n-1)`, the number of complementary pairs.
    #[inline]
    pub fn pairs(&self) -> usize {
        1 << (self.n - 1)
    }

    #[inline]
    pub fn full(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    #[inline]
    pub fn complement(&self, a: SubsetMask) -> SubsetMask {
        a.complement(self.n)
    }

    /// `xA`
    #[inline]
    pub fn shift(&self, x: usize, a: SubsetMask) -> SubsetMask {
        SubsetMask(self.shift[(x << self.n) | a.0 as usize] as u64)
    }

    pub fn all_subsets(&self) -> impl Iterator<Item = SubsetMask> {
        (0..self.size() as u64).map(SubsetMask)
    }
}

/// An arbitrary family of subsets of an `n`-element set, stored as a bitset
/// over all `2^n` subsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FamilyOfSets {
    n: usize,
    bits: Vec<u64>,
}

impl std::fmt::Debug for FamilyOfSets {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FamilyOfSets {
    pub fn empty(n: usize) -> FamilyOfSets {
        assert!(n <= MAX_PIPELINE_ORDER);
        FamilyOfSets { n, bits: vec![0; (1usize << n).div_ceil(64)] }
    }

    pub fn from_sets<I: IntoIterator<Item = SubsetMask>>(n: usize, sets: I) -> FamilyOfSets {
        let mut f = FamilyOfSets::empty(n);
        for s in sets {
            f.insert(s);
        }
        f
    }

    /// All sets containing `x`.
    pub fn principal(n: usize, x: usize) -> FamilyOfSets {
        FamilyOfSets::from_sets(n, (0..1u64 << n).map(SubsetMask).filter(|a| a.contains(x)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn contains(&self, a: SubsetMask) -> bool {
        let i = a.0 as usize;
        (self.bits[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, a: SubsetMask) {
        let i = a.0 as usize;
        self.bits[i >> 6] |= 1 << (i & 63);
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..1u64 << self.n).map(SubsetMask).filter(|&a| self.contains(a))
    }

    /// All supersets of members.
    pub fn up_closure(&self) -> FamilyOfSets {
        let mut up = self.clone();
        let size = 1usize << self.n;
        for i in 0..self.n {
            for a in 0..size {
                if a & (1 << i) == 0 && up.contains(SubsetMask(a as u64)) {
                    up.insert(SubsetMask((a | (1 << i)) as u64));
                }
            }
        }
        up
    }

    /// Any two members intersect.
    ///
    /// `A` misses some member iff `X \ A` lies in the up-closure.
    pub fn is_linked(&self) -> bool {
        let up = self.up_closure();
        self.iter().all(|a| !up.contains(a.complement(self.n)))
    }

    /// Linked and containing one set of every complementary pair, which
    /// leaves no room for a proper linked extension.
    pub fn is_maximal_linked(&self) -> bool {
        let all_pairs = (0..1u64 << (self.n.max(1) - 1)).all(|a| {
            let a = SubsetMask(a);
            self.contains(a) != self.contains(a.complement(self.n))
        });
        all_pairs && self.is_linked()
    }

    pub fn is_monotone(&self) -> bool {
        self.up_closure() == *self
    }
}
