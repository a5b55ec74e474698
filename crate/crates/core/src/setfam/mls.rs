use super::{FamilyOfSets, PowerSet};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use std::fmt;

/// A maximal linked system stored as one bit per complementary pair.
///
/// The pair `{A, X \ A}` is represented by whichever mask has the top element
/// clear (the smaller integer); its bit is set when that mask is a member.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MlsSignature {
    n: u8,
    bits: Vec<u64>,
}

impl fmt::Debug for MlsSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mls(n={}, {})", self.n, self.to_hex())
    }
}

impl MlsSignature {
    pub(crate) fn from_words(n: usize, bits: Vec<u64>) -> MlsSignature {
        debug_assert_eq!(bits.len(), words_for(n));
        MlsSignature { n: n as u8, bits }
    }

    /// Builds a signature from a membership predicate evaluated on pair
    /// representatives only. The caller vouches for maximal linkedness.
    pub fn from_rep_predicate(n: usize, mut member: impl FnMut(SubsetMask) -> bool) -> MlsSignature {
        let pairs = 1usize << (n - 1);
        let mut bits = vec![0u64; words_for(n)];
        for r in 0..pairs {
            if member(SubsetMask(r as u64)) {
                bits[r >> 6] |= 1 << (r & 63);
            }
        }
        MlsSignature { n: n as u8, bits }
    }

    /// The ultrafilter of all sets containing `x`.
    pub fn principal(n: usize, x: usize) -> MlsSignature {
        MlsSignature::from_rep_predicate(n, |a| a.contains(x))
    }

    pub fn from_family(f: &FamilyOfSets) -> Result<MlsSignature> {
        if !f.is_maximal_linked() {
            return Err(Error::InvalidArgument("family is not maximal linked".into()));
        }
        Ok(MlsSignature::from_rep_predicate(f.n(), |a| f.contains(a)))
    }

    pub fn to_family(&self) -> FamilyOfSets {
        let n = self.n();
        FamilyOfSets::from_sets(n, (0..1u64 << n).map(SubsetMask).filter(|&a| self.contains(a)))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn pairs(&self) -> usize {
        1 << (self.n - 1)
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn rep_bit(&self, r: usize) -> bool {
        (self.bits[r >> 6] >> (r & 63)) & 1 == 1
    }

    /// Membership in O(1) through self-duality.
    #[inline]
    pub fn contains(&self, a: SubsetMask) -> bool {
        let half = 1u64 << (self.n - 1);
        if a.0 < half {
            self.rep_bit(a.0 as usize)
        } else {
            !self.rep_bit((!a.0 & (2 * half - 1)) as usize)
        }
    }

    /// Big-endian hex of the choice vector, `ceil(pairs / 4)` digits.
    pub fn to_hex(&self) -> String {
        let digits = self.pairs().div_ceil(4);
        let mut out = String::with_capacity(digits);
        for d in (0..digits).rev() {
            let bit = d * 4;
            let nib = (self.bits[bit >> 6] >> (bit & 63)) & 0xf;
            out.push(char::from_digit(nib as u32, 16).expect("nibble"));
        }
        out
    }

    /// Parses [`MlsSignature::to_hex`] output and checks maximal linkedness.
    pub fn from_hex(n: usize, hex: &str) -> Result<MlsSignature> {
        if n == 0 || n > crate::group::MAX_PIPELINE_ORDER {
            return Err(Error::InvalidArgument(format!("bad width {n}")));
        }
        let pairs = 1usize << (n - 1);
        let digits = pairs.div_ceil(4);
        if hex.len() != digits {
            return Err(Error::Parse { pos: 0, msg: format!("expected {digits} hex digits, got {}", hex.len()) });
        }
        let mut bits = vec![0u64; words_for(n)];
        for (i, c) in hex.chars().rev().enumerate() {
            let nib = c
                .to_digit(16)
                .ok_or_else(|| Error::Parse { pos: digits - 1 - i, msg: format!("bad hex digit {c:?}") })?
                as u64;
            let bit = i * 4;
            if bit + 4 > pairs && nib >> (pairs - bit).min(4) != 0 {
                return Err(Error::Parse { pos: digits - 1 - i, msg: "bits beyond the pair count".into() });
            }
            bits[bit >> 6] |= nib << (bit & 63);
        }
        let s = MlsSignature { n: n as u8, bits };
        if !s.to_family().is_maximal_linked() {
            return Err(Error::InvalidArgument(format!("{hex} is not a maximal linked system")));
        }
        Ok(s)
    }

    /// The sets of the system that are minimal under inclusion.
    pub fn minimal_members(&self) -> Vec<SubsetMask> {
        let n = self.n();
        (0..1u64 << n)
            .map(SubsetMask)
            .filter(|&a| self.contains(a) && a.iter().all(|i| !self.contains(SubsetMask(a.0 & !(1 << i)))))
            .collect()
    }
}

pub(crate) fn words_for(n: usize) -> usize {
    (1usize << (n - 1)).div_ceil(64)
}

/// `A o B = {S : Phi_B(S) in A}` evaluated on pair representatives.
pub fn circ(ps: &PowerSet, a: &MlsSignature, b: &MlsSignature) -> MlsSignature {
    let phi_b = super::phi::phi_reps(ps, b);
    circ_with(a, &phi_b)
}

/// `A o B` given `Phi_B` on the pair representatives.
pub(crate) fn circ_with(a: &MlsSignature, phi_b: &[SubsetMask]) -> MlsSignature {
    let n = a.n();
    let mut bits = vec![0u64; words_for(n)];
    for (r, &s) in phi_b.iter().enumerate() {
        if a.contains(s) {
            bits[r >> 6] |= 1 << (r & 63);
        }
    }
    MlsSignature::from_words(n, bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hex_round_trip_and_width() {
        let s = MlsSignature::principal(3, 1);
        // reps 0..4 = {}, {0}, {1}, {0,1}: contains 1 for {1}, {0,1}
        assert_eq!(s.to_hex(), "c");
        assert_eq!(MlsSignature::from_hex(3, "c").unwrap(), s);
        assert!(MlsSignature::from_hex(3, "1").is_err());
        assert_eq!(MlsSignature::principal(1, 0).to_hex(), "0");
        assert_eq!(MlsSignature::principal(6, 0).to_hex().len(), 8);
    }

    #[test]
    fn self_duality() {
        let s = MlsSignature::principal(4, 2);
        for a in 1..15u64 {
            let a = SubsetMask(a);
            assert_ne!(s.contains(a), s.contains(a.complement(4)));
        }
        assert!(s.contains(SubsetMask::full(4)));
        assert!(!s.contains(SubsetMask::EMPTY));
    }
}
