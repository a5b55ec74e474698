//! The function representation `Phi_A(S) = {x : x^-1 S in A}`.

use super::{FamilyOfSets, MlsSignature, PowerSet};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;

#[inline]
fn phi_by(ps: &PowerSet, member: impl Fn(SubsetMask) -> bool, s: SubsetMask) -> SubsetMask {
    let g = ps.group();
    let mut out = SubsetMask::EMPTY;
    for x in 0..ps.n() {
        if member(ps.shift(g.inv(x), s)) {
            out.insert(x);
        }
    }
    out
}

pub fn phi(ps: &PowerSet, a: &MlsSignature, s: SubsetMask) -> SubsetMask {
    phi_by(ps, |t| a.contains(t), s)
}

pub fn phi_family(ps: &PowerSet, a: &FamilyOfSets, s: SubsetMask) -> SubsetMask {
    phi_by(ps, |t| a.contains(t), s)
}

/// `Phi_A` on every subset, indexed by mask.
pub fn phi_map(ps: &PowerSet, a: &MlsSignature) -> Vec<SubsetMask> {
    ps.all_subsets().map(|s| phi(ps, a, s)).collect()
}

/// `Phi_A` on the pair representatives; the rest follows by symmetry.
pub(crate) fn phi_reps(ps: &PowerSet, a: &MlsSignature) -> Vec<SubsetMask> {
    (0..ps.pairs() as u64).map(|r| phi(ps, a, SubsetMask(r))).collect()
}

/// `{A : e in f(A)}` for an equivariant `f` given on every subset.
pub fn phi_inverse(ps: &PowerSet, f: &[SubsetMask]) -> Result<FamilyOfSets> {
    if f.len() != ps.size() {
        return Err(Error::InvalidArgument(format!("map has {} entries, expected {}", f.len(), ps.size())));
    }
    for s in ps.all_subsets() {
        for x in 0..ps.n() {
            if f[ps.shift(x, s).0 as usize] != ps.shift(x, f[s.0 as usize]) {
                return Err(Error::NotEquivariant { x, set: s.to_string() });
            }
        }
    }
    Ok(FamilyOfSets::from_sets(ps.n(), ps.all_subsets().filter(|s| f[s.0 as usize].contains(0))))
}

/// `A o B = {S : {x : x^-1 S in B} in A}` for arbitrary families.
pub fn circ_family(ps: &PowerSet, a: &FamilyOfSets, b: &FamilyOfSets) -> FamilyOfSets {
    FamilyOfSets::from_sets(ps.n(), ps.all_subsets().filter(|&s| a.contains(phi_family(ps, b, s))))
}

pub fn is_monotone_map(ps: &PowerSet, f: &[SubsetMask]) -> bool {
    ps.all_subsets()
        .all(|s| (0..ps.n()).filter(|&i| !s.contains(i)).all(|i| f[s.0 as usize].is_subset(f[(s.0 | 1 << i) as usize])))
}

pub fn is_symmetric_map(ps: &PowerSet, f: &[SubsetMask]) -> bool {
    ps.all_subsets().all(|s| f[ps.complement(s).0 as usize] == ps.complement(f[s.0 as usize]))
}
