use super::{fix_operators, TwoCogroup};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MAX_PIPELINE_ORDER};
use crate::mask::SubsetMask;

/// `T_K = {A : Fix^-(A) = K}` with its orbits under `Stab(K)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinFamily {
    pub cogroup: TwoCogroup,
    /// Smallest-element-first transversal of the cosets `K± x`.
    pub transversal: Vec<usize>,
    /// Sorted by mask.
    pub sets: Vec<SubsetMask>,
    /// Orbits as index lists into `sets`, each sorted, ordered by first index.
    pub orbits: Vec<Vec<usize>>,
    /// `orbit_of[i]` is the orbit holding `sets[i]`.
    pub orbit_of: Vec<usize>,
    /// `|H(K)| = |Stab(K)| / |KK|`
    pub char_order: usize,
}

impl TwinFamily {
    pub fn index_of(&self, a: SubsetMask) -> Option<usize> {
        self.sets.binary_search(&a).ok()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }
}

/// Builds `T_K` as `KK·E ∪ K·(S \ E)` over subsets `E` of a transversal `S`
/// and checks it against a scan of all half-size subsets.
pub fn twin_sets_for(g: &FiniteGroup, k: &TwoCogroup) -> Result<TwinFamily> {
    let n = g.order();
    if n > MAX_PIPELINE_ORDER {
        return Err(Error::SizeCap { what: "twin set family", order: n, cap: MAX_PIPELINE_ORDER });
    }
    if !k.maximal {
        return Err(Error::InvalidArgument(format!("{} is not a maximal 2-cogroup", k.members)));
    }
    let mut covered = SubsetMask::EMPTY;
    let mut transversal = Vec::new();
    for x in 0..n {
        if !covered.contains(x) {
            transversal.push(x);
            covered = covered.union(g.shift_right(k.k_pm, x));
        }
    }
    let t = transversal.len();
    let mut sets: Vec<SubsetMask> = (0..1u32 << t)
        .map(|e| {
            let mut a = SubsetMask::EMPTY;
            for (i, &s) in transversal.iter().enumerate() {
                let part = if e >> i & 1 == 1 { k.kk } else { k.members };
                a = a.union(g.shift_right(part, s));
            }
            a
        })
        .collect();
    sets.sort();

    let scanned: Vec<SubsetMask> = (0..1u64 << n)
        .map(SubsetMask)
        .filter(|a| 2 * a.len() == n && fix_operators(g, *a).fix_minus == k.members)
        .collect();
    if scanned != sets {
        return Err(Error::Violation(format!(
            "transversal construction of T_K for {} gives {} sets, scan finds {}",
            k.members,
            sets.len(),
            scanned.len()
        )));
    }

    let char_order = k.stab.len() / k.kk.len();
    let mut orbit_of = vec![usize::MAX; sets.len()];
    let mut orbits = Vec::new();
    for i in 0..sets.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let mut orbit: Vec<usize> =
            k.stab.iter().map(|x| sets.binary_search(&g.shift(x, sets[i])).expect("Stab(K) preserves T_K")).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() != char_order {
            return Err(Error::Violation(format!(
                "orbit of {} has {} sets, expected {char_order}",
                sets[i],
                orbit.len()
            )));
        }
        for &j in &orbit {
            orbit_of[j] = orbits.len();
        }
        orbits.push(orbit);
    }
    Ok(TwinFamily { cogroup: *k, transversal, sets, orbits, orbit_of, char_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating4, generalized_quaternion};
    use crate::twin::maximal_2cogroups;

    #[test]
    fn quaternion_minus_one() {
        let g = generalized_quaternion(8).unwrap();
        let k = maximal_2cogroups(&g).unwrap().into_iter().find(|k| k.members.len() == 1).unwrap();
        let t = twin_sets_for(&g, &k).unwrap();
        assert_eq!(t.sets.len(), 16);
        assert_eq!(t.orbit_count(), 2);
    }

    #[test]
    fn a4_cogroups() {
        let g = alternating4().unwrap();
        for k in maximal_2cogroups(&g).unwrap() {
            let t = twin_sets_for(&g, &k).unwrap();
            assert_eq!(t.sets.len(), 8);
            assert_eq!(t.orbit_count(), 4);
        }
    }
}
