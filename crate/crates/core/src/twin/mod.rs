//! Twin sets, 2-cogroups and characteristic groups.
//!
//! Every finite group is torsion, so its twinic ideal is trivial and each
//! notion "modulo an ideal" below is the plain set-theoretic one.

mod cogroup;
mod tk;

pub use cogroup::{
    characteristic_group, cogroup_orbits, cogroup_realization, enumerate_2cogroups, maximal_2cogroups, q_counts,
    CharType, CogroupOrbit, TwoCogroup,
};
pub use tk::{twin_sets_for, TwinFamily};

use crate::error::Result;
use crate::group::FiniteGroup;
use crate::mask::SubsetMask;

/// `Fix(A)`, `Fix^-(A)` and their union.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FixSets {
    pub fix: SubsetMask,
    pub fix_minus: SubsetMask,
    pub fix_pm: SubsetMask,
}

pub fn fix_operators(g: &FiniteGroup, a: SubsetMask) -> FixSets {
    let comp = a.complement(g.order());
    let mut fix = SubsetMask::EMPTY;
    let mut fix_minus = SubsetMask::EMPTY;
    for x in 0..g.order() {
        let xa = g.shift(x, a);
        if xa == a {
            fix.insert(x);
        }
        if xa == comp {
            fix_minus.insert(x);
        }
    }
    FixSets { fix, fix_minus, fix_pm: fix.union(fix_minus) }
}

/// A set with `xA = X \ A` for some `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwinSet {
    pub mask: SubsetMask,
    pub fix: FixSets,
}

impl TwinSet {
    pub fn new(g: &FiniteGroup, a: SubsetMask) -> Option<TwinSet> {
        let fix = fix_operators(g, a);
        (!fix.fix_minus.is_empty()).then_some(TwinSet { mask: a, fix })
    }
}

pub fn is_twin(g: &FiniteGroup, a: SubsetMask) -> bool {
    let comp = a.complement(g.order());
    a.len() == comp.len() && (0..g.order()).any(|x| g.shift(x, a) == comp)
}

/// `xA ⊂ X \ A ⊂ yA` for some `x, y`.
pub fn is_pretwin(g: &FiniteGroup, a: SubsetMask) -> bool {
    let comp = a.complement(g.order());
    let shifts: Vec<SubsetMask> = (0..g.order()).map(|x| g.shift(x, a)).collect();
    shifts.iter().any(|xa| xa.is_subset(comp)) && shifts.iter().any(|ya| comp.is_subset(*ya))
}

/// Outcome of the twinic-triviality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwinicCheck {
    pub trivial: bool,
    /// A pair `(a, b)` with `ab` outside the semigroup generated by
    /// `b^±a^±`, when one exists.
    pub witness: Option<(usize, usize)>,
}

/// Checks that `ab` lies in the subsemigroup generated by
/// `{ba, ba^-1, b^-1a, b^-1a^-1}` for all `a, b`.
pub fn is_trivially_twinic(g: &FiniteGroup) -> Result<TwinicCheck> {
    g.require_mask_width("twinic check")?;
    for a in 0..g.order() {
        for b in 0..g.order() {
            let (ai, bi) = (g.inv(a), g.inv(b));
            let gens = [g.mul(b, a), g.mul(b, ai), g.mul(bi, a), g.mul(bi, ai)];
            let closure = semigroup_closure(g, &gens);
            if !closure.contains(g.mul(a, b)) {
                return Ok(TwinicCheck { trivial: false, witness: Some((a, b)) });
            }
        }
    }
    Ok(TwinicCheck { trivial: true, witness: None })
}

fn semigroup_closure(g: &FiniteGroup, gens: &[usize]) -> SubsetMask {
    let mut seen: SubsetMask = gens.iter().copied().collect();
    let mut frontier: Vec<usize> = seen.iter().collect();
    // Each round multiplies the newest elements by the generators; the
    // visited set grows every round or the loop stops, so at most |X| rounds.
    for _ in 0..g.order() {
        let mut next = Vec::new();
        for &s in &frontier {
            for &t in gens {
                let p = g.mul(s, t);
                if !seen.contains(p) {
                    seen.insert(p);
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    seen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, generalized_quaternion};

    #[test]
    fn fix_sets_on_c4() {
        let g = cyclic(4).unwrap();
        let f = fix_operators(&g, SubsetMask::from_elements([0, 1]));
        assert_eq!(f.fix, SubsetMask::from_elements([0]));
        assert_eq!(f.fix_minus, SubsetMask::from_elements([2]));
        assert_eq!(f.fix_pm, SubsetMask::from_elements([0, 2]));
        let e = fix_operators(&g, SubsetMask::EMPTY);
        assert_eq!(e.fix, g.full_mask());
        assert!(e.fix_minus.is_empty());
    }

    #[test]
    fn quaternion_cyclic_subgroup() {
        let q = generalized_quaternion(8).unwrap();
        // <i> = {1, i, -1, -i}
        let i = SubsetMask::from_elements([0, 1, 2, 3]);
        let f = fix_operators(&q, i);
        assert_eq!(f.fix, i);
        assert_eq!(f.fix_minus, i.complement(8));
    }

    #[test]
    fn c2_twinic_with_identity_only() {
        let g = cyclic(2).unwrap();
        assert!(is_trivially_twinic(&g).unwrap().trivial);
    }
}
