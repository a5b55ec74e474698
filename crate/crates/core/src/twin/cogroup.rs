use super::fix_operators;
use crate::error::{Error, Result};
use crate::group::{all_subgroups, generalized_quaternion, isomorphic, subquotient, FiniteGroup, MAX_PIPELINE_ORDER};
use crate::mask::SubsetMask;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

/// A set `K = H± \ H` with `H` of index 2 in the subgroup `H±`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TwoCogroup {
    pub members: SubsetMask,
    /// `KK`, which equals `H`.
    pub kk: SubsetMask,
    /// `K ∪ KK`
    pub k_pm: SubsetMask,
    /// `{x : xKx^-1 = K}`
    pub stab: SubsetMask,
    /// `|X| / |K|`
    pub index: usize,
    pub maximal: bool,
}

impl TwoCogroup {
    fn from_pair(g: &FiniteGroup, h: SubsetMask, h_pm: SubsetMask) -> TwoCogroup {
        let k = h_pm.difference(h);
        let stab = (0..g.order()).filter(|&x| g.conj_mask(x, k) == k).collect();
        TwoCogroup { members: k, kk: h, k_pm: h_pm, stab, index: g.order() / k.len(), maximal: false }
    }

    /// `|X / K±|`
    pub fn index_pm(&self, g: &FiniteGroup) -> usize {
        g.order() / self.k_pm.len()
    }

    /// Checks the defining identities `xK = Kx = KK` for `x` in `K`, that
    /// `KK` misses `K`, and that `KK` is normal in `Stab(K)`.
    pub fn check(&self, g: &FiniteGroup) -> Result<()> {
        let k = self.members;
        let kk = g.product_sets(k, k);
        if kk != self.kk || kk.intersects(k) || !g.is_subgroup(kk) {
            return Err(Error::Violation(format!("{k} is not a 2-cogroup")));
        }
        for x in k.iter() {
            if g.shift(x, k) != kk || g.shift_right(k, x) != kk {
                return Err(Error::Violation(format!("xK != KK for x = {x} in {k}")));
            }
        }
        if self.stab.iter().any(|x| g.conj_mask(x, kk) != kk) {
            return Err(Error::Violation(format!("KK not normal in Stab({k})")));
        }
        Ok(())
    }
}

/// All 2-cogroups, sorted by mask.
pub fn enumerate_2cogroups(g: &FiniteGroup) -> Result<Vec<TwoCogroup>> {
    let subs = all_subgroups(g)?;
    let mut out = Vec::new();
    for p in &subs {
        for h in &subs {
            if 2 * h.order() == p.order() && h.members.is_subset(p.members) {
                out.push(TwoCogroup::from_pair(g, h.members, p.members));
            }
        }
    }
    out.sort_by_key(|k| k.members);
    let masks: Vec<SubsetMask> = out.iter().map(|k| k.members).collect();
    for k in &mut out {
        k.maximal = !masks.iter().any(|&m| m != k.members && k.members.is_subset(m));
    }
    Ok(out)
}

pub fn maximal_2cogroups(g: &FiniteGroup) -> Result<Vec<TwoCogroup>> {
    Ok(enumerate_2cogroups(g)?.into_iter().filter(|k| k.maximal).collect())
}

/// Shape of a characteristic group: `C_{2^k}` or `Q_{2^k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CharType {
    Cyclic(u32),
    Quaternion(u32),
}

impl CharType {
    pub fn order(self) -> usize {
        match self {
            CharType::Cyclic(k) | CharType::Quaternion(k) => 1 << k,
        }
    }
}

impl fmt::Display for CharType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharType::Cyclic(k) => write!(f, "C{}", 1u64 << k),
            CharType::Quaternion(k) => write!(f, "Q{}", 1u64 << k),
        }
    }
}

impl FromStr for CharType {
    type Err = Error;

    fn from_str(s: &str) -> Result<CharType> {
        let bad = || Error::Parse { pos: 0, msg: format!("not a characteristic type: {s:?}") };
        if s.len() < 2 {
            return Err(bad());
        }
        let (fam, num) = s.split_at(1);
        let n: u64 = num.parse().map_err(|_| bad())?;
        if !n.is_power_of_two() {
            return Err(bad());
        }
        let k = n.trailing_zeros();
        match fam {
            "C" => Ok(CharType::Cyclic(k)),
            "Q" if k >= 3 => Ok(CharType::Quaternion(k)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for CharType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CharType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `Stab(K)/KK` with its classification.
///
/// Anything other than a cyclic or generalized quaternion 2-group is
/// reported as a violation: it cannot happen for a maximal `K`.
pub fn characteristic_group(g: &FiniteGroup, k: &TwoCogroup) -> Result<(FiniteGroup, CharType)> {
    let h = subquotient(g, k.stab, k.kk)?;
    let t = classify_characteristic(&h)
        .ok_or_else(|| Error::Violation(format!("characteristic group of {} is not C or Q", k.members)))?;
    Ok((h.with_label(t.to_string()), t))
}

fn classify_characteristic(h: &FiniteGroup) -> Option<CharType> {
    let n = h.order();
    if !n.is_power_of_two() || n < 2 || h.involutions().len() != 1 {
        return None;
    }
    let k = n.trailing_zeros();
    if (0..n).any(|a| h.element_order(a) == n) {
        return Some(CharType::Cyclic(k));
    }
    let q = generalized_quaternion(n).ok()?;
    isomorphic(h, &q).then_some(CharType::Quaternion(k))
}

/// A conjugacy class `[K]` of maximal 2-cogroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CogroupOrbit {
    /// The member with the smallest mask.
    pub representative: TwoCogroup,
    pub members: Vec<SubsetMask>,
    pub characteristic: CharType,
}

/// Conjugation orbits of maximal 2-cogroups, ordered by representative.
pub fn cogroup_orbits(g: &FiniteGroup) -> Result<Vec<CogroupOrbit>> {
    let maximal = maximal_2cogroups(g)?;
    let mut done: HashSet<SubsetMask> = HashSet::new();
    let mut out = Vec::new();
    for k in &maximal {
        if done.contains(&k.members) {
            continue;
        }
        let mut members: Vec<SubsetMask> = (0..g.order()).map(|x| g.conj_mask(x, k.members)).collect();
        members.sort();
        members.dedup();
        done.extend(members.iter().copied());
        // `maximal` is sorted, so the first member met is the smallest.
        debug_assert_eq!(members[0], k.members);
        let (_, characteristic) = characteristic_group(g, k)?;
        out.push(CogroupOrbit { representative: *k, members, characteristic });
    }
    Ok(out)
}

/// Number of orbits with each characteristic type.
pub fn q_counts(g: &FiniteGroup) -> Result<BTreeMap<CharType, usize>> {
    let mut q = BTreeMap::new();
    for o in cogroup_orbits(g)? {
        *q.entry(o.characteristic).or_insert(0) += 1;
    }
    Ok(q)
}

/// Every 2-cogroup with whether some twin set has it as `Fix^-`.
pub fn cogroup_realization(g: &FiniteGroup) -> Result<Vec<(TwoCogroup, bool)>> {
    let n = g.order();
    if n > MAX_PIPELINE_ORDER {
        return Err(Error::SizeCap { what: "twin set scan", order: n, cap: MAX_PIPELINE_ORDER });
    }
    let mut realized = HashSet::new();
    if n.is_multiple_of(2) {
        for a in 0..1u64 << n {
            let a = SubsetMask(a);
            if a.len() * 2 == n {
                let f = fix_operators(g, a);
                if !f.fix_minus.is_empty() {
                    realized.insert(f.fix_minus);
                }
            }
        }
    }
    Ok(enumerate_2cogroups(g)?
        .into_iter()
        .map(|k| {
            let r = realized.contains(&k.members);
            (k, r)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating4, cyclic, generalized_quaternion};

    #[test]
    fn c4_cogroups() {
        let g = cyclic(4).unwrap();
        let all = enumerate_2cogroups(&g).unwrap();
        let masks: Vec<SubsetMask> = all.iter().map(|k| k.members).collect();
        assert_eq!(masks, vec![SubsetMask::from_elements([2]), SubsetMask::from_elements([1, 3])]);
        assert!(all.iter().all(|k| k.maximal));
        for k in &all {
            k.check(&g).unwrap();
        }
        let (h, t) = characteristic_group(&g, &all[0]).unwrap();
        assert_eq!(h.order(), 4);
        assert_eq!(t, CharType::Cyclic(2));
    }

    #[test]
    fn quaternion_cogroups() {
        let g = generalized_quaternion(8).unwrap();
        let max = maximal_2cogroups(&g).unwrap();
        assert_eq!(max.len(), 4);
        let minus_one = max.iter().find(|k| k.members == SubsetMask::singleton(2)).unwrap();
        assert_eq!(characteristic_group(&g, minus_one).unwrap().1, CharType::Quaternion(3));
        let q = q_counts(&g).unwrap();
        assert_eq!(q.get(&CharType::Quaternion(3)), Some(&1));
        assert_eq!(q.get(&CharType::Cyclic(1)), Some(&3));
    }

    #[test]
    fn a4_has_one_orbit_of_three() {
        let g = alternating4().unwrap();
        let max = maximal_2cogroups(&g).unwrap();
        assert_eq!(max.len(), 3);
        assert!(max.iter().all(|k| k.members.len() == 2));
        let orbits = cogroup_orbits(&g).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members.len(), 3);
        assert_eq!(orbits[0].characteristic, CharType::Cyclic(1));
    }

    #[test]
    fn odd_groups_have_none() {
        assert!(enumerate_2cogroups(&cyclic(9).unwrap()).unwrap().is_empty());
        assert!(q_counts(&cyclic(1).unwrap()).unwrap().is_empty());
    }

    #[test]
    fn char_type_text() {
        assert_eq!(CharType::Quaternion(4).to_string(), "Q16");
        assert_eq!("C8".parse::<CharType>().unwrap(), CharType::Cyclic(3));
        assert!("Q4".parse::<CharType>().is_err());
        assert!("C6".parse::<CharType>().is_err());
    }
}
