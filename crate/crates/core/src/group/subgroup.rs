use super::FiniteGroup;
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use std::collections::HashSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub members: SubsetMask,
    pub normal: bool,
    pub index: usize,
}

impl Subgroup {
    pub fn of(g: &FiniteGroup, members: SubsetMask) -> Subgroup {
        Subgroup { members, normal: g.is_normal(members), index: g.order() / members.len() }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }
}

/// Every subgroup of `g`, sorted by order then mask.
///
/// Subgroups are grown from the cyclic ones by repeatedly joining a cyclic
/// subgroup, which reaches every subgroup since each is generated by its
/// cyclic subgroups.
pub fn all_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>> {
    g.require_mask_width("subgroup enumeration")?;
    let mut cyclics: Vec<SubsetMask> = (0..g.order()).map(|a| g.generated(SubsetMask::singleton(a))).collect();
    cyclics.sort();
    cyclics.dedup();
    let mut seen: HashSet<SubsetMask> = cyclics.iter().copied().collect();
    let mut work = cyclics.clone();
    while let Some(h) = work.pop() {
        for &c in &cyclics {
            if c.is_subset(h) {
                continue;
            }
            let j = g.generated(h.union(c));
            if seen.insert(j) {
                work.push(j);
            }
        }
    }
    let mut out: Vec<Subgroup> = seen.into_iter().map(|m| Subgroup::of(g, m)).collect();
    out.sort_by_key(|s| (s.order(), s.members));
    Ok(out)
}

/// A homomorphism given by the image of every source element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub images: Vec<usize>,
    pub target_order: usize,
}

impl GroupHom {
    pub fn is_homomorphism(&self, source: &FiniteGroup, target: &FiniteGroup) -> bool {
        let n = source.order();
        self.images.len() == n
            && self.images[0] == 0
            && (0..n)
                .all(|a| (0..n).all(|b| self.images[source.mul(a, b)] == target.mul(self.images[a], self.images[b])))
    }

    pub fn kernel(&self) -> SubsetMask {
        self.images.iter().enumerate().filter(|(_, &v)| v == 0).map(|(i, _)| i).collect()
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target_order];
        for &v in &self.images {
            hit[v] = true;
        }
        hit.iter().all(|&b| b)
    }
}

/// `g / n` on cosets numbered by smallest element, with the projection.
pub fn quotient(g: &FiniteGroup, n: SubsetMask) -> Result<(FiniteGroup, GroupHom)> {
    g.require_mask_width("quotient")?;
    if !g.is_subgroup(n) {
        return Err(Error::InvalidArgument(format!("{n} is not a subgroup")));
    }
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for y in g.shift(x, n).iter() {
            coset_of[y] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let names = reps.iter().map(|&r| g.name(r).to_string()).collect();
    let q =
        FiniteGroup::from_fn(format!("{}/{}", g.label(), n.len()), m, names, |i, j| coset_of[g.mul(reps[i], reps[j])])?;
    Ok((q, GroupHom { images: coset_of, target_order: m }))
}

/// `big / normal` for a subgroup `big` of `g` and a subgroup `normal` of
/// `big` normal in it; cosets are numbered by smallest element.
pub fn subquotient(g: &FiniteGroup, big: SubsetMask, normal: SubsetMask) -> Result<FiniteGroup> {
    g.require_mask_width("subquotient")?;
    if !g.is_subgroup(big) || !g.is_subgroup(normal) || !normal.is_subset(big) {
        return Err(Error::InvalidArgument(format!("{normal} is not a subgroup of {big}")));
    }
    if big.iter().any(|x| g.conj_mask(x, normal) != normal) {
        return Err(Error::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in big.iter() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for y in g.shift(x, normal).iter() {
            coset_of[y] = reps.len();
        }
        reps.push(x);
    }
    let names = reps.iter().map(|&r| g.name(r).to_string()).collect();
    FiniteGroup::from_fn(format!("{}/{}", big.len(), normal.len()), reps.len(), names, |i, j| {
        coset_of[g.mul(reps[i], reps[j])]
    })
}

/// The largest normal subgroup of odd order, as the intersection of `KK`
/// over all maximal 2-cogroups `K`; cross-checked against
/// [`odd_subgroup_direct`].
pub fn odd_subgroup(g: &FiniteGroup) -> Result<Subgroup> {
    let maximal = crate::twin::maximal_2cogroups(g)?;
    let mut odd = g.full_mask();
    for k in &maximal {
        odd = odd.intersection(k.kk);
    }
    let direct = odd_subgroup_direct(g)?;
    if direct.members != odd {
        return Err(Error::Violation(format!(
            "odd part {} from cogroups differs from direct search {}",
            odd, direct.members
        )));
    }
    Ok(direct)
}

/// The join of all normal subgroups of odd order.
pub fn odd_subgroup_direct(g: &FiniteGroup) -> Result<Subgroup> {
    let mut join = SubsetMask::singleton(0);
    for s in all_subgroups(g)? {
        if s.normal && s.order() % 2 == 1 {
            join = join.union(s.members);
        }
    }
    Ok(Subgroup::of(g, g.generated(join)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, generalized_quaternion, isomorphic};

    #[test]
    fn counts_for_small_groups() {
        assert_eq!(all_subgroups(&cyclic(4).unwrap()).unwrap().len(), 3);
        let q = all_subgroups(&generalized_quaternion(8).unwrap()).unwrap();
        assert_eq!(q.len(), 6);
        assert!(q.iter().all(|s| s.normal));
        assert_eq!(all_subgroups(&cyclic(1).unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn quotient_projection() {
        let g = cyclic(4).unwrap();
        let (q, p) = quotient(&g, SubsetMask::from_elements([0, 2])).unwrap();
        assert!(isomorphic(&q, &cyclic(2).unwrap()));
        assert!(p.is_homomorphism(&g, &q));
        assert_eq!(p.kernel(), SubsetMask::from_elements([0, 2]));
        let (t, _) = quotient(&g, g.full_mask()).unwrap();
        assert_eq!(t.order(), 1);
    }

    #[test]
    fn non_normal_rejected() {
        let s3 = crate::group::dihedral(6).unwrap();
        // {e, b}
        assert_eq!(quotient(&s3, SubsetMask::from_elements([0, 3])).unwrap_err(), Error::NotNormal);
    }
}
