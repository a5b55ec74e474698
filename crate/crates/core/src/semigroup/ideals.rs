use super::FiniteSemigroup;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use std::collections::BTreeSet;

/// All `e` with `ee = e`. A finite semigroup always has one.
pub fn idempotents(s: &FiniteSemigroup) -> Result<Vec<u32>> {
    let e: Vec<u32> = (0..s.size() as u32).filter(|&x| s.mul(x, x) == x).collect();
    if e.is_empty() {
        return Err(Error::Violation("finite semigroup without idempotents".into()));
    }
    Ok(e)
}

/// `Sx`, sorted.
pub fn left_ideal(s: &FiniteSemigroup, x: u32) -> Vec<u32> {
    let mut seen = vec![false; s.size()];
    for t in 0..s.size() as u32 {
        seen[s.mul(t, x) as usize] = true;
    }
    (0..s.size() as u32).filter(|&y| seen[y as usize]).collect()
}

/// A minimal left ideal, reached by moving to any `y` in `Sx` with a smaller
/// `Sy` until none exists.
pub fn minimal_left_ideal(s: &FiniteSemigroup) -> Vec<u32> {
    let mut l = left_ideal(s, 0);
    'descend: loop {
        for &y in &l {
            let ly = left_ideal(s, y);
            if ly.len() < l.len() {
                l = ly;
                continue 'descend;
            }
        }
        // Every y in l has Sy ⊂ l of the same size, so Sy = l.
        return l;
    }
}

/// All minimal left ideals: the right translates `Lt` of one of them.
pub fn minimal_left_ideals(s: &FiniteSemigroup) -> Vec<Vec<u32>> {
    let l = minimal_left_ideal(s);
    let mut out: BTreeSet<Vec<u32>> = BTreeSet::new();
    for t in 0..s.size() as u32 {
        let mut lt: Vec<u32> = l.iter().map(|&x| s.mul(x, t)).collect();
        lt.sort_unstable();
        lt.dedup();
        out.insert(lt);
    }
    out.into_iter().collect()
}

/// `K(S)`, the union of the minimal left ideals.
pub fn minimal_ideal(s: &FiniteSemigroup) -> Vec<u32> {
    let mut k: Vec<u32> = minimal_left_ideals(s).into_iter().flatten().collect();
    k.sort_unstable();
    k
}

fn two_sided(s: &FiniteSemigroup, x: u32) -> Vec<u32> {
    let mut seen = vec![false; s.size()];
    for a in 0..s.size() as u32 {
        let ax = s.mul(a, x);
        for b in 0..s.size() as u32 {
            seen[s.mul(ax, b) as usize] = true;
        }
    }
    (0..s.size() as u32).filter(|&y| seen[y as usize]).collect()
}

/// `K(S)` by descending through the ideals `SxS`; quadratic per step, meant
/// for checking [`minimal_ideal`] on small semigroups.
pub fn minimal_ideal_by_two_sided_descent(s: &FiniteSemigroup) -> Vec<u32> {
    let mut j = two_sided(s, 0);
    'descend: loop {
        for &y in &j {
            let jy = two_sided(s, y);
            if jy.len() < j.len() {
                j = jy;
                continue 'descend;
            }
        }
        return j;
    }
}

/// The group of units of `eSe`, with `e` as element 0 of the returned group
/// and the semigroup elements listed in that numbering.
pub fn maximal_subgroup(s: &FiniteSemigroup, e: u32) -> Result<(FiniteGroup, Vec<u32>)> {
    if s.mul(e, e) != e {
        return Err(Error::NotIdempotent(e as usize));
    }
    let mut ese = BTreeSet::new();
    for t in 0..s.size() as u32 {
        ese.insert(s.mul(s.mul(e, t), e));
    }
    let ese: Vec<u32> = ese.into_iter().collect();
    let mut units = vec![e];
    units.extend(ese.iter().copied().filter(|&x| x != e && ese.iter().any(|&y| s.mul(x, y) == e && s.mul(y, x) == e)));
    let n = units.len();
    let pos = |v: u32| units.iter().position(|&u| u == v);
    let mut flat = Vec::with_capacity(n * n);
    for &a in &units {
        for &b in &units {
            flat.push(pos(s.mul(a, b)).ok_or_else(|| Error::Violation("units of eSe not closed".into()))?);
        }
    }
    let names = units.iter().map(|u| u.to_string()).collect();
    let (g, perm) = FiniteGroup::from_table("H_e", n, &flat, Some(names))?;
    debug_assert_eq!(perm[0], 0);
    Ok((g, units))
}

/// `L = E(L) · H_e` for a minimal left ideal `L`.
#[derive(Debug)]
pub struct ReesDecomposition {
    pub left_zero_count: usize,
    pub idempotents: Vec<u32>,
    pub group: FiniteGroup,
    /// `group_elements[i]` is the semigroup element of group index `i`.
    pub group_elements: Vec<u32>,
    /// `pairing[i][j] = idempotents[i] · group_elements[j]`, a bijection
    /// onto `L`.
    pub pairing: Vec<Vec<u32>>,
}

pub fn rees_decompose(s: &FiniteSemigroup, l: &[u32]) -> Result<ReesDecomposition> {
    let fail = |m: String| Error::Violation(format!("rees decomposition: {m}"));
    let mut sorted = l.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return Err(fail("empty ideal".into()));
    }
    for &x in &sorted {
        if left_ideal(s, x) != sorted {
            return Err(fail(format!("S·{x} differs from the ideal, so it is not a minimal left ideal")));
        }
    }
    let idem: Vec<u32> = sorted.iter().copied().filter(|&x| s.mul(x, x) == x).collect();
    if idem.is_empty() {
        return Err(fail("no idempotents".into()));
    }
    for &a in &idem {
        for &b in &idem {
            if s.mul(a, b) != a {
                return Err(fail(format!("idempotents {a}, {b} do not multiply as left zeros")));
            }
        }
    }
    let (group, group_elements) = maximal_subgroup(s, idem[0])?;
    let mut pairing = Vec::with_capacity(idem.len());
    let mut hit = BTreeSet::new();
    for &x in &idem {
        let row: Vec<u32> = group_elements.iter().map(|&h| s.mul(x, h)).collect();
        hit.extend(row.iter().copied());
        pairing.push(row);
    }
    if hit.len() != idem.len() * group_elements.len() || hit.into_iter().collect::<Vec<_>>() != sorted {
        return Err(fail("E(L) x H_e -> L is not a bijection".into()));
    }
    Ok(ReesDecomposition { left_zero_count: idem.len(), idempotents: idem, group, group_elements, pairing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn left_zero_ideals() {
        let s = FiniteSemigroup::left_zero(3);
        assert_eq!(idempotents(&s).unwrap(), vec![0, 1, 2]);
        // Sx = S for every x, so the whole semigroup is the one minimal left ideal.
        assert_eq!(minimal_left_ideals(&s), vec![vec![0, 1, 2]]);
        assert_eq!(minimal_ideal(&s), vec![0, 1, 2]);
    }

    #[test]
    fn group_is_its_own_minimal_left_ideal() {
        let g = cyclic(6).unwrap();
        let s = FiniteSemigroup::from_group(&g);
        let l = minimal_left_ideal(&s);
        assert_eq!(l.len(), 6);
        let r = rees_decompose(&s, &l).unwrap();
        assert_eq!(r.left_zero_count, 1);
        assert_eq!(r.group.order(), 6);
    }

    #[test]
    fn left_zero_times_group() {
        let g = cyclic(2).unwrap();
        let s = FiniteSemigroup::left_zero_times_group(4, &g).unwrap();
        let l = minimal_left_ideal(&s);
        let r = rees_decompose(&s, &l).unwrap();
        assert_eq!((r.left_zero_count, r.group.order()), (4, 2));
        assert_eq!(minimal_ideal_by_two_sided_descent(&s), minimal_ideal(&s));
        assert!(matches!(maximal_subgroup(&s, 1), Err(Error::NotIdempotent(1))));
    }
}
