use super::FiniteGroup;
use std::collections::BTreeMap;

/// Isomorphism invariants compared before any search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFingerprint {
    pub order: usize,
    pub abelian: bool,
    pub order_histogram: BTreeMap<usize, usize>,
    pub center_order: usize,
    pub derived_order: usize,
}

pub fn fingerprint(g: &FiniteGroup) -> GroupFingerprint {
    GroupFingerprint {
        order: g.order(),
        abelian: g.is_abelian(),
        order_histogram: g.order_histogram(),
        center_order: g.center().len(),
        derived_order: g.derived_order(),
    }
}

/// Finite abelian groups are determined by their element-order census, so
/// only the non-abelian case needs a search.
pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    let (fg, fh) = (fingerprint(g), fingerprint(h));
    if fg != fh {
        return false;
    }
    fg.abelian || search(g, h).is_some()
}

/// An explicit isomorphism `g -> h` as an image array, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if fingerprint(g) != fingerprint(h) {
        return None;
    }
    search(g, h)
}

fn local_invariant(g: &FiniteGroup, a: usize) -> (usize, usize) {
    let centralizer = (0..g.order()).filter(|&b| g.mul(a, b) == g.mul(b, a)).count();
    (g.element_order(a), centralizer)
}

fn search(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    let gens = g.generating_set();
    let inv_h: Vec<(usize, usize)> = (0..h.order()).map(|b| local_invariant(h, b)).collect();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&a| {
            let want = local_invariant(g, a);
            (0..h.order()).filter(|&b| inv_h[b] == want).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    descend(g, h, &gens, &candidates, &mut images)
}

fn descend(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let t = images.len();
    if t == gens.len() {
        let map = extend(g, h, gens, images)?;
        return map.into_iter().collect();
    }
    for &c in &candidates[t] {
        images.push(c);
        if extend(g, h, &gens[..=t], images).is_some() {
            if let Some(found) = descend(g, h, gens, candidates, images) {
                return Some(found);
            }
        }
        images.pop();
    }
    None
}

/// Extends generator images over the generated subgroup, failing on any
/// relation or injectivity conflict.
fn extend(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; g.order()];
    let mut used = vec![false; h.order()];
    map[0] = Some(0);
    used[0] = true;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let a = queue[k];
        k += 1;
        let fa = map[a].expect("queued elements are mapped");
        for (&x, &fx) in gens.iter().zip(imgs) {
            let b = g.mul(a, x);
            let fb = h.mul(fa, fx);
            match map[b] {
                Some(v) if v != fb => return None,
                Some(_) => {}
                None => {
                    if used[fb] {
                        return None;
                    }
                    used[fb] = true;
                    map[b] = Some(fb);
                    queue.push(b);
                }
            }
        }
    }
    Some(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral, direct_product, generalized_quaternion};

    fn is_hom(g: &FiniteGroup, h: &FiniteGroup, f: &[usize]) -> bool {
        (0..g.order()).all(|a| (0..g.order()).all(|b| f[g.mul(a, b)] == h.mul(f[a], f[b])))
    }

    #[test]
    fn q8_and_d8_differ() {
        let q = generalized_quaternion(8).unwrap();
        let d = dihedral(8).unwrap();
        assert!(!isomorphic(&q, &d));
        assert!(find_isomorphism(&q, &q).is_some());
    }

    #[test]
    fn klein_forms_agree() {
        let a = dihedral(4).unwrap();
        let b = direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(is_hom(&a, &b, &f));
    }

    #[test]
    fn c6_is_c2_times_c3() {
        let a = cyclic(6).unwrap();
        let b = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap();
        let f = find_isomorphism(&a, &b).unwrap();
        assert!(is_hom(&a, &b, &f));
        assert!(!isomorphic(&a, &dihedral(6).unwrap()));
    }
}
