//! Twin sets with maximal 2-cogroup, the projection idempotent built from
//! them, the two-condition membership test for the minimal ideal, and an
//! explicit construction of one minimal left ideal of `λ(X)`.

use super::types::{classify_group, IdealType};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::semigroup::{rees_decompose, FiniteSemigroup, ReesDecomposition};
use crate::setfam::{circ, circ_with, phi_inverse, phi_map, phi_reps, random_mls, MlsSignature, PowerSet};
use crate::twin::{cogroup_orbits, twin_sets_for, CogroupOrbit};
use rand::SeedableRng;
use std::collections::{BTreeSet, HashMap};

/// Every twin set of the group with its `Fix^-`, plus the conjugacy classes
/// of maximal 2-cogroups.
#[derive(Clone, Debug)]
pub struct TwinCensus {
    n: usize,
    /// Indexed by mask; empty for sets that are not twin.
    fix_minus: Vec<SubsetMask>,
    pub orbits: Vec<CogroupOrbit>,
    class_of: HashMap<SubsetMask, usize>,
}

impl TwinCensus {
    pub fn new(ps: &PowerSet) -> Result<TwinCensus> {
        let n = ps.n();
        let full = ps.full();
        let mut fix_minus = vec![SubsetMask::EMPTY; ps.size()];
        if n.is_multiple_of(2) {
            for a in ps.all_subsets().filter(|a| 2 * a.len() == n) {
                let comp = full.difference(a);
                fix_minus[a.0 as usize] = (0..n).filter(|&x| ps.shift(x, a) == comp).collect();
            }
        }
        let orbits = cogroup_orbits(ps.group())?;
        let mut class_of = HashMap::new();
        for (c, o) in orbits.iter().enumerate() {
            for &k in &o.members {
                class_of.insert(k, c);
            }
        }
        Ok(TwinCensus { n, fix_minus, orbits, class_of })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fix_minus(&self, a: SubsetMask) -> SubsetMask {
        self.fix_minus[a.0 as usize]
    }

    pub fn is_twin(&self, a: SubsetMask) -> bool {
        !self.fix_minus(a).is_empty()
    }

    /// Conjugacy class of `Fix^-(A)` when `A` is twin with maximal 2-cogroup.
    pub fn class_of(&self, a: SubsetMask) -> Option<usize> {
        self.class_of.get(&self.fix_minus(a)).copied()
    }

    /// Twin sets whose 2-cogroup is maximal.
    pub fn hat(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        (0..self.fix_minus.len() as u64).map(SubsetMask).filter(|&a| self.class_of(a).is_some())
    }

    /// `T_K` by scan.
    pub fn twin_sets_with(&self, k: SubsetMask) -> Vec<SubsetMask> {
        (0..self.fix_minus.len() as u64).map(SubsetMask).filter(|&a| self.fix_minus(a) == k).collect()
    }
}

fn x_orbit(ps: &PowerSet, a: SubsetMask) -> BTreeSet<SubsetMask> {
    (0..ps.n()).map(|x| ps.shift(x, a)).collect()
}

/// An idempotent of `λ(X)` that fixes one twin set per conjugacy class of
/// maximal 2-cogroups (and its translates) and sends every other set to a
/// translate of those, to `∅`, or to `X`.
#[derive(Clone, Debug)]
pub struct ProjectionIdempotent {
    pub signature: MlsSignature,
    /// `Φ_e` on every subset.
    pub map: Vec<SubsetMask>,
    /// One fixed twin set per class, taken as the smallest set of `T_K` for
    /// the class representative `K`.
    pub selector_sets: Vec<SubsetMask>,
    /// Orbit representatives of the maximal invariant linked system, in the
    /// order they were accepted.
    pub invariant_orbits: Vec<SubsetMask>,
}

/// A maximal left-invariant linked system, built greedily over orbits of
/// subsets taken by decreasing size, then by mask. Any maximal one serves.
fn invariant_linked_system(ps: &PowerSet) -> (Vec<bool>, Vec<SubsetMask>) {
    let n = ps.n();
    let mut rep = vec![SubsetMask::EMPTY; ps.size()];
    let mut reps = Vec::new();
    for a in ps.all_subsets() {
        let r = *x_orbit(ps, a).first().expect("nonempty orbit");
        rep[a.0 as usize] = r;
        if r == a && !a.is_empty() {
            reps.push(a);
        }
    }
    reps.sort_by_key(|a| (std::cmp::Reverse(a.len()), *a));
    let mut accepted: Vec<SubsetMask> = Vec::new();
    let mut in_system = vec![false; ps.size()];
    for a in reps {
        let meets = |l: SubsetMask| (0..n).all(|x| a.intersects(ps.shift(x, l)));
        if meets(a) && accepted.iter().all(|&l| meets(l)) {
            in_system[a.0 as usize] = true;
            accepted.push(a);
        }
    }
    let member = ps.all_subsets().map(|a| in_system[rep[a.0 as usize].0 as usize]).collect();
    (member, accepted)
}

pub fn build_projection_idempotent(ps: &PowerSet, census: &TwinCensus) -> Result<ProjectionIdempotent> {
    let g = ps.group();
    let full = ps.full();
    let (in_system, invariant_orbits) = invariant_linked_system(ps);

    let mut selector_sets = Vec::new();
    let mut tilde = vec![false; ps.size()];
    for o in &census.orbits {
        let fam = twin_sets_for(g, &o.representative)?;
        let a = fam.sets[0];
        selector_sets.push(a);
        for b in x_orbit(ps, a) {
            tilde[b.0 as usize] = true;
        }
    }
    let tilde_list: Vec<SubsetMask> = ps.all_subsets().filter(|a| tilde[a.0 as usize]).collect();

    // Equivariant retraction of all twin sets onto the fixed family, never
    // shrinking Fix^-.
    let mut onto: Vec<Option<SubsetMask>> = vec![None; ps.size()];
    for a in ps.all_subsets().filter(|&a| census.is_twin(a)) {
        if onto[a.0 as usize].is_some() {
            continue;
        }
        let b = if tilde[a.0 as usize] {
            a
        } else {
            let k = census.fix_minus(a);
            *tilde_list
                .iter()
                .find(|&&b| k.is_subset(census.fix_minus(b)))
                .ok_or_else(|| Error::Violation(format!("no fixed twin set absorbs Fix^-({a}) = {k}")))?
        };
        for x in 0..ps.n() {
            let (xa, xb) = (ps.shift(x, a), ps.shift(x, b));
            match onto[xa.0 as usize] {
                Some(prev) if prev != xb => {
                    return Err(Error::Violation(format!("retraction of the orbit of {a} is not well defined")))
                }
                _ => onto[xa.0 as usize] = Some(xb),
            }
        }
    }

    let map: Vec<SubsetMask> = ps
        .all_subsets()
        .map(|a| match onto[a.0 as usize] {
            Some(b) => b,
            None if in_system[a.0 as usize] => full,
            None => SubsetMask::EMPTY,
        })
        .collect();
    let family = phi_inverse(ps, &map)?;
    let signature = MlsSignature::from_family(&family)
        .map_err(|_| Error::Violation("projection map is not monotone and symmetric".into()))?;
    if phi_map(ps, &signature) != map {
        return Err(Error::Violation("projection idempotent does not round-trip through Phi".into()));
    }
    if circ(ps, &signature, &signature) != signature {
        return Err(Error::NotIdempotent(0));
    }
    Ok(ProjectionIdempotent { signature, map, selector_sets, invariant_orbits })
}

/// The two conditions of the membership test, evaluated separately.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    /// `Φ_L` maps the twin sets with maximal 2-cogroup onto an invariant
    /// family meeting each class in exactly one orbit.
    pub minimal_covering: bool,
    /// Every value of `Φ_L` is `∅`, `X` or a value on those twin sets.
    pub image_condition: bool,
}

impl MembershipVerdict {
    pub fn member(self) -> bool {
        self.minimal_covering && self.image_condition
    }
}

pub fn min_ideal_membership(ps: &PowerSet, census: &TwinCensus, l: &MlsSignature) -> MembershipVerdict {
    let f = phi_map(ps, l);
    let image: BTreeSet<SubsetMask> = census.hat().map(|a| f[a.0 as usize]).collect();
    let mut minimal_covering = image.iter().all(|&b| census.class_of(b).is_some());
    if minimal_covering {
        for c in 0..census.orbits.len() {
            let part: BTreeSet<SubsetMask> = image.iter().copied().filter(|&b| census.class_of(b) == Some(c)).collect();
            minimal_covering &= part.first().is_some_and(|&b| x_orbit(ps, b) == part);
        }
    }
    let full = ps.full();
    let image_condition = f.iter().all(|b| b.is_empty() || *b == full || image.contains(b));
    MembershipVerdict { minimal_covering, image_condition }
}

/// One minimal left ideal `λ(X)∘e`, listed element by element.
#[derive(Debug)]
pub struct CertifiedIdeal {
    /// Sorted.
    pub elements: Vec<MlsSignature>,
    /// `elements[i] ∘ elements[j]`
    pub semigroup: FiniteSemigroup,
    pub rees: ReesDecomposition,
    /// `None` when the maximal subgroup is not a product of cyclic and
    /// generalized quaternion groups.
    pub ideal_type: Option<IdealType>,
    /// Random `A ∘ e` found among the elements.
    pub sampled_products: usize,
}

/// Bound on `|L|^2 · 2^(n-1)`, the membership tests spent on the table.
pub const CERTIFICATE_WORK_CAP: u128 = 500_000_000;
pub const CERTIFICATE_SAMPLES: usize = 32;

/// Lists `λ(X)∘e` and proves it is a minimal left ideal.
///
/// `Φ_{A∘e} = Φ_A ∘ Φ_e` only depends on `Φ_A` over the image of `Φ_e`,
/// which is `∅`, `X` and the fixed twin family. `Φ_A` is equivariant and
/// symmetric, so it keeps `Fix^-` of a twin set, and a maximal 2-cogroup
/// cannot grow: `Φ_A(B)` lies in `T_{Fix^-(B)}`. One value per orbit of the
/// fixed family then determines the element, which bounds `|L|` by the
/// product of the `|T_K|`. Each such choice is built, checked to be a
/// maximal linked system with `f∘e = f`, and the resulting table is checked
/// to satisfy `L∘x = L` for every `x` in `L`.
pub fn certify_min_left_ideal(
    ps: &PowerSet,
    census: &TwinCensus,
    e: &ProjectionIdempotent,
    seed: u64,
) -> Result<CertifiedIdeal> {
    let n = ps.n();
    let full = ps.full();
    let image: BTreeSet<SubsetMask> = e.map.iter().copied().filter(|b| !b.is_empty() && *b != full).collect();
    for &b in &image {
        if census.class_of(b).is_none() {
            return Err(Error::Violation(format!("Phi_e takes the value {b}, not a twin set with maximal 2-cogroup")));
        }
    }
    let mut orbit_reps = Vec::new();
    let mut seen = BTreeSet::new();
    for &b in &image {
        if seen.insert(b) {
            let orbit = x_orbit(ps, b);
            if !orbit.is_subset(&image) {
                return Err(Error::Violation("image of Phi_e is not invariant".into()));
            }
            seen.extend(orbit);
            orbit_reps.push(b);
        }
    }
    let candidates: Vec<Vec<SubsetMask>> =
        orbit_reps.iter().map(|&a| census.twin_sets_with(census.fix_minus(a))).collect();
    let bound: u128 = candidates.iter().map(|c| c.len() as u128).product();
    let work = bound.saturating_mul(bound).saturating_mul(ps.pairs() as u128);
    if work > CERTIFICATE_WORK_CAP {
        return Err(Error::Budget { budget: CERTIFICATE_WORK_CAP as u64, count: work.min(u64::MAX as u128) as u64 });
    }

    let mut elements = Vec::with_capacity(bound as usize);
    let mut choice = vec![0usize; candidates.len()];
    'outer: loop {
        let mut psi: HashMap<SubsetMask, SubsetMask> = HashMap::new();
        psi.insert(SubsetMask::EMPTY, SubsetMask::EMPTY);
        psi.insert(full, full);
        let mut consistent = true;
        for (i, &a) in orbit_reps.iter().enumerate() {
            let b = candidates[i][choice[i]];
            for x in 0..n {
                let (xa, xb) = (ps.shift(x, a), ps.shift(x, b));
                if *psi.entry(xa).or_insert(xb) != xb {
                    consistent = false;
                }
            }
        }
        if !consistent {
            return Err(Error::Violation("a choice of twin-set values is not equivariant".into()));
        }
        let f: Vec<SubsetMask> = e.map.iter().map(|b| psi[b]).collect();
        let family = phi_inverse(ps, &f)?;
        let s = MlsSignature::from_family(&family)
            .map_err(|_| Error::Violation("an element of the left ideal is not maximal linked".into()))?;
        if circ(ps, &s, &e.signature) != s {
            return Err(Error::Violation("f∘e differs from f".into()));
        }
        elements.push(s);
        for i in 0..choice.len() {
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    elements.sort();
    elements.dedup();
    if elements.len() as u128 != bound {
        return Err(Error::Violation(format!("{} distinct elements, expected {bound}", elements.len())));
    }

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CERTIFICATE_SAMPLES {
        let a = random_mls(ps, &mut rng);
        let p = circ(ps, &a, &e.signature);
        if elements.binary_search(&p).is_err() {
            return Err(Error::Violation(format!("random product {} lies outside the listed ideal", p.to_hex())));
        }
    }

    let size = elements.len();
    let reps: Vec<Vec<SubsetMask>> = elements.iter().map(|b| phi_reps(ps, b)).collect();
    let mut table = Vec::with_capacity(size * size);
    for a in &elements {
        for r in &reps {
            let p = circ_with(a, r);
            let j = elements
                .binary_search(&p)
                .map_err(|_| Error::Violation("listed ideal is not closed under the product".into()))?;
            table.push(j as u32);
        }
    }
    let semigroup = FiniteSemigroup::from_table(size, table)?;
    for x in 0..size as u32 {
        let mut hit = vec![false; size];
        for y in 0..size as u32 {
            hit[semigroup.mul(y, x) as usize] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::Violation(format!("L∘x is smaller than L for element {x}")));
        }
    }
    let all: Vec<u32> = (0..size as u32).collect();
    let rees = rees_decompose(&semigroup, &all)?;
    let ideal_type = classify_group(&rees.group).map(|t| IdealType::new(rees.left_zero_count as u64, t));
    Ok(CertifiedIdeal { elements, semigroup, rees, ideal_type, sampled_products: CERTIFICATE_SAMPLES })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;

    #[test]
    fn c3_projection_is_majority() {
        let ps = PowerSet::new(cyclic(3).unwrap()).unwrap();
        let census = TwinCensus::new(&ps).unwrap();
        let e = build_projection_idempotent(&ps, &census).unwrap();
        assert_eq!(e.signature, MlsSignature::from_rep_predicate(3, |a| a.len() >= 2));
        assert!(min_ideal_membership(&ps, &census, &e.signature).member());
        assert!(!min_ideal_membership(&ps, &census, &MlsSignature::principal(3, 0)).member());
    }

    #[test]
    fn c4_certificate() {
        let ps = PowerSet::new(cyclic(4).unwrap()).unwrap();
        let census = TwinCensus::new(&ps).unwrap();
        let e = build_projection_idempotent(&ps, &census).unwrap();
        let cert = certify_min_left_ideal(&ps, &census, &e, 7).unwrap();
        assert_eq!(cert.elements.len(), 8);
        assert_eq!(cert.ideal_type.unwrap().to_string(), "C2 x C4");
    }
}
