//! Library results against direct enumerations that share no code with it.

use std::collections::BTreeSet;

use superext::group::{all_subgroups, catalog_up_to, cyclic, isomorphic, quotient, FiniteGroup};
use superext::semigroup::{minimal_ideal, minimal_ideal_by_two_sided_descent, minimal_left_ideals, FiniteSemigroup};
use superext::setfam::{enumerate_mls, EnumBudget, PairOrder};
use superext::structure::lambda_table;
use superext::twin::{q_counts, CharType};
use superext::{PowerSet, SubsetMask};

/// Maximal linked systems as families of subsets of `{0..n}`, found by
/// running through every family: up-closed, pairwise intersecting, and
/// holding one set of each complementary pair.
fn mls_by_exhaustion(n: usize) -> BTreeSet<Vec<u64>> {
    let size = 1usize << n;
    let full = (size - 1) as u64;
    let mut out = BTreeSet::new();
    for fam in 0u64..1 << size {
        let has = |a: u64| fam >> a & 1 == 1;
        let ok = (0..size as u64).all(|a| has(a) != has(!a & full))
            && (0..size as u64).all(|a| !has(a) || (0..size as u64).all(|b| !has(b) || a & b != 0))
            && (0..size as u64).all(|a| !has(a) || (0..size as u64).all(|b| a & !b != 0 || has(b)));
        if ok {
            out.insert((0..size as u64).filter(|&a| has(a)).collect());
        }
    }
    out
}

#[test]
fn maximal_linked_systems_match_exhaustion() {
    for n in 1..=4 {
        let want = mls_by_exhaustion(n);
        let ps = PowerSet::new(cyclic(n).unwrap()).unwrap();
        for order in [PairOrder::BySize, PairOrder::ById] {
            let got: BTreeSet<Vec<u64>> = enumerate_mls(&ps, order, EnumBudget::unlimited())
                .unwrap()
                .iter()
                .map(|s| ps.all_subsets().filter(|&a| s.contains(a)).map(|a| a.0).collect())
                .collect();
            assert_eq!(got, want, "n = {n}, {order:?}");
        }
    }
}

fn subgroups_by_exhaustion(g: &FiniteGroup) -> BTreeSet<u64> {
    let n = g.order();
    (1u64..1 << n)
        .filter(|&m| {
            let s = SubsetMask(m);
            s.contains(g.identity()) && s.iter().all(|a| s.iter().all(|b| s.contains(g.mul(a, g.inv(b)))))
        })
        .collect()
}

#[test]
fn subgroups_match_exhaustion() {
    for g in catalog_up_to(12) {
        if g.order() > 10 && g.order() != 12 {
            continue;
        }
        let got: BTreeSet<u64> = all_subgroups(&g).unwrap().iter().map(|h| h.members.0).collect();
        assert_eq!(got, subgroups_by_exhaustion(&g), "{}", g.label());
    }
}

/// For abelian groups `q(X, C_{2^k})` counts subgroups with cyclic quotient
/// of order `2^k`.
#[test]
fn q_counts_match_subgroup_quotients() {
    for g in catalog_up_to(16).into_iter().filter(|g| g.is_abelian()) {
        let q = q_counts(&g).unwrap();
        for k in 1..=4u32 {
            let c = cyclic(1 << k).unwrap();
            let count = all_subgroups(&g)
                .unwrap()
                .iter()
                .filter(|h| g.order() == h.order() << k)
                .filter(|h| isomorphic(&quotient(&g, h.members).unwrap().0, &c))
                .count();
            assert_eq!(q.get(&CharType::Cyclic(k)).copied().unwrap_or(0), count, "{} k = {k}", g.label());
        }
    }
}

fn minimal_ideal_by_definition(s: &FiniteSemigroup) -> BTreeSet<u32> {
    // K(S) = intersection of all principal two-sided ideals S^1 a S^1.
    let n = s.size() as u32;
    let mut k: BTreeSet<u32> = (0..n).collect();
    for a in 0..n {
        let mut ideal = BTreeSet::from([a]);
        for x in 0..n {
            ideal.insert(s.mul(x, a));
            ideal.insert(s.mul(a, x));
            for y in 0..n {
                ideal.insert(s.mul(s.mul(x, a), y));
            }
        }
        k = k.intersection(&ideal).copied().collect();
    }
    k
}

#[test]
fn lambda_minimal_ideals_match_definition() {
    for spec in ["C2", "C3", "C4", "C2xC2", "C5"] {
        let g = superext::spec::parse_spec(spec).unwrap();
        let lam = lambda_table(&PowerSet::new(g).unwrap(), EnumBudget::unlimited()).unwrap();
        let s = &lam.semigroup;
        let want = minimal_ideal_by_definition(s);
        let got: BTreeSet<u32> = minimal_ideal(s).into_iter().collect();
        let other: BTreeSet<u32> = minimal_ideal_by_two_sided_descent(s).into_iter().collect();
        assert_eq!(got, want, "{spec}");
        assert_eq!(other, want, "{spec}");
        let lefts = minimal_left_ideals(s);
        let union: BTreeSet<u32> = lefts.iter().flatten().copied().collect();
        assert_eq!(union, want, "{spec}: minimal left ideals do not cover K");
    }
}
