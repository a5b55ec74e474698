use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use superext::group::catalog_up_to;
use superext::semigroup::{semigroup_isomorphic, FiniteSemigroup};
use superext::setfam::{circ, is_monotone_map, is_symmetric_map, phi, phi_map, random_mls};
use superext::structure::{Factor, GroupType, IdealType};
use superext::twin::fix_operators;
use superext::{FiniteGroup, MlsSignature, PowerSet, SubsetMask};

fn groups() -> Vec<FiniteGroup> {
    catalog_up_to(8)
}

fn power_set(i: usize) -> PowerSet {
    let gs = groups();
    PowerSet::new(gs[i % gs.len()].clone()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn product_is_associative_and_maximal_linked(g in 0usize..64, seed: u64) {
        let ps = power_set(g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_mls(&ps, &mut rng), random_mls(&ps, &mut rng), random_mls(&ps, &mut rng));
        let ab = circ(&ps, &a, &b);
        prop_assert!(ab.to_family().is_maximal_linked());
        prop_assert_eq!(circ(&ps, &ab, &c), circ(&ps, &a, &circ(&ps, &b, &c)));
    }

    #[test]
    fn phi_is_a_homomorphism(g in 0usize..64, seed: u64, s in any::<u64>()) {
        let ps = power_set(g);
        let s = SubsetMask(s & ps.full().0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (random_mls(&ps, &mut rng), random_mls(&ps, &mut rng));
        prop_assert_eq!(phi(&ps, &circ(&ps, &a, &b), s), phi(&ps, &a, phi(&ps, &b, s)));
        let f = phi_map(&ps, &a);
        prop_assert!(is_monotone_map(&ps, &f) && is_symmetric_map(&ps, &f));
        // equivariance
        for x in 0..ps.n() {
            prop_assert_eq!(f[ps.shift(x, s).0 as usize], ps.shift(x, f[s.0 as usize]));
        }
    }

    #[test]
    fn principal_ultrafilters_act_as_shifts(g in 0usize..64, seed: u64, x in 0usize..8) {
        let ps = power_set(g);
        let x = x % ps.n();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_mls(&ps, &mut rng);
        let e = MlsSignature::principal(ps.n(), ps.group().identity());
        prop_assert_eq!(&circ(&ps, &e, &a), &a);
        prop_assert_eq!(&circ(&ps, &a, &e), &a);
        let px = MlsSignature::principal(ps.n(), x);
        let shifted = circ(&ps, &px, &a);
        for s in ps.all_subsets() {
            prop_assert_eq!(shifted.contains(s), a.contains(ps.shift(ps.group().inv(x), s)));
        }
    }

    #[test]
    fn fix_sets_conjugate_under_shifts(g in 0usize..64, a in any::<u64>(), x in 0usize..8) {
        let gs = groups();
        let g = &gs[g % gs.len()];
        let a = SubsetMask(a & g.full_mask().0);
        let x = x % g.order();
        let f = fix_operators(g, a);
        let fx = fix_operators(g, g.shift(x, a));
        prop_assert_eq!(fx.fix_minus, g.conj_mask(x, f.fix_minus));
        prop_assert!(g.is_subgroup(f.fix));
        prop_assert!(f.fix_minus.is_empty() || f.fix_pm.len() == 2 * f.fix.len());
    }

    #[test]
    fn type_strings_round_trip(m in 0u32..12, cyc in proptest::collection::vec(1u64..7, 0..5), q in 0u32..3) {
        let mut t = GroupType::from_factors(cyc.iter().map(|&k| Factor::Cyclic(1 << k)));
        if q > 0 {
            t.push(Factor::Quaternion(8 << (q - 1)), q);
        }
        let back: GroupType = t.to_string().parse().unwrap();
        prop_assert_eq!(&back, &t);
        let it = IdealType::new(1 << m, t);
        let back: IdealType = it.to_string().parse().unwrap();
        prop_assert_eq!(&back, &it);
        let json = serde_json::to_string(&it).unwrap();
        prop_assert_eq!(serde_json::from_str::<IdealType>(&json).unwrap(), it);
    }

    #[test]
    fn relabelled_rees_products_are_isomorphic(z in 1usize..5, g in 0usize..64, seed: u64) {
        let gs = groups();
        let g = &gs[g % gs.len()];
        let s = FiniteSemigroup::left_zero_times_group(z, g).unwrap();
        let n = s.size();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        perm.shuffle(&mut rng);
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] as usize * n + perm[b] as usize] = perm[s.mul(a as u32, b as u32) as usize];
            }
        }
        let t = FiniteSemigroup::from_table(n, table).unwrap();
        let v = semigroup_isomorphic(&s, &t, 1 << 20).unwrap();
        prop_assert!(v.is_yes());
    }
}
