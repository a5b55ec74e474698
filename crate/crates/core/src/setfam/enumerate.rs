use super::mls::words_for;
use super::{MlsSignature, PowerSet};
use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use rand::Rng;

/// Order in which complementary pairs are decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairOrder {
    /// Descending `min(|A|, |X \ A|)`, balanced pairs last, ties by mask.
    BySize,
    /// Ascending pair id.
    ById,
}

/// Limit on the number of systems produced. Without one, widths above 6
/// are refused.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_systems: Option<u64>,
}

impl EnumBudget {
    pub fn unlimited() -> EnumBudget {
        EnumBudget { max_systems: None }
    }

    pub fn at_most(n: u64) -> EnumBudget {
        EnumBudget { max_systems: Some(n) }
    }
}

fn pair_order(n: usize, order: PairOrder) -> Vec<usize> {
    let mut reps: Vec<usize> = (0..1usize << (n - 1)).collect();
    if order == PairOrder::BySize {
        let key = |r: &usize| {
            let k = r.count_ones() as usize;
            let balanced = 2 * k == n;
            (balanced, std::cmp::Reverse(k.min(n - k)), *r)
        };
        reps.sort_by_key(key);
    }
    reps
}

/// Calls `visit` on every maximal linked system of `ps` exactly once and
/// returns how many there were.
///
/// Search state is two bit vectors over pairs: the representative is known
/// to be in, or known to be out. Choosing a member `A` puts every superset
/// of `A` in, which also pushes out every set disjoint from `A`.
pub fn for_each_mls(
    ps: &PowerSet,
    order: PairOrder,
    budget: EnumBudget,
    mut visit: impl FnMut(&MlsSignature),
) -> Result<u64> {
    let n = ps.n();
    if n > 7 {
        return Err(Error::SizeCap { what: "maximal linked system enumeration", order: n, cap: 7 });
    }
    if n == 7 && budget.max_systems.is_none() {
        return Err(Error::InvalidArgument("width 7 enumeration needs an explicit budget".into()));
    }
    let size = 1usize << n;
    let half = size / 2;
    let mut force_in = vec![0u64; size];
    let mut force_out = vec![0u64; size];
    for a in 0..size {
        // supersets of a: a | t for t a submask of the complement
        let free = !a & (size - 1);
        let mut t = free;
        loop {
            let b = a | t;
            if b < half {
                force_in[a] |= 1 << b;
            } else {
                force_out[a] |= 1 << (!b & (size - 1));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
    }
    let reps = pair_order(n, order);
    let mut count = 0u64;
    let mut search =
        Search { reps: &reps, force_in: &force_in, force_out: &force_out, size, count: &mut count, budget };
    search.run(0, 0, 0, &mut |bits| {
        visit(&MlsSignature::from_words(n, vec![bits]));
    })?;
    Ok(count)
}

struct Search<'a> {
    reps: &'a [usize],
    force_in: &'a [u64],
    force_out: &'a [u64],
    size: usize,
    count: &'a mut u64,
    budget: EnumBudget,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, inn: u64, out: u64, emit: &mut dyn FnMut(u64)) -> Result<()> {
        let mut pos = pos;
        while pos < self.reps.len() && (inn | out) >> self.reps[pos] & 1 == 1 {
            pos += 1;
        }
        if pos == self.reps.len() {
            if let Some(max) = self.budget.max_systems {
                if *self.count >= max {
                    return Err(Error::Budget { budget: max, count: *self.count });
                }
            }
            *self.count += 1;
            emit(inn);
            return Ok(());
        }
        let r = self.reps[pos];
        for chosen in [r, !r & (self.size - 1)] {
            let (i2, o2) = (inn | self.force_in[chosen], out | self.force_out[chosen]);
            if i2 & o2 == 0 {
                self.run(pos + 1, i2, o2, emit)?;
            }
        }
        Ok(())
    }
}

/// Every maximal linked system, sorted.
pub fn enumerate_mls(ps: &PowerSet, order: PairOrder, budget: EnumBudget) -> Result<Vec<MlsSignature>> {
    let mut out = Vec::new();
    for_each_mls(ps, order, budget, |s| out.push(s.clone()))?;
    out.sort();
    Ok(out)
}

/// A maximal linked system built by deciding pairs in random order.
///
/// Any choice on an undecided pair other than `{∅, X}` is consistent: if a
/// superset of the chosen set had its complement in the system, that
/// complement would force the complement of the chosen set in, and the pair
/// would be decided.
pub fn random_mls<R: Rng>(ps: &PowerSet, rng: &mut R) -> MlsSignature {
    let n = ps.n();
    let size = ps.size();
    let mut member = vec![false; size];
    let mut reps: Vec<usize> = (0..size / 2).collect();
    for i in (1..reps.len()).rev() {
        reps.swap(i, rng.random_range(0..=i));
    }
    for r in reps {
        let comp = !r & (size - 1);
        if member[r] || member[comp] {
            continue;
        }
        // the empty set is not linked with itself
        let a = if r != 0 && rng.random_bool(0.5) { r } else { comp };
        let free = !a & (size - 1);
        let mut t = free;
        loop {
            member[a | t] = true;
            if t == 0 {
                break;
            }
            t = (t - 1) & free;
        }
    }
    let mut bits = vec![0u64; words_for(n)];
    for r in 0..size / 2 {
        if member[r] {
            bits[r >> 6] |= 1 << (r & 63);
        }
    }
    let s = MlsSignature::from_words(n, bits);
    debug_assert!(s.contains(SubsetMask::full(n)));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use rand::SeedableRng;

    #[test]
    fn small_counts() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 12)] {
            let ps = PowerSet::new(cyclic(n).unwrap()).unwrap();
            let got = for_each_mls(&ps, PairOrder::BySize, EnumBudget::default(), |_| {}).unwrap();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn single_system_on_one_point() {
        let ps = PowerSet::new(cyclic(1).unwrap()).unwrap();
        let all = enumerate_mls(&ps, PairOrder::ById, EnumBudget::default()).unwrap();
        assert_eq!(all.len(), 1);
        assert!(all[0].contains(SubsetMask(1)));
    }

    #[test]
    fn budget_reports_progress() {
        let ps = PowerSet::new(cyclic(5).unwrap()).unwrap();
        let err = for_each_mls(&ps, PairOrder::BySize, EnumBudget::at_most(10), |_| {}).unwrap_err();
        assert_eq!(err, Error::Budget { budget: 10, count: 10 });
    }

    #[test]
    fn random_systems_are_maximal_linked() {
        let ps = PowerSet::new(cyclic(6).unwrap()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            assert!(random_mls(&ps, &mut rng).to_family().is_maximal_linked());
        }
    }
}
