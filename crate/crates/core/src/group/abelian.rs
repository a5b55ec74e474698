use super::FiniteGroup;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Orders of the cyclic prime-power factors of an abelian group, ascending.
pub fn primary_invariants(g: &FiniteGroup) -> Result<Vec<usize>> {
    if !g.is_abelian() {
        return Err(Error::InvalidArgument(format!("{} is not abelian", g.label())));
    }
    let orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    let mut out = Vec::new();
    for p in prime_factors(g.order()) {
        // c[j] = log_p |{x : x^(p^j) = 1}|
        let mut c = vec![0u32];
        let mut pj = 1usize;
        loop {
            pj *= p;
            let size = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count();
            let mut log = 0;
            let mut s = size;
            while s > 1 {
                s /= p;
                log += 1;
            }
            let done = Some(&log) == c.last();
            c.push(log);
            if done {
                break;
            }
        }
        // c[j] - c[j-1] counts the factors of order at least p^j.
        let at_least: Vec<u32> = (1..c.len()).map(|j| c[j] - c[j - 1]).collect();
        for j in 0..at_least.len() {
            let next = at_least.get(j + 1).copied().unwrap_or(0);
            for _ in 0..at_least[j] - next {
                out.push(p.pow(j as u32 + 1));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Invariant factors `m_1 | m_2 | ...` of an abelian group (all `m_i >= 2`).
pub fn abelian_invariants(g: &FiniteGroup) -> Result<Vec<usize>> {
    Ok(invariants_from_primary(&primary_invariants(g)?))
}

fn invariants_from_primary(primary: &[usize]) -> Vec<usize> {
    let mut by_prime: Vec<Vec<usize>> = Vec::new();
    for &q in primary {
        let p = prime_factors(q)[0];
        match by_prime.iter_mut().find(|v| prime_factors(v[0])[0] == p) {
            Some(v) => v.push(q),
            None => by_prime.push(vec![q]),
        }
    }
    for v in &mut by_prime {
        v.sort_unstable_by(|a, b| b.cmp(a));
    }
    let len = by_prime.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<usize> = (0..len).map(|i| by_prime.iter().filter_map(|v| v.get(i)).product()).collect();
    out.reverse();
    out
}

/// `|hom(g, C_{2^k})|`: the invariant-factor formula when `g` is abelian,
/// otherwise a search over images of a generating set.
pub fn hom_count_to_cyclic2(g: &FiniteGroup, k: u32) -> Result<u128> {
    if k > 16 {
        return Err(Error::InvalidArgument(format!("2^{k} exceeds 2^16")));
    }
    let m = 1u128 << k;
    if g.is_abelian() {
        return Ok(abelian_invariants(g)?.iter().map(|&mi| gcd(mi as u128, m)).product());
    }
    Ok(hom_count_by_search(g, m as usize))
}

/// `|hom(g, C_m)|` by backtracking over generator images in `Z/m`.
pub fn hom_count_by_search(g: &FiniteGroup, m: usize) -> u128 {
    let gens = g.generating_set();
    let mut imgs = Vec::with_capacity(gens.len());
    count_extensions(g, m, &gens, &mut imgs)
}

fn count_extensions(g: &FiniteGroup, m: usize, gens: &[usize], imgs: &mut Vec<usize>) -> u128 {
    let t = imgs.len();
    if t == gens.len() {
        return 1;
    }
    let o = g.element_order(gens[t]);
    let mut total = 0;
    for v in 0..m {
        if !(o * v).is_multiple_of(m) {
            continue;
        }
        imgs.push(v);
        if consistent(g, m, &gens[..=t], imgs) {
            total += count_extensions(g, m, gens, imgs);
        }
        imgs.pop();
    }
    total
}

fn consistent(g: &FiniteGroup, m: usize, gens: &[usize], imgs: &[usize]) -> bool {
    let mut map = vec![usize::MAX; g.order()];
    map[0] = 0;
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let a = queue[k];
        k += 1;
        for (&x, &v) in gens.iter().zip(imgs) {
            let b = g.mul(a, x);
            let fb = (map[a] + v) % m;
            if map[b] == usize::MAX {
                map[b] = fb;
                queue.push(b);
            } else if map[b] != fb {
                return false;
            }
        }
    }
    true
}

/// `Z^r + C_{m_1} + ... + C_{m_s}` with `m_i | m_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FgAbelianPresentation {
    pub free_rank: u32,
    pub torsion_factors: Vec<u64>,
}

impl FgAbelianPresentation {
    pub fn new(free_rank: u32, torsion_factors: Vec<u64>) -> Result<FgAbelianPresentation> {
        if let Some(&m) = torsion_factors.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidArgument(format!("torsion factor {m} < 2")));
        }
        if torsion_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidArgument("torsion factors must divide each other".into()));
        }
        Ok(FgAbelianPresentation { free_rank, torsion_factors })
    }

    pub fn of_group(g: &FiniteGroup) -> Result<FgAbelianPresentation> {
        let inv = abelian_invariants(g)?;
        FgAbelianPresentation::new(0, inv.into_iter().map(|m| m as u64).collect())
    }

    /// `|hom(X, C_{2^k})| = 2^{kr} prod gcd(m_i, 2^k)`
    pub fn hom_count(&self, k: u32) -> Result<u128> {
        let overflow = || Error::InvalidArgument(format!("hom count for k = {k} overflows"));
        let m = 1u128.checked_shl(k).ok_or_else(overflow)?;
        let free_bits = k.checked_mul(self.free_rank).filter(|&b| b < 128).ok_or_else(overflow)?;
        let mut count = 1u128 << free_bits;
        for &mi in &self.torsion_factors {
            count = count.checked_mul(gcd(mi as u128, m)).ok_or_else(overflow)?;
        }
        Ok(count)
    }
}

/// `k` in `C_{2^k}`, allowing the quasicyclic group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoPower {
    Finite(u32),
    Infinite,
}

/// A q-count; infinite targets only get a symbolic answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum QCount {
    Count(u128),
    Zero,
    Positive,
}

/// Number of subgroups `H` of `X` with `X/H = C_{2^k}`:
/// `(|hom(X, C_{2^k})| - |hom(X, C_{2^{k-1}})|) / 2^{k-1}`.
pub fn fg_abelian_q(p: &FgAbelianPresentation, k: TwoPower) -> Result<QCount> {
    match k {
        TwoPower::Finite(0) => Err(Error::InvalidArgument("k must be positive".into())),
        TwoPower::Finite(k) => {
            let surj = p.hom_count(k)? - p.hom_count(k - 1)?;
            let units = 1u128 << (k - 1);
            if surj % units != 0 {
                return Err(Error::Violation(format!("{surj} surjections not divisible by {units}")));
            }
            Ok(QCount::Count(surj / units))
        }
        // Only the free part maps onto the quasicyclic group.
        TwoPower::Infinite if p.free_rank == 0 => Ok(QCount::Zero),
        TwoPower::Infinite => Ok(QCount::Positive),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, direct_product, generalized_quaternion};

    #[test]
    fn invariants_of_c2_c4_c3() {
        let g = direct_product(&direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap(), &cyclic(3).unwrap())
            .unwrap();
        assert_eq!(primary_invariants(&g).unwrap(), vec![2, 3, 4]);
        assert_eq!(abelian_invariants(&g).unwrap(), vec![2, 12]);
    }

    #[test]
    fn c2_plus_c4_hom_counts() {
        let g = direct_product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap();
        assert_eq!(hom_count_to_cyclic2(&g, 1).unwrap(), 4);
        assert_eq!(hom_count_to_cyclic2(&g, 2).unwrap(), 8);
        assert_eq!(hom_count_to_cyclic2(&g, 0).unwrap(), 1);
        assert_eq!(hom_count_by_search(&g, 4), 8);
    }

    #[test]
    fn quaternion_homs_factor_through_klein() {
        let q = generalized_quaternion(8).unwrap();
        assert_eq!(hom_count_to_cyclic2(&q, 1).unwrap(), 4);
        assert_eq!(hom_count_to_cyclic2(&q, 3).unwrap(), 4);
    }

    #[test]
    fn symbolic_and_finite_q() {
        let z = FgAbelianPresentation::new(1, vec![]).unwrap();
        assert_eq!(fg_abelian_q(&z, TwoPower::Finite(3)).unwrap(), QCount::Count(1));
        assert_eq!(fg_abelian_q(&z, TwoPower::Infinite).unwrap(), QCount::Positive);
        let c3 = FgAbelianPresentation::new(0, vec![3]).unwrap();
        assert_eq!(fg_abelian_q(&c3, TwoPower::Infinite).unwrap(), QCount::Zero);
        assert!(FgAbelianPresentation::new(0, vec![4, 6]).is_err());
    }
}
