use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::semigroup::FiniteSemigroup;
use crate::setfam::{enumerate_mls, phi, EnumBudget, MlsSignature, PairOrder, PowerSet};
use std::collections::HashMap;

/// Largest group whose superextension is tabulated.
pub const MAX_BRUTE_ORDER: usize = 6;

/// `λ(X)` as an explicit semigroup; element `i` is `elements[i]`.
#[derive(Debug)]
pub struct LambdaTable {
    pub elements: Vec<MlsSignature>,
    pub semigroup: FiniteSemigroup,
}

impl LambdaTable {
    pub fn index_of(&self, s: &MlsSignature) -> Option<u32> {
        self.elements.binary_search(s).ok().map(|i| i as u32)
    }
}

/// Enumerates `λ(X)` and fills in `A ∘ B` for every pair. The product table
/// is compared against the associativity sampler rather than checked
/// exhaustively (2646³ triples at order 6).
pub fn lambda_table(ps: &PowerSet, budget: EnumBudget) -> Result<LambdaTable> {
    let n = ps.n();
    if n > MAX_BRUTE_ORDER {
        return Err(Error::SizeCap { what: "superextension table", order: n, cap: MAX_BRUTE_ORDER });
    }
    let elements = enumerate_mls(ps, PairOrder::BySize, budget)?;
    let size = elements.len();
    // n <= 6 means at most 32 pairs, so a signature is one word.
    let index: HashMap<u64, u32> = elements.iter().enumerate().map(|(i, s)| (s.words()[0], i as u32)).collect();
    let pairs = ps.pairs();
    let member: Vec<u64> = elements.iter().map(|s| s.words()[0]).collect();
    let contains = |w: u64, a: SubsetMask| -> bool {
        if a.0 < pairs as u64 {
            w >> a.0 & 1 == 1
        } else {
            w >> (!a.0 & (2 * pairs as u64 - 1)) & 1 == 0
        }
    };
    let mut table = vec![0u32; size * size];
    for (j, b) in elements.iter().enumerate() {
        let phi_b: Vec<SubsetMask> = (0..pairs as u64).map(|r| phi(ps, b, SubsetMask(r))).collect();
        for (i, &wa) in member.iter().enumerate() {
            let mut w = 0u64;
            for (r, &s) in phi_b.iter().enumerate() {
                if contains(wa, s) {
                    w |= 1 << r;
                }
            }
            table[i * size + j] = *index
                .get(&w)
                .ok_or_else(|| Error::Violation(format!("product of systems {i} and {j} is not maximal linked")))?;
        }
    }
    let semigroup = FiniteSemigroup::from_table_sampled(size, table, 0x1a3bda)?;
    Ok(LambdaTable { elements, semigroup })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::cyclic;
    use crate::semigroup::{idempotents, minimal_left_ideals};

    #[test]
    fn lambda_c3() {
        let ps = PowerSet::new(cyclic(3).unwrap()).unwrap();
        let l = lambda_table(&ps, EnumBudget::unlimited()).unwrap();
        assert_eq!(l.elements.len(), 4);
        // the majority system: every 2-element set
        let maj = MlsSignature::from_rep_predicate(3, |a| a.len() >= 2);
        let m = l.index_of(&maj).unwrap();
        for a in 0..4 {
            assert_eq!(l.semigroup.mul(a, m), m);
        }
        assert_eq!(minimal_left_ideals(&l.semigroup), vec![vec![m]]);
        assert!(idempotents(&l.semigroup).unwrap().contains(&m));
    }
}
