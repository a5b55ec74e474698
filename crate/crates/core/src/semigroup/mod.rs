//! Finite semigroups: ideals, idempotents, maximal subgroups, Rees
//! decomposition, isomorphism search, and the endomorphism monoids of free
//! acts.

mod endo;
mod ideals;
mod iso;

pub use endo::{end_tk, wreath_product, EndSemigroup, EndoMap};
pub use ideals::{
    idempotents, left_ideal, maximal_subgroup, minimal_ideal, minimal_ideal_by_two_sided_descent, minimal_left_ideal,
    minimal_left_ideals, rees_decompose, ReesDecomposition,
};
pub use iso::{semigroup_isomorphic, IsoVerdict};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use dashmap::DashMap;
use rand::{Rng, SeedableRng};
use std::fmt;
use std::sync::Arc;

/// Largest semigroup whose table is materialized.
pub const MAX_TABLE_SIZE: usize = 4096;
/// Above this size associativity is sampled rather than checked exhaustively.
pub const EXHAUSTIVE_ASSOCIATIVITY: usize = 512;
pub const ASSOCIATIVITY_SAMPLES: usize = 1_000_000;

type MulFn = dyn Fn(u32, u32) -> u32 + Send + Sync;

enum Mult {
    Table(Vec<u32>),
    /// Products computed on demand; a racing duplicate fill writes the same
    /// value, so concurrent readers never see a torn entry.
    Callable {
        f: Arc<MulFn>,
        memo: DashMap<(u32, u32), u32>,
    },
}

/// A semigroup on `0..size`.
pub struct FiniteSemigroup {
    size: usize,
    mult: Mult,
}

impl fmt::Debug for FiniteSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.mult {
            Mult::Table(_) => "table",
            Mult::Callable { .. } => "callable",
        };
        write!(f, "FiniteSemigroup({} elements, {kind})", self.size)
    }
}

impl FiniteSemigroup {
    /// Wraps a row-major table after checking closure and associativity.
    pub fn from_table(size: usize, table: Vec<u32>) -> Result<FiniteSemigroup> {
        if table.len() != size * size {
            return Err(Error::Malformed(format!("table of {} entries for {size} elements", table.len())));
        }
        if table.iter().any(|&v| v as usize >= size) {
            return Err(Error::Malformed("product outside the carrier".into()));
        }
        let s = FiniteSemigroup { size, mult: Mult::Table(table) };
        s.check_associativity(0x5eed)?;
        Ok(s)
    }

    /// Tabulates `f` when small enough, otherwise memoizes it.
    pub fn from_fn(size: usize, f: impl Fn(u32, u32) -> u32 + Send + Sync + 'static) -> Result<FiniteSemigroup> {
        if size == 0 {
            return Err(Error::InvalidArgument("empty semigroup".into()));
        }
        if size <= MAX_TABLE_SIZE {
            let mut table = Vec::with_capacity(size * size);
            for a in 0..size as u32 {
                for b in 0..size as u32 {
                    table.push(f(a, b));
                }
            }
            return FiniteSemigroup::from_table(size, table);
        }
        let s = FiniteSemigroup { size, mult: Mult::Callable { f: Arc::new(f), memo: DashMap::new() } };
        s.check_associativity(0x5eed)?;
        Ok(s)
    }

    /// A table already known to be associative, for large tables whose
    /// exhaustive check would dominate.
    pub(crate) fn from_table_sampled(size: usize, table: Vec<u32>, seed: u64) -> Result<FiniteSemigroup> {
        let s = FiniteSemigroup { size, mult: Mult::Table(table) };
        s.check_associativity(seed)?;
        Ok(s)
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self.mult, Mult::Table(_))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.mult {
            Mult::Table(t) => t[a as usize * self.size + b as usize],
            Mult::Callable { f, memo } => *memo.entry((a, b)).or_insert_with(|| f(a, b)),
        }
    }

    /// Exhaustive up to [`EXHAUSTIVE_ASSOCIATIVITY`] elements, sampled above.
    pub fn check_associativity(&self, seed: u64) -> Result<()> {
        let n = self.size as u32;
        let bad = |a, b, c| Error::NotAssociative(a as usize, b as usize, c as usize);
        if self.size <= EXHAUSTIVE_ASSOCIATIVITY && self.is_materialized() {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return Err(bad(a, b, c));
                        }
                    }
                }
            }
            return Ok(());
        }
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (a, b, c) = (rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n));
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(bad(a, b, c));
            }
        }
        Ok(())
    }

    /// A group viewed as a semigroup.
    pub fn from_group(g: &FiniteGroup) -> FiniteSemigroup {
        let n = g.order();
        let table = (0..n * n).map(|i| g.mul(i / n, i % n) as u32).collect();
        FiniteSemigroup { size: n, mult: Mult::Table(table) }
    }

    /// `x y = x` on `k` elements.
    pub fn left_zero(k: usize) -> FiniteSemigroup {
        let table = (0..k * k).map(|i| (i / k) as u32).collect();
        FiniteSemigroup { size: k, mult: Mult::Table(table) }
    }

    /// `Z x G` with `Z` a left-zero semigroup on `z` elements; `(i, g)` is
    /// stored at `i |G| + g`.
    pub fn left_zero_times_group(z: usize, g: &FiniteGroup) -> Result<FiniteSemigroup> {
        let n = g.order();
        let g = g.clone();
        FiniteSemigroup::from_fn(z * n, move |a, b| {
            let (i, x) = (a as usize / n, a as usize % n);
            let y = b as usize % n;
            (i * n + g.mul(x, y)) as u32
        })
    }

    /// Restriction to a subset closed under the product, renumbered in the
    /// order given.
    pub fn restrict(&self, elements: &[u32]) -> Result<FiniteSemigroup> {
        let mut pos = std::collections::HashMap::with_capacity(elements.len());
        for (i, &e) in elements.iter().enumerate() {
            pos.insert(e, i as u32);
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = self.mul(a, b);
                table.push(*pos.get(&p).ok_or_else(|| Error::InvalidArgument("subset not closed".into()))?);
            }
        }
        Ok(FiniteSemigroup { size: k, mult: Mult::Table(table) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_associative() {
        // x*y = y+1 mod 2 is not associative
        let t = vec![1, 0, 1, 0];
        assert!(matches!(FiniteSemigroup::from_table(2, t), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn callable_memoizes() {
        let s = FiniteSemigroup::from_fn(5000, |a, _| a).unwrap();
        assert!(!s.is_materialized());
        assert_eq!(s.mul(4999, 3), 4999);
    }
}
