//! Finite groups given by their Cayley tables.

mod abelian;
mod catalog;
mod cayley;
mod iso;
mod subgroup;

pub(crate) use abelian::prime_factors;
pub use abelian::{
    abelian_invariants, fg_abelian_q, hom_count_to_cyclic2, primary_invariants, FgAbelianPresentation, QCount, TwoPower,
};
pub(crate) use catalog::product_unbounded;
pub use catalog::{alternating4, catalog_up_to, cyclic, dihedral, direct_product, generalized_quaternion, power};
pub use cayley::CayleyTableDocument;
pub use iso::{find_isomorphism, fingerprint, isomorphic, GroupFingerprint};
pub use subgroup::{all_subgroups, odd_subgroup, odd_subgroup_direct, quotient, subquotient, GroupHom, Subgroup};

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use std::collections::BTreeMap;

/// Groups at most this large can use [`SubsetMask`]-based operations.
pub const MAX_ORDER: usize = 64;
/// The superextension pipeline stops here.
pub const MAX_PIPELINE_ORDER: usize = 16;
/// Hard limit of the table representation (element indices are bytes).
pub const MAX_TABLE_ORDER: usize = 256;

/// A finite group with identity 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u8>,
    inv: Vec<u8>,
    names: Vec<String>,
    label: String,
}

impl FiniteGroup {
    /// Validates a row-major Cayley table and renumbers it so the identity is 0.
    ///
    /// Returns the group and the permutation `perm[old] = new` that was applied.
    pub fn from_table(
        label: impl Into<String>,
        n: usize,
        flat: &[usize],
        names: Option<Vec<String>>,
    ) -> Result<(FiniteGroup, Vec<usize>)> {
        if n == 0 {
            return Err(Error::Malformed("order must be positive".into()));
        }
        if n > MAX_TABLE_ORDER {
            return Err(Error::SizeCap { what: "cayley table", order: n, cap: MAX_TABLE_ORDER });
        }
        if flat.len() != n * n {
            return Err(Error::Malformed(format!("expected {} entries, found {}", n * n, flat.len())));
        }
        if let Some(&bad) = flat.iter().find(|&&v| v >= n) {
            return Err(Error::Malformed(format!("entry {bad} out of range 0..{n}")));
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::Malformed(format!("{} names for {n} elements", names.len())));
            }
        }
        let at = |i: usize, j: usize| flat[i * n + j];

        let e = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x)).ok_or(Error::MissingIdentity)?;
        for x in 0..n {
            let has = (0..n).any(|y| at(x, y) == e && at(y, x) == e);
            if !has {
                return Err(Error::MissingInverse(x));
            }
        }
        let mut seen = vec![false; n];
        for (line, by_row) in [("row", true), ("column", false)] {
            for i in 0..n {
                seen.iter_mut().for_each(|s| *s = false);
                for j in 0..n {
                    let v = if by_row { at(i, j) } else { at(j, i) };
                    if seen[v] {
                        return Err(Error::NotLatin { line, index: i, element: v });
                    }
                    seen[v] = true;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = at(i, j);
                for k in 0..n {
                    if at(ij, k) != at(i, at(j, k)) {
                        return Err(Error::NotAssociative(i, j, k));
                    }
                }
            }
        }

        // Swap the identity into slot 0.
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, e);
        let mut back = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            back[new] = old;
        }
        let mut table = vec![0u8; n * n];
        for i in 0..n {
            for j in 0..n {
                table[i * n + j] = perm[at(back[i], back[j])] as u8;
            }
        }
        let names = match names {
            Some(v) => (0..n).map(|i| v[back[i]].clone()).collect(),
            None => (0..n).map(|i| back[i].to_string()).collect(),
        };
        Ok((FiniteGroup::assemble(label.into(), n, table, names), perm))
    }

    /// Builds a group from a product closure known to define a group with
    /// identity 0. The table is still validated.
    pub(crate) fn from_fn(
        label: impl Into<String>,
        n: usize,
        names: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<FiniteGroup> {
        let mut flat = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                flat.push(mul(i, j));
            }
        }
        let (g, perm) = FiniteGroup::from_table(label, n, &flat, Some(names))?;
        if perm[0] != 0 {
            return Err(Error::Violation("constructed table has identity away from 0".into()));
        }
        Ok(g)
    }

    fn assemble(label: String, n: usize, table: Vec<u8>, names: Vec<String>) -> FiniteGroup {
        let mut inv = vec![0u8; n];
        for x in 0..n {
            let y = (0..n).find(|&y| table[x * n + y] == 0).expect("validated");
            inv[x] = y as u8;
        }
        FiniteGroup { n, table, inv, names, label }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x a x^-1`
    #[inline]
    pub fn conj(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> FiniteGroup {
        self.label = label.into();
        self
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    /// Row-major table as plain indices.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.mul(i, j)).collect()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Element order to number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in 0..self.n {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn involutions(&self) -> Vec<usize> {
        (1..self.n).filter(|&a| self.mul(a, a) == 0).collect()
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    /// Closure of a set of elements under the product, as a boolean vector.
    ///
    /// In a finite group this is the generated subgroup.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.n];
        inside[0] = true;
        let mut list = vec![0usize];
        let mut k = 0;
        while k < list.len() {
            let a = list[k];
            k += 1;
            for &g in gens {
                let b = self.mul(a, g);
                if !inside[b] {
                    inside[b] = true;
                    list.push(b);
                }
            }
        }
        inside
    }

    /// Order of the commutator subgroup.
    pub fn derived_order(&self) -> usize {
        let mut comms = Vec::new();
        let mut seen = vec![false; self.n];
        for a in 0..self.n {
            for b in 0..self.n {
                let c = self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)));
                if !seen[c] {
                    seen[c] = true;
                    comms.push(c);
                }
            }
        }
        self.closure(&comms).iter().filter(|&&x| x).count()
    }

    /// A generating set built greedily, high-order elements first.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut by_order: Vec<usize> = (1..self.n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut inside = self.closure(&gens);
        for a in by_order {
            if !inside[a] {
                gens.push(a);
                inside = self.closure(&gens);
            }
        }
        gens
    }

    pub(crate) fn require_mask_width(&self, what: &'static str) -> Result<()> {
        if self.n > MAX_ORDER {
            return Err(Error::SizeCap { what, order: self.n, cap: MAX_ORDER });
        }
        Ok(())
    }

    pub fn full_mask(&self) -> SubsetMask {
        SubsetMask::full(self.n)
    }

    /// `xA`
    pub fn shift(&self, x: usize, a: SubsetMask) -> SubsetMask {
        let row = &self.table[x * self.n..(x + 1) * self.n];
        let mut out = 0u64;
        for i in a.iter() {
            out |= 1u64 << row[i];
        }
        SubsetMask(out)
    }

    /// `Ax`
    pub fn shift_right(&self, a: SubsetMask, x: usize) -> SubsetMask {
        a.iter().map(|i| self.mul(i, x)).collect()
    }

    /// `x A x^-1`
    pub fn conj_mask(&self, x: usize, a: SubsetMask) -> SubsetMask {
        a.iter().map(|i| self.conj(x, i)).collect()
    }

    /// `AB`
    pub fn product_sets(&self, a: SubsetMask, b: SubsetMask) -> SubsetMask {
        let mut out = 0u64;
        for i in a.iter() {
            out |= self.shift(i, b).0;
        }
        SubsetMask(out)
    }

    pub fn inverse_set(&self, a: SubsetMask) -> SubsetMask {
        a.iter().map(|i| self.inv(i)).collect()
    }

    /// Subgroup generated by a mask.
    pub fn generated(&self, gens: SubsetMask) -> SubsetMask {
        let g: Vec<usize> = gens.iter().collect();
        self.closure(&g).iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect()
    }

    pub fn is_subgroup(&self, h: SubsetMask) -> bool {
        h.contains(0) && h.iter().all(|a| h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, h: SubsetMask) -> bool {
        (0..self.n).all(|x| self.conj_mask(x, h) == h)
    }

    /// Elements of a mask written with the display names.
    pub fn describe(&self, a: SubsetMask) -> String {
        let parts: Vec<&str> = a.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loader_moves_identity_to_zero() {
        // C_3 with identity stored at index 2.
        let flat = [1, 2, 0, 2, 0, 1, 0, 1, 2];
        let (g, perm) = FiniteGroup::from_table("C3", 3, &flat, None).unwrap();
        assert_eq!(perm[2], 0);
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.order_histogram().get(&3), Some(&2));
    }

    #[test]
    fn diagnostics_are_distinct() {
        // not latin: row 1 repeats 1
        let flat = [0, 1, 1, 1];
        let err = FiniteGroup::from_table("x", 2, &flat, None).unwrap_err();
        assert!(matches!(err, Error::MissingInverse(_) | Error::NotLatin { .. }));
        let no_id = [1, 0, 0, 0];
        assert_eq!(FiniteGroup::from_table("x", 2, &no_id, None).unwrap_err(), Error::MissingIdentity);
    }

    #[test]
    fn non_latin_table_with_inverses() {
        // identity 0; every element squares to 0 but row 1 repeats 2.
        #[rustfmt::skip]
        let flat = [
            0, 1, 2,
            1, 0, 1,
            2, 2, 0,
        ];
        let err = FiniteGroup::from_table("x", 3, &flat, None).unwrap_err();
        assert_eq!(err, Error::NotLatin { line: "row", index: 1, element: 1 });
    }
}
