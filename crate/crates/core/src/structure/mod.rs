//! Minimal left ideals and maximal subgroups of `λ(X)`: from 2-cogroup data
//! (structural), from the full multiplication table (brute), and the
//! comparison of the two.

mod census;
mod lambda;
mod table;
mod types;

pub use census::{
    build_projection_idempotent, certify_min_left_ideal, min_ideal_membership, CertifiedIdeal, MembershipVerdict,
    ProjectionIdempotent, TwinCensus, CERTIFICATE_WORK_CAP,
};
pub use lambda::{lambda_table, LambdaTable, MAX_BRUTE_ORDER};
pub use table::{small_group_table, PublishedRow, TableRow, PUBLISHED_TABLE};
pub use types::{classify_group, Factor, GroupType, IdealType};

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, MAX_PIPELINE_ORDER};
use crate::semigroup::{
    minimal_ideal, minimal_left_ideal, rees_decompose, semigroup_isomorphic, FiniteSemigroup, IsoVerdict,
    ReesDecomposition,
};
use crate::setfam::{EnumBudget, PowerSet};
use crate::twin::{cogroup_orbits, twin_sets_for, CharType};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Where a report's numbers come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Provenance {
    #[serde(rename = "structural")]
    Structural,
    #[serde(rename = "brute")]
    Brute,
    #[serde(rename = "both+agree")]
    BothAgree,
    #[serde(rename = "both+disagree")]
    BothDisagree,
}

/// Contribution of one selected maximal 2-cogroup to the left-zero exponent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MSummand {
    /// Hex mask of the representative.
    #[serde(rename = "K")]
    pub k: String,
    /// `|[T_K]|`, the number of `H(K)`-orbits of `T_K`.
    #[serde(rename = "orbit_size_T")]
    pub orbit_size_t: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitEvidence {
    #[serde(rename = "K")]
    pub k: String,
    pub elements: Vec<usize>,
    /// Size of the conjugacy class of `K`.
    pub conjugates: usize,
    /// `|X / K±|`
    pub index_pm: usize,
    pub characteristic: CharType,
    /// `|T_K| = 2^{|X/K±|}`
    pub twin_sets: u64,
    /// `|[T_K]|`
    pub twin_orbits: u64,
    /// Smallest-first transversal of the cosets `K± x` used to build `T_K`.
    pub transversal: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub group: String,
    pub q: BTreeMap<CharType, usize>,
    pub m: u32,
    pub m_summands: Vec<MSummand>,
    pub min_left_ideal: IdealType,
    pub max_subgroup: GroupType,
    pub idempotents: u64,
    pub provenance: Provenance,
    pub notes: Vec<String>,
    #[serde(default)]
    pub per_orbit: Vec<OrbitEvidence>,
}

impl StructureReport {
    /// Internal consistency: `idempotents = 2^m`, the maximal subgroup is
    /// the ideal type without its left-zero factor, and `m` is the sum of
    /// its summands when they are present.
    pub fn check(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Violation(format!("report for {}: {m}", self.group)));
        if self.m >= 64 || self.idempotents != 1u64 << self.m {
            return fail(format!("{} idempotents with m = {}", self.idempotents, self.m));
        }
        if self.min_left_ideal.left_zeros != self.idempotents {
            return fail("left-zero factor differs from the idempotent count".into());
        }
        if self.min_left_ideal.group != self.max_subgroup {
            return fail("maximal subgroup differs from the group part of the left ideal".into());
        }
        if !self.m_summands.is_empty() {
            let mut sum = 0;
            for s in &self.m_summands {
                if !s.orbit_size_t.is_power_of_two() {
                    return fail(format!("|[T_K]| = {} is not a power of two", s.orbit_size_t));
                }
                sum += s.orbit_size_t.trailing_zeros();
            }
            if sum != self.m {
                return fail(format!("summands add to {sum}, m = {}", self.m));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<StructureReport> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Minimal left ideal type from the conjugacy classes of maximal 2-cogroups:
/// one factor `H(K) × [T_K]` per class.
pub fn analyze_structural(g: &FiniteGroup) -> Result<StructureReport> {
    let n = g.order();
    if n > MAX_PIPELINE_ORDER {
        return Err(Error::SizeCap { what: "structural analysis", order: n, cap: MAX_PIPELINE_ORDER });
    }
    let mut q = BTreeMap::new();
    let mut m = 0u32;
    let mut m_summands = Vec::new();
    let mut per_orbit = Vec::new();
    let mut group = GroupType::trivial();
    for o in cogroup_orbits(g)? {
        let k = o.representative;
        let fam = twin_sets_for(g, &k)?;
        let r = fam.orbit_count() as u64;
        if !r.is_power_of_two() {
            return Err(Error::Violation(format!("|[T_K]| = {r} for K = {}", k.members)));
        }
        m += r.trailing_zeros();
        *q.entry(o.characteristic).or_insert(0) += 1;
        group.push(o.characteristic.into(), 1);
        m_summands.push(MSummand { k: k.members.to_hex(), orbit_size_t: r });
        per_orbit.push(OrbitEvidence {
            k: k.members.to_hex(),
            elements: k.members.iter().collect(),
            conjugates: o.members.len(),
            index_pm: k.index_pm(g),
            characteristic: o.characteristic,
            twin_sets: fam.sets.len() as u64,
            twin_orbits: r,
            transversal: fam.transversal.clone(),
        });
    }
    if m >= 64 {
        return Err(Error::SizeCap { what: "left-zero exponent", order: m as usize, cap: 63 });
    }
    let report = StructureReport {
        group: g.label().to_string(),
        q,
        m,
        m_summands,
        min_left_ideal: IdealType::new(1 << m, group.clone()),
        max_subgroup: group,
        idempotents: 1 << m,
        provenance: Provenance::Structural,
        notes: Vec::new(),
        per_orbit,
    };
    report.check()?;
    Ok(report)
}

/// Result of tabulating `λ(X)` outright.
#[derive(Debug)]
pub struct BruteAnalysis {
    pub report: StructureReport,
    pub lambda: LambdaTable,
    /// Sorted element indices of one minimal left ideal.
    pub min_left_ideal: Vec<u32>,
    pub rees: ReesDecomposition,
    pub min_ideal_size: usize,
}

pub fn analyze_brute(g: &FiniteGroup, budget: EnumBudget) -> Result<BruteAnalysis> {
    let ps = PowerSet::new(g.clone())?;
    let lambda = lambda_table(&ps, budget)?;
    let s = &lambda.semigroup;
    let l = minimal_left_ideal(s);
    let rees = rees_decompose(s, &l)?;
    let min_ideal_size = minimal_ideal(s).len();
    let group = classify_group(&rees.group).ok_or_else(|| {
        Error::Violation(format!(
            "maximal subgroup of order {} is not a product of C and Q factors",
            rees.group.order()
        ))
    })?;
    let lz = rees.left_zero_count as u64;
    if !lz.is_power_of_two() {
        return Err(Error::Violation(format!("{lz} idempotents in a minimal left ideal")));
    }
    let report = StructureReport {
        group: g.label().to_string(),
        q: BTreeMap::new(),
        m: lz.trailing_zeros(),
        m_summands: Vec::new(),
        min_left_ideal: IdealType::new(lz, group.clone()),
        max_subgroup: group,
        idempotents: lz,
        provenance: Provenance::Brute,
        notes: vec![format!(
            "|λ(X)| = {}, |K(λ(X))| = {}, {} minimal left ideals of size {}",
            lambda.elements.len(),
            min_ideal_size,
            min_ideal_size / l.len(),
            l.len()
        )],
        per_orbit: Vec::new(),
    };
    report.check()?;
    Ok(BruteAnalysis { report, lambda, min_left_ideal: l, rees, min_ideal_size })
}

/// Outcome of an explicit isomorphism search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Certified {
    Yes,
    No,
    Indeterminate,
}

impl From<&IsoVerdict> for Certified {
    fn from(v: &IsoVerdict) -> Certified {
        match v {
            IsoVerdict::Yes(_) => Certified::Yes,
            IsoVerdict::No => Certified::No,
            IsoVerdict::Indeterminate => Certified::Indeterminate,
        }
    }
}

/// Node budget for isomorphism searches against the structural model.
pub const ISO_BUDGET: u64 = 1 << 22;

/// `Z × ∏ H(K)` for a report's type, with `Z` left zeros.
pub fn model_semigroup(t: &IdealType) -> Result<FiniteSemigroup> {
    FiniteSemigroup::left_zero_times_group(t.left_zeros as usize, &t.group.build()?)
}

#[derive(Debug)]
pub struct CrossCheck {
    pub structural: StructureReport,
    pub brute: StructureReport,
    pub types_agree: bool,
    pub isomorphism: Certified,
}

impl CrossCheck {
    pub fn agree(&self) -> bool {
        self.types_agree && self.isomorphism == Certified::Yes
    }

    /// The structural report stamped with the comparison result.
    pub fn combined(&self) -> StructureReport {
        let mut r = self.structural.clone();
        r.provenance = if self.agree() { Provenance::BothAgree } else { Provenance::BothDisagree };
        r.notes.extend(self.brute.notes.iter().cloned());
        if !self.agree() {
            r.notes.push(format!(
                "brute path found {} (isomorphism search: {:?})",
                self.brute.min_left_ideal, self.isomorphism
            ));
        }
        r
    }
}

/// Both analyses plus an isomorphism search between the tabulated minimal
/// left ideal and `2^m × ∏ H(K)` built from the structural type.
pub fn cross_check(g: &FiniteGroup, budget: EnumBudget) -> Result<CrossCheck> {
    let structural = analyze_structural(g)?;
    let brute = analyze_brute(g, budget)?;
    let l = brute.lambda.semigroup.restrict(&brute.min_left_ideal)?;
    let model = model_semigroup(&structural.min_left_ideal)?;
    let iso = semigroup_isomorphic(&l, &model, ISO_BUDGET)?;
    Ok(CrossCheck {
        types_agree: structural.min_left_ideal == brute.report.min_left_ideal,
        isomorphism: (&iso).into(),
        structural,
        brute: brute.report,
    })
}

/// A minimal left ideal listed and checked element by element, compared
/// with the structural type.
#[derive(Debug)]
pub struct Certificate {
    pub size: usize,
    pub ideal_type: Option<IdealType>,
    pub types_agree: bool,
    pub isomorphism: Certified,
}

pub fn certify(g: &FiniteGroup, structural: &StructureReport, seed: u64) -> Result<Certificate> {
    let ps = PowerSet::new(g.clone())?;
    let census = TwinCensus::new(&ps)?;
    let e = build_projection_idempotent(&ps, &census)?;
    let cert = certify_min_left_ideal(&ps, &census, &e, seed)?;
    let model = model_semigroup(&structural.min_left_ideal)?;
    let iso = semigroup_isomorphic(&cert.semigroup, &model, ISO_BUDGET)?;
    Ok(Certificate {
        size: cert.elements.len(),
        types_agree: cert.ideal_type.as_ref() == Some(&structural.min_left_ideal),
        ideal_type: cert.ideal_type,
        isomorphism: (&iso).into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    #[test]
    fn structural_c8_and_q8() {
        let r = analyze_structural(&parse_spec("C8").unwrap()).unwrap();
        assert_eq!(r.min_left_ideal.to_string(), "2 x C2 x C4 x C8");
        let r = analyze_structural(&parse_spec("Q8").unwrap()).unwrap();
        assert_eq!(r.min_left_ideal.to_string(), "2 x C2^3 x Q8");
        assert_eq!(r.idempotents, 2);
    }

    #[test]
    fn report_json_round_trip() {
        let r = analyze_structural(&parse_spec("C2xC4").unwrap()).unwrap();
        let back = StructureReport::from_json(&r.to_json().unwrap()).unwrap();
        assert_eq!(back, r);
        let v: serde_json::Value = serde_json::from_str(&r.to_json().unwrap()).unwrap();
        assert_eq!(v["q"]["C2"], 3);
        assert_eq!(v["q"]["C4"], 2);
        assert_eq!(v["provenance"], "structural");
    }

    #[test]
    fn cross_check_c4() {
        let c = cross_check(&parse_spec("C4").unwrap(), EnumBudget::unlimited()).unwrap();
        assert!(c.agree(), "{c:?}");
        assert_eq!(c.combined().provenance, Provenance::BothAgree);
    }
}
