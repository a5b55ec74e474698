//! Browser bindings. Each operation has a plain Rust form returning JSON so
//! it can be tested natively; the `#[wasm_bindgen]` wrappers only pass
//! strings across.

use serde_json::{json, Value};
use superext::group::MAX_PIPELINE_ORDER;
use superext::setfam::{for_each_mls, EnumBudget, PairOrder};
use superext::spec::parse_spec;
use superext::structure::{analyze_structural, cross_check, MAX_BRUTE_ORDER};
use superext::twin::{cogroup_orbits, twin_sets_for};
use superext::{Error, PowerSet, Result};
use wasm_bindgen::prelude::*;

/// Largest order the demo enumerates or tabulates; λ(C6) takes a few
/// seconds in a browser, beyond that the page would hang.
pub const DEMO_BRUTE_ORDER: usize = MAX_BRUTE_ORDER;

fn error_json(e: &Error) -> String {
    json!({ "error": e.to_string() }).to_string()
}

/// Structural report, plus the brute-force cross-check when asked and the
/// group is small enough.
pub fn analyze_json(spec: &str, brute: bool) -> Result<Value> {
    let g = parse_spec(spec)?;
    let report = if brute && g.order() <= DEMO_BRUTE_ORDER {
        cross_check(&g, EnumBudget::unlimited())?.combined()
    } else {
        analyze_structural(&g)?
    };
    Ok(serde_json::to_value(report)?)
}

pub fn mls_count_json(spec: &str) -> Result<Value> {
    let g = parse_spec(spec)?;
    if g.order() > DEMO_BRUTE_ORDER {
        return Err(Error::SizeCap { what: "demo enumeration", order: g.order(), cap: DEMO_BRUTE_ORDER });
    }
    let ps = PowerSet::new(g)?;
    let mut minimal = Vec::new();
    let count = for_each_mls(&ps, PairOrder::BySize, EnumBudget::unlimited(), |s| {
        if minimal.len() < 12 {
            minimal.push(s.minimal_members().iter().map(|&a| ps.group().describe(a)).collect::<Vec<_>>());
        }
    })?;
    Ok(json!({ "order": ps.n(), "count": count, "first": minimal }))
}

/// Cayley table and, for each class of maximal 2-cogroups, the twin sets
/// `T_K` grouped by orbit.
pub fn twin_view_json(spec: &str) -> Result<Value> {
    let g = parse_spec(spec)?;
    if g.order() > MAX_PIPELINE_ORDER {
        return Err(Error::SizeCap { what: "twin view", order: g.order(), cap: MAX_PIPELINE_ORDER });
    }
    let mut classes = Vec::new();
    for o in cogroup_orbits(&g)? {
        let k = o.representative;
        let fam = twin_sets_for(&g, &k)?;
        let orbits: Vec<Vec<String>> =
            fam.orbits.iter().map(|orb| orb.iter().map(|&i| g.describe(fam.sets[i])).collect()).collect();
        classes.push(json!({
            "K": g.describe(k.members),
            "conjugates": o.members.len(),
            "characteristic": o.characteristic.to_string(),
            "orbits": orbits,
        }));
    }
    Ok(json!({
        "names": g.names(),
        "table": g.table_rows(),
        "classes": classes,
    }))
}

fn to_js(r: Result<Value>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => error_json(&e),
    }
}

#[wasm_bindgen]
pub fn analyze(spec: &str, brute: bool) -> String {
    to_js(analyze_json(spec, brute))
}

#[wasm_bindgen]
pub fn mls_count(spec: &str) -> String {
    to_js(mls_count_json(spec))
}

#[wasm_bindgen]
pub fn twin_view(spec: &str) -> String {
    to_js(twin_view_json(spec))
}
