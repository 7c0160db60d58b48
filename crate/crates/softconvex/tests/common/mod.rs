//! Shared test support: a naive set-of-names model of soft sets that serves
//! as an independent oracle for the packed-bits implementation, plus fixture
//! loading helpers.
//!
//! The naive model stores each soft set as a map from parameter names to
//! element-name sets and implements every operation directly from the
//! definitions, including the fully literal structure validator that
//! enumerates every subfamily. It shares no code with the library paths it
//! checks.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use softconvex::{Document, SoftSet, Space};

pub type NaiveSoft = BTreeMap<String, BTreeSet<String>>;

pub fn to_naive(set: &SoftSet) -> NaiveSoft {
    set.to_map()
        .into_iter()
        .map(|(param, elements)| (param, elements.into_iter().collect()))
        .collect()
}

pub fn from_naive(space: &Arc<Space>, naive: &NaiveSoft) -> SoftSet {
    let assignment: BTreeMap<String, Vec<String>> = naive
        .iter()
        .map(|(param, elements)| (param.clone(), elements.iter().cloned().collect()))
        .collect();
    SoftSet::from_map(space, &assignment).expect("naive value is well formed")
}

pub fn n_union(a: &NaiveSoft, b: &NaiveSoft) -> NaiveSoft {
    a.iter()
        .map(|(param, set)| (param.clone(), set.union(&b[param]).cloned().collect()))
        .collect()
}

pub fn n_intersect(a: &NaiveSoft, b: &NaiveSoft) -> NaiveSoft {
    a.iter()
        .map(|(param, set)| (param.clone(), set.intersection(&b[param]).cloned().collect()))
        .collect()
}

pub fn n_difference(a: &NaiveSoft, b: &NaiveSoft) -> NaiveSoft {
    a.iter()
        .map(|(param, set)| (param.clone(), set.difference(&b[param]).cloned().collect()))
        .collect()
}

pub fn n_complement(universe: &[String], a: &NaiveSoft) -> NaiveSoft {
    a.iter()
        .map(|(param, set)| {
            (
                param.clone(),
                universe
                    .iter()
                    .filter(|x| !set.contains(*x))
                    .cloned()
                    .collect(),
            )
        })
        .collect()
}

pub fn n_subset(a: &NaiveSoft, b: &NaiveSoft) -> bool {
    a.iter().all(|(param, set)| set.is_subset(&b[param]))
}

pub fn n_null(universe: &[String], params: &[String]) -> NaiveSoft {
    let _ = universe;
    params
        .iter()
        .map(|param| (param.clone(), BTreeSet::new()))
        .collect()
}

pub fn n_absolute(universe: &[String], params: &[String]) -> NaiveSoft {
    params
        .iter()
        .map(|param| (param.clone(), universe.iter().cloned().collect()))
        .collect()
}

pub fn n_upward_directed(family: &[NaiveSoft]) -> bool {
    family.iter().all(|a| {
        family.iter().all(|b| {
            family
                .iter()
                .any(|c| n_subset(a, c) && n_subset(b, c))
        })
    })
}

pub fn n_downward_directed(family: &[NaiveSoft]) -> bool {
    family.iter().all(|a| {
        family.iter().all(|b| {
            family
                .iter()
                .any(|c| n_subset(c, a) && n_subset(c, b))
        })
    })
}

/// Fully literal structure validator straight from the definition: the null
/// and absolute soft sets are members, the intersection of every subfamily
/// is a member, and the union of every upward directed subfamily is a
/// member. Enumerates all `2^n` subfamilies; for test-sized families only.
pub fn n_validate_structure(
    universe: &[String],
    params: &[String],
    family: &[NaiveSoft],
) -> bool {
    let contains = |candidate: &NaiveSoft| family.iter().any(|m| m == candidate);
    if !contains(&n_null(universe, params)) || !contains(&n_absolute(universe, params)) {
        return false;
    }
    assert!(family.len() <= 16, "naive validator is exponential");
    for mask in 0u32..1 << family.len() {
        let chosen: Vec<&NaiveSoft> = family
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, m)| m)
            .collect();
        if !chosen.is_empty() {
            let meet = chosen
                .iter()
                .skip(1)
                .fold((*chosen[0]).clone(), |acc, m| n_intersect(&acc, m));
            if !contains(&meet) {
                return false;
            }
        }
        let owned: Vec<NaiveSoft> = chosen.iter().map(|m| (*m).clone()).collect();
        if n_upward_directed(&owned) {
            let join = owned
                .iter()
                .fold(n_null(universe, params), |acc, m| n_union(&acc, m));
            if !contains(&join) {
                return false;
            }
        }
    }
    true
}

/// Naive hull: intersect every family member that contains the target.
pub fn n_hull(
    universe: &[String],
    params: &[String],
    family: &[NaiveSoft],
    target: &NaiveSoft,
) -> NaiveSoft {
    family
        .iter()
        .filter(|m| n_subset(target, m))
        .fold(n_absolute(universe, params), |acc, m| n_intersect(&acc, m))
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("cannot read {path}: {e}"))
}

pub fn section3() -> Document {
    Document::parse(&fixture("section3.json")).expect("fixture parses")
}

pub fn section3_space() -> Arc<Space> {
    Arc::clone(section3().space())
}
