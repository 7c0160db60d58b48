//! Exhaustive enumeration and independent brute-force verification.
//!
//! On tiny spaces every soft set and every candidate family can be listed
//! outright, so the axioms and theorems are decidable by scan: enumerate all
//! soft sets, enumerate all families passing the structure validator, and
//! re-check every law on every instance. The canonical workload is the
//! full scan of all 65,536 families on the two-element, two-parameter space;
//! larger spaces fall back to a deterministic generator that closes seeded
//! families into structures.
//!
//! Scans run over canonical indices (membership bitmasks), but every
//! structure, hull table, and witness that a check consumes is produced by
//! the public API, so the suite exercises the real implementation rather
//! than a private shadow of it.
//!
//! Candidate families are independent, so the filter scan partitions its
//! index range across threads and merges the partial results in index order,
//! keeping reports byte-identical for identical budgets.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::bases::{structure_from_cbase, validate_cbase, SoftConvexBase};
use crate::convexity::{close_to_structure, validate_structure, SoftConvexStructure};
use crate::error::{Error, Result};
use crate::family::SoftFamily;
use crate::masks;
use crate::morphisms::{
    check_scc_equivalence_pooled, check_scp_equivalence_pooled, is_sbp, is_scc, is_scp, is_sdp,
    SoftFunctionMap,
};
use crate::operators::{
    hull_from_cderived, structure_from_cderived, structure_from_hull_operator,
    validate_cderived_operator, validate_hull_operator, OperatorTable,
};
use crate::report::CheckMode;
use crate::soft_set::SoftSet;
use crate::space::Space;

/// Fixed default seed, so reports are reproducible without configuration.
pub const DEFAULT_SEED: u64 = 0x5EED_50F7_5E75_0001;

/// Hard ceiling for single-space soft-set enumeration: `|X|*|E| <= 12`.
pub const MAX_ENUMERATION_BITS: usize = 12;

/// Size and effort limits for enumeration and law scans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest universe the oracle will build.
    pub max_universe: usize,
    /// Largest parameter list the oracle will build.
    pub max_parameters: usize,
    /// Full-family filter scans run only while `2^(|X|*|E|)` soft sets stay
    /// within this bound; beyond it the generator strategy takes over.
    pub max_family_bits: usize,
    /// Size cap for literal directed-subfamily scans.
    pub subfamily_cap: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget {
            max_universe: 3,
            max_parameters: 2,
            max_family_bits: 16,
            subfamily_cap: 5,
        }
    }
}

impl EnumerationBudget {
    fn ensure_positive(&self) -> Result<()> {
        if self.max_universe == 0
            || self.max_parameters == 0
            || self.max_family_bits == 0
            || self.subfamily_cap == 0
        {
            return Err(Error::BudgetExceeded(
                "all budget fields must be positive".to_string(),
            ));
        }
        Ok(())
    }

    fn ensure_space(&self, space: &Space) -> Result<()> {
        self.ensure_positive()?;
        if space.element_count() > self.max_universe {
            return Err(Error::BudgetExceeded(format!(
                "universe has {} elements, budget allows {}",
                space.element_count(),
                self.max_universe
            )));
        }
        if space.parameter_count() > self.max_parameters {
            return Err(Error::BudgetExceeded(format!(
                "parameter list has {} entries, budget allows {}",
                space.parameter_count(),
                self.max_parameters
            )));
        }
        Ok(())
    }
}

/// All `2^(|X|*|E|)` soft sets of the space in canonical binary-counting
/// order: the null soft set first, the absolute soft set last.
pub fn enumerate_soft_sets(space: &Arc<Space>) -> Result<Vec<SoftSet>> {
    let bits = space.bit_count();
    if bits > MAX_ENUMERATION_BITS {
        return Err(Error::BudgetExceeded(format!(
            "soft-set enumeration needs |X|*|E| <= {MAX_ENUMERATION_BITS}, space has {bits} bits"
        )));
    }
    (0..1u64 << bits)
        .map(|i| SoftSet::from_canonical_index(space, i))
        .collect()
}

/// Every soft convex structure on the space, by full family scan when the
/// soft-set count fits the budget's filter bound, otherwise a deterministic
/// sample generated by closing seeded families. Structures come back in a
/// fixed order; the minimal structure `{Φ_E, X_E}` always appears.
pub fn enumerate_structures(
    space: &Arc<Space>,
    budget: &EnumerationBudget,
) -> Result<Vec<SoftConvexStructure>> {
    enumerate_structures_seeded(space, budget, DEFAULT_SEED)
}

pub fn enumerate_structures_seeded(
    space: &Arc<Space>,
    budget: &EnumerationBudget,
    seed: u64,
) -> Result<Vec<SoftConvexStructure>> {
    budget.ensure_space(space)?;
    let bits = space.bit_count();
    let n_sets = 1usize << bits;
    if n_sets <= budget.max_family_bits && n_sets <= 16 {
        filter_scan(space)
    } else {
        generator_scan(space, seed)
    }
}

/// Full scan over every family of soft sets, keeping the ones the validator
/// accepts. The mask-plane test mirrors the fast validator (null and absolute
/// membership plus pairwise-intersection closure); every survivor is then
/// rebuilt and re-validated through the public constructor.
fn filter_scan(space: &Arc<Space>) -> Result<Vec<SoftConvexStructure>> {
    let bits = space.bit_count();
    let n_sets = 1usize << bits;
    let total: u64 = 1u64 << n_sets;
    let sets = enumerate_soft_sets(space)?;

    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8);
    let chunk = total.div_ceil(workers as u64);
    let mut passing: Vec<u64> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|w| {
                scope.spawn(move || {
                    let lo = w * chunk;
                    let hi = ((w + 1) * chunk).min(total);
                    let mut found = Vec::new();
                    for fam in lo..hi {
                        if family_mask_is_structure(fam, n_sets) {
                            found.push(fam);
                        }
                    }
                    found
                })
            })
            .collect();
        for handle in handles {
            passing.extend(handle.join().expect("scan worker panicked"));
        }
    });

    passing
        .into_iter()
        .map(|fam| {
            let members = (0..n_sets).filter(|i| fam >> i & 1 == 1).map(|i| sets[i].clone());
            let family = SoftFamily::new(space, members)?;
            SoftConvexStructure::new(family)
        })
        .collect()
}

/// Mask-plane mirror of the fast validator: canonical indices are membership
/// bitmasks, so index intersection is bitwise AND.
fn family_mask_is_structure(fam: u64, n_sets: usize) -> bool {
    if fam & 1 == 0 || fam >> (n_sets - 1) & 1 == 0 {
        return false;
    }
    let mut rest = fam;
    while rest != 0 {
        let i = rest.trailing_zeros() as u64;
        rest &= rest - 1;
        let mut others = rest;
        while others != 0 {
            let j = others.trailing_zeros() as u64;
            others &= others - 1;
            if fam >> (i & j) & 1 == 0 {
                return false;
            }
        }
    }
    true
}

/// Deterministic sample of structures: the closure of the empty family plus
/// closures of seeded random families, deduplicated and sorted.
fn generator_scan(space: &Arc<Space>, seed: u64) -> Result<Vec<SoftConvexStructure>> {
    let bits = space.bit_count();
    if bits > MAX_ENUMERATION_BITS {
        return Err(Error::BudgetExceeded(format!(
            "generator strategy needs |X|*|E| <= {MAX_ENUMERATION_BITS}, space has {bits} bits"
        )));
    }
    const GENERATOR_SEED_FAMILIES: usize = 60;
    let n_sets = 1u64 << bits;
    let mut rng = SplitMix64::new(seed);
    let mut families: Vec<SoftFamily> = vec![SoftFamily::empty(space)];
    for _ in 0..GENERATOR_SEED_FAMILIES {
        let size = (rng.next() % 5 + 1) as usize;
        let members: Result<Vec<SoftSet>> = (0..size)
            .map(|_| SoftSet::from_canonical_index(space, rng.next() % n_sets))
            .collect();
        families.push(SoftFamily::new(space, members?)?);
    }
    let mut closed: Vec<SoftConvexStructure> =
        families.iter().map(close_to_structure).collect();
    closed.sort_by_key(structure_sort_key);
    closed.dedup();
    Ok(closed)
}

fn structure_sort_key(s: &SoftConvexStructure) -> (usize, Vec<u64>) {
    (
        s.len(),
        s.members()
            .iter()
            .map(|m| m.canonical_index().expect("generator spaces are small"))
            .collect(),
    )
}

/// One line of a [`SuiteReport`]: how many instances a check covered and the
/// first failure, if any.
#[derive(Clone, Debug)]
pub struct SuiteSection {
    pub name: String,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl SuiteSection {
    fn new(name: &str) -> SuiteSection {
        SuiteSection {
            name: name.to_string(),
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Deterministic report of a verification run: per-section pass/fail tallies
/// plus named counts (structure totals and the like).
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub label: String,
    pub sections: Vec<SuiteSection>,
    pub counts: BTreeMap<String, u64>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(SuiteSection::passed)
    }

    pub fn total_failures(&self) -> u64 {
        self.sections.iter().map(|s| s.failures).sum()
    }

    fn merge(&mut self, other: SuiteReport) {
        self.sections.extend(other.sections);
        for (k, v) in other.counts {
            self.counts.insert(k, v);
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {}", self.label)?;
        for (name, value) in &self.counts {
            writeln!(f, "count {name}: {value}")?;
        }
        for s in &self.sections {
            write!(
                f,
                "section {}: checked={} failures={}",
                s.name, s.checked, s.failures
            )?;
            if let Some(w) = &s.first_failure {
                write!(f, " first-failure: {w}")?;
            }
            writeln!(f)?;
        }
        writeln!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Index-plane view of one structure, with the hull table produced by the
/// public hull implementation.
struct StructureTables {
    member: Vec<bool>,
    hull: Vec<u64>,
}

impl StructureTables {
    fn build(structure: &SoftConvexStructure, sets: &[SoftSet]) -> Result<StructureTables> {
        let mut member = vec![false; sets.len()];
        for m in structure.members() {
            member[m.canonical_index().expect("enumerable space") as usize] = true;
        }
        let mut hull = Vec::with_capacity(sets.len());
        for s in sets {
            hull.push(
                structure
                    .hull(s)?
                    .canonical_index()
                    .expect("enumerable space"),
            );
        }
        Ok(StructureTables { member, hull })
    }
}

/// Runs the full law suite on every enumerated structure of the space:
/// slice transport, the six hull laws, the hull-operator fixpoint round
/// trip, the derived-operator laws and round trip, the base round trip,
/// concavity laws, the pointwise-hull bound, fast/literal mode agreement,
/// and the morphism theorems over endofunctions of the space.
pub fn verify_suite(space: &Arc<Space>, budget: &EnumerationBudget) -> Result<SuiteReport> {
    verify_suite_seeded(space, budget, DEFAULT_SEED)
}

pub fn verify_suite_seeded(
    space: &Arc<Space>,
    budget: &EnumerationBudget,
    seed: u64,
) -> Result<SuiteReport> {
    budget.ensure_space(space)?;
    let sets = enumerate_soft_sets(space)?;
    let structures = enumerate_structures_seeded(space, budget, seed)?;
    let cap = budget.subfamily_cap;

    let mut report = SuiteReport {
        label: format!(
            "{}x{} space, {} structures",
            space.element_count(),
            space.parameter_count(),
            structures.len()
        ),
        sections: Vec::new(),
        counts: BTreeMap::new(),
    };
    report
        .counts
        .insert("soft-sets".to_string(), sets.len() as u64);
    report
        .counts
        .insert("structures".to_string(), structures.len() as u64);

    // Directed subfamilies for the literal hull-law check. On spaces small
    // enough for the canonical workload the pool is every soft set; beyond
    // that the capped scan draws from each structure's members (the down-set
    // families checked alongside still range over arbitrary soft sets).
    let full_pool = sets.len() <= 16;
    let indices: Vec<u64> = (0..sets.len() as u64).collect();
    let directed = if full_pool {
        masks::directed_subsets(&indices, cap)
    } else {
        Vec::new()
    };

    let mut slice_transport = SuiteSection::new("slice-transport");
    let mut hull_laws = SuiteSection::new("hull-laws");
    let mut hull_roundtrip = SuiteSection::new("hull-operator-roundtrip");
    let mut cderived = SuiteSection::new("cderived-roundtrip");
    let mut base_roundtrip = SuiteSection::new("base-roundtrip");
    let mut concavity = SuiteSection::new("concavity-laws");
    let mut pointwise = SuiteSection::new("pointwise-hull");
    let mut mode_agreement = SuiteSection::new("mode-agreement");

    for structure in &structures {
        let tables = StructureTables::build(structure, &sets)?;
        let member_directed;
        let law5_pool = if full_pool {
            &directed
        } else {
            let members: Vec<u64> = structure
                .members()
                .iter()
                .map(|m| m.canonical_index().expect("enumerable space"))
                .collect();
            member_directed = masks::directed_subsets(&members, cap);
            &member_directed
        };
        check_slice_transport(structure, &mut slice_transport)?;
        check_hull_laws(structure, &sets, &tables, law5_pool, &mut hull_laws)?;
        check_hull_operator_roundtrip(structure, &mut hull_roundtrip)?;
        check_cderived_roundtrip(structure, &sets, &mut cderived)?;
        check_base_roundtrip(structure, &mut base_roundtrip)?;
        check_concavity(&sets, &tables, cap, &mut concavity);
        check_pointwise(structure, &sets, &tables, &mut pointwise)?;
        check_mode_agreement(structure, cap, &mut mode_agreement)?;
    }

    report.sections.extend([
        slice_transport,
        hull_laws,
        hull_roundtrip,
        cderived,
        base_roundtrip,
        concavity,
        pointwise,
        mode_agreement,
    ]);

    // Morphism theorems over endofunctions, on spaces small enough for the
    // equivalence checks' full directed-family scans.
    if full_pool {
        let morphisms = verify_morphisms(space, space, space, budget, 200, seed)?;
        report.merge(morphisms);
    }
    Ok(report)
}

fn check_slice_transport(structure: &SoftConvexStructure, section: &mut SuiteSection) -> Result<()> {
    for param in structure.space().parameters() {
        let ok = structure.slice(param).is_ok();
        section.check(ok, || format!("slice at {param} fails crisp validation"));
    }
    Ok(())
}

fn check_hull_laws(
    structure: &SoftConvexStructure,
    sets: &[SoftSet],
    tables: &StructureTables,
    directed: &[(Vec<u64>, u64)],
    section: &mut SuiteSection,
) -> Result<()> {
    let hull = &tables.hull;
    // (1) normalization
    section.check(hull[0] == 0, || "hull of the null soft set is not null".into());
    for (i, &h) in hull.iter().enumerate() {
        let i_mask = i as u64;
        // (2) extensivity
        section.check(masks::subset(i_mask, h), || {
            format!("hull is not extensive at {}", sets[i])
        });
        // (4) idempotence
        section.check(hull[h as usize] == h, || {
            format!("hull is not idempotent at {}", sets[i])
        });
        // (6) fixpoints are exactly the members
        section.check(tables.member[i] == (h == i_mask), || {
            format!("fixpoint/membership mismatch at {}", sets[i])
        });
        // (3) monotonicity along single-bit extensions
        for b in 0..structure.space().bit_count() {
            if i_mask >> b & 1 == 0 {
                let bigger = (i_mask | 1 << b) as usize;
                section.check(masks::subset(h, hull[bigger]), || {
                    format!("hull is not monotone at {}", sets[i])
                });
            }
        }
    }
    // (5) directed additivity over capped directed families...
    for (sel, union) in directed {
        let lhs = hull[*union as usize];
        let rhs = sel.iter().fold(0u64, |acc, &m| acc | hull[m as usize]);
        section.check(lhs == rhs, || {
            format!("hull not directed-additive at union {}", sets[*union as usize])
        });
    }
    // ...and over the down-set family of every soft set.
    for (i, &h) in hull.iter().enumerate() {
        let omega = i as u64;
        let mut rhs = hull[0];
        let mut sub = omega;
        loop {
            rhs |= hull[sub as usize];
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & omega;
        }
        section.check(h == rhs, || {
            format!("hull not directed-additive on the down-set of {}", sets[i])
        });
    }
    Ok(())
}

fn check_hull_operator_roundtrip(
    structure: &SoftConvexStructure,
    section: &mut SuiteSection,
) -> Result<()> {
    let table = OperatorTable::tabulate_hull(structure)?;
    let report = validate_hull_operator(&table, CheckMode::Fast);
    section.check(report.is_valid(), || {
        format!("tabulated hull violates an operator law: {report}")
    });
    match structure_from_hull_operator(&table, CheckMode::Fast) {
        Ok(back) => {
            section.check(back.family() == structure.family(), || {
                "fixpoint structure differs from the source structure".into()
            });
            let retabulated = OperatorTable::tabulate_hull(&back)?;
            section.check(retabulated == table, || {
                "hull of the fixpoint structure differs from the operator".into()
            });
        }
        Err(e) => section.check(false, || format!("fixpoint construction failed: {e}")),
    }
    Ok(())
}

fn check_cderived_roundtrip(
    structure: &SoftConvexStructure,
    sets: &[SoftSet],
    section: &mut SuiteSection,
) -> Result<()> {
    let table = OperatorTable::tabulate_hull(structure)?;
    let report = validate_cderived_operator(&table, CheckMode::Fast);
    section.check(report.is_valid(), || {
        format!("hull violates a derived-operator law: {report}")
    });
    match structure_from_cderived(&table, CheckMode::Fast) {
        Ok(back) => section.check(back.family() == structure.family(), || {
            "derived structure differs from the source structure".into()
        }),
        Err(e) => section.check(false, || format!("derived construction failed: {e}")),
    }
    for s in sets {
        let via_d = hull_from_cderived(&table, s, CheckMode::Fast)?;
        let via_structure = structure.hull(s)?;
        section.check(via_d == via_structure, || {
            format!("derived hull differs from structure hull at {s}")
        });
    }
    Ok(())
}

fn check_base_roundtrip(structure: &SoftConvexStructure, section: &mut SuiteSection) -> Result<()> {
    let null = SoftSet::null(structure.space());
    let beta_family = structure.family().without(&null);
    let report = validate_cbase(&beta_family, CheckMode::Fast);
    section.check(report.is_valid(), || {
        format!("structure minus null is not a base: {report}")
    });
    let base = match SoftConvexBase::new(beta_family.clone()) {
        Ok(b) => b,
        Err(e) => {
            section.check(false, || format!("base construction failed: {e}"));
            return Ok(());
        }
    };
    match structure_from_cbase(&base) {
        Ok(generated) => {
            section.check(generated.family() == structure.family(), || {
                "generated structure differs from the source structure".into()
            });
            // Minimality: the generated family sits inside every structure
            // containing the base; the pairwise closure is one of them.
            let closed = close_to_structure(&beta_family);
            section.check(
                generated.members().iter().all(|m| closed.contains(m)),
                || "generated structure escapes the closure of its base".into(),
            );
        }
        Err(e) => section.check(false, || format!("base generation failed: {e}")),
    }
    Ok(())
}

fn check_concavity(
    sets: &[SoftSet],
    tables: &StructureTables,
    cap: usize,
    section: &mut SuiteSection,
) {
    let full = sets.len() as u64 - 1;
    let concave: Vec<u64> = (0..sets.len() as u64)
        .filter(|i| tables.member[(i ^ full) as usize])
        .collect();
    // Null and absolute soft sets are concave.
    section.check(concave.contains(&0), || "null soft set is not concave".into());
    section.check(concave.contains(&full), || {
        "absolute soft set is not concave".into()
    });
    // Unions of arbitrary subfamilies of concave sets stay concave, and
    // intersections of downward directed subfamilies stay concave.
    masks::for_each_subset(&concave, cap, &mut |sel| {
        let union = sel.iter().fold(0u64, |acc, &m| acc | m);
        section.check(tables.member[(union ^ full) as usize], || {
            format!("union of concave sets is not concave at {}", sets[union as usize])
        });
        let downward = sel
            .iter()
            .enumerate()
            .all(|(i, &a)| sel[i..].iter().all(|&b| sel.iter().any(|&c| masks::subset(c, a & b))));
        if downward {
            let meet = sel.iter().fold(full, |acc, &m| acc & m);
            section.check(tables.member[(meet ^ full) as usize], || {
                format!(
                    "directed intersection of concave sets is not concave at {}",
                    sets[meet as usize]
                )
            });
        }
        true
    });
}

fn check_pointwise(
    structure: &SoftConvexStructure,
    sets: &[SoftSet],
    tables: &StructureTables,
    section: &mut SuiteSection,
) -> Result<()> {
    for (i, s) in sets.iter().enumerate() {
        let pw = structure.pointwise_hull(s)?;
        let pw_idx = pw.canonical_index().expect("enumerable space");
        let hull_idx = tables.hull[i];
        section.check(masks::subset(pw_idx, hull_idx), || {
            format!("pointwise hull escapes the hull at {s}")
        });
        let equal = pw_idx == hull_idx;
        let member = tables.member[pw_idx as usize];
        section.check(equal == member, || {
            format!("pointwise-hull equality does not match membership at {s}")
        });
    }
    Ok(())
}

fn check_mode_agreement(
    structure: &SoftConvexStructure,
    cap: usize,
    section: &mut SuiteSection,
) -> Result<()> {
    let literal = CheckMode::Literal { cap };
    let fast_valid = validate_structure(structure.family(), CheckMode::Fast).is_valid();
    let literal_valid = validate_structure(structure.family(), literal).is_valid();
    section.check(fast_valid == literal_valid, || {
        "structure validator modes disagree".into()
    });

    let beta = structure.family().without(&SoftSet::null(structure.space()));
    let base_fast = validate_cbase(&beta, CheckMode::Fast).is_valid();
    let base_literal = validate_cbase(&beta, literal).is_valid();
    section.check(base_fast == base_literal, || {
        "base validator modes disagree".into()
    });

    // Literal operator validation enumerates directed subfamilies of every
    // soft set of the space; keep the per-structure comparison to spaces
    // where that scan is the canonical workload.
    if structure.space().bit_count() <= 4 {
        let table = OperatorTable::tabulate_hull(structure)?;
        let hull_fast = validate_hull_operator(&table, CheckMode::Fast).is_valid();
        let hull_literal = validate_hull_operator(&table, literal).is_valid();
        section.check(hull_fast == hull_literal, || {
            "hull-operator validator modes disagree".into()
        });
        let d_fast = validate_cderived_operator(&table, CheckMode::Fast).is_valid();
        let d_literal = validate_cderived_operator(&table, literal).is_valid();
        section.check(d_fast == d_literal, || {
            "derived-operator validator modes disagree".into()
        });
    }
    Ok(())
}

/// Morphism-theorem suite between three spaces sharing a parameter list:
/// the three-clause equivalences, the derived- and base-preservation
/// implications, and composition closure for all four properties. Structure
/// pairs and triples are drawn from the enumerated pools, capped at
/// `pair_cap` with a seeded deterministic shuffle.
pub fn verify_morphisms(
    space_x: &Arc<Space>,
    space_y: &Arc<Space>,
    space_z: &Arc<Space>,
    budget: &EnumerationBudget,
    pair_cap: usize,
    seed: u64,
) -> Result<SuiteReport> {
    let pool_x = enumerate_structures_seeded(space_x, budget, seed)?;
    let pool_y = enumerate_structures_seeded(space_y, budget, seed)?;
    let pool_z = enumerate_structures_seeded(space_z, budget, seed)?;
    let fns_xy = all_point_functions(space_x, space_y)?;
    let fns_yz = all_point_functions(space_y, space_z)?;
    let cap = budget.subfamily_cap;

    // Directed families for the equivalence theorems' clause (2), computed
    // once for the shared domain space.
    let bits_x = space_x.bit_count();
    if bits_x > 6 {
        return Err(Error::BudgetExceeded(format!(
            "morphism sweeps need |X|*|E| <= 6 on the domain, space has {bits_x} bits"
        )));
    }
    let indices: Vec<u64> = (0..1u64 << bits_x).collect();
    let directed_x = masks::directed_subsets(&indices, cap);

    let mut report = SuiteReport {
        label: format!(
            "morphisms {}x{} -> {}x{} -> {}x{}",
            space_x.element_count(),
            space_x.parameter_count(),
            space_y.element_count(),
            space_y.parameter_count(),
            space_z.element_count(),
            space_z.parameter_count()
        ),
        sections: Vec::new(),
        counts: BTreeMap::new(),
    };

    let pairs = sample_pairs(pool_x.len(), pool_y.len(), pair_cap, seed);
    report
        .counts
        .insert("structure-pairs".to_string(), pairs.len() as u64);
    report
        .counts
        .insert("point-functions".to_string(), fns_xy.len() as u64);

    let mut scp_eq = SuiteSection::new("theorem-scp-equivalence");
    let mut scc_eq = SuiteSection::new("theorem-scc-equivalence");
    let mut sdp_scp = SuiteSection::new("sdp-implies-scp");
    let mut sbp_scp = SuiteSection::new("sbp-implies-scp");

    for &(ix, iy) in &pairs {
        let zeta_x = &pool_x[ix];
        let zeta_y = &pool_y[iy];
        let d_x = OperatorTable::tabulate_hull(zeta_x)?;
        let d_y = OperatorTable::tabulate_hull(zeta_y)?;
        let beta_x = SoftConvexBase::new(zeta_x.family().without(&SoftSet::null(space_x)))?;
        let beta_y = SoftConvexBase::new(zeta_y.family().without(&SoftSet::null(space_y)))?;
        for f in &fns_xy {
            let scp_report = check_scp_equivalence_pooled(f, zeta_x, zeta_y, &directed_x)?;
            scp_eq.check(scp_report.agree(), || {
                format!(
                    "clauses disagree ({}, {}, {}) at {:?}",
                    scp_report.membership,
                    scp_report.directed_bound,
                    scp_report.hull_bound,
                    scp_report.witness
                )
            });
            let scc_report = check_scc_equivalence_pooled(f, zeta_x, zeta_y, &directed_x)?;
            scc_eq.check(scc_report.agree(), || {
                format!(
                    "clauses disagree ({}, {}, {}) at {:?}",
                    scc_report.membership,
                    scc_report.directed_bound,
                    scc_report.hull_bound,
                    scc_report.witness
                )
            });
            if is_sdp(f, &d_x, &d_y)?.holds {
                sdp_scp.check(is_scp(f, zeta_x, zeta_y)?.holds, || {
                    "SDP holds but SCP fails on the induced structures".into()
                });
            } else {
                sdp_scp.checked += 1;
            }
            if is_sbp(f, &beta_x, &beta_y)?.holds {
                sbp_scp.check(is_scp(f, zeta_x, zeta_y)?.holds, || {
                    "SBP holds but SCP fails on the generated structures".into()
                });
            } else {
                sbp_scp.checked += 1;
            }
        }
    }

    // Composition closure over sampled structure triples.
    let triples = sample_triples(pool_x.len(), pool_y.len(), pool_z.len(), pair_cap, seed);
    report
        .counts
        .insert("structure-triples".to_string(), triples.len() as u64);
    let mut comp_scp = SuiteSection::new("composition-scp");
    let mut comp_scc = SuiteSection::new("composition-scc");
    let mut comp_sdp = SuiteSection::new("composition-sdp");
    let mut comp_sbp = SuiteSection::new("composition-sbp");

    for &(ix, iy, iz) in &triples {
        let zeta_x = &pool_x[ix];
        let zeta_y = &pool_y[iy];
        let zeta_z = &pool_z[iz];
        let d_x = OperatorTable::tabulate_hull(zeta_x)?;
        let d_y = OperatorTable::tabulate_hull(zeta_y)?;
        let d_z = OperatorTable::tabulate_hull(zeta_z)?;
        let beta_x = SoftConvexBase::new(zeta_x.family().without(&SoftSet::null(space_x)))?;
        let beta_y = SoftConvexBase::new(zeta_y.family().without(&SoftSet::null(space_y)))?;
        let beta_z = SoftConvexBase::new(zeta_z.family().without(&SoftSet::null(space_z)))?;
        for f in &fns_xy {
            for g in &fns_yz {
                let gf = SoftFunctionMap::compose(g, f)?;
                if is_scp(f, zeta_x, zeta_y)?.holds && is_scp(g, zeta_y, zeta_z)?.holds {
                    comp_scp.check(is_scp(&gf, zeta_x, zeta_z)?.holds, || {
                        "composition of SCP maps is not SCP".into()
                    });
                } else {
                    comp_scp.checked += 1;
                }
                if is_scc(f, zeta_x, zeta_y)?.holds && is_scc(g, zeta_y, zeta_z)?.holds {
                    comp_scc.check(is_scc(&gf, zeta_x, zeta_z)?.holds, || {
                        "composition of SCC maps is not SCC".into()
                    });
                } else {
                    comp_scc.checked += 1;
                }
                if is_sdp(f, &d_x, &d_y)?.holds && is_sdp(g, &d_y, &d_z)?.holds {
                    comp_sdp.check(is_sdp(&gf, &d_x, &d_z)?.holds, || {
                        "composition of SDP maps is not SDP".into()
                    });
                } else {
                    comp_sdp.checked += 1;
                }
                if is_sbp(f, &beta_x, &beta_y)?.holds && is_sbp(g, &beta_y, &beta_z)?.holds {
                    comp_sbp.check(is_sbp(&gf, &beta_x, &beta_z)?.holds, || {
                        "composition of SBP maps is not SBP".into()
                    });
                } else {
                    comp_sbp.checked += 1;
                }
            }
        }
    }

    report.sections.extend([
        scp_eq, scc_eq, sdp_scp, sbp_scp, comp_scp, comp_scc, comp_sdp, comp_sbp,
    ]);
    Ok(report)
}

/// All total point functions from `x`'s universe to `y`'s, in lexicographic
/// order of their position maps.
pub fn all_point_functions(x: &Arc<Space>, y: &Arc<Space>) -> Result<Vec<SoftFunctionMap>> {
    let nx = x.element_count();
    let ny = y.element_count();
    let total = (ny as u64).checked_pow(nx as u32).ok_or_else(|| {
        Error::BudgetExceeded("too many point functions to enumerate".to_string())
    })?;
    if total > 1 << 20 {
        return Err(Error::BudgetExceeded(format!(
            "{total} point functions exceed the enumeration bound"
        )));
    }
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut map = Vec::with_capacity(nx);
        let mut rest = code;
        for _ in 0..nx {
            map.push((rest % ny as u64) as usize);
            rest /= ny as u64;
        }
        out.push(SoftFunctionMap::from_positions(x, y, map)?);
    }
    Ok(out)
}

/// Up to `cap` distinct index pairs, deterministic in the seed. Small
/// products are taken whole; large ones are sampled without materializing
/// the full product.
fn sample_pairs(nx: usize, ny: usize, cap: usize, seed: u64) -> Vec<(usize, usize)> {
    if (nx as u128) * (ny as u128) <= cap as u128 {
        return (0..nx)
            .flat_map(|i| (0..ny).map(move |j| (i, j)))
            .collect();
    }
    let mut rng = SplitMix64::new(seed);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < cap {
        let i = (rng.next() % nx as u64) as usize;
        let j = (rng.next() % ny as u64) as usize;
        chosen.insert((i, j));
    }
    chosen.into_iter().collect()
}

fn sample_triples(
    nx: usize,
    ny: usize,
    nz: usize,
    cap: usize,
    seed: u64,
) -> Vec<(usize, usize, usize)> {
    if (nx as u128) * (ny as u128) * (nz as u128) <= cap as u128 {
        return (0..nx)
            .flat_map(|i| (0..ny).flat_map(move |j| (0..nz).map(move |k| (i, j, k))))
            .collect();
    }
    let mut rng = SplitMix64::new(seed);
    let mut chosen = std::collections::BTreeSet::new();
    while chosen.len() < cap {
        let i = (rng.next() % nx as u64) as usize;
        let j = (rng.next() % ny as u64) as usize;
        let k = (rng.next() % nz as u64) as usize;
        chosen.insert((i, j, k));
    }
    chosen.into_iter().collect()
}

/// Which preservation property a counterexample search targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismProperty {
    Scp,
    Scc,
    Sdp,
    Sbp,
}

impl fmt::Display for MorphismProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MorphismProperty::Scp => "scp",
            MorphismProperty::Scc => "scc",
            MorphismProperty::Sdp => "sdp",
            MorphismProperty::Sbp => "sbp",
        })
    }
}

/// The pair of structure-like objects a fixture violates.
#[derive(Clone, Debug)]
pub enum FixturePayload {
    Structures(SoftConvexStructure, SoftConvexStructure),
    Operators(OperatorTable, OperatorTable),
    Bases(SoftConvexBase, SoftConvexBase),
}

/// A concrete property violation found by deterministic scan: the function,
/// the flanking objects, and the witnessing soft set.
#[derive(Clone, Debug)]
pub struct MorphismFixture {
    pub property: MorphismProperty,
    pub function: SoftFunctionMap,
    pub payload: FixturePayload,
    pub witness: SoftSet,
}

impl fmt::Display for MorphismFixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let map: Vec<String> = self
            .function
            .domain()
            .universe()
            .iter()
            .map(|x| {
                format!(
                    "{x}->{}",
                    self.function.apply(x).expect("total function")
                )
            })
            .collect();
        write!(
            f,
            "{} violated by [{}] with witness {}",
            self.property,
            map.join(","),
            self.witness
        )
    }
}

/// Deterministic scan for the first tuple violating `property` on spaces
/// sized by the budget: universes `x1..` and `y1..` of `max_universe`
/// elements, parameters `e1..` of `max_parameters` entries. Functions are
/// scanned in lexicographic order, structure pairs in enumeration order.
/// Returns `None` when the whole scan passes.
pub fn find_counterexample(
    property: MorphismProperty,
    budget: &EnumerationBudget,
) -> Result<Option<MorphismFixture>> {
    budget.ensure_positive()?;
    let params: Vec<String> = (1..=budget.max_parameters).map(|i| format!("e{i}")).collect();
    let xs: Vec<String> = (1..=budget.max_universe).map(|i| format!("x{i}")).collect();
    let ys: Vec<String> = (1..=budget.max_universe).map(|i| format!("y{i}")).collect();
    let space_x = Space::new(xs, params.clone())?;
    let space_y = Space::new(ys, params)?;
    let pool_x = enumerate_structures(&space_x, budget)?;
    let pool_y = enumerate_structures(&space_y, budget)?;
    let fns = all_point_functions(&space_x, &space_y)?;

    for f in &fns {
        for zeta_x in &pool_x {
            for zeta_y in &pool_y {
                match property {
                    MorphismProperty::Scp => {
                        let verdict = is_scp(f, zeta_x, zeta_y)?;
                        if !verdict.holds {
                            return Ok(Some(MorphismFixture {
                                property,
                                function: f.clone(),
                                payload: FixturePayload::Structures(
                                    zeta_x.clone(),
                                    zeta_y.clone(),
                                ),
                                witness: verdict.witness.expect("failing check has a witness"),
                            }));
                        }
                    }
                    MorphismProperty::Scc => {
                        let verdict = is_scc(f, zeta_x, zeta_y)?;
                        if !verdict.holds {
                            return Ok(Some(MorphismFixture {
                                property,
                                function: f.clone(),
                                payload: FixturePayload::Structures(
                                    zeta_x.clone(),
                                    zeta_y.clone(),
                                ),
                                witness: verdict.witness.expect("failing check has a witness"),
                            }));
                        }
                    }
                    MorphismProperty::Sdp => {
                        let d_x = OperatorTable::tabulate_hull(zeta_x)?;
                        let d_y = OperatorTable::tabulate_hull(zeta_y)?;
                        let verdict = is_sdp(f, &d_x, &d_y)?;
                        if !verdict.holds {
                            return Ok(Some(MorphismFixture {
                                property,
                                function: f.clone(),
                                payload: FixturePayload::Operators(d_x, d_y),
                                witness: verdict.witness.expect("failing check has a witness"),
                            }));
                        }
                    }
                    MorphismProperty::Sbp => {
                        let beta_x = SoftConvexBase::new(
                            zeta_x.family().without(&SoftSet::null(&space_x)),
                        )?;
                        let beta_y = SoftConvexBase::new(
                            zeta_y.family().without(&SoftSet::null(&space_y)),
                        )?;
                        let verdict = is_sbp(f, &beta_x, &beta_y)?;
                        if !verdict.holds {
                            return Ok(Some(MorphismFixture {
                                property,
                                function: f.clone(),
                                payload: FixturePayload::Bases(beta_x, beta_y),
                                witness: verdict.witness.expect("failing check has a witness"),
                            }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Deterministic splittable generator for seeded sampling.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}
