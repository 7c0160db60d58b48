//! Soft convex bases: the SCB1–SCB3 axioms and the structure a base
//! generates through unions of its upward directed subfamilies.
//!
//! On finite carriers the axioms reduce sharply. A finite upward directed
//! subfamily unions to its greatest member (or to the null soft set when
//! empty), so SCB1 forces the absolute soft set to be a member, SCB2 reduces
//! to pairwise intersections landing in the base or being null, and SCB3
//! holds automatically. Fast mode certifies through these reductions; literal
//! mode re-derives each clause by enumerating directed subfamilies up to a
//! size cap. The empty family is rejected: on a nonempty universe no directed
//! subfamily of it unions to the absolute soft set.

use std::collections::BTreeSet;

use crate::convexity::SoftConvexStructure;
use crate::error::{Error, Result};
use crate::family::{self, SoftFamily};
use crate::report::{Axiom, CheckMode, ValidationReport};
use crate::soft_set::SoftSet;

/// A validated soft convex base.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftConvexBase {
    family: SoftFamily,
}

impl SoftConvexBase {
    /// Validates in fast mode and wraps the family.
    pub fn new(family: SoftFamily) -> Result<SoftConvexBase> {
        SoftConvexBase::with_mode(family, CheckMode::Fast)
    }

    pub fn with_mode(family: SoftFamily, mode: CheckMode) -> Result<SoftConvexBase> {
        let report = validate_cbase(&family, mode);
        if report.is_valid() {
            Ok(SoftConvexBase { family })
        } else {
            Err(Error::InvalidBase(Box::new(report)))
        }
    }

    pub fn family(&self) -> &SoftFamily {
        &self.family
    }

    pub fn space(&self) -> &std::sync::Arc<crate::space::Space> {
        self.family.space()
    }

    pub fn members(&self) -> &[SoftSet] {
        self.family.members()
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        self.family.is_empty()
    }

    pub fn contains(&self, set: &SoftSet) -> bool {
        self.family.contains(set)
    }
}

/// Checks SCB1–SCB3 on a candidate family.
pub fn validate_cbase(family: &SoftFamily, mode: CheckMode) -> ValidationReport {
    match mode {
        CheckMode::Fast => validate_cbase_fast(family),
        CheckMode::Literal { cap } => validate_cbase_literal(family, cap),
    }
}

fn validate_cbase_fast(family: &SoftFamily) -> ValidationReport {
    let mut report = ValidationReport::new();
    let space = family.space();
    let absolute = SoftSet::absolute(space);
    let null = SoftSet::null(space);

    // SCB1: a finite directed union reaching X_E needs X_E itself.
    if !family.contains(&absolute) {
        report.witness(Axiom::Scb1, vec![], Some(absolute.clone()));
    }

    // SCB2: finite intersections are iterated pairwise ones; the empty
    // subfamily's intersection is X_E (SCB1), and a null intersection is the
    // union of the empty directed subfamily.
    let members = family.members();
    'pairs: for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let meet = a.intersect(b).expect("family members share a space");
            if meet != null && !family.contains(&meet) {
                report.witness(Axiom::Scb2, vec![a.clone(), b.clone()], Some(meet));
                break 'pairs;
            }
        }
    }

    report.note(
        "SCB3 certified by finite collapse: a directed union of expressible \
         sets is the greatest one, which is expressible",
    );
    report
}

fn validate_cbase_literal(family: &SoftFamily, cap: usize) -> ValidationReport {
    let mut report = ValidationReport::new();
    let space = family.space();
    let absolute = SoftSet::absolute(space);

    // Every union of an upward directed subfamily within the cap.
    let mut expressible: BTreeSet<SoftSet> = BTreeSet::new();
    family::for_each_subfamily(family.members(), cap, &mut |sel| {
        if family::upward_directed(sel) {
            expressible.insert(family::union_of(space, sel));
        }
        true
    });

    // SCB1
    if !expressible.contains(&absolute) {
        report.witness(Axiom::Scb1, vec![], Some(absolute.clone()));
    }

    // SCB2: every subfamily's intersection must be expressible. The empty
    // subfamily contributes X_E, covered by SCB1 above.
    family::for_each_subfamily(family.members(), cap, &mut |sel| {
        if sel.is_empty() {
            return true;
        }
        let mut meet = SoftSet::absolute(space);
        for s in sel {
            meet = meet.intersect(s).expect("same space");
        }
        if !expressible.contains(&meet) {
            report.witness(
                Axiom::Scb2,
                sel.iter().map(|s| (*s).clone()).collect(),
                Some(meet),
            );
            return false;
        }
        true
    });

    // SCB3: directed unions of expressible sets stay expressible.
    let pool: Vec<SoftSet> = expressible.iter().cloned().collect();
    family::for_each_subfamily(&pool, cap, &mut |sel| {
        if !family::upward_directed(sel) {
            return true;
        }
        let union = family::union_of(space, sel);
        if !expressible.contains(&union) {
            report.witness(
                Axiom::Scb3,
                sel.iter().map(|s| (*s).clone()).collect(),
                Some(union),
            );
            return false;
        }
        true
    });

    report
}

/// The structure generated by a base: all unions of upward directed
/// subfamilies, which for a finite base is the base plus the null soft set.
/// The result is re-validated as a structure rather than trusted.
pub fn structure_from_cbase(base: &SoftConvexBase) -> Result<SoftConvexStructure> {
    let space = base.space();
    let mut members: Vec<SoftSet> = base.members().to_vec();
    members.push(SoftSet::null(space));
    let family = SoftFamily::new(space, members)?;
    SoftConvexStructure::new(family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::close_to_structure;
    use crate::space::Space;
    use std::sync::Arc;

    fn space3x2() -> Arc<Space> {
        Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"]).unwrap()
    }

    fn omega(space: &Arc<Space>, e1: &[&str], e2: &[&str]) -> SoftSet {
        SoftSet::from_pairs(space, &[("e1", e1), ("e2", e2)]).unwrap()
    }

    fn zeta_star(space: &Arc<Space>) -> SoftConvexStructure {
        let family = SoftFamily::new(
            space,
            vec![
                SoftSet::null(space),
                omega(space, &["x1"], &["x1"]),
                omega(space, &["x1"], &["x1", "x2"]),
                omega(space, &["x1", "x2", "x3"], &["x1", "x3"]),
                omega(space, &["x2"], &["x2"]),
                omega(space, &["x1", "x2"], &["x1", "x2"]),
                SoftSet::absolute(space),
            ],
        )
        .unwrap();
        close_to_structure(&family)
    }

    #[test]
    fn structure_minus_null_is_a_base() {
        let s = space3x2();
        let zeta = zeta_star(&s);
        let beta_family = zeta.family().without(&SoftSet::null(&s));
        assert!(validate_cbase(&beta_family, CheckMode::Fast).is_valid());
        assert!(validate_cbase(&beta_family, CheckMode::literal()).is_valid());
        let base = SoftConvexBase::new(beta_family).unwrap();
        let generated = structure_from_cbase(&base).unwrap();
        assert_eq!(generated.family(), zeta.family());
    }

    #[test]
    fn absolute_singleton_is_a_base() {
        let s = space3x2();
        let family = SoftFamily::new(&s, vec![SoftSet::absolute(&s)]).unwrap();
        let base = SoftConvexBase::with_mode(family, CheckMode::literal()).unwrap();
        let generated = structure_from_cbase(&base).unwrap();
        assert_eq!(generated.len(), 2);
        assert!(generated.contains(&SoftSet::null(&s)));
        assert!(generated.contains(&SoftSet::absolute(&s)));
    }

    #[test]
    fn missing_absolute_fails_scb1() {
        let s = space3x2();
        let family = SoftFamily::new(
            &s,
            vec![
                omega(&s, &["x1"], &["x1", "x2"]),
                omega(&s, &["x2"], &["x2"]),
            ],
        )
        .unwrap();
        let report = validate_cbase(&family, CheckMode::Fast);
        assert!(!report.is_valid());
        assert!(report.witnesses().iter().any(|w| w.axiom == Axiom::Scb1));
        let literal = validate_cbase(&family, CheckMode::literal());
        assert!(!literal.is_valid());
        assert!(literal.witnesses().iter().any(|w| w.axiom == Axiom::Scb1));
    }

    #[test]
    fn chain_base_generates_chain_plus_null() {
        let s = space3x2();
        let omega1 = omega(&s, &["x1"], &["x1"]);
        let omega5 = omega(&s, &["x1", "x2"], &["x1", "x2"]);
        let family = SoftFamily::new(
            &s,
            vec![omega1.clone(), omega5.clone(), SoftSet::absolute(&s)],
        )
        .unwrap();
        let base = SoftConvexBase::with_mode(family, CheckMode::literal()).unwrap();
        let generated = structure_from_cbase(&base).unwrap();
        assert_eq!(generated.len(), 4);
        for m in [
            SoftSet::null(&s),
            omega1,
            omega5,
            SoftSet::absolute(&s),
        ] {
            assert!(generated.contains(&m));
        }
    }

    #[test]
    fn empty_family_is_rejected() {
        let s = space3x2();
        let report = validate_cbase(&SoftFamily::empty(&s), CheckMode::Fast);
        assert!(!report.is_valid());
        assert_eq!(report.witnesses()[0].axiom, Axiom::Scb1);
        let literal = validate_cbase(&SoftFamily::empty(&s), CheckMode::literal());
        assert!(!literal.is_valid());
    }

    #[test]
    fn generated_structure_is_minimal() {
        let s = space3x2();
        let zeta = zeta_star(&s);
        let beta_family = zeta.family().without(&SoftSet::null(&s));
        let base = SoftConvexBase::new(beta_family.clone()).unwrap();
        let generated = structure_from_cbase(&base).unwrap();
        let closed = close_to_structure(&beta_family);
        for m in generated.members() {
            assert!(closed.contains(m));
        }
    }
}
