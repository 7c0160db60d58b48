//! Soft convex structures: axiom validation, hulls, pointwise hulls,
//! parameter slices, and structures induced from crisp convexities.
//!
//! A family is a soft convex structure when it contains the null and absolute
//! soft sets, is closed under intersections of subfamilies, and is closed
//! under unions of upward directed subfamilies. On finite carriers the last
//! axiom is automatic: a finite nonempty upward directed family contains its
//! own union as a greatest member, so the fast validator certifies it with a
//! note, while literal mode re-checks it by enumerating directed subfamilies
//! up to a size cap.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::family::{self, SoftFamily};
use crate::report::{Axiom, CheckMode, ValidationReport};
use crate::soft_set::SoftSet;
use crate::space::Space;

/// Checks the three structure axioms on `family`.
pub fn validate_structure(family: &SoftFamily, mode: CheckMode) -> ValidationReport {
    let mut report = ValidationReport::new();
    let space = family.space();
    let null = SoftSet::null(space);
    let absolute = SoftSet::absolute(space);
    if !family.contains(&null) {
        report.witness(Axiom::NullMember, vec![], Some(null.clone()));
    }
    if !family.contains(&absolute) {
        report.witness(Axiom::AbsoluteMember, vec![], Some(absolute.clone()));
    }
    // Pairwise closure suffices for closure under intersections of arbitrary
    // subfamilies: finite intersections are iterated pairwise ones and the
    // empty subfamily contributes the absolute soft set, checked above.
    let members = family.members();
    'pairs: for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            let meet = a.intersect(b).expect("family members share a space");
            if !family.contains(&meet) {
                report.witness(
                    Axiom::IntersectionClosed,
                    vec![a.clone(), b.clone()],
                    Some(meet),
                );
                break 'pairs;
            }
        }
    }
    match mode {
        CheckMode::Fast => report.note(
            "directed-union closure certified by finite collapse: \
             every finite nonempty upward directed subfamily contains its union",
        ),
        CheckMode::Literal { cap } => {
            check_directed_unions_literal(family, cap, &mut report);
        }
    }
    report
}

fn check_directed_unions_literal(family: &SoftFamily, cap: usize, report: &mut ValidationReport) {
    let space = family.space();
    family::for_each_subfamily(family.members(), cap, &mut |sel| {
        if !family::upward_directed(sel) {
            return true;
        }
        let union = family::union_of(space, sel);
        if !family.contains(&union) {
            report.witness(
                Axiom::DirectedUnionClosed,
                sel.iter().map(|s| (*s).clone()).collect(),
                Some(union),
            );
            return false;
        }
        true
    });
}

/// Smallest superfamily of `family` plus the null and absolute soft sets that
/// is closed under pairwise intersection, computed by fixpoint iteration.
pub fn close_to_structure(family: &SoftFamily) -> SoftConvexStructure {
    let space = family.space();
    let mut members: BTreeSet<SoftSet> = family.iter().cloned().collect();
    members.insert(SoftSet::null(space));
    members.insert(SoftSet::absolute(space));
    loop {
        let snapshot: Vec<SoftSet> = members.iter().cloned().collect();
        let before = members.len();
        for (i, a) in snapshot.iter().enumerate() {
            for b in &snapshot[i + 1..] {
                members.insert(a.intersect(b).expect("shared space"));
            }
        }
        if members.len() == before {
            break;
        }
    }
    let closed = SoftFamily::new(space, members).expect("closure preserves the space");
    SoftConvexStructure::new(closed).expect("pairwise closure plus bounds is a structure")
}

/// A validated soft convex structure: the family `ζ` plus the witness that
/// the axioms hold (construction re-runs the validator).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftConvexStructure {
    family: SoftFamily,
}

impl SoftConvexStructure {
    /// Validates in fast mode and wraps the family.
    pub fn new(family: SoftFamily) -> Result<SoftConvexStructure> {
        SoftConvexStructure::with_mode(family, CheckMode::Fast)
    }

    pub fn with_mode(family: SoftFamily, mode: CheckMode) -> Result<SoftConvexStructure> {
        let report = validate_structure(&family, mode);
        if report.is_valid() {
            Ok(SoftConvexStructure { family })
        } else {
            Err(Error::InvalidStructure(Box::new(report)))
        }
    }

    pub fn family(&self) -> &SoftFamily {
        &self.family
    }

    pub fn space(&self) -> &Arc<Space> {
        self.family.space()
    }

    pub fn members(&self) -> &[SoftSet] {
        self.family.members()
    }

    pub fn len(&self) -> usize {
        self.family.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a structure always contains Φ_E and X_E
    }

    pub fn contains(&self, set: &SoftSet) -> bool {
        self.family.contains(set)
    }

    /// Soft convex hull: the intersection of all members containing `set`,
    /// which is the least member containing it.
    pub fn hull(&self, set: &SoftSet) -> Result<SoftSet> {
        Space::ensure_same(self.space(), set.space())?;
        let mut acc = SoftSet::absolute(self.space());
        for member in self.members() {
            if set.is_subset(member)? {
                acc = acc.intersect(member)?;
            }
        }
        Ok(acc)
    }

    /// Pointwise hull: at each parameter, the crisp hull of `set(e)` inside
    /// the slice structure at `e`.
    pub fn pointwise_hull(&self, set: &SoftSet) -> Result<SoftSet> {
        Space::ensure_same(self.space(), set.space())?;
        // The crisp hull of S in the slice family {Ω(e) : Ω ∈ ζ} is the
        // intersection of the slices of all members whose slice contains S,
        // so it can be folded row by row without materializing each slice.
        let space = self.space();
        let mut acc = SoftSet::absolute(space);
        for p in 0..space.parameter_count() {
            for member in self.members() {
                if set.row_is_subset(member, p) {
                    acc.row_intersect_from(member, p);
                }
            }
        }
        Ok(acc)
    }

    /// A soft set is concave when its complement is a member.
    pub fn is_concave(&self, set: &SoftSet) -> Result<bool> {
        Space::ensure_same(self.space(), set.space())?;
        Ok(self.contains(&set.complement()))
    }

    /// The crisp structure `{Ω(e) : Ω ∈ ζ}` at one parameter. Always passes
    /// crisp validation when taken from a validated structure.
    pub fn slice(&self, param: &str) -> Result<CrispConvexStructure> {
        let sets = family_slice(self.family(), param)?;
        CrispConvexStructure::new(self.space().universe().to_vec(), sets)
    }
}

/// The deduplicated slices `{Ω(e) : Ω ∈ F}` of an arbitrary family, in
/// canonical order (membership bits read as a binary counter). For families
/// that are not structures the result need not be a crisp convex structure;
/// use [`SoftConvexStructure::slice`] for the validated form.
pub fn family_slice(family: &SoftFamily, param: &str) -> Result<Vec<BTreeSet<String>>> {
    let space = family.space();
    let p = space.parameter_position(param)?;
    let mut keyed: Vec<(Vec<bool>, BTreeSet<String>)> = Vec::new();
    for m in family.iter() {
        let mask: Vec<bool> = (0..space.element_count())
            .rev()
            .map(|e| m.get_bit(p, e))
            .collect();
        let set = m.slice_at(p).into_iter().map(String::from).collect();
        keyed.push((mask, set));
    }
    keyed.sort();
    keyed.dedup();
    Ok(keyed.into_iter().map(|(_, s)| s).collect())
}

/// A crisp convex structure on a universe, embodied as a single-parameter
/// soft convex structure so validation and hulls share one code path.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrispConvexStructure {
    inner: SoftConvexStructure,
}

/// Parameter name of the derived single-parameter space behind
/// [`CrispConvexStructure`].
const CRISP_PARAM: &str = "e";

impl CrispConvexStructure {
    /// Validates and wraps a family of subsets of `universe`.
    pub fn new(
        universe: Vec<String>,
        members: impl IntoIterator<Item = BTreeSet<String>>,
    ) -> Result<CrispConvexStructure> {
        let space = Space::new(universe, vec![CRISP_PARAM.to_string()])?;
        let mut sets = Vec::new();
        for m in members {
            let elems: Vec<&str> = m.iter().map(String::as_str).collect();
            sets.push(SoftSet::from_pairs(&space, &[(CRISP_PARAM, &elems)])?);
        }
        let family = SoftFamily::new(&space, sets)?;
        Ok(CrispConvexStructure {
            inner: SoftConvexStructure::new(family)?,
        })
    }

    /// Validation report for a candidate crisp family, without constructing.
    pub fn validate(
        universe: Vec<String>,
        members: impl IntoIterator<Item = BTreeSet<String>>,
        mode: CheckMode,
    ) -> Result<ValidationReport> {
        let space = Space::new(universe, vec![CRISP_PARAM.to_string()])?;
        let mut sets = Vec::new();
        for m in members {
            let elems: Vec<&str> = m.iter().map(String::as_str).collect();
            sets.push(SoftSet::from_pairs(&space, &[(CRISP_PARAM, &elems)])?);
        }
        let family = SoftFamily::new(&space, sets)?;
        Ok(validate_structure(&family, mode))
    }

    pub fn universe(&self) -> &[String] {
        self.inner.space().universe()
    }

    /// Member subsets in canonical order.
    pub fn members(&self) -> Vec<BTreeSet<String>> {
        self.inner
            .members()
            .iter()
            .map(|m| {
                m.slice(CRISP_PARAM)
                    .expect("crisp parameter exists")
                    .into_iter()
                    .map(String::from)
                    .collect()
            })
            .collect()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, set: &BTreeSet<String>) -> bool {
        match self.to_soft(set) {
            Ok(s) => self.inner.contains(&s),
            Err(_) => false,
        }
    }

    /// Crisp convex hull of `set` within this structure.
    pub fn hull(&self, set: &BTreeSet<String>) -> Result<BTreeSet<String>> {
        let soft = self.to_soft(set)?;
        let hull = self.inner.hull(&soft)?;
        Ok(hull
            .slice(CRISP_PARAM)
            .expect("crisp parameter exists")
            .into_iter()
            .map(String::from)
            .collect())
    }

    fn to_soft(&self, set: &BTreeSet<String>) -> Result<SoftSet> {
        let elems: Vec<&str> = set.iter().map(String::as_str).collect();
        SoftSet::from_pairs(self.inner.space(), &[(CRISP_PARAM, &elems)])
    }
}

/// The soft convex structure induced by a crisp one: all soft sets whose
/// every slice is a member of `crisp`. It has `|crisp|^|E|` members and
/// slices back to `crisp` at every parameter.
pub fn induced_from_crisp(
    crisp: &CrispConvexStructure,
    parameters: &[String],
) -> Result<SoftConvexStructure> {
    let space = Space::new(crisp.universe().to_vec(), parameters.to_vec())?;
    let member_sets = crisp.members();
    let mut members: Vec<SoftSet> = vec![SoftSet::null(&space)];
    for p in 0..parameters.len() {
        let mut next = Vec::with_capacity(members.len() * member_sets.len());
        for base in &members {
            for subset in &member_sets {
                let mut grown = base.clone();
                for name in subset {
                    let e = space.element_position(name)?;
                    grown.set_bit(p, e);
                }
                next.push(grown);
            }
        }
        members = next;
    }
    let family = SoftFamily::new(&space, members)?;
    SoftConvexStructure::new(family)
}

/// The single-set variant: only the diagonal assignments `e ↦ A` for each
/// member `A` of the crisp structure.
pub fn single_set_from_crisp(
    crisp: &CrispConvexStructure,
    parameters: &[String],
) -> Result<SoftConvexStructure> {
    let space = Space::new(crisp.universe().to_vec(), parameters.to_vec())?;
    let mut members = Vec::new();
    for subset in crisp.members() {
        let mut set = SoftSet::null(&space);
        for name in &subset {
            let e = space.element_position(name)?;
            for p in 0..parameters.len() {
                set.set_bit(p, e);
            }
        }
        members.push(set);
    }
    let family = SoftFamily::new(&space, members)?;
    SoftConvexStructure::new(family)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space3x2() -> Arc<Space> {
        Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"]).unwrap()
    }

    fn omega(space: &Arc<Space>, e1: &[&str], e2: &[&str]) -> SoftSet {
        SoftSet::from_pairs(space, &[("e1", e1), ("e2", e2)]).unwrap()
    }

    fn section_family(space: &Arc<Space>) -> SoftFamily {
        SoftFamily::new(
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
        .unwrap()
    }

    #[test]
    fn section_family_is_not_a_structure() {
        let s = space3x2();
        let fam = section_family(&s);
        let report = validate_structure(&fam, CheckMode::Fast);
        assert!(!report.is_valid());
        let w = &report.witnesses()[0];
        assert_eq!(w.axiom, Axiom::IntersectionClosed);
        let pair: BTreeSet<SoftSet> = w.members.iter().cloned().collect();
        let expected: BTreeSet<SoftSet> = vec![
            omega(&s, &["x1"], &["x1", "x2"]),
            omega(&s, &["x2"], &["x2"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(pair, expected);
        assert_eq!(
            w.computed.as_ref().unwrap().to_string(),
            "{(e1,∅),(e2,{x2})}"
        );
    }

    #[test]
    fn minimal_structure_is_valid() {
        let s = space3x2();
        let fam = SoftFamily::new(&s, vec![SoftSet::null(&s), SoftSet::absolute(&s)]).unwrap();
        assert!(validate_structure(&fam, CheckMode::Fast).is_valid());
        assert!(validate_structure(&fam, CheckMode::literal()).is_valid());
    }

    #[test]
    fn closure_of_section_family_has_ten_members() {
        let s = space3x2();
        let closed = close_to_structure(&section_family(&s));
        assert_eq!(closed.len(), 10);
        for extra in [
            omega(&s, &[], &["x2"]),
            omega(&s, &["x2"], &[]),
            omega(&s, &["x1", "x2"], &["x1"]),
        ] {
            assert!(closed.contains(&extra));
        }
        assert!(validate_structure(closed.family(), CheckMode::literal()).is_valid());
        // Idempotence of the closure.
        let again = close_to_structure(closed.family());
        assert_eq!(again.family(), closed.family());
    }

    #[test]
    fn closure_of_empty_family() {
        let s = space3x2();
        let closed = close_to_structure(&SoftFamily::empty(&s));
        assert_eq!(closed.len(), 2);
        assert!(closed.contains(&SoftSet::null(&s)));
        assert!(closed.contains(&SoftSet::absolute(&s)));
    }

    #[test]
    fn hull_examples() {
        let s = space3x2();
        let zeta = close_to_structure(&section_family(&s));
        // A member is its own hull.
        let member = omega(&s, &[], &["x2"]);
        assert_eq!(zeta.hull(&member).unwrap(), member);
        // Null normalizes.
        assert_eq!(zeta.hull(&SoftSet::null(&s)).unwrap(), SoftSet::null(&s));
        // Brute-force case from the closure.
        let target = omega(&s, &["x3"], &["x1", "x3"]);
        let omega3 = omega(&s, &["x1", "x2", "x3"], &["x1", "x3"]);
        assert_eq!(zeta.hull(&target).unwrap(), omega3);
    }

    #[test]
    fn pointwise_hull_examples() {
        let s = space3x2();
        let zeta = close_to_structure(&section_family(&s));
        assert_eq!(
            zeta.pointwise_hull(&SoftSet::null(&s)).unwrap(),
            SoftSet::null(&s)
        );
        let target = omega(&s, &["x3"], &["x1", "x3"]);
        let pw = zeta.pointwise_hull(&target).unwrap();
        let hull = zeta.hull(&target).unwrap();
        assert!(pw.is_subset(&hull).unwrap());
        // Members are fixpoints of both hulls.
        for m in zeta.members() {
            assert_eq!(zeta.hull(m).unwrap(), *m);
            assert_eq!(zeta.pointwise_hull(m).unwrap(), *m);
        }
    }

    #[test]
    fn concavity() {
        let s = space3x2();
        let zeta = close_to_structure(&section_family(&s));
        assert!(zeta.is_concave(&SoftSet::null(&s)).unwrap());
        assert!(zeta.is_concave(&SoftSet::absolute(&s)).unwrap());
        let omega1 = omega(&s, &["x1"], &["x1"]);
        assert!(zeta.is_concave(&omega1.complement()).unwrap());
    }

    fn crisp<const N: usize>(names: [&str; N]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn slices_match_expected_sets() {
        let s = space3x2();
        let fam = section_family(&s);
        // The raw family is not a structure but still slices to crisp
        // structures at both parameters.
        let e1_sets = family_slice(&fam, "e1").unwrap();
        let expect_e1 = vec![
            crisp([]),
            crisp(["x1"]),
            crisp(["x2"]),
            crisp(["x1", "x2"]),
            crisp(["x1", "x2", "x3"]),
        ];
        assert_eq!(e1_sets, expect_e1);
        let e2_sets = family_slice(&fam, "e2").unwrap();
        let expect_e2 = vec![
            crisp([]),
            crisp(["x1"]),
            crisp(["x2"]),
            crisp(["x1", "x2"]),
            crisp(["x1", "x3"]),
            crisp(["x1", "x2", "x3"]),
        ];
        assert_eq!(e2_sets, expect_e2);
        assert!(CrispConvexStructure::new(s.universe().to_vec(), e1_sets).is_ok());
        assert!(CrispConvexStructure::new(s.universe().to_vec(), e2_sets).is_ok());

        // The validated closure has the same slices.
        let zeta = close_to_structure(&fam);
        assert_eq!(zeta.slice("e1").unwrap().members(), expect_e1);
        assert!(matches!(zeta.slice("e9"), Err(Error::UnknownParameter(_))));

        // Minimal structure slices to the two-point crisp structure.
        let minimal = SoftConvexStructure::new(
            SoftFamily::new(&s, vec![SoftSet::null(&s), SoftSet::absolute(&s)]).unwrap(),
        )
        .unwrap();
        assert_eq!(
            minimal.slice("e2").unwrap().members(),
            vec![crisp([]), crisp(["x1", "x2", "x3"])]
        );
    }

    #[test]
    fn induced_from_crisp_counts() {
        // Υ = {∅, {x1}, X} on a two-element universe.
        let universe = vec!["x1".to_string(), "x2".to_string()];
        let members: Vec<BTreeSet<String>> = vec![
            BTreeSet::new(),
            ["x1".to_string()].into_iter().collect(),
            ["x1".to_string(), "x2".to_string()].into_iter().collect(),
        ];
        let crisp = CrispConvexStructure::new(universe, members).unwrap();
        let params = vec!["e1".to_string(), "e2".to_string()];
        let induced = induced_from_crisp(&crisp, &params).unwrap();
        assert_eq!(induced.len(), 9);
        for e in ["e1", "e2"] {
            assert_eq!(induced.slice(e).unwrap().members(), crisp.members());
        }
        let single = single_set_from_crisp(&crisp, &params).unwrap();
        assert_eq!(single.len(), 3);
        for e in ["e1", "e2"] {
            assert_eq!(single.slice(e).unwrap().members(), crisp.members());
        }
    }

    #[test]
    fn induced_from_two_point_crisp() {
        let universe = vec!["x1".to_string()];
        let members: Vec<BTreeSet<String>> = vec![
            BTreeSet::new(),
            ["x1".to_string()].into_iter().collect(),
        ];
        let crisp = CrispConvexStructure::new(universe, members).unwrap();
        let params = vec!["e1".to_string(), "e2".to_string()];
        let induced = induced_from_crisp(&crisp, &params).unwrap();
        assert_eq!(induced.len(), 4);
    }
}
