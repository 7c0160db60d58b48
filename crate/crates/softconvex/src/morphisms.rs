//! Point maps lifted to soft image/preimage maps, the four preservation
//! properties (SCP, SCC, SDP, SBP), and the characterization theorems that
//! relate them to hull inequalities.
//!
//! Domain and codomain must share the same parameter list; a mismatch is a
//! hard error, never an implicit re-indexing.

use std::sync::Arc;

use crate::bases::SoftConvexBase;
use crate::convexity::SoftConvexStructure;
use crate::error::{Error, Result};
use crate::masks;
use crate::operators::{validate_cderived_operator, OperatorTable};
use crate::report::CheckMode;
use crate::soft_set::SoftSet;
use crate::space::Space;

/// A total point function between two universes sharing one parameter list,
/// inducing image and preimage maps on soft sets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SoftFunctionMap {
    domain: Arc<Space>,
    codomain: Arc<Space>,
    map: Vec<usize>, // domain element position -> codomain element position
}

impl SoftFunctionMap {
    /// Builds a soft function from `(x, y)` pairs covering every domain
    /// element exactly once.
    pub fn new(
        domain: &Arc<Space>,
        codomain: &Arc<Space>,
        pairs: &[(&str, &str)],
    ) -> Result<SoftFunctionMap> {
        if domain.parameters() != codomain.parameters() {
            return Err(Error::SpaceMismatch);
        }
        let mut map = vec![usize::MAX; domain.element_count()];
        for (x, y) in pairs {
            let xi = domain.element_position(x)?;
            let yi = codomain.element_position(y)?;
            if map[xi] != usize::MAX {
                return Err(Error::DuplicateIdentifier((*x).to_string()));
            }
            map[xi] = yi;
        }
        if let Some(missing) = map.iter().position(|&m| m == usize::MAX) {
            return Err(Error::UnknownElement(domain.universe()[missing].clone()));
        }
        Ok(SoftFunctionMap {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            map,
        })
    }

    /// Builds from element positions; used by exhaustive function scans.
    pub fn from_positions(
        domain: &Arc<Space>,
        codomain: &Arc<Space>,
        map: Vec<usize>,
    ) -> Result<SoftFunctionMap> {
        if domain.parameters() != codomain.parameters() {
            return Err(Error::SpaceMismatch);
        }
        if map.len() != domain.element_count() {
            return Err(Error::UnknownElement(format!(
                "position map covers {} of {} elements",
                map.len(),
                domain.element_count()
            )));
        }
        for &y in &map {
            if y >= codomain.element_count() {
                return Err(Error::UnknownElement(format!("position {y}")));
            }
        }
        Ok(SoftFunctionMap {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            map,
        })
    }

    pub fn identity(space: &Arc<Space>) -> SoftFunctionMap {
        SoftFunctionMap {
            domain: Arc::clone(space),
            codomain: Arc::clone(space),
            map: (0..space.element_count()).collect(),
        }
    }

    /// The constant function onto one codomain element.
    pub fn constant(domain: &Arc<Space>, codomain: &Arc<Space>, y: &str) -> Result<SoftFunctionMap> {
        if domain.parameters() != codomain.parameters() {
            return Err(Error::SpaceMismatch);
        }
        let yi = codomain.element_position(y)?;
        Ok(SoftFunctionMap {
            domain: Arc::clone(domain),
            codomain: Arc::clone(codomain),
            map: vec![yi; domain.element_count()],
        })
    }

    /// `g ∘ f`; requires `f`'s codomain to be `g`'s domain.
    pub fn compose(g: &SoftFunctionMap, f: &SoftFunctionMap) -> Result<SoftFunctionMap> {
        Space::ensure_same(&f.codomain, &g.domain)?;
        Ok(SoftFunctionMap {
            domain: Arc::clone(&f.domain),
            codomain: Arc::clone(&g.codomain),
            map: f.map.iter().map(|&x| g.map[x]).collect(),
        })
    }

    pub fn domain(&self) -> &Arc<Space> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Space> {
        &self.codomain
    }

    pub fn apply(&self, x: &str) -> Result<&str> {
        let xi = self.domain.element_position(x)?;
        Ok(self.codomain.universe()[self.map[xi]].as_str())
    }

    /// Pointwise image: `[f(Ω)](e) = f(Ω(e))`.
    pub fn image(&self, set: &SoftSet) -> Result<SoftSet> {
        Space::ensure_same(&self.domain, set.space())?;
        let mut out = SoftSet::null(&self.codomain);
        for p in 0..self.domain.parameter_count() {
            for (x, &y) in self.map.iter().enumerate() {
                if set.get_bit(p, x) {
                    out.set_bit(p, y);
                }
            }
        }
        Ok(out)
    }

    /// Pointwise preimage: `[f⁻¹(Θ)](e) = {x : f(x) ∈ Θ(e)}`.
    pub fn preimage(&self, set: &SoftSet) -> Result<SoftSet> {
        Space::ensure_same(&self.codomain, set.space())?;
        let mut out = SoftSet::null(&self.domain);
        for p in 0..self.codomain.parameter_count() {
            for (x, &y) in self.map.iter().enumerate() {
                if set.get_bit(p, y) {
                    out.set_bit(p, x);
                }
            }
        }
        Ok(out)
    }
}

/// Result of a single preservation-property check.
#[derive(Clone, Debug)]
pub struct PropertyVerdict {
    pub holds: bool,
    /// A violating member (SCP/SCC/SBP) or input soft set (SDP).
    pub witness: Option<SoftSet>,
}

impl PropertyVerdict {
    fn holds() -> Self {
        PropertyVerdict {
            holds: true,
            witness: None,
        }
    }

    fn fails(witness: SoftSet) -> Self {
        PropertyVerdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

/// Soft convex preserving: preimages of codomain members are domain members.
pub fn is_scp(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
) -> Result<PropertyVerdict> {
    Space::ensure_same(f.domain(), zeta_x.space())?;
    Space::ensure_same(f.codomain(), zeta_y.space())?;
    for member in zeta_y.members() {
        if !zeta_x.contains(&f.preimage(member)?) {
            return Ok(PropertyVerdict::fails(member.clone()));
        }
    }
    Ok(PropertyVerdict::holds())
}

/// Soft convex to convex: images of domain members are codomain members.
pub fn is_scc(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
) -> Result<PropertyVerdict> {
    Space::ensure_same(f.domain(), zeta_x.space())?;
    Space::ensure_same(f.codomain(), zeta_y.space())?;
    for member in zeta_x.members() {
        if !zeta_y.contains(&f.image(member)?) {
            return Ok(PropertyVerdict::fails(member.clone()));
        }
    }
    Ok(PropertyVerdict::holds())
}

/// Soft c-derived preserving: `f(dX(Ω)) ⊆ f(Ω) ∪ dY(f(Ω))` for every `Ω`.
/// Both tables are validated as convexly derived operators first.
pub fn is_sdp(
    f: &SoftFunctionMap,
    d_x: &OperatorTable,
    d_y: &OperatorTable,
) -> Result<PropertyVerdict> {
    Space::ensure_same(f.domain(), d_x.space())?;
    Space::ensure_same(f.codomain(), d_y.space())?;
    for table in [d_x, d_y] {
        let report = validate_cderived_operator(table, CheckMode::Fast);
        if !report.is_valid() {
            return Err(Error::InvalidOperator(Box::new(report)));
        }
    }
    for (idx, output) in d_x.entries().iter().enumerate() {
        let input = SoftSet::from_canonical_index(f.domain(), idx as u64)?;
        let lhs = f.image(output)?;
        let fw = f.image(&input)?;
        let rhs = fw.union(d_y.apply(&fw)?)?;
        if !lhs.is_subset(&rhs)? {
            return Ok(PropertyVerdict::fails(input));
        }
    }
    Ok(PropertyVerdict::holds())
}

/// Soft c-base preserving: preimages of codomain base members lie in the
/// domain base.
pub fn is_sbp(
    f: &SoftFunctionMap,
    beta_x: &SoftConvexBase,
    beta_y: &SoftConvexBase,
) -> Result<PropertyVerdict> {
    Space::ensure_same(f.domain(), beta_x.space())?;
    Space::ensure_same(f.codomain(), beta_y.space())?;
    for member in beta_y.members() {
        if !beta_x.contains(&f.preimage(member)?) {
            return Ok(PropertyVerdict::fails(member.clone()));
        }
    }
    Ok(PropertyVerdict::holds())
}

/// Joint evaluation of the three equivalent characterizations of one
/// preservation property. The clauses are theorems of each other, so any
/// disagreement indicates a defect in the library itself.
#[derive(Clone, Debug)]
pub struct EquivalenceReport {
    /// Clause (1): membership preservation (SCP or SCC proper).
    pub membership: bool,
    /// Clause (2): the hull inequality over upward directed families.
    pub directed_bound: bool,
    /// Clause (3): the hull inequality over single soft sets.
    pub hull_bound: bool,
    /// Witness for the first failing clause, if any.
    pub witness: Option<SoftSet>,
}

impl EquivalenceReport {
    /// All three clauses produced the same verdict.
    pub fn agree(&self) -> bool {
        self.membership == self.directed_bound && self.directed_bound == self.hull_bound
    }

    /// The common verdict; meaningful when the clauses agree.
    pub fn verdict(&self) -> bool {
        self.membership
    }
}

/// Index-plane tables for one function between small spaces.
struct IndexedFunction {
    co_x: Vec<u64>,
    co_y: Vec<u64>,
    img: Vec<u64>,
}

impl IndexedFunction {
    fn build(
        f: &SoftFunctionMap,
        zeta_x: &SoftConvexStructure,
        zeta_y: &SoftConvexStructure,
    ) -> Result<IndexedFunction> {
        Space::ensure_same(f.domain(), zeta_x.space())?;
        Space::ensure_same(f.codomain(), zeta_y.space())?;
        let bits_x = f.domain().bit_count();
        let bits_y = f.codomain().bit_count();
        if bits_x > 12 || bits_y > 12 {
            return Err(Error::BudgetExceeded(format!(
                "equivalence checks enumerate all soft sets and need \
                 |X|*|E| <= 12 on both sides, got {bits_x} and {bits_y}"
            )));
        }
        let nx = 1usize << bits_x;
        let ny = 1usize << bits_y;
        let mut co_x = Vec::with_capacity(nx);
        for i in 0..nx {
            let s = SoftSet::from_canonical_index(f.domain(), i as u64)?;
            co_x.push(zeta_x.hull(&s)?.canonical_index().expect("small space"));
        }
        let mut co_y = Vec::with_capacity(ny);
        for j in 0..ny {
            let s = SoftSet::from_canonical_index(f.codomain(), j as u64)?;
            co_y.push(zeta_y.hull(&s)?.canonical_index().expect("small space"));
        }
        // Image of each single membership bit, then of every index by
        // folding over its bits.
        let ex = f.domain().element_count();
        let ey = f.codomain().element_count();
        let mut bit_img = vec![0u64; bits_x];
        for p in 0..f.domain().parameter_count() {
            for (x, &y) in f.map.iter().enumerate() {
                bit_img[p * ex + x] = 1u64 << (p * ey + y);
            }
        }
        let mut img = vec![0u64; nx];
        for i in 1..nx {
            let low = i.trailing_zeros() as usize;
            img[i] = img[i & (i - 1)] | bit_img[low];
        }
        Ok(IndexedFunction { co_x, co_y, img })
    }
}

/// Evaluates the three characterizations of SCP:
/// (1) preimages of members stay members,
/// (2) `f(co_X(∪ Ω_i)) ⊆ ∪ co_Y(f(Ω_i))` for upward directed families,
/// (3) `f(co_X(Ω)) ⊆ co_Y(f(Ω))` for every `Ω`.
///
/// Clause (2) is checked over all upward directed subfamilies of the full
/// soft-set pool up to `cap` members, plus the down-set `{O : O ⊆ Ω}` of
/// every soft set, which is the directed family the equivalence proof runs
/// through.
pub fn check_scp_equivalence(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
    cap: usize,
) -> Result<EquivalenceReport> {
    build_equivalence_report(f, zeta_x, zeta_y, Pool::Cap(cap), is_scp, |lhs, rhs| {
        masks::subset(lhs, rhs)
    })
}

/// Evaluates the three characterizations of SCC, with the inclusions of
/// [`check_scp_equivalence`] reversed.
pub fn check_scc_equivalence(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
    cap: usize,
) -> Result<EquivalenceReport> {
    build_equivalence_report(f, zeta_x, zeta_y, Pool::Cap(cap), is_scc, |lhs, rhs| {
        masks::subset(rhs, lhs)
    })
}

/// Variants taking a precomputed directed-family pool, so sweeps over many
/// structure pairs on one domain space enumerate the pool only once.
pub(crate) fn check_scp_equivalence_pooled(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
    directed: &[(Vec<u64>, u64)],
) -> Result<EquivalenceReport> {
    build_equivalence_report(f, zeta_x, zeta_y, Pool::Ready(directed), is_scp, |lhs, rhs| {
        masks::subset(lhs, rhs)
    })
}

pub(crate) fn check_scc_equivalence_pooled(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
    directed: &[(Vec<u64>, u64)],
) -> Result<EquivalenceReport> {
    build_equivalence_report(f, zeta_x, zeta_y, Pool::Ready(directed), is_scc, |lhs, rhs| {
        masks::subset(rhs, lhs)
    })
}

enum Pool<'a> {
    Cap(usize),
    Ready(&'a [(Vec<u64>, u64)]),
}

fn build_equivalence_report(
    f: &SoftFunctionMap,
    zeta_x: &SoftConvexStructure,
    zeta_y: &SoftConvexStructure,
    pool: Pool<'_>,
    membership_check: impl Fn(
        &SoftFunctionMap,
        &SoftConvexStructure,
        &SoftConvexStructure,
    ) -> Result<PropertyVerdict>,
    // Receives lhs = f(co_X(·)) and rhs = co_Y(f(·)) folded over the family.
    ok: impl Fn(u64, u64) -> bool,
) -> Result<EquivalenceReport> {
    let membership = membership_check(f, zeta_x, zeta_y)?;
    let t = IndexedFunction::build(f, zeta_x, zeta_y)?;

    let mut hull_witness = None;
    for (i, &co) in t.co_x.iter().enumerate() {
        if !ok(t.img[co as usize], t.co_y[t.img[i] as usize]) {
            hull_witness = Some(i as u64);
            break;
        }
    }

    let owned;
    let directed = match pool {
        Pool::Ready(directed) => directed,
        Pool::Cap(cap) => {
            // The clause-(2) scan enumerates capped subsets of every soft
            // set; past six membership bits that blows up combinatorially.
            let bits = f.domain().bit_count();
            if bits > 6 {
                return Err(Error::BudgetExceeded(format!(
                    "directed-family scans need |X|*|E| <= 6 on the domain, \
                     space has {bits} bits"
                )));
            }
            let indices: Vec<u64> = (0..t.co_x.len() as u64).collect();
            owned = masks::directed_subsets(&indices, cap);
            &owned
        }
    };
    let directed_witness = scan_directed(&t, directed, &ok);

    let witness = if !membership.holds {
        membership.witness.clone()
    } else {
        directed_witness
            .or(hull_witness)
            .map(|i| SoftSet::from_canonical_index(f.domain(), i).expect("index in range"))
    };
    Ok(EquivalenceReport {
        membership: membership.holds,
        directed_bound: directed_witness.is_none(),
        hull_bound: hull_witness.is_none(),
        witness,
    })
}

/// Scans clause (2) families; `ok(lhs, rhs)` receives
/// `lhs = f(co_X(∪ Ω_i))` and `rhs = ∪ co_Y(f(Ω_i))` and decides the law.
/// Returns the union index of the first failing family.
fn scan_directed(
    t: &IndexedFunction,
    directed: &[(Vec<u64>, u64)],
    ok: &impl Fn(u64, u64) -> bool,
) -> Option<u64> {
    for (sel, union) in directed {
        let lhs = t.img[t.co_x[*union as usize] as usize];
        let rhs = sel
            .iter()
            .fold(0u64, |acc, &m| acc | t.co_y[t.img[m as usize] as usize]);
        if !ok(lhs, rhs) {
            return Some(*union);
        }
    }
    // Down-set families P(Ω) for every Ω: enumerate submasks of Ω.
    for omega in 0..t.co_x.len() as u64 {
        let lhs = t.img[t.co_x[omega as usize] as usize];
        let mut rhs = t.co_y[t.img[0] as usize];
        let mut sub = omega;
        loop {
            rhs |= t.co_y[t.img[sub as usize] as usize];
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & omega;
        }
        if !ok(lhs, rhs) {
            return Some(omega);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convexity::close_to_structure;
    use crate::family::SoftFamily;

    fn space3x2() -> Arc<Space> {
        Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"]).unwrap()
    }

    fn omega(space: &Arc<Space>, e1: &[&str], e2: &[&str]) -> SoftSet {
        SoftSet::from_pairs(space, &[("e1", e1), ("e2", e2)]).unwrap()
    }

    #[test]
    fn image_and_preimage_basics() {
        let x = space3x2();
        let y = Space::new(vec!["y1", "y2"], vec!["e1", "e2"]).unwrap();
        let ident = SoftFunctionMap::identity(&x);
        let probe = omega(&x, &["x1", "x3"], &[]);
        assert_eq!(ident.image(&probe).unwrap(), probe);
        assert_eq!(ident.preimage(&probe).unwrap(), probe);

        let constant = SoftFunctionMap::constant(&x, &y, "y1").unwrap();
        let omega1 = omega(&x, &["x1"], &["x1"]);
        let image = constant.image(&omega1).unwrap();
        assert_eq!(
            image,
            SoftSet::from_pairs(&y, &[("e1", &["y1"]), ("e2", &["y1"])]).unwrap()
        );
        assert_eq!(
            constant.image(&SoftSet::null(&x)).unwrap(),
            SoftSet::null(&y)
        );

        // Preimage is all-or-nothing per parameter under a constant map.
        let theta = SoftSet::from_pairs(&y, &[("e1", &["y1"]), ("e2", &["y2"])]).unwrap();
        let back = constant.preimage(&theta).unwrap();
        assert_eq!(
            back,
            SoftSet::from_pairs(&x, &[("e1", &["x1", "x2", "x3"]), ("e2", &[])]).unwrap()
        );
        assert_eq!(
            constant.preimage(&SoftSet::absolute(&y)).unwrap(),
            SoftSet::absolute(&x)
        );
    }

    #[test]
    fn parameter_mismatch_is_hard_error() {
        let x = space3x2();
        let y = Space::new(vec!["y1"], vec!["f1", "f2"]).unwrap();
        assert!(matches!(
            SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y1"), ("x3", "y1")]),
            Err(Error::SpaceMismatch)
        ));
    }

    #[test]
    fn non_total_map_rejected() {
        let x = space3x2();
        let y = Space::new(vec!["y1"], vec!["e1", "e2"]).unwrap();
        assert!(SoftFunctionMap::new(&x, &y, &[("x1", "y1")]).is_err());
        assert!(matches!(
            SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x1", "y1"), ("x2", "y1")]),
            Err(Error::DuplicateIdentifier(_))
        ));
    }

    #[test]
    fn adjunction_laws() {
        let x = space3x2();
        let y = Space::new(vec!["y1", "y2"], vec!["e1", "e2"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2"), ("x3", "y1")]).unwrap();
        for i in 0..64 {
            let s = SoftSet::from_canonical_index(&x, i).unwrap();
            assert!(s.is_subset(&f.preimage(&f.image(&s).unwrap()).unwrap()).unwrap());
        }
        for j in 0..16 {
            let t = SoftSet::from_canonical_index(&y, j).unwrap();
            assert!(f.image(&f.preimage(&t).unwrap()).unwrap().is_subset(&t).unwrap());
        }
    }

    fn minimal(space: &Arc<Space>) -> SoftConvexStructure {
        SoftConvexStructure::new(
            SoftFamily::new(space, vec![SoftSet::null(space), SoftSet::absolute(space)]).unwrap(),
        )
        .unwrap()
    }

    fn discrete(space: &Arc<Space>) -> SoftConvexStructure {
        let all = (0..1u64 << space.bit_count())
            .map(|i| SoftSet::from_canonical_index(space, i).unwrap());
        SoftConvexStructure::new(SoftFamily::new(space, all).unwrap()).unwrap()
    }

    #[test]
    fn scp_trivial_cases() {
        let x = space3x2();
        let zeta = close_to_structure(&SoftFamily::new(
            &x,
            vec![omega(&x, &["x1"], &["x1"]), omega(&x, &["x2"], &["x2"])],
        )
        .unwrap());
        let ident = SoftFunctionMap::identity(&x);
        assert!(is_scp(&ident, &zeta, &zeta).unwrap().holds);
        // Any map into the minimal structure is SCP.
        let y = Space::new(vec!["y1", "y2"], vec!["e1", "e2"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2"), ("x3", "y2")]).unwrap();
        assert!(is_scp(&f, &minimal(&x), &minimal(&y)).unwrap().holds);
    }

    #[test]
    fn scp_counterexample_has_witness() {
        let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2")]).unwrap();
        let zeta_x = minimal(&x);
        let zeta_y = close_to_structure(
            &SoftFamily::new(&y, vec![SoftSet::from_pairs(&y, &[("e1", &["y1"])]).unwrap()])
                .unwrap(),
        );
        let verdict = is_scp(&f, &zeta_x, &zeta_y).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.witness.unwrap();
        assert_eq!(witness, SoftSet::from_pairs(&y, &[("e1", &["y1"])]).unwrap());
        // The witness re-checks: its preimage escapes the domain structure.
        assert!(!zeta_x.contains(&f.preimage(&witness).unwrap()));
    }

    #[test]
    fn scc_cases() {
        let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2")]).unwrap();
        // Surjective map from the minimal structure: images of Φ and X stay.
        assert!(is_scc(&f, &minimal(&x), &minimal(&y)).unwrap().holds);
        // Counterexample: a member whose image is missing.
        let zeta_x = close_to_structure(
            &SoftFamily::new(&x, vec![SoftSet::from_pairs(&x, &[("e1", &["x1"])]).unwrap()])
                .unwrap(),
        );
        let verdict = is_scc(&f, &zeta_x, &minimal(&y)).unwrap();
        assert!(!verdict.holds);
        assert!(verdict.witness.is_some());
    }

    #[test]
    fn equivalence_reports_agree() {
        let x = space3x2();
        let zeta = close_to_structure(&SoftFamily::new(
            &x,
            vec![
                omega(&x, &["x1"], &["x1", "x2"]),
                omega(&x, &["x1", "x2", "x3"], &["x1", "x3"]),
            ],
        )
        .unwrap());
        let ident = SoftFunctionMap::identity(&x);
        let scp = check_scp_equivalence(&ident, &zeta, &zeta, 4).unwrap();
        assert!(scp.agree() && scp.verdict());
        let scc = check_scc_equivalence(&ident, &zeta, &zeta, 4).unwrap();
        assert!(scc.agree() && scc.verdict());

        // The SCP counterexample drives all three clauses false.
        let x2 = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let y2 = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
        let f = SoftFunctionMap::new(&x2, &y2, &[("x1", "y1"), ("x2", "y2")]).unwrap();
        let zeta_y = close_to_structure(
            &SoftFamily::new(&y2, vec![SoftSet::from_pairs(&y2, &[("e1", &["y1"])]).unwrap()])
                .unwrap(),
        );
        let report = check_scp_equivalence(&f, &minimal(&x2), &zeta_y, 5).unwrap();
        assert!(report.agree());
        assert!(!report.verdict());
    }

    #[test]
    fn sdp_cases() {
        let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2")]).unwrap();

        // Identity function with equal operators.
        let ident = SoftFunctionMap::identity(&x);
        let hull_x = OperatorTable::tabulate_hull(&minimal(&x)).unwrap();
        assert!(is_sdp(&ident, &hull_x, &hull_x).unwrap().holds);

        // Constant-null domain operator always passes.
        let null_x = OperatorTable::constant(&x, &SoftSet::null(&x)).unwrap();
        let hull_y = OperatorTable::tabulate_hull(&minimal(&y)).unwrap();
        assert!(is_sdp(&f, &null_x, &hull_y).unwrap().holds);

        // Hull of the minimal structure against the identity operator fails.
        let ident_y = OperatorTable::identity(&y).unwrap();
        let verdict = is_sdp(&f, &hull_x, &ident_y).unwrap();
        assert!(!verdict.holds);
        let witness = verdict.witness.unwrap();
        // Recheck the violation at the witness.
        let lhs = f.image(hull_x.apply(&witness).unwrap()).unwrap();
        let fw = f.image(&witness).unwrap();
        let rhs = fw.union(ident_y.apply(&fw).unwrap()).unwrap();
        assert!(!lhs.is_subset(&rhs).unwrap());

        // Invalid operators are rejected up front.
        let bad = OperatorTable::tabulate(&x, SoftSet::complement).unwrap();
        assert!(matches!(
            is_sdp(&f, &bad, &hull_y),
            Err(Error::InvalidOperator(_))
        ));
    }

    #[test]
    fn sbp_cases() {
        let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
        let f = SoftFunctionMap::new(&x, &y, &[("x1", "y1"), ("x2", "y2")]).unwrap();

        let beta_x = SoftConvexBase::new(
            SoftFamily::new(&x, vec![SoftSet::absolute(&x)]).unwrap(),
        )
        .unwrap();
        let beta_y = SoftConvexBase::new(
            SoftFamily::new(&y, vec![SoftSet::absolute(&y)]).unwrap(),
        )
        .unwrap();
        assert!(is_sbp(&f, &beta_x, &beta_y).unwrap().holds);

        let ident = SoftFunctionMap::identity(&x);
        assert!(is_sbp(&ident, &beta_x, &beta_x).unwrap().holds);

        // A codomain base member whose preimage is missing from the domain base.
        let y1 = SoftSet::from_pairs(&y, &[("e1", &["y1"])]).unwrap();
        let rich_y = SoftConvexBase::new(
            SoftFamily::new(&y, vec![y1.clone(), SoftSet::absolute(&y)]).unwrap(),
        )
        .unwrap();
        let verdict = is_sbp(&f, &beta_x, &rich_y).unwrap();
        assert!(!verdict.holds);
        assert_eq!(verdict.witness.unwrap(), y1);
    }

    #[test]
    fn composition_preserves_scp() {
        let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
        let zeta = discrete(&x);
        let f = SoftFunctionMap::new(&x, &x, &[("x1", "x2"), ("x2", "x1")]).unwrap();
        let g = SoftFunctionMap::new(&x, &x, &[("x1", "x1"), ("x2", "x1")]).unwrap();
        assert!(is_scp(&f, &zeta, &zeta).unwrap().holds);
        assert!(is_scp(&g, &zeta, &zeta).unwrap().holds);
        let composed = SoftFunctionMap::compose(&g, &f).unwrap();
        assert!(is_scp(&composed, &zeta, &zeta).unwrap().holds);
        assert_eq!(composed.apply("x1").unwrap(), "x1");
        assert_eq!(composed.apply("x2").unwrap(), "x1");
    }
}
