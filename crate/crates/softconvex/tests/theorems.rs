//! Theorem-level checks built on the worked example family and the frozen
//! counterexample fixtures: hulls against the naive oracle, operator and
//! base round trips, the three-clause characterizations, preservation
//! implications, and composition closure over two-element universes.

mod common;

use std::sync::Arc;

use softconvex::oracle::{enumerate_soft_sets, enumerate_structures, EnumerationBudget};
use softconvex::{
    check_scc_equivalence, check_scp_equivalence, close_to_structure, family_slice,
    hull_from_cderived, is_sbp, is_scc, is_scp, is_sdp, oracle, structure_from_cbase,
    structure_from_cderived, structure_from_hull_operator, validate_cbase, validate_structure,
    CheckMode, Document, OperatorTable, SoftConvexBase, SoftConvexStructure, SoftFamily,
    SoftFunctionMap, SoftSet, Space,
};

use common::*;

fn zeta_star(doc: &Document) -> SoftConvexStructure {
    let family = doc.family("zetastar").unwrap();
    SoftConvexStructure::new(family).unwrap()
}

#[test]
fn closure_of_the_example_family_is_the_declared_ten_member_structure() {
    let doc = section3();
    let zeta = doc.family("zeta").unwrap();
    let closed = close_to_structure(&zeta);
    assert_eq!(closed.family(), zeta_star(&doc).family());
    assert_eq!(closed.len(), 10);
}

#[test]
fn hulls_match_the_naive_oracle_on_every_soft_set() {
    let doc = section3();
    let zeta = zeta_star(&doc);
    let space = doc.space();
    let universe = space.universe().to_vec();
    let params = space.parameters().to_vec();
    let members: Vec<NaiveSoft> = zeta.members().iter().map(to_naive).collect();
    for set in enumerate_soft_sets(space).unwrap() {
        let expected = n_hull(&universe, &params, &members, &to_naive(&set));
        assert_eq!(to_naive(&zeta.hull(&set).unwrap()), expected);
    }
}

#[test]
fn pointwise_hull_matches_per_slice_naive_hulls() {
    let doc = section3();
    let zeta = zeta_star(&doc);
    let space = doc.space();
    for set in enumerate_soft_sets(space).unwrap() {
        let pw = zeta.pointwise_hull(&set).unwrap();
        for param in space.parameters() {
            // Crisp hull of the slice within the slice structure, computed
            // naively as a one-parameter problem.
            let slice_family: Vec<NaiveSoft> = zeta
                .members()
                .iter()
                .map(|m| {
                    let mut one = NaiveSoft::new();
                    one.insert(
                        param.clone(),
                        m.slice(param).unwrap().into_iter().map(String::from).collect(),
                    );
                    one
                })
                .collect();
            let mut target = NaiveSoft::new();
            target.insert(
                param.clone(),
                set.slice(param).unwrap().into_iter().map(String::from).collect(),
            );
            let expected = n_hull(
                space.universe(),
                std::slice::from_ref(param),
                &slice_family,
                &target,
            );
            let got: std::collections::BTreeSet<String> = pw
                .slice(param)
                .unwrap()
                .into_iter()
                .map(String::from)
                .collect();
            assert_eq!(&got, &expected[param]);
        }
        // The pointwise bound, with equality exactly at members.
        let hull = zeta.hull(&set).unwrap();
        assert!(pw.is_subset(&hull).unwrap());
        assert_eq!(pw == hull, zeta.contains(&pw));
    }
}

#[test]
fn validated_structures_match_the_fully_literal_naive_validator() {
    // Every family on the 2x1 space, both validators.
    let space = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
    let sets = enumerate_soft_sets(&space).unwrap();
    for family_mask in 0u32..1 << sets.len() {
        let members: Vec<SoftSet> = sets
            .iter()
            .enumerate()
            .filter(|(i, _)| family_mask >> i & 1 == 1)
            .map(|(_, s)| s.clone())
            .collect();
        let naive: Vec<NaiveSoft> = members.iter().map(to_naive).collect();
        let family = SoftFamily::new(&space, members).unwrap();
        let ours = validate_structure(&family, CheckMode::Fast).is_valid();
        let oracle_verdict =
            n_validate_structure(space.universe(), space.parameters(), &naive);
        assert_eq!(ours, oracle_verdict, "family mask {family_mask:#b}");
    }
}

#[test]
fn singleton_parameter_families_validate_like_their_crisp_slice() {
    // Prop-level equivalence for |E| = 1 over every family on |X| <= 3.
    for nx in 1..=3usize {
        let xs: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
        let space = Space::new(xs, vec!["e1".to_string()]).unwrap();
        let sets = enumerate_soft_sets(&space).unwrap();
        for family_mask in 0u32..1 << sets.len() {
            let members: Vec<SoftSet> = sets
                .iter()
                .enumerate()
                .filter(|(i, _)| family_mask >> i & 1 == 1)
                .map(|(_, s)| s.clone())
                .collect();
            let family = SoftFamily::new(&space, members).unwrap();
            let soft_valid = validate_structure(&family, CheckMode::Fast).is_valid();
            // Independent crisp check on the slice family.
            let naive: Vec<NaiveSoft> = family.iter().map(to_naive).collect();
            let crisp_valid =
                n_validate_structure(space.universe(), space.parameters(), &naive);
            assert_eq!(soft_valid, crisp_valid);
        }
    }
}

#[test]
fn theorem_roundtrips_on_the_example_structure() {
    let doc = section3();
    let zeta = zeta_star(&doc);
    let table = OperatorTable::tabulate_hull(&zeta).unwrap();

    let via_hull_op = structure_from_hull_operator(&table, CheckMode::Fast).unwrap();
    assert_eq!(via_hull_op.family(), zeta.family());

    let via_derived = structure_from_cderived(&table, CheckMode::Fast).unwrap();
    assert_eq!(via_derived.family(), zeta.family());

    for set in enumerate_soft_sets(doc.space()).unwrap() {
        assert_eq!(
            hull_from_cderived(&table, &set, CheckMode::Fast).unwrap(),
            zeta.hull(&set).unwrap()
        );
    }

    let base_family = zeta.family().without(&SoftSet::null(doc.space()));
    let base = SoftConvexBase::new(base_family).unwrap();
    let generated = structure_from_cbase(&base).unwrap();
    assert_eq!(generated.family(), zeta.family());
}

#[test]
fn chain_base_from_the_fixture_generates_the_chain() {
    let doc = section3();
    let chain = doc.family("chain").unwrap();
    assert!(validate_cbase(&chain, CheckMode::literal()).is_valid());
    let base = SoftConvexBase::new(chain).unwrap();
    let generated = structure_from_cbase(&base).unwrap();
    assert_eq!(generated.len(), 4);
    let slices = family_slice(generated.family(), "e1").unwrap();
    assert_eq!(slices.len(), 4);
}

fn load_morphism_fixture() -> (Document, Document) {
    let domain = Document::parse(&fixture("morphism_domain.json")).unwrap();
    let codomain = Document::parse(&fixture("morphism_codomain.json")).unwrap();
    (domain, codomain)
}

fn structure(doc: &Document, name: &str) -> SoftConvexStructure {
    SoftConvexStructure::new(doc.family(name).unwrap()).unwrap()
}

#[test]
fn frozen_scp_fixture_fails_all_three_clauses() {
    let (domain, codomain) = load_morphism_fixture();
    let f = domain.function("swap", &codomain).unwrap();
    let zeta_x = structure(&domain, "zetaMin");
    let zeta_y = structure(&codomain, "zetaY1");
    let verdict = is_scp(&f, &zeta_x, &zeta_y).unwrap();
    assert!(!verdict.holds);
    assert_eq!(
        verdict.witness.unwrap(),
        codomain.resolve("OnlyY1").unwrap()
    );
    let report = check_scp_equivalence(&f, &zeta_x, &zeta_y, 5).unwrap();
    assert!(report.agree());
    assert!(!report.verdict());
}

#[test]
fn frozen_scc_fixture_fails_all_three_clauses() {
    let (domain, codomain) = load_morphism_fixture();
    let f = domain.function("toY1", &codomain).unwrap();
    let zeta_x = structure(&domain, "zetaMin");
    let zeta_y = structure(&codomain, "zetaMin");
    let verdict = is_scc(&f, &zeta_x, &zeta_y).unwrap();
    assert!(!verdict.holds);
    let report = check_scc_equivalence(&f, &zeta_x, &zeta_y, 5).unwrap();
    assert!(report.agree());
    assert!(!report.verdict());
}

#[test]
fn frozen_sdp_fixture_violates_the_inclusion() {
    let (domain, codomain) = load_morphism_fixture();
    let f = domain.function("swap", &codomain).unwrap();
    let d_x = domain.operator("hullMin").unwrap();
    let d_y = codomain.operator("hullY1").unwrap();
    let verdict = is_sdp(&f, &d_x, &d_y).unwrap();
    assert!(!verdict.holds);
    let witness = verdict.witness.unwrap();
    let lhs = f.image(d_x.apply(&witness).unwrap()).unwrap();
    let fw = f.image(&witness).unwrap();
    let rhs = fw.union(d_y.apply(&fw).unwrap()).unwrap();
    assert!(!lhs.is_subset(&rhs).unwrap());
}

#[test]
fn frozen_sbp_fixture_misses_a_preimage() {
    let (domain, codomain) = load_morphism_fixture();
    let f = domain.function("toY1", &codomain).unwrap();
    let beta_x = SoftConvexBase::new(domain.family("betaAbs").unwrap()).unwrap();
    let beta_y = SoftConvexBase::new(codomain.family("betaY2").unwrap()).unwrap();
    let verdict = is_sbp(&f, &beta_x, &beta_y).unwrap();
    assert!(!verdict.holds);
    assert_eq!(
        verdict.witness.unwrap(),
        codomain.resolve("OnlyY2").unwrap()
    );
}

#[test]
fn search_reproduces_the_frozen_scp_fixture() {
    // The deterministic scan finds the same violation the fixture encodes.
    let budget = EnumerationBudget {
        max_universe: 2,
        max_parameters: 1,
        ..EnumerationBudget::default()
    };
    let found = oracle::find_counterexample(oracle::MorphismProperty::Scp, &budget)
        .unwrap()
        .expect("a violation exists");
    let (domain, codomain) = load_morphism_fixture();
    let expected_fn = domain.function("swap", &codomain).unwrap();
    assert_eq!(found.function.apply("x1").unwrap(), expected_fn.apply("x1").unwrap());
    assert_eq!(found.function.apply("x2").unwrap(), expected_fn.apply("x2").unwrap());
    assert_eq!(found.witness, codomain.resolve("OnlyY1").unwrap());
    match found.payload {
        oracle::FixturePayload::Structures(zx, zy) => {
            assert_eq!(zx.family(), structure(&domain, "zetaMin").family());
            assert_eq!(zy.family(), structure(&codomain, "zetaY1").family());
        }
        other => panic!("unexpected payload {other:?}"),
    }
}

/// Equivalence theorems hold for every point function and every structure
/// pair on the 2x1 spaces: all three clauses always agree.
#[test]
fn equivalence_clauses_agree_exhaustively_at_desk_scale() {
    let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
    let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
    let budget = EnumerationBudget::default();
    let pool_x = enumerate_structures(&x, &budget).unwrap();
    let pool_y = enumerate_structures(&y, &budget).unwrap();
    for f in oracle::all_point_functions(&x, &y).unwrap() {
        for zeta_x in &pool_x {
            for zeta_y in &pool_y {
                let scp = check_scp_equivalence(&f, zeta_x, zeta_y, 5).unwrap();
                assert!(scp.agree(), "SCP clauses disagree");
                let scc = check_scc_equivalence(&f, zeta_x, zeta_y, 5).unwrap();
                assert!(scc.agree(), "SCC clauses disagree");
            }
        }
    }
}

/// SDP implies SCP and SBP implies SCP over the same exhaustive pool, with
/// derived operators taken as hull tables (so the induced structures are the
/// source structures themselves).
#[test]
fn preservation_implications_hold_exhaustively() {
    let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
    let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
    let budget = EnumerationBudget::default();
    let pool_x = enumerate_structures(&x, &budget).unwrap();
    let pool_y = enumerate_structures(&y, &budget).unwrap();
    let null_x = SoftSet::null(&x);
    let null_y = SoftSet::null(&y);
    for f in oracle::all_point_functions(&x, &y).unwrap() {
        for zeta_x in &pool_x {
            for zeta_y in &pool_y {
                let d_x = OperatorTable::tabulate_hull(zeta_x).unwrap();
                let d_y = OperatorTable::tabulate_hull(zeta_y).unwrap();
                if is_sdp(&f, &d_x, &d_y).unwrap().holds {
                    let ind_x = structure_from_cderived(&d_x, CheckMode::Fast).unwrap();
                    let ind_y = structure_from_cderived(&d_y, CheckMode::Fast).unwrap();
                    assert!(is_scp(&f, &ind_x, &ind_y).unwrap().holds);
                }
                let beta_x = SoftConvexBase::new(zeta_x.family().without(&null_x)).unwrap();
                let beta_y = SoftConvexBase::new(zeta_y.family().without(&null_y)).unwrap();
                if is_sbp(&f, &beta_x, &beta_y).unwrap().holds {
                    let gen_x = structure_from_cbase(&beta_x).unwrap();
                    let gen_y = structure_from_cbase(&beta_y).unwrap();
                    assert!(is_scp(&f, &gen_x, &gen_y).unwrap().holds);
                }
            }
        }
    }
}

/// Composition closure for all four properties, exhaustively over
/// two-element universes with one parameter.
#[test]
fn composition_closure_is_exhaustive_on_two_element_universes() {
    let x = Space::new(vec!["x1", "x2"], vec!["e1"]).unwrap();
    let y = Space::new(vec!["y1", "y2"], vec!["e1"]).unwrap();
    let z = Space::new(vec!["z1", "z2"], vec!["e1"]).unwrap();
    let budget = EnumerationBudget::default();
    let report = oracle::verify_morphisms(&x, &y, &z, &budget, 1000, oracle::DEFAULT_SEED).unwrap();
    assert!(report.passed(), "morphism suite failed:\n{report}");
    // With 4 structures per space, 64 triples and 16 function pairs means
    // the composition sections each covered the full 1024-case grid.
    for name in [
        "composition-scp",
        "composition-scc",
        "composition-sdp",
        "composition-sbp",
    ] {
        let section = report
            .sections
            .iter()
            .find(|s| s.name == name)
            .expect("section exists");
        assert_eq!(section.checked, 1024, "{name} did not cover the grid");
    }
}

/// Adjunction between image and preimage, exhaustively on the fixture pair.
#[test]
fn image_preimage_adjunction_is_exhaustive() {
    let (domain, codomain) = load_morphism_fixture();
    for fn_name in ["swap", "toY1", "embed"] {
        let f = domain.function(fn_name, &codomain).unwrap();
        for set in enumerate_soft_sets(domain.space()).unwrap() {
            let back = f.preimage(&f.image(&set).unwrap()).unwrap();
            assert!(set.is_subset(&back).unwrap());
        }
        for set in enumerate_soft_sets(codomain.space()).unwrap() {
            let forward = f.image(&f.preimage(&set).unwrap()).unwrap();
            assert!(forward.is_subset(&set).unwrap());
        }
    }
}

/// The slices of the example family match the two crisp structures listed
/// alongside it, set for set.
#[test]
fn example_slices_are_the_listed_crisp_structures() {
    let doc = section3();
    let zeta = doc.family("zeta").unwrap();
    let crisp = |names: &[&[&str]]| -> Vec<std::collections::BTreeSet<String>> {
        names
            .iter()
            .map(|s| s.iter().map(|x| x.to_string()).collect())
            .collect()
    };
    assert_eq!(
        family_slice(&zeta, "e1").unwrap(),
        crisp(&[&[], &["x1"], &["x2"], &["x1", "x2"], &["x1", "x2", "x3"]])
    );
    assert_eq!(
        family_slice(&zeta, "e2").unwrap(),
        crisp(&[
            &[],
            &["x1"],
            &["x2"],
            &["x1", "x2"],
            &["x1", "x3"],
            &["x1", "x2", "x3"]
        ])
    );
}

/// The function composition operator wires domains and codomains correctly.
#[test]
fn composition_wiring() {
    let (domain, codomain) = load_morphism_fixture();
    let swap = domain.function("swap", &codomain).unwrap();
    // A second hop back needs a function from the codomain space; build one.
    let back = SoftFunctionMap::new(
        codomain.space(),
        domain.space(),
        &[("y1", "x1"), ("y2", "x2")],
    )
    .unwrap();
    let round = SoftFunctionMap::compose(&back, &swap).unwrap();
    assert_eq!(round.apply("x1").unwrap(), "x2");
    assert_eq!(round.apply("x2").unwrap(), "x1");
    assert!(SoftFunctionMap::compose(&swap, &swap).is_err());
    let _ = Arc::clone(domain.space());
}
