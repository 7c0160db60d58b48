//! Soft convex bases: the three base axioms, the structure a base
//! generates, and the round trip between structures and their bases.
//!
//! ```text
//! cargo run --example convex_bases
//! ```

use softconvex::{
    close_to_structure, structure_from_cbase, validate_cbase, CheckMode, Result, SoftConvexBase,
    SoftFamily, SoftSet, Space,
};

fn main() -> Result<()> {
    let space = Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"])?;
    let omega = |e1: &[&str], e2: &[&str]| SoftSet::from_pairs(&space, &[("e1", e1), ("e2", e2)]);

    // A chain with the absolute soft set on top is a base: intersections
    // stay inside the chain, and the absolute member covers the top axiom.
    let chain = SoftFamily::new(
        &space,
        vec![
            omega(&["x1"], &["x1"])?,
            omega(&["x1", "x2"], &["x1", "x2"])?,
            SoftSet::absolute(&space),
        ],
    )?;
    let report = validate_cbase(&chain, CheckMode::Fast);
    println!("chain base: {}", if report.is_valid() { "valid" } else { "invalid" });
    let base = SoftConvexBase::new(chain)?;

    // The generated structure is the base plus the null soft set, which is
    // the union of the empty directed subfamily.
    let generated = structure_from_cbase(&base)?;
    println!("generated structure ({} members):", generated.len());
    for member in generated.members() {
        println!("  {member}");
    }

    // Round trip: any structure minus its null member is a base that
    // generates the structure back.
    let structure = close_to_structure(&SoftFamily::new(
        &space,
        vec![
            omega(&["x1"], &["x1"])?,
            omega(&["x1"], &["x1", "x2"])?,
            omega(&["x1", "x2", "x3"], &["x1", "x3"])?,
            omega(&["x2"], &["x2"])?,
            omega(&["x1", "x2"], &["x1", "x2"])?,
        ],
    )?);
    let beta = structure.family().without(&SoftSet::null(&space));
    let round = structure_from_cbase(&SoftConvexBase::new(beta)?)?;
    assert_eq!(round.family(), structure.family());
    println!("structure/base round trip: exact");

    // Failures carry the violated axiom: no member unions to the absolute
    // soft set here, so the top axiom is unsatisfiable.
    let no_top = SoftFamily::new(
        &space,
        vec![omega(&["x1"], &["x1", "x2"])?, omega(&["x2"], &["x2"])?],
    )?;
    let report = validate_cbase(&no_top, CheckMode::Fast);
    println!("without a top: {}", if report.is_valid() { "valid" } else { "invalid" });
    for witness in report.witnesses() {
        println!("  witness {witness}");
    }
    Ok(())
}
