//! Operators as total tables: hull-operator laws, convexly derived
//! operators, the structures they induce, and the round trips connecting
//! them.
//!
//! ```text
//! cargo run --example operator_tables
//! ```

use softconvex::{
    close_to_structure, hull_from_cderived, structure_from_cderived,
    structure_from_hull_operator, validate_cderived_operator, validate_hull_operator, CheckMode,
    OperatorTable, Result, SoftFamily, SoftSet, Space,
};

fn main() -> Result<()> {
    let space = Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"])?;
    let omega = |e1: &[&str], e2: &[&str]| SoftSet::from_pairs(&space, &[("e1", e1), ("e2", e2)]);

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

    // Tabulating the hull over all 64 soft sets of the space yields a table
    // satisfying the five hull-operator laws.
    let table = OperatorTable::tabulate_hull(&structure)?;
    println!("hull table has {} entries", table.len());
    let report = validate_hull_operator(&table, CheckMode::Fast);
    println!("hull-operator laws: {}", if report.is_valid() { "valid" } else { "invalid" });

    // The fixpoint family of a valid hull operator is a structure, and its
    // hull re-tabulates to the operator: a faithful round trip.
    let back = structure_from_hull_operator(&table, CheckMode::Fast)?;
    assert_eq!(back.family(), structure.family());
    assert_eq!(OperatorTable::tabulate_hull(&back)?, table);
    println!("fixpoint round trip: exact");

    // Every hull operator is also a convexly derived operator, and the
    // derived construction recovers the same structure with the same hull.
    assert!(validate_cderived_operator(&table, CheckMode::Fast).is_valid());
    let derived = structure_from_cderived(&table, CheckMode::Fast)?;
    assert_eq!(derived.family(), structure.family());
    let probe = omega(&["x3"], &[])?;
    let via_d = hull_from_cderived(&table, &probe, CheckMode::Fast)?;
    println!("co_d({probe}) = {via_d}");
    assert_eq!(via_d, structure.hull(&probe)?);

    // A derived operator that is not a hull operator: null below a
    // threshold, absolute above it. Its induced structure is the lower set
    // of the threshold plus the absolute soft set.
    let threshold = omega(&["x1", "x2"], &["x1", "x2"])?;
    let jump = OperatorTable::tabulate(&space, |input| {
        if input.is_subset(&threshold).unwrap() {
            SoftSet::null(&space)
        } else {
            SoftSet::absolute(&space)
        }
    })?;
    assert!(validate_cderived_operator(&jump, CheckMode::Fast).is_valid());
    assert!(!validate_hull_operator(&jump, CheckMode::Fast).is_valid());
    let induced = structure_from_cderived(&jump, CheckMode::Fast)?;
    println!("threshold operator induces {} members", induced.len());

    // A law violation comes back as a witness, not a silent failure.
    let broken = OperatorTable::tabulate(&space, SoftSet::complement)?;
    let report = validate_cderived_operator(&broken, CheckMode::Fast);
    println!("complement map: {}", if report.is_valid() { "valid" } else { "invalid" });
    for witness in report.witnesses() {
        println!("  witness {witness}");
    }
    Ok(())
}
