//! Validating a soft convex structure: a seven-member family that fails the
//! intersection axiom, the witness that proves it, and the pairwise closure
//! that repairs it.
//!
//! ```text
//! cargo run --example validate_structure
//! ```

use softconvex::{
    close_to_structure, validate_structure, CheckMode, Result, SoftFamily, SoftSet, Space,
};

fn main() -> Result<()> {
    let space = Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"])?;
    let omega = |e1: &[&str], e2: &[&str]| SoftSet::from_pairs(&space, &[("e1", e1), ("e2", e2)]);

    // A family of five named soft sets plus the null and absolute ones.
    let family = SoftFamily::new(
        &space,
        vec![
            SoftSet::null(&space),
            omega(&["x1"], &["x1"])?,
            omega(&["x1"], &["x1", "x2"])?,
            omega(&["x1", "x2", "x3"], &["x1", "x3"])?,
            omega(&["x2"], &["x2"])?,
            omega(&["x1", "x2"], &["x1", "x2"])?,
            SoftSet::absolute(&space),
        ],
    )?;

    // The fast validator checks bound membership and pairwise-intersection
    // closure, and certifies the directed-union axiom by finite collapse.
    let report = validate_structure(&family, CheckMode::Fast);
    println!("fast validation:\n{report}");

    // Literal mode re-checks the directed-union axiom by enumerating upward
    // directed subfamilies up to a size cap. The verdicts always agree on
    // finite carriers.
    let literal = validate_structure(&family, CheckMode::Literal { cap: 5 });
    assert_eq!(report.is_valid(), literal.is_valid());

    // The witness is a real violation: the two members intersect to a soft
    // set the family does not contain.
    let witness = &report.witnesses()[0];
    let meet = witness.members[0].intersect(&witness.members[1])?;
    println!("missing intersection: {meet}");
    assert!(!family.contains(&meet));

    // Closing under pairwise intersections repairs the family; here the
    // fixpoint adds exactly three members.
    let structure = close_to_structure(&family);
    println!("closure has {} members:", structure.len());
    for member in structure.members() {
        println!("  {member}");
    }
    assert!(validate_structure(structure.family(), CheckMode::Fast).is_valid());
    Ok(())
}
