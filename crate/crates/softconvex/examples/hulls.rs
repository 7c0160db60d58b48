//! Soft convex hulls and pointwise hulls: the hull is the least member
//! containing a soft set; the pointwise hull computes crisp hulls slice by
//! slice, is always contained in the hull, and matches it exactly when it
//! lands inside the structure.
//!
//! ```text
//! cargo run --example hulls
//! ```

use softconvex::{close_to_structure, Result, SoftFamily, SoftSet, Space};

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

    // The hull of a member is the member itself; the hull of anything else
    // is the intersection of all members above it.
    let probe = omega(&["x3"], &["x1", "x3"])?;
    let hull = structure.hull(&probe)?;
    println!("probe          = {probe}");
    println!("hull           = {hull}");
    assert!(structure.contains(&hull));

    // The pointwise hull works parameter by parameter inside each slice
    // structure; it can be strictly smaller than the hull.
    let pointwise = structure.pointwise_hull(&probe)?;
    println!("pointwise hull = {pointwise}");
    assert!(pointwise.is_subset(&hull)?);
    assert_eq!(pointwise == hull, structure.contains(&pointwise));

    // Hull laws on display: normalization, extensivity, idempotence, and
    // the fixpoint characterization of membership.
    assert_eq!(structure.hull(&SoftSet::null(&space))?, SoftSet::null(&space));
    assert!(probe.is_subset(&hull)?);
    assert_eq!(structure.hull(&hull)?, hull);
    for member in structure.members() {
        assert_eq!(structure.hull(member)?, *member);
    }

    // Concavity: a soft set is concave when its complement is a member.
    let concave = structure.members()[1].complement();
    println!("concave        = {concave}");
    assert!(structure.is_concave(&concave)?);
    Ok(())
}
