//! Point functions between soft convex spaces: images, preimages, the four
//! preservation properties, and the three-clause characterization reports.
//!
//! ```text
//! cargo run --example morphism_properties
//! ```

use softconvex::{
    check_scp_equivalence, close_to_structure, is_sbp, is_scc, is_scp, is_sdp, CheckMode,
    OperatorTable, Result, SoftConvexBase, SoftConvexStructure, SoftFamily, SoftFunctionMap,
    SoftSet, Space,
};

fn main() -> Result<()> {
    let x = Space::new(vec!["x1", "x2"], vec!["e1"])?;
    let y = Space::new(vec!["y1", "y2"], vec!["e1"])?;

    // A point function lifts to images and preimages of soft sets.
    let swap = SoftFunctionMap::new(&x, &y, &[("x1", "y2"), ("x2", "y1")])?;
    let only_x1 = SoftSet::from_pairs(&x, &[("e1", &["x1"])])?;
    println!("image of {only_x1} = {}", swap.image(&only_x1)?);
    let only_y1 = SoftSet::from_pairs(&y, &[("e1", &["y1"])])?;
    println!("preimage of {only_y1} = {}", swap.preimage(&only_y1)?);

    // Structures on both sides; the domain one is minimal, the codomain one
    // also contains {y1}.
    let minimal_x = SoftConvexStructure::new(SoftFamily::new(
        &x,
        vec![SoftSet::null(&x), SoftSet::absolute(&x)],
    )?)?;
    let zeta_y = close_to_structure(&SoftFamily::new(&y, vec![only_y1.clone()])?);

    // SCP fails: the preimage of {y1} is {x2}, which the minimal domain
    // structure does not contain. The witness is the offending member.
    let verdict = is_scp(&swap, &minimal_x, &zeta_y)?;
    println!("swap is SCP: {}", verdict.holds);
    if let Some(witness) = &verdict.witness {
        println!("  witness member: {witness}");
    }

    // The characterization report evaluates all three equivalent clauses of
    // the preservation theorem; they always agree.
    let report = check_scp_equivalence(&swap, &minimal_x, &zeta_y, 5)?;
    println!(
        "clauses (membership, directed bound, hull bound) = ({}, {}, {})",
        report.membership, report.directed_bound, report.hull_bound
    );
    assert!(report.agree());

    // SCC with a constant map: the image of the absolute soft set is a
    // proper subset, which escapes the minimal codomain structure.
    let constant = SoftFunctionMap::constant(&x, &y, "y1")?;
    let minimal_y = SoftConvexStructure::new(SoftFamily::new(
        &y,
        vec![SoftSet::null(&y), SoftSet::absolute(&y)],
    )?)?;
    println!(
        "constant map is SCC: {}",
        is_scc(&constant, &minimal_x, &minimal_y)?.holds
    );

    // SDP compares derived operators across the function; the hull of the
    // minimal structure against the identity operator fails the inclusion.
    let d_x = OperatorTable::tabulate_hull(&minimal_x)?;
    let identity_y = OperatorTable::identity(&y)?;
    let verdict = is_sdp(&swap, &d_x, &identity_y)?;
    println!("swap is SDP (hull vs identity): {}", verdict.holds);

    // SBP asks preimages of codomain base members to land in the domain
    // base.
    let beta_x = SoftConvexBase::new(SoftFamily::new(&x, vec![SoftSet::absolute(&x)])?)?;
    let beta_y = SoftConvexBase::new(SoftFamily::new(
        &y,
        vec![only_y1, SoftSet::absolute(&y)],
    )?)?;
    println!("swap is SBP: {}", is_sbp(&swap, &beta_x, &beta_y)?.holds);

    // Composition preserves the properties that both legs have.
    let z = Space::new(vec!["z1", "z2"], vec!["e1"])?;
    let forward = SoftFunctionMap::new(&y, &z, &[("y1", "z1"), ("y2", "z2")])?;
    let composed = SoftFunctionMap::compose(&forward, &swap)?;
    let discrete = |s: &std::sync::Arc<Space>| {
        let all = (0..1u64 << s.bit_count())
            .map(|i| SoftSet::from_canonical_index(s, i).unwrap());
        SoftConvexStructure::with_mode(SoftFamily::new(s, all).unwrap(), CheckMode::Fast).unwrap()
    };
    let (dx, dy, dz) = (discrete(&x), discrete(&y), discrete(&z));
    assert!(is_scp(&swap, &dx, &dy)?.holds);
    assert!(is_scp(&forward, &dy, &dz)?.holds);
    assert!(is_scp(&composed, &dx, &dz)?.holds);
    println!("composition through discrete structures stays SCP");
    Ok(())
}
