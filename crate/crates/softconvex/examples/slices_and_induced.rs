//! Crossing between soft and crisp convexity: slicing a structure at a
//! parameter yields a crisp convex structure, and a crisp structure induces
//! a soft one (the full product and its single-set diagonal variant).
//!
//! ```text
//! cargo run --example slices_and_induced
//! ```

use std::collections::BTreeSet;

use softconvex::{
    close_to_structure, induced_from_crisp, single_set_from_crisp, CrispConvexStructure, Result,
    SoftFamily, SoftSet, Space,
};

fn crisp_set(names: &[&str]) -> BTreeSet<String> {
    names.iter().map(|s| s.to_string()).collect()
}

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

    // Every slice of a validated structure is a crisp convex structure.
    for param in space.parameters() {
        let crisp = structure.slice(param)?;
        println!("slice at {param}: {} member sets", crisp.len());
        for member in crisp.members() {
            let elems: Vec<&str> = member.iter().map(String::as_str).collect();
            println!("  {}", softconvex::soft_set::format_crisp(&elems));
        }
    }

    // A crisp structure induces the soft structure of all soft sets whose
    // slices are crisp members; its member count is |crisp| ^ |parameters|.
    let crisp = CrispConvexStructure::new(
        vec!["x1".to_string(), "x2".to_string()],
        vec![crisp_set(&[]), crisp_set(&["x1"]), crisp_set(&["x1", "x2"])],
    )?;
    let params = vec!["e1".to_string(), "e2".to_string()];
    let induced = induced_from_crisp(&crisp, &params)?;
    println!(
        "induced structure: {} members ({} crisp members ^ {} parameters)",
        induced.len(),
        crisp.len(),
        params.len()
    );
    for param in &params {
        assert_eq!(induced.slice(param)?.members(), crisp.members());
    }

    // The single-set variant assigns the same crisp member to every
    // parameter, one soft member per crisp member.
    let single = single_set_from_crisp(&crisp, &params)?;
    println!("single-set variant: {} members", single.len());
    for member in single.members() {
        println!("  {member}");
    }
    Ok(())
}
