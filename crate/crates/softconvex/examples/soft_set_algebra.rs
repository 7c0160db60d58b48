//! Soft-set algebra on a three-element universe with two parameters:
//! construction, the lattice operations, inclusion, and directedness.
//!
//! ```text
//! cargo run --example soft_set_algebra
//! ```

use softconvex::{Result, SoftFamily, SoftSet, Space};

fn main() -> Result<()> {
    let space = Space::new(vec!["x1", "x2", "x3"], vec!["e1", "e2"])?;

    // A soft set assigns one subset of the universe to every parameter.
    let omega1 = SoftSet::from_pairs(&space, &[("e1", &["x1"]), ("e2", &["x1"])])?;
    let omega4 = SoftSet::from_pairs(&space, &[("e1", &["x2"]), ("e2", &["x2"])])?;
    let omega5 = SoftSet::from_pairs(&space, &[("e1", &["x1", "x2"]), ("e2", &["x1", "x2"])])?;

    println!("omega1          = {omega1}");
    println!("omega4          = {omega4}");
    println!("union           = {}", omega1.union(&omega4)?);
    println!("intersection    = {}", omega1.intersect(&omega4)?);
    println!("difference      = {}", omega5.difference(&omega1)?);
    println!("complement      = {}", omega1.complement());
    println!("omega1 <= omega5: {}", omega1.is_subset(&omega5)?);
    println!("omega5 <= omega1: {}", omega5.is_subset(&omega1)?);

    // The null and absolute soft sets bound the lattice.
    let null = SoftSet::null(&space);
    let absolute = SoftSet::absolute(&space);
    println!("null            = {null}");
    println!("absolute        = {absolute}");
    assert_eq!(omega1.union(&null)?, omega1);
    assert_eq!(omega1.intersect(&absolute)?, omega1);

    // Families deduplicate members and support family-wide operations; the
    // empty family unions to the null soft set and intersects to the
    // absolute one.
    let family = SoftFamily::new(&space, vec![omega1.clone(), omega4.clone(), omega5.clone()])?;
    println!("family union    = {}", family.union_all());
    println!("family meet     = {}", family.intersection_all());
    println!("upward directed = {}", family.is_upward_directed());

    // Dropping the top element breaks directedness: omega1 and omega4 no
    // longer have an upper bound inside the family.
    let undirected = SoftFamily::new(&space, vec![omega1, omega4])?;
    println!("without top     = {}", undirected.is_upward_directed());
    Ok(())
}
