//! The full brute-force verification suite on the two-by-two space: every
//! family scanned, every validated structure pushed through slice
//! transport, the hull laws, both operator round trips, the base round
//! trip, concavity, pointwise bounds, mode agreement, and the morphism
//! theorems.
//!
//! ```text
//! cargo run --example verify_suite
//! ```

use softconvex::oracle::{verify_suite, EnumerationBudget};
use softconvex::{Result, Space};

fn main() -> Result<()> {
    let space = Space::new(vec!["x1", "x2"], vec!["e1", "e2"])?;
    let budget = EnumerationBudget::default();
    let report = verify_suite(&space, &budget)?;
    print!("{report}");
    std::process::exit(if report.passed() { 0 } else { 1 });
}
