//! Braid moves on the A_4 monodromy matrices: braid relation, determinants,
//! invariant products and the G-M table.

use shearq::suites::{an_braid, SuiteOptions};

fn main() {
    let reps = an_braid(&SuiteOptions::default());
    let pass = reps.iter().filter(|r| r.passed()).count();
    for r in reps
        .iter()
        .filter(|r| r.id.contains("relation") || r.id.contains("product"))
    {
        println!("{:?} {}", r.status, r.id);
    }
    println!("{pass} of {} braid identities hold", reps.len());
}
