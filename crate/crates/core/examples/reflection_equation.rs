//! Yang-Baxter equation and reflection equations on the A_3 spine.

use shearq::suites::{an_rmatrix, SuiteOptions};

fn main() {
    for r in an_rmatrix(&SuiteOptions::default()) {
        let tag = if r.diagnostic { " (diagnostic)" } else { "" };
        println!("{:?} {}{tag}", r.status, r.id);
        if let Some(w) = &r.witness {
            println!("    {}", &w[..w.len().min(120)]);
        }
    }
}
