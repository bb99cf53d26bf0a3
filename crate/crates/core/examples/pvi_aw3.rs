//! P_VI monodromy entries with symbolic omegas, the central K1, K2 and AW(3).

use shearq::suites::{pvi, EnvBuilder, MonodromyRealization, PviEnv, SuiteOptions};

fn main() {
    let real = MonodromyRealization::pvi();
    let f = real.form();
    let env = PviEnv(&real).build(&f);
    let names = real.graph.names().to_vec();
    for atom in ["b1", "K1", "GXZ", "GYZ"] {
        println!(
            "{atom} = {}",
            env.get_scalar(atom).unwrap().fmt_with(&names)
        );
    }
    for r in pvi(&SuiteOptions::default()) {
        if r.id.contains("aw3") || r.id.contains("K1K2") || r.id.contains("hermitian") {
            println!("{:?} {}", r.status, r.id);
        }
    }
}
