//! Classical flips and the pentagon on A_4, and the quantum substitution of
//! an inner flip with its exact invariants.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use shearq::fatgraph::spine_graph_an;
use shearq::mcg::{classical_flip, pentagon_defect, QuantumSubstitution, ShearState};

fn main() {
    let g = spine_graph_an(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let s = ShearState::random(g.clone(), &mut rng, 2.0);
    let t = classical_flip(&s, "X1").unwrap();
    for (k, name) in g.names().iter().enumerate() {
        println!("{name:>3}: {:+.6} -> {:+.6}", s.values[k], t.values[k]);
    }
    println!(
        "pentagon defect: {:?}",
        pentagon_defect(&s, "X1", "X2").unwrap()
    );

    let sub = QuantumSubstitution::inner(&g, "X1").unwrap();
    for (name, ok) in sub.check_invariants(20, 7) {
        println!("{name}: {ok}");
    }
}
