//! Monodromy matrices of the A_3 spine, their entries and the U_q(sl2) relations.

use shearq::qring::Coefficient;
use shearq::suites::{
    an_core_relations, eval_relation, extract, nonzero_entries, MonodromyRealization,
};
use shearq::suites::{populate, Env};

fn main() {
    let real = MonodromyRealization::spine(3);
    let f = real.form();
    let names = real.graph.names().to_vec();
    let ms = real.matrices(&f);
    for (i, m) in ms.iter().enumerate() {
        let (a, b, c) = extract(&f, m);
        println!("M{}: a = {}", i + 1, a.fmt_with(&names));
        println!("    b = {}", b.fmt_with(&names));
        println!("    c = {}", c.fmt_with(&names));
    }
    let mut env = Env::new();
    populate(&f, &mut env, "", &ms, &Coefficient::zero());
    let rels = an_core_relations(3);
    let ok = rels
        .iter()
        .filter(|r| nonzero_entries(&f, &eval_relation(&f, &env, r).unwrap()).is_empty())
        .count();
    println!("{ok} of {} core relations hold exactly", rels.len());
}
