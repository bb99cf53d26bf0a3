//! Root-of-unity representation of the A_3 torus and a numeric check of
//! the quantum determinant `b1 c1 - q^2 a1^2 - 1`.

use shearq::oracle::{ClockShiftRep, NumRing};
use shearq::qring::ParamValues;
use shearq::suites::{
    an_core_relations, eval_relation, value_norm, BaseEnv, EnvBuilder, MonodromyRealization,
};

fn main() {
    let real = MonodromyRealization::spine(3);
    let f = real.form();
    let rels = an_core_relations(3);
    let det = rels.iter().find(|r| r.id == "uq/bc/1").unwrap();
    for n in [5, 7] {
        let rep = ClockShiftRep::new(&f, n, 1, ParamValues::new()).unwrap();
        let r = NumRing { rep: &rep };
        let env = BaseEnv(&real).build(&r);
        let v = eval_relation(&r, &env, det).unwrap();
        println!(
            "N = {n}: dim {}, |b1 c1 - q^2 a1^2 - 1| = {:.2e}",
            rep.dim(),
            value_norm(&v)
        );
    }
}
