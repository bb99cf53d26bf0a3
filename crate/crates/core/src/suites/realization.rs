//! Monodromy matrices of the A_n spine and the P_VI graph, their entries and
//! the atoms that identity catalogs refer to.

use super::relation::Env;
use crate::fatgraph::{compile_path, pvi_graph, spine_graph_an, FatGraph};
use crate::qring::{Coefficient, Ring, SkewForm, TorusElement};
use crate::smallmat::{lift, mat_chain, mat_neg, r_matrix, scalar_tensor, tensor_embed, Matrix};

/// Root and orbifold targets of the monodromy matrices on a graph.
#[derive(Clone, Debug)]
pub struct MonodromyRealization {
    pub graph: FatGraph,
    pub root: String,
    pub targets: Vec<String>,
}

impl MonodromyRealization {
    pub fn spine(n: usize) -> Self {
        let graph = spine_graph_an(n).expect("n >= 2");
        MonodromyRealization {
            graph,
            root: "S".into(),
            targets: (1..n).map(|k| format!("Z{k}")).collect(),
        }
    }

    /// `M_1` winds around `Z`, `M_2` around `Y`.
    pub fn pvi() -> Self {
        MonodromyRealization {
            graph: pvi_graph(),
            root: "X".into(),
            targets: vec!["Z".into(), "Y".into()],
        }
    }

    pub fn on_graph(graph: FatGraph, root: &str, targets: &[&str]) -> Self {
        MonodromyRealization {
            graph,
            root: root.into(),
            targets: targets.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn form(&self) -> SkewForm {
        self.graph.skew_form()
    }

    fn omega_of(&self, e: &str) -> Coefficient {
        self.graph
            .edge(e)
            .and_then(|i| self.graph.orbifold(i))
            .map(|o| o.omega())
            .unwrap_or_else(Coefficient::zero)
    }

    pub fn omega0(&self) -> Coefficient {
        self.omega_of(&self.root)
    }

    /// `omega_i` of each target.
    pub fn omegas(&self) -> Vec<Coefficient> {
        self.targets.iter().map(|t| self.omega_of(t)).collect()
    }

    pub fn matrices<R: Ring>(&self, r: &R) -> Vec<Matrix<R::Elem>> {
        self.targets
            .iter()
            .map(|t| {
                let p = self
                    .graph
                    .monodromy_path(&self.root, t)
                    .expect("target reachable from root");
                compile_path(r, &self.graph, &p).expect("monodromy path is consistent")
            })
            .collect()
    }
}

/// `(a, b, c)` from `M = [[q a + w, -b], [c, -q^{-1} a]]`.
pub fn extract<R: Ring>(r: &R, m: &Matrix<R::Elem>) -> (R::Elem, R::Elem, R::Elem) {
    let a = r.qpow(1, &r.neg(m.get(1, 1)));
    let b = r.neg(m.get(0, 1));
    let c = m.get(1, 0).clone();
    (a, b, c)
}

/// Braid move `M_i -> -M_i M_{i+1} M_i`, `M_{i+1} -> M_i` (1-based `i`).
pub fn braid<R: Ring>(r: &R, ms: &[Matrix<R::Elem>], i: usize) -> Vec<Matrix<R::Elem>> {
    let (x, y) = (&ms[i - 1], &ms[i]);
    let mut out = ms.to_vec();
    out[i - 1] = mat_neg(r, &mat_chain(r, &[x, y, x]));
    out[i] = x.clone();
    out
}

/// `G_{0,i} = b_i + c_i + w_0 a_i`.
pub fn geodesic_root<R: Ring>(
    r: &R,
    w0: &Coefficient,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> R::Elem {
    r.add(&r.add(b, c), &r.scale(w0, a))
}

/// `G_{i,j} = q b_i c_j + q^3 c_i b_j - (q^3 + q) a_i a_j`.
pub fn geodesic_pair<R: Ring>(
    r: &R,
    (ai, bi, ci): (&R::Elem, &R::Elem, &R::Elem),
    (aj, bj, cj): (&R::Elem, &R::Elem, &R::Elem),
) -> R::Elem {
    let x = r.qpow(1, &r.mul(bi, cj));
    let y = r.qpow(3, &r.mul(ci, bj));
    let z = r.scale(
        &(&Coefficient::q_pow(3) + &Coefficient::q_pow(1)),
        &r.mul(ai, aj),
    );
    r.sub(&r.add(&x, &y), &z)
}

/// Atoms `M{i}`, `M{i}^1`, `M{i}^2`, `a{i}`, `b{i}`, `c{i}`, `M{i}_11`,
/// `G0{i}` and `G{i}{j}` under `prefix`.
pub fn populate<R: Ring>(
    r: &R,
    env: &mut Env<R::Elem>,
    prefix: &str,
    ms: &[Matrix<R::Elem>],
    omega0: &Coefficient,
) {
    let mut abc = Vec::new();
    for (k, m) in ms.iter().enumerate() {
        let i = k + 1;
        let (a, b, c) = extract(r, m);
        env.matrix(format!("{prefix}M{i}"), m.clone());
        env.matrix(
            format!("{prefix}M{i}^1"),
            tensor_embed(r, m, 1).expect("2x2"),
        );
        env.matrix(
            format!("{prefix}M{i}^2"),
            tensor_embed(r, m, 2).expect("2x2"),
        );
        env.scalar(format!("{prefix}M{i}_11"), m.get(0, 0).clone());
        env.scalar(
            format!("{prefix}G0{i}"),
            geodesic_root(r, omega0, &a, &b, &c),
        );
        env.scalar(format!("{prefix}a{i}"), a.clone());
        env.scalar(format!("{prefix}b{i}"), b.clone());
        env.scalar(format!("{prefix}c{i}"), c.clone());
        abc.push((a, b, c));
    }
    for i in 0..abc.len() {
        for j in i + 1..abc.len() {
            let (ai, bi, ci) = &abc[i];
            let (aj, bj, cj) = &abc[j];
            env.scalar(
                format!("{prefix}G{}{}", i + 1, j + 1),
                geodesic_pair(r, (ai, bi, ci), (aj, bj, cj)),
            );
        }
    }
}

/// Scalar R-matrices: `R[q]`, `R[q^-1]`, `R[q^-2]`, `RT[q^-2]` and the legs
/// `R12`, `R13`, `R23` of `R[q]` on three factors.
pub fn populate_r<R: Ring>(r: &R, env: &mut Env<R::Elem>) {
    env.matrix("R[q]", lift(r, &r_matrix(1)));
    env.matrix("R[q^-1]", lift(r, &r_matrix(-1)));
    env.matrix("R[q^-2]", lift(r, &r_matrix(-2)));
    env.matrix("RT[q^-2]", lift(r, &r_matrix(-2).transpose()));
    for (name, legs) in [("R12", (1, 2)), ("R13", (1, 3)), ("R23", (2, 3))] {
        env.matrix(
            name,
            lift(r, &scalar_tensor(&r_matrix(1), legs).expect("legs")),
        );
    }
}

/// P_VI atoms `K1`, `K2`, `w3 = K1 + K2`, `GXZ`, `GXY`, `GYZ` from `a{i}` etc.
pub fn populate_pvi<R: Ring>(r: &R, env: &mut Env<R::Elem>, w: [&Coefficient; 3]) {
    let [w0, w1, w2] = w;
    let g = |s: &str| env.get_scalar(s).expect("P_VI entries").clone();
    let (a1, b1, c1, a2, b2, c2) = (g("a1"), g("b1"), g("c1"), g("a2"), g("b2"), g("c2"));
    let k1 = r.sub(
        &r.sub(&r.mul(&a1, &c2), &r.qpow(2, &r.mul(&c1, &a2))),
        &r.scale(&(&Coefficient::q_pow(1) * w2), &c1),
    );
    let k2 = r.sub(
        &r.sub(&r.mul(&a2, &b1), &r.qpow(-2, &r.mul(&b2, &a1))),
        &r.scale(&(&Coefficient::q_pow(-1) * w1), &b2),
    );
    let gxz = geodesic_root(r, w0, &a1, &b1, &c1);
    let gxy = geodesic_root(r, w0, &a2, &b2, &c2);
    let q2 = Coefficient::q_pow(2);
    let gyz = r.sub(
        &r.sub(
            &r.sub(&r.qpow(1, &r.mul(&b1, &c2)), &r.qpow(3, &r.mul(&a1, &a2))),
            &r.add(&r.scale(&(&q2 * w1), &a2), &r.scale(&(&q2 * w2), &a1)),
        ),
        &r.scalar(&(&Coefficient::q_pow(1) * &(w1 * w2))),
    );
    env.scalar("w3", r.add(&k1, &k2));
    env.scalar("K1", k1);
    env.scalar("K2", k2);
    env.scalar("GXZ", gxz);
    env.scalar("GXY", gxy);
    env.scalar("GYZ", gyz);
}

/// Even-lattice check on every entry.
pub fn entries_even(ms: &[Matrix<TorusElement>]) -> bool {
    ms.iter().all(|m| {
        m.entries().iter().all(|e| {
            let all: Vec<usize> = (0..e.dim()).collect();
            e.even_check(&all)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spine_entries_have_the_normal_form() {
        for n in [3, 4] {
            let real = MonodromyRealization::spine(n);
            let f = real.form();
            let ms = real.matrices(&f);
            assert!(entries_even(&ms));
            for m in &ms {
                let (a, _, _) = extract(&f, m);
                // M_11 = q a (omega = 0)
                assert_eq!(m.get(0, 0), &f.qpow(1, &a));
            }
        }
    }

    #[test]
    fn pvi_entries_carry_omega() {
        let real = MonodromyRealization::pvi();
        let f = real.form();
        let ms = real.matrices(&f);
        let ws = real.omegas();
        for (m, w) in ms.iter().zip(&ws) {
            let (a, _, _) = extract(&f, m);
            let want = f.add(&f.qpow(1, &a), &f.scalar(w));
            assert_eq!(m.get(0, 0), &want);
        }
    }

    #[test]
    fn g12_classical_limit_has_three_unit_monomials() {
        let real = MonodromyRealization::spine(3);
        let f = real.form();
        let mut env = Env::new();
        populate(&f, &mut env, "", &real.matrices(&f), &real.omega0());
        let g = env.get_scalar("G12").unwrap();
        assert_eq!(g.len(), 3, "{}", g.fmt_with(real.graph.names()));
        for (_, c) in g.terms() {
            assert_eq!(c, &Coefficient::one());
        }
        assert_eq!(&g.star(), g);
    }
}
