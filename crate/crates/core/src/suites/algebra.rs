//! Suites over monodromy realizations: A_n core, Nelson-Regge, R-matrix,
//! braid action and P_VI.

use super::catalog::*;
use super::check::{Checker, EnvBuilder};
use super::realization::{braid, populate, populate_pvi, populate_r, MonodromyRealization};
use super::relation::{one, q, t, Env, Relation};
use super::report::IdentityReport;
use crate::qring::Ring;

/// Base atoms of a realization plus the scalar R-matrices.
pub struct BaseEnv<'a>(pub &'a MonodromyRealization);

impl EnvBuilder for BaseEnv<'_> {
    fn build<R: Ring>(&self, r: &R) -> Env<R::Elem> {
        let mut env = Env::new();
        let ms = self.0.matrices(r);
        populate(r, &mut env, "", &ms, &self.0.omega0());
        populate_r(r, &mut env);
        env
    }
}

/// Base atoms and their images under `b1.` = beta_12, `b2.` = beta_23,
/// `L.` = beta_12 beta_23 beta_12, `R.` = beta_23 beta_12 beta_23.
pub struct BraidEnv<'a>(pub &'a MonodromyRealization);

impl EnvBuilder for BraidEnv<'_> {
    fn build<R: Ring>(&self, r: &R) -> Env<R::Elem> {
        let mut env = Env::new();
        let w0 = self.0.omega0();
        let ms = self.0.matrices(r);
        populate(r, &mut env, "", &ms, &w0);
        let seq = |ops: &[usize]| ops.iter().fold(ms.clone(), |acc, &i| braid(r, &acc, i));
        for (p, ops) in [
            ("b1.", vec![1]),
            ("b2.", vec![2]),
            ("L.", vec![1, 2, 1]),
            ("R.", vec![2, 1, 2]),
        ] {
            populate(r, &mut env, p, &seq(&ops), &w0);
        }
        env
    }
}

/// P_VI entries, `K1`, `K2`, `w3` and the three geodesic functions.
pub struct PviEnv<'a>(pub &'a MonodromyRealization);

impl EnvBuilder for PviEnv<'_> {
    fn build<R: Ring>(&self, r: &R) -> Env<R::Elem> {
        let mut env = BaseEnv(self.0).build(r);
        let (w0, ws) = (self.0.omega0(), self.0.omegas());
        populate_pvi(r, &mut env, [&w0, &ws[0], &ws[1]]);
        env
    }
}

/// Options shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub samples: usize,
    pub moduli: Vec<u32>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 1,
            samples: 1000,
            moduli: crate::oracle::DEFAULT_MODULI.to_vec(),
        }
    }
}

fn tagged(mut reps: Vec<IdentityReport>, tag: &str) -> Vec<IdentityReport> {
    for r in reps.iter_mut() {
        r.id = format!("{tag}/{}", r.id);
    }
    reps
}

/// Relations of the A_n core on `n` points.
pub fn an_core_relations(n: usize) -> Vec<Relation> {
    let zero = crate::qring::Coefficient::zero();
    let mut rels = Vec::new();
    for i in 1..n {
        rels.extend(uq_relations(i, &zero, ""));
    }
    for i in 1..n {
        for j in i + 1..n {
            rels.extend(cross_relations(i, j, ""));
        }
    }
    rels
}

pub fn an_core(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    for n in [3, 4] {
        let real = MonodromyRealization::spine(n);
        let ck = Checker::new(&real.graph, &BaseEnv(&real), &opts.moduli, opts.seed);
        out.extend(tagged(
            ck.check_all(&an_core_relations(n)),
            &format!("A{n}"),
        ));
    }
    out
}

pub fn an_nelson_regge(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let real = MonodromyRealization::spine(4);
    let ck = Checker::new(&real.graph, &BaseEnv(&real), &opts.moduli, opts.seed);
    let rels = nelson_regge(4);
    let mut out = tagged(ck.check_all(&rels), "A4");
    let count = |f: &str| {
        rels.iter()
            .filter(|r| r.id.contains(f) && !r.diagnostic)
            .count()
    };
    let (a, d, n, c) = (
        count("/adjacent/"),
        count("/disjoint/"),
        count("/nested/"),
        count("/crossing/"),
    );
    out.push(
        IdentityReport::new("A4/nr/enumeration", NR_ANCHOR, true).with_detail(format!(
            "{} tuples in 0..3: {a} adjacent, {d} disjoint, {n} nested, {c} crossing",
            a + d + n + c
        )),
    );
    out
}

pub fn an_rmatrix(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let real = MonodromyRealization::spine(3);
    let ck = Checker::new(&real.graph, &BaseEnv(&real), &opts.moduli, opts.seed);
    out.extend(ck.check_all(&[yang_baxter()]));
    let mut cases = vec![
        ("A3", MonodromyRealization::spine(3)),
        ("A4", MonodromyRealization::spine(4)),
        ("PVI", MonodromyRealization::pvi()),
    ];
    for (tag, real) in cases.drain(..) {
        let m = real.targets.len();
        let mut rels = Vec::new();
        for i in 1..=m {
            rels.push(reflection_same(i, ""));
        }
        for i in 1..=m {
            for j in i + 1..=m {
                rels.extend(reflection_pair(i, j, ""));
            }
        }
        let ck = Checker::new(&real.graph, &BaseEnv(&real), &opts.moduli, opts.seed);
        out.extend(tagged(ck.check_all(&rels), tag));
    }
    out
}

/// `-M_i M_{i+1} M_i = q M_i G_{i,i+1} - q^2 M_{i+1}`.
pub fn braid_alternate(m: usize) -> Vec<Relation> {
    (1..m)
        .map(|i| {
            let j = i + 1;
            Relation::new(
                format!("braid/alternate/{i}"),
                BRAID_ANCHOR,
                vec![
                    t(one(), &format!("M{i} M{j} M{i}")),
                    t(q(1), &format!("M{i} G{i}{j}")),
                    t(-&q(2), &format!("M{j}")),
                ],
            )
        })
        .collect()
}

pub fn an_braid(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let real = MonodromyRealization::spine(4);
    let m = real.targets.len();
    let mut rels = braid_relations(m);
    rels.extend(braid_alternate(m));
    rels.extend(gm_table(m));
    let ck = Checker::new(&real.graph, &BraidEnv(&real), &opts.moduli, opts.seed);
    tagged(ck.check_all(&rels), "A4")
}

pub fn pvi_relations(real: &MonodromyRealization) -> Vec<Relation> {
    let ws = real.omegas();
    let mut rels = Vec::new();
    for (k, w) in ws.iter().enumerate() {
        rels.extend(uq_relations(k + 1, w, "").into_iter().map(|mut r| {
            r.anchor = PVI_ANCHOR.into();
            r
        }));
    }
    rels.extend(pvi_cross());
    rels.extend(pvi_extra());
    rels
}

pub fn pvi(opts: &SuiteOptions) -> Vec<IdentityReport> {
    let real = MonodromyRealization::pvi();
    let ck = Checker::new(&real.graph, &PviEnv(&real), &opts.moduli, opts.seed);
    let mut out = ck.check_all(&pvi_relations(&real));
    for g in ["GXZ", "GXY", "GYZ"] {
        out.push(ck.check_star_fixed(&format!("pvi/hermitian/{g}"), PVI_ANCHOR, g));
    }
    out
}
