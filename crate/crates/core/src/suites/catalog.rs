//! Identity catalogs over the atoms provided by [`super::realization`].

use super::relation::{one, q, t, Relation};
use crate::qring::Coefficient;

fn neg(c: Coefficient) -> Coefficient {
    -&c
}

/// `q^a - q^b`.
fn qd(a: i32, b: i32) -> Coefficient {
    &q(a) - &q(b)
}

pub const UQ_ANCHOR: &str = "U_q(sl2) relations of monodromy entries";
pub const CROSS_ANCHOR: &str = "U_q(sl2) and cross relations of A_n monodromy entries";
pub const NR_ANCHOR: &str = "Nelson-Regge algebra of geodesic functions";
pub const RMATRIX_ANCHOR: &str = "R-matrix form of the monodromy algebra";
pub const BRAID_ANCHOR: &str = "braid group action on monodromy matrices";
pub const PVI_ANCHOR: &str = "P_VI monodromy algebra and AW(3)";

/// `q a b = q^-1 b a`, `q^-1 a c = q c a`, `b c = 1 + w q a + q^2 a^2`,
/// `c b = 1 + w q^-1 a + q^-2 a^2`, shape of `M_11`, and `M^2 = -E` when `w = 0`.
pub fn uq_relations(i: usize, w: &Coefficient, prefix: &str) -> Vec<Relation> {
    let (a, b, c) = (
        format!("{prefix}a{i}"),
        format!("{prefix}b{i}"),
        format!("{prefix}c{i}"),
    );
    let m = format!("{prefix}M{i}");
    let ab = |x: &str, y: &str| format!("{x} {y}");
    let id = |s: &str| format!("{prefix}uq/{s}/{i}");
    let mut out = vec![
        Relation::new(
            id("ab"),
            UQ_ANCHOR,
            vec![t(q(1), &ab(&a, &b)), t(neg(q(-1)), &ab(&b, &a))],
        ),
        Relation::new(
            id("ac"),
            UQ_ANCHOR,
            vec![t(q(-1), &ab(&a, &c)), t(neg(q(1)), &ab(&c, &a))],
        ),
        Relation::new(
            id("bc"),
            UQ_ANCHOR,
            vec![
                t(one(), &ab(&b, &c)),
                t(neg(one()), ""),
                t(neg(w * &q(1)), &a),
                t(neg(q(2)), &ab(&a, &a)),
            ],
        ),
        Relation::new(
            id("cb"),
            UQ_ANCHOR,
            vec![
                t(one(), &ab(&c, &b)),
                t(neg(one()), ""),
                t(neg(w * &q(-1)), &a),
                t(neg(q(-2)), &ab(&a, &a)),
            ],
        ),
        Relation::new(
            id("shape"),
            UQ_ANCHOR,
            vec![
                t(one(), &format!("{prefix}M{i}_11")),
                t(neg(q(1)), &a),
                t(neg(w.clone()), ""),
            ],
        ),
    ];
    if w.is_zero() {
        out.push(Relation::new(
            id("square"),
            UQ_ANCHOR,
            vec![t(one(), &ab(&m, &m)), t(one(), "")],
        ));
    }
    out
}

/// The nine cross relations for `i < j`, with both forms of rows 4, 6 and 8.
pub fn cross_relations(i: usize, j: usize, prefix: &str) -> Vec<Relation> {
    let v = |x: &str, k: usize| format!("{prefix}{x}{k}");
    let p = |x: &str, k: usize, y: &str, l: usize| format!("{} {}", v(x, k), v(y, l));
    let id = |s: &str| format!("{prefix}cross/{s}/{i}{j}");
    let r = |s: &str, terms| Relation::new(id(s), CROSS_ANCHOR, terms);
    let d2 = qd(2, -2);
    vec![
        r(
            "1",
            vec![
                t(q(-1), &p("b", i, "b", j)),
                t(neg(q(1)), &p("b", j, "b", i)),
            ],
        ),
        r(
            "2",
            vec![
                t(q(-1), &p("c", i, "c", j)),
                t(neg(q(1)), &p("c", j, "c", i)),
            ],
        ),
        r(
            "3",
            vec![
                t(one(), &p("a", i, "b", j)),
                t(neg(one()), &p("b", j, "a", i)),
            ],
        ),
        r(
            "4a",
            vec![
                t(one(), &p("b", i, "a", j)),
                t(neg(one()), &p("a", j, "b", i)),
                t(neg(d2.clone()), &p("a", i, "b", j)),
            ],
        ),
        r(
            "4b",
            vec![
                t(one(), &p("b", i, "a", j)),
                t(neg(one()), &p("a", j, "b", i)),
                t(neg(d2.clone()), &p("b", j, "a", i)),
            ],
        ),
        r(
            "5",
            vec![
                t(one(), &p("c", i, "a", j)),
                t(neg(one()), &p("a", j, "c", i)),
            ],
        ),
        r(
            "6a",
            vec![
                t(one(), &p("a", i, "c", j)),
                t(neg(one()), &p("c", j, "a", i)),
                t(neg(d2.clone()), &p("c", i, "a", j)),
            ],
        ),
        r(
            "6b",
            vec![
                t(one(), &p("a", i, "c", j)),
                t(neg(one()), &p("c", j, "a", i)),
                t(neg(d2.clone()), &p("a", j, "c", i)),
            ],
        ),
        r(
            "7",
            vec![
                t(q(1), &p("c", i, "b", j)),
                t(neg(q(-1)), &p("b", j, "c", i)),
            ],
        ),
        r(
            "8a",
            vec![
                t(one(), &p("a", i, "a", j)),
                t(neg(one()), &p("a", j, "a", i)),
                t(neg(qd(0, -2)), &p("b", j, "c", i)),
            ],
        ),
        r(
            "8b",
            vec![
                t(one(), &p("a", i, "a", j)),
                t(neg(one()), &p("a", j, "a", i)),
                t(neg(qd(2, 0)), &p("c", i, "b", j)),
            ],
        ),
        r(
            "9",
            vec![
                t(q(1), &p("b", i, "c", j)),
                t(qd(-1, 3), &p("a", i, "a", j)),
                t(neg(q(-1)), &p("c", j, "b", i)),
                t(qd(-3, 1), &p("a", j, "a", i)),
            ],
        ),
    ]
}

/// Index tuples of `0..n` in the three Nelson-Regge families; `G0i` and `Gij` atoms.
pub fn nelson_regge(n: usize) -> Vec<Relation> {
    let g = |i: usize, j: usize| format!("G{i}{j}");
    let pair = |x: String, y: String| format!("{x} {y}");
    let mut out = Vec::new();
    let d2 = qd(2, -2);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                out.push(Relation::new(
                    format!("nr/adjacent/{i}{j}{k}"),
                    NR_ANCHOR,
                    vec![
                        t(q(1), &pair(g(i, j), g(j, k))),
                        t(neg(q(-1)), &pair(g(j, k), g(i, j))),
                        t(neg(d2.clone()), &g(i, k)),
                    ],
                ));
                for l in k + 1..n {
                    out.push(Relation::new(
                        format!("nr/disjoint/{i}{j}{k}{l}"),
                        NR_ANCHOR,
                        vec![
                            t(one(), &pair(g(i, j), g(k, l))),
                            t(neg(one()), &pair(g(k, l), g(i, j))),
                        ],
                    ));
                    out.push(Relation::new(
                        format!("nr/nested/{i}{l}{j}{k}"),
                        NR_ANCHOR,
                        vec![
                            t(one(), &pair(g(i, l), g(j, k))),
                            t(neg(one()), &pair(g(j, k), g(i, l))),
                        ],
                    ));
                    let cross = |sign: Coefficient| {
                        vec![
                            t(one(), &pair(g(i, k), g(j, l))),
                            t(neg(one()), &pair(g(j, l), g(i, k))),
                            t(neg(&sign * &d2), &pair(g(i, j), g(k, l))),
                            t(&sign * &d2, &pair(g(i, l), g(j, k))),
                        ]
                    };
                    out.push(Relation::new(
                        format!("nr/crossing/{i}{j}{k}{l}"),
                        NR_ANCHOR,
                        cross(one()),
                    ));
                    out.push(
                        Relation::new(
                            format!("nr/crossing-opposite-sign/{i}{j}{k}{l}"),
                            NR_ANCHOR,
                            cross(neg(one())),
                        )
                        .diagnostic(),
                    );
                }
            }
        }
    }
    out
}

/// `G0i` is written `G0{i}`; the Nelson-Regge atoms use the same names.
pub fn reflection_pair(i: usize, j: usize, prefix: &str) -> Vec<Relation> {
    let mi = format!("{prefix}M{i}^1");
    let mj = format!("{prefix}M{j}^2");
    let word = |a: &str, b: &str| (format!("{a} {mi} {b} {mj}"), format!("{mj} {a} {mi} {b}"));
    let (l, r) = word("R[q]", "R[q^-1]");
    let (l2, r2) = word("R[q^-1]", "R[q]");
    vec![
        Relation::new(
            format!("{prefix}reflection/{i}{j}"),
            RMATRIX_ANCHOR,
            vec![t(one(), &l), t(neg(one()), &r)],
        ),
        Relation::new(
            format!("{prefix}reflection-inverted-r/{i}{j}"),
            RMATRIX_ANCHOR,
            vec![t(one(), &l2), t(neg(one()), &r2)],
        )
        .diagnostic(),
    ]
}

/// `R^T[q^-2] M_i^2 M_i^1 = M_i^1 M_i^2 R[q^-2]`.
pub fn reflection_same(i: usize, prefix: &str) -> Relation {
    Relation::new(
        format!("{prefix}reflection/{i}{i}"),
        RMATRIX_ANCHOR,
        vec![
            t(one(), &format!("RT[q^-2] {prefix}M{i}^2 {prefix}M{i}^1")),
            t(
                neg(one()),
                &format!("{prefix}M{i}^1 {prefix}M{i}^2 R[q^-2]"),
            ),
        ],
    )
}

pub fn yang_baxter() -> Relation {
    Relation::new(
        "ybe/scalar",
        RMATRIX_ANCHOR,
        vec![t(one(), "R12 R13 R23"), t(neg(one()), "R23 R13 R12")],
    )
}

/// G-M relations for `1 <= i < j <= m` and every `k`.
pub fn gm_table(m: usize) -> Vec<Relation> {
    let g = |i: usize, j: usize| format!("G{i}{j}");
    let mm = |k: usize| format!("M{k}");
    let pr = |x: String, y: String| format!("{x} {y}");
    let d2 = qd(2, -2);
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            for k in 1..=m {
                let id = format!("gm/{i}{j}/{k}");
                let terms = if k == i {
                    vec![
                        t(q(-1), &pr(g(i, j), mm(i))),
                        t(neg(q(1)), &pr(mm(i), g(i, j))),
                        t(d2.clone(), &mm(j)),
                    ]
                } else if k == j {
                    vec![
                        t(q(1), &pr(g(i, j), mm(j))),
                        t(neg(q(-1)), &pr(mm(j), g(i, j))),
                        t(neg(d2.clone()), &mm(i)),
                    ]
                } else if i < k && k < j {
                    vec![
                        t(one(), &pr(g(i, j), mm(k))),
                        t(neg(one()), &pr(mm(k), g(i, j))),
                        t(neg(d2.clone()), &pr(mm(i), g(k, j))),
                        t(d2.clone(), &pr(g(i, k), mm(j))),
                    ]
                } else {
                    vec![
                        t(one(), &pr(g(i, j), mm(k))),
                        t(neg(one()), &pr(mm(k), g(i, j))),
                    ]
                };
                out.push(Relation::new(id, BRAID_ANCHOR, terms));
            }
            if j == i + 1 {
                out.push(Relation::new(
                    format!("gm/{i}{j}/alternate"),
                    BRAID_ANCHOR,
                    vec![
                        t(q(1), &pr(mm(i), g(i, j))),
                        t(neg(q(2)), &mm(j)),
                        t(neg(q(-1)), &pr(g(i, j), mm(i))),
                        t(q(-2), &mm(j)),
                    ],
                ));
            }
        }
    }
    out
}

/// Braid relation, determinants, shapes, cross relations and products after
/// the braid moves; atoms under prefixes `b1.`, `b2.`, `L.`, `R.`.
pub fn braid_relations(m: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    for k in 1..=m {
        out.push(Relation::new(
            format!("braid/relation/M{k}"),
            BRAID_ANCHOR,
            vec![
                t(one(), &format!("L.M{k}")),
                t(neg(one()), &format!("R.M{k}")),
            ],
        ));
    }
    let forward: String = (1..=m).map(|k| format!("M{k} ")).collect();
    let backward: String = (1..=m).rev().map(|k| format!("M{k} ")).collect();
    for b in 1..m {
        let p = format!("b{b}.");
        for i in 1..=m {
            out.push(Relation::new(
                format!("{p}det/{i}"),
                BRAID_ANCHOR,
                vec![
                    t(one(), &format!("{p}b{i} {p}c{i}")),
                    t(neg(q(2)), &format!("{p}a{i} {p}a{i}")),
                    t(neg(one()), ""),
                ],
            ));
            out.push(Relation::new(
                format!("{p}shape/{i}"),
                BRAID_ANCHOR,
                vec![
                    t(one(), &format!("{p}M{i}_11")),
                    t(neg(q(1)), &format!("{p}a{i}")),
                ],
            ));
        }
        for i in 1..=m {
            for j in i + 1..=m {
                out.extend(cross_relations(i, j, &p));
            }
        }
        let fw: String = (1..=m).map(|k| format!("{p}M{k} ")).collect();
        let bw: String = (1..=m).rev().map(|k| format!("{p}M{k} ")).collect();
        out.push(Relation::new(
            format!("{p}product/forward"),
            BRAID_ANCHOR,
            vec![t(one(), &fw), t(neg(one()), &forward)],
        ));
        out.push(Relation::new(
            format!("{p}product/backward"),
            BRAID_ANCHOR,
            vec![t(one(), &bw), t(neg(one()), &backward)],
        ));
    }
    out
}

fn w(k: usize) -> Coefficient {
    Coefficient::param(&format!("omega_{k}"))
}

/// Deformed cross relations of `M_1, M_2` on the P_VI graph.
pub fn pvi_cross() -> Vec<Relation> {
    let (w1, w2) = (w(1), w(2));
    let r = |s: &str, terms| Relation::new(format!("pvi/cross/{s}"), PVI_ANCHOR, terms);
    let d2 = qd(2, -2);
    vec![
        r("1", vec![t(q(-1), "a1 a2"), t(neg(q(1)), "a2 a1")]),
        r("2", vec![t(q(-1), "b1 b2"), t(neg(q(1)), "b2 b1")]),
        r("3", vec![t(q(-1), "c1 c2"), t(neg(q(1)), "c2 c1")]),
        r(
            "4",
            vec![
                t(one(), "b1 a2"),
                t(q(-2), "a1 b2"),
                t(&w1 * &q(-1), "b2"),
                t(neg(one()), "a2 b1"),
                t(neg(q(2)), "b2 a1"),
                t(neg(&w1 * &q(1)), "b2"),
            ],
        ),
        r("5", vec![t(one(), "a1 b2"), t(neg(one()), "b2 a1")]),
        r(
            "6",
            vec![
                t(one(), "a1 c2"),
                t(q(-2), "c1 a2"),
                t(&w2 * &q(-1), "c1"),
                t(neg(one()), "c2 a1"),
                t(neg(q(2)), "a2 c1"),
                t(neg(&w2 * &q(1)), "c1"),
            ],
        ),
        r("7", vec![t(one(), "c1 a2"), t(neg(one()), "a2 c1")]),
        r("8", vec![t(q(1), "c1 b2"), t(neg(q(-1)), "b2 c1")]),
        r(
            "9",
            vec![
                t(q(1), "b1 c2"),
                t(neg(q(-1)), "c2 b1"),
                t(neg(&d2 * &q(1)), "a1 a2"),
                t(neg(&d2 * &q(-1)), "a2 a1"),
                t(neg(&d2 * &w1), "a2"),
                t(neg(&d2 * &w2), "a1"),
                t(neg(&qd(1, -1) * &(&w1 * &w2)), ""),
            ],
        ),
    ]
}

/// Extra condition, centrality of `K1, K2`, `K1 K2 = 1` and AW(3).
pub fn pvi_extra() -> Vec<Relation> {
    let mut out = vec![Relation::new(
        "pvi/extra",
        PVI_ANCHOR,
        vec![t(one(), "a1 a2"), t(neg(q(2)), "c1 b2")],
    )];
    for k in ["K1", "K2"] {
        for x in ["a1", "b1", "c1", "a2", "b2", "c2"] {
            out.push(Relation::new(
                format!("pvi/central/{k}/{x}"),
                PVI_ANCHOR,
                vec![
                    t(one(), &format!("{k} {x}")),
                    t(neg(one()), &format!("{x} {k}")),
                ],
            ));
        }
    }
    out.push(Relation::new(
        "pvi/K1K2",
        PVI_ANCHOR,
        vec![t(one(), "K1 K2"), t(neg(one()), "")],
    ));
    let d2 = qd(2, -2);
    let d1 = qd(1, -1);
    let (w0, w1, w2) = (w(0), w(1), w(2));
    let aw = |id: &str,
              x: &str,
              y: &str,
              z: &str,
              wa: &Coefficient,
              wb: &Coefficient,
              wc: &Coefficient| {
        Relation::new(
            format!("pvi/aw3/{id}"),
            PVI_ANCHOR,
            vec![
                t(q(1), &format!("{x} {y}")),
                t(neg(q(-1)), &format!("{y} {x}")),
                t(neg(d2.clone()), z),
                t(neg(&d1 * &(wa * wb)), ""),
                t(neg(&d1 * wc), "w3"),
            ],
        )
    };
    out.push(aw("XY-XZ", "GXY", "GXZ", "GYZ", &w1, &w2, &w0));
    out.push(aw("XZ-YZ", "GXZ", "GYZ", "GXY", &w2, &w0, &w1));
    out.push(aw("YZ-XY", "GYZ", "GXY", "GXZ", &w0, &w1, &w2));
    out
}
