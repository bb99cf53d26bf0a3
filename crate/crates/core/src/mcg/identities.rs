//! Classical matrix identities for flips and decoration changes, checked
//! exactly in [`SqrtRing`] and numerically on random shears.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::classical::{classical_flip, classical_pending_flip, decoration_change, ShearState};
use super::sqrt::{SqrtElem, SqrtRing};
use crate::fatgraph::{FatGraph, Meta, Orbifold};
use crate::oracle::FloatRing;
use crate::qring::{Coefficient, Ring, TorusElement};
use crate::smallmat::{
    f_matrix, identity, mat_mul, mat_neg, mat_sub, omega_commutant, turn_matrix, Matrix, Turn,
};

/// Edge shears before (`A`..`Z`) and after (`At`..`Zt`) a move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    C,
    D,
    Z,
    At,
    Bt,
    Ct,
    Dt,
    Zt,
    Y,
    P,
    /// `Y + P`
    YP,
    /// `-P`
    NegP,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    X(Var),
    L,
    R,
    F,
    Omega,
    NegOmega,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MoveKind {
    Inner,
    Pending,
    Decoration,
}

#[derive(Clone, Debug)]
pub struct ClassicalIdentity {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: MoveKind,
    pub lhs: Vec<Sym>,
    pub rhs: Vec<Sym>,
    /// `false` for corrected variants reported as diagnostics.
    pub printed: bool,
}

/// Parse `"D R Z R A"`; `~` marks a post-move shear, `F`, `W`, `-W` the
/// orbifold factor and its commutant.
fn word(text: &str) -> Vec<Sym> {
    text.split_whitespace()
        .map(|t| match t {
            "L" => Sym::L,
            "R" => Sym::R,
            "F" => Sym::F,
            "W" => Sym::Omega,
            "-W" => Sym::NegOmega,
            "A" => Sym::X(Var::A),
            "B" => Sym::X(Var::B),
            "C" => Sym::X(Var::C),
            "D" => Sym::X(Var::D),
            "Z" => Sym::X(Var::Z),
            "A~" => Sym::X(Var::At),
            "B~" => Sym::X(Var::Bt),
            "C~" => Sym::X(Var::Ct),
            "D~" => Sym::X(Var::Dt),
            "Z~" => Sym::X(Var::Zt),
            "Y" => Sym::X(Var::Y),
            "P" => Sym::X(Var::P),
            "Y+P" => Sym::X(Var::YP),
            "-P" => Sym::X(Var::NegP),
            other => panic!("bad symbol {other}"),
        })
        .collect()
}

fn ident(
    id: &'static str,
    anchor: &'static str,
    kind: MoveKind,
    lhs: &str,
    rhs: &str,
    printed: bool,
) -> ClassicalIdentity {
    ClassicalIdentity {
        id,
        anchor,
        kind,
        lhs: word(lhs),
        rhs: word(rhs),
        printed,
    }
}

/// Printed identities followed by the corrected variants.
pub fn classical_catalog() -> Vec<ClassicalIdentity> {
    use MoveKind::*;
    vec![
        ident(
            "inner-1",
            "inner flip, curve D-Z-A",
            Inner,
            "D R Z R A",
            "A~ R D~",
            true,
        ),
        ident(
            "inner-2",
            "inner flip, curve D-Z-B",
            Inner,
            "D R Z L B",
            "D~ L Z~ R B~",
            true,
        ),
        ident(
            "inner-3",
            "inner flip, curve C-D",
            Inner,
            "C L D",
            "C~ L Z~ L D~",
            true,
        ),
        ident(
            "pending-1",
            "pending flip, curve A-Z-B",
            Pending,
            "A L Z F W Z L B",
            "A~ R Z~ -W Z~ R B~",
            true,
        ),
        ident(
            "pending-2",
            "pending flip, loop at A",
            Pending,
            "A L Z W Z R A",
            "A~ R Z~ -W Z~ L A~",
            true,
        ),
        ident(
            "pending-3",
            "pending flip, loop at B",
            Pending,
            "B R Z W Z L B",
            "B~ L Z~ -W Z~ R B~",
            true,
        ),
        ident(
            "decoration-L",
            "decoration change, left loop",
            Decoration,
            "Y L P L Y",
            "Y+P L -P L Y+P",
            true,
        ),
        ident(
            "decoration-R",
            "decoration change, right loop",
            Decoration,
            "Y R P R Y",
            "Y+P R -P R Y+P",
            true,
        ),
        ident(
            "inner-1-corrected",
            "inner flip, curve D-Z-A",
            Inner,
            "D R Z R A",
            "D~ R A~",
            false,
        ),
        ident(
            "inner-3-corrected",
            "inner flip, curve D-C",
            Inner,
            "D L C",
            "D~ L Z~ L C~",
            false,
        ),
        ident(
            "pending-2-corrected",
            "pending flip, loop at A",
            Pending,
            "A L Z W Z R A",
            "A~ R Z~ W Z~ L A~",
            false,
        ),
        ident(
            "pending-3-corrected",
            "pending flip, loop at B",
            Pending,
            "B R Z W Z L B",
            "B~ L Z~ W Z~ R B~",
            false,
        ),
    ]
}

/// Half-exponentials `(e^{x/2}, e^{-x/2})` for each variable.
pub trait ShearModel<R: Ring> {
    fn half(&self, v: Var) -> (R::Elem, R::Elem);
}

pub fn eval_word<R: Ring, M: ShearModel<R>>(
    r: &R,
    model: &M,
    w: &[Sym],
    omega: &Coefficient,
    a: &Coefficient,
    c: &Coefficient,
) -> Matrix<R::Elem> {
    let mut acc = identity(r, 2);
    for s in w {
        let m = match *s {
            Sym::X(v) => {
                let (h, hi) = model.half(v);
                Matrix::from_rows(vec![vec![r.zero(), r.neg(&h)], vec![hi, r.zero()]])
            }
            Sym::L => turn_matrix(r, Turn::Left),
            Sym::R => turn_matrix(r, Turn::Right),
            Sym::F => f_matrix(r, omega),
            Sym::Omega => omega_commutant(r, a, c, omega),
            Sym::NegOmega => mat_neg(r, &omega_commutant(r, a, c, omega)),
        };
        acc = mat_mul(r, &acc, &m).expect("2x2");
    }
    acc
}

const OMEGA: &str = "omega";

fn unit(n: usize, i: usize, k: i32) -> Vec<i32> {
    let mut v = vec![0; n];
    v[i] = k;
    v
}

fn plus(a: &[i32], b: &[i32]) -> Vec<i32> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg(a: &[i32]) -> Vec<i32> {
    a.iter().map(|x| -x).collect()
}

/// Exact model: indices `A B C D Z` (inner), `A B Z` (pending), `Y P` (decoration).
pub struct ExactModel {
    pub ring: SqrtRing,
    kind: MoveKind,
}

impl ExactModel {
    pub fn new(kind: MoveKind) -> Self {
        let ring = match kind {
            MoveKind::Inner => SqrtRing::new(
                5,
                TorusElement::one(5).add(&TorusElement::monomial(&unit(5, 4, 2))),
            ),
            MoveKind::Pending => SqrtRing::new(
                3,
                TorusElement::one(3)
                    .add(&TorusElement::term(
                        &unit(3, 2, 2),
                        Coefficient::param(OMEGA),
                    ))
                    .add(&TorusElement::monomial(&unit(3, 2, 4))),
            ),
            MoveKind::Decoration => SqrtRing::new(2, TorusElement::one(2)),
        };
        ExactModel { ring, kind }
    }

    fn mono(&self, du: &[i32]) -> SqrtElem {
        self.ring.monomial(du)
    }

    /// `e^{L/2} r` and its inverse `e^{-L/2} r / P`.
    fn times_root(&self, du: &[i32]) -> (SqrtElem, SqrtElem) {
        let r = &self.ring;
        (
            r.mul(&self.mono(du), &r.root()),
            r.mul(&self.mono(&neg(du)), &r.inv_root()),
        )
    }

    /// `e^{L/2} / r` and its inverse `e^{-L/2} r`.
    fn over_root(&self, du: &[i32]) -> (SqrtElem, SqrtElem) {
        let (h, hi) = self.times_root(&neg(du));
        (hi, h)
    }

    fn plain(&self, du: &[i32]) -> (SqrtElem, SqrtElem) {
        (self.mono(du), self.mono(&neg(du)))
    }
}

impl ShearModel<SqrtRing> for ExactModel {
    fn half(&self, v: Var) -> (SqrtElem, SqrtElem) {
        use Var::*;
        match self.kind {
            MoveKind::Inner => {
                let e = |i| unit(5, i, 1);
                match v {
                    A => self.plain(&e(0)),
                    B => self.plain(&e(1)),
                    C => self.plain(&e(2)),
                    D => self.plain(&e(3)),
                    Z => self.plain(&e(4)),
                    At => self.times_root(&e(0)),
                    Ct => self.times_root(&e(2)),
                    Bt => self.over_root(&plus(&e(1), &e(4))),
                    Dt => self.over_root(&plus(&e(3), &e(4))),
                    Zt => self.plain(&neg(&e(4))),
                    _ => panic!("{v:?} is not an inner-flip variable"),
                }
            }
            MoveKind::Pending => {
                let e = |i| unit(3, i, 1);
                match v {
                    A => self.plain(&e(0)),
                    B => self.plain(&e(1)),
                    Z => self.plain(&e(2)),
                    At => self.times_root(&e(0)),
                    Bt => self.over_root(&plus(&e(1), &unit(3, 2, 2))),
                    Zt => self.plain(&neg(&e(2))),
                    _ => panic!("{v:?} is not a pending-flip variable"),
                }
            }
            MoveKind::Decoration => {
                let e = |i| unit(2, i, 1);
                match v {
                    Y => self.plain(&e(0)),
                    P => self.plain(&e(1)),
                    YP => self.plain(&plus(&e(0), &e(1))),
                    NegP => self.plain(&neg(&e(1))),
                    _ => panic!("{v:?} is not a decoration variable"),
                }
            }
        }
    }
}

/// Smallest graph carrying each move; edges named after their roles.
pub fn move_graph(kind: MoveKind) -> FatGraph {
    let s = |x: &str| x.to_string();
    match kind {
        MoveKind::Inner => {
            let mut pending = BTreeMap::new();
            for e in ["A", "B", "C", "D"] {
                pending.insert(s(e), Orbifold::symbolic(&format!("omega_{e}")));
            }
            FatGraph::new(
                vec![s("A"), s("B"), s("C"), s("D"), s("Z")],
                vec![[s("A"), s("B"), s("Z")], [s("Z"), s("C"), s("D")]],
                pending,
                Some(Meta { g: 0, s: 1, r: 4 }),
            )
        }
        MoveKind::Pending => {
            let mut pending = BTreeMap::new();
            pending.insert(s("Z"), Orbifold::symbolic(OMEGA));
            pending.insert(s("A"), Orbifold::symbolic("omega_A"));
            pending.insert(s("B"), Orbifold::symbolic("omega_B"));
            FatGraph::new(
                vec![s("A"), s("B"), s("Z")],
                vec![[s("Z"), s("A"), s("B")]],
                pending,
                Some(Meta { g: 0, s: 1, r: 3 }),
            )
        }
        MoveKind::Decoration => {
            let mut pending = BTreeMap::new();
            pending.insert(s("Y"), Orbifold::symbolic("omega_Y"));
            FatGraph::new(
                vec![s("Y"), s("P")],
                vec![[s("Y"), s("P"), s("P")]],
                pending,
                Some(Meta { g: 0, s: 2, r: 1 }),
            )
        }
    }
    .expect("move graph is valid")
}

/// Numeric model from a shear state and its image under the move.
pub struct FloatModel {
    pub before: ShearState,
    pub after: ShearState,
}

impl FloatModel {
    pub fn sample(kind: MoveKind, rng: &mut ChaCha8Rng) -> Self {
        let before = ShearState::random(move_graph(kind), rng, 3.0);
        let after = match kind {
            MoveKind::Inner => classical_flip(&before, "Z"),
            MoveKind::Pending => classical_pending_flip(&before, "Z"),
            MoveKind::Decoration => decoration_change(&before, "P"),
        }
        .expect("move applies");
        FloatModel { before, after }
    }
}

impl ShearModel<FloatRing> for FloatModel {
    fn half(&self, v: Var) -> (f64, f64) {
        use Var::*;
        let (state, name) = match v {
            A => (&self.before, "A"),
            B => (&self.before, "B"),
            C => (&self.before, "C"),
            D => (&self.before, "D"),
            Z => (&self.before, "Z"),
            Y => (&self.before, "Y"),
            P => (&self.before, "P"),
            At => (&self.after, "A"),
            Bt => (&self.after, "B"),
            Ct => (&self.after, "C"),
            Dt => (&self.after, "D"),
            Zt => (&self.after, "Z"),
            YP => (&self.after, "Y"),
            NegP => (&self.after, "P"),
        };
        let x = state.get(name).expect("role edge");
        ((x / 2.0).exp(), (-x / 2.0).exp())
    }
}

/// Result of checking one classical identity.
#[derive(Clone, Debug)]
pub struct ClassicalOutcome {
    pub exact: bool,
    /// Largest relative entry deviation over all samples.
    pub max_deviation: f64,
    pub witness: Option<String>,
}

fn fmt_sqrt(x: &SqrtElem, names: &[String]) -> String {
    format!(
        "({}) + ({}) r, over P^{}",
        x.rational.fmt_with(names),
        x.radical.fmt_with(names),
        x.den
    )
}

fn var_names(kind: MoveKind) -> Vec<String> {
    let v: &[&str] = match kind {
        MoveKind::Inner => &["A", "B", "C", "D", "Z"],
        MoveKind::Pending => &["A", "B", "Z"],
        MoveKind::Decoration => &["Y", "P"],
    };
    v.iter().map(|s| s.to_string()).collect()
}

pub fn check_exact(id: &ClassicalIdentity) -> (bool, Option<String>) {
    let model = ExactModel::new(id.kind);
    let (w, a, c) = (
        Coefficient::param(OMEGA),
        Coefficient::param("a"),
        Coefficient::param("c"),
    );
    let lhs = eval_word(&model.ring, &model, &id.lhs, &w, &a, &c);
    let rhs = eval_word(&model.ring, &model, &id.rhs, &w, &a, &c);
    let diff = mat_sub(&model.ring, &lhs, &rhs);
    let names = var_names(id.kind);
    for i in 0..2 {
        for j in 0..2 {
            let e = diff.get(i, j);
            if !model.ring.is_zero(e) {
                let msg = format!("entry ({},{}): {}", i + 1, j + 1, fmt_sqrt(e, &names));
                return (false, Some(msg));
            }
        }
    }
    (true, None)
}

/// Largest relative deviation of `lhs - rhs` over `samples` random shears.
pub fn check_numeric(id: &ClassicalIdentity, samples: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let m = FloatModel::sample(id.kind, &mut rng);
        let mut params = m.before.params.clone();
        params.insert("a".into(), rand::Rng::gen_range(&mut rng, -2.0..2.0));
        params.insert("c".into(), rand::Rng::gen_range(&mut rng, -2.0..2.0));
        let r = FloatRing::new(vec![], params);
        let (w, a, c) = (
            Coefficient::param(OMEGA),
            Coefficient::param("a"),
            Coefficient::param("c"),
        );
        let lhs = eval_word(&r, &m, &id.lhs, &w, &a, &c);
        let rhs = eval_word(&r, &m, &id.rhs, &w, &a, &c);
        let scale = lhs
            .entries()
            .iter()
            .chain(rhs.entries())
            .fold(1.0f64, |s, x| s.max(x.abs()));
        for (x, y) in lhs.entries().iter().zip(rhs.entries()) {
            worst = worst.max((x - y).abs() / scale);
        }
    }
    worst
}

pub fn check_classical(id: &ClassicalIdentity, samples: usize, seed: u64) -> ClassicalOutcome {
    let (exact, witness) = check_exact(id);
    ClassicalOutcome {
        exact,
        max_deviation: check_numeric(id, samples, seed),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_outcomes() {
        let expect = [
            ("inner-1", false),
            ("inner-2", true),
            ("inner-3", false),
            ("pending-1", true),
            ("pending-2", false),
            ("pending-3", false),
            ("decoration-L", true),
            ("decoration-R", true),
            ("inner-1-corrected", true),
            ("inner-3-corrected", true),
            ("pending-2-corrected", true),
            ("pending-3-corrected", true),
        ];
        let cat = classical_catalog();
        for (id, ok) in expect {
            let ci = cat.iter().find(|c| c.id == id).unwrap();
            let out = check_classical(ci, 50, 7);
            assert_eq!(out.exact, ok, "{id}: {:?}", out.witness);
            assert_eq!(out.max_deviation < 1e-9, ok, "{id}: {}", out.max_deviation);
        }
    }
}
