//! Ribbon graphs with pending (orbifold) edges: validation, the
//! Weil-Petersson skew form, boundary faces and centers, and compilation of
//! paths into 2x2 matrix words.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qring::{Coefficient, Ring, SkewForm, TorusMonomial};
use crate::smallmat::{
    edge_matrix, f_matrix, identity, mat_mul, mat_neg, mat_pow, turn_matrix, Matrix, Turn,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("duplicate edge name {0:?}")]
    DuplicateEdge(String),
    #[error("vertex {vertex} references unknown edge {edge:?}")]
    UnknownEdge { vertex: usize, edge: String },
    #[error("pending entry for unknown edge {0:?}")]
    UnknownPending(String),
    #[error("edge {edge:?} has {got} half-edge slots, expected {expected}")]
    Incidence {
        edge: String,
        expected: usize,
        got: usize,
    },
    #[error("reserved edge name {0:?}")]
    ReservedName(String),
    #[error("edge count {got} violates 6g−6+3s+2r = {expected} (g={g}, s={s}, r={r})")]
    EdgeCount {
        got: usize,
        expected: i64,
        g: u32,
        s: u32,
        r: u32,
    },
    #[error("declared r={declared} but the graph has {got} pending edges")]
    PendingCount { declared: u32, got: usize },
    #[error("declared s={declared} but the graph has {got} boundary faces")]
    FaceCount { declared: u32, got: usize },
    #[error("graph json: {0}")]
    Json(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PathError {
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("step {step}: {msg}")]
    Inconsistent { step: usize, msg: String },
    #[error("empty path")]
    Empty,
    #[error("bad token {0:?}")]
    Token(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FlipError {
    #[error("unknown edge {0:?}")]
    UnknownEdge(String),
    #[error("edge {0:?} is pending")]
    Pending(String),
    #[error("edge {0:?} is not pending")]
    NotPending(String),
    #[error("edge {0:?} is a loop")]
    Loop(String),
    #[error("edge {0:?} does not bound a Y-P loop")]
    NotLoopConfiguration(String),
}

/// Orbifold data of a pending edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Orbifold {
    pub param: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

impl Orbifold {
    pub fn symbolic(param: &str) -> Self {
        Orbifold {
            param: param.into(),
            p: None,
        }
    }

    pub fn of_order(param: &str, p: u32) -> Self {
        Orbifold {
            param: param.into(),
            p: Some(p),
        }
    }

    /// `2cos(pi/p)` when rational (p = 2, 3), otherwise the named parameter.
    pub fn omega(&self) -> Coefficient {
        match self.p {
            Some(2) => Coefficient::zero(),
            Some(3) => Coefficient::one(),
            _ => Coefficient::param(&self.param),
        }
    }

    pub fn omega_value(&self, params: &crate::qring::ParamValues) -> Option<f64> {
        match self.p {
            Some(p) if p >= 2 => Some(2.0 * (std::f64::consts::PI / p as f64).cos()),
            _ => params.get(&self.param).copied(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub g: u32,
    pub s: u32,
    pub r: u32,
}

impl Meta {
    pub fn expected_edges(&self) -> i64 {
        6 * self.g as i64 - 6 + 3 * self.s as i64 + 2 * self.r as i64
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    edges: Vec<String>,
    vertices: Vec<[String; 3]>,
    #[serde(default)]
    pending: BTreeMap<String, Orbifold>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

/// A slot at a trivalent vertex, viewed as the half-edge leaving it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub vertex: usize,
    pub slot: usize,
}

impl Dart {
    fn rotate(self, turn: Turn) -> Dart {
        let slot = match turn {
            Turn::Right => (self.slot + 1) % 3,
            Turn::Left => (self.slot + 2) % 3,
        };
        Dart { slot, ..self }
    }
}

/// Trivalent ribbon graph; vertex triples are stored in clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatGraph {
    names: Vec<String>,
    index: HashMap<String, usize>,
    vertices: Vec<[usize; 3]>,
    pending: BTreeMap<usize, Orbifold>,
    meta: Option<Meta>,
    ends: Vec<Vec<Dart>>,
}

const RESERVED: [&str; 3] = ["L", "R", "F"];

fn is_reserved(name: &str) -> bool {
    RESERVED.contains(&name)
        || name.starts_with("F^")
        || name.starts_with('(')
        || name.ends_with(')')
}

impl FatGraph {
    /// Build and validate. Edge-count and face checks run only when `meta` is set.
    pub fn new(
        edges: Vec<String>,
        vertices: Vec<[String; 3]>,
        pending: BTreeMap<String, Orbifold>,
        meta: Option<Meta>,
    ) -> Result<Self, GraphError> {
        let mut index = HashMap::new();
        for (i, e) in edges.iter().enumerate() {
            if is_reserved(e) || e.is_empty() || e.contains(char::is_whitespace) {
                return Err(GraphError::ReservedName(e.clone()));
            }
            if index.insert(e.clone(), i).is_some() {
                return Err(GraphError::DuplicateEdge(e.clone()));
            }
        }
        let mut verts = Vec::with_capacity(vertices.len());
        let mut ends = vec![Vec::new(); edges.len()];
        for (v, triple) in vertices.iter().enumerate() {
            let mut ids = [0usize; 3];
            for (k, name) in triple.iter().enumerate() {
                let id = *index.get(name).ok_or_else(|| GraphError::UnknownEdge {
                    vertex: v,
                    edge: name.clone(),
                })?;
                ids[k] = id;
                ends[id].push(Dart { vertex: v, slot: k });
            }
            verts.push(ids);
        }
        let mut pend = BTreeMap::new();
        for (name, orb) in pending {
            let id = *index
                .get(&name)
                .ok_or_else(|| GraphError::UnknownPending(name.clone()))?;
            pend.insert(id, orb);
        }
        for (id, e) in edges.iter().enumerate() {
            let expected = if pend.contains_key(&id) { 1 } else { 2 };
            if ends[id].len() != expected {
                return Err(GraphError::Incidence {
                    edge: e.clone(),
                    expected,
                    got: ends[id].len(),
                });
            }
        }
        let g = FatGraph {
            names: edges,
            index,
            vertices: verts,
            pending: pend,
            meta,
            ends,
        };
        g.check_meta()?;
        Ok(g)
    }

    fn check_meta(&self) -> Result<(), GraphError> {
        let Some(m) = self.meta else {
            return Ok(());
        };
        let expected = m.expected_edges();
        if expected != self.names.len() as i64 {
            return Err(GraphError::EdgeCount {
                got: self.names.len(),
                expected,
                g: m.g,
                s: m.s,
                r: m.r,
            });
        }
        if m.r as usize != self.pending.len() {
            return Err(GraphError::PendingCount {
                declared: m.r,
                got: self.pending.len(),
            });
        }
        let nf = self.faces().len();
        if m.s as usize != nf {
            return Err(GraphError::FaceCount {
                declared: m.s,
                got: nf,
            });
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let f: GraphFile =
            serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))?;
        Self::new(f.edges, f.vertices, f.pending, f.meta)
    }

    pub fn to_json(&self) -> String {
        let f = GraphFile {
            edges: self.names.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| v.map(|i| self.names[i].clone()))
                .collect(),
            pending: self
                .pending
                .iter()
                .map(|(&i, o)| (self.names[i].clone(), o.clone()))
                .collect(),
            meta: self.meta,
        };
        serde_json::to_string_pretty(&f).expect("graph serializes")
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn n_edges(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> &[[usize; 3]] {
        &self.vertices
    }

    pub fn meta(&self) -> Option<Meta> {
        self.meta
    }

    pub fn edge(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn name(&self, id: usize) -> &str {
        &self.names[id]
    }

    pub fn is_pending(&self, id: usize) -> bool {
        self.pending.contains_key(&id)
    }

    pub fn orbifold(&self, id: usize) -> Option<&Orbifold> {
        self.pending.get(&id)
    }

    pub fn pending_edges(&self) -> impl Iterator<Item = (usize, &Orbifold)> {
        self.pending.iter().map(|(&i, o)| (i, o))
    }

    pub fn ends(&self, id: usize) -> &[Dart] {
        &self.ends[id]
    }

    pub fn edge_at(&self, d: Dart) -> usize {
        self.vertices[d.vertex][d.slot]
    }

    /// Other end of the half-edge leaving `d`; `None` for a pending tip.
    pub fn partner(&self, d: Dart) -> Option<Dart> {
        let e = self.edge_at(d);
        if self.is_pending(e) {
            return None;
        }
        let ends = &self.ends[e];
        Some(if ends[0] == d { ends[1] } else { ends[0] })
    }

    /// `beta[a][c] += 1` for each clockwise-consecutive pair `(a, c)` at each vertex.
    pub fn skew_form(&self) -> SkewForm {
        let n = self.names.len();
        let mut beta = vec![0i32; n * n];
        for v in &self.vertices {
            for i in 0..3 {
                let (a, c) = (v[i], v[(i + 1) % 3]);
                beta[a * n + c] += 1;
                beta[c * n + a] -= 1;
            }
        }
        SkewForm::new(n, beta).expect("vertex sums are antisymmetric and bounded by 2")
    }

    /// Boundary cycles: leave along a dart, arrive, turn left; pending tips bounce back.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in 0..self.vertices.len() {
            for slot in 0..3 {
                let start = Dart { vertex: v, slot };
                if seen.contains(&start) {
                    continue;
                }
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    seen.insert(d);
                    darts.push(d);
                    let arrive = self.partner(d).unwrap_or(d);
                    d = arrive.rotate(Turn::Left);
                    if d == start {
                        break;
                    }
                }
                out.push(Face { darts });
            }
        }
        out
    }

    /// One center per face, on the doubled lattice (`2 * multiplicity`).
    pub fn center_elements(&self) -> Vec<TorusMonomial> {
        self.faces().iter().map(|f| f.center(self)).collect()
    }

    pub fn resolve_path(&self, p: &PathWord) -> Result<Word, PathError> {
        p.check(self)?;
        let mut w = Vec::with_capacity(p.steps.len());
        let mut last_edge = None;
        for s in &p.steps {
            match s {
                Step::Traverse(name) => {
                    let id = self
                        .edge(name)
                        .ok_or_else(|| PathError::UnknownEdge(name.clone()))?;
                    last_edge = Some(id);
                    w.push(Factor::Edge(id));
                }
                Step::Turn(t) => w.push(Factor::Turn(*t)),
                Step::Orbifold(k) => {
                    let e = last_edge.expect("checked path");
                    let omega = self.pending[&e].omega();
                    w.push(Factor::Orbifold { omega, k: *k });
                }
            }
        }
        Ok(Word(w))
    }

    /// Rename an edge, keeping incidence.
    pub fn renamed(&self, from: &str, to: &str) -> Result<FatGraph, GraphError> {
        let mut g = self.clone();
        let id = *self
            .index
            .get(from)
            .ok_or_else(|| GraphError::UnknownPending(from.into()))?;
        if self.index.contains_key(to) {
            return Err(GraphError::DuplicateEdge(to.into()));
        }
        g.index.remove(from);
        g.index.insert(to.into(), id);
        g.names[id] = to.into();
        Ok(g)
    }

    /// Inner flip of `edge`: `u = cw(A, B, Z)`, `v = cw(Z, C, D)` become
    /// `cw(A, Z, D)` and `cw(Z, B, C)`. Edge labels are kept.
    pub fn flip(&self, edge: &str) -> Result<(FatGraph, FlipRoles), FlipError> {
        let z = self
            .edge(edge)
            .ok_or_else(|| FlipError::UnknownEdge(edge.into()))?;
        if self.is_pending(z) {
            return Err(FlipError::Pending(edge.into()));
        }
        let (du, dv) = (self.ends[z][0], self.ends[z][1]);
        if du.vertex == dv.vertex {
            return Err(FlipError::Loop(edge.into()));
        }
        let u = self.vertices[du.vertex];
        let v = self.vertices[dv.vertex];
        let a = u[(du.slot + 1) % 3];
        let b = u[(du.slot + 2) % 3];
        let c = v[(dv.slot + 1) % 3];
        let d = v[(dv.slot + 2) % 3];
        let mut g = self.clone();
        g.vertices[du.vertex] = [a, z, d];
        g.vertices[dv.vertex] = [z, b, c];
        g.rebuild_ends();
        g.meta = self.meta;
        Ok((g, FlipRoles { a, b, c, d, z }))
    }

    /// Pending flip: `cw(Z, A, B)` becomes `cw(Z, B, A)`.
    pub fn flip_pending(&self, edge: &str) -> Result<(FatGraph, PendingRoles), FlipError> {
        let z = self
            .edge(edge)
            .ok_or_else(|| FlipError::UnknownEdge(edge.into()))?;
        if !self.is_pending(z) {
            return Err(FlipError::NotPending(edge.into()));
        }
        let dz = self.ends[z][0];
        let w = self.vertices[dz.vertex];
        let a = w[(dz.slot + 1) % 3];
        let b = w[(dz.slot + 2) % 3];
        let mut g = self.clone();
        g.vertices[dz.vertex] = [z, b, a];
        g.rebuild_ends();
        let omega = self.pending[&z].omega();
        Ok((g, PendingRoles { a, b, z, omega }))
    }

    /// The `Y`-`P` configuration for a decoration change at loop edge `p`.
    pub fn loop_roles(&self, p: &str) -> Result<(usize, usize), FlipError> {
        let pid = self
            .edge(p)
            .ok_or_else(|| FlipError::UnknownEdge(p.into()))?;
        let ends = &self.ends[pid];
        if ends.len() != 2 || ends[0].vertex != ends[1].vertex {
            return Err(FlipError::NotLoopConfiguration(p.into()));
        }
        let v = self.vertices[ends[0].vertex];
        let y = v
            .iter()
            .copied()
            .find(|&e| e != pid)
            .ok_or_else(|| FlipError::NotLoopConfiguration(p.into()))?;
        Ok((y, pid))
    }

    fn rebuild_ends(&mut self) {
        let mut ends = vec![Vec::new(); self.names.len()];
        for (v, t) in self.vertices.iter().enumerate() {
            for (k, &e) in t.iter().enumerate() {
                ends[e].push(Dart { vertex: v, slot: k });
            }
        }
        self.ends = ends;
    }

    /// Non-backtracking route from the tip of pending `from` to the tip of
    /// pending `to` that avoids other tips; unique on trees.
    pub fn route(&self, from: usize, to: usize) -> Option<Vec<Step>> {
        if !self.is_pending(from) || !self.is_pending(to) || from == to {
            return None;
        }
        let start = self.ends[from][0];
        let mut prev: HashMap<Dart, (Dart, Turn)> = HashMap::new();
        let mut queue = VecDeque::from([start]);
        let mut visited = BTreeSet::from([start]);
        let mut last = None;
        'bfs: while let Some(at) = queue.pop_front() {
            for turn in [Turn::Left, Turn::Right] {
                let out = at.rotate(turn);
                let e = self.edge_at(out);
                if e == to {
                    last = Some((at, turn));
                    break 'bfs;
                }
                if self.is_pending(e) {
                    continue;
                }
                let arrive = self.partner(out).expect("internal edge");
                if visited.insert(arrive) {
                    prev.insert(arrive, (at, turn));
                    queue.push_back(arrive);
                }
            }
        }
        let (mut at, t) = last?;
        let mut turns = vec![t];
        while at != start {
            let (p, t) = prev[&at];
            turns.push(t);
            at = p;
        }
        turns.reverse();
        let mut steps = vec![Step::Traverse(self.names[from].clone())];
        let mut d = start;
        for t in turns {
            let out = d.rotate(t);
            let e = self.edge_at(out);
            steps.push(Step::Turn(t));
            steps.push(Step::Traverse(self.names[e].clone()));
            if e != to {
                d = self.partner(out).expect("internal edge");
            }
        }
        Some(steps)
    }

    /// Vertex triples up to rotation and vertex order.
    pub fn canonical_vertices(&self) -> Vec<[usize; 3]> {
        let mut vs: Vec<[usize; 3]> = self
            .vertices
            .iter()
            .map(|v| {
                let k = (0..3).min_by_key(|&i| v[i]).unwrap();
                [v[k], v[(k + 1) % 3], v[(k + 2) % 3]]
            })
            .collect();
        vs.sort();
        vs
    }

    /// Same labels, pending data and ribbon structure.
    pub fn same_structure(&self, other: &FatGraph) -> bool {
        self.names == other.names
            && self.pending == other.pending
            && self.canonical_vertices() == other.canonical_vertices()
    }

    /// Root-to-point-and-back word: route, one winding at the target, reversed route.
    pub fn monodromy_path(&self, root: &str, target: &str) -> Option<PathWord> {
        let r = self.edge(root)?;
        let t = self.edge(target)?;
        let out = self.route(r, t)?;
        let mut steps = out.clone();
        steps.push(Step::Orbifold(1));
        for s in out.iter().rev() {
            steps.push(match s {
                Step::Turn(t) => Step::Turn(t.flipped()),
                other => other.clone(),
            });
        }
        Some(PathWord {
            steps,
            closed: false,
        })
    }
}

/// Edges in the roles of an inner flip.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FlipRoles {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub z: usize,
}

/// Edges in the roles of a pending flip.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PendingRoles {
    pub a: usize,
    pub b: usize,
    pub z: usize,
    pub omega: Coefficient,
}

/// A boundary cycle of darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn center(&self, g: &FatGraph) -> TorusMonomial {
        let mut du = vec![0; g.n_edges()];
        for &d in &self.darts {
            let e = g.edge_at(d);
            du[e] += if g.is_pending(e) { 4 } else { 2 };
        }
        TorusMonomial::new(du)
    }

    /// `X_e L` per dart, with `X_e F X_e L` at pending edges.
    pub fn word(&self, g: &FatGraph) -> Word {
        let mut w = Vec::new();
        for &d in &self.darts {
            let e = g.edge_at(d);
            w.push(Factor::Edge(e));
            if let Some(o) = g.orbifold(e) {
                w.push(Factor::Orbifold {
                    omega: o.omega(),
                    k: 1,
                });
                w.push(Factor::Edge(e));
            }
            w.push(Factor::Turn(Turn::Left));
        }
        Word(w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Traverse(String),
    Turn(Turn),
    /// Winding count at the pending edge just traversed.
    Orbifold(u32),
}

/// Directed path through a fat graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWord {
    pub steps: Vec<Step>,
    pub closed: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Pos {
    /// Arrived at a vertex through this dart.
    At(Dart),
    /// About to leave through this dart.
    Leaving(Dart),
    /// At the tip of a pending edge.
    Tip(usize),
    /// Wound around the tip, about to come back.
    Wound(usize),
}

impl PathWord {
    pub fn open(steps: Vec<Step>) -> Self {
        PathWord {
            steps,
            closed: false,
        }
    }

    pub fn closed(steps: Vec<Step>) -> Self {
        PathWord {
            steps,
            closed: true,
        }
    }

    /// Whitespace-separated tokens: edge names, `L`, `R`, `F` or `F^k`.
    /// Parentheses around the whole word mark a closed path.
    pub fn parse(text: &str) -> Result<Self, PathError> {
        let t = text.trim();
        let (body, closed) = match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
            Some(inner) => (inner, true),
            None => (t, false),
        };
        let mut steps = Vec::new();
        for tok in body.split_whitespace() {
            let s = match tok {
                "L" => Step::Turn(Turn::Left),
                "R" => Step::Turn(Turn::Right),
                "F" => Step::Orbifold(1),
                _ => match tok.strip_prefix("F^") {
                    Some(k) => {
                        let k: u32 = k.parse().map_err(|_| PathError::Token(tok.into()))?;
                        if k == 0 {
                            return Err(PathError::Token(tok.into()));
                        }
                        Step::Orbifold(k)
                    }
                    None => {
                        if tok.contains(['(', ')']) {
                            return Err(PathError::Token(tok.into()));
                        }
                        Step::Traverse(tok.into())
                    }
                },
            };
            steps.push(s);
        }
        if steps.is_empty() {
            return Err(PathError::Empty);
        }
        Ok(PathWord { steps, closed })
    }

    /// Incidence check, run nondeterministically over traversal directions.
    pub fn check(&self, g: &FatGraph) -> Result<(), PathError> {
        let first = match self.steps.first() {
            Some(Step::Traverse(e)) => e,
            Some(_) => {
                return Err(PathError::Inconsistent {
                    step: 0,
                    msg: "path must start with an edge".into(),
                })
            }
            None => return Err(PathError::Empty),
        };
        let e0 = g
            .edge(first)
            .ok_or_else(|| PathError::UnknownEdge(first.clone()))?;
        // (initial departure, current position)
        let mut states: BTreeSet<(Pos, Pos)> = BTreeSet::new();
        for &d in g.ends(e0) {
            let arrive = match g.partner(d) {
                Some(p) => Pos::At(p),
                None => Pos::Tip(e0),
            };
            states.insert((Pos::Leaving(d), arrive));
            if g.is_pending(e0) {
                states.insert((Pos::Wound(e0), Pos::At(d)));
            }
        }
        for (i, step) in self.steps.iter().enumerate().skip(1) {
            let mut next = BTreeSet::new();
            for &(init, pos) in &states {
                match (step, pos) {
                    (Step::Turn(t), Pos::At(d)) => {
                        next.insert((init, Pos::Leaving(d.rotate(*t))));
                    }
                    (Step::Orbifold(_), Pos::Tip(e)) => {
                        next.insert((init, Pos::Wound(e)));
                    }
                    (Step::Traverse(name), Pos::Leaving(d)) => {
                        let e = g
                            .edge(name)
                            .ok_or_else(|| PathError::UnknownEdge(name.clone()))?;
                        if g.edge_at(d) == e {
                            let arrive = match g.partner(d) {
                                Some(p) => Pos::At(p),
                                None => Pos::Tip(e),
                            };
                            next.insert((init, arrive));
                        }
                    }
                    (Step::Traverse(name), Pos::Wound(e)) => {
                        let id = g
                            .edge(name)
                            .ok_or_else(|| PathError::UnknownEdge(name.clone()))?;
                        if id == e {
                            next.insert((init, Pos::At(g.ends(e)[0])));
                        }
                    }
                    _ => {}
                }
            }
            if next.is_empty() {
                return Err(PathError::Inconsistent {
                    step: i,
                    msg: format!("{step:?} does not continue the path"),
                });
            }
            states = next;
        }
        if self.closed {
            let ok = states.iter().any(|&(init, pos)| match (init, pos) {
                (Pos::Leaving(d0), Pos::Leaving(d)) => d0 == d,
                (Pos::Wound(e0), Pos::Wound(e)) => e0 == e,
                _ => false,
            });
            if !ok {
                return Err(PathError::Inconsistent {
                    step: self.steps.len(),
                    msg: "closed path does not return to its start".into(),
                });
            }
        }
        Ok(())
    }
}

impl fmt::Display for PathWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .steps
            .iter()
            .map(|s| match s {
                Step::Traverse(e) => e.clone(),
                Step::Turn(Turn::Left) => "L".into(),
                Step::Turn(Turn::Right) => "R".into(),
                Step::Orbifold(1) => "F".into(),
                Step::Orbifold(k) => format!("F^{k}"),
            })
            .collect();
        if self.closed {
            write!(f, "({})", toks.join(" "))
        } else {
            write!(f, "{}", toks.join(" "))
        }
    }
}

/// Graph-free matrix word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Edge(usize),
    Turn(Turn),
    /// `(-1)^{k+1} F_omega^k`.
    Orbifold {
        omega: Coefficient,
        k: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word(pub Vec<Factor>);

impl Word {
    pub fn factors(&self) -> &[Factor] {
        &self.0
    }

    /// `(#R - #L)`, the scale exponent bookkeeping of flip identities.
    pub fn turn_balance(&self) -> i32 {
        self.0
            .iter()
            .map(|f| match f {
                Factor::Turn(Turn::Right) => 1,
                Factor::Turn(Turn::Left) => -1,
                _ => 0,
            })
            .sum()
    }
}

/// Left-to-right product over `n` generators.
pub fn compile_word<R: Ring>(r: &R, n: usize, w: &Word) -> Matrix<R::Elem> {
    let mut acc = identity(r, 2);
    for f in &w.0 {
        let m = match f {
            Factor::Edge(e) => edge_matrix(r, n, *e),
            Factor::Turn(t) => turn_matrix(r, *t),
            Factor::Orbifold { omega, k } => {
                let p = mat_pow(r, &f_matrix(r, omega), *k);
                if k % 2 == 0 {
                    mat_neg(r, &p)
                } else {
                    p
                }
            }
        };
        acc = mat_mul(r, &acc, &m).expect("2x2 factors");
    }
    acc
}

pub fn compile_path<R: Ring>(
    r: &R,
    g: &FatGraph,
    p: &PathWord,
) -> Result<Matrix<R::Elem>, PathError> {
    let w = g.resolve_path(p)?;
    Ok(compile_word(r, g.n_edges(), &w))
}

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// Caterpillar spine for `n` Z_2 points `Z1..Z{n-1}` plus the root `S`:
/// root vertex `(S, W, X1)`, then `(Xk, Xk+1, Zk)`, last `(X{n-2}, Z{n-1}, Z{n-2})`.
/// `W` is a spectator pending stub.
pub fn spine_graph_an(n: usize) -> Result<FatGraph, GraphError> {
    if n < 2 {
        return Err(GraphError::Json(format!("A_n spine needs n >= 2, got {n}")));
    }
    let mut edges = strings(&["S", "W"]);
    for k in 1..n - 1 {
        edges.push(format!("X{k}"));
    }
    for k in 1..n {
        edges.push(format!("Z{k}"));
    }
    let x = |k: usize| format!("X{k}");
    let z = |k: usize| format!("Z{k}");
    let mut vertices = Vec::new();
    if n == 2 {
        vertices.push(["S".into(), "W".into(), z(1)]);
    } else {
        vertices.push(["S".into(), "W".into(), x(1)]);
        for k in 1..n - 1 {
            let next = if k < n - 2 { x(k + 1) } else { z(n - 1) };
            vertices.push([x(k), next, z(k)]);
        }
    }
    let mut pending = BTreeMap::new();
    pending.insert("S".into(), Orbifold::of_order("omega_0", 2));
    pending.insert("W".into(), Orbifold::of_order("omega_W", 2));
    for k in 1..n {
        pending.insert(z(k), Orbifold::of_order(&format!("omega_{k}"), 2));
    }
    let meta = Meta {
        g: 0,
        s: 1,
        r: (n + 1) as u32,
    };
    FatGraph::new(edges, vertices, pending, Some(meta))
}

/// One vertex `cw(X, Y, Z)`, all pending: `X` root (omega_0), `Z` (omega_1), `Y` (omega_2).
pub fn pvi_graph() -> FatGraph {
    let mut pending = BTreeMap::new();
    pending.insert("X".into(), Orbifold::symbolic("omega_0"));
    pending.insert("Y".into(), Orbifold::symbolic("omega_2"));
    pending.insert("Z".into(), Orbifold::symbolic("omega_1"));
    FatGraph::new(
        strings(&["X", "Y", "Z"]),
        vec![["X".into(), "Y".into(), "Z".into()]],
        pending,
        Some(Meta { g: 0, s: 1, r: 3 }),
    )
    .expect("P_VI graph is valid")
}

/// Monodromy paths `M_1..M_{n-1}` of the A_n spine from the root `S`.
pub fn an_monodromy_paths(g: &FatGraph) -> Vec<PathWord> {
    let mut out = Vec::new();
    let mut k = 1;
    while g.edge(&format!("Z{k}")).is_some() {
        out.push(
            g.monodromy_path("S", &format!("Z{k}"))
                .expect("spine is connected"),
        );
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::TorusElement;
    use crate::smallmat::mat_trace;

    #[test]
    fn spine_a3_relations() {
        let g = spine_graph_an(3).unwrap();
        let b = g.skew_form();
        let id = |s: &str| g.edge(s).unwrap();
        let (s, x, y, z) = (id("S"), id("X1"), id("Z2"), id("Z1"));
        assert_eq!(b.get(x, s), 1);
        assert_eq!(b.get(x, y), 1);
        assert_eq!(b.get(y, z), 1);
        assert_eq!(b.get(z, x), 1);
        assert_eq!(b.get(s, y), 0);
        assert_eq!(b.get(s, z), 0);
    }

    #[test]
    fn m1_path_text() {
        let g = spine_graph_an(3).unwrap();
        let p = an_monodromy_paths(&g);
        assert_eq!(p[0].to_string(), "S L X1 L Z1 F Z1 R X1 R S");
        assert_eq!(p[1].to_string(), "S L X1 R Z2 F Z2 L X1 R S");
        let g2 = spine_graph_an(2).unwrap();
        assert_eq!(an_monodromy_paths(&g2)[0].to_string(), "S L Z1 F Z1 R S");
    }

    #[test]
    fn path_checks() {
        let g = spine_graph_an(3).unwrap();
        assert!(PathWord::parse("S L X1 L Z1 F Z1 R X1 R S")
            .unwrap()
            .check(&g)
            .is_ok());
        assert!(PathWord::parse("S R X1").unwrap().check(&g).is_err());
        assert!(PathWord::parse("(Z1 F Z1 L Z2 F Z2 R)")
            .unwrap()
            .check(&g)
            .is_ok());
        assert!(PathWord::parse("(Z1 F Z1 L Z2 F Z2 L)")
            .unwrap()
            .check(&g)
            .is_err());
        assert!(PathWord::parse("Z1 L Z1").unwrap().check(&g).is_err());
    }

    #[test]
    fn faces_and_centers() {
        for g in [
            spine_graph_an(3).unwrap(),
            spine_graph_an(4).unwrap(),
            pvi_graph(),
        ] {
            let b = g.skew_form();
            let cs = g.center_elements();
            assert_eq!(cs.len(), 1);
            for c in &cs {
                assert!(b.apply(c).iter().all(|&x| x == 0));
            }
        }
        let g = pvi_graph();
        assert_eq!(g.center_elements()[0].to_vec(), vec![4, 4, 4]);
    }

    #[test]
    fn hole_trace_is_cosh_pair() {
        let g = spine_graph_an(3).unwrap();
        let f = g.skew_form();
        let face = &g.faces()[0];
        let m = compile_word(&f, g.n_edges(), &face.word(&g));
        let c = face.center(&g);
        let half: Vec<i32> = c.iter().map(|x| x / 2).collect();
        let neg: Vec<i32> = half.iter().map(|x| -x).collect();
        let want = TorusElement::monomial(&half).add(&TorusElement::monomial(&neg));
        let got = mat_trace(&f, &m);
        assert_eq!(got.at_t_one(), want);
        // quantum: a central t-power times the same pair
        let (_, c0) = got.terms().next().unwrap();
        assert!(got.terms().all(|(_, c)| c == c0));
    }

    #[test]
    fn edge_count_violation_names_formula() {
        let text = r#"{"edges":["X","Y","Z","U"],"vertices":[["X","Y","Z"]],
            "pending":{"X":{"param":"a"},"Y":{"param":"b"},"Z":{"param":"c"}},
            "meta":{"g":0,"s":1,"r":3}}"#;
        let err = FatGraph::from_json(text).unwrap_err();
        assert!(matches!(err, GraphError::Incidence { .. }));
        let text = r#"{"edges":["X","Y","Z"],"vertices":[["X","Y","Z"]],
            "pending":{"X":{"param":"a"},"Y":{"param":"b"},"Z":{"param":"c"}},
            "meta":{"g":0,"s":1,"r":4}}"#;
        let err = FatGraph::from_json(text).unwrap_err();
        assert!(err.to_string().contains("6g−6+3s+2r"));
    }

    #[test]
    fn unknown_fields_rejected() {
        let text = r#"{"edges":["X"],"vertices":[],"extra":1}"#;
        assert!(matches!(
            FatGraph::from_json(text),
            Err(GraphError::Json(_))
        ));
        let g = pvi_graph();
        assert_eq!(FatGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn flip_keeps_faces() {
        let g = spine_graph_an(4).unwrap();
        let (h, roles) = g.flip("X1").unwrap();
        assert_eq!(h.faces().len(), 1);
        assert_eq!(h.name(roles.z), "X1");
        let (back, _) = h.flip("X1").unwrap();
        assert!(back.same_structure(&g));
        assert_eq!(back.skew_form(), g.skew_form());
        assert!(g.flip("S").is_err());
        let (p, _) = g.flip_pending("S").unwrap();
        assert_eq!(p.flip_pending("S").unwrap().0, g);
    }
}
