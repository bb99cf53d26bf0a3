//! Real shear coordinates and their flip transformations.

use crate::fatgraph::{FatGraph, FlipError};
use crate::qring::ParamValues;

/// `log(1 + e^x)` without overflow.
pub fn phi(x: f64) -> f64 {
    if x > 0.0 {
        x + (-x).exp().ln_1p()
    } else {
        x.exp().ln_1p()
    }
}

/// `log(1 + w e^x + e^{2x})` for `|w| < 2`.
pub fn phi_omega(x: f64, w: f64) -> f64 {
    if x > 0.0 {
        2.0 * x + (w * (-x).exp() + (-2.0 * x).exp()).ln_1p()
    } else {
        (w * x.exp() + (2.0 * x).exp()).ln_1p()
    }
}

/// A fat graph with one real shear per edge and values for orbifold parameters.
#[derive(Clone, Debug)]
pub struct ShearState {
    pub graph: FatGraph,
    pub values: Vec<f64>,
    pub params: ParamValues,
}

impl ShearState {
    pub fn new(graph: FatGraph, values: Vec<f64>, params: ParamValues) -> Self {
        assert_eq!(values.len(), graph.n_edges(), "one shear per edge");
        ShearState {
            graph,
            values,
            params,
        }
    }

    /// Uniform shears in `(-scale, scale)`; unbound orbifold parameters in `(-1.9, 1.9)`.
    pub fn random<G: rand::Rng>(graph: FatGraph, rng: &mut G, scale: f64) -> Self {
        let values = (0..graph.n_edges())
            .map(|_| rng.gen_range(-scale..scale))
            .collect();
        let mut params = ParamValues::new();
        for (_, o) in graph.pending_edges() {
            if o.p.is_none() {
                params.insert(o.param.clone(), rng.gen_range(-1.9..1.9));
            }
        }
        ShearState {
            graph,
            values,
            params,
        }
    }

    pub fn get(&self, name: &str) -> Option<f64> {
        self.graph.edge(name).map(|i| self.values[i])
    }
}

/// Inner flip; shifts are summed per slot so coinciding roles compose.
pub fn classical_flip(s: &ShearState, edge: &str) -> Result<ShearState, FlipError> {
    let (graph, r) = s.graph.flip(edge)?;
    let z = s.values[r.z];
    let mut v = s.values.clone();
    v[r.a] += phi(z);
    v[r.b] -= phi(-z);
    v[r.c] += phi(z);
    v[r.d] -= phi(-z);
    v[r.z] = -z;
    Ok(ShearState {
        graph,
        values: v,
        params: s.params.clone(),
    })
}

/// Flip at a pending edge with orbifold value `w`.
pub fn classical_pending_flip(s: &ShearState, edge: &str) -> Result<ShearState, FlipError> {
    let (graph, r) = s.graph.flip_pending(edge)?;
    let w = s
        .graph
        .orbifold(r.z)
        .and_then(|o| o.omega_value(&s.params))
        .unwrap_or(f64::NAN);
    let z = s.values[r.z];
    let mut v = s.values.clone();
    v[r.a] += phi_omega(z, w);
    v[r.b] -= phi_omega(-z, w);
    v[r.z] = -z;
    Ok(ShearState {
        graph,
        values: v,
        params: s.params.clone(),
    })
}

/// Decoration change at the loop `hole`: `(Y, P) -> (Y + P, -P)`.
pub fn decoration_change(s: &ShearState, hole: &str) -> Result<ShearState, FlipError> {
    let (y, p) = s.graph.loop_roles(hole)?;
    let mut v = s.values.clone();
    v[y] += v[p];
    v[p] = -v[p];
    Ok(ShearState {
        graph: s.graph.clone(),
        values: v,
        params: s.params.clone(),
    })
}

/// Flips `e1, e2, e1, e2, e1`; returns the final state.
pub fn pentagon(s: &ShearState, e1: &str, e2: &str) -> Result<ShearState, FlipError> {
    let mut cur = s.clone();
    for e in [e1, e2, e1, e2, e1] {
        cur = classical_flip(&cur, e)?;
    }
    Ok(cur)
}

/// Deviation of a pentagon from the identity after exchanging the labels
/// `e1` and `e2`; `None` if the ribbon structures differ.
pub fn pentagon_defect(s: &ShearState, e1: &str, e2: &str) -> Result<Option<f64>, FlipError> {
    let out = pentagon(s, e1, e2)?;
    let g = &s.graph;
    let (i, j) = match (g.edge(e1), g.edge(e2)) {
        (Some(i), Some(j)) => (i, j),
        _ => return Err(FlipError::UnknownEdge(format!("{e1}/{e2}"))),
    };
    let swap = |e: usize| {
        if e == i {
            j
        } else if e == j {
            i
        } else {
            e
        }
    };
    let mut permuted: Vec<[usize; 3]> = out
        .graph
        .vertices()
        .iter()
        .map(|t| {
            let t = t.map(swap);
            let k = (0..3).min_by_key(|&m| t[m]).unwrap_or(0);
            [t[k], t[(k + 1) % 3], t[(k + 2) % 3]]
        })
        .collect();
    permuted.sort();
    if permuted != g.canonical_vertices() {
        return Ok(None);
    }
    let mut v = out.values.clone();
    v.swap(i, j);
    Ok(Some(
        v.iter()
            .zip(&s.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max),
    ))
}

/// Logistic derivative of [`phi`].
fn dphi(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Derivative of [`phi_omega`] in `x`.
fn dphi_omega(x: f64, w: f64) -> f64 {
    let (e1, e2) = (x.exp(), (2.0 * x).exp());
    (w * e1 + 2.0 * e2) / (1.0 + w * e1 + e2)
}

/// Jacobian `d x~ / d x` of an inner flip (rows: new shears).
pub fn flip_jacobian(s: &ShearState, edge: &str) -> Result<Vec<Vec<f64>>, FlipError> {
    let (_, r) = s.graph.flip(edge)?;
    let n = s.values.len();
    let z = s.values[r.z];
    let mut j: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect())
        .collect();
    for a in [r.a, r.c] {
        j[a][r.z] += dphi(z);
    }
    for b in [r.b, r.d] {
        j[b][r.z] += dphi(-z);
    }
    j[r.z][r.z] = -1.0;
    Ok(j)
}

/// Jacobian of a pending flip.
pub fn pending_flip_jacobian(s: &ShearState, edge: &str) -> Result<Vec<Vec<f64>>, FlipError> {
    let (_, r) = s.graph.flip_pending(edge)?;
    let n = s.values.len();
    let w = s
        .graph
        .orbifold(r.z)
        .and_then(|o| o.omega_value(&s.params))
        .unwrap_or(f64::NAN);
    let z = s.values[r.z];
    let mut j: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|k| if i == k { 1.0 } else { 0.0 }).collect())
        .collect();
    j[r.a][r.z] += dphi_omega(z, w);
    j[r.b][r.z] += dphi_omega(-z, w);
    j[r.z][r.z] = -1.0;
    Ok(j)
}

/// `max |J B J^T - B'|` for the skew forms of the graphs before and after.
pub fn bracket_defect(jac: &[Vec<f64>], before: &FatGraph, after: &FatGraph) -> f64 {
    let (b, b2) = (before.skew_form(), after.skew_form());
    let n = jac.len();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for k in 0..n {
            let mut acc = 0.0;
            for a in 0..n {
                for c in 0..n {
                    acc += jac[i][a] * b.get(a, c) as f64 * jac[k][c];
                }
            }
            worst = worst.max((acc - b2.get(i, k) as f64).abs());
        }
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fatgraph::spine_graph_an;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn phi_matches_naive_formula() {
        for x in [-30.0, -1.0, 0.0, 0.5, 30.0] {
            assert!((phi(x) - (1.0f64 + f64::exp(x)).ln()).abs() < 1e-9);
            assert!((phi_omega(x, 0.0) - (1.0f64 + f64::exp(2.0 * x)).ln()).abs() < 1e-9);
        }
    }

    #[test]
    fn flip_twice_restores_shears() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = ShearState::random(spine_graph_an(4).unwrap(), &mut rng, 2.0);
        let back = classical_flip(&classical_flip(&s, "X1").unwrap(), "X1").unwrap();
        for (a, b) in back.values.iter().zip(&s.values) {
            assert!((a - b).abs() < 1e-12);
        }
        let p = classical_pending_flip(&classical_pending_flip(&s, "Z1").unwrap(), "Z1").unwrap();
        for (a, b) in p.values.iter().zip(&s.values) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn flips_preserve_the_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = ShearState::random(spine_graph_an(4).unwrap(), &mut rng, 2.0);
        let (g2, _) = s.graph.flip("X1").unwrap();
        assert!(bracket_defect(&flip_jacobian(&s, "X1").unwrap(), &s.graph, &g2) < 1e-12);
        let (g3, _) = s.graph.flip_pending("Z2").unwrap();
        let j = pending_flip_jacobian(&s, "Z2").unwrap();
        assert!(bracket_defect(&j, &s.graph, &g3) < 1e-12);
    }

    #[test]
    fn pentagon_closes() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let s = ShearState::random(spine_graph_an(4).unwrap(), &mut rng, 3.0);
            let d = pentagon_defect(&s, "X1", "X2")
                .unwrap()
                .expect("same ribbon graph");
            assert!(d < 1e-9, "defect {d}");
        }
    }
}
