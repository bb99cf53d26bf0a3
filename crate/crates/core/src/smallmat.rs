//! Small square matrices over any [`Ring`]: the edge, turn and orbifold
//! matrices, the 4x4 R-matrix and Kronecker embeddings into two or three legs.

use thiserror::Error;

use crate::qring::{Coefficient, Ring, ScalarRing};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatError {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("unsupported size {0}")]
    UnsupportedSize(usize),
    #[error("bad tensor slot {0}")]
    BadSlot(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    n: usize,
    data: Vec<E>,
}

/// Matrix of central coefficients, e.g. the R-matrix.
pub type ScalarMatrix = Matrix<Coefficient>;

impl<E: Clone> Matrix<E> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn map<F, T: Clone>(&self, f: F) -> Matrix<T>
    where
        F: FnMut(&E) -> T,
    {
        Matrix {
            n: self.n,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i).clone())
    }
}

pub fn identity<R: Ring>(r: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, |i, j| if i == j { r.one() } else { r.zero() })
}

pub fn zero_matrix<R: Ring>(r: &R, n: usize) -> Matrix<R::Elem> {
    Matrix::from_fn(n, |_, _| r.zero())
}

/// Natural-order product: entries of `x` stand to the left of entries of `y`.
pub fn mat_mul<R: Ring>(
    r: &R,
    x: &Matrix<R::Elem>,
    y: &Matrix<R::Elem>,
) -> Result<Matrix<R::Elem>, MatError> {
    if x.n != y.n {
        return Err(MatError::SizeMismatch(x.n, y.n));
    }
    let n = x.n;
    Ok(Matrix::from_fn(n, |i, j| {
        let mut acc = r.zero();
        for k in 0..n {
            let a = x.get(i, k);
            let b = y.get(k, j);
            if r.is_zero(a) || r.is_zero(b) {
                continue;
            }
            acc = r.add(&acc, &r.mul(a, b));
        }
        acc
    }))
}

/// Product of a chain, left to right.
pub fn mat_chain<R: Ring>(r: &R, factors: &[&Matrix<R::Elem>]) -> Matrix<R::Elem> {
    let mut it = factors.iter();
    let first = it.next().expect("empty matrix chain");
    let mut acc = (*first).clone();
    for f in it {
        acc = mat_mul(r, &acc, f).expect("matrix chain sizes");
    }
    acc
}

pub fn mat_add<R: Ring>(r: &R, x: &Matrix<R::Elem>, y: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(x.n, y.n);
    Matrix {
        n: x.n,
        data: x
            .data
            .iter()
            .zip(&y.data)
            .map(|(a, b)| r.add(a, b))
            .collect(),
    }
}

pub fn mat_sub<R: Ring>(r: &R, x: &Matrix<R::Elem>, y: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    assert_eq!(x.n, y.n);
    Matrix {
        n: x.n,
        data: x
            .data
            .iter()
            .zip(&y.data)
            .map(|(a, b)| r.sub(a, b))
            .collect(),
    }
}

pub fn mat_neg<R: Ring>(r: &R, x: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    x.map(|a| r.neg(a))
}

/// Multiply by `t^tpow`.
pub fn mat_scale<R: Ring>(r: &R, x: &Matrix<R::Elem>, tpow: i32) -> Matrix<R::Elem> {
    if tpow == 0 {
        return x.clone();
    }
    let c = Coefficient::t_pow(tpow);
    x.map(|a| r.scale(&c, a))
}

/// Multiply by `q^k`.
pub fn mat_qpow<R: Ring>(r: &R, k: i32, x: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    x.map(|a| r.qpow(k, a))
}

/// `e * x` with `e` standing to the left of every entry.
pub fn elem_times<R: Ring>(r: &R, e: &R::Elem, x: &Matrix<R::Elem>) -> Matrix<R::Elem> {
    x.map(|a| r.mul(e, a))
}

/// `x * e` with `e` standing to the right of every entry.
pub fn times_elem<R: Ring>(r: &R, x: &Matrix<R::Elem>, e: &R::Elem) -> Matrix<R::Elem> {
    x.map(|a| r.mul(a, e))
}

pub fn mat_trace<R: Ring>(r: &R, x: &Matrix<R::Elem>) -> R::Elem {
    let mut acc = r.zero();
    for i in 0..x.n {
        acc = r.add(&acc, x.get(i, i));
    }
    acc
}

pub fn mat_is_zero<R: Ring>(r: &R, x: &Matrix<R::Elem>) -> bool {
    x.data.iter().all(|a| r.is_zero(a))
}

pub fn mat_pow<R: Ring>(r: &R, x: &Matrix<R::Elem>, k: u32) -> Matrix<R::Elem> {
    let mut acc = identity(r, x.n);
    for _ in 0..k {
        acc = mat_mul(r, &acc, x).expect("square");
    }
    acc
}

/// Embed a scalar matrix entrywise.
pub fn lift<R: Ring>(r: &R, m: &ScalarMatrix) -> Matrix<R::Elem> {
    m.map(|c| r.scalar(c))
}

fn int_matrix<R: Ring>(r: &R, rows: [[i64; 2]; 2]) -> Matrix<R::Elem> {
    Matrix::from_fn(2, |i, j| r.scalar(&Coefficient::from_int(rows[i][j])))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Turn {
    Left,
    Right,
}

impl Turn {
    pub fn flipped(self) -> Turn {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

/// `[[0, -W(e_gen/2)], [W(-e_gen/2), 0]]` over `n` generators.
pub fn edge_matrix<R: Ring>(r: &R, n: usize, gen: usize) -> Matrix<R::Elem> {
    assert!(gen < n, "unknown generator {gen}");
    let mut up = vec![0; n];
    up[gen] = 1;
    let mut down = vec![0; n];
    down[gen] = -1;
    Matrix::from_rows(vec![
        vec![r.zero(), r.neg(&r.monomial(&up))],
        vec![r.monomial(&down), r.zero()],
    ])
}

/// `R = [[1, 1], [-1, 0]]`, `L = [[0, 1], [-1, -1]]`.
pub fn turn_matrix<R: Ring>(r: &R, kind: Turn) -> Matrix<R::Elem> {
    match kind {
        Turn::Right => int_matrix(r, [[1, 1], [-1, 0]]),
        Turn::Left => int_matrix(r, [[0, 1], [-1, -1]]),
    }
}

/// `F_w = [[0, 1], [-1, -w]]`.
pub fn f_matrix<R: Ring>(r: &R, omega: &Coefficient) -> Matrix<R::Elem> {
    Matrix::from_rows(vec![
        vec![r.zero(), r.one()],
        vec![r.neg(&r.one()), r.neg(&r.scalar(omega))],
    ])
}

/// `[[a, c], [-c, a - w c]]`, the general matrix commuting with `F_w`.
pub fn omega_commutant<R: Ring>(
    r: &R,
    a: &Coefficient,
    c: &Coefficient,
    omega: &Coefficient,
) -> Matrix<R::Elem> {
    let lower = a - &(omega * c);
    Matrix::from_rows(vec![
        vec![r.scalar(a), r.scalar(c)],
        vec![r.scalar(&-c), r.scalar(&lower)],
    ])
}

/// `R_12[q^power]` in the basis `11, 12, 21, 22`.
pub fn r_matrix(power: i32) -> ScalarMatrix {
    let qp = Coefficient::q_pow(power);
    let mut m = zero_matrix(&ScalarRing, 4);
    m.set(0, 0, qp.clone());
    m.set(3, 3, qp);
    m.set(1, 1, Coefficient::one());
    m.set(2, 2, Coefficient::one());
    m.set(1, 2, Coefficient::q_diff(power));
    m
}

/// `M (x) 1` for slot 1, `1 (x) M` for slot 2; basis index `2 i1 + i2`.
pub fn tensor_embed<R: Ring>(
    r: &R,
    m: &Matrix<R::Elem>,
    slot: usize,
) -> Result<Matrix<R::Elem>, MatError> {
    if m.n != 2 {
        return Err(MatError::UnsupportedSize(m.n));
    }
    match slot {
        1 => Ok(Matrix::from_fn(4, |i, j| {
            if i % 2 == j % 2 {
                m.get(i / 2, j / 2).clone()
            } else {
                r.zero()
            }
        })),
        2 => Ok(Matrix::from_fn(4, |i, j| {
            if i / 2 == j / 2 {
                m.get(i % 2, j % 2).clone()
            } else {
                r.zero()
            }
        })),
        s => Err(MatError::BadSlot(s)),
    }
}

/// Place a 4x4 two-leg matrix on legs `(a, b)` of three 2-dim legs; basis `4 i1 + 2 i2 + i3`.
pub fn scalar_tensor(m: &ScalarMatrix, legs: (usize, usize)) -> Result<ScalarMatrix, MatError> {
    if m.n != 4 {
        return Err(MatError::UnsupportedSize(m.n));
    }
    let (a, b) = legs;
    if !(1..=3).contains(&a) || !(1..=3).contains(&b) || a == b {
        return Err(MatError::BadSlot(if a == b { a } else { a.max(b) }));
    }
    let digit = |x: usize, leg: usize| (x >> (3 - leg)) & 1;
    let other = 6 - a - b;
    Ok(Matrix::from_fn(8, |i, j| {
        if digit(i, other) != digit(j, other) {
            return Coefficient::zero();
        }
        let ri = 2 * digit(i, a) + digit(i, b);
        let rj = 2 * digit(j, a) + digit(j, b);
        m.get(ri, rj).clone()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qring::{SkewForm, TorusElement};

    fn s() -> ScalarRing {
        ScalarRing
    }

    fn int(rows: [[i64; 2]; 2]) -> ScalarMatrix {
        int_matrix(&s(), rows)
    }

    #[test]
    fn turn_matrix_relations() {
        let r = s();
        let rr = turn_matrix(&r, Turn::Right);
        let ll = turn_matrix(&r, Turn::Left);
        assert_eq!(mat_mul(&r, &ll, &ll).unwrap(), mat_neg(&r, &rr));
        // R^3 = -E, computed by hand: R^2 = [[0,1],[-1,-1]] = L
        assert_eq!(mat_mul(&r, &rr, &rr).unwrap(), ll);
        assert_eq!(mat_pow(&r, &rr, 3), mat_neg(&r, &identity(&r, 2)));
        assert_eq!(mat_trace(&r, &rr), Coefficient::one());
        assert_eq!(mat_trace(&r, &ll), Coefficient::from_int(-1));
    }

    #[test]
    fn f_matrix_powers() {
        let r = s();
        let f0 = f_matrix(&r, &Coefficient::zero());
        assert_eq!(mat_pow(&r, &f0, 2), mat_neg(&r, &identity(&r, 2)));
        // p = 3: F_1^3 = +E; hand values F_1^2 = [[-1,-1],[1,0]]
        let f1 = f_matrix(&r, &Coefficient::one());
        assert_eq!(mat_pow(&r, &f1, 2), int([[-1, -1], [1, 0]]));
        assert_eq!(mat_pow(&r, &f1, 3), identity(&r, 2));
        let w = Coefficient::param("omega");
        assert_eq!(mat_trace(&r, &f_matrix(&r, &w)), -&w);
    }

    #[test]
    fn omega_commutant_commutes() {
        let r = s();
        let w = Coefficient::param("omega");
        let om = omega_commutant(&r, &Coefficient::param("a"), &Coefficient::param("c"), &w);
        let f = f_matrix(&r, &w);
        assert!(mat_is_zero(
            &r,
            &mat_sub(
                &r,
                &mat_mul(&r, &om, &f).unwrap(),
                &mat_mul(&r, &f, &om).unwrap()
            )
        ));
        let id = omega_commutant(&r, &1.into(), &Coefficient::zero(), &w);
        assert_eq!(id, identity(&r, 2));
        let f0 = omega_commutant(&r, &Coefficient::zero(), &1.into(), &Coefficient::zero());
        assert_eq!(f0, f_matrix(&r, &Coefficient::zero()));
    }

    #[test]
    fn edge_matrix_squares_to_minus_identity() {
        let f = SkewForm::zero(1);
        let x = edge_matrix(&f, 1, 0);
        let sq = mat_mul(&f, &x, &x).unwrap();
        assert_eq!(sq, mat_neg(&f, &identity(&f, 2)));
        assert!(mat_trace(&f, &x).is_zero());
        for e in x.entries() {
            assert_eq!(&e.star(), e);
        }
    }

    #[test]
    fn r_matrix_entries_and_inverse() {
        let r = s();
        let r1 = r_matrix(1);
        assert_eq!(r1.get(0, 0), &Coefficient::q_pow(1));
        assert_eq!(r1.get(1, 2), &Coefficient::q_diff(1));
        assert_eq!(r1.get(2, 1), &Coefficient::zero());
        assert_eq!(r1.get(2, 2), &Coefficient::one());
        let prod = mat_mul(&r, &r1, &r_matrix(-1)).unwrap();
        assert_eq!(prod, identity(&r, 4));
    }

    #[test]
    fn transpose_is_r21() {
        // R21 = P R12 P with P the flip of the two legs
        let r = s();
        let p = Matrix::from_fn(4, |i, j| {
            let swapped = 2 * (i % 2) + i / 2;
            if swapped == j {
                Coefficient::one()
            } else {
                Coefficient::zero()
            }
        });
        let r12 = r_matrix(1);
        let r21 = mat_chain(&r, &[&p, &r12, &p]);
        assert_eq!(r12.transpose(), r21);
    }

    #[test]
    fn yang_baxter_on_three_legs() {
        let r = s();
        let r12 = scalar_tensor(&r_matrix(1), (1, 2)).unwrap();
        let r13 = scalar_tensor(&r_matrix(1), (1, 3)).unwrap();
        let r23 = scalar_tensor(&r_matrix(1), (2, 3)).unwrap();
        let lhs = mat_chain(&r, &[&r12, &r13, &r23]);
        let rhs = mat_chain(&r, &[&r23, &r13, &r12]);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_embed_orders_entries() {
        // (M (x) 1)(1 (x) N) has entry (ik, jl) = M_ij N_kl with M left of N
        let f = SkewForm::from_rows(&[vec![0, 1], vec![-1, 0]]).unwrap();
        let m = Matrix::from_fn(2, |i, j| {
            TorusElement::monomial(&[(i + 2 * j) as i32 + 1, 0])
        });
        let n = Matrix::from_fn(2, |i, j| {
            TorusElement::monomial(&[0, (i + 2 * j) as i32 - 1])
        });
        let prod = mat_mul(
            &f,
            &tensor_embed(&f, &m, 1).unwrap(),
            &tensor_embed(&f, &n, 2).unwrap(),
        )
        .unwrap();
        for i in 0..2 {
            for k in 0..2 {
                for j in 0..2 {
                    for l in 0..2 {
                        let want = f.mul(m.get(i, j), n.get(k, l));
                        assert_eq!(prod.get(2 * i + k, 2 * j + l), &want);
                    }
                }
            }
        }
        let id = tensor_embed(&f, &identity(&f, 2), 1).unwrap();
        assert_eq!(id, identity(&f, 4));
    }
}
