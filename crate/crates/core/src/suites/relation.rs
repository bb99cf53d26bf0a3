//! Identities as signed sums of coefficient-weighted products of named atoms,
//! evaluated in any [`Ring`].

use std::collections::HashMap;
use std::fmt;

use crate::qring::{Coefficient, Ring};
use crate::smallmat::{elem_times, identity, mat_mul, times_elem, Matrix};

/// `coeff * f_1 f_2 ... f_k` in the written order.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub coeff: Coefficient,
    pub factors: Vec<String>,
}

impl Term {
    pub fn new(coeff: Coefficient, factors: &[&str]) -> Self {
        Term {
            coeff,
            factors: factors.iter().map(|s| s.to_string()).collect(),
        }
    }
}

/// An identity `sum of terms = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub id: String,
    pub anchor: String,
    pub terms: Vec<Term>,
    /// Corrected variant of a printed identity.
    pub diagnostic: bool,
}

impl Relation {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, terms: Vec<Term>) -> Self {
        Relation {
            id: id.into(),
            anchor: anchor.into(),
            terms,
            diagnostic: false,
        }
    }

    pub fn diagnostic(mut self) -> Self {
        self.diagnostic = true;
        self
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| format!("({})*{}", t.coeff, t.factors.join("*")))
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// Term shorthand: `t(c, "a1 b2")`.
pub fn t(coeff: Coefficient, factors: &str) -> Term {
    Term {
        coeff,
        factors: factors.split_whitespace().map(String::from).collect(),
    }
}

pub fn q(k: i32) -> Coefficient {
    Coefficient::q_pow(k)
}

pub fn one() -> Coefficient {
    Coefficient::one()
}

#[derive(Clone, Debug)]
pub enum Value<E> {
    Scalar(E),
    Mat(Matrix<E>),
}

/// Named atoms in one ring.
#[derive(Clone, Debug)]
pub struct Env<E> {
    map: HashMap<String, Value<E>>,
}

impl<E: Clone> Default for Env<E> {
    fn default() -> Self {
        Env {
            map: HashMap::new(),
        }
    }
}

impl<E: Clone> Env<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn scalar(&mut self, name: impl Into<String>, e: E) {
        self.map.insert(name.into(), Value::Scalar(e));
    }

    pub fn matrix(&mut self, name: impl Into<String>, m: Matrix<E>) {
        self.map.insert(name.into(), Value::Mat(m));
    }

    pub fn get(&self, name: &str) -> Option<&Value<E>> {
        self.map.get(name)
    }

    pub fn get_scalar(&self, name: &str) -> Option<&E> {
        match self.map.get(name) {
            Some(Value::Scalar(e)) => Some(e),
            _ => None,
        }
    }

    pub fn get_matrix(&self, name: &str) -> Option<&Matrix<E>> {
        match self.map.get(name) {
            Some(Value::Mat(m)) => Some(m),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("unknown atom {0}")]
    UnknownAtom(String),
    #[error("matrix size mismatch in {0}")]
    Size(String),
}

fn times<R: Ring>(
    r: &R,
    x: Value<R::Elem>,
    y: &Value<R::Elem>,
    id: &str,
) -> Result<Value<R::Elem>, EvalError> {
    Ok(match (x, y) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(r.mul(&a, b)),
        (Value::Scalar(a), Value::Mat(m)) => Value::Mat(elem_times(r, &a, m)),
        (Value::Mat(m), Value::Scalar(b)) => Value::Mat(times_elem(r, &m, b)),
        (Value::Mat(m), Value::Mat(n)) => {
            Value::Mat(mat_mul(r, &m, n).map_err(|_| EvalError::Size(id.into()))?)
        }
    })
}

/// Values of the individual terms, scalars promoted to multiples of the
/// identity when the relation is matrix-valued.
pub fn eval_terms<R: Ring>(
    r: &R,
    env: &Env<R::Elem>,
    terms: &[Term],
    id: &str,
) -> Result<Vec<Value<R::Elem>>, EvalError> {
    let mut vals = Vec::with_capacity(terms.len());
    let mut size = None;
    for term in terms {
        let mut acc: Option<Value<R::Elem>> = None;
        for f in &term.factors {
            let v = env
                .get(f)
                .ok_or_else(|| EvalError::UnknownAtom(f.clone()))?;
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => times(r, a, v, id)?,
            });
        }
        let v = match acc {
            None => Value::Scalar(r.scalar(&term.coeff)),
            Some(Value::Scalar(e)) => Value::Scalar(r.scale(&term.coeff, &e)),
            Some(Value::Mat(m)) => Value::Mat(m.map(|e| r.scale(&term.coeff, e))),
        };
        if let Value::Mat(m) = &v {
            if size.is_some_and(|s| s != m.size()) {
                return Err(EvalError::Size(id.into()));
            }
            size = Some(m.size());
        }
        vals.push(v);
    }
    if let Some(n) = size {
        let id_m = identity(r, n);
        for v in vals.iter_mut() {
            if let Value::Scalar(e) = v {
                *v = Value::Mat(elem_times(r, e, &id_m));
            }
        }
    }
    Ok(vals)
}

pub fn sum_values<R: Ring>(r: &R, vals: &[Value<R::Elem>]) -> Value<R::Elem> {
    let mut it = vals.iter();
    let Some(first) = it.next() else {
        return Value::Scalar(r.zero());
    };
    let mut acc = first.clone();
    for v in it {
        acc = match (acc, v) {
            (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(r.add(&a, b)),
            (Value::Mat(m), Value::Mat(n)) => Value::Mat(crate::smallmat::mat_add(r, &m, n)),
            _ => unreachable!("scalars are promoted"),
        };
    }
    acc
}

pub fn eval_relation<R: Ring>(
    r: &R,
    env: &Env<R::Elem>,
    rel: &Relation,
) -> Result<Value<R::Elem>, EvalError> {
    Ok(sum_values(r, &eval_terms(r, env, &rel.terms, &rel.id)?))
}

/// Nonzero entries `(i, j)` of a value (`(0, 0)` for scalars).
pub fn nonzero_entries<R: Ring>(r: &R, v: &Value<R::Elem>) -> Vec<(usize, usize)> {
    match v {
        Value::Scalar(e) => {
            if r.is_zero(e) {
                vec![]
            } else {
                vec![(0, 0)]
            }
        }
        Value::Mat(m) => {
            let n = m.size();
            let mut out = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    if !r.is_zero(m.get(i, j)) {
                        out.push((i, j));
                    }
                }
            }
            out
        }
    }
}
