//! Simple modules, characters and fusion rules of twisted doubles.

mod corner;
mod fusion;

pub use fusion::{fusion_isomorphic, fusion_rules, FusionRules};

use serde::Serialize;
use thiserror::Error;

use crate::double::{DoubleTensors, QuasiHopf, Tensor};
use crate::groups::Elem;
use crate::linalg;
use crate::scalars::Scalar;
use corner::Corner;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("decomposition failed: {0}")]
    Split(String),
    #[error("module check failed: {0}")]
    Verify(String),
    #[error("fusion coefficient is not a nonnegative integer: N[{0}][{1}][{2}]")]
    Fusion(usize, usize, usize),
}

pub(crate) fn near<S: Scalar>(a: &S, b: &S) -> bool {
    if S::EXACT {
        a == b
    } else {
        a.close_to(b, 1e-8)
    }
}

pub type Matrix<S> = Vec<Vec<S>>;

/// A simple module of D^ω(G), realized as a minimal left ideal D·f.
#[derive(Clone, Debug)]
pub struct SimpleModule<S> {
    pub dim: usize,
    /// Smallest element of the conjugacy class supporting the module.
    pub class_rep: Elem,
    /// grades[i] = g when e(g)⊗1 fixes basis vector i.
    pub grades: Vec<Elem>,
    /// action[b] = matrix of basis element b.
    pub action: Vec<Matrix<S>>,
    /// Central primitive idempotent, as coordinates on the basis e(g)⊗x.
    pub central_idempotent: Vec<S>,
}

impl<S: Scalar> SimpleModule<S> {
    pub fn character(&self) -> Vec<S> {
        self.action.iter().map(|m| trace(m)).collect()
    }

    /// Matrix of an arbitrary algebra element.
    pub fn act(&self, x: &Tensor<S>) -> Matrix<S> {
        let mut out = zeros::<S>(self.dim);
        for (k, c) in x.iter() {
            for (r, row) in self.action[k as usize].iter().enumerate() {
                for (col, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        out[r][col] = out[r][col].add_ref(&c.mul_ref(v));
                    }
                }
            }
        }
        out
    }

    /// Checks ρ(a)ρ(b) = ρ(ab) on all basis pairs and ρ(1) = id.
    pub fn verify(&self, q: &QuasiHopf<S>) -> Result<(), RepError> {
        let id = identity(self.dim);
        if !mat_eq(&self.act(&q.unit), &id) {
            return Err(RepError::Verify("unit does not act as the identity".into()));
        }
        for a in 0..q.dim {
            for b in 0..q.dim {
                let lhs = mat_mul(&self.action[a], &self.action[b]);
                let rhs = match q.mul_basis(a as u32, b as u32) {
                    Some((p, s)) => scale(&self.action[*p as usize], s),
                    None => zeros(self.dim),
                };
                if !mat_eq(&lhs, &rhs) {
                    return Err(RepError::Verify(format!("not multiplicative on ({a}, {b})")));
                }
            }
        }
        Ok(())
    }
}

pub fn zeros<S: Scalar>(n: usize) -> Matrix<S> {
    vec![vec![S::zero(); n]; n]
}

pub fn identity<S: Scalar>(n: usize) -> Matrix<S> {
    let mut m = zeros(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = S::one();
    }
    m
}

pub fn trace<S: Scalar>(m: &Matrix<S>) -> S {
    m.iter().enumerate().fold(S::zero(), |acc, (i, r)| acc.add_ref(&r[i]))
}

pub fn mat_mul<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let n = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![S::zero(); n]; a.len()];
    for (i, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[i][j] = out[i][j].add_ref(&x.mul_ref(y));
                }
            }
        }
    }
    out
}

pub fn scale<S: Scalar>(a: &Matrix<S>, s: &S) -> Matrix<S> {
    a.iter().map(|r| r.iter().map(|x| x.mul_ref(s)).collect()).collect()
}

pub fn mat_eq<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> bool {
    a.iter().zip(b).all(|(r, s)| r.iter().zip(s).all(|(x, y)| near(x, y)))
}

/// Dense left multiplication by a basis element.
fn left_mul<S: Scalar>(q: &QuasiHopf<S>, b: u32, v: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); q.dim];
    for (c, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if let Some((p, s)) = q.mul_basis(b, c as u32) {
            out[*p as usize] = out[*p as usize].add_ref(&x.mul_ref(s));
        }
    }
    out
}

fn dense_mul<S: Scalar>(q: &QuasiHopf<S>, u: &[S], v: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); q.dim];
    for (b, x) in u.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (i, y) in left_mul(q, b as u32, v).into_iter().enumerate() {
            if !y.is_zero() {
                out[i] = out[i].add_ref(&x.mul_ref(&y));
            }
        }
    }
    out
}

/// Decomposes D^ω(G) into its simple modules, ordered by conjugacy class.
pub fn decompose<S: Scalar>(d: &DoubleTensors) -> Result<Vec<SimpleModule<S>>, RepError> {
    let q = d.quasi_hopf::<S>();
    decompose_with(d, &q)
}

pub fn decompose_with<S: Scalar>(d: &DoubleTensors, q: &QuasiHopf<S>) -> Result<Vec<SimpleModule<S>>, RepError> {
    let g = d.group();
    let n = g.order();
    let m = d.modulus();
    let cd = g.conjugacy_data();
    let mut out = Vec::new();
    for &a in &cd.reps {
        let corner = Corner::<S>::new(d, a);
        let blocks = corner.blocks(|x| g.elem_order(x), |x| g.inv(x))?;
        let embed = |v: &[S]| {
            let mut w = vec![S::zero(); n * n];
            for (i, c) in v.iter().enumerate() {
                w[a * n + corner.elems[i]] = c.clone();
            }
            w
        };
        for block in blocks {
            let f = embed(&block.primitive);
            let mut rows: Vec<Vec<S>> = g.elements().map(|y| left_mul(q, d.basis(g.conj(y, a), y), &f)).collect();
            let piv = linalg::rref(&mut rows);
            rows.truncate(piv.len());
            let dim = piv.len();
            if dim != block.dim * g.class_of(a).len() {
                return Err(RepError::Split(format!("module at class {a} has dimension {dim}")));
            }
            let grades = piv.iter().map(|&p| p / n).collect();
            let action = (0..(n * n) as u32)
                .map(|b| {
                    let imgs: Vec<Vec<S>> = rows.iter().map(|r| left_mul(q, b, r)).collect();
                    piv.iter().map(|&p| imgs.iter().map(|img| img[p].clone()).collect()).collect()
                })
                .collect();
            let e = embed(&block.idempotent);
            let mut central = vec![S::zero(); n * n];
            for y in g.elements() {
                let mut u = vec![S::zero(); n * n];
                let mut u_inv = vec![S::zero(); n * n];
                let yi = g.inv(y);
                for h in g.elements() {
                    u[d.basis(h, y) as usize] = S::one();
                    let th = d.theta(h, y, yi) as i64;
                    u_inv[d.basis(g.conj(yi, h), yi) as usize] = S::root_of_unity(-th, m);
                }
                let conj = dense_mul(q, &dense_mul(q, &u, &e), &u_inv);
                for (c, x) in central.iter_mut().zip(conj) {
                    *c = c.add_ref(&x);
                }
            }
            let inv_c = S::from_ratio(1, corner.size() as i64);
            central.iter_mut().for_each(|c| *c = c.mul_ref(&inv_c));
            out.push(SimpleModule { dim, class_rep: a, grades, action, central_idempotent: central });
        }
    }
    Ok(out)
}

/// Characters χ_i(b) on the basis e(g)⊗x, with dimensions.
#[derive(Clone, Debug, Serialize)]
pub struct CharTable<S> {
    pub chars: Vec<Vec<S>>,
    pub dims: Vec<usize>,
}

impl<S: Scalar> CharTable<S> {
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    /// Σ dim² = dim D, characters independent, χ(1) = dim.
    pub fn check(&self, q: &QuasiHopf<S>) -> Result<(), RepError> {
        let total: usize = self.dims.iter().map(|d| d * d).sum();
        if total != q.dim {
            return Err(RepError::Verify(format!("dimension count {total} ≠ {}", q.dim)));
        }
        if linalg::rank(&self.chars) != self.len() {
            return Err(RepError::Verify("characters are dependent".into()));
        }
        for (c, &d) in self.chars.iter().zip(&self.dims) {
            let one = q.unit.iter().fold(S::zero(), |acc, (k, x)| acc.add_ref(&x.mul_ref(&c[k as usize])));
            if !near(&one, &S::from_ratio(d as i64, 1)) {
                return Err(RepError::Verify("χ(1) ≠ dim".into()));
            }
        }
        Ok(())
    }

    /// χ(x) for an algebra element.
    pub fn eval(&self, i: usize, x: &Tensor<S>) -> S {
        x.iter().fold(S::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&self.chars[i][k as usize])))
    }
}

pub fn characters<S: Scalar>(simples: &[SimpleModule<S>]) -> CharTable<S> {
    CharTable { chars: simples.iter().map(|s| s.character()).collect(), dims: simples.iter().map(|s| s.dim).collect() }
}
