//! Higher indicators as traces of the rotation map on Hom(1, V^{⊗n}), built
//! densely from the rigid pivotal structure of a quasi-Hopf algebra.

use super::InvError;
use crate::double::tensor::leg;
use crate::double::{QuasiHopf, Tensor};
use crate::representations::{identity, mat_eq, mat_mul, trace, zeros, Matrix};
use crate::scalars::Scalar;

fn kron<S: Scalar>(a: &Matrix<S>, b: &Matrix<S>) -> Matrix<S> {
    let (ra, ca) = (a.len(), a.first().map_or(0, |r| r.len()));
    let (rb, cb) = (b.len(), b.first().map_or(0, |r| r.len()));
    let mut out = vec![vec![S::zero(); ca * cb]; ra * rb];
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (k, brow) in b.iter().enumerate() {
                for (l, y) in brow.iter().enumerate() {
                    if !y.is_zero() {
                        out[i * rb + k][j * cb + l] = x.mul_ref(y);
                    }
                }
            }
        }
    }
    out
}

fn add_scaled<S: Scalar>(acc: &mut Matrix<S>, m: &Matrix<S>, c: &S) {
    for (r, s) in acc.iter_mut().zip(m) {
        for (x, y) in r.iter_mut().zip(s) {
            if !y.is_zero() {
                *x = x.add_ref(&y.mul_ref(c));
            }
        }
    }
}

fn transpose<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let c = m.first().map_or(0, |r| r.len());
    (0..c).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Matrices of the basis elements on one module.
#[derive(Clone, Debug)]
pub struct Action<S> {
    pub dim: usize,
    pub basis: Vec<Matrix<S>>,
}

impl<S: Scalar> Action<S> {
    pub fn of(&self, x: &Tensor<S>) -> Matrix<S> {
        let mut out = zeros(self.dim);
        for (k, c) in x.iter() {
            add_scaled(&mut out, &self.basis[k as usize], c);
        }
        out
    }

    /// The dual module: h acts by ρ(S(h))ᵀ.
    pub fn dual(&self, q: &QuasiHopf<S>) -> Self {
        Action { dim: self.dim, basis: q.antipode.iter().map(|s| transpose(&self.of(s))).collect() }
    }

    /// X ⊗ Y with h acting through Δ(h).
    pub fn tensor(&self, other: &Self, q: &QuasiHopf<S>) -> Self {
        let basis = q
            .comult
            .iter()
            .map(|d| {
                let mut m = vec![vec![S::zero(); self.dim * other.dim]; self.dim * other.dim];
                for (k, c) in d.iter() {
                    add_scaled(&mut m, &kron(&self.basis[leg(k, 0) as usize], &other.basis[leg(k, 1) as usize]), c);
                }
                m
            })
            .collect();
        Action { dim: self.dim * other.dim, basis }
    }
}

fn three<S: Scalar>(t: &Tensor<S>, x: &Action<S>, y: &Action<S>, z: &Action<S>) -> Matrix<S> {
    let n = x.dim * y.dim * z.dim;
    let mut out = vec![vec![S::zero(); n]; n];
    for (k, c) in t.iter() {
        let m = kron(&kron(&x.basis[leg(k, 0) as usize], &y.basis[leg(k, 1) as usize]), &z.basis[leg(k, 2) as usize]);
        add_scaled(&mut out, &m, c);
    }
    out
}

/// Checks h·Λ = ε(h)Λ on basis elements and ε(Λ) = 1.
pub fn check_integral<S: Scalar>(q: &QuasiHopf<S>, lambda: &Tensor<S>) -> Result<(), InvError> {
    if !super::near(&q.eps(lambda), &S::one()) {
        return Err(InvError::Integral("ε(Λ) ≠ 1".into()));
    }
    for b in 0..q.dim as u32 {
        let lhs = q.tmul(&q.basis(b), lambda);
        if !lhs.approx_eq(&lambda.scale(&q.counit[b as usize]), 1e-9) {
            return Err(InvError::Integral(format!("basis element {b} does not absorb Λ")));
        }
    }
    Ok(())
}

/// Evaluation, coevaluation and pivotal data on one module.
pub struct Rigid<'a, S> {
    q: &'a QuasiHopf<S>,
    v: Action<S>,
    dual: Action<S>,
    ev: Vec<S>,
    pivot_inv: Matrix<S>,
}

impl<'a, S: Scalar> Rigid<'a, S> {
    /// `pivot` is the element g with j(x)(f) = f(g⁻¹x).
    pub fn new(q: &'a QuasiHopf<S>, v: Action<S>, pivot: &Tensor<S>) -> Result<Self, InvError> {
        let dual = v.dual(q);
        let a = v.of(&q.alpha);
        let ev = a.iter().flatten().cloned().collect();
        let g = v.of(pivot);
        let g_inv = v.of(&q.inverse(pivot).ok_or(InvError::Pivot("pivot is not invertible".into()))?);
        // j is a module map iff g⁻¹ρ(h) = ρ(S²(h))g⁻¹.
        for b in 0..q.dim as u32 {
            let s2 = q.s(&q.s(&q.basis(b)));
            if !mat_eq(&mat_mul(&g_inv, &v.basis[b as usize]), &mat_mul(&v.of(&s2), &g_inv)) {
                return Err(InvError::Pivot(format!("j is not a module map at basis element {b}")));
            }
        }
        Ok(Rigid { q, v, dual, ev, pivot_inv: g })
    }

    /// (id ⊗ ev)∘Φ∘(db ⊗ id) = id on V.
    pub fn check_zigzag(&self) -> Result<(), InvError> {
        let d = self.v.dim;
        let phi = three(&self.q.phi, &self.v, &self.dual, &self.v);
        let bt = self.v.of(&self.q.beta);
        let mut out = zeros::<S>(d);
        for k in 0..d {
            // db(1) ⊗ e_k = Σ_i βe_i ⊗ φ_i ⊗ e_k
            let mut vec = vec![S::zero(); d * d * d];
            for i in 0..d {
                for r in 0..d {
                    let c = &bt[r][i];
                    if !c.is_zero() {
                        vec[(r * d + i) * d + k] = c.clone();
                    }
                }
            }
            let img: Vec<S> = phi.iter().map(|row| dot(row, &vec)).collect();
            for r in 0..d {
                out[r][k] = (0..d * d).fold(S::zero(), |acc, t| acc.add_ref(&self.ev[t].mul_ref(&img[r * d * d + t])));
            }
        }
        if mat_eq(&out, &identity(d)) {
            Ok(())
        } else {
            Err(InvError::Rigidity("zig-zag fails".into()))
        }
    }

    /// ν^(n)(V) as the trace of the rotation on Hom(1, V^{⊗n}), with V^{⊗n}
    /// bracketed from the left.
    pub fn indicator(&self, lambda: &Tensor<S>, n: usize) -> S {
        let d = self.v.dim;
        if n == 1 {
            return trace(&self.v.of(lambda));
        }
        let q = self.q;
        let mut powers = vec![self.v.clone()];
        for _ in 1..n {
            let next = powers.last().unwrap().tensor(&self.v, q);
            powers.push(next);
        }
        // α_k : L_k → V ⊗ L_{k−1}
        let mut assoc = identity::<S>(d * d);
        for k in 3..=n {
            let lifted = kron(&assoc, &identity(d));
            assoc = mat_mul(&three(&q.phi, &self.v, &powers[k - 3], &self.v), &lifted);
        }
        let w = &powers[n - 2];
        let big = d.pow(n as u32);
        let small = w.dim;
        let phi_inv = three(&q.phi_inv, &self.dual, &self.v, w);
        let bt = self.dual.of(&q.beta);
        // rot[(wi, vi)][(a, wj)] for a vector a ⊗ wj in V ⊗ W.
        let mut rot = vec![vec![S::zero(); big]; big];
        for i in 0..d {
            for col in 0..big {
                // Φ⁻¹(βφ_i ⊗ e_col) then ev on the first two legs.
                let mut res = vec![S::zero(); small];
                for (r, row) in phi_inv.iter().enumerate() {
                    let (f, rest) = (r / (d * small), r % (d * small));
                    let (x, wi) = (rest / small, rest % small);
                    let e = &self.ev[f * d + x];
                    if e.is_zero() {
                        continue;
                    }
                    let mut s = S::zero();
                    for j in 0..d {
                        let b = &bt[j][i];
                        if b.is_zero() {
                            continue;
                        }
                        let c = &row[j * big + col];
                        if !c.is_zero() {
                            s = s.add_ref(&b.mul_ref(c));
                        }
                    }
                    if !s.is_zero() {
                        res[wi] = res[wi].add_ref(&e.mul_ref(&s));
                    }
                }
                for (wi, x) in res.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for vi in 0..d {
                        let p = &self.pivot_inv[vi][i];
                        if !p.is_zero() {
                            rot[wi * d + vi][col] = rot[wi * d + vi][col].add_ref(&x.mul_ref(p));
                        }
                    }
                }
            }
        }
        let proj = powers[n - 1].of(lambda);
        trace(&mat_mul(&mat_mul(&rot, &assoc), &proj))
    }
}

fn dot<S: Scalar>(a: &[S], b: &[S]) -> S {
    a.iter().zip(b).fold(S::zero(), |acc, (x, y)| if x.is_zero() || y.is_zero() { acc } else { acc.add_ref(&x.mul_ref(y)) })
}
