use std::collections::HashMap;

use super::tensor::{leg, pack, unpack, Tensor};
use crate::scalars::Scalar;

/// Structure maps of a finite-dimensional quasi-Hopf algebra whose
/// multiplication is monomial in the chosen basis (true for every twisted
/// double and all of its gauge and unit twists).
#[derive(Clone, Debug)]
pub struct QuasiHopf<S> {
    pub dim: usize,
    /// mult[b1 * dim + b2] = Some((b, c)) when b1·b2 = c·b.
    pub mult: Vec<Option<(u32, S)>>,
    /// b1·b2 ≠ 0 only if rkey[b1] == lkey[b2].
    pub lkey: Vec<u32>,
    pub rkey: Vec<u32>,
    pub unit: Tensor<S>,
    pub counit: Vec<S>,
    pub comult: Vec<Tensor<S>>,
    pub phi: Tensor<S>,
    pub phi_inv: Tensor<S>,
    pub r: Tensor<S>,
    pub alpha: Tensor<S>,
    pub beta: Tensor<S>,
    pub antipode: Vec<Tensor<S>>,
}

impl<S: Scalar> QuasiHopf<S> {
    #[inline]
    pub fn mul_basis(&self, a: u32, b: u32) -> Option<&(u32, S)> {
        self.mult[a as usize * self.dim + b as usize].as_ref()
    }

    /// Product in H^{⊗k}, legwise.
    pub fn tmul(&self, a: &Tensor<S>, b: &Tensor<S>) -> Tensor<S> {
        let legs = a.legs();
        assert_eq!(legs, b.legs());
        let mut index: HashMap<u64, Vec<(u64, &S)>> = HashMap::new();
        for (k, c) in b.iter() {
            let lk: Vec<u32> = (0..legs).map(|i| self.lkey[leg(k, i) as usize]).collect();
            index.entry(pack(&lk)).or_default().push((k, c));
        }
        let mut acc: HashMap<u64, S> = HashMap::new();
        let mut idx = vec![0u32; legs];
        for (ka, ca) in a.iter() {
            let rk: Vec<u32> = (0..legs).map(|i| self.rkey[leg(ka, i) as usize]).collect();
            let Some(bucket) = index.get(&pack(&rk)) else { continue };
            'terms: for &(kb, cb) in bucket {
                let mut c = ca.mul_ref(cb);
                for (i, slot) in idx.iter_mut().enumerate() {
                    match self.mul_basis(leg(ka, i), leg(kb, i)) {
                        Some((p, s)) => {
                            *slot = *p;
                            c = c.mul_ref(s);
                        }
                        None => continue 'terms,
                    }
                }
                let key = pack(&idx);
                match acc.get_mut(&key) {
                    Some(x) => *x = x.add_ref(&c),
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        let mut t = Tensor::new(legs);
        for (k, v) in acc {
            t.add_term(k, v);
        }
        t
    }

    pub fn tmul_all(&self, factors: &[&Tensor<S>]) -> Tensor<S> {
        let mut it = factors.iter();
        let first = (*it.next().expect("nonempty product")).clone();
        it.fold(first, |acc, f| self.tmul(&acc, f))
    }

    pub fn basis(&self, b: u32) -> Tensor<S> {
        Tensor::from_terms(1, [(vec![b], S::one())])
    }

    /// 1^{⊗k}.
    pub fn one(&self, legs: usize) -> Tensor<S> {
        let mut t = self.unit.clone();
        for _ in 1..legs {
            t = Tensor::outer(&t, &self.unit);
        }
        t
    }

    pub fn delta_leg(&self, t: &Tensor<S>, i: usize) -> Tensor<S> {
        t.expand_leg(i, 2, |b| self.comult[b as usize].clone())
    }

    pub fn eps_leg(&self, t: &Tensor<S>, i: usize) -> Tensor<S> {
        t.contract_leg(i, |b| self.counit[b as usize].clone())
    }

    pub fn s_leg(&self, t: &Tensor<S>, i: usize) -> Tensor<S> {
        t.map_leg(i, |b| self.antipode[b as usize].iter().map(|(k, c)| (k as u32, c.clone())).collect())
    }

    pub fn delta(&self, x: &Tensor<S>) -> Tensor<S> {
        self.delta_leg(x, 0)
    }

    pub fn eps(&self, x: &Tensor<S>) -> S {
        x.iter().fold(S::zero(), |acc, (k, c)| acc.add_ref(&c.mul_ref(&self.counit[k as usize])))
    }

    pub fn s(&self, x: &Tensor<S>) -> Tensor<S> {
        self.s_leg(x, 0)
    }

    /// Dense coefficient vector of a one-leg tensor.
    pub fn dense(&self, x: &Tensor<S>) -> Vec<S> {
        x.to_dense(self.dim)
    }

    /// Splits a k-leg tensor into its terms as one-leg factors.
    pub fn factors(&self, t: &Tensor<S>) -> Vec<(Vec<Tensor<S>>, S)> {
        t.iter()
            .map(|(k, c)| (unpack(k, t.legs()).into_iter().map(|b| self.basis(b)).collect(), c.clone()))
            .collect()
    }

    /// Inverse of an element of H, by exact linear solve against left multiplication.
    pub fn inverse(&self, x: &Tensor<S>) -> Option<Tensor<S>> {
        let d = self.dim;
        // columns: x·b for each basis b
        let mut cols: Vec<Vec<S>> = Vec::with_capacity(d);
        for b in 0..d as u32 {
            cols.push(self.dense(&self.tmul(x, &self.basis(b))));
        }
        let rhs = self.dense(&self.unit);
        crate::linalg::solve(&cols, &rhs).map(|v| Tensor::from_dense(&v))
    }
}
