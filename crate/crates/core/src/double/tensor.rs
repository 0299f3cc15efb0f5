use std::collections::HashMap;

use crate::scalars::Scalar;

const LEG_BITS: u32 = 16;
const LEG_MASK: u64 = (1 << LEG_BITS) - 1;
pub const MAX_LEGS: usize = 4;

pub fn pack(idx: &[u32]) -> u64 {
    idx.iter().rev().fold(0u64, |acc, &i| (acc << LEG_BITS) | i as u64)
}

#[inline]
pub fn leg(key: u64, i: usize) -> u32 {
    ((key >> (LEG_BITS as usize * i)) & LEG_MASK) as u32
}

pub fn unpack(key: u64, legs: usize) -> Vec<u32> {
    (0..legs).map(|i| leg(key, i)).collect()
}

/// Sparse element of H^{⊗k} in the product basis.
#[derive(Clone, Debug)]
pub struct Tensor<S> {
    legs: usize,
    terms: HashMap<u64, S>,
}

impl<S: Scalar> Tensor<S> {
    pub fn new(legs: usize) -> Self {
        assert!((1..=MAX_LEGS).contains(&legs));
        Tensor { legs, terms: HashMap::new() }
    }

    pub fn from_terms(legs: usize, terms: impl IntoIterator<Item = (Vec<u32>, S)>) -> Self {
        let mut t = Tensor::new(legs);
        for (idx, c) in terms {
            assert_eq!(idx.len(), legs);
            t.add_term(pack(&idx), c);
        }
        t
    }

    /// Element (one leg) from a dense coefficient vector.
    pub fn from_dense(v: &[S]) -> Self {
        let mut t = Tensor::new(1);
        for (i, c) in v.iter().enumerate() {
            if !c.is_zero() {
                t.terms.insert(i as u64, c.clone());
            }
        }
        t
    }

    pub fn to_dense(&self, dim: usize) -> Vec<S> {
        assert_eq!(self.legs, 1);
        let mut v = vec![S::zero(); dim];
        for (&k, c) in &self.terms {
            v[k as usize] = c.clone();
        }
        v
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &S)> {
        self.terms.iter().map(|(k, v)| (*k, v))
    }

    pub fn get(&self, key: u64) -> S {
        self.terms.get(&key).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, key: u64, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let v = e.get().add_ref(&c);
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut t = Tensor::new(self.legs);
        for (&k, c) in &self.terms {
            t.add_term(k, c.mul_ref(s));
        }
        t
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.legs, o.legs);
        let mut t = self.clone();
        for (&k, c) in &o.terms {
            t.add_term(k, c.clone());
        }
        t
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!(self.legs, o.legs);
        let mut t = self.clone();
        for (&k, c) in &o.terms {
            t.add_term(k, c.neg_ref());
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    /// Exact equality for exact scalars; within `tol` per coefficient otherwise.
    pub fn approx_eq(&self, o: &Self, tol: f64) -> bool {
        let d = self.sub(o);
        if S::EXACT {
            d.is_zero()
        } else {
            d.terms.values().all(|c| c.to_complex().norm() <= tol)
        }
    }

    /// First key where the tensors differ.
    pub fn diff_witness(&self, o: &Self, tol: f64) -> Option<Vec<u32>> {
        let d = self.sub(o);
        let mut keys: Vec<u64> = d
            .terms
            .iter()
            .filter(|(_, c)| if S::EXACT { !c.is_zero() } else { c.to_complex().norm() > tol })
            .map(|(k, _)| *k)
            .collect();
        keys.sort_unstable();
        keys.first().map(|&k| unpack(k, self.legs))
    }

    /// Places leg i at position perm[i].
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.legs);
        let mut t = Tensor::new(self.legs);
        for (&k, c) in &self.terms {
            let mut idx = vec![0u32; self.legs];
            for (i, &p) in perm.iter().enumerate() {
                idx[p] = leg(k, i);
            }
            t.terms.insert(pack(&idx), c.clone());
        }
        t
    }

    /// a ⊗ b with the legs of `b` after those of `a`.
    pub fn outer(a: &Self, b: &Self) -> Self {
        let legs = a.legs + b.legs;
        assert!(legs <= MAX_LEGS);
        let shift = LEG_BITS as usize * a.legs;
        let mut t = Tensor::new(legs);
        for (&ka, ca) in &a.terms {
            for (&kb, cb) in &b.terms {
                t.add_term(ka | (kb << shift), ca.mul_ref(cb));
            }
        }
        t
    }

    /// Inserts a one-leg element as a new leg at position `pos`.
    pub fn insert_leg(&self, pos: usize, elem: &Self) -> Self {
        assert_eq!(elem.legs, 1);
        let t = Tensor::outer(self, elem);
        let mut perm: Vec<usize> = (0..self.legs).map(|i| if i < pos { i } else { i + 1 }).collect();
        perm.push(pos);
        t.permute(&perm)
    }

    /// Applies a linear map to leg `i`; `f` returns the sparse image of a basis index.
    pub fn map_leg(&self, i: usize, f: impl Fn(u32) -> Vec<(u32, S)>) -> Self {
        let shift = LEG_BITS as usize * i;
        let mut t = Tensor::new(self.legs);
        for (&k, c) in &self.terms {
            let base = k & !(LEG_MASK << shift);
            for (j, s) in f(leg(k, i)) {
                t.add_term(base | ((j as u64) << shift), c.mul_ref(&s));
            }
        }
        t
    }

    /// Replaces leg `i` by the `extra` legs of a tensor-valued image (e.g. a coproduct).
    pub fn expand_leg(&self, i: usize, extra: usize, f: impl Fn(u32) -> Tensor<S>) -> Self {
        let legs_out = self.legs - 1 + extra;
        assert!(legs_out <= MAX_LEGS);
        let mut cache: HashMap<u32, Tensor<S>> = HashMap::new();
        let mut t = Tensor::new(legs_out);
        for (&k, c) in &self.terms {
            let b = leg(k, i);
            let img = cache.entry(b).or_insert_with(|| f(b));
            debug_assert_eq!(img.legs, extra);
            let idx = unpack(k, self.legs);
            for (&ki, ci) in &img.terms {
                let mut new = Vec::with_capacity(legs_out);
                new.extend_from_slice(&idx[..i]);
                new.extend(unpack(ki, extra));
                new.extend_from_slice(&idx[i + 1..]);
                t.add_term(pack(&new), c.mul_ref(ci));
            }
        }
        t
    }

    /// Contracts leg `i` with a linear functional, removing the leg.
    pub fn contract_leg(&self, i: usize, f: impl Fn(u32) -> S) -> Self {
        assert!(self.legs >= 2);
        let mut t = Tensor::new(self.legs - 1);
        for (&k, c) in &self.terms {
            let s = f(leg(k, i));
            if s.is_zero() {
                continue;
            }
            let mut idx = unpack(k, self.legs);
            idx.remove(i);
            t.add_term(pack(&idx), c.mul_ref(&s));
        }
        t
    }

    /// Legwise split into (first legs, last legs) product terms: used to
    /// read Σ X¹ ⊗ X² ⊗ ... as a list of basis tuples.
    pub fn terms_unpacked(&self) -> Vec<(Vec<u32>, S)> {
        let mut v: Vec<(Vec<u32>, S)> = self.terms.iter().map(|(&k, c)| (unpack(k, self.legs), c.clone())).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}
