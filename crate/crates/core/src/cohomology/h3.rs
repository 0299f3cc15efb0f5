use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;

use super::modular::{factorize, inv_mod, LocalSnf};
use super::{Cochain2, Cochain3, CohomologyError};
use crate::groups::Group;

const MAX_H3_ORDER: usize = 8;
const MAX_COBOUNDARY_ORDER: usize = 16;

/// Column index of a normalized k-cochain coordinate (all arguments ≠ 1).
fn coord(n: usize, args: &[usize]) -> Option<usize> {
    let mut idx = 0;
    for &a in args {
        if a == 0 {
            return None;
        }
        idx = idx * (n - 1) + (a - 1);
    }
    Some(idx)
}

fn nonidentity_tuples(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = (n - 1).pow(k as u32);
    (0..total).map(move |mut i| {
        let mut t = vec![0; k];
        for slot in t.iter_mut().rev() {
            *slot = i % (n - 1) + 1;
            i /= n - 1;
        }
        t
    })
}

/// Matrix of δ on normalized 2-cochains (rows: 3-tuples) mod `m`.
fn delta2(g: &Group, m: u64) -> Vec<Vec<u64>> {
    let n = g.order();
    let cols = (n - 1).pow(2);
    nonidentity_tuples(n, 3)
        .map(|t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let mut row = vec![0u64; cols];
            let mut add = |args: [usize; 2], s: i64| {
                if let Some(c) = coord(n, &args) {
                    row[c] = (row[c] as i64 + s).rem_euclid(m as i64) as u64;
                }
            };
            add([y, z], 1);
            add([g.mul(x, y), z], -1);
            add([x, g.mul(y, z)], 1);
            add([x, y], -1);
            row
        })
        .collect()
}

/// Matrix of δ on normalized 3-cochains (rows: 4-tuples) mod `m`.
fn delta3(g: &Group, m: u64) -> Vec<Vec<u64>> {
    let n = g.order();
    let cols = (n - 1).pow(3);
    nonidentity_tuples(n, 4)
        .map(|t| {
            let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
            let mut row = vec![0u64; cols];
            let mut add = |args: [usize; 3], s: i64| {
                if let Some(i) = coord(n, &args) {
                    row[i] = (row[i] as i64 + s).rem_euclid(m as i64) as u64;
                }
            };
            add([b, c, d], 1);
            add([g.mul(a, b), c, d], -1);
            add([a, g.mul(b, c), d], 1);
            add([a, b, g.mul(c, d)], -1);
            add([a, b, c], 1);
            row
        })
        .collect()
}

type SnfKey = (Group, u8, u64, u32);

fn snf(g: &Group, degree: u8, p: u64, k: u32) -> Arc<LocalSnf> {
    static CACHE: OnceLock<Mutex<HashMap<SnfKey, Arc<LocalSnf>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (g.clone(), degree, p, k);
    if let Some(s) = cache.lock().unwrap().get(&key) {
        return s.clone();
    }
    let m = p.pow(k);
    let n = g.order();
    let s = Arc::new(match degree {
        2 => LocalSnf::compute(delta2(g, m), (n - 1).pow(2), p, k, true),
        _ => LocalSnf::compute(delta3(g, m), (n - 1).pow(3), p, k, false),
    });
    cache.lock().unwrap().insert(key, s.clone());
    s
}

fn vp(x: u64, p: u64) -> u32 {
    super::modular::valuation(x, p, 64)
}

/// Normalized coordinates of a 3-cochain, as exponents.
fn coords3(w: &Cochain3) -> Vec<u64> {
    let n = w.group().order();
    nonidentity_tuples(n, 3).map(|t| w.exp(t[0], t[1], t[2]) as u64).collect()
}

fn crt(residues: &[(u64, u64)]) -> (u64, u64) {
    residues.iter().fold((0, 1), |(r, m), &(ri, mi)| {
        let mm = m * mi;
        let t = ((ri + mi - r % mi) % mi) * inv_mod(m % mi, mi).unwrap_or(0) % mi;
        ((r + m * t) % mm, mm)
    })
}

#[derive(Clone, Debug)]
struct PrimePart {
    p: u64,
    /// (pivot index, valuation), valuations descending.
    elems: Vec<(usize, u32)>,
}

/// H³(G, C*) with chosen generators and a decomposition map.
#[derive(Clone, Debug)]
pub struct H3 {
    group: Group,
    /// Invariant factors d_1 | d_2 | ... (ascending).
    pub invariants: Vec<u32>,
    pub generators: Vec<Cochain3>,
    parts: Vec<PrimePart>,
}

impl H3 {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn order(&self) -> u64 {
        self.invariants.iter().map(|&d| d as u64).product()
    }

    fn base_k(&self, p: u64) -> u32 {
        vp(self.group.order() as u64, p) + 1
    }

    /// Working precision per prime for cochains of modulus m.
    fn precisions(&self, m: u64) -> Vec<u32> {
        let n = self.group.order() as u64;
        self.parts.iter().map(|part| vp(m, part.p).max(self.base_k(part.p)) + vp(n, part.p)).collect()
    }

    /// Torsion coordinates of w in the SNF basis at the given precisions.
    fn torsion_coords(&self, w: &Cochain3, ks: &[u32]) -> Result<Vec<u64>, CohomologyError> {
        let m = w.modulus() as u64;
        let x = coords3(w);
        let mut out = Vec::new();
        for (part, &k) in self.parts.iter().zip(ks) {
            let p = part.p;
            let a = vp(m, p);
            let pk = p.pow(k);
            let rest = m / p.pow(a);
            let scale = if a == 0 { 0 } else { inv_mod(rest % p.pow(a), p.pow(a)).unwrap() * p.pow(k - a) % pk };
            let s = snf(&self.group, 3, p, k);
            let xs: Vec<u64> = x.iter().map(|&e| e % pk * scale % pk).collect();
            let y = s.mul_qinv(&xs);
            for (pi, &(v, _)) in s.pivots.iter().enumerate() {
                if v == 0 {
                    if y[pi] != 0 {
                        return Err(CohomologyError::NotCocycle);
                    }
                    continue;
                }
                let div = p.pow(k - v);
                if y[pi] % div != 0 {
                    return Err(CohomologyError::NotCocycle);
                }
                out.push(y[pi] / div % p.pow(v));
            }
        }
        Ok(out)
    }

    fn table(&self, ks: &[u32]) -> Result<Arc<HashMap<Vec<u64>, Vec<u32>>>, CohomologyError> {
        type Key = (Group, Vec<u32>);
        static TABLES: OnceLock<Mutex<HashMap<Key, Arc<HashMap<Vec<u64>, Vec<u32>>>>>> = OnceLock::new();
        let cache = TABLES.get_or_init(Default::default);
        let key = (self.group.clone(), ks.to_vec());
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let mut t = HashMap::new();
        for c in self.all_classes() {
            t.insert(self.torsion_coords(&self.element(&c), ks)?, c);
        }
        if t.len() as u64 != self.order() {
            return Err(CohomologyError::Shape { got: t.len(), expected: self.order() as usize });
        }
        let t = Arc::new(t);
        cache.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }

    /// Coordinates of the class of `w` in Z/d_1 ⊕ ... ⊕ Z/d_r.
    pub fn decompose(&self, w: &Cochain3) -> Result<Vec<u32>, CohomologyError> {
        if w.group() != &self.group {
            return Err(CohomologyError::GroupMismatch);
        }
        let gen_m = self.generators.iter().fold(1u64, |acc, g| acc.lcm(&(g.modulus() as u64)));
        let ks = self.precisions((w.modulus() as u64).lcm(&gen_m));
        let coords = self.torsion_coords(w, &ks)?;
        self.table(&ks)?.get(&coords).cloned().ok_or(CohomologyError::NotCocycle)
    }

    /// Cocycle representing Σ c_j · generator_j.
    pub fn element(&self, coeffs: &[u32]) -> Cochain3 {
        let mut w = Cochain3::trivial(&self.group, 1);
        for (g, &c) in self.generators.iter().zip(coeffs) {
            w = w.mul(&g.pow(c as i64));
        }
        w
    }

    /// Every class, as coefficient vectors in lexicographic order.
    pub fn all_classes(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for &d in &self.invariants {
            out = out.into_iter().flat_map(|v: Vec<u32>| (0..d).map(move |c| [v.clone(), vec![c]].concat())).collect();
        }
        out
    }

    pub fn class_order_of(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().zip(&self.invariants).fold(1, |acc, (&c, &d)| acc.lcm(&(d / d.gcd(&c))))
    }
}

/// H³(G, C*) via Smith normal form of δ on normalized 3-cochains over Z/p^k.
pub fn h3_group(g: &Group) -> Result<Arc<H3>, CohomologyError> {
    static CACHE: OnceLock<Mutex<HashMap<Group, Arc<H3>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.lock().unwrap().get(g) {
        return Ok(h.clone());
    }
    if g.order() > MAX_H3_ORDER {
        return Err(CohomologyError::TooLarge(g.order()));
    }
    let h = Arc::new(compute_h3(g));
    cache.lock().unwrap().insert(g.clone(), h.clone());
    Ok(h)
}

fn compute_h3(g: &Group) -> H3 {
    let n = g.order();
    if n == 1 {
        return H3 { group: g.clone(), invariants: vec![], generators: vec![], parts: vec![] };
    }
    let tuples: Vec<Vec<usize>> = nonidentity_tuples(n, 3).collect();
    let mut parts = Vec::new();
    for (p, _) in factorize(n as u64) {
        let k = vp(n as u64, p) + 1;
        let s = snf(g, 3, p, k);
        let mut elems: Vec<(usize, u32)> = s.pivots.iter().enumerate().filter(|(_, &(v, _))| v > 0).map(|(i, &(v, _))| (i, v)).collect();
        elems.sort_by_key(|&(i, v)| (std::cmp::Reverse(v), i));
        parts.push(PrimePart { p, elems });
    }
    let len = parts.iter().map(|p| p.elems.len()).max().unwrap_or(0);
    let mut invariants = vec![1u32; len];
    let mut generators: Vec<Cochain3> = (0..len).map(|_| Cochain3::trivial(g, 1)).collect();
    for part in &parts {
        let s = snf(g, 3, part.p, vp(n as u64, part.p) + 1);
        for (j, &(pi, v)) in part.elems.iter().enumerate() {
            let slot = len - 1 - j;
            let pv = part.p.pow(v);
            invariants[slot] *= pv as u32;
            let mut e = vec![0i64; n * n * n];
            for (row, t) in tuples.iter().enumerate() {
                e[(t[0] * n + t[1]) * n + t[2]] = (s.q[row][pi] % pv) as i64;
            }
            let gen = Cochain3::from_exponents(g, pv as u32, e).expect("normalized");
            generators[slot] = generators[slot].mul(&gen);
        }
    }
    H3 { group: g.clone(), invariants, generators, parts }
}

/// A 2-cochain b with δb = w, if one exists. Exact: solves
/// D₂·B ≡ |G|·w (mod M·|G|) over each prime power, since the elementary
/// divisors of D₂ divide |G|.
pub fn is_coboundary(w: &Cochain3) -> Result<Option<Cochain2>, CohomologyError> {
    let g = w.group();
    let n = g.order();
    if n > MAX_COBOUNDARY_ORDER {
        return Err(CohomologyError::TooLarge(n));
    }
    if n == 1 || w.is_trivial_table() {
        return Ok(Some(Cochain2::trivial(g, 1)));
    }
    let big = w.modulus() as u64 * n as u64;
    let x = coords3(w);
    let mut per_prime: Vec<(Vec<u64>, u64)> = Vec::new();
    for (p, k) in factorize(big) {
        let pk = p.pow(k);
        let s = snf(g, 2, p, k);
        let rhs: Vec<u64> = x.iter().map(|&e| e * n as u64 % pk).collect();
        match s.solve(rhs) {
            Some(b) => per_prime.push((b, pk)),
            None => return Ok(None),
        }
    }
    let cols = (n - 1).pow(2);
    let mut e = vec![0i64; n * n];
    for c in 0..cols {
        let (v, _) = crt(&per_prime.iter().map(|(b, pk)| (b[c], *pk)).collect::<Vec<_>>());
        let (a, b) = (c / (n - 1) + 1, c % (n - 1) + 1);
        e[a * n + b] = v as i64;
    }
    let b = Cochain2::from_exponents(g, big as u32, e)?.reduced();
    if !Cochain3::coboundary(&b).same_values(w) {
        return Ok(None);
    }
    Ok(Some(b))
}

pub fn cohomologous(a: &Cochain3, b: &Cochain3) -> Result<bool, CohomologyError> {
    if a.group() != b.group() {
        return Err(CohomologyError::GroupMismatch);
    }
    Ok(is_coboundary(&a.mul(&b.inv()))?.is_some())
}

/// Order of the class of `w` in H³, read off the decomposition.
pub fn class_order(w: &Cochain3) -> Result<u32, CohomologyError> {
    let h = h3_group(w.group())?;
    let c = h.decompose(w)?;
    Ok(h.class_order_of(&c))
}

/// Smallest k ≥ 1 with w^k a coboundary.
pub fn class_order_by_search(w: &Cochain3) -> Result<u32, CohomologyError> {
    let bound = w.group().order() as u32 * w.modulus();
    for k in 1..=bound {
        if is_coboundary(&w.pow(k as i64))?.is_some() {
            return Ok(k);
        }
    }
    Err(CohomologyError::NotCocycle)
}
