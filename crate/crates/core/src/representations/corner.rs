//! The corner e(a)·D^ω(G)·e(a), a twisted group algebra of C_G(a) with
//! cocycle θ_a, and its exact block decomposition.

use super::RepError;
use crate::double::DoubleTensors;
use crate::groups::Elem;
use crate::linalg;
use crate::scalars::Scalar;

pub(crate) struct Corner<S> {
    pub a: Elem,
    /// Elements of C_G(a), identity first.
    pub elems: Vec<Elem>,
    pos: Vec<Option<usize>>,
    /// table[i * k + j] = (l, s) with u_i u_j = s·u_l.
    table: Vec<(usize, S)>,
    theta_exp: Vec<u32>,
    m: u32,
}

/// A primitive central idempotent of the corner with its block data.
pub(crate) struct Block<S> {
    pub idempotent: Vec<S>,
    pub dim: usize,
    /// Primitive idempotent inside the block.
    pub primitive: Vec<S>,
}

impl<S: Scalar> Corner<S> {
    pub fn new(d: &DoubleTensors, a: Elem) -> Self {
        let g = d.group();
        let elems = g.centralizer(a);
        let mut pos = vec![None; g.order()];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = Some(i);
        }
        let k = elems.len();
        let m = d.modulus();
        let mut table = Vec::with_capacity(k * k);
        let mut theta_exp = Vec::with_capacity(k * k);
        for &x in &elems {
            for &y in &elems {
                let e = d.theta(a, x, y);
                theta_exp.push(e);
                table.push((pos[g.mul(x, y)].expect("centralizer is a subgroup"), S::root_of_unity(e as i64, m)));
            }
        }
        Corner { a, elems, pos, table, theta_exp, m }
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn unit(&self) -> Vec<S> {
        self.basis(0)
    }

    pub fn basis(&self, i: usize) -> Vec<S> {
        let mut v = vec![S::zero(); self.size()];
        v[i] = S::one();
        v
    }

    pub fn mul(&self, p: &[S], q: &[S]) -> Vec<S> {
        let k = self.size();
        let mut out = vec![S::zero(); k];
        for (i, x) in p.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in q.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let (l, s) = &self.table[i * k + j];
                out[*l] = out[*l].add_ref(&x.mul_ref(y).mul_ref(s));
            }
        }
        out
    }

    fn scale(v: &[S], s: &S) -> Vec<S> {
        v.iter().map(|x| x.mul_ref(s)).collect()
    }

    fn axpy(acc: &mut [S], s: &S, v: &[S]) {
        for (a, x) in acc.iter_mut().zip(v) {
            if !x.is_zero() {
                *a = a.add_ref(&s.mul_ref(x));
            }
        }
    }

    fn is_zero(v: &[S]) -> bool {
        v.iter().all(|x| super::near(x, &S::zero()))
    }

    /// u_x⁻¹ = θ(x,x⁻¹)⁻¹ u_{x⁻¹}.
    fn inverse_basis(&self, i: usize, inv_i: usize) -> Vec<S> {
        let k = self.size();
        let e = self.theta_exp[i * k + inv_i] as i64;
        Self::scale(&self.basis(inv_i), &S::root_of_unity(-e, self.m))
    }

    /// Σ_y u_y b u_y⁻¹: central, acting on a simple of dimension d as (|C|/d)·χ(b).
    fn reynolds(&self, b: &[S], inv: &[usize]) -> Vec<S> {
        let mut acc = vec![S::zero(); self.size()];
        for y in 0..self.size() {
            let t = self.mul(&self.mul(&self.basis(y), b), &self.inverse_basis(y, inv[y]));
            Self::axpy(&mut acc, &S::one(), &t);
        }
        acc
    }

    /// Spectral projectors of u_x: u_x^o = ζ_m^e, so for each λ with λ^o = ζ_m^e,
    /// P_λ = (1/o) Σ_k λ^{-k} u_x^k.
    fn spectral(&self, i: usize, order: usize) -> Vec<(i64, u32, Vec<S>)> {
        let k = self.size();
        let mut powers = vec![self.unit()];
        let mut exp = 0i64;
        let mut cur = 0usize;
        for _ in 1..=order {
            exp += self.theta_exp[cur * k + i] as i64;
            cur = self.table[cur * k + i].0;
            if powers.len() < order {
                powers.push(self.mul(powers.last().unwrap(), &self.basis(i)));
            }
        }
        debug_assert_eq!(cur, 0);
        let n = self.m * order as u32;
        let inv_o = S::from_ratio(1, order as i64);
        (0..order as i64)
            .map(|j| {
                let le = exp + self.m as i64 * j;
                let mut p = vec![S::zero(); k];
                for (t, pw) in powers.iter().enumerate() {
                    Self::axpy(&mut p, &S::root_of_unity(-le * t as i64, n), pw);
                }
                (le, n, Self::scale(&p, &inv_o))
            })
            .collect()
    }

    /// |C|·[u_1](v): the regular trace.
    fn reg_trace(&self, v: &[S]) -> S {
        v[0].mul_ref(&S::from_ratio(self.size() as i64, 1))
    }

    fn center_dim(&self) -> usize {
        let k = self.size();
        let mut rows = Vec::new();
        for y in 0..k {
            let by = self.basis(y);
            for r in 0..k {
                rows.push(
                    (0..k)
                        .map(|c| {
                            let bc = self.basis(c);
                            self.mul(&bc, &by)[r].sub_ref(&self.mul(&by, &bc)[r])
                        })
                        .collect::<Vec<S>>(),
                );
            }
        }
        k - linalg::rank(&rows)
    }

    /// Splits the unit into primitive central idempotents.
    pub fn blocks(&self, group_order: impl Fn(Elem) -> usize, inv: impl Fn(Elem) -> Elem) -> Result<Vec<Block<S>>, RepError> {
        let k = self.size();
        let inv_idx: Vec<usize> = self.elems.iter().map(|&x| self.pos[inv(x)].unwrap()).collect();
        let target = self.center_dim();
        let dmax = (1..=k).take_while(|d| d * d <= k).last().unwrap_or(1);
        let mut cands: Vec<(i64, i64)> = Vec::new();
        for d in 1..=dmax {
            for mm in 0..=d {
                let (p, q) = reduce(k as i64 * mm as i64, d as i64);
                if !cands.contains(&(p, q)) {
                    cands.push((p, q));
                }
            }
        }
        let mut idems = vec![self.unit()];
        let mut spectra = Vec::new();
        for i in 0..k {
            spectra.push(self.spectral(i, group_order(self.elems[i])));
        }
        'outer: for sp in &spectra {
            for (_, _, p) in sp {
                if idems.len() == target {
                    break 'outer;
                }
                let c = self.reynolds(p, &inv_idx);
                let mut next = Vec::new();
                for e in &idems {
                    let ce = self.mul(&c, e);
                    let mut pieces = Vec::new();
                    for (qi, &(p0, q0)) in cands.iter().enumerate() {
                        let mut piece = e.clone();
                        for (qj, &(p1, q1)) in cands.iter().enumerate() {
                            if qi == qj {
                                continue;
                            }
                            let v1 = S::from_ratio(p1, q1);
                            let denom = S::from_ratio(p0, q0).sub_ref(&v1).inv().expect("distinct candidates");
                            let mut f: Vec<S> = ce.iter().zip(e).map(|(x, y)| x.sub_ref(&y.mul_ref(&v1))).collect();
                            f = Self::scale(&f, &denom);
                            piece = self.mul(&piece, &f);
                        }
                        if !Self::is_zero(&piece) {
                            pieces.push(piece);
                        }
                    }
                    let mut sum = vec![S::zero(); k];
                    for p in &pieces {
                        Self::axpy(&mut sum, &S::one(), p);
                    }
                    if !sum.iter().zip(e).all(|(x, y)| super::near(x, y)) {
                        return Err(RepError::Split(format!("spectral pieces do not sum to the block in corner {}", self.a)));
                    }
                    next.extend(pieces);
                }
                idems = next;
            }
        }
        if idems.len() != target {
            return Err(RepError::Split(format!("found {} blocks, center has dimension {target}", idems.len())));
        }
        let mut blocks = Vec::new();
        for e in idems {
            if !self.mul(&e, &e).iter().zip(&e).all(|(x, y)| super::near(x, y)) {
                return Err(RepError::Split("block element is not idempotent".into()));
            }
            let dsq = self.reg_trace(&e).to_complex().re.round() as usize;
            let dim = (1..=dsq).find(|d| d * d == dsq).ok_or_else(|| RepError::Split(format!("block dimension {dsq} is not a square")))?;
            let primitive = if dim == 1 {
                e.clone()
            } else {
                self.primitive_in(&e, dim, &spectra)?
            };
            blocks.push(Block { idempotent: e, dim, primitive });
        }
        Ok(blocks)
    }

    /// e·P_λ(x) with multiplicity one.
    fn primitive_in(&self, e: &[S], dim: usize, spectra: &[Vec<(i64, u32, Vec<S>)>]) -> Result<Vec<S>, RepError> {
        for sp in spectra {
            for (_, _, p) in sp {
                let f = self.mul(e, p);
                let mult = self.reg_trace(&f).to_complex().re / dim as f64;
                if (mult - 1.0).abs() < 1e-6 {
                    return Ok(f);
                }
            }
        }
        Err(RepError::Split(format!("no rank-one spectral idempotent in a block of dimension {dim}")))
    }
}

fn reduce(p: i64, q: i64) -> (i64, i64) {
    let g = num_integer::gcd(p, q).max(1);
    (p / g, q / g)
}
