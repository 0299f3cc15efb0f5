use serde::Serialize;

use super::algebra::QuasiHopf;
use super::tensor::{pack, Tensor};
use super::verify::Report;
use super::{gauge_twist, unit_twist, DoubleError, DoubleTensors};
use crate::cohomology::{extension_omega, Cochain2, Cochain3};
use crate::groups::{Elem, ExtensionData, Group, GroupHom};
use crate::scalars::Scalar;

const TOL: f64 = 1e-8;

/// Linear map given by the images of basis elements.
#[derive(Clone, Debug)]
pub struct LinearMap<S> {
    pub images: Vec<Tensor<S>>,
    pub target_dim: usize,
}

impl<S: Scalar> LinearMap<S> {
    pub fn identity(dim: usize) -> Self {
        let images = (0..dim as u32).map(|b| Tensor::from_terms(1, [(vec![b], S::one())])).collect();
        LinearMap { images, target_dim: dim }
    }

    pub fn diagonal(coeffs: Vec<S>) -> Self {
        let dim = coeffs.len();
        let images = coeffs.into_iter().enumerate().map(|(b, c)| Tensor::from_terms(1, [(vec![b as u32], c)])).collect();
        LinearMap { images, target_dim: dim }
    }

    pub fn source_dim(&self) -> usize {
        self.images.len()
    }

    /// Applies the map on every leg.
    pub fn apply(&self, t: &Tensor<S>) -> Tensor<S> {
        (0..t.legs()).fold(t.clone(), |acc, i| {
            acc.map_leg(i, |b| self.images[b as usize].iter().map(|(k, c)| (k as u32, c.clone())).collect())
        })
    }

    /// Matrix with one column per source basis element.
    pub fn matrix(&self) -> Vec<Vec<S>> {
        let cols: Vec<Vec<S>> = self.images.iter().map(|t| t.to_dense(self.target_dim)).collect();
        (0..self.target_dim).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MapLevel {
    Algebra,
    Bialgebra,
    QuasiBialgebra,
    QuasiTriangular,
    /// Also transports α, β and S.
    QuasiHopf,
}

fn eq<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>, w: &[u32]) -> Option<Vec<u32>> {
    (!a.approx_eq(b, TOL)).then(|| w.to_vec())
}

/// Checks that `f` is an isomorphism `q1 → q2` of the structure up to `level`.
pub fn check_map<S: Scalar>(f: &LinearMap<S>, q1: &QuasiHopf<S>, q2: &QuasiHopf<S>, level: MapLevel) -> Report {
    let mut r = Report::default();
    if f.source_dim() != q1.dim || f.target_dim != q2.dim {
        r.push("dimensions", Some(vec![f.source_dim() as u32, f.target_dim as u32]));
        return r;
    }
    let rank = crate::linalg::rank(&f.matrix());
    r.push("bijective", (rank != q2.dim).then(|| vec![rank as u32]));
    let d = 0..q1.dim as u32;
    let pairs = || d.clone().flat_map(move |a| (0..q1.dim as u32).map(move |b| (a, b)));
    r.push(
        "multiplicative",
        pairs()
            .find_map(|(a, b)| {
                let lhs = f.apply(&q1.tmul(&q1.basis(a), &q1.basis(b)));
                let rhs = q2.tmul(&f.images[a as usize], &f.images[b as usize]);
                eq(&lhs, &rhs, &[a, b])
            }),
    );
    r.push("unit", eq(&f.apply(&q1.unit), &q2.unit, &[]));
    if level >= MapLevel::Bialgebra {
        r.push(
            "comultiplicative",
            d.clone().find_map(|b| eq(&f.apply(&q1.comult[b as usize]), &q2.delta(&f.images[b as usize]), &[b])),
        );
        r.push(
            "counit",
            d.clone().find_map(|b| {
                let (x, y) = (q2.eps(&f.images[b as usize]), q1.counit[b as usize].clone());
                (!x.close_to(&y, TOL) || (S::EXACT && x != y)).then(|| vec![b])
            }),
        );
    }
    if level >= MapLevel::QuasiBialgebra {
        r.push("associator", f.apply(&q1.phi).diff_witness(&q2.phi, TOL));
    }
    if level >= MapLevel::QuasiTriangular {
        r.push("r_matrix", f.apply(&q1.r).diff_witness(&q2.r, TOL));
    }
    if level >= MapLevel::QuasiHopf {
        r.push("alpha", eq(&f.apply(&q1.alpha), &q2.alpha, &[]));
        r.push("beta", eq(&f.apply(&q1.beta), &q2.beta, &[]));
        r.push("antipode", d.clone().find_map(|b| eq(&f.apply(&q1.antipode[b as usize]), &q2.s(&f.images[b as usize]), &[b])));
    }
    r
}

/// φ: e(g)⊗x ↦ f_ḡ(x̄)⁻¹ e(g)⊗x from D^ω(G) to D^{ωη′}(G), for N of index 2,
/// with f_ḡ(x̄) = i when ḡ, x̄ ≠ 1. Returns the map and ωη′.
pub fn index_two_map<S: Scalar>(g: &Group, normal: &[Elem], w: &Cochain3) -> Result<(LinearMap<S>, Cochain3), DoubleError> {
    if !g.is_subgroup(normal) || normal.len() * 2 != g.order() {
        return Err(DoubleError::Invalid("subgroup must have index 2".into()));
    }
    if w.group() != g {
        return Err(DoubleError::Invalid("cocycle lives on another group".into()));
    }
    let out = |x: Elem| !normal.contains(&x);
    let eta = Cochain3::from_fn(g, 2, |a, b, c| (out(a) && out(b) && out(c)) as i64)?;
    let target = w.mul(&eta);
    let n = g.order();
    let coeffs = (0..n * n).map(|b| S::root_of_unity(-((out(b / n) && out(b % n)) as i64), 4)).collect();
    Ok((LinearMap::diagonal(coeffs), target))
}

/// Data realizing D^{ωζ_E}(E) ≅ D^{ζ_G}(G)_{F,u} for a trivial action.
#[derive(Clone, Debug)]
pub struct ExtensionMaps<S> {
    pub e: Group,
    pub g: Group,
    pub source: DoubleTensors,
    pub untwisted_target: DoubleTensors,
    pub f: Tensor<S>,
    pub f_inv: Tensor<S>,
    pub u: Tensor<S>,
    /// D^{ζ_G}(G) gauge-twisted by F, then unit-twisted by u.
    pub target: QuasiHopf<S>,
    pub phi: LinearMap<S>,
}

pub fn extension_maps<S: Scalar>(ext: &ExtensionData, zeta: &Cochain3) -> Result<ExtensionMaps<S>, DoubleError> {
    if !ext.is_trivial_action() {
        return Err(DoubleError::Invalid("the fiber must be a trivial module".into()));
    }
    let eps = ext.eps.clone().ok_or_else(|| DoubleError::Invalid("missing extension cocycle".into()))?;
    if zeta.group() != &ext.base {
        return Err(DoubleError::Invalid("zeta must live on the base group".into()));
    }
    let base = &ext.base;
    let ng = base.order();
    let a = &ext.fiber;
    let na = a.order();
    let dual = ext.dual()?;
    let d = &dual.group;
    let e = ext.semidirect()?;
    let g = ext.central_extension()?;
    let proj = |grp: &Group| GroupHom::new(grp.clone(), base.clone(), grp.elements().map(|x| x % ng).collect());
    let zeta_e = zeta.inflate(&proj(&e)?);
    let zeta_g = zeta.inflate(&proj(&g)?);
    let identity: Vec<Elem> = a.elements().collect();
    let omega = extension_omega(ext, &identity)?;
    let source = DoubleTensors::build(&omega.mul(&zeta_e))?;
    let untwisted_target = DoubleTensors::build(&zeta_g)?;
    let q = untwisted_target.quasi_hopf::<S>();

    let n = g.order() as u32;
    let el = |x: Elem, mu: Elem| (x + ng * mu) as u32;
    let basis = |gg: u32, xx: u32| gg * n + xx;
    let mut f = Tensor::new(2);
    let mut f_inv = Tensor::new(2);
    let mut u = Tensor::new(1);
    for p in base.elements() {
        for mu in d.elements() {
            u.add_term(basis(el(p, mu), el(0, mu)) as u64, S::one());
            for q_ in base.elements() {
                for nu in d.elements() {
                    let right = basis(el(q_, nu), 0);
                    f.add_term(pack(&[basis(el(p, mu), el(0, d.inv(nu))), right]), S::one());
                    f_inv.add_term(pack(&[basis(el(p, mu), el(0, nu)), right]), S::one());
                }
            }
        }
    }
    let target = unit_twist(&gauge_twist(&q, &f, &f_inv)?, &u)?;

    let m = dual.m;
    let chi = |c: Elem, x: Elem| dual.values[c][x] as i64;
    let scale = S::from_ratio(1, na as i64);
    let mut images = Vec::with_capacity((n * n) as usize);
    for src in 0..(n * n) as usize {
        let (ha, kb) = (src / n as usize, src % n as usize);
        let (h, aa, k, b) = (ha % ng, ha / ng, kb % ng, kb / ng);
        let kinv_h_k = base.conj(base.inv(k), h);
        let pre = chi(eps[h][k], b) - chi(eps[k][kinv_h_k], b);
        let mut t = Tensor::new(1);
        for c in d.elements() {
            for psi in d.elements() {
                let ex = pre + chi(c, b) - chi(psi, aa);
                let coeff = S::root_of_unity(ex, m).mul_ref(&scale);
                t.add_term(basis(el(h, c), el(k, psi)) as u64, coeff);
            }
        }
        images.push(t);
    }
    let phi = LinearMap { images, target_dim: (n * n) as usize };
    Ok(ExtensionMaps { e, g, source, untwisted_target, f, f_inv, u, target, phi })
}

/// Gauge data for D^{ω·δb}(G) ≅ D^ω(G)_F with F = Σ b(g,h)⁻¹ e(g)⊗e(h):
/// returns (F, F⁻¹, φ) where φ: e(g)⊗x ↦ b(x,x⁻¹gx)/b(g,x) e(g)⊗x.
pub fn coboundary_gauge<S: Scalar>(b: &Cochain2) -> (Tensor<S>, Tensor<S>, LinearMap<S>) {
    coboundary_gauge_signed(b, -1, -1)
}

pub(crate) fn coboundary_gauge_signed<S: Scalar>(b: &Cochain2, fs: i64, cs: i64) -> (Tensor<S>, Tensor<S>, LinearMap<S>) {
    let g = b.group();
    let n = g.order() as u32;
    let m = b.modulus();
    let be = |x: Elem, y: Elem| b.exp(x, y) as i64;
    let mut f = Tensor::new(2);
    let mut f_inv = Tensor::new(2);
    for x in g.elements() {
        for y in g.elements() {
            let key = pack(&[x as u32 * n, y as u32 * n]);
            f.add_term(key, S::root_of_unity(fs * be(x, y), m));
            f_inv.add_term(key, S::root_of_unity(-fs * be(x, y), m));
        }
    }
    let coeffs = (0..(n * n) as usize)
        .map(|i| {
            let (a, x) = (i / n as usize, i % n as usize);
            S::root_of_unity(cs * (be(a, x) - be(x, g.conj(g.inv(x), a))), m)
        })
        .collect();
    (f, f_inv, LinearMap::diagonal(coeffs))
}
