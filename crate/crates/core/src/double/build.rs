use super::algebra::QuasiHopf;
use super::tensor::Tensor;
use super::DoubleError;
use crate::cohomology::Cochain3;
use crate::groups::{Elem, Group};
use crate::scalars::Scalar;

/// Structure constants of D^ω(G) on the basis e(g)⊗x (index g·|G| + x),
/// kept as root-of-unity exponents mod the cocycle's modulus.
#[derive(Clone, Debug)]
pub struct DoubleTensors {
    group: Group,
    omega: Cochain3,
    m: u32,
    theta: Vec<u32>,
    gamma: Vec<u32>,
}

impl DoubleTensors {
    pub fn build(omega: &Cochain3) -> Result<Self, DoubleError> {
        omega.require_cocycle()?;
        let g = omega.group().clone();
        let n = g.order();
        let m = omega.modulus() as i64;
        let w = |a: Elem, b: Elem, c: Elem| omega.exp(a, b, c) as i64;
        let mut theta = vec![0u32; n * n * n];
        let mut gamma = vec![0u32; n * n * n];
        for a in g.elements() {
            let ai = g.inv(a);
            for x in g.elements() {
                for y in g.elements() {
                    let xy = g.mul(x, y);
                    // θ_a(x,y) = ω(a,x,y) ω(x,y,(xy)⁻¹a(xy)) / ω(x,x⁻¹ax,y)
                    let t = w(a, x, y) + w(x, y, g.conj(g.inv(xy), a)) - w(x, g.conj(g.inv(x), a), y);
                    // γ_a(x,y) = ω(x,y,a) ω(a,a⁻¹xa,a⁻¹ya) / ω(x,a,a⁻¹ya)
                    let c = w(x, y, a) + w(a, g.conj(ai, x), g.conj(ai, y)) - w(x, a, g.conj(ai, y));
                    theta[(a * n + x) * n + y] = t.rem_euclid(m) as u32;
                    gamma[(a * n + x) * n + y] = c.rem_euclid(m) as u32;
                }
            }
        }
        Ok(DoubleTensors { group: g, omega: omega.clone(), m: m as u32, theta, gamma })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn omega(&self) -> &Cochain3 {
        &self.omega
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.group.order().pow(2)
    }

    #[inline]
    pub fn basis(&self, g: Elem, x: Elem) -> u32 {
        (g * self.group.order() + x) as u32
    }

    #[inline]
    pub fn split(&self, b: u32) -> (Elem, Elem) {
        let n = self.group.order();
        (b as usize / n, b as usize % n)
    }

    /// Exponent of θ_g(x,y).
    pub fn theta(&self, g: Elem, x: Elem, y: Elem) -> u32 {
        let n = self.group.order();
        self.theta[(g * n + x) * n + y]
    }

    /// Exponent of γ_x(h,k).
    pub fn gamma(&self, x: Elem, h: Elem, k: Elem) -> u32 {
        let n = self.group.order();
        self.gamma[(x * n + h) * n + k]
    }

    fn neg(&self, e: u32) -> i64 {
        -(e as i64)
    }

    /// e(g)⊗x · e(h)⊗y = θ_g(x,y) δ_{g,xhx⁻¹} e(g)⊗xy.
    pub fn mult(&self, a: u32, b: u32) -> Option<(u32, u32)> {
        let g = &self.group;
        let ((ga, x), (h, y)) = (self.split(a), self.split(b));
        (ga == g.conj(x, h)).then(|| (self.basis(ga, g.mul(x, y)), self.theta(ga, x, y)))
    }

    /// Δ(e(g)⊗x) = Σ_{hk=g} γ_x(h,k) e(h)⊗x ⊗ e(k)⊗x.
    pub fn comult(&self, b: u32) -> Vec<(u32, u32, u32)> {
        let g = &self.group;
        let (d, x) = self.split(b);
        g.elements()
            .map(|h| {
                let k = g.mul(g.inv(h), d);
                (self.basis(h, x), self.basis(k, x), self.gamma(x, h, k))
            })
            .collect()
    }

    /// S(e(g)⊗x) = θ_{g⁻¹}(x,x⁻¹)⁻¹ γ_x(g,g⁻¹)⁻¹ e(x⁻¹g⁻¹x)⊗x⁻¹.
    pub fn antipode(&self, b: u32) -> (u32, i64) {
        let g = &self.group;
        let (d, x) = self.split(b);
        let (di, xi) = (g.inv(d), g.inv(x));
        let e = self.neg(self.theta(di, x, xi)) + self.neg(self.gamma(x, d, di));
        (self.basis(g.conj(xi, di), xi), e)
    }

    pub fn quasi_hopf<S: Scalar>(&self) -> QuasiHopf<S> {
        let g = &self.group;
        let n = g.order();
        let d = n * n;
        let m = self.m;
        let root = |e: i64| S::root_of_unity(e, m);
        let mut mult = Vec::with_capacity(d * d);
        for a in 0..d as u32 {
            for b in 0..d as u32 {
                mult.push(self.mult(a, b).map(|(p, e)| (p, root(e as i64))));
            }
        }
        let lkey = (0..d as u32).map(|b| self.split(b).0 as u32).collect();
        let rkey = (0..d as u32)
            .map(|b| {
                let (h, x) = self.split(b);
                g.conj(g.inv(x), h) as u32
            })
            .collect();
        let unit = Tensor::from_terms(1, g.elements().map(|h| (vec![self.basis(h, 0)], S::one())));
        let counit = (0..d as u32).map(|b| if self.split(b).0 == 0 { S::one() } else { S::zero() }).collect();
        let comult = (0..d as u32)
            .map(|b| Tensor::from_terms(2, self.comult(b).into_iter().map(|(l, r, e)| (vec![l, r], root(e as i64)))))
            .collect();
        let mut phi = Tensor::new(3);
        let mut phi_inv = Tensor::new(3);
        for a in g.elements() {
            for b in g.elements() {
                for c in g.elements() {
                    let e = self.omega.exp(a, b, c) as i64;
                    let key = super::tensor::pack(&[self.basis(a, 0), self.basis(b, 0), self.basis(c, 0)]);
                    phi.add_term(key, root(-e));
                    phi_inv.add_term(key, root(e));
                }
            }
        }
        let r = Tensor::from_terms(2, g.elements().flat_map(|a| g.elements().map(move |h| (a, h))).map(|(a, h)| (vec![self.basis(a, 0), self.basis(h, a)], S::one())));
        let alpha = unit.clone();
        let beta = Tensor::from_terms(1, g.elements().map(|a| (vec![self.basis(a, 0)], root(self.omega.exp(a, g.inv(a), a) as i64))));
        let antipode = (0..d as u32)
            .map(|b| {
                let (t, e) = self.antipode(b);
                Tensor::from_terms(1, [(vec![t], root(e))])
            })
            .collect();
        QuasiHopf { dim: d, mult, lkey, rkey, unit, counit, comult, phi, phi_inv, r, alpha, beta, antipode }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, quaternion};

    #[test]
    fn theta_on_z2() {
        let w = Cochain3::from_fn(&cyclic(2), 2, |a, b, c| (a * b * c) as i64).unwrap();
        let d = DoubleTensors::build(&w).unwrap();
        assert_eq!(d.theta(1, 1, 1), 1);
        assert_eq!(d.theta(0, 1, 1), 0);
    }

    #[test]
    fn trivial_cocycle_gives_untwisted_double() {
        let d = DoubleTensors::build(&Cochain3::trivial(&quaternion(), 1)).unwrap();
        let n = 8;
        assert!((0..n).all(|a| (0..n).all(|x| (0..n).all(|y| d.theta(a, x, y) == 0 && d.gamma(a, x, y) == 0))));
    }

    #[test]
    fn q8_multiplication_support_is_the_conjugation_constraint() {
        let g = quaternion();
        let h = crate::cohomology::h3_group(&g).unwrap();
        let d = DoubleTensors::build(&h.element(&[1])).unwrap();
        let mut nonzero = 0;
        for a in 0..64 {
            for b in 0..64 {
                let ((x, y), (z, _)) = (d.split(a), d.split(b));
                assert_eq!(d.mult(a, b).is_some(), x == g.conj(y, z));
                nonzero += d.mult(a, b).is_some() as usize;
            }
        }
        assert_eq!(nonzero, 512);
    }

    #[test]
    fn rejects_non_cocycle() {
        let bad = Cochain3::from_fn(&cyclic(2), 4, |a, b, c| (a * b * c) as i64).unwrap();
        assert!(DoubleTensors::build(&bad).is_err());
    }
}
