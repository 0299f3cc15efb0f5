//! Normalized cochains valued in roots of unity, stored as exponent tables.

mod elementary;
mod extension;
mod h3;
pub(crate) mod modular;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groups::{Elem, Group, GroupHom};
use crate::scalars::{ExpScalar, Scalar};

pub use elementary::{elementary_h3_generators, is_dependent, support, weight};
pub use extension::extension_omega;
pub use h3::{class_order, class_order_by_search, cohomologous, is_coboundary, h3_group, H3};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CohomologyError {
    #[error("cochain is not normalized")]
    NotNormalized,
    #[error("cochain is not a 3-cocycle")]
    NotCocycle,
    #[error("table has {got} entries, expected {expected}")]
    Shape { got: usize, expected: usize },
    #[error("cochains live on different groups")]
    GroupMismatch,
    #[error("group must be elementary abelian")]
    NotElementaryAbelian,
    #[error("group of order {0} is too large for H³ enumeration")]
    TooLarge(usize),
    #[error("automorphism does not commute with the action")]
    NotEquivariant,
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
}

macro_rules! cochain {
    ($name:ident, $arity:expr) => {
        #[derive(Clone, Debug, PartialEq, Eq, Hash)]
        pub struct $name {
            group: Group,
            m: u32,
            e: Vec<u32>,
        }

        impl $name {
            pub fn trivial(group: &Group, m: u32) -> Self {
                let n = group.order().pow($arity);
                $name { group: group.clone(), m, e: vec![0; n] }
            }

            /// Builds from a flat exponent table; entries are reduced mod `m`.
            pub fn from_exponents(group: &Group, m: u32, e: Vec<i64>) -> Result<Self, CohomologyError> {
                let expected = group.order().pow($arity);
                if e.len() != expected {
                    return Err(CohomologyError::Shape { got: e.len(), expected });
                }
                let e = e.into_iter().map(|x| x.rem_euclid(m as i64) as u32).collect();
                let c = $name { group: group.clone(), m, e };
                if !c.is_normalized() {
                    return Err(CohomologyError::NotNormalized);
                }
                Ok(c)
            }

            pub fn group(&self) -> &Group {
                &self.group
            }

            pub fn modulus(&self) -> u32 {
                self.m
            }

            pub fn exponents(&self) -> &[u32] {
                &self.e
            }

            pub fn is_trivial_table(&self) -> bool {
                self.e.iter().all(|&x| x == 0)
            }

            /// Same values over a modulus that is a multiple of the current one.
            pub fn with_modulus(&self, m: u32) -> Self {
                assert!(m % self.m == 0, "modulus {m} is not a multiple of {}", self.m);
                let f = m / self.m;
                $name { group: self.group.clone(), m, e: self.e.iter().map(|x| x * f).collect() }
            }

            /// Rewrites over the smallest modulus that represents every value.
            pub fn reduced(&self) -> Self {
                let g = self.e.iter().fold(self.m, |g, &x| g.gcd(&x));
                $name { group: self.group.clone(), m: self.m / g, e: self.e.iter().map(|x| x / g).collect() }
            }

            /// Pointwise product of values.
            pub fn mul(&self, o: &Self) -> Self {
                assert_eq!(self.group, o.group, "cochains on different groups");
                let m = self.m.lcm(&o.m);
                let (a, b) = (self.with_modulus(m), o.with_modulus(m));
                let e = a.e.iter().zip(&b.e).map(|(x, y)| (x + y) % m).collect();
                $name { group: self.group.clone(), m, e }.reduced()
            }

            pub fn pow(&self, k: i64) -> Self {
                let m = self.m as i64;
                let e = self.e.iter().map(|&x| (x as i64 * k).rem_euclid(m) as u32).collect();
                $name { group: self.group.clone(), m: self.m, e }.reduced()
            }

            pub fn inv(&self) -> Self {
                self.pow(-1)
            }

            /// Values as a comparable normalized fraction table (exponent/modulus).
            pub fn same_values(&self, o: &Self) -> bool {
                self.group == o.group && self.reduced().e == o.reduced().e
            }
        }
    };
}

cochain!(Cochain2, 2);
cochain!(Cochain3, 3);

impl Cochain2 {
    #[inline]
    pub fn exp(&self, a: Elem, b: Elem) -> u32 {
        self.e[a * self.group.order() + b]
    }

    pub fn value(&self, a: Elem, b: Elem) -> ExpScalar {
        ExpScalar::new(self.exp(a, b) as i64, self.m)
    }

    pub fn from_fn(group: &Group, m: u32, f: impl Fn(Elem, Elem) -> i64) -> Result<Self, CohomologyError> {
        let n = group.order();
        let e = (0..n * n).map(|i| f(i / n, i % n)).collect();
        Self::from_exponents(group, m, e)
    }

    pub fn is_normalized(&self) -> bool {
        self.group.elements().all(|x| self.exp(0, x) == 0 && self.exp(x, 0) == 0)
    }
}

impl Cochain3 {
    #[inline]
    pub fn exp(&self, a: Elem, b: Elem, c: Elem) -> u32 {
        let n = self.group.order();
        self.e[(a * n + b) * n + c]
    }

    pub fn value(&self, a: Elem, b: Elem, c: Elem) -> ExpScalar {
        ExpScalar::new(self.exp(a, b, c) as i64, self.m)
    }

    pub fn scalar<S: Scalar>(&self, a: Elem, b: Elem, c: Elem) -> S {
        S::root_of_unity(self.exp(a, b, c) as i64, self.m)
    }

    pub fn from_fn(group: &Group, m: u32, f: impl Fn(Elem, Elem, Elem) -> i64) -> Result<Self, CohomologyError> {
        let n = group.order();
        let e = (0..n * n * n).map(|i| f(i / (n * n), i / n % n, i % n)).collect();
        Self::from_exponents(group, m, e)
    }

    pub fn is_normalized(&self) -> bool {
        let g = &self.group;
        g.elements().all(|x| g.elements().all(|y| self.exp(0, x, y) == 0 && self.exp(x, 0, y) == 0 && self.exp(x, y, 0) == 0))
    }

    /// The 3-cocycle identity over all quadruples.
    pub fn is_cocycle(&self) -> bool {
        let g = &self.group;
        let m = self.m as i64;
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for c in g.elements() {
                    let bc = g.mul(b, c);
                    for d in g.elements() {
                        let cd = g.mul(c, d);
                        let s = self.exp(b, c, d) as i64 - self.exp(ab, c, d) as i64 + self.exp(a, bc, d) as i64
                            - self.exp(a, b, cd) as i64
                            + self.exp(a, b, c) as i64;
                        if s.rem_euclid(m) != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn require_cocycle(&self) -> Result<(), CohomologyError> {
        if self.is_cocycle() {
            Ok(())
        } else {
            Err(CohomologyError::NotCocycle)
        }
    }

    /// w(φx, φy, φz).
    pub fn pullback(&self, phi: &GroupHom) -> Self {
        assert_eq!(phi.target, self.group);
        let g = &phi.source;
        let n = g.order();
        let e = (0..n * n * n).map(|i| self.exp(phi.apply(i / (n * n)), phi.apply(i / n % n), phi.apply(i % n))).collect();
        Cochain3 { group: g.clone(), m: self.m, e }
    }

    /// Inflation along a surjection onto this cochain's group.
    pub fn inflate(&self, proj: &GroupHom) -> Self {
        self.pullback(proj)
    }

    /// Restriction to a subgroup, returned on the subgroup's own table along
    /// with the embedding.
    pub fn restrict(&self, sub: &[Elem]) -> Result<(Cochain3, Vec<Elem>), CohomologyError> {
        let (h, emb) = self.group.subgroup(sub)?;
        let k = h.order();
        let e = (0..k * k * k).map(|i| self.exp(emb[i / (k * k)], emb[i / k % k], emb[i % k])).collect();
        Ok((Cochain3 { group: h, m: self.m, e }, emb))
    }

    /// Normalized coboundary of a 2-cochain:
    /// δb(a,b,c) = b(b,c) − b(ab,c) + b(a,bc) − b(a,b) in exponents.
    pub fn coboundary(b: &Cochain2) -> Cochain3 {
        let g = &b.group;
        let n = g.order();
        let m = b.m as i64;
        let e = (0..n * n * n)
            .map(|i| {
                let (x, y, z) = (i / (n * n), i / n % n, i % n);
                let v = b.exp(y, z) as i64 - b.exp(g.mul(x, y), z) as i64 + b.exp(x, g.mul(y, z)) as i64 - b.exp(x, y) as i64;
                v.rem_euclid(m) as u32
            })
            .collect();
        Cochain3 { group: g.clone(), m: b.m, e }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CochainRepr { group: self.group.name().to_string(), modulus: self.m, exponents: self.e.clone() })
            .expect("serializable")
    }

    pub fn from_json(group: &Group, v: &serde_json::Value) -> Result<Self, CohomologyError> {
        let r: CochainRepr = serde_json::from_value(v.clone()).map_err(|_| CohomologyError::Shape { got: 0, expected: 0 })?;
        Self::from_exponents(group, r.modulus, r.exponents.into_iter().map(|x| x as i64).collect())
    }
}

#[derive(Serialize, Deserialize)]
struct CochainRepr {
    group: String,
    modulus: u32,
    exponents: Vec<u32>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, d8, quaternion};

    fn z2_nontrivial() -> Cochain3 {
        Cochain3::from_fn(&cyclic(2), 2, |a, b, c| (a * b * c) as i64).unwrap()
    }

    #[test]
    fn cocycle_checks() {
        assert!(Cochain3::trivial(&d8(), 4).is_cocycle());
        assert!(z2_nontrivial().is_cocycle());
        let q = quaternion();
        let bad = Cochain3::from_fn(&q, 4, |a, b, c| if (a, b, c) == (1, 2, 3) { 1 } else { 0 }).unwrap();
        assert!(!bad.is_cocycle());
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let g = d8();
        let b = Cochain2::from_fn(&g, 8, |x, y| if x == 0 || y == 0 { 0 } else { ((x * 3 + y * 5) % 8) as i64 }).unwrap();
        let w = Cochain3::coboundary(&b);
        assert!(w.is_cocycle());
    }

    #[test]
    fn z2_coboundary_formula() {
        // b(s,s) = 1 mod 4: δb(s,s,s) = b(s,s) − b(1,s) + b(s,1) − b(s,s) = 0
        let g = cyclic(2);
        let b = Cochain2::from_fn(&g, 4, |x, y| (x * y) as i64).unwrap();
        let w = Cochain3::coboundary(&b);
        assert_eq!(w.exp(1, 1, 1), 0);
        assert!(w.is_trivial_table());
    }

    #[test]
    fn json_roundtrip() {
        let w = z2_nontrivial();
        let v = w.to_json();
        assert_eq!(v["modulus"], 2);
        assert_eq!(Cochain3::from_json(&cyclic(2), &v).unwrap(), w);
    }

    #[test]
    fn rejects_unnormalized() {
        assert_eq!(Cochain2::from_fn(&cyclic(2), 2, |_, _| 1).unwrap_err(), CohomologyError::NotNormalized);
    }
}
