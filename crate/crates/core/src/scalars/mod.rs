//! Scalars: exact cyclotomic numbers, their float shadows, root-of-unity
//! exponents, snapping and rendering.

mod coeff;
mod cyclotomic;
mod poly;
mod render;
mod serial;
mod snap;

use std::fmt::Debug;

use num_complex::Complex64;
use num_traits::{One, Zero};

pub use coeff::Coeff;
pub use cyclotomic::Cyclotomic;
pub use poly::{cyclotomic_poly, lcm, totient};
pub use render::{render, render_exponent};
pub use snap::{snap, SnapError};

/// Field of scalars the algebra code is generic over.
pub trait Scalar: Clone + Debug + PartialEq + Zero + One + Send + Sync + 'static {
    /// Whether equality is exact.
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;
    /// exp(2 pi i k / n).
    fn root_of_unity(k: i64, n: u32) -> Self;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn to_complex(&self) -> Complex64;

    /// Zero test used for pivoting: exact for exact scalars.
    fn negligible(&self) -> bool {
        self.is_zero()
    }

    fn close_to(&self, o: &Self, tol: f64) -> bool {
        (self.to_complex() - o.to_complex()).norm() <= tol
    }
}

impl<T: Coeff> Scalar for Cyclotomic<T> {
    const EXACT: bool = T::EXACT;

    fn from_ratio(num: i64, den: i64) -> Self {
        Cyclotomic::rational(num, den)
    }
    fn root_of_unity(k: i64, n: u32) -> Self {
        Cyclotomic::root_of_unity(k, n)
    }
    fn add_ref(&self, o: &Self) -> Self {
        Cyclotomic::add_ref(self, o)
    }
    fn sub_ref(&self, o: &Self) -> Self {
        Cyclotomic::sub_ref(self, o)
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Cyclotomic::mul_ref(self, o)
    }
    fn neg_ref(&self) -> Self {
        Cyclotomic::neg_ref(self)
    }
    fn inv(&self) -> Option<Self> {
        Cyclotomic::inv(self)
    }
    fn conj(&self) -> Self {
        Cyclotomic::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        Cyclotomic::to_complex(self)
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }
    fn root_of_unity(k: i64, n: u32) -> Self {
        let k = k.rem_euclid(n as i64);
        Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / n as f64)
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (self.norm() > 1e-300).then(|| Complex64::new(1.0, 0.0) / self)
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn to_complex(&self) -> Complex64 {
        *self
    }
    fn negligible(&self) -> bool {
        self.norm() < 1e-9
    }
}

/// A root of unity exp(2 pi i e / m), stored by its exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpScalar {
    pub e: u32,
    pub m: u32,
}

impl ExpScalar {
    pub fn new(e: i64, m: u32) -> Self {
        ExpScalar { e: e.rem_euclid(m as i64) as u32, m }
    }

    pub fn one(m: u32) -> Self {
        ExpScalar { e: 0, m }
    }

    pub fn mul(self, o: Self) -> Self {
        let m = lcm(self.m, o.m);
        ExpScalar::new((self.e * (m / self.m) + o.e * (m / o.m)) as i64, m)
    }

    pub fn inv(self) -> Self {
        ExpScalar::new(-(self.e as i64), self.m)
    }

    pub fn pow(self, k: i64) -> Self {
        ExpScalar::new(self.e as i64 * k, self.m)
    }

    pub fn order(self) -> u32 {
        self.m / num_integer::gcd(self.e, self.m)
    }

    pub fn to_scalar<S: Scalar>(self) -> S {
        S::root_of_unity(self.e as i64, self.m)
    }
}

/// Exact cyclotomic numbers over the rationals.
pub type Cyc = Cyclotomic<num_rational::BigRational>;
/// Cyclotomic numbers with f64 coefficients, used as a float shadow.
pub type CycF64 = Cyclotomic<f64>;
