use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive, Zero};

/// Coefficient field for cyclotomic elements.
///
/// Exact rationals and IEEE floats both implement this; floats treat values
/// below `EPS` as zero.
pub trait Coeff: Clone + Debug + PartialEq + Num + std::ops::Neg<Output = Self> + Send + Sync + 'static {
    const EXACT: bool;

    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_f64(&self) -> f64;
    fn negligible(&self) -> bool;
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
    fn to_rational(&self) -> Option<BigRational>;
}

impl Coeff for BigRational {
    const EXACT: bool = true;

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn negligible(&self) -> bool {
        self.is_zero()
    }
    fn magnitude(&self) -> f64 {
        Coeff::to_f64(&self.abs())
    }
    fn to_rational(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

macro_rules! float_coeff {
    ($t:ty, $eps:expr) => {
        impl Coeff for $t {
            const EXACT: bool = false;

            fn from_ratio(num: i64, den: i64) -> Self {
                num as $t / den as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn negligible(&self) -> bool {
                self.abs() < $eps
            }
            fn to_rational(&self) -> Option<BigRational> {
                BigRational::from_float(*self)
            }
        }
    };
}

float_coeff!(f64, 1e-12);
float_coeff!(f32, 1e-5);
