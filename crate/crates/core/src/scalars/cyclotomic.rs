use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;

use super::coeff::Coeff;
use super::poly::{cyclotomic_poly, lcm, totient};

/// Element of the cyclotomic field Q(zeta_n), stored in the power basis
/// reduced modulo the n-th cyclotomic polynomial.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T> {
    n: u32,
    c: Vec<T>,
}

fn reduce<T: Coeff>(v: Vec<T>, n: u32) -> Vec<T> {
    let phi = totient(n);
    let nn = n as usize;
    if n >= 2 && n.is_power_of_two() {
        let mut out = vec![T::zero(); phi];
        for (k, c) in v.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = k % nn;
            if k < phi {
                out[k] = out[k].clone() + c;
            } else {
                out[k - phi] = out[k - phi].clone() - c;
            }
        }
        return out;
    }
    let mut w = vec![T::zero(); nn.max(phi + 1)];
    for (k, c) in v.into_iter().enumerate() {
        if !c.is_zero() {
            let k = k % nn;
            w[k] = w[k].clone() + c;
        }
    }
    let p = cyclotomic_poly(n);
    for k in (phi..w.len()).rev() {
        if w[k].is_zero() {
            continue;
        }
        let c = w[k].clone();
        for (j, pj) in p.iter().enumerate() {
            if *pj != 0 {
                let t = c.clone() * T::from_ratio(*pj, 1);
                w[k - phi + j] = w[k - phi + j].clone() - t;
            }
        }
    }
    w.truncate(phi);
    w
}

fn units(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |k| k.gcd(&n) == 1)
}

impl<T: Coeff> Cyclotomic<T> {
    /// Reduces an arbitrary polynomial in zeta_n.
    pub fn from_poly(n: u32, coeffs: Vec<T>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        Cyclotomic { n, c: reduce(coeffs, n) }
    }

    pub fn from_coeff(x: T) -> Self {
        Cyclotomic { n: 1, c: vec![x] }
    }

    pub fn zero() -> Self {
        Self::from_coeff(T::zero())
    }

    pub fn one() -> Self {
        Self::from_coeff(T::one())
    }

    pub fn rational(num: i64, den: i64) -> Self {
        Self::from_coeff(T::from_ratio(num, den))
    }

    /// zeta_n^k.
    pub fn root_of_unity(k: i64, n: u32) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut v = vec![T::zero(); k + 1];
        v[k] = T::one();
        Self::from_poly(n, v)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.negligible())
    }

    /// Rewrites the element over Q(zeta_m); `m` must be a multiple of the conductor.
    pub fn embed(&self, m: u32) -> Self {
        assert!(m % self.n == 0, "cannot embed conductor {} into {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        let mut v = vec![T::zero(); (self.c.len() - 1) * step + 1];
        for (i, c) in self.c.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Self::from_poly(m, v)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        if self.n == other.n {
            return (self.clone(), other.clone());
        }
        let m = lcm(self.n, other.n);
        (self.embed(m), other.embed(m))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        if other.is_exact_zero() {
            return self.clone();
        }
        let (a, b) = if self.n == other.n {
            (None, None)
        } else {
            let (a, b) = self.common(other);
            (Some(a), Some(b))
        };
        let a = a.as_ref().unwrap_or(self);
        let b = b.as_ref().unwrap_or(other);
        let c = a.c.iter().zip(&b.c).map(|(x, y)| f(x.clone(), y.clone())).collect();
        Cyclotomic { n: a.n, c }
    }

    fn is_exact_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_exact_zero() {
            return other.clone();
        }
        self.zip_with(other, |x, y| x + y)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        if self.is_exact_zero() {
            return other.neg_ref();
        }
        self.zip_with(other, |x, y| x - y)
    }

    pub fn neg_ref(&self) -> Self {
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| -x.clone()).collect() }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_exact_zero() || other.is_exact_zero() {
            return Self::zero();
        }
        if self.n == 1 {
            return other.scale(&self.c[0]);
        }
        if other.n == 1 {
            return self.scale(&other.c[0]);
        }
        let (a, b);
        let (x, y) = if self.n == other.n {
            (self, other)
        } else {
            (a, b) = self.common(other);
            (&a, &b)
        };
        let mut v = vec![T::zero(); x.c.len() + y.c.len() - 1];
        for (i, ci) in x.c.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for (j, cj) in y.c.iter().enumerate() {
                if !cj.is_zero() {
                    v[i + j] = v[i + j].clone() + ci.clone() * cj.clone();
                }
            }
        }
        Self::from_poly(x.n, v)
    }

    pub fn scale(&self, s: &T) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Cyclotomic { n: self.n, c: self.c.iter().map(|x| x.clone() * s.clone()).collect() }
    }

    /// The field automorphism zeta_n -> zeta_n^k, with gcd(k, n) = 1.
    pub fn galois(&self, k: i64) -> Self {
        let n = self.n as i64;
        assert!(k.gcd(&n) == 1, "{k} is not a unit mod {n}");
        if self.n <= 2 {
            return self.clone();
        }
        let mut v = vec![T::zero(); self.n as usize];
        for (i, c) in self.c.iter().enumerate() {
            let j = ((i as i64) * k).rem_euclid(n) as usize;
            v[j] = v[j].clone() + c.clone();
        }
        Self::from_poly(self.n, v)
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.n == 1 {
            return Some(Self::from_coeff(T::one() / self.c[0].clone()));
        }
        let mut prod = Self::one();
        for k in units(self.n).filter(|&k| k != 1) {
            prod = prod.mul_ref(&self.galois(k as i64));
        }
        let norm = self.mul_ref(&prod);
        let r = norm.c[0].clone();
        Some(prod.scale(&(T::one() / r)))
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.c.iter().enumerate() {
            if !c.is_zero() {
                let t = std::f64::consts::TAU * i as f64 / self.n as f64;
                z += Complex64::from_polar(c.to_f64(), t);
            }
        }
        z
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<T> {
        if self.c.iter().skip(1).all(|x| x.negligible()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    /// True when the element lies in Q(zeta_m).
    pub fn lies_in(&self, m: u32) -> bool {
        let big = lcm(self.n, m);
        let x = self.embed(big);
        units(big)
            .filter(|k| k % m == 1 % m)
            .all(|k| x.galois(k as i64) == x)
    }

    /// Smallest conductor whose cyclotomic field contains the element.
    pub fn minimal_conductor(&self) -> u32 {
        (1..=self.n)
            .filter(|m| self.n % m == 0)
            .find(|&m| self.lies_in(m))
            .unwrap_or(self.n)
    }

    /// Rewrites the element over Q(zeta_m) when it lies there.
    pub fn restrict(&self, m: u32) -> Option<Self> {
        if !self.lies_in(m) {
            return None;
        }
        let big = lcm(self.n, m);
        let target = self.embed(big);
        let phi = totient(m);
        let cols: Vec<Vec<T>> = (0..phi)
            .map(|j| Self::root_of_unity(j as i64, m).embed(big).c)
            .collect();
        let sol = solve_columns(&cols, &target.c)?;
        Some(Cyclotomic { n: m, c: sol })
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        acc
    }
}

/// Solves sum_j x_j cols[j] = rhs for a consistent, full-column-rank system.
fn solve_columns<T: Coeff>(cols: &[Vec<T>], rhs: &[T]) -> Option<Vec<T>> {
    let rows = rhs.len();
    let k = cols.len();
    let mut a: Vec<Vec<T>> = (0..rows)
        .map(|r| {
            let mut row: Vec<T> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut piv_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let best = (piv_row..rows)
            .filter(|&r| !a[r][col].negligible())
            .max_by(|&x, &y| a[x][col].magnitude().total_cmp(&a[y][col].magnitude()))?;
        a.swap(piv_row, best);
        let p = a[piv_row][col].clone();
        for v in a[piv_row].iter_mut() {
            *v = v.clone() / p.clone();
        }
        for r in 0..rows {
            if r != piv_row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..=k {
                    let t = f.clone() * a[piv_row][c].clone();
                    a[r][c] = a[r][c].clone() - t;
                }
            }
        }
        pivots.push(piv_row);
        piv_row += 1;
    }
    if (piv_row..rows).any(|r| !a[r][k].negligible()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][k].clone()).collect())
}

impl<T: Coeff> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        self.sub_ref(other).is_zero()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $r:ident) => {
        impl<T: Coeff> $tr for Cyclotomic<T> {
            type Output = Self;
            fn $m(self, o: Self) -> Self {
                self.$r(&o)
            }
        }
        impl<'a, T: Coeff> $tr<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, o: Self) -> Cyclotomic<T> {
                self.$r(o)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl<T: Coeff> Neg for Cyclotomic<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<T: Coeff> num_traits::Zero for Cyclotomic<T> {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
}

impl<T: Coeff> num_traits::One for Cyclotomic<T> {
    fn one() -> Self {
        Cyclotomic::one()
    }
}
