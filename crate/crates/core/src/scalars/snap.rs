use num_complex::Complex64;
use thiserror::Error;

use super::Cyc;

#[derive(Debug, Error, PartialEq)]
pub enum SnapError {
    #[error("no root-of-unity multiple within {tol} of {re}+{im}i")]
    NoCandidate { re: f64, im: f64, tol: f64 },
    #[error("{count} candidates within {tol} of {re}+{im}i")]
    Ambiguous { re: f64, im: f64, tol: f64, count: usize },
}

/// Snaps a float to the unique value (p/den)·zeta_n^k within `tol`.
pub fn snap(z: Complex64, n: u32, den: u32, tol: f64) -> Result<Cyc, SnapError> {
    if z.norm() <= tol {
        let nearest_nonzero = (1.0 / den as f64) - z.norm();
        if nearest_nonzero <= tol {
            return Err(SnapError::Ambiguous { re: z.re, im: z.im, tol, count: 2 });
        }
        return Ok(Cyc::zero());
    }
    let mut found: Vec<(i64, i64)> = Vec::new();
    for k in 0..n as i64 {
        let w = z * Complex64::from_polar(1.0, -std::f64::consts::TAU * k as f64 / n as f64);
        let p = (w.re * den as f64).round();
        if p < 1.0 {
            continue;
        }
        let cand = Complex64::from_polar(p / den as f64, std::f64::consts::TAU * k as f64 / n as f64);
        if (cand - z).norm() <= tol {
            found.push((p as i64, k));
        }
    }
    match found.as_slice() {
        [] => Err(SnapError::NoCandidate { re: z.re, im: z.im, tol }),
        [(p, k)] => Ok(Cyc::rational(*p, den as i64) * Cyc::root_of_unity(*k, n)),
        many => Err(SnapError::Ambiguous { re: z.re, im: z.im, tol, count: many.len() }),
    }
}
