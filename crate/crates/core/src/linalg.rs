//! Gaussian elimination over a scalar field.

use crate::scalars::Scalar;

fn magnitude<S: Scalar>(x: &S) -> f64 {
    if S::EXACT {
        // any nonzero pivot is exact; prefer sparse-looking ones by index order
        if x.negligible() {
            0.0
        } else {
            1.0
        }
    } else {
        x.to_complex().norm()
    }
}

/// Reduced row echelon form; returns pivot columns.
pub fn rref<S: Scalar>(a: &mut [Vec<S>]) -> Vec<usize> {
    let rows = a.len();
    if rows == 0 {
        return vec![];
    }
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let best = (r..rows)
            .filter(|&i| !a[i][c].negligible())
            .max_by(|&x, &y| magnitude(&a[x][c]).total_cmp(&magnitude(&a[y][c])).then(y.cmp(&x)));
        let Some(p) = best else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for v in a[r].iter_mut() {
            if !v.is_zero() {
                *v = v.mul_ref(&inv);
            }
        }
        let prow = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (dst, src) in row.iter_mut().zip(&prow).skip(c) {
                if !src.is_zero() {
                    *dst = dst.sub_ref(&f.mul_ref(src));
                }
            }
            row[c] = S::zero();
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<S: Scalar>(rows: &[Vec<S>]) -> usize {
    let mut a = rows.to_vec();
    rref(&mut a).len()
}

/// Solves Σ_j x_j cols[j] = rhs.
pub fn solve<S: Scalar>(cols: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let n = cols.len();
    let m = rhs.len();
    let mut a: Vec<Vec<S>> = (0..m)
        .map(|i| {
            let mut row: Vec<S> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let piv = rref(&mut a);
    if piv.last() == Some(&n) {
        return None;
    }
    let mut x = vec![S::zero(); n];
    for (r, &c) in piv.iter().enumerate() {
        x[c] = a[r][n].clone();
    }
    Some(x)
}

/// Inverse of a square matrix.
pub fn inverse<S: Scalar>(a: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let n = a.len();
    let mut aug: Vec<Vec<S>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
            row
        })
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of {x : A x = 0} for A given by rows.
pub fn nullspace<S: Scalar>(rows: &[Vec<S>], cols: usize) -> Vec<Vec<S>> {
    let mut a = rows.to_vec();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); cols];
            v[f] = S::one();
            for (r, &c) in piv.iter().enumerate() {
                v[c] = a[r][f].neg_ref();
            }
            v
        })
        .collect()
}

/// Indices of a maximal independent subset, scanning in order.
pub fn independent_subset<S: Scalar>(vectors: &[Vec<S>]) -> Vec<usize> {
    let mut basis: Vec<Vec<S>> = Vec::new();
    let mut out = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial) > basis.len() {
            basis = trial;
            let mut b = basis.clone();
            rref(&mut b);
            b.retain(|r| r.iter().any(|x| !x.negligible()));
            basis = b;
            out.push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyc;

    fn q(n: i64) -> Cyc {
        Cyc::rational(n, 1)
    }

    #[test]
    fn solve_and_nullspace() {
        let cols = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        let x = solve(&cols, &[q(5), q(6)]).unwrap();
        assert_eq!(x, vec![q(-1), q(2)]);
        let rows = vec![vec![q(1), q(1), q(0)], vec![q(0), q(0), q(1)]];
        let ns = nullspace(&rows, 3);
        assert_eq!(ns, vec![vec![q(-1), q(1), q(0)]]);
        assert!(solve(&[vec![q(1), q(1)]], &[q(1), q(2)]).is_none());
    }

    #[test]
    fn cyclotomic_pivots() {
        let i = Cyc::root_of_unity(1, 4);
        let rows = vec![vec![i.clone(), q(1)], vec![q(1), i.clone() * i.clone() * i]];
        assert_eq!(rank(&rows), 1);
        assert_eq!(independent_subset(&[vec![q(1), q(0)], vec![q(2), q(0)], vec![q(0), q(1)]]), vec![0, 2]);
    }

    #[test]
    fn inverse_of_two_by_two() {
        let a = vec![vec![q(1), q(2)], vec![q(3), q(4)]];
        let inv = inverse(&a).unwrap();
        let half = Cyc::rational(1, 2);
        assert_eq!(inv, vec![vec![q(-2), q(1)], vec![Cyc::rational(3, 2), -half]]);
        assert!(inverse(&[vec![q(1), q(2)], vec![q(2), q(4)]]).is_none());
    }
}
