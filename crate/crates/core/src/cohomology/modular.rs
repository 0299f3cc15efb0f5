//! Smith normal form over the local rings Z/p^k.

pub(crate) fn valuation(x: u64, p: u64, k: u32) -> u32 {
    if x == 0 {
        return k;
    }
    let mut v = 0;
    let mut x = x;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0 == 1).then(|| t0.rem_euclid(m as i128) as u64)
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

#[derive(Clone, Copy, Debug)]
enum RowOp {
    Swap(usize, usize),
    /// row[dst] -= f · row[src]
    Sub { dst: usize, src: usize, f: u64 },
}

/// R·A·Q = diag(u_i p^{v_i}) mod p^k, with Q and Q⁻¹ tracked and R kept as an op log.
#[derive(Clone, Debug)]
pub(crate) struct LocalSnf {
    pub p: u64,
    pub modulus: u64,
    pub cols: usize,
    /// (valuation, unit) of each pivot, in pivot order.
    pub pivots: Vec<(u32, u64)>,
    pub q: Vec<Vec<u64>>,
    pub qinv: Vec<Vec<u64>>,
    row_ops: Vec<RowOp>,
}

impl LocalSnf {
    /// `a` is given row-major with entries already reduced mod p^k.
    pub fn compute(mut a: Vec<Vec<u64>>, cols: usize, p: u64, k: u32, log_rows: bool) -> Self {
        let m = p.pow(k);
        let rows = a.len();
        let mut q: Vec<Vec<u64>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as u64).collect()).collect();
        let mut qinv = q.clone();
        let mut pivots = Vec::new();
        let mut row_ops = Vec::new();
        for t in 0..rows.min(cols) {
            let mut best: Option<(u32, usize, usize)> = None;
            'search: for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 {
                        let v = valuation(x, p, k);
                        if best.is_none_or(|b| v < b.0) {
                            best = Some((v, i, j));
                            if v == 0 {
                                break 'search;
                            }
                        }
                    }
                }
            }
            let Some((v, i, j)) = best else { break };
            if i != t {
                a.swap(i, t);
                if log_rows {
                    row_ops.push(RowOp::Swap(i, t));
                }
            }
            if j != t {
                for row in a.iter_mut() {
                    row.swap(j, t);
                }
                for row in q.iter_mut() {
                    row.swap(j, t);
                }
                qinv.swap(j, t);
            }
            let pv = p.pow(v);
            let unit = a[t][t] / pv;
            let uinv = inv_mod(unit, m).expect("pivot unit");
            let pivot_row: Vec<u64> = a[t].clone();
            for (i, row) in a.iter_mut().enumerate().skip(t + 1) {
                if row[t] == 0 {
                    continue;
                }
                let f = (row[t] / pv) % m * uinv % m;
                for c in t..cols {
                    if pivot_row[c] != 0 {
                        row[c] = (row[c] + m - f * pivot_row[c] % m) % m;
                    }
                }
                if log_rows {
                    row_ops.push(RowOp::Sub { dst: i, src: t, f });
                }
            }
            for jj in t + 1..cols {
                let x = a[t][jj];
                if x == 0 {
                    continue;
                }
                let f = (x / pv) % m * uinv % m;
                a[t][jj] = 0;
                for row in q.iter_mut() {
                    let c = row[t];
                    if c != 0 {
                        row[jj] = (row[jj] + m - f * c % m) % m;
                    }
                }
                let (lo, hi) = qinv.split_at_mut(jj);
                let (rt, rj) = (&mut lo[t], &hi[0]);
                for (dst, &s) in rt.iter_mut().zip(rj) {
                    if s != 0 {
                        *dst = (*dst + f * s) % m;
                    }
                }
            }
            pivots.push((v, unit));
        }
        LocalSnf { p, modulus: m, cols, pivots, q, qinv, row_ops }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Applies R to a vector of length `rows`.
    pub fn apply_r(&self, mut b: Vec<u64>) -> Vec<u64> {
        let m = self.modulus;
        for op in &self.row_ops {
            match *op {
                RowOp::Swap(i, j) => b.swap(i, j),
                RowOp::Sub { dst, src, f } => b[dst] = (b[dst] + m - f * b[src] % m) % m,
            }
        }
        b
    }

    pub fn mul_qinv(&self, x: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        self.qinv.iter().map(|row| row.iter().zip(x).fold(0, |acc, (a, b)| (acc + a * (b % m)) % m)).collect()
    }

    pub fn mul_q(&self, z: &[u64]) -> Vec<u64> {
        let m = self.modulus;
        self.q.iter().map(|row| row.iter().zip(z).fold(0, |acc, (a, b)| (acc + a * (b % m)) % m)).collect()
    }

    /// Solves A x ≡ b mod p^k when solvable (requires the row log).
    pub fn solve(&self, b: Vec<u64>) -> Option<Vec<u64>> {
        let m = self.modulus;
        let c = self.apply_r(b);
        let mut z = vec![0u64; self.cols];
        for (i, &(v, u)) in self.pivots.iter().enumerate() {
            let pv = self.p.pow(v);
            if c[i] % pv != 0 {
                return None;
            }
            z[i] = (c[i] / pv) % m * inv_mod(u, m).unwrap() % m;
        }
        if c[self.rank()..].iter().any(|&x| x != 0) {
            return None;
        }
        Some(self.mul_q(&z))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matmul(a: &[Vec<u64>], b: &[Vec<u64>], m: u64) -> Vec<Vec<u64>> {
        a.iter()
            .map(|r| (0..b[0].len()).map(|j| r.iter().enumerate().fold(0, |s, (k, x)| (s + x * b[k][j]) % m)).collect())
            .collect()
    }

    #[test]
    fn small_snf() {
        // diag(2, 4) conjugated by unimodular matrices
        let a = vec![vec![2, 4], vec![6, 16], vec![0, 0]];
        let s = LocalSnf::compute(a.clone(), 2, 2, 5, true);
        let mut vals: Vec<u32> = s.pivots.iter().map(|p| p.0).collect();
        vals.sort();
        assert_eq!(vals, vec![1, 2]);
        let qq = matmul(&s.q, &s.qinv, 32);
        assert_eq!(qq, vec![vec![1, 0], vec![0, 1]]);
        let x = s.solve(vec![2, 6, 0]).unwrap();
        let ax: Vec<u64> = a.iter().map(|r| (r[0] * x[0] + r[1] * x[1]) % 32).collect();
        assert_eq!(ax, vec![2, 6, 0]);
        assert!(s.solve(vec![1, 0, 0]).is_none());
    }

    #[test]
    fn modular_helpers() {
        assert_eq!(inv_mod(3, 16), Some(11));
        assert_eq!(inv_mod(2, 16), None);
        assert_eq!(valuation(24, 2, 10), 3);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }
}
