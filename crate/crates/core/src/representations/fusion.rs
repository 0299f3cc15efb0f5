use super::{near, CharTable, RepError};
use crate::double::tensor::leg;
use crate::double::QuasiHopf;
use crate::linalg;
use crate::scalars::Scalar;

/// N[i][j][k] = multiplicity of simple k in V_i ⊗ V_j.
pub type FusionRules = Vec<Vec<Vec<u32>>>;

/// Fusion rules from characters: (χ_i ⊗ χ_j)∘Δ = Σ_k N_ijk χ_k.
pub fn fusion_rules<S: Scalar>(ct: &CharTable<S>, q: &QuasiHopf<S>) -> Result<FusionRules, RepError> {
    let r = ct.len();
    let cols: Vec<Vec<S>> = (0..q.dim).map(|b| ct.chars.iter().map(|c| c[b].clone()).collect()).collect();
    let rows = linalg::independent_subset(&cols);
    if rows.len() != r {
        return Err(RepError::Verify("characters are dependent".into()));
    }
    let square: Vec<Vec<S>> = rows.iter().map(|&b| cols[b].clone()).collect();
    let inv = linalg::inverse(&square).ok_or_else(|| RepError::Verify("singular character block".into()))?;
    let mut out = vec![vec![vec![0u32; r]; r]; r];
    for i in 0..r {
        for j in 0..r {
            let prod: Vec<S> = (0..q.dim)
                .map(|b| {
                    q.comult[b].iter().fold(S::zero(), |acc, (k, c)| {
                        let (l, rr) = (leg(k, 0), leg(k, 1));
                        acc.add_ref(&c.mul_ref(&ct.chars[i][l as usize]).mul_ref(&ct.chars[j][rr as usize]))
                    })
                })
                .collect();
            for k in 0..r {
                let x = rows.iter().enumerate().fold(S::zero(), |acc, (p, &b)| acc.add_ref(&inv[k][p].mul_ref(&prod[b])));
                let n = x.to_complex().re.round();
                if n < 0.0 || !near(&x, &S::from_ratio(n as i64, 1)) {
                    return Err(RepError::Fusion(i, j, k));
                }
                out[i][j][k] = n as u32;
            }
            for (b, p) in prod.iter().enumerate() {
                let rebuilt = (0..r).fold(S::zero(), |acc, k| {
                    acc.add_ref(&ct.chars[k][b].mul_ref(&S::from_ratio(out[i][j][k] as i64, 1)))
                });
                if !near(&rebuilt, p) {
                    return Err(RepError::Verify(format!("tensor product {i}⊗{j} does not decompose")));
                }
            }
        }
    }
    Ok(out)
}

fn signature(n: &FusionRules, dims: &[usize], i: usize) -> (usize, Vec<(u32, usize)>, Vec<u32>) {
    let mut sq: Vec<(u32, usize)> = (0..dims.len()).map(|k| (n[i][i][k], dims[k])).collect();
    sq.sort_unstable();
    let mut row: Vec<u32> = (0..dims.len()).map(|j| (0..dims.len()).map(|k| n[i][j][k]).sum()).collect();
    row.sort_unstable();
    (dims[i], sq, row)
}

/// A relabeling p with N_b[p i][p j][p k] = N_a[i][j][k], if one exists.
pub fn fusion_isomorphic(a: &FusionRules, b: &FusionRules, dims_a: &[usize], dims_b: &[usize]) -> Option<Vec<usize>> {
    let r = a.len();
    if b.len() != r {
        return None;
    }
    let sa: Vec<_> = (0..r).map(|i| signature(a, dims_a, i)).collect();
    let sb: Vec<_> = (0..r).map(|i| signature(b, dims_b, i)).collect();
    let mut p = vec![usize::MAX; r];
    let mut used = vec![false; r];
    fn go(
        i: usize,
        a: &FusionRules,
        b: &FusionRules,
        sa: &[(usize, Vec<(u32, usize)>, Vec<u32>)],
        sb: &[(usize, Vec<(u32, usize)>, Vec<u32>)],
        p: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let r = a.len();
        if i == r {
            return true;
        }
        for c in 0..r {
            if used[c] || sa[i] != sb[c] {
                continue;
            }
            p[i] = c;
            let ok = (0..=i).all(|x| {
                (0..=i).all(|y| {
                    (0..=i).all(|z| a[x][y][z] == b[p[x]][p[y]][p[z]])
                })
            });
            if ok {
                used[c] = true;
                if go(i + 1, a, b, sa, sb, p, used) {
                    return true;
                }
                used[c] = false;
            }
        }
        p[i] = usize::MAX;
        false
    }
    go(0, a, b, &sa, &sb, &mut p, &mut used).then_some(p)
}
