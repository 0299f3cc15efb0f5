use super::{class_order, Cochain3, CohomologyError};
use crate::groups::{elementary_abelian, Elem, Group};

/// Nonidentity g whose cyclic subgroup carries a nontrivial restriction.
pub fn support(w: &Cochain3) -> Result<Vec<Elem>, CohomologyError> {
    let g = w.group();
    if !g.is_elementary_abelian_2() {
        return Err(CohomologyError::NotElementaryAbelian);
    }
    let mut out = Vec::new();
    for x in g.elements().skip(1) {
        let (r, _) = w.restrict(&[0, x])?;
        if class_order(&r)? > 1 {
            out.push(x);
        }
    }
    Ok(out)
}

pub fn weight(w: &Cochain3) -> Result<usize, CohomologyError> {
    Ok(support(w)?.len())
}

/// Whether a set of elements of an elementary abelian 2-group is linearly dependent.
pub fn is_dependent(g: &Group, set: &[Elem]) -> bool {
    g.generated(set).len() < 1 << set.len()
}

/// Generators of H³(Z2ⁿ, C*): the monomial cocycles (−1)^{x_i y_i z_i},
/// (−1)^{x_i y_j z_j} for i<j and (−1)^{x_i y_j z_k} for i<j<k.
pub fn elementary_h3_generators(n: usize) -> Vec<Cochain3> {
    let g = elementary_abelian(n);
    let bit = |x: Elem, i: usize| (x >> i & 1) as i64;
    let mut out = Vec::new();
    let mut push = |i: usize, j: usize, k: usize| {
        out.push(Cochain3::from_fn(&g, 2, |x, y, z| bit(x, i) * bit(y, j) * bit(z, k)).expect("normalized"));
    };
    for i in 0..n {
        push(i, i, i);
    }
    for i in 0..n {
        for j in i + 1..n {
            push(i, j, j);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                push(i, j, k);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, BTreeSet};

    fn span(gens: &[Cochain3]) -> Vec<Cochain3> {
        let g = gens[0].group().clone();
        (0..1u32 << gens.len())
            .map(|mask| {
                gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(Cochain3::trivial(&g, 2), |acc, (_, w)| acc.mul(w))
            })
            .collect()
    }

    #[test]
    fn generator_counts() {
        assert_eq!(elementary_h3_generators(1).len(), 1);
        assert_eq!(elementary_h3_generators(3).len(), 7);
        assert_eq!(elementary_h3_generators(5).len(), 5 + 10 + 10);
        assert!(elementary_h3_generators(4).iter().all(|w| w.is_cocycle()));
    }

    #[test]
    fn weight_census_rank3() {
        let classes = span(&elementary_h3_generators(3));
        let mut census: BTreeMap<usize, usize> = BTreeMap::new();
        let mut supports = BTreeSet::new();
        let mut dependent = 0;
        for w in &classes {
            let s = support(w).unwrap();
            *census.entry(s.len()).or_default() += 1;
            if s.len() == 3 && is_dependent(w.group(), &s) {
                dependent += 1;
            }
            supports.insert(s);
        }
        assert_eq!(supports.len(), 128);
        let even: usize = census.iter().filter(|(k, _)| *k % 2 == 0).map(|(_, v)| v).sum();
        assert_eq!(even, 64);
        assert_eq!(census[&1], 7);
        assert_eq!(census[&3], 35);
        assert_eq!(census[&5], 21);
        assert_eq!(census[&7], 1);
        assert_eq!(dependent, 7);
    }

    #[test]
    fn support_map_injective_small_ranks() {
        for n in 1..=3 {
            let classes = span(&elementary_h3_generators(n));
            let supports: BTreeSet<Vec<Elem>> = classes.iter().map(|w| support(w).unwrap()).collect();
            assert_eq!(supports.len(), classes.len());
        }
    }

    #[test]
    fn rejects_nonabelian() {
        let w = Cochain3::trivial(&crate::groups::d8(), 2);
        assert_eq!(support(&w).unwrap_err(), CohomologyError::NotElementaryAbelian);
    }
}
