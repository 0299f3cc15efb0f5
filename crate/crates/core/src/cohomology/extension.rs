use super::{Cochain3, CohomologyError};
use crate::groups::{Elem, ExtensionData, GroupError};

/// The 3-cocycle ω((h₁,a₁),(h₂,a₂),(h₃,a₃)) = ε(h₂,h₃)(σ(a₁)) on E = A⋊Ḡ,
/// where σ is an automorphism of A (as a permutation) commuting with the action.
pub fn extension_omega(ext: &ExtensionData, sigma: &[Elem]) -> Result<Cochain3, CohomologyError> {
    let a = &ext.fiber;
    let eps = ext.eps.as_ref().ok_or_else(|| GroupError::InvalidExtension("missing eps".into()))?;
    ext.validate()?;
    let sig_ok = sigma.len() == a.order()
        && a.elements().all(|p| a.elements().all(|q| sigma[a.mul(p, q)] == a.mul(sigma[p], sigma[q])))
        && {
            let mut s = sigma.to_vec();
            s.sort_unstable();
            s.iter().copied().eq(a.elements())
        };
    if !sig_ok {
        return Err(GroupError::InvalidExtension("sigma is not an automorphism of the fiber".into()).into());
    }
    let commutes = a.elements().all(|p| ext.base.elements().all(|x| sigma[ext.action[p][x]] == ext.action[sigma[p]][x]));
    if !commutes {
        return Err(CohomologyError::NotEquivariant);
    }
    let dual = ext.dual()?;
    let e = ext.semidirect()?;
    let ng = ext.base.order();
    let w = Cochain3::from_fn(&e, dual.m, |x, y, z| {
        let a1 = x / ng;
        let (h2, h3) = (y % ng, z % ng);
        dual.values[eps[h2][h3]][sigma[a1]] as i64
    })?;
    w.require_cocycle()?;
    Ok(w.reduced())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cohomologous, elementary_h3_generators, support};
    use crate::groups::{cyclic, eps_dihedral, eps_quaternion, klein_four};

    fn ext(eps: Vec<Vec<Elem>>) -> ExtensionData {
        ExtensionData::trivial_action(klein_four(), cyclic(2), Some(eps))
    }

    #[test]
    fn trivial_eps_gives_trivial_cocycle() {
        let zero = vec![vec![0; 4]; 4];
        let w = extension_omega(&ext(zero), &[0, 1]).unwrap();
        assert!(w.is_trivial_table());
    }

    #[test]
    fn supports_of_omega_d_and_q() {
        // E = ⟨h1,h2⟩×⟨t⟩ with h1 = 1, h2 = 2, t = 4 as bit vectors
        let wd = extension_omega(&ext(eps_dihedral()), &[0, 1]).unwrap();
        assert_eq!(support(&wd).unwrap(), vec![3 | 4]);
        let wq = extension_omega(&ext(eps_quaternion()), &[0, 1]).unwrap();
        assert_eq!(support(&wq).unwrap(), vec![1 | 4, 2 | 4, 3 | 4]);
    }

    #[test]
    fn omega_q_is_independent_weight_three() {
        let wq = extension_omega(&ext(eps_quaternion()), &[0, 1]).unwrap();
        let s = support(&wq).unwrap();
        assert!(!crate::cohomology::is_dependent(wq.group(), &s));
        // its class is the product of generators with the same support function
        let gens = elementary_h3_generators(3);
        let target: Vec<Elem> = s.clone();
        let found = (0..128u32).any(|mask| {
            let w = gens.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(Cochain3::trivial(wq.group(), 2), |acc, (_, g)| acc.mul(g));
            support(&w).unwrap() == target && cohomologous(&w, &wq).unwrap()
        });
        assert!(found);
    }
}
