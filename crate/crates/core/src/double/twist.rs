use super::algebra::QuasiHopf;
use super::tensor::Tensor;
use super::DoubleError;
use crate::scalars::Scalar;

const TOL: f64 = 1e-8;

/// H_F: Δ_F = FΔF⁻¹, Φ_F = (1⊗F)(id⊗Δ)(F) Φ (Δ⊗id)(F⁻¹)(F⁻¹⊗1),
/// α_F = Σ S(G¹)αG² for F⁻¹ = Σ G¹⊗G², β_F = Σ F¹βS(F²), R_F = F₂₁RF⁻¹.
pub fn gauge_twist<S: Scalar>(q: &QuasiHopf<S>, f: &Tensor<S>, f_inv: &Tensor<S>) -> Result<QuasiHopf<S>, DoubleError> {
    if f.legs() != 2 || f_inv.legs() != 2 {
        return Err(DoubleError::Invalid("gauge element must have two legs".into()));
    }
    let one2 = q.one(2);
    if !q.tmul(f, f_inv).approx_eq(&one2, TOL) || !q.tmul(f_inv, f).approx_eq(&one2, TOL) {
        return Err(DoubleError::NotInvertible);
    }
    if !q.eps_leg(f, 0).approx_eq(&q.unit, TOL) || !q.eps_leg(f, 1).approx_eq(&q.unit, TOL) {
        return Err(DoubleError::Invalid("gauge element is not counital".into()));
    }
    let mut out = q.clone();
    out.comult = q.comult.iter().map(|d| q.tmul_all(&[f, d, f_inv])).collect();
    let f_1 = Tensor::outer(&q.unit, f);
    let f1_ = Tensor::outer(f, &q.unit);
    let fi_1 = Tensor::outer(&q.unit, f_inv);
    let fi1_ = Tensor::outer(f_inv, &q.unit);
    out.phi = q.tmul_all(&[&f_1, &q.delta_leg(f, 1), &q.phi, &q.delta_leg(f_inv, 0), &fi1_]);
    out.phi_inv = q.tmul_all(&[&f1_, &q.delta_leg(f, 0), &q.phi_inv, &q.delta_leg(f_inv, 1), &fi_1]);
    out.alpha = q.collapse(&q.s_leg(f_inv, 0), &[&q.alpha]);
    out.beta = q.collapse(&q.s_leg(f, 1), &[&q.beta]);
    out.r = q.tmul_all(&[&f.permute(&[1, 0]), &q.r, f_inv]);
    Ok(out)
}

/// H_u = (Δ, ε, Φ, uα, βu⁻¹, uS(·)u⁻¹).
pub fn unit_twist<S: Scalar>(q: &QuasiHopf<S>, u: &Tensor<S>) -> Result<QuasiHopf<S>, DoubleError> {
    let u_inv = q.inverse(u).ok_or(DoubleError::NotInvertible)?;
    let mut out = q.clone();
    out.alpha = q.tmul(u, &q.alpha);
    out.beta = q.tmul(&q.beta, &u_inv);
    out.antipode = q.antipode.iter().map(|s| q.tmul_all(&[u, s, &u_inv])).collect();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{h3_group, Cochain3};
    use crate::double::DoubleTensors;
    use crate::groups::{cyclic, d8};
    use crate::scalars::Cyc;

    fn sample() -> QuasiHopf<Cyc> {
        let g = d8();
        let h = h3_group(&g).unwrap();
        DoubleTensors::build(&h.element(&[1, 0, 3])).unwrap().quasi_hopf()
    }

    fn same(a: &QuasiHopf<Cyc>, b: &QuasiHopf<Cyc>) -> bool {
        a.phi.approx_eq(&b.phi, 0.0)
            && a.r.approx_eq(&b.r, 0.0)
            && a.alpha.approx_eq(&b.alpha, 0.0)
            && a.beta.approx_eq(&b.beta, 0.0)
            && a.comult.iter().zip(&b.comult).all(|(x, y)| x.approx_eq(y, 0.0))
            && a.antipode.iter().zip(&b.antipode).all(|(x, y)| x.approx_eq(y, 0.0))
    }

    /// A diagonal counital gauge element Σ c(g,h) e(g)⊗e(h) with c = i^{[g≠1][h≠1]·(g+h)}.
    fn diagonal(n: u32, inverse: bool) -> Tensor<Cyc> {
        let mut t = Tensor::new(2);
        for g in 0..n {
            for h in 0..n {
                let e = if g == 0 || h == 0 { 0 } else { (g + h) as i64 };
                let e = if inverse { -e } else { e };
                t.add_term(crate::double::tensor::pack(&[g * n, h * n]), Cyc::root_of_unity(e, 4));
            }
        }
        t
    }

    #[test]
    fn identity_twists_are_trivial() {
        let q = sample();
        let one = q.one(2);
        assert!(same(&gauge_twist(&q, &one, &one).unwrap(), &q));
        assert!(same(&unit_twist(&q, &q.unit).unwrap(), &q));
    }

    #[test]
    fn twisted_algebras_still_verify_and_round_trip() {
        let q = sample();
        let (f, fi) = (diagonal(8, false), diagonal(8, true));
        let t = gauge_twist(&q, &f, &fi).unwrap();
        assert!(t.verify().all_pass(), "{:?}", t.verify().failures());
        assert!(!same(&t, &q));
        assert!(same(&gauge_twist(&t, &fi, &f).unwrap(), &q));

        let mut u = Tensor::new(1);
        for g in 0..8u32 {
            u.add_term(g as u64 * 9, Cyc::root_of_unity(g as i64, 8));
        }
        let v = unit_twist(&q, &u).unwrap();
        assert!(v.verify().all_pass(), "{:?}", v.verify().failures());
        let back = unit_twist(&v, &q.inverse(&u).unwrap()).unwrap();
        assert!(same(&back, &q));
    }

    #[test]
    fn rejects_bad_elements() {
        let q: QuasiHopf<Cyc> = DoubleTensors::build(&Cochain3::trivial(&cyclic(2), 1)).unwrap().quasi_hopf();
        let zero = Tensor::new(2);
        assert!(matches!(gauge_twist(&q, &zero, &zero), Err(DoubleError::NotInvertible)));
        let two = q.one(2).scale(&Cyc::from_ratio(2, 1));
        let half = q.one(2).scale(&Cyc::from_ratio(1, 2));
        assert!(matches!(gauge_twist(&q, &two, &half), Err(DoubleError::Invalid(_))));
        assert!(matches!(unit_twist(&q, &Tensor::new(1)), Err(DoubleError::NotInvertible)));
    }
}
