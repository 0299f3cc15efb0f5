//! Gauge invariants: higher Frobenius-Schur indicators, ribbon scalars,
//! Frobenius-Schur exponents and fingerprints.

mod fingerprint;
mod rotation;

pub use fingerprint::{fingerprint, float_fingerprint, Fingerprint, Record};
pub use rotation::{check_integral, Action, Rigid};

use thiserror::Error;

use crate::cohomology::{class_order, Cochain3, CohomologyError};
use crate::double::{DoubleTensors, QuasiHopf, Tensor};
use crate::groups::{cyclic, GroupHom};
use crate::representations::{CharTable, SimpleModule};
use crate::scalars::{lcm, Scalar};

pub(crate) use crate::representations::near;

#[derive(Debug, Error)]
pub enum InvError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("integral check failed: {0}")]
    Integral(String),
    #[error("pivotal structure check failed: {0}")]
    Pivot(String),
    #[error("rigidity check failed: {0}")]
    Rigidity(String),
    #[error("indicators did not stabilize by n = {0}")]
    Budget(usize),
    #[error("float mode: {0}")]
    Snap(String),
    #[error("{0} is not a root of unity of order dividing {1}")]
    NotRoot(String, u32),
}

/// Trace element g, Drinfeld element u and ribbon element v.
#[derive(Clone, Debug)]
pub struct PivotalData<S> {
    pub g: Tensor<S>,
    pub u: Tensor<S>,
    pub v: Tensor<S>,
}

impl<S: Scalar> PivotalData<S> {
    pub fn new(d: &DoubleTensors) -> Self {
        let gr = d.group();
        let m = d.modulus();
        let w = |x| d.omega().exp(x, gr.inv(x), x) as i64;
        let g = Tensor::from_terms(1, gr.elements().map(|x| (vec![d.basis(x, 0)], S::root_of_unity(w(x), m))));
        let u = Tensor::from_terms(1, gr.elements().map(|x| (vec![d.basis(x, gr.inv(x))], S::root_of_unity(-2 * w(x), m))));
        let v = Tensor::from_terms(1, gr.elements().map(|x| (vec![d.basis(x, x)], S::one())));
        PivotalData { g, u, v }
    }

    /// v·g·u = 1 and v central.
    pub fn check(&self, q: &QuasiHopf<S>) -> Result<(), InvError> {
        let vgu = q.tmul_all(&[&self.v, &self.g, &self.u]);
        if !vgu.approx_eq(&q.unit, 1e-9) {
            return Err(InvError::Pivot("v·g·u ≠ 1".into()));
        }
        for b in 0..q.dim as u32 {
            let h = q.basis(b);
            if !q.tmul(&self.v, &h).approx_eq(&q.tmul(&h, &self.v), 1e-9) {
                return Err(InvError::Pivot(format!("v does not commute with basis element {b}")));
            }
        }
        Ok(())
    }
}

/// Λ = (1/|G|) Σ_x e(1)⊗x.
pub fn integral<S: Scalar>(d: &DoubleTensors) -> Tensor<S> {
    let g = d.group();
    let c = S::from_ratio(1, g.order() as i64);
    Tensor::from_terms(1, g.elements().map(|x| (vec![d.basis(0, x)], c.clone())))
}

/// v_χ = χ(v)/χ(1).
pub fn ribbon_scalars<S: Scalar>(d: &DoubleTensors, ct: &CharTable<S>) -> Vec<S> {
    let v = PivotalData::<S>::new(d).v;
    (0..ct.len()).map(|i| ct.eval(i, &v).mul_ref(&S::from_ratio(1, ct.dims[i] as i64))).collect()
}

/// Structured ν^(n) for a simple module of a twisted double: the rotation
/// trace collapsed onto the monomial basis.
pub fn indicator<S: Scalar>(d: &DoubleTensors, chi: &[S], n: usize) -> S {
    let g = d.group();
    let w = d.omega();
    let m = d.modulus() as i64;
    let mut total = S::zero();
    for x in g.elements() {
        let xi = g.inv(x);
        for a1 in g.elements() {
            let a: Vec<_> = (0..n).scan(a1, |cur, _| {
                let out = *cur;
                *cur = g.conj(xi, *cur);
                Some(out)
            }).collect();
            if a.iter().fold(0, |p, &y| g.mul(p, y)) != 0 {
                continue;
            }
            let b: Vec<_> = a.iter().map(|&y| g.conj(x, y)).collect();
            let mut e: i64 = 0;
            let mut prefix = a[0];
            for &ak in &a[1..] {
                e += d.gamma(x, g.conj(x, prefix), g.conj(x, ak)) as i64;
                prefix = g.mul(prefix, ak);
            }
            let b1i = g.inv(b[0]);
            let tail = b[1..].iter().fold(0, |p, &y| g.mul(p, y));
            e += (w.exp(b1i, b[0], b1i) + w.exp(b1i, b[0], tail) + w.exp(b[0], b1i, b[0])) as i64;
            let mut mid = if n > 1 { b[1] } else { 0 };
            for &bk in b.iter().skip(2) {
                e -= w.exp(b[0], mid, bk) as i64;
                mid = g.mul(mid, bk);
            }
            let mut cur = d.basis(a[0], x);
            let mut zero = false;
            for &ak in &a[1..] {
                match d.mult(cur, d.basis(ak, x)) {
                    Some((t, c)) => {
                        cur = t;
                        e += c as i64;
                    }
                    None => {
                        zero = true;
                        break;
                    }
                }
            }
            if zero || chi[cur as usize].is_zero() {
                continue;
            }
            total = total.add_ref(&S::root_of_unity(e.rem_euclid(m), m as u32).mul_ref(&chi[cur as usize]));
        }
    }
    total.mul_ref(&S::from_ratio(1, g.order() as i64))
}

/// lcm over cyclic subgroups C of |C|·|ω restricted to C|.
pub fn fs_exponent_cocycle(w: &Cochain3) -> Result<u32, InvError> {
    let g = w.group();
    let mut f = 1;
    for c in g.cyclic_subgroups() {
        let k = c.len();
        let inc = GroupHom::new(cyclic(k), g.clone(), c).expect("powers of an element form a cyclic subgroup");
        f = lcm(f, k as u32 * class_order(&w.pullback(&inc))?);
    }
    Ok(f)
}

/// Smallest f with ν^(f)(χ) = χ(1) for every simple.
pub fn fs_exponent_indicator<S: Scalar>(d: &DoubleTensors, ct: &CharTable<S>, max_n: usize) -> Result<u32, InvError> {
    (1..=max_n)
        .find(|&n| (0..ct.len()).all(|i| near(&indicator(d, &ct.chars[i], n), &S::from_ratio(ct.dims[i] as i64, 1))))
        .map(|n| n as u32)
        .ok_or(InvError::Budget(max_n))
}

/// Module matrices of a simple, for the dense rotation path.
pub fn action_of<S: Scalar>(m: &SimpleModule<S>) -> Action<S> {
    Action { dim: m.dim, basis: m.action.clone() }
}

/// Dense rotation-trace indicator on a twisted double, with every piece of
/// duality data checked first.
pub fn indicator_by_rotation<S: Scalar>(d: &DoubleTensors, q: &QuasiHopf<S>, m: &SimpleModule<S>, n: usize) -> Result<S, InvError> {
    let lambda = integral::<S>(d);
    check_integral(q, &lambda)?;
    let piv = PivotalData::<S>::new(d);
    let r = Rigid::new(q, action_of(m), &piv.g)?;
    r.check_zigzag()?;
    Ok(r.indicator(&lambda, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::h3_group;
    use crate::groups::{cyclic, d8, quaternion, Group};
    use crate::representations::{characters, decompose_with};
    use crate::scalars::Cyc;

    fn setup(g: &Group, class: &[u32]) -> (DoubleTensors, QuasiHopf<Cyc>, Vec<SimpleModule<Cyc>>) {
        let d = DoubleTensors::build(&h3_group(g).unwrap().element(class)).unwrap();
        let q = d.quasi_hopf::<Cyc>();
        let s = decompose_with(&d, &q).unwrap();
        (d, q, s)
    }

    fn cross_check(g: &Group, class: &[u32], max_n: usize) {
        let (d, q, s) = setup(g, class);
        for m in &s {
            let chi = m.character();
            for n in 1..=max_n {
                let fast = indicator(&d, &chi, n);
                let slow = indicator_by_rotation(&d, &q, m, n).unwrap();
                assert_eq!(fast, slow, "{} {class:?} dim {} class rep {} n = {n}", g.name(), m.dim, m.class_rep);
            }
        }
    }

    #[test]
    fn structured_matches_rotation_on_z2() {
        cross_check(&cyclic(2), &[0], 5);
        cross_check(&cyclic(2), &[1], 5);
    }

    #[test]
    fn structured_matches_rotation_on_q8() {
        cross_check(&quaternion(), &[1], 4);
    }

    #[test]
    fn pivotal_data_checks() {
        for c in 0..8 {
            let (d, q, _) = setup(&quaternion(), &[c]);
            PivotalData::<Cyc>::new(&d).check(&q).unwrap();
        }
    }

    #[test]
    fn structured_matches_rotation_on_d8() {
        cross_check(&d8(), &[0, 1, 1], 3);
    }

    #[test]
    fn untwisted_q8_has_one_quaternionic_simple() {
        let (d, _, s) = setup(&quaternion(), &[0]);
        let ct = characters(&s);
        let nu2: Vec<Cyc> = ct.chars.iter().map(|c| indicator(&d, c, 2)).collect();
        let v = ribbon_scalars(&d, &ct);
        let minus_one = Cyc::from_ratio(-1, 1);
        let quaternionic: Vec<usize> = (0..ct.len()).filter(|&i| ct.dims[i] == 2 && nu2[i] == minus_one).collect();
        assert_eq!(quaternionic.len(), 8);
        assert_eq!(quaternionic.iter().filter(|&&i| v[i] == minus_one).count(), 1);
        assert!(nu2.iter().all(|x| [-1, 0, 1].iter().any(|&k| *x == Cyc::from_ratio(k, 1))));
    }

    #[test]
    fn ribbon_census_of_odd_q8_classes() {
        let minus_i = Cyc::root_of_unity(3, 4);
        let mut hits = Vec::new();
        for c in [1, 3, 5, 7] {
            let (d, _, s) = setup(&quaternion(), &[c]);
            let ct = characters(&s);
            let v = ribbon_scalars(&d, &ct);
            let n = (0..ct.len()).filter(|&i| ct.dims[i] == 1 && v[i] == minus_i).count();
            if n == 4 {
                hits.push(c);
            }
        }
        // γ and γ⁵ have four 1-dim simples with v = -i, γ³ and γ⁷ have v = i
        assert_eq!(hits.len(), 2, "{hits:?}");
        assert_eq!(hits[1], hits[0] + 4);
    }

    #[test]
    fn dual_indicators_are_conjugate() {
        for (g, class) in [(quaternion(), vec![3]), (d8(), vec![1, 0, 1])] {
            let (d, q, s) = setup(&g, &class);
            let ct = characters(&s);
            for i in 0..ct.len() {
                let dual: Vec<Cyc> = (0..q.dim as u32).map(|b| ct.eval(i, &q.s(&q.basis(b)))).collect();
                let j = ct.chars.iter().position(|c| *c == dual).expect("dual is simple");
                for n in 2..=8 {
                    assert_eq!(indicator(&d, &ct.chars[j], n), indicator(&d, &ct.chars[i], n).conj());
                }
            }
        }
    }

    #[test]
    fn fs_exponents_of_elementary_groups() {
        use crate::cohomology::elementary_h3_generators;
        use crate::groups::elementary_abelian;
        for l in 1..=5 {
            let g = elementary_abelian(l);
            assert_eq!(fs_exponent_cocycle(&Cochain3::trivial(&g, 2)).unwrap(), 2);
            let gens = elementary_h3_generators(l);
            for w in &gens {
                assert_eq!(fs_exponent_cocycle(w).unwrap(), 4);
            }
            let all = gens.iter().fold(Cochain3::trivial(&g, 2), |a, w| a.mul(w));
            assert_eq!(fs_exponent_cocycle(&all).unwrap(), 4);
        }
    }

    #[test]
    fn fs_exponents_of_q8() {
        let h = h3_group(&quaternion()).unwrap();
        for c in 0..8u32 {
            let expect = match h.class_order_of(&[c]) {
                1 | 2 => 4,
                4 => 8,
                _ => 16,
            };
            assert_eq!(fs_exponent_cocycle(&h.element(&[c])).unwrap(), expect, "{c}");
        }
    }

    #[test]
    fn fs_exponents_of_d8() {
        use crate::classify::onto_v;
        let g = d8();
        let h = h3_group(&g).unwrap();
        let proj = onto_v(&g);
        let hv = h3_group(&crate::groups::klein_four()).unwrap();
        let mut inflated: Vec<Vec<u32>> = hv.all_classes().iter().map(|c| h.decompose(&hv.element(c).inflate(&proj)).unwrap()).collect();
        inflated.sort();
        inflated.dedup();
        assert_eq!(inflated.len(), 4);
        for c in h.all_classes() {
            let expect = if inflated.contains(&c) {
                4
            } else if h.class_order_of(&c) == 4 {
                16
            } else {
                8
            };
            assert_eq!(fs_exponent_cocycle(&h.element(&c)).unwrap(), expect, "{c:?}");
        }
    }

    #[test]
    fn fs_exponent_of_inflated_cocycles_on_width_two() {
        use crate::cohomology::elementary_h3_generators;
        use crate::groups::{elementary_abelian, extraspecial, find_isomorphism, quotient_projection};
        for plus in [true, false] {
            let q = extraspecial(2, plus).unwrap();
            let (bar, proj) = quotient_projection(&q, &q.center()).unwrap();
            let e = elementary_abelian(4);
            let proj = proj.compose(&find_isomorphism(&bar, &e).unwrap());
            assert_eq!(fs_exponent_cocycle(&Cochain3::trivial(&q, 2)).unwrap(), 4);
            for w in elementary_h3_generators(4) {
                assert_eq!(fs_exponent_cocycle(&w.inflate(&proj)).unwrap(), 4);
            }
        }
    }

    #[test]
    fn float_mode_matches_exact() {
        for (g, class) in [(quaternion(), vec![1]), (d8(), vec![1, 1, 1]), (cyclic(2), vec![1])] {
            let (d, _, s) = setup(&g, &class);
            let exact = fingerprint(&d, &characters(&s), 32).unwrap();
            let (float, worst) = float_fingerprint(&d, 32, 1e-6).unwrap();
            assert_eq!(float, exact);
            assert!(worst < 1e-9, "{worst}");
        }
    }
}
