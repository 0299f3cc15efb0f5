use serde::Serialize;

use super::algebra::QuasiHopf;
use super::tensor::Tensor;
use crate::scalars::Scalar;

const TOL: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub pass: bool,
    /// Basis tuple where the check first failed.
    pub witness: Option<Vec<u32>>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Report {
    pub results: Vec<AxiomResult>,
}

impl Report {
    pub fn push(&mut self, axiom: &str, witness: Option<Vec<u32>>) {
        self.results.push(AxiomResult { axiom: axiom.to_string(), pass: witness.is_none(), witness });
    }

    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> Vec<&AxiomResult> {
        self.results.iter().filter(|r| !r.pass).collect()
    }

    pub fn passed(&self, axiom: &str) -> Option<bool> {
        self.results.iter().find(|r| r.axiom == axiom).map(|r| r.pass)
    }
}

/// How Φ_{ijk} is read: `Source` puts leg label[p] of Φ at position p,
/// `Position` sends leg p of Φ to position label[p].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegConvention {
    Source,
    Position,
}

/// Φ with legs relabelled, 1-based labels.
pub fn relabel<S: Scalar>(t: &Tensor<S>, labels: [usize; 3], conv: LegConvention) -> Tensor<S> {
    let pos: Vec<usize> = match conv {
        LegConvention::Position => labels.iter().map(|l| l - 1).collect(),
        LegConvention::Source => {
            let mut p = vec![0; 3];
            for (i, &l) in labels.iter().enumerate() {
                p[l - 1] = i;
            }
            p
        }
    };
    t.permute(&pos)
}

fn first<T>(it: impl IntoIterator<Item = Option<T>>) -> Option<T> {
    it.into_iter().flatten().next()
}

fn cmp<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>, input: &[u32]) -> Option<Vec<u32>> {
    (!a.approx_eq(b, TOL)).then(|| input.to_vec())
}

fn cmp_global<S: Scalar>(a: &Tensor<S>, b: &Tensor<S>) -> Option<Vec<u32>> {
    a.diff_witness(b, TOL)
}

impl<S: Scalar> QuasiHopf<S> {
    /// Σ c · X¹ m₁ X² m₂ ... over the terms of a k-leg tensor.
    pub fn collapse(&self, t: &Tensor<S>, mids: &[&Tensor<S>]) -> Tensor<S> {
        assert_eq!(mids.len() + 1, t.legs());
        let mut out = Tensor::new(1);
        for (fs, c) in self.factors(t) {
            let mut acc = fs[0].clone();
            for (m, f) in mids.iter().zip(&fs[1..]) {
                acc = self.tmul(&self.tmul(&acc, m), f);
            }
            out = out.add(&acc.scale(&c));
        }
        out
    }

    fn basis_range(&self) -> std::ops::Range<u32> {
        0..self.dim as u32
    }

    fn check_associativity(&self) -> Option<Vec<u32>> {
        let d = self.basis_range();
        first(d.clone().flat_map(|a| {
            let d = d.clone();
            d.clone().flat_map(move |b| d.clone().map(move |c| (a, b, c)))
        }).map(|(a, b, c)| {
            let left = self.mul_basis(a, b).and_then(|(ab, s)| self.mul_basis(*ab, c).map(|(p, t)| (*p, s.mul_ref(t))));
            let right = self.mul_basis(b, c).and_then(|(bc, s)| self.mul_basis(a, *bc).map(|(p, t)| (*p, s.mul_ref(t))));
            let ok = match (left, right) {
                (None, None) => true,
                (Some((p, s)), Some((q, t))) => p == q && s.close_to(&t, TOL) && (!S::EXACT || s == t),
                _ => false,
            };
            (!ok).then(|| vec![a, b, c])
        }))
    }

    fn check_unit(&self) -> Option<Vec<u32>> {
        first(self.basis_range().map(|b| {
            let x = self.basis(b);
            (!(self.tmul(&self.unit, &x).approx_eq(&x, TOL) && self.tmul(&x, &self.unit).approx_eq(&x, TOL))).then(|| vec![b])
        }))
    }

    fn check_counit_mult(&self) -> Option<Vec<u32>> {
        if !self.eps(&self.unit).close_to(&S::one(), TOL) {
            return Some(vec![]);
        }
        let d = self.basis_range();
        first(d.clone().flat_map(|a| d.clone().map(move |b| (a, b))).map(|(a, b)| {
            let lhs = self.eps(&self.tmul(&self.basis(a), &self.basis(b)));
            let rhs = self.counit[a as usize].mul_ref(&self.counit[b as usize]);
            (!lhs.close_to(&rhs, TOL) || (S::EXACT && lhs != rhs)).then(|| vec![a, b])
        }))
    }

    fn check_counit(&self) -> Option<Vec<u32>> {
        first(self.basis_range().map(|b| {
            let dl = &self.comult[b as usize];
            let x = self.basis(b);
            let ok = self.eps_leg(dl, 0).approx_eq(&x, TOL) && self.eps_leg(dl, 1).approx_eq(&x, TOL);
            (!ok).then(|| vec![b])
        }))
    }

    fn check_comult_mult(&self) -> Option<Vec<u32>> {
        if let Some(w) = cmp(&self.delta(&self.unit), &self.one(2), &[]) {
            return Some(w);
        }
        let d = self.basis_range();
        first(d.clone().flat_map(|a| d.clone().map(move |b| (a, b))).map(|(a, b)| {
            let lhs = self.tmul(&self.comult[a as usize], &self.comult[b as usize]);
            let rhs = self.delta(&self.tmul(&self.basis(a), &self.basis(b)));
            cmp(&lhs, &rhs, &[a, b])
        }))
    }

    fn check_quasi_coassoc(&self) -> Option<Vec<u32>> {
        first(self.basis_range().map(|b| {
            let dl = &self.comult[b as usize];
            let left = self.tmul(&self.phi, &self.delta_leg(dl, 0));
            let right = self.tmul(&self.delta_leg(dl, 1), &self.phi);
            cmp(&left, &right, &[b])
        }))
    }

    fn check_pentagon(&self) -> Option<Vec<u32>> {
        let lhs = self.tmul(&self.delta_leg(&self.phi, 2), &self.delta_leg(&self.phi, 0));
        let one_phi = Tensor::outer(&self.unit, &self.phi);
        let phi_one = Tensor::outer(&self.phi, &self.unit);
        let rhs = self.tmul_all(&[&one_phi, &self.delta_leg(&self.phi, 1), &phi_one]);
        cmp_global(&lhs, &rhs)
    }

    fn check_associator_counital(&self) -> Option<Vec<u32>> {
        let one = self.one(2);
        first((0..3).map(|i| cmp(&self.eps_leg(&self.phi, i), &one, &[i as u32])))
    }

    fn check_associator_inverse(&self) -> Option<Vec<u32>> {
        let one = self.one(3);
        cmp_global(&self.tmul(&self.phi, &self.phi_inv), &one).or_else(|| cmp_global(&self.tmul(&self.phi_inv, &self.phi), &one))
    }

    fn check_antipode_anti(&self) -> Option<Vec<u32>> {
        if let Some(w) = cmp(&self.s(&self.unit), &self.unit, &[]) {
            return Some(w);
        }
        let d = self.basis_range();
        first(d.clone().flat_map(|a| d.clone().map(move |b| (a, b))).map(|(a, b)| {
            let lhs = self.s(&self.tmul(&self.basis(a), &self.basis(b)));
            let rhs = self.tmul(&self.antipode[b as usize], &self.antipode[a as usize]);
            cmp(&lhs, &rhs, &[a, b])
        }))
    }

    fn check_antipode_alpha_beta(&self) -> Option<Vec<u32>> {
        first(self.basis_range().map(|b| {
            let dl = &self.comult[b as usize];
            let e = self.counit[b as usize].clone();
            let left = self.collapse(&self.s_leg(dl, 0), &[&self.alpha]);
            let right = self.collapse(&self.s_leg(dl, 1), &[&self.beta]);
            cmp(&left, &self.alpha.scale(&e), &[b]).or_else(|| cmp(&right, &self.beta.scale(&e), &[b]))
        }))
    }

    fn check_antipode_associator(&self) -> Option<Vec<u32>> {
        let one = self.one(1);
        let a = self.collapse(&self.s_leg(&self.phi, 1), &[&self.beta, &self.alpha]);
        let b = self.collapse(&self.s_leg(&self.s_leg(&self.phi_inv, 0), 2), &[&self.alpha, &self.beta]);
        cmp(&a, &one, &[0]).or_else(|| cmp(&b, &one, &[1]))
    }

    fn check_braiding(&self) -> Option<Vec<u32>> {
        first(self.basis_range().map(|b| {
            let dl = &self.comult[b as usize];
            let lhs = self.tmul(&dl.permute(&[1, 0]), &self.r);
            let rhs = self.tmul(&self.r, dl);
            cmp(&lhs, &rhs, &[b])
        }))
    }

    /// R_ij placed in three legs with the unit in the remaining one.
    fn r_legs(&self, i: usize, j: usize) -> Tensor<S> {
        let k = 3 - i - j;
        let t = self.r.insert_leg(2, &self.unit);
        let mut pos = [0usize; 3];
        pos[0] = i;
        pos[1] = j;
        pos[2] = k;
        t.permute(&pos)
    }

    fn check_hexagons(&self, conv: LegConvention) -> (Option<Vec<u32>>, Option<Vec<u32>>) {
        let p = |l| relabel(&self.phi, l, conv);
        let pi = |l| relabel(&self.phi_inv, l, conv);
        let lhs1 = self.delta_leg(&self.r, 0);
        let rhs1 = self.tmul_all(&[&p([3, 1, 2]), &self.r_legs(0, 2), &pi([1, 3, 2]), &self.r_legs(1, 2), &self.phi]);
        let lhs2 = self.delta_leg(&self.r, 1);
        let rhs2 = self.tmul_all(&[&pi([2, 3, 1]), &self.r_legs(0, 2), &p([2, 1, 3]), &self.r_legs(0, 1), &self.phi_inv]);
        (cmp_global(&lhs1, &rhs1), cmp_global(&lhs2, &rhs2))
    }

    /// Checks every quasi-triangular quasi-Hopf axiom on basis elements.
    pub fn verify(&self) -> Report {
        self.verify_with(LegConvention::Position)
    }

    pub fn verify_with(&self, conv: LegConvention) -> Report {
        let mut r = Report::default();
        r.push("associativity", self.check_associativity());
        r.push("unit", self.check_unit());
        r.push("counit_multiplicative", self.check_counit_mult());
        r.push("counit", self.check_counit());
        r.push("comultiplication_multiplicative", self.check_comult_mult());
        r.push("quasi_coassociativity", self.check_quasi_coassoc());
        r.push("pentagon", self.check_pentagon());
        r.push("associator_counital", self.check_associator_counital());
        r.push("associator_inverse", self.check_associator_inverse());
        r.push("antipode_antimultiplicative", self.check_antipode_anti());
        r.push("antipode_alpha_beta", self.check_antipode_alpha_beta());
        r.push("antipode_associator", self.check_antipode_associator());
        r.push("braiding", self.check_braiding());
        let (h1, h2) = self.check_hexagons(conv);
        r.push("hexagon_1", h1);
        r.push("hexagon_2", h2);
        r
    }
}
