use num_complex::Complex64;
use proptest::prelude::*;
use tqd_core::cohomology::{class_order, h3_group, support, Cochain2, Cochain3};
use tqd_core::double::DoubleTensors;
use tqd_core::groups::{automorphisms, d8, elementary_abelian, quaternion, Group};
use tqd_core::invariants::{fingerprint, indicator, PivotalData, Fingerprint};
use tqd_core::representations::{characters, decompose_with};
use tqd_core::scalars::{snap, Scalar};
use tqd_core::Cyc;

fn group(k: usize) -> Group {
    [quaternion(), d8(), elementary_abelian(3)][k % 3].clone()
}

fn cochain2(g: &Group, m: u32, vals: &[u32]) -> Cochain2 {
    let n = g.order();
    Cochain2::from_fn(g, m, |x, y| if x == 0 || y == 0 { 0 } else { vals[(x * n + y) % vals.len()] as i64 }).unwrap()
}

fn fingerprint_of(w: &Cochain3) -> Fingerprint {
    let d = DoubleTensors::build(w).unwrap();
    let q = d.quasi_hopf::<Cyc>();
    let ct = characters(&decompose_with(&d, &q).unwrap());
    fingerprint(&d, &ct, 64).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coboundaries_are_cocycles(k in 0usize..3, m in prop::sample::select(vec![2u32, 4, 8, 16]), vals in prop::collection::vec(0u32..16, 64)) {
        let g = group(k);
        let w = Cochain3::coboundary(&cochain2(&g, m, &vals));
        prop_assert!(w.is_cocycle());
        prop_assert_eq!(class_order(&w).unwrap(), 1);
    }

    #[test]
    fn class_data_ignores_coboundaries(k in 0usize..3, c in any::<u64>(), vals in prop::collection::vec(0u32..8, 64)) {
        let g = group(k);
        let h = h3_group(&g).unwrap();
        let coeffs: Vec<u32> = h.invariants.iter().enumerate().map(|(i, &d)| ((c >> (3 * i)) as u32) % d).collect();
        let w = h.element(&coeffs);
        let w2 = w.mul(&Cochain3::coboundary(&cochain2(&g, 8, &vals)));
        prop_assert_eq!(class_order(&w2).unwrap(), class_order(&w).unwrap());
        prop_assert_eq!(h.decompose(&w2).unwrap(), coeffs);
        if g.is_elementary_abelian_2() {
            prop_assert_eq!(support(&w2).unwrap(), support(&w).unwrap());
        }
    }

    #[test]
    fn pivotal_elements_per_double(k in 0usize..3, c in any::<u64>(), vals in prop::collection::vec(0u32..8, 64)) {
        let g = group(k);
        let h = h3_group(&g).unwrap();
        let coeffs: Vec<u32> = h.invariants.iter().enumerate().map(|(i, &d)| ((c >> (3 * i)) as u32) % d).collect();
        let w = h.element(&coeffs).mul(&Cochain3::coboundary(&cochain2(&g, 8, &vals)));
        let d = DoubleTensors::build(&w).unwrap();
        prop_assert!(PivotalData::<Cyc>::new(&d).check(&d.quasi_hopf()).is_ok());
    }

    #[test]
    fn roots_of_unity_snap_back(k in 0i64..16, p in 1i64..3) {
        let exact = Cyc::from_ratio(p, 1).mul_ref(&Cyc::root_of_unity(k, 16));
        prop_assert_eq!(&snap(exact.to_complex(), 16, 1, 1e-9).unwrap(), &exact);
        let noisy = exact.to_complex() + Complex64::new(3e-10, -2e-10);
        prop_assert_eq!(snap(noisy, 16, 1, 1e-9).unwrap(), Cyc::from_ratio(p, 1).mul_ref(&Cyc::root_of_unity(k, 16)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn fingerprints_are_gauge_invariant(k in 0usize..2, c in any::<u64>(), vals in prop::collection::vec(0u32..8, 64), a in any::<prop::sample::Index>()) {
        let g = group(k);
        let h = h3_group(&g).unwrap();
        let coeffs: Vec<u32> = h.invariants.iter().enumerate().map(|(i, &d)| ((c >> (3 * i)) as u32) % d).collect();
        let w = h.element(&coeffs);
        let base = fingerprint_of(&w);
        prop_assert_eq!(&fingerprint_of(&w.mul(&Cochain3::coboundary(&cochain2(&g, 8, &vals)))), &base);
        let auts = automorphisms(&g).unwrap();
        prop_assert_eq!(&fingerprint_of(&w.pullback(&auts[a.index(auts.len())])), &base);
    }

    #[test]
    fn dual_indicators_conjugate(k in 0usize..3, c in any::<u64>(), n in 2usize..9) {
        let g = group(k);
        let h = h3_group(&g).unwrap();
        let coeffs: Vec<u32> = h.invariants.iter().enumerate().map(|(i, &d)| ((c >> (3 * i)) as u32) % d).collect();
        let d = DoubleTensors::build(&h.element(&coeffs)).unwrap();
        let q = d.quasi_hopf::<Cyc>();
        let ct = characters(&decompose_with(&d, &q).unwrap());
        for i in 0..ct.len() {
            let dual: Vec<Cyc> = (0..q.dim as u32).map(|b| ct.eval(i, &q.s(&q.basis(b)))).collect();
            let j = ct.chars.iter().position(|x| *x == dual);
            prop_assert!(j.is_some());
            prop_assert_eq!(indicator(&d, &ct.chars[j.unwrap()], n), indicator(&d, &ct.chars[i], n).conj());
        }
    }
}
