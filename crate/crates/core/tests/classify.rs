use tqd_core::classify::{aut_orbits, classify, Catalog, Order8, Provenance};

#[test]
fn exactly_twenty_classes() {
    let (cat, _profiles, cert) = classify(true).unwrap();
    assert_eq!(cat.entries.len(), 88);
    assert_eq!(cert.edge_class_count, 20);
    assert_eq!(cert.fingerprint_class_count, 20);
    assert!(cert.partitions_coincide);
    assert_eq!(cert.indicator_groups.len(), 8, "{:?}", cert.indicator_groups);
    assert!(cert.indicator_sets_match);
    assert!(cert.exponent_strata_match);
    assert!(cert.exponents_agree);
    assert!(cert.tables_match);
    assert!(cert.edges_respect_fingerprints);
    assert!(cert.ok());
    let verified = cert.edges.iter().filter(|e| e.provenance == Provenance::ExtensionVerified).count();
    assert_eq!(verified, 6);
}

#[test]
fn orbit_structure() {
    let cat = Catalog::new().unwrap();
    let mut e8: Vec<usize> = aut_orbits(&cat, Order8::E8).unwrap().iter().map(|o| o.len()).collect();
    e8.sort_unstable();
    // weights 0..7: 1 | 7 | 21 | 7 + 28 | 7 + 28 | 21 | 7 | 1
    assert_eq!(e8, vec![1, 1, 7, 7, 7, 7, 21, 21, 28, 28]);
    let q8 = aut_orbits(&cat, Order8::Q8).unwrap();
    assert_eq!(q8.len(), 8);
    let d8 = aut_orbits(&cat, Order8::D8).unwrap();
    let pair = d8.iter().find(|o| o.iter().any(|l| l.class == "a1")).unwrap();
    let mut names: Vec<_> = pair.iter().map(|l| l.class.as_str()).collect();
    names.sort_unstable();
    assert_eq!(names, vec!["a1", "a2"]);
    let a3 = d8.iter().find(|o| o.iter().any(|l| l.class == "a3")).unwrap();
    assert_eq!(a3.len(), 1);
}
