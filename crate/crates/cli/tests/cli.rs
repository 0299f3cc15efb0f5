use std::process::{Command, Output};

use tqd_core::invariants::Fingerprint;

fn tqd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tqd")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_reports_every_axiom() {
    for label in ["Q8:g", "E8:w7"] {
        let o = tqd(&["build", label]);
        assert_eq!(o.status.code(), Some(0), "{label}");
        let out = stdout(&o);
        assert!(out.contains("pentagon") && out.contains("pass"));
        assert!(!out.contains("FAIL"));
    }
}

#[test]
fn malformed_labels_are_usage_errors() {
    let o = tqd(&["build", "Q8g"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed label"));
    assert_eq!(tqd(&["build", "Q8:zz"]).status.code(), Some(1));
}

#[test]
fn q8_table_block() {
    let o = tqd(&["tables", "Q8:g", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let f: Fingerprint = serde_json::from_value(v[0]["blocks"][0]["fingerprint"].clone()).unwrap();
    assert_eq!(f.exponent, 16);
    let mut m: Vec<usize> = f.records.iter().map(|r| r.multiplicity).collect();
    m.sort_unstable();
    assert_eq!(m, vec![1, 1, 1, 3, 3, 3, 3, 3, 4]);

    let single: Fingerprint = serde_json::from_str(&stdout(&tqd(&["fingerprint", "Q8:g"]))).unwrap();
    assert_eq!(single, f);
}

#[test]
fn csv_and_markdown_headings() {
    let csv = stdout(&tqd(&["tables", "D8", "--format", "csv"]));
    let heads: Vec<&str> = csv.lines().filter(|l| l.starts_with('#')).collect();
    assert_eq!(heads, vec!["# Frobenius-Schur Exponent 16", "# Frobenius-Schur Exponent 8", "# Frobenius-Schur Exponent 4"]);
    assert!(csv.contains("block,χ(1),ν^(2)"));
    let md = stdout(&tqd(&["tables", "Q8", "--format", "markdown"]));
    assert!(md.contains("## Frobenius-Schur Exponent 16"));
}

#[test]
fn cohomology_reports() {
    assert!(stdout(&tqd(&["cohomology", "D8"])).contains("[2, 2, 4]"));
    assert!(stdout(&tqd(&["cohomology", "Q8"])).contains("[8]"));
    let e8 = stdout(&tqd(&["cohomology", "E8"]));
    for line in ["weight 1: 7", "weight 3: 35", "weight 5: 21", "weight 7: 1", "7 dependent, 28 independent"] {
        assert!(e8.contains(line), "{line}");
    }
    assert_eq!(tqd(&["cohomology", "nonsense"]).status.code(), Some(1));
}

#[test]
fn fsexp_strata() {
    let out = stdout(&tqd(&["fsexp"]));
    let line = |f: &str| out.lines().find(|l| l.trim_start().starts_with(f)).unwrap().to_string();
    assert!(line("16:").contains("Q8:g^3") && line("16:").contains("D8:a3"));
    assert!(line("8:").contains("Q8:g^2") && line("8:").contains("D8:a3^2"));
    assert!(line("4:").contains("E8:w7") && line("4:").contains("D8:1"));
}

#[test]
fn cache_round_trip_and_tamper() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let plain = stdout(&tqd(&["fingerprint", "D8:a1a3"]));
    let first = stdout(&tqd(&["fingerprint", "D8:a1a3", "--cache-dir", d]));
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = stdout(&tqd(&["fingerprint", "D8:a1a3", "--cache-dir", d]));
    let path = files[0].as_ref().unwrap().path();
    let text = std::fs::read_to_string(&path).unwrap().replace("\"exponent\": 16", "\"exponent\": 8");
    std::fs::write(&path, text).unwrap();
    let third = stdout(&tqd(&["fingerprint", "D8:a1a3", "--cache-dir", d]));
    assert_eq!(plain, first);
    assert_eq!(plain, second);
    assert_eq!(plain, third);
}

#[test]
fn float_snap_matches_exact() {
    for label in ["Q8:g", "D8:a1a2a3^2", "E8:w1{1}"] {
        let exact = tqd(&["fingerprint", label]);
        let float = tqd(&["fingerprint", label, "--mode", "float-snap", "--tol", "1e-6"]);
        assert_eq!(exact.status.code(), Some(0), "{label}");
        assert_eq!(stdout(&exact), stdout(&float), "{label}");
    }
    assert_ne!(tqd(&["fingerprint", "Q8:g", "--tol", "0"]).status.code(), Some(0));
}

#[test]
fn verify_group_with_maps() {
    let o = tqd(&["verify", "Q8", "--maps", "--trials", "2", "--seed", "7", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("8/8 doubles pass every axiom"));
    assert!(out.contains("extension maps verified as quasi-Hopf isomorphisms: 6"));
}

#[test]
fn classify_certifies_twenty() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cert.json");
    let o = tqd(&["classify", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(cert["edge_class_count"], 20);
    assert_eq!(cert["fingerprint_class_count"], 20);
    assert!(String::from_utf8_lossy(&o.stderr).contains("20 edge classes"));
}
