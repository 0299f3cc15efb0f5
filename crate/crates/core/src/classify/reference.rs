//! Reference indicator tables, one block per family of doubles sharing a
//! fingerprint.

use crate::invariants::Fingerprint;

const TABLES: &str = include_str!("../../data/reference_tables.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReferenceBlock {
    /// Family labels such as "D8:a1a3" or "E8:w3i".
    pub labels: Vec<String>,
    pub fingerprint: Fingerprint,
}

pub fn reference_tables() -> Vec<ReferenceBlock> {
    let mut out = Vec::new();
    for chunk in TABLES.split("\n\n") {
        let lines: Vec<&str> = chunk.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).collect();
        if lines.is_empty() {
            continue;
        }
        let labels = lines[0].strip_prefix("block ").expect("block header").split_whitespace().map(String::from).collect();
        let exponent = lines[1].strip_prefix("exponent ").expect("exponent line").parse().expect("exponent");
        let mut rows = Vec::new();
        for l in &lines[2..] {
            let cells: Vec<&str> = l.split('|').map(str::trim).collect();
            let dim: usize = cells[0].parse().expect("dimension");
            let seq: Vec<String> = cells[1].split_whitespace().map(String::from).collect();
            let m: usize = cells[3].parse().expect("multiplicity");
            assert_eq!(seq.len() + 2, exponent as usize);
            rows.extend(std::iter::repeat((dim, seq, cells[2].to_string())).take(m));
        }
        out.push(ReferenceBlock { labels, fingerprint: Fingerprint::from_rows(exponent, rows) });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twenty_blocks_covering_all_families() {
        let a = reference_tables();
        assert_eq!(a.len(), 20);
        assert!(a.iter().all(|b| b.fingerprint.simple_count() == 22));
        let labels: Vec<_> = a.iter().flat_map(|b| b.labels.iter()).collect();
        assert_eq!(labels.len(), 29);
        let exps: Vec<u32> = a.iter().map(|b| b.fingerprint.exponent).collect();
        assert_eq!(exps.iter().filter(|&&e| e == 16).count(), 10);
        assert_eq!(exps.iter().filter(|&&e| e == 8).count(), 5);
        assert_eq!(exps.iter().filter(|&&e| e == 4).count(), 5);
    }
}
