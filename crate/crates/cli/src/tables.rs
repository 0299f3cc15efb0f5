//! Indicator tables grouped into blocks of doubles sharing a fingerprint.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use tqd_core::invariants::Fingerprint;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub labels: Vec<String>,
    pub fingerprint: Fingerprint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Section {
    pub exponent: u32,
    pub blocks: Vec<Block>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Markdown,
    Json,
}

/// Collapses (label, fingerprint) pairs into blocks, sections by descending exponent.
pub fn sections(items: &[(String, Fingerprint)]) -> Vec<Section> {
    let mut blocks: Vec<Block> = Vec::new();
    for (label, f) in items {
        match blocks.iter_mut().find(|b| &b.fingerprint == f) {
            Some(b) if !b.labels.contains(label) => b.labels.push(label.clone()),
            Some(_) => {}
            None => blocks.push(Block { labels: vec![label.clone()], fingerprint: f.clone() }),
        }
    }
    let mut exps: Vec<u32> = blocks.iter().map(|b| b.fingerprint.exponent).collect();
    exps.sort_unstable_by(|a, b| b.cmp(a));
    exps.dedup();
    exps.into_iter()
        .map(|e| Section { exponent: e, blocks: blocks.iter().filter(|b| b.fingerprint.exponent == e).cloned().collect() })
        .collect()
}

fn heading(e: u32) -> String {
    format!("Frobenius-Schur Exponent {e}")
}

fn columns(e: u32) -> Vec<String> {
    let mut c = vec!["χ(1)".to_string()];
    c.extend((2..e).map(|n| format!("ν^({n})")));
    c.push("v_χ".into());
    c.push("m".into());
    c
}

fn cells(r: &tqd_core::invariants::Record) -> Vec<String> {
    let mut c = vec![r.dim.to_string()];
    c.extend(r.indicators.iter().map(|x| pretty(x)));
    c.push(pretty(&r.ribbon));
    c.push(r.multiplicity.to_string());
    c
}

fn pretty(x: &str) -> String {
    x.replace('-', "−")
}

pub fn render(sections: &[Section], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Json => out = serde_json::to_string_pretty(sections).expect("tables serialize"),
        Format::Csv => {
            for s in sections {
                writeln!(out, "# {}", heading(s.exponent)).unwrap();
                writeln!(out, "block,{}", columns(s.exponent).join(",")).unwrap();
                for b in &s.blocks {
                    for r in &b.fingerprint.records {
                        writeln!(out, "{},{}", b.labels.join(" "), cells(r).join(",")).unwrap();
                    }
                }
            }
        }
        Format::Markdown => {
            for s in sections {
                writeln!(out, "## {}\n", heading(s.exponent)).unwrap();
                let cols = columns(s.exponent);
                for b in &s.blocks {
                    writeln!(out, "### {}\n", b.labels.join(", ")).unwrap();
                    writeln!(out, "| {} |", cols.join(" | ")).unwrap();
                    writeln!(out, "|{}", "---|".repeat(cols.len())).unwrap();
                    for r in &b.fingerprint.records {
                        writeln!(out, "| {} |", cells(r).join(" | ")).unwrap();
                    }
                    out.push('\n');
                }
            }
        }
    }
    out
}

/// Reads back the JSON form.
#[cfg(test)]
pub fn parse_json(text: &str) -> serde_json::Result<Vec<Section>> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(e: u32, v: &str) -> Fingerprint {
        Fingerprint::from_rows(e, [(1, vec!["1".to_string(); e as usize - 2], v.to_string())])
    }

    #[test]
    fn blocks_merge_and_sections_descend() {
        let items = vec![("a".into(), fp(4, "1")), ("b".into(), fp(8, "-1")), ("c".into(), fp(4, "1"))];
        let s = sections(&items);
        assert_eq!(s.iter().map(|s| s.exponent).collect::<Vec<_>>(), vec![8, 4]);
        assert_eq!(s[1].blocks[0].labels, vec!["a", "c"]);
        assert_eq!(parse_json(&render(&s, Format::Json)).unwrap(), s);
    }

    #[test]
    fn csv_header_follows_column_order() {
        let csv = render(&sections(&[("a".into(), fp(4, "-1"))]), Format::Csv);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# Frobenius-Schur Exponent 4");
        assert_eq!(lines[1], "block,χ(1),ν^(2),ν^(3),v_χ,m");
        assert_eq!(lines[2], "a,1,1,1,−1,1");
    }
}
