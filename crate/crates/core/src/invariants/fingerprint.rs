use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use num_complex::Complex64;

use super::{fs_exponent_indicator, indicator, ribbon_scalars, InvError};
use crate::double::DoubleTensors;
use crate::representations::{characters, decompose_with, CharTable};
use crate::scalars::{render, snap, Cyc};

/// One row of an indicator table: χ(1), ν^(2..f−1), v_χ and multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Record {
    pub dim: usize,
    pub indicators: Vec<String>,
    pub ribbon: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Fingerprint {
    pub exponent: u32,
    pub records: Vec<Record>,
}

fn canonical(x: &Cyc) -> String {
    let c = x.minimal_conductor();
    render(&x.restrict(c).unwrap_or_else(|| x.clone()))
}

impl Fingerprint {
    pub fn from_rows(exponent: u32, rows: impl IntoIterator<Item = (usize, Vec<String>, String)>) -> Self {
        let mut count: BTreeMap<(usize, Vec<String>, String), usize> = BTreeMap::new();
        for r in rows {
            *count.entry(r).or_default() += 1;
        }
        let records = count
            .into_iter()
            .map(|((dim, indicators, ribbon), multiplicity)| Record { dim, indicators, ribbon, multiplicity })
            .collect();
        Fingerprint { exponent, records }
    }

    pub fn simple_count(&self) -> usize {
        self.records.iter().map(|r| r.multiplicity).sum()
    }

    /// The same multiset with ribbon scalars forgotten.
    pub fn indicators_only(&self) -> Fingerprint {
        let rows = self
            .records
            .iter()
            .flat_map(|r| std::iter::repeat((r.dim, r.indicators.clone(), String::new())).take(r.multiplicity));
        Fingerprint::from_rows(self.exponent, rows)
    }

    /// Canonical JSON form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("fingerprints serialize")
    }
}

/// Fingerprint of a double from its character table.
pub fn fingerprint(d: &DoubleTensors, ct: &CharTable<Cyc>, max_n: usize) -> Result<Fingerprint, InvError> {
    let f = fs_exponent_indicator(d, ct, max_n)?;
    let ribbons = ribbon_scalars(d, ct);
    let rows = (0..ct.len()).map(|i| {
        let seq = (2..f as usize).map(|n| canonical(&indicator(d, &ct.chars[i], n))).collect();
        (ct.dims[i], seq, canonical(&ribbons[i]))
    });
    Ok(Fingerprint::from_rows(f, rows))
}

/// Float-mode fingerprint: every table entry is computed over Complex64,
/// then snapped to conductor 16 within `tol`. Also returns the largest
/// distance between a float entry and its snapped value.
pub fn float_fingerprint(d: &DoubleTensors, max_n: usize, tol: f64) -> Result<(Fingerprint, f64), InvError> {
    let q = d.quasi_hopf::<Complex64>();
    let simples = decompose_with(d, &q).map_err(|e| InvError::Snap(e.to_string()))?;
    let ct = characters(&simples);
    let f = fs_exponent_indicator(d, &ct, max_n)?;
    let ribbons = ribbon_scalars(d, &ct);
    let mut worst = 0f64;
    let mut snapped = |z: Complex64| -> Result<String, InvError> {
        let c = snap(z, 16, 1, tol).map_err(|e| InvError::Snap(e.to_string()))?;
        worst = worst.max((c.to_complex() - z).norm());
        Ok(canonical(&c))
    };
    let mut rows = Vec::new();
    for i in 0..ct.len() {
        let mut seq = Vec::new();
        for n in 2..f as usize {
            seq.push(snapped(indicator(d, &ct.chars[i], n))?);
        }
        rows.push((ct.dims[i], seq, snapped(ribbons[i])?));
    }
    Ok((Fingerprint::from_rows(f, rows), worst))
}
