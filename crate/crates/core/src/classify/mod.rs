//! Classification of the 88 noncommutative twisted doubles of order-8 groups.

mod reference;
mod chains;
mod edges;
mod labels;

pub use reference::{reference_tables, ReferenceBlock};
pub use chains::{
    bialgebra_step, catalog_fusion, family_chain, fusion_classes, fusion_of, index_two_instances, index_two_subgroups, random_cocycle, step_fusion_isomorphic, index_two_sweep, weight_chains, BialgebraStep,
    SweepResult,
};
pub use edges::{aut_orbits, automorphism_edges, extension_edges, EquivalenceEdge, Provenance};
pub use labels::{onto_v, Catalog, DoubleLabel, Entry, Order8};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::double::{DoubleError, DoubleTensors};
use crate::invariants::{fingerprint, fs_exponent_cocycle, Fingerprint, InvError};
use crate::representations::{characters, decompose_with, RepError};
use crate::scalars::Cyc;

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Double(#[from] DoubleError),
    #[error(transparent)]
    Group(#[from] crate::groups::GroupError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Invariant(#[from] InvError),
    #[error("unknown label {0}")]
    Label(String),
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// True when the two were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }

    pub fn groups(&mut self) -> Vec<Vec<usize>> {
        let mut m: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..self.parent.len() {
            let r = self.find(i);
            m.entry(r).or_default().push(i);
        }
        m.into_values().collect()
    }
}

pub fn fingerprint_hash(f: &Fingerprint) -> String {
    let digest = Sha256::digest(f.to_json().as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

/// Invariants of one double.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Profile {
    pub label: DoubleLabel,
    pub fingerprint: Fingerprint,
    pub fs_exponent_cocycle: u32,
}

pub fn profile(entry: &Entry) -> Result<Profile, ClassifyError> {
    let d = DoubleTensors::build(&entry.cocycle)?;
    let q = d.quasi_hopf::<Cyc>();
    let simples = decompose_with(&d, &q)?;
    let ct = characters(&simples);
    Ok(Profile {
        label: entry.label.clone(),
        fingerprint: fingerprint(&d, &ct, 64)?,
        fs_exponent_cocycle: fs_exponent_cocycle(&entry.cocycle)?,
    })
}

/// Sets of classes predicted to share indicator sequences.
pub const INDICATOR_SETS: [(&str, &[&str]); 11] = [
    ("μ1", &["E8:w1", "E8:w7"]),
    ("μ2", &["E8:w3i", "E8:w3d", "E8:w5"]),
    ("η0", &["D8:1"]),
    ("η1", &["D8:a1", "D8:a2", "D8:a1a2"]),
    ("η2", &["D8:a1a3", "D8:a2a3", "D8:a1a3^3", "D8:a2a3^3"]),
    ("η3", &["D8:a3", "D8:a3^3", "D8:a1a2a3", "D8:a1a2a3^3"]),
    ("η4", &["D8:a1a3^2", "D8:a2a3^2", "D8:a1a2a3^2"]),
    ("η5", &["D8:a3^2"]),
    ("γ0", &["Q8:1", "Q8:g^4"]),
    ("γ1", &["Q8:g^2", "Q8:g^6"]),
    ("γ2", &["Q8:g", "Q8:g^3", "Q8:g^5", "Q8:g^7"]),
];

/// Frobenius-Schur exponent of each indicator set.
pub const EXPONENT_STRATA: [(u32, &[&str]); 3] = [
    (4, &["μ1", "μ2", "η0", "η1", "γ0"]),
    (8, &["η4", "η5", "γ1"]),
    (16, &["η2", "η3", "γ2"]),
];

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassRecord {
    pub members: Vec<DoubleLabel>,
    pub families: Vec<String>,
    pub fs_exponent: u32,
    pub fingerprint_hash: String,
}

/// Machine-checkable summary of the classification.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Certificate {
    pub doubles: usize,
    pub classes: Vec<ClassRecord>,
    pub edges: Vec<EquivalenceEdge>,
    pub edge_class_count: usize,
    pub fingerprint_class_count: usize,
    pub partitions_coincide: bool,
    /// Families grouped by indicator sequences alone (ribbon scalars dropped).
    pub indicator_groups: Vec<Vec<String>>,
    pub indicator_sets_match: bool,
    pub exponent_strata_match: bool,
    pub exponents_agree: bool,
    pub tables_match: bool,
    pub edges_respect_fingerprints: bool,
}

impl Certificate {
    pub fn ok(&self) -> bool {
        self.doubles == 88
            && self.edge_class_count == 20
            && self.fingerprint_class_count == 20
            && self.partitions_coincide
            && self.indicator_groups.len() == 8
            && self.indicator_sets_match
            && self.exponent_strata_match
            && self.exponents_agree
            && self.tables_match
            && self.edges_respect_fingerprints
    }
}

fn partition<K: Ord>(keys: &[K]) -> Vec<Vec<usize>> {
    let mut m: BTreeMap<&K, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        m.entry(k).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = m.into_values().collect();
    out.sort();
    out
}

/// Classifies from precomputed profiles (in catalog order).
pub fn certify(cat: &Catalog, profiles: &[Profile], edges: Vec<EquivalenceEdge>) -> Certificate {
    let n = cat.entries.len();
    let index = |l: &DoubleLabel| cat.entries.iter().position(|e| &e.label == l).expect("edge endpoints are catalog labels");
    let mut uf = UnionFind::new(n);
    for e in &edges {
        uf.union(index(&e.a), index(&e.b));
    }
    let mut by_edges = uf.groups();
    by_edges.sort();
    let hashes: Vec<String> = profiles.iter().map(|p| fingerprint_hash(&p.fingerprint)).collect();
    let by_fp = partition(&hashes);
    let edges_respect_fingerprints = edges.iter().all(|e| profiles[index(&e.a)].fingerprint == profiles[index(&e.b)].fingerprint);

    let family = |i: usize| cat.entries[i].label.family();
    let ind: Vec<Fingerprint> = profiles.iter().map(|p| p.fingerprint.indicators_only()).collect();
    let ind_groups = partition(&ind);
    let mut indicator_groups: Vec<Vec<String>> = ind_groups
        .iter()
        .map(|g| {
            let mut f: Vec<String> = g.iter().map(|&i| family(i)).collect();
            f.sort();
            f.dedup();
            f
        })
        .collect();
    indicator_groups.sort();
    let group_of = |fam: &str| indicator_groups.iter().position(|g| g.iter().any(|f| f == fam));
    let indicator_sets_match = INDICATOR_SETS.iter().all(|(_, fams)| {
        let g: Vec<_> = fams.iter().map(|f| group_of(f)).collect();
        g[0].is_some() && g.iter().all(|x| *x == g[0])
    }) && indicator_groups.iter().all(|g| {
        // every group is a union of whole sets
        INDICATOR_SETS
            .iter()
            .filter(|(_, fams)| fams.iter().any(|f| g.contains(&f.to_string())))
            .all(|(_, fams)| fams.iter().all(|f| g.contains(&f.to_string())))
    });

    let exp_of_family = |fam: &str| {
        let v: Vec<u32> = (0..n).filter(|&i| family(i) == fam).map(|i| profiles[i].fingerprint.exponent).collect();
        v
    };
    let exponent_strata_match = EXPONENT_STRATA.iter().all(|(f, sets)| {
        sets.iter().all(|s| {
            let fams = INDICATOR_SETS.iter().find(|(name, _)| name == s).expect("named set").1;
            fams.iter().all(|fam| {
                let v = exp_of_family(fam);
                !v.is_empty() && v.iter().all(|e| e == f)
            })
        })
    });
    let exponents_agree = profiles.iter().all(|p| p.fingerprint.exponent == p.fs_exponent_cocycle);

    let blocks = reference_tables();
    let tables_match = blocks.iter().all(|b| {
        let members: Vec<usize> = (0..n).filter(|&i| b.labels.contains(&family(i))).collect();
        let classes: Vec<usize> = members.iter().map(|&i| by_edges.iter().position(|g| g.contains(&i)).expect("covered")).collect();
        !members.is_empty()
            && classes.iter().all(|c| *c == classes[0])
            && members.iter().all(|&i| profiles[i].fingerprint == b.fingerprint)
    }) && (0..n).all(|i| blocks.iter().any(|b| b.labels.contains(&family(i))));

    let classes = by_edges
        .iter()
        .map(|g| {
            let mut fams: Vec<String> = g.iter().map(|&i| family(i)).collect();
            fams.sort();
            fams.dedup();
            ClassRecord {
                members: g.iter().map(|&i| cat.entries[i].label.clone()).collect(),
                families: fams,
                fs_exponent: profiles[g[0]].fingerprint.exponent,
                fingerprint_hash: hashes[g[0]].clone(),
            }
        })
        .collect();
    Certificate {
        doubles: n,
        classes,
        edge_class_count: by_edges.len(),
        fingerprint_class_count: by_fp.len(),
        partitions_coincide: by_edges == by_fp,
        edges,
        indicator_groups,
        indicator_sets_match,
        exponent_strata_match,
        exponents_agree,
        tables_match,
        edges_respect_fingerprints,
    }
}

/// Runs `f` on a pool of `jobs` threads (0 picks the default).
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Profiles of every catalog entry, computed in parallel.
pub fn profiles(cat: &Catalog) -> Result<Vec<Profile>, ClassifyError> {
    cat.entries.par_iter().map(profile).collect()
}

/// Full pipeline: catalog, invariants of all 88 doubles, edges, certificate.
pub fn classify(verify_maps: bool) -> Result<(Catalog, Vec<Profile>, Certificate), ClassifyError> {
    let cat = Catalog::new()?;
    let profiles = profiles(&cat)?;
    let mut edges = extension_edges(&cat, verify_maps)?;
    edges.extend(automorphism_edges(&cat)?);
    let cert = certify(&cat, &profiles, edges);
    Ok((cat, profiles, cert))
}
