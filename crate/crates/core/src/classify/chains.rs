use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::labels::{Catalog, DoubleLabel, Entry, Order8};
use super::ClassifyError;
use crate::cohomology::{Cochain2, Cochain3};
use crate::double::{check_map, index_two_map, DoubleTensors, MapLevel, QuasiHopf};
use crate::groups::{Elem, Group};
use crate::representations::{characters, decompose_with, fusion_isomorphic, fusion_rules, FusionRules};
use crate::scalars::Cyc;

/// Subgroups of index 2, each as a sorted element list.
pub fn index_two_subgroups(g: &Group) -> Vec<Vec<Elem>> {
    let n = g.order();
    let mut out: Vec<Vec<Elem>> = Vec::new();
    for x in 1..n {
        for y in x + 1..n {
            let mut h = g.generated(&[x, y]);
            if h.len() * 2 != n {
                h = g.generated(&[x]);
            }
            if h.len() * 2 == n {
                h.sort_unstable();
                if !out.contains(&h) {
                    out.push(h);
                }
            }
        }
    }
    out.sort();
    out
}

/// One application of the index-2 bialgebra isomorphism between catalog doubles.
#[derive(Clone, Debug, Serialize)]
pub struct BialgebraStep {
    pub source: DoubleLabel,
    pub target: DoubleLabel,
    pub subgroup: Vec<Elem>,
    pub bialgebra: bool,
    pub quasi_bialgebra: bool,
}

fn quasi_hopf(w: &Cochain3) -> Result<QuasiHopf<Cyc>, ClassifyError> {
    Ok(DoubleTensors::build(w)?.quasi_hopf())
}

/// Applies the map for N to the double of `source` and locates the target.
pub fn bialgebra_step(cat: &Catalog, source: &Entry, normal: &[Elem]) -> Result<BialgebraStep, ClassifyError> {
    let o = source.label.group;
    let (f, w) = index_two_map::<Cyc>(cat.group(o), normal, &source.cocycle)?;
    let target = cat.locate(o, &w)?;
    let (q1, q2) = (quasi_hopf(&source.cocycle)?, quasi_hopf(&w)?);
    Ok(BialgebraStep {
        source: source.label.clone(),
        target: target.label.clone(),
        subgroup: normal.to_vec(),
        bialgebra: check_map(&f, &q1, &q2, MapLevel::Bialgebra).all_pass(),
        quasi_bialgebra: check_map(&f, &q1, &q2, MapLevel::QuasiBialgebra).all_pass(),
    })
}

/// Walks from the first member of the first family through the listed E8
/// families, one index-2 step at a time.
pub fn family_chain(cat: &Catalog, families: &[&str]) -> Result<Vec<BialgebraStep>, ClassifyError> {
    let subgroups = index_two_subgroups(cat.group(Order8::E8));
    let mut cur = cat.resolve(&format!("E8:{}", families[0]).parse()?)?;
    let mut steps = Vec::new();
    for fam in &families[1..] {
        let mut found = None;
        for n in &subgroups {
            let step = bialgebra_step(cat, cur, n)?;
            if step.target.family() == format!("E8:{fam}") {
                found = Some(step);
                break;
            }
        }
        let step = found.ok_or_else(|| ClassifyError::Inconsistent(format!("no index-2 step from {} to {fam}", cur.label)))?;
        cur = cat.resolve(&step.target)?;
        steps.push(step);
    }
    Ok(steps)
}

/// The two chains D^{ω1} ≅ D^{ω5} ≅ D^{ω3i} and D^{ω7} ≅ D^{ω3d}.
pub fn weight_chains(cat: &Catalog) -> Result<Vec<Vec<BialgebraStep>>, ClassifyError> {
    Ok(vec![family_chain(cat, &["w1", "w5", "w3i"])?, family_chain(cat, &["w7", "w3d"])?])
}

/// Random 3-cocycle on g: a random class times a random coboundary.
pub fn random_cocycle<R: Rng>(cat: &Catalog, o: Order8, rng: &mut R) -> Cochain3 {
    let h = cat.h3(o);
    let g = cat.group(o);
    let c: Vec<u32> = h.invariants.iter().map(|&d| rng.gen_range(0..d)).collect();
    let table: Vec<Vec<i64>> = g.elements().map(|_| g.elements().map(|_| rng.gen_range(0..8)).collect()).collect();
    let b = Cochain2::from_fn(g, 8, |x, y| if x == 0 || y == 0 { 0 } else { table[x][y] }).expect("normalized");
    h.element(&c).mul(&Cochain3::coboundary(&b))
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub subgroup: Vec<Elem>,
    pub trials: usize,
    pub passed: usize,
}

/// Bialgebra-level check of the index-2 map on every index-2 subgroup of E8
/// against `trials` random cocycles each.
pub fn index_two_sweep<R: Rng>(cat: &Catalog, trials: usize, rng: &mut R) -> Result<Vec<SweepResult>, ClassifyError> {
    let g = cat.group(Order8::E8);
    let mut out = Vec::new();
    for n in index_two_subgroups(g) {
        let mut passed = 0;
        for _ in 0..trials {
            let w = random_cocycle(cat, Order8::E8, rng);
            let (f, t) = index_two_map::<Cyc>(g, &n, &w)?;
            if check_map(&f, &quasi_hopf(&w)?, &quasi_hopf(&t)?, MapLevel::Bialgebra).all_pass() {
                passed += 1;
            }
        }
        out.push(SweepResult { subgroup: n, trials, passed });
    }
    Ok(out)
}

/// Fusion rules and simple dimensions of a double.
pub fn fusion_of(w: &Cochain3) -> Result<(FusionRules, Vec<usize>), ClassifyError> {
    let d = DoubleTensors::build(w)?;
    let q = d.quasi_hopf::<Cyc>();
    let ct = characters(&decompose_with(&d, &q)?);
    Ok((fusion_rules(&ct, &q)?, ct.dims))
}

/// Fusion rings of the two ends of each step are isomorphic.
pub fn step_fusion_isomorphic(cat: &Catalog, step: &BialgebraStep) -> Result<bool, ClassifyError> {
    let (a, da) = fusion_of(&cat.resolve(&step.source)?.cocycle)?;
    let (b, db) = fusion_of(&cat.resolve(&step.target)?.cocycle)?;
    Ok(fusion_isomorphic(&a, &b, &da, &db).is_some())
}

/// Fusion rings of all catalog entries, in catalog order.
pub fn catalog_fusion(cat: &Catalog) -> Result<Vec<(FusionRules, Vec<usize>)>, ClassifyError> {
    cat.entries.par_iter().map(|e| fusion_of(&e.cocycle)).collect()
}

/// Partition of the catalog by fusion-ring isomorphism.
pub fn fusion_classes(cat: &Catalog, rings: &[(FusionRules, Vec<usize>)]) -> Vec<Vec<DoubleLabel>> {
    let mut reps: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<DoubleLabel>> = Vec::new();
    for (i, (n, d)) in rings.iter().enumerate() {
        match reps.iter().position(|&r| fusion_isomorphic(&rings[r].0, n, &rings[r].1, d).is_some()) {
            Some(c) => out[c].push(cat.entries[i].label.clone()),
            None => {
                reps.push(i);
                out.push(vec![cat.entries[i].label.clone()]);
            }
        }
    }
    out
}

/// Every index-2 step between catalog doubles, with the bialgebra check and
/// whether the two fusion rings are isomorphic.
pub fn index_two_instances(cat: &Catalog, rings: &[(FusionRules, Vec<usize>)]) -> Result<Vec<(BialgebraStep, bool)>, ClassifyError> {
    let pos = |l: &DoubleLabel| cat.entries.iter().position(|e| &e.label == l).expect("catalog label");
    let mut out = Vec::new();
    for e in &cat.entries {
        for n in index_two_subgroups(cat.group(e.label.group)) {
            let step = bialgebra_step(cat, e, &n)?;
            let (a, b) = (&rings[pos(&step.source)], &rings[pos(&step.target)]);
            let iso = fusion_isomorphic(&a.0, &b.0, &a.1, &b.1).is_some();
            out.push((step, iso));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{d8, elementary_abelian, quaternion};

    #[test]
    fn index_two_counts() {
        assert_eq!(index_two_subgroups(&elementary_abelian(3)).len(), 7);
        assert_eq!(index_two_subgroups(&d8()).len(), 3);
        assert_eq!(index_two_subgroups(&quaternion()).len(), 3);
    }
}
