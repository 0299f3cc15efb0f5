use serde::{Deserialize, Serialize};

use super::labels::{onto_v, Catalog, DoubleLabel, Order8};
use super::ClassifyError;
use crate::cohomology::{h3_group, support, Cochain3};
use crate::double::{check_map, extension_maps, MapLevel, ExtensionMaps};
use crate::groups::{automorphisms, eps_dihedral, eps_quaternion, find_isomorphism, klein_four, v_by_z2, ExtensionData};
use crate::scalars::Cyc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Extension,
    Automorphism,
    ExtensionVerified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivalenceEdge {
    pub a: DoubleLabel,
    pub b: DoubleLabel,
    pub provenance: Provenance,
    /// Construction data: the extension and class on V, or the automorphism.
    pub data: String,
}

/// One extension instance: D^{ωζ_E}(V × Z2) ∼ D^{ζ_G}(G).
struct Instance {
    name: &'static str,
    ext: ExtensionData,
    zeta: Cochain3,
    zeta_name: String,
    /// Expected support of the E8-side class, as (V element, fiber element).
    support: Option<Vec<(usize, usize)>>,
}

fn v_classes() -> Result<Vec<(Vec<usize>, Cochain3)>, ClassifyError> {
    let hv = h3_group(&klein_four())?;
    hv.all_classes()
        .into_iter()
        .map(|c| {
            let w = hv.element(&c);
            Ok((support(&w)?, w))
        })
        .collect()
}

fn instances(cat: &Catalog) -> Result<Vec<Instance>, ClassifyError> {
    let vs = v_classes()?;
    let by_support = |s: &[usize]| vs.iter().find(|(t, _)| t == s).map(|(_, w)| w.clone()).expect("support realized");
    let dext = v_by_z2(eps_dihedral());
    let qext = v_by_z2(eps_quaternion());
    let mut out = vec![
        Instance { name: "ε_D", ext: dext.clone(), zeta: by_support(&[]), zeta_name: "1".into(), support: Some(vec![(3, 1)]) },
        Instance { name: "ε_Q", ext: qext.clone(), zeta: by_support(&[]), zeta_name: "1".into(), support: Some(vec![(1, 1), (2, 1), (3, 1)]) },
        Instance {
            name: "ε_D",
            ext: dext.clone(),
            zeta: by_support(&[1]),
            zeta_name: "supp {h1}".into(),
            support: Some(vec![(1, 0), (1, 1), (3, 1)]),
        },
        Instance {
            name: "ε_D",
            ext: dext.clone(),
            zeta: by_support(&[2]),
            zeta_name: "supp {h2}".into(),
            support: Some(vec![(2, 0), (2, 1), (3, 1)]),
        },
        Instance {
            name: "ε_D",
            ext: dext,
            zeta: by_support(&[1]).mul(&by_support(&[2])),
            zeta_name: "supp {h1, h2}".into(),
            support: Some(vec![(1, 0), (1, 1), (2, 0), (2, 1), (3, 1)]),
        },
    ];
    // γ⁴ is the nontrivial inflation from V.
    let (qg, hq) = (cat.group(Order8::Q8), cat.h3(Order8::Q8));
    let g4 = cat.resolve(&"Q8:g^4".parse()?)?.coeffs.clone();
    let zeta = vs
        .iter()
        .find(|(_, w)| hq.decompose(&w.inflate(&onto_v(qg))).map(|c| c == g4).unwrap_or(false))
        .ok_or_else(|| ClassifyError::Inconsistent("γ⁴ is not inflated from V".into()))?;
    out.push(Instance {
        name: "ε_Q",
        ext: qext,
        zeta: zeta.1.clone(),
        zeta_name: format!("supp {:?}", zeta.0),
        support: None,
    });
    Ok(out)
}

/// Edges from the extension family; with `verify`, each carries a checked
/// quasi-triangular quasi-Hopf isomorphism.
pub fn extension_edges(cat: &Catalog, verify: bool) -> Result<Vec<EquivalenceEdge>, ClassifyError> {
    let mut out = Vec::new();
    for inst in instances(cat)? {
        let r: ExtensionMaps<Cyc> = extension_maps(&inst.ext, &inst.zeta)?;
        let e_side = r.source.omega();
        if let Some(expect) = &inst.support {
            let mut want: Vec<usize> = expect.iter().map(|&(h, a)| h + 4 * a).collect();
            want.sort_unstable();
            if support(e_side)? != want {
                return Err(ClassifyError::Inconsistent(format!("support of the E8 side for {} with ζ {}", inst.name, inst.zeta_name)));
            }
        }
        let e8 = cat.group(Order8::E8);
        let iso = find_isomorphism(e8, &r.e).ok_or_else(|| ClassifyError::Inconsistent("V × Z2 is not E8".into()))?;
        let a = cat.locate(Order8::E8, &e_side.pullback(&iso))?.label.clone();
        let (go, gg) = if r.g == *cat.group(Order8::D8) {
            (Order8::D8, cat.group(Order8::D8))
        } else if r.g == *cat.group(Order8::Q8) {
            (Order8::Q8, cat.group(Order8::Q8))
        } else {
            return Err(ClassifyError::Inconsistent("unexpected extension group".into()));
        };
        let iso_g = find_isomorphism(gg, &r.g).ok_or_else(|| ClassifyError::Inconsistent("extension group".into()))?;
        let b = cat.locate(go, &r.untwisted_target.omega().pullback(&iso_g))?.label.clone();
        let provenance = if verify {
            let rep = check_map(&r.phi, &r.source.quasi_hopf(), &r.target, MapLevel::QuasiHopf);
            if !rep.all_pass() || !r.target.verify().all_pass() {
                return Err(ClassifyError::Inconsistent(format!("extension map for {a} ∼ {b} fails: {:?}", rep.failures())));
            }
            Provenance::ExtensionVerified
        } else {
            Provenance::Extension
        };
        out.push(EquivalenceEdge { a, b, provenance, data: format!("{} with ζ {}", inst.name, inst.zeta_name) });
    }
    Ok(out)
}

/// One edge per class moved by an automorphism, forming a spanning forest
/// of every orbit.
pub fn automorphism_edges(cat: &Catalog) -> Result<Vec<EquivalenceEdge>, ClassifyError> {
    let mut out = Vec::new();
    for o in Order8::ALL {
        let g = cat.group(o);
        let auts = if o == Order8::D8 { vec![cat.swap.clone()].into_iter().chain(automorphisms(g)?).collect() } else { automorphisms(g)? };
        let members: Vec<_> = cat.entries.iter().filter(|e| e.label.group == o).collect();
        let mut uf = super::UnionFind::new(members.len());
        for (i, e) in members.iter().enumerate() {
            for a in &auts {
                let img = cat.locate(o, &e.cocycle.pullback(a))?;
                let j = members.iter().position(|m| m.label == img.label).expect("catalog is closed under automorphisms");
                if uf.union(i, j) {
                    out.push(EquivalenceEdge {
                        a: e.label.clone(),
                        b: img.label.clone(),
                        provenance: Provenance::Automorphism,
                        data: format!("pullback along {:?}", a.map),
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Classes of each group grouped into automorphism orbits.
pub fn aut_orbits(cat: &Catalog, o: Order8) -> Result<Vec<Vec<DoubleLabel>>, ClassifyError> {
    let h = cat.h3(o);
    let g = cat.group(o);
    let auts = automorphisms(g)?;
    let classes = h.all_classes();
    let mut uf = super::UnionFind::new(classes.len());
    for (i, c) in classes.iter().enumerate() {
        let w = h.element(c);
        for a in &auts {
            let img = h.decompose(&w.pullback(a))?;
            let j = classes.iter().position(|d| *d == img).expect("closed");
            uf.union(i, j);
        }
    }
    let name = |c: &Vec<u32>| {
        cat.entries
            .iter()
            .find(|e| e.label.group == o && &e.coeffs == c)
            .map(|e| e.label.clone())
            .unwrap_or_else(|| DoubleLabel { group: o, class: format!("abelian{c:?}") })
    };
    Ok(uf.groups().into_iter().map(|b| b.into_iter().map(|i| name(&classes[i])).collect()).collect())
}
