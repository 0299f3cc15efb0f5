use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{reference_tables, ClassifyError};
use crate::cohomology::{h3_group, is_dependent, support, Cochain3, H3};
use crate::double::DoubleTensors;
use crate::groups::{automorphisms, d8, elementary_abelian, klein_four, quaternion, Group, GroupHom};
use crate::invariants::{fingerprint, Fingerprint};
use crate::representations::{characters, decompose_with};
use crate::scalars::Cyc;

/// The three groups of order 8 with noncommutative twisted doubles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Order8 {
    E8,
    D8,
    Q8,
}

impl Order8 {
    pub const ALL: [Order8; 3] = [Order8::E8, Order8::D8, Order8::Q8];

    pub fn group(self) -> Group {
        match self {
            Order8::E8 => elementary_abelian(3).with_name("E8"),
            Order8::D8 => d8(),
            Order8::Q8 => quaternion(),
        }
    }
}

impl fmt::Display for Order8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Order8 {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "E8" | "Z2^3" | "E" => Ok(Order8::E8),
            "D8" | "D" => Ok(Order8::D8),
            "Q8" | "Q" => Ok(Order8::Q8),
            _ => Err(ClassifyError::Label(s.into())),
        }
    }
}

/// A double D^ω(G) named by group and cohomology class: "Q8:g^3",
/// "D8:a1a3^2", "E8:w3i{1,6,7}" (support listed) or the family "E8:w3i".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DoubleLabel {
    pub group: Order8,
    pub class: String,
}

impl DoubleLabel {
    /// The name used in the reference tables (E8 classes collapse to their
    /// support type).
    pub fn family(&self) -> String {
        match self.class.find('{') {
            Some(i) => format!("{}:{}", self.group, &self.class[..i]),
            None => self.to_string(),
        }
    }
}

impl fmt::Display for DoubleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.group, self.class)
    }
}

impl FromStr for DoubleLabel {
    type Err = ClassifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (g, c) = s.split_once(':').ok_or_else(|| ClassifyError::Label(s.into()))?;
        let c = c.replace('γ', "g").replace('α', "a").replace('ω', "w").replace('₁', "1").replace('₂', "2").replace('₃', "3");
        Ok(DoubleLabel { group: g.parse()?, class: c })
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub label: DoubleLabel,
    pub coeffs: Vec<u32>,
    pub cocycle: Cochain3,
}

/// The 88 noncommutative doubles with their labels and representatives.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub groups: HashMap<Order8, (Group, Arc<H3>)>,
    pub entries: Vec<Entry>,
    /// Involutive automorphism of D8 lifting h1 ↔ h2.
    pub swap: GroupHom,
}

fn e8_label(g: &Group, w: &Cochain3) -> Result<Option<String>, ClassifyError> {
    let s = support(w)?;
    if s.len() % 2 == 0 {
        return Ok(None);
    }
    let kind = match s.len() {
        3 if is_dependent(g, &s) => "3d".to_string(),
        3 => "3i".to_string(),
        k => k.to_string(),
    };
    let list: Vec<String> = s.iter().map(|x| x.to_string()).collect();
    Ok(Some(format!("w{kind}{{{}}}", list.join(","))))
}

fn d8_word(i: u32, j: u32, k: u32) -> String {
    let mut s = String::new();
    if i == 1 {
        s.push_str("a1");
    }
    if j == 1 {
        s.push_str("a2");
    }
    match k {
        0 => {}
        1 => s.push_str("a3"),
        _ => s.push_str(&format!("a3^{k}")),
    }
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn q8_word(k: u32) -> String {
    match k {
        0 => "1".into(),
        1 => "g".into(),
        _ => format!("g^{k}"),
    }
}

fn fingerprint_of(w: &Cochain3) -> Result<Fingerprint, ClassifyError> {
    let d = DoubleTensors::build(w)?;
    let q = d.quasi_hopf::<Cyc>();
    let ct = characters(&decompose_with(&d, &q)?);
    Ok(fingerprint(&d, &ct, 32)?)
}

fn block_of(label: &str) -> Fingerprint {
    reference_tables()
        .into_iter()
        .find(|b| b.labels.iter().any(|l| l == label))
        .map(|b| b.fingerprint)
        .expect("label present in the tables")
}

/// Class on V = D8/Z(D8) restricting nontrivially to exactly ⟨h⟩.
fn v_class_supported_at(h: usize) -> Result<Cochain3, ClassifyError> {
    let hv = h3_group(&klein_four())?;
    for c in hv.all_classes() {
        let w = hv.element(&c);
        if support(&w)? == vec![h] {
            return Ok(w);
        }
    }
    Err(ClassifyError::Inconsistent(format!("no class on V supported at {h}")))
}

/// Projection G → V = G/⟨t⟩ for the central extensions indexed x + 4μ.
pub fn onto_v(g: &Group) -> GroupHom {
    GroupHom::new(g.clone(), klein_four(), g.elements().map(|x| x % 4).collect()).expect("central quotient")
}

impl Catalog {
    pub fn new() -> Result<Self, ClassifyError> {
        let mut groups = HashMap::new();
        for o in Order8::ALL {
            let g = o.group();
            let h = h3_group(&g)?;
            groups.insert(o, (g, h));
        }
        let mut entries = Vec::new();

        let (e, he) = &groups[&Order8::E8];
        for c in he.all_classes() {
            let w = he.element(&c);
            if let Some(class) = e8_label(e, &w)? {
                entries.push(Entry { label: DoubleLabel { group: Order8::E8, class }, coeffs: c, cocycle: w });
            }
        }

        let (dg, hd) = &groups[&Order8::D8];
        let proj = onto_v(dg);
        let a1 = hd.decompose(&v_class_supported_at(1)?.inflate(&proj))?;
        let a2 = hd.decompose(&v_class_supported_at(2)?.inflate(&proj))?;
        let swap = automorphisms(dg)?
            .into_iter()
            .find(|a| {
                let s = |x: usize| [0, 2, 1, 3][x % 4];
                dg.elements().all(|x| a.apply(x) % 4 == s(x)) && dg.elements().all(|x| a.apply(a.apply(x)) == x)
            })
            .ok_or_else(|| ClassifyError::Inconsistent("no involution of D8 swaps h1 and h2".into()))?;
        let combine = |i: u32, j: u32, k: u32, a3: &[u32]| -> Vec<u32> {
            let w = hd.element(&a1).pow(i as i64).mul(&hd.element(&a2).pow(j as i64)).mul(&hd.element(a3).pow(k as i64));
            hd.decompose(&w).expect("class of a product")
        };
        let target = block_of("D8:a3");
        let mut a3 = None;
        for c in hd.all_classes() {
            let w = hd.element(&c);
            if hd.class_order_of(&c) != 4 || hd.decompose(&w.pullback(&swap))? != c {
                continue;
            }
            if fingerprint_of(&w)? == target {
                a3 = Some(c);
                break;
            }
        }
        let a3 = a3.ok_or_else(|| ClassifyError::Inconsistent("no invariant class of order 4 matches D8:a3".into()))?;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..4 {
                    let c = combine(i, j, k, &a3);
                    let class = d8_word(i, j, k);
                    entries.push(Entry { label: DoubleLabel { group: Order8::D8, class }, cocycle: hd.element(&c), coeffs: c });
                }
            }
        }

        let (_, hq) = &groups[&Order8::Q8];
        let target = block_of("Q8:g");
        let mut gamma = None;
        for c in hq.all_classes() {
            if hq.class_order_of(&c) == 8 && fingerprint_of(&hq.element(&c))? == target {
                gamma = Some(hq.element(&c));
                break;
            }
        }
        let gamma = gamma.ok_or_else(|| ClassifyError::Inconsistent("no generator of H3(Q8) matches Q8:g".into()))?;
        for k in 0..8 {
            let c = hq.decompose(&gamma.pow(k as i64))?;
            entries.push(Entry { label: DoubleLabel { group: Order8::Q8, class: q8_word(k) }, cocycle: hq.element(&c), coeffs: c });
        }
        let mut seen: Vec<_> = entries.iter().map(|e| (e.label.group, e.coeffs.clone())).collect();
        seen.sort();
        seen.dedup();
        if seen.len() != entries.len() {
            return Err(ClassifyError::Inconsistent("labels do not name distinct classes".into()));
        }
        Ok(Catalog { groups, entries, swap })
    }

    pub fn h3(&self, o: Order8) -> &H3 {
        &self.groups[&o].1
    }

    pub fn group(&self, o: Order8) -> &Group {
        &self.groups[&o].0
    }

    /// Exact label, or the first member of a family label.
    pub fn resolve(&self, label: &DoubleLabel) -> Result<&Entry, ClassifyError> {
        self.entries
            .iter()
            .find(|e| &e.label == label)
            .or_else(|| self.entries.iter().find(|e| e.label.group == label.group && e.label.family() == label.to_string()))
            .ok_or_else(|| ClassifyError::Label(label.to_string()))
    }

    /// The entry whose class contains w.
    pub fn locate(&self, o: Order8, w: &Cochain3) -> Result<&Entry, ClassifyError> {
        let c = self.h3(o).decompose(w)?;
        self.entries
            .iter()
            .find(|e| e.label.group == o && e.coeffs == c)
            .ok_or_else(|| ClassifyError::Inconsistent(format!("class {c:?} on {o} is not in the catalog")))
    }
}
