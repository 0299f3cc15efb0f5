use super::{Elem, Group, GroupError};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupHom {
    pub source: Group,
    pub target: Group,
    pub map: Vec<Elem>,
}

impl GroupHom {
    pub fn new(source: Group, target: Group, map: Vec<Elem>) -> Result<Self, GroupError> {
        let h = GroupHom { source, target, map };
        if !h.is_hom() {
            return Err(GroupError::InvalidTable("map is not a homomorphism".into()));
        }
        Ok(h)
    }

    pub fn identity(g: &Group) -> Self {
        GroupHom { source: g.clone(), target: g.clone(), map: g.elements().collect() }
    }

    pub fn apply(&self, g: Elem) -> Elem {
        self.map[g]
    }

    pub fn is_hom(&self) -> bool {
        let (s, t) = (&self.source, &self.target);
        self.map.len() == s.order()
            && self.map[0] == 0
            && s.elements().all(|a| s.elements().all(|b| self.map[s.mul(a, b)] == t.mul(self.map[a], self.map[b])))
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &x in &self.map {
            if std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        self.source.order() == self.target.order()
    }

    pub fn kernel(&self) -> Vec<Elem> {
        self.source.elements().filter(|&g| self.map[g] == 0).collect()
    }

    pub fn compose(&self, then: &GroupHom) -> GroupHom {
        GroupHom { source: self.source.clone(), target: then.target.clone(), map: self.map.iter().map(|&x| then.map[x]).collect() }
    }

    pub fn inverse(&self) -> Option<GroupHom> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = vec![0; self.map.len()];
        for (g, &x) in self.map.iter().enumerate() {
            inv[x] = g;
        }
        Some(GroupHom { source: self.target.clone(), target: self.source.clone(), map: inv })
    }
}

/// Extends generator images along the Cayley graph; None if inconsistent.
fn extend(src: &Group, dst: &Group, gens: &[Elem], imgs: &[Elem]) -> Option<Vec<Elem>> {
    let mut map: Vec<Option<Elem>> = vec![None; src.order()];
    map[0] = Some(0);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        let mx = map[x].unwrap();
        for (&g, &i) in gens.iter().zip(imgs) {
            let y = src.mul(x, g);
            let my = dst.mul(mx, i);
            match map[y] {
                None => {
                    map[y] = Some(my);
                    frontier.push(y);
                }
                Some(v) if v != my => return None,
                _ => {}
            }
        }
    }
    Some(map.into_iter().map(|v| v.unwrap()).collect())
}

fn search(src: &Group, dst: &Group, all: bool) -> Vec<Vec<Elem>> {
    let gens = src.generators();
    let orders: Vec<usize> = gens.iter().map(|&g| src.elem_order(g)).collect();
    let cands: Vec<Vec<Elem>> = orders.iter().map(|&o| dst.elements().filter(|&x| dst.elem_order(x) == o).collect()).collect();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    fn rec(
        k: usize,
        src: &Group,
        dst: &Group,
        gens: &[Elem],
        cands: &[Vec<Elem>],
        imgs: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
        all: bool,
    ) {
        if !all && !out.is_empty() {
            return;
        }
        if k == gens.len() {
            if let Some(m) = extend(src, dst, gens, imgs) {
                let mut seen = vec![false; dst.order()];
                if m.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                    out.push(m);
                }
            }
            return;
        }
        for &c in &cands[k] {
            if imgs.contains(&c) {
                continue;
            }
            imgs.push(c);
            rec(k + 1, src, dst, gens, cands, imgs, out, all);
            imgs.pop();
        }
    }
    rec(0, src, dst, &gens, &cands, &mut imgs, &mut out, all);
    out.sort();
    out
}

/// Full automorphism group as permutations, by generator-image backtracking.
/// Supported for |G| ≤ 16 and for elementary abelian 2-groups of rank ≤ 4.
pub fn automorphisms(g: &Group) -> Result<Vec<GroupHom>, GroupError> {
    if g.order() > 16 {
        return Err(GroupError::TooLarge(g.order()));
    }
    Ok(search(g, g, true).into_iter().map(|map| GroupHom { source: g.clone(), target: g.clone(), map }).collect())
}

pub fn find_isomorphism(a: &Group, b: &Group) -> Option<GroupHom> {
    if a.order() != b.order() || a.order_census() != b.order_census() {
        return None;
    }
    search(a, b, false).pop().map(|map| GroupHom { source: a.clone(), target: b.clone(), map })
}

pub fn is_isomorphic(a: &Group, b: &Group) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Quotient G/N with cosets ordered by their smallest element.
pub fn quotient_projection(g: &Group, n: &[Elem]) -> Result<(Group, GroupHom), GroupError> {
    if !g.is_subgroup(n) {
        return Err(GroupError::NotSubgroup);
    }
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &k in n {
            coset_of[g.mul(x, k)] = reps.len();
        }
        reps.push(x);
    }
    let labels = reps.iter().map(|&r| g.label(r).to_string()).collect();
    let q = Group::from_fn(format!("{}/N", g.name()), reps.len(), |a, b| coset_of[g.mul(reps[a], reps[b])], labels)?;
    let proj = GroupHom { source: g.clone(), target: q.clone(), map: coset_of };
    Ok((q, proj))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, d8, elementary_abelian, quaternion};

    #[test]
    fn automorphism_counts() {
        assert_eq!(automorphisms(&elementary_abelian(3)).unwrap().len(), 168);
        assert_eq!(automorphisms(&d8()).unwrap().len(), 8);
        assert_eq!(automorphisms(&cyclic(2)).unwrap().len(), 1);
        assert_eq!(automorphisms(&quaternion()).unwrap().len(), 24);
        for a in automorphisms(&d8()).unwrap() {
            assert!(a.is_hom() && a.is_bijective());
        }
    }

    #[test]
    fn quotients() {
        let e = elementary_abelian(3);
        let (q, p) = quotient_projection(&e, &[0, 1]).unwrap();
        assert!(is_isomorphic(&q, &elementary_abelian(2)));
        assert_eq!(p.kernel(), vec![0, 1]);

        let d = d8();
        let (q, p) = quotient_projection(&d, &d.center()).unwrap();
        assert!(is_isomorphic(&q, &elementary_abelian(2)));
        assert!(p.is_hom());

        let qq = quaternion();
        let c4 = qq.powers(1);
        let (q, _) = quotient_projection(&qq, &c4).unwrap();
        assert_eq!(q.order(), 2);
    }

    #[test]
    fn rejects_non_normal() {
        let d = d8();
        assert_eq!(quotient_projection(&d, &[0, 1]).unwrap_err(), GroupError::NotNormal);
        assert_eq!(quotient_projection(&d, &[0, 1, 2]).unwrap_err(), GroupError::NotSubgroup);
    }
}
