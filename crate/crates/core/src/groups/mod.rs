//! Finite groups as dense multiplication tables.

mod build;
mod extension;
mod hom;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use build::*;
pub use extension::{e8_labels, CharacterGroup, ExtensionData};
pub use hom::{automorphisms, find_isomorphism, is_isomorphic, quotient_projection, GroupHom};
pub use parse::parse_group;

/// Element of a group: an index into its table, with 0 the identity.
pub type Elem = usize;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("table is not a valid group: {0}")]
    InvalidTable(String),
    #[error("not a subgroup")]
    NotSubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("invalid extension data: {0}")]
    InvalidExtension(String),
    #[error("unsupported group spec {0:?}")]
    Unsupported(String),
    #[error("group of order {0} too large for this strategy")]
    TooLarge(usize),
}

/// Equality and hashing consider only the multiplication table.
#[derive(Clone)]
pub struct Group {
    name: String,
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
}

impl PartialEq for Group {
    fn eq(&self, o: &Self) -> bool {
        self.n == o.n && self.mul == o.mul
    }
}

impl Eq for Group {}

impl std::hash::Hash for Group {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.n.hash(h);
        self.mul.hash(h);
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name, self.n)
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub classes: Vec<Vec<Elem>>,
    /// Smallest element of each class.
    pub reps: Vec<Elem>,
    pub centralizers: Vec<Vec<Elem>>,
}

impl Group {
    /// Builds a group from a row-major table, checking the axioms.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<Elem>>, labels: Option<Vec<String>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 || n > u16::MAX as usize {
            return Err(GroupError::InvalidTable(format!("bad order {n}")));
        }
        let mut mul = Vec::with_capacity(n * n);
        for row in &table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::InvalidTable("table is not square".into()));
            }
            mul.extend(row.iter().map(|&x| x as u16));
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            match (0..n).find(|&b| mul[a * n + b] == 0) {
                Some(b) => inv[a] = b as u16,
                None => return Err(GroupError::InvalidTable(format!("{a} has no inverse"))),
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        let g = Group { name: name.into(), n, mul, inv, labels };
        g.verify()?;
        Ok(g)
    }

    pub(crate) fn from_fn(name: impl Into<String>, n: usize, f: impl Fn(Elem, Elem) -> Elem, labels: Vec<String>) -> Result<Self, GroupError> {
        let table = (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect();
        Group::from_table(name, table, Some(labels))
    }

    /// Full check of identity, inverses and associativity.
    pub fn verify(&self) -> Result<(), GroupError> {
        let n = self.n;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::InvalidTable("index 0 is not the identity".into()));
            }
            let b = self.inv(a);
            if self.mul(a, b) != 0 || self.mul(b, a) != 0 {
                return Err(GroupError::InvalidTable(format!("inverse of {a} is not two-sided")));
            }
            let mut seen = vec![false; n];
            for b in 0..n {
                seen[self.mul(a, b)] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::InvalidTable("row is not a permutation".into()));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::InvalidTable(format!("({a}{b}){c} != {a}({b}{c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn label(&self, g: Elem) -> &str {
        &self.labels[g]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.n + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a] as Elem
    }

    /// x g x⁻¹.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(x, g), self.inv(x))
    }

    pub fn pow(&self, g: Elem, k: i64) -> Elem {
        let base = if k < 0 { self.inv(g) } else { g };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn elem_order(&self, g: Elem) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements().map(|g| self.elem_order(g)).fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_elementary_abelian_2(&self) -> bool {
        self.is_abelian() && self.elements().all(|g| self.mul(g, g) == 0)
    }

    pub fn commutes(&self, a: Elem, b: Elem) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn centralizer(&self, g: Elem) -> Vec<Elem> {
        self.elements().filter(|&x| self.commutes(x, g)).collect()
    }

    pub fn center(&self) -> Vec<Elem> {
        self.elements().filter(|&z| self.elements().all(|x| self.commutes(x, z))).collect()
    }

    pub fn class_of(&self, g: Elem) -> Vec<Elem> {
        let set: BTreeSet<Elem> = self.elements().map(|x| self.conj(x, g)).collect();
        set.into_iter().collect()
    }

    pub fn conjugacy_data(&self) -> ConjugacyData {
        let mut seen = vec![false; self.n];
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[g] {
                continue;
            }
            let c = self.class_of(g);
            for &x in &c {
                seen[x] = true;
            }
            classes.push(c);
        }
        let reps: Vec<Elem> = classes.iter().map(|c| c[0]).collect();
        let centralizers = reps.iter().map(|&r| self.centralizer(r)).collect();
        ConjugacyData { classes, reps, centralizers }
    }

    /// Power list [1, g, g², ...] of the cyclic subgroup generated by g.
    pub fn powers(&self, g: Elem) -> Vec<Elem> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// Each cyclic subgroup once, as the power list of its smallest generator,
    /// ordered by (order, generator).
    pub fn cyclic_subgroups(&self) -> Vec<Vec<Elem>> {
        let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
        let mut out = Vec::new();
        for g in self.elements() {
            let p = self.powers(g);
            let mut key = p.clone();
            key.sort_unstable();
            if seen.insert(key) {
                out.push(p);
            }
        }
        out.sort_by_key(|p| (p.len(), p.get(1).copied().unwrap_or(0)));
        out
    }

    pub fn generated(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut set: BTreeSet<Elem> = BTreeSet::from([0]);
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        set.into_iter().collect()
    }

    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        let s: BTreeSet<Elem> = set.iter().copied().collect();
        s.contains(&0) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.mul(a, b))))
    }

    pub fn is_normal(&self, set: &[Elem]) -> bool {
        let s: BTreeSet<Elem> = set.iter().copied().collect();
        self.is_subgroup(set) && s.iter().all(|&a| self.elements().all(|x| s.contains(&self.conj(x, a))))
    }

    pub fn commutator_subgroup(&self) -> Vec<Elem> {
        let comms: Vec<Elem> = self
            .elements()
            .flat_map(|a| self.elements().map(move |b| (a, b)))
            .map(|(a, b)| self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b))))
            .collect();
        self.generated(&comms)
    }

    /// Census of element orders: count of elements of each order, sorted by order.
    pub fn order_census(&self) -> Vec<(usize, usize)> {
        let mut m = std::collections::BTreeMap::new();
        for g in self.elements() {
            *m.entry(self.elem_order(g)).or_insert(0) += 1;
        }
        m.into_iter().collect()
    }

    /// Minimal generating set found greedily by index.
    pub fn generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = vec![0];
        while span.len() < self.n {
            let best = self
                .elements()
                .filter(|g| !span.contains(g))
                .max_by_key(|&g| {
                    let mut t = gens.clone();
                    t.push(g);
                    (self.generated(&t).len(), std::cmp::Reverse(g))
                })
                .expect("span is a proper subgroup");
            gens.push(best);
            span = self.generated(&gens);
        }
        gens
    }

    /// Subgroup as its own table, with an embedding map (index in subgroup → index in self).
    pub fn subgroup(&self, set: &[Elem]) -> Result<(Group, Vec<Elem>), GroupError> {
        if !self.is_subgroup(set) {
            return Err(GroupError::NotSubgroup);
        }
        let mut elems: Vec<Elem> = set.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos = |x: Elem| elems.binary_search(&x).unwrap();
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let g = Group::from_fn(format!("sub({})", self.name), elems.len(), |a, b| pos(self.mul(elems[a], elems[b])), labels)?;
        Ok((g, elems))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugacy_class_sizes() {
        for g in [quaternion(), dihedral(4)] {
            let mut sizes: Vec<usize> = g.conjugacy_data().classes.iter().map(|c| c.len()).collect();
            sizes.sort();
            assert_eq!(sizes, vec![1, 1, 2, 2, 2]);
        }
        let e = elementary_abelian(3);
        let cd = e.conjugacy_data();
        assert_eq!(cd.classes.len(), 8);
        assert!(cd.centralizers.iter().all(|c| c.len() == 8));
    }

    #[test]
    fn centralizers_are_exact() {
        let g = dihedral(4);
        let cd = g.conjugacy_data();
        for (r, c) in cd.reps.iter().zip(&cd.centralizers) {
            for x in g.elements() {
                assert_eq!(c.contains(&x), g.commutes(x, *r));
            }
        }
    }

    #[test]
    fn cyclic_subgroup_counts() {
        assert_eq!(cyclic(2).cyclic_subgroups().len(), 2);
        let q: Vec<usize> = quaternion().cyclic_subgroups().iter().map(|c| c.len()).collect();
        assert_eq!(q, vec![1, 2, 4, 4, 4]);
        let e: Vec<usize> = elementary_abelian(3).cyclic_subgroups().iter().map(|c| c.len()).collect();
        assert_eq!(e, vec![1, 2, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn rejects_bad_tables() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert!(Group::from_table("bad", t, None).is_err());
        let t = vec![vec![1, 0], vec![0, 1]];
        assert!(Group::from_table("bad", t, None).is_err());
    }
}
