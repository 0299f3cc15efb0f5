use super::{bit_labels, Elem, Group, GroupError};

/// Data for A⋊Ḡ and Â⋊_ε Ḡ: a base Ḡ, an abelian fiber A with a right
/// Ḡ-action a ◁ x, and optionally a 2-cocycle ε: Ḡ×Ḡ → Â.
#[derive(Clone, Debug)]
pub struct ExtensionData {
    pub base: Group,
    pub fiber: Group,
    /// action[a][x] = a ◁ x.
    pub action: Vec<Vec<Elem>>,
    /// eps[x][y] is an index into the character group of the fiber.
    pub eps: Option<Vec<Vec<Elem>>>,
}

/// Characters of an abelian group, valued in μ_m with m its exponent.
#[derive(Clone, Debug)]
pub struct CharacterGroup {
    pub group: Group,
    pub m: u32,
    /// values[χ][a] = exponent of χ(a) in μ_m.
    pub values: Vec<Vec<u32>>,
}

impl CharacterGroup {
    pub fn of(a: &Group) -> Result<Self, GroupError> {
        if !a.is_abelian() {
            return Err(GroupError::InvalidExtension("fiber must be abelian".into()));
        }
        let m = a.exponent() as u32;
        let gens = a.generators();
        let mut values: Vec<Vec<u32>> = Vec::new();
        let mut images = vec![0u32; gens.len()];
        loop {
            if let Some(chi) = extend_character(a, &gens, &images, m) {
                values.push(chi);
            }
            let mut i = 0;
            while i < images.len() {
                images[i] += 1;
                if images[i] < m {
                    break;
                }
                images[i] = 0;
                i += 1;
            }
            if i == images.len() {
                break;
            }
        }
        values.sort();
        values.dedup();
        let n = values.len();
        let idx = |v: &Vec<u32>| values.binary_search(v).expect("closed under products");
        let table: Vec<Vec<Elem>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| {
                        let p: Vec<u32> = values[x].iter().zip(&values[y]).map(|(a, b)| (a + b) % m).collect();
                        idx(&p)
                    })
                    .collect()
            })
            .collect();
        let labels = (0..n).map(|i| format!("χ{i}")).collect();
        let group = Group::from_table(format!("dual({})", a.name()), table, Some(labels))?;
        Ok(CharacterGroup { group, m, values })
    }
}

fn extend_character(a: &Group, gens: &[Elem], images: &[u32], m: u32) -> Option<Vec<u32>> {
    let mut chi: Vec<Option<u32>> = vec![None; a.order()];
    chi[0] = Some(0);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        let vx = chi[x].unwrap();
        for (g, &im) in gens.iter().zip(images) {
            let y = a.mul(x, *g);
            let vy = (vx + im) % m;
            match chi[y] {
                None => {
                    chi[y] = Some(vy);
                    frontier.push(y);
                }
                Some(v) if v != vy => return None,
                _ => {}
            }
        }
    }
    Some(chi.into_iter().map(|v| v.unwrap()).collect())
}

impl ExtensionData {
    pub fn trivial_action(base: Group, fiber: Group, eps: Option<Vec<Vec<Elem>>>) -> Self {
        let action = (0..fiber.order()).map(|a| vec![a; base.order()]).collect();
        ExtensionData { base, fiber, action, eps }
    }

    pub fn is_trivial_action(&self) -> bool {
        self.action.iter().enumerate().all(|(a, row)| row.iter().all(|&b| b == a))
    }

    pub fn dual(&self) -> Result<CharacterGroup, GroupError> {
        CharacterGroup::of(&self.fiber)
    }

    /// Left action on characters: (x ▷ ν)(a) = ν(a ◁ x).
    pub fn dual_action(&self, dual: &CharacterGroup, x: Elem, nu: Elem) -> Elem {
        let v: Vec<u32> = (0..self.fiber.order()).map(|a| dual.values[nu][self.action[a][x]]).collect();
        dual.values.binary_search(&v).expect("action permutes characters")
    }

    pub fn validate_action(&self) -> Result<(), GroupError> {
        let (g, a) = (&self.base, &self.fiber);
        let bad = |m: &str| Err(GroupError::InvalidExtension(m.into()));
        if !a.is_abelian() {
            return bad("fiber must be abelian");
        }
        if self.action.len() != a.order() || self.action.iter().any(|r| r.len() != g.order()) {
            return bad("action table has wrong shape");
        }
        for x in g.elements() {
            if a.elements().any(|p| self.action[p][0] != p) {
                return bad("identity must act trivially");
            }
            for y in g.elements() {
                for p in a.elements() {
                    if self.action[self.action[p][x]][y] != self.action[p][g.mul(x, y)] {
                        return bad("not a right action");
                    }
                }
            }
            for p in a.elements() {
                for q in a.elements() {
                    if self.action[a.mul(p, q)][x] != a.mul(self.action[p][x], self.action[q][x]) {
                        return bad("action is not by automorphisms");
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), GroupError> {
        self.validate_action()?;
        let Some(eps) = &self.eps else { return Ok(()) };
        let g = &self.base;
        let dual = self.dual()?;
        let d = &dual.group;
        let bad = |m: &str| Err(GroupError::InvalidExtension(m.into()));
        if eps.len() != g.order() || eps.iter().any(|r| r.len() != g.order() || r.iter().any(|&v| v >= d.order())) {
            return bad("eps table has wrong shape");
        }
        if g.elements().any(|x| eps[0][x] != 0 || eps[x][0] != 0) {
            return bad("eps is not normalized");
        }
        for x in g.elements() {
            for y in g.elements() {
                for z in g.elements() {
                    let lhs = d.mul(self.dual_action(&dual, x, eps[y][z]), eps[x][g.mul(y, z)]);
                    let rhs = d.mul(eps[g.mul(x, y)][z], eps[x][y]);
                    if lhs != rhs {
                        return bad("eps fails the twisted 2-cocycle identity");
                    }
                }
            }
        }
        Ok(())
    }

    /// E = A⋊Ḡ with (x,a)(y,b) = (xy, (a◁y)b); index x + |Ḡ|·a.
    pub fn semidirect(&self) -> Result<Group, GroupError> {
        self.validate_action()?;
        let (g, a) = (&self.base, &self.fiber);
        let ng = g.order();
        let alabels: Vec<String> = if a.order() == 2 { vec!["1".into(), "t".into()] } else { a.labels().to_vec() };
        let labels = pair_labels(g, &alabels);
        Group::from_fn(
            format!("{}x|{}", a.name(), g.name()),
            ng * a.order(),
            |p, q| {
                let (x, aa, y, b) = (p % ng, p / ng, q % ng, q / ng);
                g.mul(x, y) + ng * a.mul(self.action[aa][y], b)
            },
            labels,
        )
    }

    /// Â⋊_ε Ḡ with (μ,x)(ν,y) = (μ (x▷ν) ε(x,y), xy); index x + |Ḡ|·μ.
    pub fn central_extension(&self) -> Result<Group, GroupError> {
        self.validate()?;
        let eps = self.eps.as_ref().ok_or_else(|| GroupError::InvalidExtension("missing eps".into()))?;
        let dual = self.dual()?;
        let (g, d) = (&self.base, &dual.group);
        let ng = g.order();
        let dlabels: Vec<String> = if d.order() == 2 { vec!["1".into(), "t".into()] } else { d.labels().to_vec() };
        let labels = pair_labels(g, &dlabels);
        Group::from_fn(
            format!("{}.{}", d.name(), g.name()),
            ng * d.order(),
            |p, q| {
                let (x, mu, y, nu) = (p % ng, p / ng, q % ng, q / ng);
                let m = d.mul(d.mul(mu, self.dual_action(&dual, x, nu)), eps[x][y]);
                g.mul(x, y) + ng * m
            },
            labels,
        )
    }
}

fn pair_labels(g: &Group, fiber: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    for f in fiber {
        for x in g.elements() {
            let l = match (g.label(x), f.as_str()) {
                ("1", f) => f.to_string(),
                (x, "1") => x.to_string(),
                (x, f) => format!("{x}{f}"),
            };
            out.push(l);
        }
    }
    out
}

/// Labels for V×⟨t⟩ = Z2³ matching the identification E = ⟨h1,h2⟩×⟨t⟩.
pub fn e8_labels() -> Vec<String> {
    bit_labels(3, &["h1", "h2", "t"])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, elementary_abelian, eps_quaternion, is_isomorphic, klein_four, quaternion};

    #[test]
    fn quaternion_from_eps_census() {
        let ext = ExtensionData::trivial_action(klein_four(), cyclic(2), Some(eps_quaternion()));
        let g = ext.central_extension().unwrap();
        assert_eq!(g.order_census(), vec![(1, 1), (2, 1), (4, 6)]);
        assert!(is_isomorphic(&g, &quaternion()));
        let z = g.center();
        assert_eq!(z, vec![0, 4]);
    }

    #[test]
    fn semidirect_trivial_is_product() {
        let ext = ExtensionData::trivial_action(klein_four(), cyclic(2), None);
        let e = ext.semidirect().unwrap();
        assert_eq!(e.labels(), e8_labels().as_slice());
        let z = elementary_abelian(3);
        for a in e.elements() {
            for b in e.elements() {
                assert_eq!(e.mul(a, b), z.mul(a, b));
            }
        }
    }

    #[test]
    fn rejects_non_cocycle() {
        let mut eps = eps_quaternion();
        eps[1][2] = 1;
        let ext = ExtensionData::trivial_action(klein_four(), cyclic(2), Some(eps));
        assert!(ext.central_extension().is_err());
    }

    #[test]
    fn nontrivial_action_semidirect() {
        // Z2 acting on Z4 by inversion gives D8
        let a = cyclic(4);
        let action = (0..4).map(|p| vec![p, (4 - p) % 4]).collect();
        let ext = ExtensionData { base: cyclic(2), fiber: a, action, eps: None };
        let g = ext.semidirect().unwrap();
        assert!(is_isomorphic(&g, &crate::groups::d8()));
    }
}
