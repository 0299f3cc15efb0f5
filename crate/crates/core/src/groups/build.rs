use super::{Elem, ExtensionData, Group, GroupError};

fn power_label(sym: &str, k: usize) -> String {
    match k {
        0 => "1".into(),
        1 => sym.into(),
        _ => format!("{sym}^{k}"),
    }
}

pub fn cyclic(n: usize) -> Group {
    let labels = (0..n).map(|k| power_label("a", k)).collect();
    Group::from_fn(format!("Z{n}"), n, |a, b| (a + b) % n, labels).expect("cyclic table")
}

/// Direct product; the first factor varies fastest in the element index.
pub fn direct_product(factors: &[Group]) -> Group {
    let sizes: Vec<usize> = factors.iter().map(|g| g.order()).collect();
    let n: usize = sizes.iter().product();
    let split = |mut x: Elem| -> Vec<Elem> {
        sizes
            .iter()
            .map(|s| {
                let r = x % s;
                x /= s;
                r
            })
            .collect()
    };
    let join = |parts: &[Elem]| -> Elem { parts.iter().zip(&sizes).rev().fold(0, |acc, (p, s)| acc * s + p) };
    let labels = (0..n)
        .map(|x| {
            let parts = split(x);
            let ls: Vec<&str> = parts.iter().zip(factors).map(|(&p, g)| g.label(p)).collect();
            format!("({})", ls.join(","))
        })
        .collect();
    let name = factors.iter().map(|g| g.name().to_string()).collect::<Vec<_>>().join("x");
    Group::from_fn(
        name,
        n,
        |a, b| {
            let (pa, pb) = (split(a), split(b));
            let prod: Vec<Elem> = factors.iter().enumerate().map(|(i, g)| g.mul(pa[i], pb[i])).collect();
            join(&prod)
        },
        labels,
    )
    .expect("direct product table")
}

/// Bit-vector labels g1, g2g3, ... for Z2^n with the given generator symbol.
pub(crate) fn bit_labels(n: usize, syms: &[&str]) -> Vec<String> {
    (0..1usize << n)
        .map(|x| {
            if x == 0 {
                return "1".into();
            }
            (0..n).filter(|i| x >> i & 1 == 1).map(|i| syms[i]).collect::<String>()
        })
        .collect()
}

/// Z2^n with element index equal to its coordinate bit vector.
pub fn elementary_abelian(n: usize) -> Group {
    let syms: Vec<String> = (1..=n).map(|i| format!("g{i}")).collect();
    let refs: Vec<&str> = syms.iter().map(|s| s.as_str()).collect();
    Group::from_fn(format!("Z2^{n}"), 1 << n, |a, b| a ^ b, bit_labels(n, &refs)).expect("elementary abelian table")
}

/// Dihedral group of order 2n: index k + n·e stands for r^k s^e.
pub fn dihedral(n: usize) -> Group {
    let labels = (0..2 * n)
        .map(|x| {
            let (k, e) = (x % n, x / n);
            match (k, e) {
                (0, 0) => "1".into(),
                (_, 0) => power_label("r", k),
                (0, _) => "s".into(),
                _ => format!("{}s", power_label("r", k)),
            }
        })
        .collect();
    Group::from_fn(
        format!("D{}", 2 * n),
        2 * n,
        |a, b| {
            let (ka, ea, kb, eb) = (a % n, a / n, b % n, b / n);
            let k = if ea == 0 { ka + kb } else { ka + n - kb } % n;
            k + n * ((ea + eb) % 2)
        },
        labels,
    )
    .expect("dihedral table")
}

/// The Klein four-group V = ⟨h1, h2⟩ with index = bit vector.
pub fn klein_four() -> Group {
    Group::from_fn("V", 4, |a, b| a ^ b, bit_labels(2, &["h1", "h2"])).expect("Klein table")
}

/// Bilinear 2-cocycle on V valued in Z2 = ⟨t⟩: pairs (i, j) of generators with ε(h_i, h_j) = t.
fn bilinear_eps(nontrivial: &[(usize, usize)]) -> Vec<Vec<Elem>> {
    (0..4)
        .map(|x| {
            (0..4)
                .map(|y| {
                    let mut v = 0;
                    for &(i, j) in nontrivial {
                        v ^= (x >> i & 1) & (y >> j & 1);
                    }
                    v
                })
                .collect()
        })
        .collect()
}

/// ε_D: ε(h2, h1) = t, trivial on the other generator pairs.
pub fn eps_dihedral() -> Vec<Vec<Elem>> {
    bilinear_eps(&[(1, 0)])
}

/// ε_Q: ε(h1,h1) = ε(h2,h1) = ε(h2,h2) = t, ε(h1,h2) = 1.
pub fn eps_quaternion() -> Vec<Vec<Elem>> {
    bilinear_eps(&[(0, 0), (1, 0), (1, 1)])
}

/// Ḡ = V, A = Z2 with trivial action and the given ε.
pub fn v_by_z2(eps: Vec<Vec<Elem>>) -> ExtensionData {
    ExtensionData::trivial_action(klein_four(), cyclic(2), Some(eps))
}

fn from_eps(name: &str, eps: Vec<Vec<Elem>>) -> Group {
    v_by_z2(eps).central_extension().expect("valid extension").with_name(name)
}

/// D8 as the central extension of V by ⟨t⟩ with ε_D; h1 and h2 lift to reflections.
pub fn d8() -> Group {
    from_eps("D8", eps_dihedral())
}

/// Q8 as the central extension of V by ⟨t⟩ with ε_Q.
pub fn quaternion() -> Group {
    from_eps("Q8", eps_quaternion())
}

/// Extra-special 2-group of order 2^(2l+1): the central product of l copies of
/// D8 (sign +) or of l−1 copies of D8 and one Q8 (sign −).
pub fn extraspecial(l: usize, plus: bool) -> Result<Group, GroupError> {
    if l == 0 {
        return Err(GroupError::Unsupported("extraspecial width 0".into()));
    }
    let mut factors: Vec<Group> = (0..l - 1).map(|_| d8()).collect();
    factors.push(if plus { d8() } else { quaternion() });
    let p = direct_product(&factors);
    // index of t in each factor is 4; a product element with t in the chosen factors
    let sizes = 8usize;
    let t_at = |mask: usize| -> Elem { (0..l).filter(|i| mask >> i & 1 == 1).map(|i| 4 * sizes.pow(i as u32)).sum() };
    let kernel: Vec<Elem> = (0..1usize << l).filter(|m| m.count_ones() % 2 == 0).map(t_at).collect();
    let (q, _) = super::quotient_projection(&p, &kernel)?;
    let sign = if plus { '+' } else { '-' };
    Ok(q.with_name(format!("extraspecial({l},{sign})")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::is_isomorphic;

    #[test]
    fn basic_orders() {
        let e = elementary_abelian(3);
        assert_eq!(e.order(), 8);
        assert_eq!(e.exponent(), 2);
        assert_eq!(cyclic(4).exponent(), 4);
        assert_eq!(d8().order_census(), vec![(1, 1), (2, 5), (4, 2)]);
        assert_eq!(quaternion().order_census(), vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn d8_matches_dihedral() {
        assert!(is_isomorphic(&d8(), &dihedral(4)));
        let g = d8();
        assert_eq!(g.elem_order(1), 2);
        assert_eq!(g.elem_order(2), 2);
        assert_eq!(g.elem_order(3), 4);
    }

    #[test]
    fn extraspecial_width_one() {
        assert!(is_isomorphic(&extraspecial(1, true).unwrap(), &d8()));
        assert!(is_isomorphic(&extraspecial(1, false).unwrap(), &quaternion()));
    }

    #[test]
    fn extraspecial_width_two() {
        for plus in [true, false] {
            let q = extraspecial(2, plus).unwrap();
            assert_eq!(q.order(), 32);
            let z = q.center();
            assert_eq!(z.len(), 2);
            let mut c = q.commutator_subgroup();
            c.sort();
            assert_eq!(c, z);
            assert_eq!(q.exponent(), 4);
        }
        let p = extraspecial(2, true).unwrap();
        let m = extraspecial(2, false).unwrap();
        assert!(!is_isomorphic(&p, &m));
    }

    #[test]
    fn constructors_are_canonical() {
        assert_eq!(d8(), d8());
        assert_eq!(extraspecial(2, false).unwrap(), extraspecial(2, false).unwrap());
    }
}
