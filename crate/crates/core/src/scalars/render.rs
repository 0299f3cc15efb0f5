use num_traits::{One, Signed};

use super::{Coeff, Cyclotomic};

/// Renders exp(2 pi i e / 16) in the kappa notation: kappa is the primitive
/// 16th root of unity with kappa^4 = i.
pub fn render_exponent(e: i64) -> String {
    match e.rem_euclid(16) {
        0 => "1".into(),
        8 => "-1".into(),
        4 => "i".into(),
        12 => "-i".into(),
        1 => "κ".into(),
        15 => "κ̄".into(),
        j if j < 8 => format!("κ^{j}"),
        j => format!("κ̄^{}", 16 - j),
    }
}

fn render_coeff<T: Coeff>(x: &T) -> String {
    match x.to_rational() {
        Some(r) if T::EXACT || r.denom().bits() < 20 => {
            if r.denom().is_one() {
                r.numer().to_string()
            } else {
                format!("{}/{}", r.numer(), r.denom())
            }
        }
        _ => format!("{}", x.to_f64()),
    }
}

/// Human rendering: rationals, and roots of unity of order dividing 16 in
/// kappa notation; anything else as a sum over powers of zeta_N.
pub fn render<T: Coeff>(x: &Cyclotomic<T>) -> String {
    if let Some(q) = x.as_rational() {
        return render_coeff(&q);
    }
    if 16 % x.minimal_conductor() == 0 {
        for e in 0..16 {
            if *x == Cyclotomic::root_of_unity(e, 16) {
                return render_exponent(e);
            }
        }
    }
    let n = x.conductor();
    let mut parts = Vec::new();
    for (i, c) in x.coeffs().iter().enumerate() {
        if c.negligible() {
            continue;
        }
        let base = match i {
            0 => String::new(),
            1 => format!("ζ{n}"),
            _ => format!("ζ{n}^{i}"),
        };
        let neg = c.to_rational().map(|r| r.is_negative()).unwrap_or(c.to_f64() < 0.0);
        let mag = if neg { -c.clone() } else { c.clone() };
        let body = if base.is_empty() {
            render_coeff(&mag)
        } else if mag == T::one() {
            base
        } else {
            format!("{}·{}", render_coeff(&mag), base)
        };
        parts.push((neg, body));
    }
    let mut out = String::new();
    for (k, (neg, body)) in parts.into_iter().enumerate() {
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Cyc;

    #[test]
    fn kappa_notation() {
        assert_eq!(render(&Cyc::root_of_unity(4, 16)), "i");
        assert_eq!(render(&Cyc::root_of_unity(1, 4)), "i");
        assert_eq!(render(&Cyc::root_of_unity(-1, 4)), "-i");
        assert_eq!(render(&Cyc::root_of_unity(7, 16)), "κ^7");
        assert_eq!(render(&Cyc::root_of_unity(9, 16)), "κ̄^7");
        assert_eq!(render(&Cyc::root_of_unity(15, 16)), "κ̄");
        assert_eq!(render(&Cyc::rational(-3, 2)), "-3/2");
        assert_eq!(render(&Cyc::zero()), "0");
    }

    #[test]
    fn generic_sum() {
        let x = Cyc::root_of_unity(1, 3) + Cyc::rational(2, 1);
        assert_eq!(render(&x), "2 + ζ3");
    }
}
