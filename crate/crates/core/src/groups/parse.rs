use super::{cyclic, d8, dihedral, direct_product, elementary_abelian, extraspecial, quaternion, Group, GroupError};

/// Parses structured group specs: `Z4`, `Z2^3`, `D8`, `D10`, `Q8`,
/// `extraspecial:2:-`, and products joined by `x`, e.g. `Z2xQ8`.
pub fn parse_group(spec: &str) -> Result<Group, GroupError> {
    let s = spec.trim();
    let bad = || GroupError::Unsupported(spec.to_string());
    if let Some(rest) = s.strip_prefix("extraspecial:") {
        let (l, sign) = rest.split_once(':').ok_or_else(bad)?;
        let l: usize = l.parse().map_err(|_| bad())?;
        let plus = match sign {
            "+" => true,
            "-" => false,
            _ => return Err(bad()),
        };
        return extraspecial(l, plus);
    }
    if s.contains('x') {
        let parts = s.split('x').map(parse_group).collect::<Result<Vec<_>, _>>()?;
        return Ok(direct_product(&parts).with_name(s));
    }
    if let Some(n) = s.strip_prefix("Z2^") {
        let n: usize = n.parse().map_err(|_| bad())?;
        if !(1..=6).contains(&n) {
            return Err(bad());
        }
        return Ok(elementary_abelian(n));
    }
    if s == "Q8" {
        return Ok(quaternion());
    }
    if s == "D8" {
        return Ok(d8());
    }
    if let Some(n) = s.strip_prefix('Z') {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        return Ok(cyclic(n));
    }
    if let Some(n) = s.strip_prefix('D') {
        let n: usize = n.parse().map_err(|_| bad())?;
        if n < 2 || n % 2 != 0 {
            return Err(bad());
        }
        return Ok(dihedral(n / 2));
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_families() {
        assert_eq!(parse_group("Z2^3").unwrap().order(), 8);
        assert_eq!(parse_group("Z4").unwrap().exponent(), 4);
        assert_eq!(parse_group("extraspecial:2:-").unwrap().order(), 32);
        assert_eq!(parse_group("Z2xQ8").unwrap().order(), 16);
        assert_eq!(parse_group("D8").unwrap(), d8());
        assert!(parse_group("S3").is_err());
        assert!(parse_group("extraspecial:2:*").is_err());
    }
}
