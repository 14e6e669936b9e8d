//! The family descriptor grammar shared by the CLI and reports:
//! `D:<2m>`, `Q:<4n>`, `QD:<2^n>`, `M:<m>,<n>`, `PQ:<p>,<q>`, `SZ20`,
//! `S:<n>`, `A:<n>`, `GL2:<q>`, `SL2:<q>`, `PSL2:<q>`, `HA:<n>`,
//! `HP:<n>,<p>`, `P3:<p>`, `M16`, `Z4xZ4s`, `D8sZ4`, `SG16_3`, `Z:<n>`,
//! `prod(<d1>,<d2>)`.

use super::families::FamilyDescriptor;
use super::GroupError;
use std::fmt;

fn parse_u64(tok: &str, whole: &str) -> Result<u64, GroupError> {
    tok.trim()
        .parse::<u64>()
        .map_err(|_| GroupError::Parse(format!("`{whole}`: expected integer, found `{tok}`")))
}

fn parse_pair(args: &str, whole: &str) -> Result<(u64, u64), GroupError> {
    let mut it = args.splitn(2, ',');
    let a = it
        .next()
        .ok_or_else(|| GroupError::Parse(format!("unrecognized token `{whole}`")))?;
    let b = it
        .next()
        .ok_or_else(|| GroupError::Parse(format!("`{whole}`: expected two parameters")))?;
    Ok((parse_u64(a, whole)?, parse_u64(b, whole)?))
}

/// Splits "x,y" at the top nesting level of parentheses.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

/// Parses the descriptor grammar. Errors name the offending token.
pub fn parse_descriptor(input: &str) -> Result<FamilyDescriptor, GroupError> {
    let s = input.trim();
    use FamilyDescriptor::*;
    match s {
        "SZ20" => return Ok(Sz20),
        "M16" => return Ok(M16),
        "Z4xZ4s" => return Ok(Z4rtimesZ4),
        "D8sZ4" => return Ok(D8starZ4),
        "SG16_3" => return Ok(SG16_3),
        _ => {}
    }
    if let Some(rest) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
        let (a, b) = split_top_level(rest)
            .ok_or_else(|| GroupError::Parse(format!("`{s}`: expected prod(<d1>,<d2>)")))?;
        return Ok(Product(
            Box::new(parse_descriptor(a)?),
            Box::new(parse_descriptor(b)?),
        ));
    }
    let (head, args) = s
        .split_once(':')
        .ok_or_else(|| GroupError::Parse(format!("unrecognized token `{s}`")))?;
    match head {
        "D" => {
            let v = parse_u64(args, s)?;
            if v % 2 != 0 {
                return Err(GroupError::Parse(format!(
                    "`{s}`: dihedral order must be even"
                )));
            }
            Ok(Dihedral(v / 2))
        }
        "Q" => {
            let v = parse_u64(args, s)?;
            if v % 4 != 0 {
                return Err(GroupError::Parse(format!(
                    "`{s}`: generalized quaternion order must be divisible by 4"
                )));
            }
            Ok(GeneralizedQuaternion(v / 4))
        }
        "QD" => {
            let v = parse_u64(args, s)?;
            if !v.is_power_of_two() {
                return Err(GroupError::Parse(format!(
                    "`{s}`: quasidihedral order must be a power of 2"
                )));
            }
            Ok(Quasidihedral(v.trailing_zeros() as u64))
        }
        "M" => {
            let (m, n) = parse_pair(args, s)?;
            Ok(Metacyclic(m, n))
        }
        "PQ" => {
            let (p, q) = parse_pair(args, s)?;
            Ok(FrobeniusPQ(p, q))
        }
        "S" => Ok(Symmetric(parse_u64(args, s)?)),
        "A" => Ok(Alternating(parse_u64(args, s)?)),
        "GL2" => Ok(GL2(parse_u64(args, s)?)),
        "SL2" => Ok(SL2(parse_u64(args, s)?)),
        "PSL2" => Ok(PSL2(parse_u64(args, s)?)),
        "HA" => Ok(HanakiTheta(parse_u64(args, s)?)),
        "HP" => {
            let (n, p) = parse_pair(args, s)?;
            Ok(HanakiP(n, p))
        }
        "P3" => Ok(ModP3(parse_u64(args, s)?)),
        "Z" => Ok(Cyclic(parse_u64(args, s)?)),
        _ => Err(GroupError::Parse(format!("unrecognized token `{s}`"))),
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilyDescriptor::*;
        match self {
            Cyclic(n) => write!(f, "Z:{n}"),
            Dihedral(m) => write!(f, "D:{}", 2 * m),
            GeneralizedQuaternion(n) => write!(f, "Q:{}", 4 * n),
            Quasidihedral(n) => write!(f, "QD:{}", 1u64 << n),
            Metacyclic(m, n) => write!(f, "M:{m},{n}"),
            FrobeniusPQ(p, q) => write!(f, "PQ:{p},{q}"),
            Sz20 => write!(f, "SZ20"),
            Symmetric(n) => write!(f, "S:{n}"),
            Alternating(n) => write!(f, "A:{n}"),
            GL2(q) => write!(f, "GL2:{q}"),
            SL2(q) => write!(f, "SL2:{q}"),
            PSL2(q) => write!(f, "PSL2:{q}"),
            HanakiTheta(n) => write!(f, "HA:{n}"),
            HanakiP(n, p) => write!(f, "HP:{n},{p}"),
            ModP3(p) => write!(f, "P3:{p}"),
            M16 => write!(f, "M16"),
            Z4rtimesZ4 => write!(f, "Z4xZ4s"),
            D8starZ4 => write!(f, "D8sZ4"),
            SG16_3 => write!(f, "SG16_3"),
            Product(a, b) => write!(f, "prod({a},{b})"),
        }
    }
}

impl serde::Serialize for FamilyDescriptor {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for FamilyDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_descriptor(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trips() {
        for s in [
            "D:8",
            "Q:16",
            "QD:16",
            "M:5,2",
            "PQ:3,7",
            "SZ20",
            "S:4",
            "A:5",
            "GL2:3",
            "SL2:3",
            "PSL2:4",
            "HA:2",
            "HP:1,3",
            "P3:3",
            "M16",
            "Z4xZ4s",
            "D8sZ4",
            "SG16_3",
            "Z:6",
            "prod(D:6,Z:3)",
            "prod(prod(D:6,Z:2),Z:3)",
        ] {
            let d = parse_descriptor(s).unwrap();
            assert_eq!(d.to_string(), s, "round trip of {s}");
        }
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = parse_descriptor("D:7").unwrap_err();
        assert!(err.to_string().contains("D:7"));
        let err = parse_descriptor("XYZ:3").unwrap_err();
        assert!(err.to_string().contains("XYZ:3"));
        let err = parse_descriptor("HP:1").unwrap_err();
        assert!(err.to_string().contains("HP:1"));
        assert!(parse_descriptor("prod(D:6)").is_err());
        assert!(parse_descriptor("Q:10").is_err());
        assert!(parse_descriptor("QD:12").is_err());
    }
}
