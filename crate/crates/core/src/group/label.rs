//! Group labels such as "A3", "B4", "I2:7", "H3".

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Irreducible finite Coxeter types handled here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// A_n, the symmetric group S_{n+1}.
    A(usize),
    /// B_n; C_n is accepted as an alias.
    B(usize),
    D(usize),
    /// Dihedral group of order 2m, non-crystallographic realization.
    I2(usize),
    /// Crystallographic realization of the dihedral group of order 12.
    G2,
    H3,
    H4,
    F4,
    E6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupLabel {
    pub family: Family,
}

impl GroupLabel {
    pub fn new(family: Family) -> Result<Self> {
        let label = GroupLabel { family };
        label.validate()?;
        Ok(label)
    }

    pub fn a(n: usize) -> Self {
        Self::new(Family::A(n)).expect("rank in range")
    }

    pub fn b(n: usize) -> Self {
        Self::new(Family::B(n)).expect("rank in range")
    }

    pub fn d(n: usize) -> Self {
        Self::new(Family::D(n)).expect("rank in range")
    }

    pub fn i2(m: usize) -> Self {
        Self::new(Family::I2(m)).expect("m in range")
    }

    pub fn rank(&self) -> usize {
        match self.family {
            Family::A(n) | Family::B(n) | Family::D(n) => n,
            Family::I2(_) | Family::G2 => 2,
            Family::H3 => 3,
            Family::H4 | Family::F4 => 4,
            Family::E6 => 6,
        }
    }

    /// Groups that are only built when explicitly requested.
    pub fn is_stretch(&self) -> bool {
        matches!(self.family, Family::H4 | Family::E6)
    }

    pub fn is_crystallographic(&self) -> bool {
        !matches!(self.family, Family::I2(_) | Family::H3 | Family::H4)
    }

    fn validate(&self) -> Result<()> {
        let bad = |reason: &str| Err(Error::Unsupported { label: self.to_string(), reason: reason.into() });
        match self.family {
            Family::A(n) if n > 7 => bad("rank above 7 is beyond desk scale"),
            Family::B(n) if !(2..=5).contains(&n) => bad("type B needs 2 ≤ n ≤ 5"),
            Family::D(n) if !(3..=5).contains(&n) => bad("type D needs 3 ≤ n ≤ 5"),
            Family::I2(m) if !(3..=30).contains(&m) => bad("dihedral type needs 3 ≤ m ≤ 30"),
            _ => Ok(()),
        }
    }

    /// Parse a label; stretch types are rejected unless `allow_stretch`.
    pub fn parse_with(s: &str, allow_stretch: bool) -> Result<Self> {
        let label: GroupLabel = s.parse()?;
        if label.is_stretch() && !allow_stretch {
            return Err(Error::Unsupported {
                label: label.to_string(),
                reason: "stretch type; pass --allow-stretch".into(),
            });
        }
        Ok(label)
    }
}

impl FromStr for GroupLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let upper = t.to_ascii_uppercase();
        let parse_err = || Error::Parse(s.to_string());
        if let Some(rest) = upper.strip_prefix("I2") {
            let m = rest.trim_start_matches([':', '(', '_']).trim_end_matches(')');
            let m: usize = m.parse().map_err(|_| parse_err())?;
            return Self::new(Family::I2(m));
        }
        let (head, tail) = upper.split_at(1.min(upper.len()));
        let n: usize = tail.parse().map_err(|_| parse_err())?;
        let family = match (head, n) {
            ("A", n) => Family::A(n),
            ("B", n) | ("C", n) => Family::B(n),
            ("D", n) => Family::D(n),
            ("G", 2) => Family::G2,
            ("H", 3) => Family::H3,
            ("H", 4) => Family::H4,
            ("F", 4) => Family::F4,
            ("E", 6) => Family::E6,
            ("E", 7) | ("E", 8) => {
                return Err(Error::Unsupported { label: t.to_string(), reason: "unsupported at desk scale".into() })
            }
            _ => return Err(parse_err()),
        };
        Self::new(family)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A(n) => write!(f, "A{n}"),
            Family::B(n) => write!(f, "B{n}"),
            Family::D(n) => write!(f, "D{n}"),
            Family::I2(m) => write!(f, "I2:{m}"),
            Family::G2 => write!(f, "G2"),
            Family::H3 => write!(f, "H3"),
            Family::H4 => write!(f, "H4"),
            Family::F4 => write!(f, "F4"),
            Family::E6 => write!(f, "E6"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for s in ["A0", "A3", "B4", "D4", "I2:7", "G2", "H3", "F4", "E6", "H4"] {
            let l: GroupLabel = s.parse().unwrap();
            assert_eq!(l.to_string(), s);
        }
        assert_eq!("C3".parse::<GroupLabel>().unwrap().to_string(), "B3");
    }

    #[test]
    fn rejections() {
        assert!(matches!("E8".parse::<GroupLabel>(), Err(Error::Unsupported { .. })));
        assert!(matches!("A9".parse::<GroupLabel>(), Err(Error::Unsupported { .. })));
        assert!(matches!("Q2".parse::<GroupLabel>(), Err(Error::Parse(_))));
        assert!(GroupLabel::parse_with("H4", false).is_err());
        assert!(GroupLabel::parse_with("H4", true).is_ok());
    }
}
