use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Half-integer spin label, stored as twice its value.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Spin(u32);

impl Spin {
    pub const ZERO: Spin = Spin(0);
    pub const HALF: Spin = Spin(1);
    pub const ONE: Spin = Spin(2);

    pub const fn from_twice(twice: u32) -> Self {
        Spin(twice)
    }

    pub const fn integral(l: u32) -> Self {
        Spin(2 * l)
    }

    pub const fn twice(self) -> u32 {
        self.0
    }

    /// Side length `2l + 1` of the corepresentation matrix.
    pub const fn dim(self) -> usize {
        self.0 as usize + 1
    }

    pub const fn is_integral(self) -> bool {
        self.0.is_multiple_of(2)
    }

    /// All spins `0, 1/2, …, max`.
    pub fn up_to(max: Spin) -> impl Iterator<Item = Spin> {
        (0..=max.0).map(Spin)
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_multiple_of(2) {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl FromStr for Spin {
    type Err = Error;

    /// Accepts `3`, `3/2`, `1.5`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax { pos: 0, msg: format!("`{s}` is not a half-integer spin") };
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: u32 = n.trim().parse().map_err(|_| bad())?;
            return match d.trim() {
                "1" => Ok(Spin(2 * n)),
                "2" => Ok(Spin(n)),
                _ => Err(bad()),
            };
        }
        if let Some((i, frac)) = s.split_once('.') {
            let i: u32 = i.parse().map_err(|_| bad())?;
            return match frac.trim_end_matches('0') {
                "" => Ok(Spin(2 * i)),
                "5" => Ok(Spin(2 * i + 1)),
                _ => Err(bad()),
            };
        }
        let n: u32 = s.parse().map_err(|_| bad())?;
        Ok(Spin(2 * n))
    }
}

impl From<Spin> for String {
    fn from(s: Spin) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for Spin {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for (text, twice) in [("0", 0), ("1/2", 1), ("1", 2), ("3/2", 3), ("2.5", 5), ("4/2", 4)] {
            assert_eq!(text.parse::<Spin>().unwrap().twice(), twice);
        }
        assert_eq!(Spin::from_twice(3).to_string(), "3/2");
        assert_eq!(Spin::from_twice(4).to_string(), "2");
        assert!("1/3".parse::<Spin>().is_err());
        assert!("-1".parse::<Spin>().is_err());
    }
}
