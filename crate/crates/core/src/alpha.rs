use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Balance fraction `num/den`, reduced, strictly between 1/2 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Alpha {
    num: u64,
    den: u64,
}

impl Alpha {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        let text = format!("{num}/{den}");
        if den == 0 {
            return Err(Error::Alpha(text));
        }
        let g = gcd(num, den);
        let (num, den) = (num / g, den / g);
        // 1/2 < num/den < 1
        if 2 * u128::from(num) <= u128::from(den) || num >= den {
            return Err(Error::Alpha(text));
        }
        Ok(Alpha { num, den })
    }

    pub fn num(self) -> u64 {
        self.num
    }

    pub fn den(self) -> u64 {
        self.den
    }

    /// `lhs <= alpha * rhs`, evaluated as `den * lhs <= num * rhs`.
    pub fn bounds(self, lhs: u64, rhs: u64) -> bool {
        u128::from(self.den) * u128::from(lhs) <= u128::from(self.num) * u128::from(rhs)
    }

    /// Largest integer `w` with `w <= alpha * total`.
    pub fn floor_of(self, total: u64) -> u64 {
        (u128::from(self.num) * u128::from(total) / u128::from(self.den)) as u64
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FromStr for Alpha {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Alpha(s.to_string());
        let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
        let p = p.trim().parse().map_err(|_| bad())?;
        let q = q.trim().parse().map_err(|_| bad())?;
        Alpha::new(p, q).map_err(|_| bad())
    }
}

impl TryFrom<String> for Alpha {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Alpha> for String {
    fn from(a: Alpha) -> String {
        a.to_string()
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
