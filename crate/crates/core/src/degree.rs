//! Truth degrees in [0,1] and the Goedel residuated operations.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

const DIGITS: usize = 9;
const SCALE: u32 = 1_000_000_000;

/// A truth degree stored as an exact decimal with at most nine fractional digits.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Degree(u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DegreeParseError {
    #[error("malformed degree `{0}`")]
    Malformed(String),
    #[error("degree `{0}` has more than 9 fractional digits")]
    TooPrecise(String),
    #[error("degree `{0}` is greater than 1")]
    OutOfRange(String),
}

impl Degree {
    pub const ZERO: Degree = Degree(0);
    pub const ONE: Degree = Degree(SCALE);

    /// Builds a degree from its value scaled by 10^9.
    pub fn from_scaled(v: u32) -> Option<Degree> {
        (v <= SCALE).then_some(Degree(v))
    }

    pub fn scaled(self) -> u32 {
        self.0
    }

    /// `num/den` truncated to nine fractional digits.
    pub fn from_ratio(num: u64, den: u64) -> Option<Degree> {
        if den == 0 || num > den {
            return None;
        }
        Some(Degree((num * SCALE as u64 / den) as u32))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn is_one(self) -> bool {
        self.0 == SCALE
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / SCALE as f64
    }

    /// The next representable degree above `self`, if any.
    pub fn next_up(self) -> Option<Degree> {
        (self.0 < SCALE).then(|| Degree(self.0 + 1))
    }
}

impl FromStr for Degree {
    type Err = DegreeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || DegreeParseError::Malformed(s.to_string());
        let (int, frac) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if int.is_empty()
            || !int.bytes().all(|b| b.is_ascii_digit())
            || !frac.bytes().all(|b| b.is_ascii_digit())
            || (s.contains('.') && frac.is_empty())
        {
            return Err(malformed());
        }
        let frac = frac.trim_end_matches('0');
        if frac.len() > DIGITS {
            return Err(DegreeParseError::TooPrecise(s.to_string()));
        }
        let int = int.trim_start_matches('0');
        let whole: u64 = match int {
            "" => 0,
            "1" => 1,
            _ => return Err(DegreeParseError::OutOfRange(s.to_string())),
        };
        let mut f: u64 = 0;
        for b in frac.bytes() {
            f = f * 10 + (b - b'0') as u64;
        }
        f *= 10u64.pow((DIGITS - frac.len()) as u32);
        let v = whole * SCALE as u64 + f;
        if v > SCALE as u64 {
            return Err(DegreeParseError::OutOfRange(s.to_string()));
        }
        Ok(Degree(v as u32))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == SCALE {
            return f.write_str("1");
        }
        if self.0 == 0 {
            return f.write_str("0");
        }
        let frac = format!("{:09}", self.0);
        write!(f, "0.{}", frac.trim_end_matches('0'))
    }
}

impl fmt::Debug for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Goedel t-norm.
pub fn tnorm(a: Degree, b: Degree) -> Degree {
    a.min(b)
}

/// Goedel residuum: 1 if a <= b, otherwise b.
pub fn residuum(a: Degree, b: Degree) -> Degree {
    if a <= b {
        Degree::ONE
    } else {
        b
    }
}

/// Goedel biresiduum: 1 if a = b, otherwise min(a, b).
pub fn biresiduum(a: Degree, b: Degree) -> Degree {
    if a == b {
        Degree::ONE
    } else {
        a.min(b)
    }
}

/// Infimum of a finite family; the empty infimum is 1.
pub fn inf_all<I: IntoIterator<Item = Degree>>(it: I) -> Degree {
    it.into_iter().fold(Degree::ONE, Degree::min)
}

/// Supremum of a finite family; the empty supremum is 0.
pub fn sup_all<I: IntoIterator<Item = Degree>>(it: I) -> Degree {
    it.into_iter().fold(Degree::ZERO, Degree::max)
}
