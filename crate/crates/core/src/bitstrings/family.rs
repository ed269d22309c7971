use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::word::{mask, BitWord, MAX_LEN};
use crate::error::{Error, Result};

/// Default ceiling on the number of words a single enumeration may produce.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 26;

/// A vertex-membership predicate selecting an induced subgraph of `Q_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CubeFamily {
    /// Every binary string; the hypercube `Q_n`.
    Hypercube,
    /// No `11` substring; the Fibonacci cube.
    Fibonacci,
    /// No `11` substring read cyclically; the Lucas cube.
    Lucas,
    /// No `1^s` substring.
    GenFibonacci(u32),
    /// No circulation containing `1^s`; the generalized Lucas cube.
    GenLucas(u32),
}

/// Forbidden pattern in run form: `1^len`, linearly or cyclically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct RunBan {
    pub len: u32,
    pub circular: bool,
}

impl CubeFamily {
    pub fn validate(&self) -> Result<()> {
        match *self {
            CubeFamily::GenFibonacci(s) | CubeFamily::GenLucas(s) if s < 2 => {
                Err(Error::InvalidParameter(format!(
                    "run length s = {s} for {self}: generalized families need s >= 2"
                )))
            }
            _ => Ok(()),
        }
    }

    pub fn is_member(&self, w: &BitWord) -> Result<bool> {
        self.validate()?;
        Ok(self.admits(w))
    }

    pub(crate) fn run_ban(&self) -> Option<RunBan> {
        match *self {
            CubeFamily::Hypercube => None,
            CubeFamily::Fibonacci => Some(RunBan {
                len: 2,
                circular: false,
            }),
            CubeFamily::Lucas => Some(RunBan {
                len: 2,
                circular: true,
            }),
            CubeFamily::GenFibonacci(s) => Some(RunBan {
                len: s,
                circular: false,
            }),
            CubeFamily::GenLucas(s) => Some(RunBan {
                len: s,
                circular: true,
            }),
        }
    }

    /// Membership without parameter validation.
    #[inline]
    pub(crate) fn admits(&self, w: &BitWord) -> bool {
        match *self {
            CubeFamily::Hypercube => true,
            CubeFamily::Fibonacci => w.is_fibonacci(),
            CubeFamily::Lucas => w.is_lucas(),
            CubeFamily::GenFibonacci(s) => !w.has_ones_run(s),
            CubeFamily::GenLucas(s) => !w.has_circular_ones_run(s),
        }
    }
}

impl fmt::Display for CubeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CubeFamily::Hypercube => f.write_str("qn"),
            CubeFamily::Fibonacci => f.write_str("fib"),
            CubeFamily::Lucas => f.write_str("lucas"),
            CubeFamily::GenFibonacci(s) => write!(f, "fib1s:{s}"),
            CubeFamily::GenLucas(s) => write!(f, "lucas1s:{s}"),
        }
    }
}

impl FromStr for CubeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_s = |v: &str| -> Result<u32> {
            v.parse()
                .map_err(|_| Error::Parse(format!("invalid run length {v:?} in family {s:?}")))
        };
        let family = match s {
            "qn" => CubeFamily::Hypercube,
            "fib" => CubeFamily::Fibonacci,
            "lucas" => CubeFamily::Lucas,
            _ => {
                if let Some(v) = s.strip_prefix("fib1s:") {
                    CubeFamily::GenFibonacci(parse_s(v)?)
                } else if let Some(v) = s.strip_prefix("lucas1s:") {
                    CubeFamily::GenLucas(parse_s(v)?)
                } else {
                    return Err(Error::Parse(format!(
                        "unknown family {s:?}; expected qn | fib | lucas | fib1s:<s> | lucas1s:<s>"
                    )));
                }
            }
        };
        family.validate()?;
        Ok(family)
    }
}

impl Serialize for CubeFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CubeFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All members of `family` of length `n`, in ascending packed order, capped
/// at [`DEFAULT_ENUM_CAP`] words.
pub fn enumerate_family(family: CubeFamily, n: u32) -> Result<Vec<BitWord>> {
    enumerate_family_capped(family, n, DEFAULT_ENUM_CAP)
}

pub fn enumerate_family_capped(family: CubeFamily, n: u32, cap: u64) -> Result<Vec<BitWord>> {
    family.validate()?;
    enumerate_unchecked(family, n, cap)
}

pub(crate) fn enumerate_unchecked(family: CubeFamily, n: u32, cap: u64) -> Result<Vec<BitWord>> {
    if n > MAX_LEN {
        return Err(Error::InvalidInput(format!(
            "length {n} exceeds maximum {MAX_LEN}"
        )));
    }
    let limit_err = || Error::ResourceLimit {
        what: format!("enumeration of {family} at n = {n}"),
        cap,
    };
    let Some(ban) = family.run_ban() else {
        let total = 1u64 << n;
        if total > cap {
            return Err(limit_err());
        }
        return Ok((0..=mask(n)).map(|b| BitWord::from_raw(n, b)).collect());
    };

    let mut out = Vec::new();
    let mut walker = Walker {
        n,
        ban,
        cap,
        family,
        out: &mut out,
    };
    if !walker.descend(0, 0, 0) {
        return Err(limit_err());
    }
    Ok(out)
}

/// Depth-first generation of words avoiding a linear `1^s`, zero branch
/// first so output is ascending. Cyclic bans are filtered at the leaves.
struct Walker<'a> {
    n: u32,
    ban: RunBan,
    cap: u64,
    family: CubeFamily,
    out: &'a mut Vec<BitWord>,
}

impl Walker<'_> {
    /// Returns false once the cap is hit.
    fn descend(&mut self, prefix: u64, depth: u32, trailing_ones: u32) -> bool {
        if depth == self.n {
            let w = BitWord::from_raw(self.n, prefix);
            if self.ban.circular && !self.family.admits(&w) {
                return true;
            }
            if self.out.len() as u64 >= self.cap {
                return false;
            }
            self.out.push(w);
            return true;
        }
        if !self.descend(prefix << 1, depth + 1, 0) {
            return false;
        }
        if trailing_ones + 1 < self.ban.len {
            return self.descend((prefix << 1) | 1, depth + 1, trailing_ones + 1);
        }
        true
    }
}
