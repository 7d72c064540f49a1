use std::fmt;
use std::str::FromStr;

use super::{fmt_sign_tokens, parse_sign_tokens, ObjectError, Sign};

/// A build-tree code `c_1 ... c_n` with `c_i = (a_i, s_i)`, `0 <= a_i <= i - 1`
/// and `c_i != (0, -)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BuildTreeCode {
    entries: Vec<(usize, Sign)>,
}

impl BuildTreeCode {
    pub fn new(entries: Vec<(usize, Sign)>) -> Result<Self, ObjectError> {
        for (i, &(numeral, sign)) in entries.iter().enumerate() {
            let position = i + 1;
            if numeral >= position || (numeral == 0 && sign == Sign::Minus) {
                return Err(ObjectError::InvalidCode {
                    position,
                    numeral,
                    sign,
                });
            }
        }
        Ok(BuildTreeCode { entries })
    }

    pub fn empty() -> Self {
        BuildTreeCode { entries: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Sign)] {
        &self.entries
    }

    /// Class (4): every `v-` is followed, somewhere later, by a `v+`.
    pub fn has_plus_after_each_minus(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &(v, s))| {
            s.is_plus() || self.entries[i + 1..].contains(&(v, Sign::Plus))
        })
    }

    /// Class (5): every `v-` is preceded, somewhere earlier, by a `v+`.
    pub fn has_plus_before_each_minus(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, &(v, s))| {
            s.is_plus() || self.entries[..i].contains(&(v, Sign::Plus))
        })
    }
}

impl fmt::Display for BuildTreeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sign_tokens(&self.entries, f)
    }
}

impl FromStr for BuildTreeCode {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuildTreeCode::new(parse_sign_tokens("build-tree code", s)?)
    }
}
