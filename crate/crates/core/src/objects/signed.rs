use std::fmt;
use std::str::FromStr;

use super::{fmt_sign_tokens, parse_sign_tokens, ObjectError, Sign};

/// A permutation of `{1, ..., n}` with a sign attached to every value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    entries: Vec<(usize, Sign)>,
}

impl SignedPermutation {
    pub fn new(entries: Vec<(usize, Sign)>) -> Result<Self, ObjectError> {
        let n = entries.len();
        let mut seen = vec![false; n + 1];
        for &(v, _) in &entries {
            if v == 0 || v > n {
                return Err(ObjectError::InvalidPermutation(format!("value {v} outside 1..={n}")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(ObjectError::InvalidPermutation(format!("value {v} repeated")));
            }
        }
        Ok(SignedPermutation { entries })
    }

    pub fn empty() -> Self {
        SignedPermutation { entries: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Sign)] {
        &self.entries
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().map(|&(v, _)| v)
    }

    /// Sign carried by value `v`.
    pub fn sign_of(&self, v: usize) -> Option<Sign> {
        self.entries.iter().find(|&&(x, _)| x == v).map(|&(_, s)| s)
    }

    /// Left-to-right minima as `(value, position, sign)`, positions 1-based.
    pub fn ltr_minima(&self) -> Vec<(usize, usize, Sign)> {
        let mut out = Vec::new();
        let mut current = usize::MAX;
        for (i, &(v, s)) in self.entries.iter().enumerate() {
            if v < current {
                current = v;
                out.push((v, i + 1, s));
            }
        }
        out
    }

    pub fn all_minima_positive(&self) -> bool {
        self.ltr_minima().iter().all(|&(_, _, s)| s.is_plus())
    }

    pub fn all_minima_negative(&self) -> bool {
        self.ltr_minima().iter().all(|&(_, _, s)| !s.is_plus())
    }

    /// Every adjacent same-sign pair strictly decreases.
    pub fn has_decreasing_blocks(&self) -> bool {
        self.entries
            .windows(2)
            .all(|w| w[0].1 != w[1].1 || w[0].0 > w[1].0)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_sign_tokens(&self.entries, f)
    }
}

impl FromStr for SignedPermutation {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SignedPermutation::new(parse_sign_tokens("signed permutation", s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn s(t: &str) -> SignedPermutation {
        t.parse().unwrap()
    }

    #[test]
    fn ltr_minima_examples() {
        assert_eq!(s("5+ 1+ 4- 3- 6+ 2+").ltr_minima(), vec![(5, 1, Plus), (1, 2, Plus)]);
        assert_eq!(s("1+ 2- 3+").ltr_minima(), vec![(1, 1, Plus)]);
        assert_eq!(s("2- 1+").ltr_minima(), vec![(2, 1, Minus), (1, 2, Plus)]);
    }

    #[test]
    fn decreasing_blocks() {
        assert!(s("5+ 1+ 6- 4- 2- 3+").has_decreasing_blocks());
        assert!(!s("1+ 2+").has_decreasing_blocks());
        assert!(s("1+").has_decreasing_blocks());
        assert!(SignedPermutation::empty().has_decreasing_blocks());
    }

    #[test]
    fn rejects_non_permutations() {
        assert!("1+ 1-".parse::<SignedPermutation>().is_err());
        assert!("2+".parse::<SignedPermutation>().is_err());
        assert!("0+".parse::<SignedPermutation>().is_err());
    }

    #[test]
    fn round_trips_text() {
        assert_eq!(s("5+ 1+ 4- 3- 6+ 2+").to_string(), "5+ 1+ 4- 3- 6+ 2+");
        assert_eq!(s("  2-   1+ ").to_string(), "2- 1+");
        assert_eq!(s("2- 1+").sign_of(2), Some(Minus));
    }
}
