//! Domain types for the seven object classes and the predicates that cut out
//! their constrained subfamilies.
//!
//! Every type here is an immutable value with a canonical text form (see
//! `Display` / `FromStr` on each type). Constructors validate, so a value that
//! exists is a valid object of its type.

mod code;
mod drawing;
mod partition;
mod signed;
mod tree;

use std::fmt;

use thiserror::Error;

pub use code::BuildTreeCode;
pub use drawing::{validate_drawing, Drawing};
pub use partition::OrderedPartition;
pub use signed::SignedPermutation;
pub use tree::{LabeledTree, PlaneTree};

use crate::enumerate::Matching;

/// A sign `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    /// `(-1)^(index - 1)` for a 1-based index.
    pub fn of_location(index: usize) -> Sign {
        if index % 2 == 1 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn from_char(c: char) -> Option<Sign> {
        match c {
            '+' => Some(Sign::Plus),
            '-' => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObjectError {
    #[error("cannot parse {kind} from {input:?}: {reason}")]
    Parse {
        kind: &'static str,
        input: String,
        reason: String,
    },
    #[error("invalid ordered partition: {0}")]
    InvalidPartition(String),
    #[error("invalid signed permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid build-tree code entry {numeral}{sign} at position {position}")]
    InvalidCode {
        position: usize,
        numeral: usize,
        sign: Sign,
    },
    #[error("invalid labeled tree: {0}")]
    InvalidTree(String),
    #[error("drawing tree T_{index} has {found} vertices, expected {expected}")]
    SizeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("no leaf of T_{next} can be removed to give T_{index}", next = index + 1)]
    NotLeafRemoval { index: usize },
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
}

pub(crate) fn parse_error(kind: &'static str, input: &str, reason: impl Into<String>) -> ObjectError {
    ObjectError::Parse {
        kind,
        input: input.to_string(),
        reason: reason.into(),
    }
}

/// Parses the shared `value+ value- ...` token grammar.
pub(crate) fn parse_sign_tokens(kind: &'static str, s: &str) -> Result<Vec<(usize, Sign)>, ObjectError> {
    s.split_whitespace()
        .map(|tok| {
            let sign = tok
                .chars()
                .last()
                .and_then(Sign::from_char)
                .ok_or_else(|| parse_error(kind, s, format!("token {tok:?} lacks a trailing sign")))?;
            let value = tok[..tok.len() - 1]
                .parse::<usize>()
                .map_err(|_| parse_error(kind, s, format!("token {tok:?} has no integer part")))?;
            Ok((value, sign))
        })
        .collect()
}

pub(crate) fn fmt_sign_tokens(entries: &[(usize, Sign)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, (v, s)) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{v}{s}")?;
    }
    Ok(())
}

/// Any object handled by enumeration, conversion and the CLI.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Object {
    Partition(OrderedPartition),
    Signed(SignedPermutation),
    Code(BuildTreeCode),
    Tree(LabeledTree),
    Drawing(Drawing),
    Matching(Matching),
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Object::Partition(x) => x.fmt(f),
            Object::Signed(x) => x.fmt(f),
            Object::Code(x) => x.fmt(f),
            Object::Tree(x) => x.fmt(f),
            Object::Drawing(x) => x.fmt(f),
            Object::Matching(x) => x.fmt(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Plus * Sign::Minus, Sign::Minus);
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(Sign::of_location(1), Sign::Plus);
        assert_eq!(Sign::of_location(2), Sign::Minus);
        assert_eq!(Sign::Minus.flip(), Sign::Plus);
    }

    #[test]
    fn token_grammar() {
        let toks = parse_sign_tokens("code", "0+ 12- 3+").unwrap();
        assert_eq!(toks, vec![(0, Sign::Plus), (12, Sign::Minus), (3, Sign::Plus)]);
        assert!(parse_sign_tokens("code", "").unwrap().is_empty());
        assert!(parse_sign_tokens("code", "3").is_err());
        assert!(parse_sign_tokens("code", "+").is_err());
        assert!(parse_sign_tokens("code", "x+").is_err());
    }
}
