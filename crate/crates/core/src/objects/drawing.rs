use std::fmt;
use std::str::FromStr;

use super::{ObjectError, PlaneTree};

/// A growth sequence `T_0, ..., T_n` of plane trees: `T_0` is the bare root
/// and each `T_i` is `T_{i+1}` with one leaf removed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Drawing {
    trees: Vec<PlaneTree>,
}

/// Checks the drawing conditions step by step.
///
/// Leaf removal is checked before vertex counts for every step after `T_0`,
/// so a wrongly sized later tree reports the step where the chain breaks.
pub fn validate_drawing(trees: &[PlaneTree]) -> Result<(), ObjectError> {
    let first = trees.first().ok_or(ObjectError::SizeMismatch {
        index: 0,
        expected: 1,
        found: 0,
    })?;
    if first.size() != 1 {
        return Err(ObjectError::SizeMismatch {
            index: 0,
            expected: 1,
            found: first.size(),
        });
    }
    for (i, pair) in trees.windows(2).enumerate() {
        let (smaller, bigger) = (&pair[0], &pair[1]);
        let target = smaller.encoding();
        if !bigger.leaf_removals().iter().any(|t| t.encoding() == target) {
            return Err(ObjectError::NotLeafRemoval { index: i });
        }
        // implied by the removal check given |T_0| = 1
        if bigger.size() != i + 2 {
            return Err(ObjectError::SizeMismatch {
                index: i + 1,
                expected: i + 2,
                found: bigger.size(),
            });
        }
    }
    Ok(())
}

impl Drawing {
    pub fn new(trees: Vec<PlaneTree>) -> Result<Self, ObjectError> {
        validate_drawing(&trees)?;
        Ok(Drawing { trees })
    }

    pub(crate) fn from_trees_unchecked(trees: Vec<PlaneTree>) -> Self {
        debug_assert!(validate_drawing(&trees).is_ok());
        Drawing { trees }
    }

    pub fn n(&self) -> usize {
        self.trees.len() - 1
    }

    pub fn trees(&self) -> &[PlaneTree] {
        &self.trees
    }

    /// The final tree `T_n`.
    pub fn last(&self) -> &PlaneTree {
        self.trees.last().expect("drawings are never empty")
    }
}

impl fmt::Display for Drawing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.trees.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            f.write_str(&t.encoding())?;
        }
        Ok(())
    }
}

impl FromStr for Drawing {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trees = s
            .split(';')
            .map(|t| t.trim().parse::<PlaneTree>())
            .collect::<Result<Vec<_>, _>>()?;
        Drawing::new(trees)
    }
}
