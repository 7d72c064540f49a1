use std::fmt;
use std::str::FromStr;

use super::{parse_error, ObjectError};

/// An ordered sequence of disjoint nonempty blocks whose union is `{1, ..., n}`.
///
/// Blocks are stored sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self, ObjectError> {
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for block in &mut blocks {
            if block.is_empty() {
                return Err(ObjectError::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &x in block.iter() {
                if x == 0 || x > n {
                    return Err(ObjectError::InvalidPartition(format!(
                        "element {x} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(ObjectError::InvalidPartition(format!("element {x} repeated")));
                }
            }
        }
        Ok(OrderedPartition { blocks })
    }

    pub fn empty() -> Self {
        OrderedPartition { blocks: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Left-to-right minima as `(value, block)` pairs, block 1-based, in block order.
    pub fn ltr_minima(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut current = usize::MAX;
        for (j, block) in self.blocks.iter().enumerate() {
            let m = block[0];
            if m < current {
                current = m;
                out.push((m, j + 1));
            }
        }
        out
    }

    pub fn all_minima_at_odd_locations(&self) -> bool {
        self.ltr_minima().iter().all(|&(_, j)| j % 2 == 1)
    }

    /// The 1-based block index holding `x`, if any.
    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok()).map(|j| j + 1)
    }
}

impl fmt::Display for OrderedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = self.n() < 10;
        let any_multi = self.blocks.iter().any(|b| b.len() > 1);
        for (j, block) in self.blocks.iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            if digits {
                for x in block {
                    write!(f, "{x}")?;
                }
            } else {
                let parts: Vec<String> = block.iter().map(usize::to_string).collect();
                f.write_str(&parts.join(","))?;
                // keep the comma grammar recognisable when every block is a singleton
                if j == 0 && !any_multi {
                    f.write_str(",")?;
                }
            }
        }
        Ok(())
    }
}

impl FromStr for OrderedPartition {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let comma_mode = s.contains(',');
        let mut blocks = Vec::new();
        for part in s.split('|') {
            let part = part.trim();
            let block: Vec<usize> = if comma_mode {
                part.split(',')
                    .map(str::trim)
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| parse_error("ordered partition", s, format!("bad element {t:?}"))))
                    .collect::<Result<_, _>>()?
            } else {
                part.chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| parse_error("ordered partition", s, format!("bad digit {c:?}")))
                    })
                    .collect::<Result<_, _>>()?
            };
            blocks.push(block);
        }
        OrderedPartition::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> OrderedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn ltr_minima_examples() {
        assert_eq!(p("15|246|3").ltr_minima(), vec![(1, 1)]);
        assert_eq!(p("2|1|3").ltr_minima(), vec![(2, 1), (1, 2)]);
        assert_eq!(p("123").ltr_minima(), vec![(1, 1)]);
    }

    #[test]
    fn odd_locations() {
        assert!(p("2|3|1").all_minima_at_odd_locations());
        assert!(!p("2|1|3").all_minima_at_odd_locations());
        assert!(p("123").all_minima_at_odd_locations());
        assert!(OrderedPartition::empty().all_minima_at_odd_locations());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("15|642|3").to_string(), "15|246|3");
        assert_eq!(p("").n(), 0);
        assert_eq!(p("").to_string(), "");
        let big = p("1,10|2,3,4,5,6,7,8,9");
        assert_eq!(big.n(), 10);
        assert_eq!(big.to_string(), "1,10|2,3,4,5,6,7,8,9");
        assert_eq!(big.to_string().parse::<OrderedPartition>().unwrap(), big);
        let singles = OrderedPartition::new((1..=10).rev().map(|x| vec![x]).collect()).unwrap();
        assert_eq!(singles.to_string().parse::<OrderedPartition>().unwrap(), singles);
        assert_eq!(p("1,15|2,3,4,5,6,7,8,9,10,11,12,13,14").block_of(15), Some(1));
    }

    #[test]
    fn rejects_invalid() {
        assert!("12|2".parse::<OrderedPartition>().is_err());
        assert!("13".parse::<OrderedPartition>().is_err());
        assert!("1||2".parse::<OrderedPartition>().is_err());
        assert!("1a".parse::<OrderedPartition>().is_err());
        assert!("0|1".parse::<OrderedPartition>().is_err());
    }
}
