//! Brute-force generators for every object class. These are the independent
//! oracles that the bijections, the region classifier and the power series
//! are checked against.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use crate::arrangement::{count_bounded_with_limit, ArrangementKind};
use crate::maps;
use crate::objects::{
    BuildTreeCode, Drawing, LabeledTree, Object, ObjectError, OrderedPartition, PlaneTree, Sign,
    SignedPermutation,
};
use crate::series;

/// Largest `n` accepted unless a caller raises it.
pub const DEFAULT_LIMIT: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("cross-check mismatch at n = {n}: {check}: expected {expected}, got {actual}")]
    MismatchFound {
        n: usize,
        check: String,
        expected: String,
        actual: String,
    },
}

/// The enumerable classes: the six constrained classes, their unconstrained
/// supersets, the `B_n`-level classes and the matching model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ObjectClass {
    OrderedPartitionsAll,
    OrderedPartitionsOddMinima,
    SignedPermsAll,
    SignedPermsPositiveMinima,
    SignedPermsDecreasingPositive,
    CodesAll,
    CodesAfter,
    CodesBefore,
    LabeledTrees,
    KlazarTrees,
    Drawings,
    Matchings,
}

impl ObjectClass {
    pub const ALL: [ObjectClass; 12] = [
        ObjectClass::OrderedPartitionsAll,
        ObjectClass::OrderedPartitionsOddMinima,
        ObjectClass::SignedPermsAll,
        ObjectClass::SignedPermsPositiveMinima,
        ObjectClass::SignedPermsDecreasingPositive,
        ObjectClass::CodesAll,
        ObjectClass::CodesAfter,
        ObjectClass::CodesBefore,
        ObjectClass::LabeledTrees,
        ObjectClass::KlazarTrees,
        ObjectClass::Drawings,
        ObjectClass::Matchings,
    ];

    /// Classes (2) through (7), all counted by `b_n`.
    pub const CONSTRAINED: [ObjectClass; 6] = [
        ObjectClass::OrderedPartitionsOddMinima,
        ObjectClass::SignedPermsDecreasingPositive,
        ObjectClass::CodesAfter,
        ObjectClass::CodesBefore,
        ObjectClass::KlazarTrees,
        ObjectClass::Drawings,
    ];

    /// The `B_n`-level classes, all counted by `(2n-1)!!`.
    pub const DOUBLE_FACTORIAL: [ObjectClass; 3] = [
        ObjectClass::SignedPermsPositiveMinima,
        ObjectClass::CodesAll,
        ObjectClass::LabeledTrees,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ObjectClass::OrderedPartitionsAll => "ordered-partitions",
            ObjectClass::OrderedPartitionsOddMinima => "ordered-partitions-odd-minima",
            ObjectClass::SignedPermsAll => "signed-perms",
            ObjectClass::SignedPermsPositiveMinima => "signed-perms-positive-minima",
            ObjectClass::SignedPermsDecreasingPositive => "signed-perms-decreasing-positive",
            ObjectClass::CodesAll => "codes",
            ObjectClass::CodesAfter => "codes-after",
            ObjectClass::CodesBefore => "codes-before",
            ObjectClass::LabeledTrees => "labeled-trees",
            ObjectClass::KlazarTrees => "klazar-trees",
            ObjectClass::Drawings => "drawings",
            ObjectClass::Matchings => "matchings",
        }
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ObjectClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ObjectClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown object class {s:?}"))
    }
}

/// A perfect matching of `{1, ..., 2n}`, pairs stored as `(a, b)` with
/// `a < b`, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(pairs: Vec<(usize, usize)>) -> Result<Self, ObjectError> {
        let mut pairs: Vec<(usize, usize)> =
            pairs.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        pairs.sort_unstable();
        let m = 2 * pairs.len();
        let mut seen = vec![false; m + 1];
        for &(a, b) in &pairs {
            for x in [a, b] {
                if x == 0 || x > m || std::mem::replace(&mut seen[x], true) {
                    return Err(ObjectError::InvalidMatching(format!("element {x} invalid or repeated")));
                }
            }
        }
        Ok(Matching { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// No even number is matched to a larger odd number.
    pub fn is_admissible(&self) -> bool {
        self.pairs.iter().all(|&(a, b)| !(a % 2 == 0 && b % 2 == 1))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (a, b)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Enumeration with a configurable size cap.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    pub limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator { limit: DEFAULT_LIMIT }
    }
}

impl Enumerator {
    pub fn new(limit: usize) -> Self {
        Enumerator { limit }
    }

    fn check(&self, n: usize) -> Result<(), EnumError> {
        if n > self.limit {
            Err(EnumError::LimitExceeded { n, limit: self.limit })
        } else {
            Ok(())
        }
    }

    /// All objects of `cls` on `[n]`, sorted by their text form.
    pub fn enumerate_class(&self, cls: ObjectClass, n: usize) -> Result<Vec<Object>, EnumError> {
        self.check(n)?;
        let mut out = raw_objects(cls, n);
        let mut keyed: Vec<(String, Object)> = out.drain(..).map(|o| (o.to_string(), o)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(keyed.into_iter().map(|(_, o)| o).collect())
    }

    pub fn count_class(&self, cls: ObjectClass, n: usize) -> Result<usize, EnumError> {
        self.check(n)?;
        Ok(raw_objects(cls, n).len())
    }

    pub fn enumerate_matchings(&self, n: usize) -> Result<Vec<Matching>, EnumError> {
        self.check(n)?;
        Ok(matchings(n))
    }
}

fn raw_objects(cls: ObjectClass, n: usize) -> Vec<Object> {
    use ObjectClass::*;
    match cls {
        OrderedPartitionsAll => ordered_partitions(n).into_iter().map(Object::Partition).collect(),
        OrderedPartitionsOddMinima => ordered_partitions(n)
            .into_iter()
            .filter(OrderedPartition::all_minima_at_odd_locations)
            .map(Object::Partition)
            .collect(),
        SignedPermsAll => signed_permutations(n).into_iter().map(Object::Signed).collect(),
        SignedPermsPositiveMinima => signed_permutations(n)
            .into_iter()
            .filter(SignedPermutation::all_minima_positive)
            .map(Object::Signed)
            .collect(),
        SignedPermsDecreasingPositive => signed_permutations(n)
            .into_iter()
            .filter(|s| s.has_decreasing_blocks() && s.all_minima_positive())
            .map(Object::Signed)
            .collect(),
        CodesAll => build_tree_codes(n).into_iter().map(Object::Code).collect(),
        CodesAfter => build_tree_codes(n)
            .into_iter()
            .filter(BuildTreeCode::has_plus_after_each_minus)
            .map(Object::Code)
            .collect(),
        CodesBefore => build_tree_codes(n)
            .into_iter()
            .filter(BuildTreeCode::has_plus_before_each_minus)
            .map(Object::Code)
            .collect(),
        LabeledTrees => labeled_trees(n).into_iter().map(Object::Tree).collect(),
        KlazarTrees => labeled_trees(n)
            .into_iter()
            .filter(LabeledTree::is_klazar)
            .map(Object::Tree)
            .collect(),
        Drawings => drawings(n).into_iter().map(Object::Drawing).collect(),
        Matchings => matchings(n).into_iter().map(Object::Matching).collect(),
    }
}

/// All `n!` permutations of `[n]` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let n = used.len() - 1;
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
    out
}

/// All ordered partitions of `[n]`: choose the first block among the
/// remaining elements, recurse.
pub fn ordered_partitions(n: usize) -> Vec<OrderedPartition> {
    fn go(remaining: u32, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedPartition>) {
        if remaining == 0 {
            out.push(OrderedPartition::new(blocks.clone()).expect("blocks partition [n]"));
            return;
        }
        // nonempty submasks of `remaining`
        let mut sub = remaining;
        while sub != 0 {
            let block = (0..32).filter(|b| sub >> b & 1 == 1).map(|b| b as usize + 1).collect();
            blocks.push(block);
            go(remaining & !sub, blocks, out);
            blocks.pop();
            sub = (sub - 1) & remaining;
        }
    }
    assert!(n < 32, "ordered partitions are enumerated for n < 32 only");
    let mut out = Vec::new();
    go((1u32 << n) - 1, &mut Vec::new(), &mut out);
    out
}

/// All `2^n n!` signed permutations.
pub fn signed_permutations(n: usize) -> Vec<SignedPermutation> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for mask in 0u32..(1 << n) {
            let entries = perm
                .iter()
                .enumerate()
                .map(|(k, &v)| (v, if mask >> k & 1 == 1 { Sign::Minus } else { Sign::Plus }))
                .collect();
            out.push(SignedPermutation::new(entries).expect("permutation of [n]"));
        }
    }
    out
}

/// All `(2n-1)!!` build-tree codes of length `n`.
pub fn build_tree_codes(n: usize) -> Vec<BuildTreeCode> {
    fn go(n: usize, prefix: &mut Vec<(usize, Sign)>, out: &mut Vec<BuildTreeCode>) {
        let i = prefix.len() + 1;
        if i > n {
            out.push(BuildTreeCode::new(prefix.clone()).expect("choices respect the code rules"));
            return;
        }
        for a in 0..i {
            for sign in [Sign::Plus, Sign::Minus] {
                if a == 0 && sign == Sign::Minus {
                    continue;
                }
                prefix.push((a, sign));
                go(n, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All increasingly labeled trees on `n + 1` vertices, grown by attaching
/// label `i` at each of the `2i - 1` child slots of the tree on `[0, i-1]`.
pub fn labeled_trees(n: usize) -> Vec<LabeledTree> {
    fn go(n: usize, children: &mut Vec<Vec<usize>>, out: &mut Vec<LabeledTree>) {
        let i = children.len();
        if i > n {
            out.push(LabeledTree::from_children(children.clone()).expect("increasing by construction"));
            return;
        }
        children.push(Vec::new());
        for v in 0..i {
            for slot in 0..=children[v].len() {
                children[v].insert(slot, i);
                go(n, children, out);
                children[v].remove(slot);
            }
        }
        children.pop();
    }
    let mut out = Vec::new();
    go(n, &mut vec![Vec::new()], &mut out);
    out
}

/// All drawings with `n + 1` vertices by forward extension. Extensions of a
/// tree that produce equal plane trees are merged before branching.
pub fn drawings(n: usize) -> Vec<Drawing> {
    fn go(n: usize, trees: &mut Vec<PlaneTree>, out: &mut Vec<Drawing>) {
        if trees.len() == n + 1 {
            out.push(Drawing::from_trees_unchecked(trees.clone()));
            return;
        }
        let distinct: BTreeSet<PlaneTree> = trees.last().expect("nonempty").leaf_extensions().into_iter().collect();
        for next in distinct {
            trees.push(next);
            go(n, trees, out);
            trees.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![PlaneTree::leaf()], &mut out);
    out
}

/// Perfect matchings of `[2n]` with no even number matched to a larger odd
/// number, by pairing the smallest free element with each admissible partner.
pub fn matchings(n: usize) -> Vec<Matching> {
    fn go(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, out: &mut Vec<Matching>) {
        if free.is_empty() {
            out.push(Matching::new(pairs.clone()).expect("pairs cover [2n]"));
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free[k];
            if a.is_multiple_of(2) && b % 2 == 1 {
                continue;
            }
            free.remove(k);
            pairs.push((a, b));
            go(free, pairs, out);
            pairs.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut (1..=2 * n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `(2n-1)!!`, with `(-1)!! = 1`.
pub fn odd_double_factorial(n: usize) -> u64 {
    (1..=n as u64).map(|i| 2 * i - 1).product()
}

/// One row of a cross-check report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub check: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl CheckLine {
    fn new(check: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        CheckLine { check: check.into(), ok: expected == actual, expected, actual }
    }
}

#[derive(Clone, Debug)]
pub struct CrossCheckReport {
    pub n: usize,
    pub lines: Vec<CheckLine>,
}

impl CrossCheckReport {
    pub fn all_ok(&self) -> bool {
        self.lines.iter().all(|l| l.ok)
    }
}

impl fmt::Display for CrossCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.lines {
            let status = if l.ok { "PASS" } else { "FAIL" };
            writeln!(f, "{status}  n={}  {:<52} expected {:<8} got {}", self.n, l.check, l.expected, l.actual)?;
        }
        Ok(())
    }
}

/// Checks that `f` maps `sources` bijectively onto `targets`, comparing text forms.
fn bijection_line<A, B: fmt::Display, C: fmt::Display>(
    name: &str,
    sources: &[A],
    targets: &[C],
    f: impl Fn(&A) -> B,
) -> CheckLine {
    let images: BTreeSet<String> = sources.iter().map(|x| f(x).to_string()).collect();
    let target_set: BTreeSet<String> = targets.iter().map(ToString::to_string).collect();
    let verdict = |ok: bool| if ok { "bijective" } else { "not bijective" };
    CheckLine::new(
        format!("{name} is a bijection"),
        verdict(true),
        verdict(images.len() == sources.len() && images == target_set),
    )
}

/// Builds the full cross-check table for size `n` without stopping at the
/// first failure.
pub fn cross_check_report(n: usize, limit: usize) -> Result<CrossCheckReport, EnumError> {
    let en = Enumerator::new(limit);
    en.check(n)?;
    let b_n: BigInt = series::egf_b(n).expect("integral coefficients")[n].clone();
    let double_fact = odd_double_factorial(n);
    let mut lines = Vec::new();

    for cls in ObjectClass::CONSTRAINED {
        lines.push(CheckLine::new(format!("|{cls}| = b_n"), &b_n, en.count_class(cls, n)?));
    }
    lines.push(CheckLine::new("|matchings| = b_n", &b_n, en.enumerate_matchings(n)?.len()));
    lines.push(CheckLine::new(
        "bounded regions of H_n slice = b_n",
        &b_n,
        count_bounded_with_limit(ArrangementKind::H, n, limit).map_err(|_| EnumError::LimitExceeded { n, limit })?,
    ));
    lines.push(CheckLine::new("b_via_composition = b_n", &b_n, series::b_via_composition(n)));
    for cls in ObjectClass::DOUBLE_FACTORIAL {
        lines.push(CheckLine::new(format!("|{cls}| = (2n-1)!!"), double_fact, en.count_class(cls, n)?));
    }
    lines.push(CheckLine::new(
        "bounded regions of B_n slice = (2n-1)!!",
        double_fact,
        count_bounded_with_limit(ArrangementKind::B, n, limit).map_err(|_| EnumError::LimitExceeded { n, limit })?,
    ));

    let all_partitions = ordered_partitions(n);
    let all_signed = signed_permutations(n);
    let all_codes = build_tree_codes(n);
    let all_trees = labeled_trees(n);
    let parts: Vec<_> = all_partitions.iter().filter(|p| p.all_minima_at_odd_locations()).cloned().collect();
    let positive: Vec<_> = all_signed.iter().filter(|s| s.all_minima_positive()).cloned().collect();
    let signed: Vec<_> = positive.iter().filter(|s| s.has_decreasing_blocks()).cloned().collect();
    let after: Vec<_> = all_codes.iter().filter(|c| c.has_plus_after_each_minus()).cloned().collect();
    let before: Vec<_> = all_codes.iter().filter(|c| c.has_plus_before_each_minus()).cloned().collect();
    let klazar: Vec<_> = all_trees.iter().filter(|t| t.is_klazar()).cloned().collect();
    let draws = drawings(n);
    let signed_to_code = |s: &SignedPermutation| maps::signed_to_code(s).map_or_else(|e| e.to_string(), |c| c.to_string());

    lines.push(bijection_line("partition_to_signed (2)->(3)", &parts, &signed, maps::partition_to_signed));
    lines.push(bijection_line("signed_to_partition (3)->(2)", &signed, &parts, maps::signed_to_partition));
    lines.push(bijection_line("signed_to_code (3)->(4)", &signed, &after, signed_to_code));
    lines.push(bijection_line("code_to_signed (4)->(3)", &after, &signed, maps::code_to_signed));
    lines.push(bijection_line("reverse_signs (4)->(5)", &after, &before, maps::reverse_signs));
    lines.push(bijection_line("reverse_signs (5)->(4)", &before, &after, maps::reverse_signs));
    lines.push(bijection_line("code_to_tree (5)->(6)", &before, &klazar, maps::code_to_tree));
    lines.push(bijection_line("tree_to_code (6)->(5)", &klazar, &before, maps::tree_to_code));
    lines.push(bijection_line("tree_to_drawing (6)->(7)", &klazar, &draws, maps::tree_to_drawing));
    lines.push(bijection_line("drawing_to_tree (7)->(6)", &draws, &klazar, maps::drawing_to_tree));
    lines.push(bijection_line("signed_to_code B(2)->B(3)", &positive, &all_codes, signed_to_code));
    lines.push(bijection_line("code_to_signed B(3)->B(2)", &all_codes, &positive, maps::code_to_signed));
    lines.push(bijection_line("code_to_tree B(3)->B(4)", &all_codes, &all_trees, maps::code_to_tree));
    lines.push(bijection_line("tree_to_code B(4)->B(3)", &all_trees, &all_codes, maps::tree_to_code));

    Ok(CrossCheckReport { n, lines })
}

/// Runs [`cross_check_report`] under the default limit, failing on the first
/// discrepancy.
pub fn cross_check(n: usize) -> Result<CrossCheckReport, EnumError> {
    let report = cross_check_report(n, DEFAULT_LIMIT)?;
    if let Some(l) = report.lines.iter().find(|l| !l.ok) {
        return Err(EnumError::MismatchFound {
            n,
            check: l.check.clone(),
            expected: l.expected.clone(),
            actual: l.actual.clone(),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(cls: ObjectClass, n: usize) -> Vec<String> {
        Enumerator::default().enumerate_class(cls, n).unwrap().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn odd_minima_partitions_of_three() {
        assert_eq!(
            texts(ObjectClass::OrderedPartitionsOddMinima, 3),
            ["123", "12|3", "13|2", "1|23", "1|2|3", "1|3|2", "2|3|1"]
        );
    }

    #[test]
    fn codes_of_two() {
        assert_eq!(texts(ObjectClass::CodesAll, 2), ["0+ 0+", "0+ 1+", "0+ 1-"]);
    }

    #[test]
    fn drawings_of_two() {
        assert_eq!(texts(ObjectClass::Drawings, 2), ["();(());((()))", "();(());(()())"]);
    }

    #[test]
    fn small_counts() {
        let en = Enumerator::default();
        assert_eq!(en.count_class(ObjectClass::OrderedPartitionsOddMinima, 3), Ok(7));
        assert_eq!(en.count_class(ObjectClass::CodesAll, 4), Ok(105));
        assert_eq!(en.count_class(ObjectClass::KlazarTrees, 5), Ok(226));
        for cls in ObjectClass::ALL {
            assert_eq!(en.count_class(cls, 0), Ok(1), "{cls}");
        }
    }

    #[test]
    fn matchings_brute_force() {
        assert_eq!(matchings(1).iter().map(ToString::to_string).collect::<Vec<_>>(), ["(1,2)"]);
        assert_eq!(matchings(2).len(), 2);
        assert_eq!(matchings(3).len(), 7);
        // the admissible ones among all (2n-1)!! matchings of [2n]
        let unrestricted = |n: usize| -> Vec<Matching> {
            fn go(free: Vec<usize>, pairs: Vec<(usize, usize)>, out: &mut Vec<Matching>) {
                if free.is_empty() {
                    out.push(Matching::new(pairs).unwrap());
                    return;
                }
                for k in 1..free.len() {
                    let mut rest = free.clone();
                    let b = rest.remove(k);
                    let a = rest.remove(0);
                    let mut p = pairs.clone();
                    p.push((a, b));
                    go(rest, p, out);
                }
            }
            let mut out = Vec::new();
            go((1..=2 * n).collect(), Vec::new(), &mut out);
            out
        };
        for n in 0..=4 {
            let all = unrestricted(n);
            assert_eq!(all.len() as u64, odd_double_factorial(n));
            let filtered: BTreeSet<_> = all.into_iter().filter(Matching::is_admissible).collect();
            let direct: BTreeSet<_> = matchings(n).into_iter().collect();
            assert_eq!(filtered, direct);
        }
    }

    #[test]
    fn limit_is_enforced() {
        let en = Enumerator::new(3);
        assert_eq!(
            en.count_class(ObjectClass::CodesAll, 4),
            Err(EnumError::LimitExceeded { n: 4, limit: 3 })
        );
        assert!(en.enumerate_matchings(4).is_err());
        assert!(cross_check_report(8, 7).is_err());
    }

    #[test]
    fn class_names_parse() {
        for cls in ObjectClass::ALL {
            assert_eq!(cls.name().parse::<ObjectClass>(), Ok(cls));
        }
    }

    #[test]
    fn cross_check_small() {
        for n in 0..=4 {
            let report = cross_check(n).unwrap_or_else(|e| panic!("{e}"));
            assert!(report.all_ok());
        }
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(vec![(1, 2), (2, 3)]).is_err());
        assert!(!Matching::new(vec![(1, 4), (2, 3)]).unwrap().is_admissible());
        assert!(Matching::new(vec![(1, 3), (2, 4)]).unwrap().is_admissible());
    }
}
