//! The explicit bijections between the object classes, each with its inverse,
//! and a router that converts between any two of the six combinatorial
//! classes through build-tree codes.
//!
//! Chain of classes (numbered as in the main correspondence):
//!
//! ```text
//! (2) ordered partitions, all left-to-right minima at odd locations
//! (3) signed permutations, decreasing blocks, positive left-to-right minima
//! (4) build-tree codes with a v+ after each v-
//! (5) build-tree codes with a v+ before each v-
//! (6) Klazar trees
//! (7) drawings of rooted plane trees
//! ```

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::objects::{
    BuildTreeCode, Drawing, LabeledTree, Object, ObjectError, OrderedPartition, PlaneTree, Sign,
    SignedPermutation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("{input} is not in the image: left-to-right minimum {value} has negative sign")]
    NotInImage { input: String, value: usize },
    #[error("{input} starts with a negative entry")]
    SignPatternInvalid { input: String },
    #[error("{input} is not in class {class}")]
    NotInClass { class: ClassId, input: String },
    #[error(transparent)]
    Object(#[from] ObjectError),
}

/// Writes each block in decreasing order; block `i` carries sign `(-1)^(i-1)`.
pub fn partition_to_signed(p: &OrderedPartition) -> SignedPermutation {
    let entries = p
        .blocks()
        .iter()
        .enumerate()
        .flat_map(|(j, block)| {
            let sign = Sign::of_location(j + 1);
            block.iter().rev().map(move |&x| (x, sign))
        })
        .collect();
    SignedPermutation::new(entries).expect("blocks partition [n]")
}

/// Groups maximal runs of equal sign into blocks.
///
/// Accepts any signed permutation; it inverts [`partition_to_signed`] on
/// signed permutations with decreasing blocks and a positive first entry.
pub fn signed_to_partition(s: &SignedPermutation) -> OrderedPartition {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for &(v, sign) in s.entries() {
        if last == Some(sign) {
            blocks.last_mut().expect("run already open").push(v);
        } else {
            blocks.push(vec![v]);
            last = Some(sign);
        }
    }
    OrderedPartition::new(blocks).expect("values partition [n]")
}

/// [`signed_to_partition`] restricted to the image of [`partition_to_signed`].
pub fn signed_to_partition_strict(s: &SignedPermutation) -> Result<OrderedPartition, MapError> {
    if s.entries().first().is_some_and(|&(_, sign)| sign == Sign::Minus) {
        return Err(MapError::SignPatternInvalid { input: s.to_string() });
    }
    Ok(signed_to_partition(s))
}

/// Builds a signed permutation by inserting `1, ..., n` as the code dictates:
/// `0+` prepends `i` with sign `+`, `j+` inserts `i` right after `j` with the
/// opposite sign, `j-` inserts it right after `j` with the same sign.
pub fn code_to_signed(c: &BuildTreeCode) -> SignedPermutation {
    code_to_signed_steps(c).pop().unwrap_or_else(SignedPermutation::empty)
}

/// The signed permutation after each insertion step of [`code_to_signed`].
pub fn code_to_signed_steps(c: &BuildTreeCode) -> Vec<SignedPermutation> {
    let mut seq: Vec<(usize, Sign)> = Vec::with_capacity(c.n());
    let mut steps = Vec::with_capacity(c.n());
    for (idx, &(j, sign)) in c.entries().iter().enumerate() {
        let i = idx + 1;
        if j == 0 {
            seq.insert(0, (i, Sign::Plus));
        } else {
            let k = seq.iter().position(|&(v, _)| v == j).expect("numeral already inserted");
            let sj = seq[k].1;
            let si = if sign.is_plus() { sj.flip() } else { sj };
            seq.insert(k + 1, (i, si));
        }
        steps.push(SignedPermutation::new(seq.clone()).expect("insertion keeps a permutation"));
    }
    steps
}

/// Inverse of [`code_to_signed`]: removes `n, n-1, ..., 1` and records where
/// each value sat.
pub fn signed_to_code(s: &SignedPermutation) -> Result<BuildTreeCode, MapError> {
    if let Some(&(value, _, _)) = s.ltr_minima().iter().find(|m| !m.2.is_plus()) {
        return Err(MapError::NotInImage { input: s.to_string(), value });
    }
    let n = s.n();
    let mut seq = s.entries().to_vec();
    let mut code = vec![(0, Sign::Plus); n];
    for i in (1..=n).rev() {
        let k = seq.iter().position(|&(v, _)| v == i).expect("value present");
        let si = seq[k].1;
        if k > 0 {
            let (j, sj) = seq[k - 1];
            code[i - 1] = (j, if si == sj { Sign::Minus } else { Sign::Plus });
        }
        seq.remove(k);
    }
    Ok(BuildTreeCode::new(code)?)
}

/// Grows an increasingly labeled tree: `0+` adds `i` as leftmost child of the
/// root, `j+` as leftmost child of `j`, `j-` as the immediate right sibling of `j`.
pub fn code_to_tree(c: &BuildTreeCode) -> LabeledTree {
    let mut t = LabeledTree::root();
    for &(j, sign) in c.entries() {
        if sign.is_plus() {
            t.push_leftmost_child(j);
        } else {
            t.push_right_of(j);
        }
    }
    t
}

/// Inverse of [`code_to_tree`].
pub fn tree_to_code(t: &LabeledTree) -> BuildTreeCode {
    let entries = (1..=t.n())
        .map(|i| {
            let p = t.parent(i).expect("non-root vertex");
            let mut left = None;
            for &c in t.children(p).iter().filter(|&&c| c <= i) {
                if c == i {
                    break;
                }
                left = Some(c);
            }
            match left {
                None => (p, Sign::Plus),
                Some(j) => (j, Sign::Minus),
            }
        })
        .collect();
    BuildTreeCode::new(entries).expect("tree decomposition yields a valid code")
}

/// Reverses, for each numeral, the order of the signs at the positions
/// carrying it. An involution exchanging classes (4) and (5).
pub fn reverse_signs(c: &BuildTreeCode) -> BuildTreeCode {
    let mut entries = c.entries().to_vec();
    for v in 0..c.n() {
        let positions: Vec<usize> = (0..entries.len()).filter(|&k| entries[k].0 == v).collect();
        let signs: Vec<Sign> = positions.iter().map(|&k| entries[k].1).collect();
        for (&k, &s) in positions.iter().zip(signs.iter().rev()) {
            entries[k].1 = s;
        }
    }
    BuildTreeCode::new(entries).expect("the forced 0+ entry is unaffected")
}

/// `T_i` is the shape of the subtree induced on labels `<= i`.
pub fn tree_to_drawing(t: &LabeledTree) -> Drawing {
    Drawing::from_trees_unchecked((0..=t.n()).map(|i| t.restrict(i).shape()).collect())
}

/// Labels `T_n` by peeling leaves: at step `i = n, ..., 1`, the leftmost
/// remaining leaf whose removal leaves a copy of `T_{i-1}` gets label `i`.
pub fn drawing_to_tree(d: &Drawing) -> LabeledTree {
    let mut arena = Arena::default();
    arena.add(d.last());
    let size = arena.kids.len();
    let mut alive = vec![true; size];
    let mut label = vec![0usize; size];
    for i in (1..=d.n()).rev() {
        let target = d.trees()[i - 1].encoding();
        let leaves: Vec<usize> = (1..size)
            .filter(|&v| alive[v] && arena.kids[v].iter().all(|&c| !alive[c]))
            .collect();
        let chosen = leaves
            .into_iter()
            .find(|&v| {
                alive[v] = false;
                let matches = arena.encoding(&alive) == target;
                alive[v] = true;
                matches
            })
            .expect("validated drawing admits a removable leaf");
        alive[chosen] = false;
        label[chosen] = i;
    }
    let mut children = vec![Vec::new(); size];
    for v in 0..size {
        children[label[v]] = arena.kids[v].iter().map(|&c| label[c]).collect();
    }
    LabeledTree::from_children(children).expect("peeling yields an increasing labeling")
}

/// A plane tree flattened into preorder ids, so leaf order is id order.
#[derive(Default)]
struct Arena {
    kids: Vec<Vec<usize>>,
}

impl Arena {
    fn add(&mut self, t: &PlaneTree) -> usize {
        let id = self.kids.len();
        self.kids.push(Vec::new());
        for c in t.children() {
            let cid = self.add(c);
            self.kids[id].push(cid);
        }
        id
    }

    fn encoding(&self, alive: &[bool]) -> String {
        let mut out = String::new();
        self.write(0, alive, &mut out);
        out
    }

    fn write(&self, v: usize, alive: &[bool], out: &mut String) {
        out.push('(');
        for &c in self.kids[v].iter().filter(|&&c| alive[c]) {
            self.write(c, alive, out);
        }
        out.push(')');
    }
}

/// The six combinatorial classes joined by the bijection chain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    OrderedPartition,
    SignedPermutation,
    CodeAfter,
    CodeBefore,
    KlazarTree,
    Drawing,
}

impl ClassId {
    pub const ALL: [ClassId; 6] = [
        ClassId::OrderedPartition,
        ClassId::SignedPermutation,
        ClassId::CodeAfter,
        ClassId::CodeBefore,
        ClassId::KlazarTree,
        ClassId::Drawing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::OrderedPartition => "partition",
            ClassId::SignedPermutation => "signed-perm",
            ClassId::CodeAfter => "code",
            ClassId::CodeBefore => "code-before",
            ClassId::KlazarTree => "klazar-tree",
            ClassId::Drawing => "drawing",
        }
    }

    /// Parses text in this class's grammar, without checking the class constraint.
    pub fn parse_object(self, text: &str) -> Result<Object, ObjectError> {
        Ok(match self {
            ClassId::OrderedPartition => Object::Partition(text.parse()?),
            ClassId::SignedPermutation => Object::Signed(text.parse()?),
            ClassId::CodeAfter | ClassId::CodeBefore => Object::Code(text.parse()?),
            ClassId::KlazarTree => Object::Tree(text.parse()?),
            ClassId::Drawing => Object::Drawing(text.parse()?),
        })
    }

    /// Whether `x` has this class's type and satisfies its constraint.
    pub fn contains(self, x: &Object) -> bool {
        match (self, x) {
            (ClassId::OrderedPartition, Object::Partition(p)) => p.all_minima_at_odd_locations(),
            (ClassId::SignedPermutation, Object::Signed(s)) => {
                s.has_decreasing_blocks() && s.all_minima_positive()
            }
            (ClassId::CodeAfter, Object::Code(c)) => c.has_plus_after_each_minus(),
            (ClassId::CodeBefore, Object::Code(c)) => c.has_plus_before_each_minus(),
            (ClassId::KlazarTree, Object::Tree(t)) => t.is_klazar(),
            (ClassId::Drawing, Object::Drawing(_)) => true,
            _ => false,
        }
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "partition" | "ordered-partition" | "2" => ClassId::OrderedPartition,
            "signed-perm" | "signed-permutation" | "3" => ClassId::SignedPermutation,
            "code" | "code-after" | "4" => ClassId::CodeAfter,
            "code-before" | "5" => ClassId::CodeBefore,
            "klazar-tree" | "tree" | "6" => ClassId::KlazarTree,
            "drawing" | "7" => ClassId::Drawing,
            other => return Err(format!("unknown class {other:?}")),
        })
    }
}

/// Converts `x` from `source` to `target`, routing through class (4) codes.
pub fn convert(x: &Object, source: ClassId, target: ClassId) -> Result<Object, MapError> {
    if !source.contains(x) {
        return Err(MapError::NotInClass { class: source, input: x.to_string() });
    }
    if source == target {
        return Ok(x.clone());
    }
    let hub = to_hub(x, source)?;
    Ok(from_hub(&hub, target))
}

fn to_hub(x: &Object, source: ClassId) -> Result<BuildTreeCode, MapError> {
    Ok(match x {
        Object::Partition(p) => signed_to_code(&partition_to_signed(p))?,
        Object::Signed(s) => signed_to_code(s)?,
        Object::Code(c) if source == ClassId::CodeAfter => c.clone(),
        Object::Code(c) => reverse_signs(c),
        Object::Tree(t) => reverse_signs(&tree_to_code(t)),
        Object::Drawing(d) => reverse_signs(&tree_to_code(&drawing_to_tree(d))),
        Object::Matching(m) => {
            return Err(MapError::NotInClass { class: ClassId::CodeAfter, input: m.to_string() })
        }
    })
}

fn from_hub(c: &BuildTreeCode, target: ClassId) -> Object {
    match target {
        ClassId::OrderedPartition => Object::Partition(signed_to_partition(&code_to_signed(c))),
        ClassId::SignedPermutation => Object::Signed(code_to_signed(c)),
        ClassId::CodeAfter => Object::Code(c.clone()),
        ClassId::CodeBefore => Object::Code(reverse_signs(c)),
        ClassId::KlazarTree => Object::Tree(code_to_tree(&reverse_signs(c))),
        ClassId::Drawing => Object::Drawing(tree_to_drawing(&code_to_tree(&reverse_signs(c)))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> OrderedPartition {
        s.parse().unwrap()
    }
    fn s(t: &str) -> SignedPermutation {
        t.parse().unwrap()
    }
    fn c(t: &str) -> BuildTreeCode {
        t.parse().unwrap()
    }
    fn t(x: &str) -> LabeledTree {
        x.parse().unwrap()
    }
    fn d(x: &str) -> Drawing {
        x.parse().unwrap()
    }

    #[test]
    fn partition_signed_examples() {
        assert_eq!(partition_to_signed(&p("15|246|3")).to_string(), "5+ 1+ 6- 4- 2- 3+");
        assert_eq!(partition_to_signed(&p("123")).to_string(), "3+ 2+ 1+");
        assert_eq!(partition_to_signed(&p("1|3|2")).to_string(), "1+ 3- 2+");
        assert_eq!(signed_to_partition(&s("5+ 1+ 6- 4- 2- 3+")).to_string(), "15|246|3");
        assert_eq!(signed_to_partition(&s("2+ 3- 1+")).to_string(), "2|3|1");
        assert_eq!(signed_to_partition(&s("1+")).to_string(), "1");
        assert!(matches!(
            signed_to_partition_strict(&s("2- 1+")),
            Err(MapError::SignPatternInvalid { .. })
        ));
        assert_eq!(signed_to_partition_strict(&s("2+ 1-")).unwrap().to_string(), "2|1");
    }

    #[test]
    fn code_signed_examples() {
        assert_eq!(code_to_signed(&c("0+ 1- 1+ 1+ 0+ 3+")).to_string(), "5+ 1+ 4- 3- 6+ 2+");
        assert_eq!(code_to_signed(&c("0+")).to_string(), "1+");
        assert_eq!(code_to_signed(&c("0+ 0+ 2+")).to_string(), "2+ 3- 1+");
        assert_eq!(code_to_signed(&c("")).n(), 0);
        assert_eq!(signed_to_code(&s("5+ 1+ 4- 3- 6+ 2+")).unwrap().to_string(), "0+ 1- 1+ 1+ 0+ 3+");
        assert_eq!(signed_to_code(&s("1+")).unwrap().to_string(), "0+");
        assert_eq!(
            signed_to_code(&s("2- 1+")),
            Err(MapError::NotInImage { input: "2- 1+".into(), value: 2 })
        );
    }

    #[test]
    fn code_tree_examples() {
        assert_eq!(code_to_tree(&c("0+ 1+ 1+ 1- 0+ 3+")).to_string(), "0(5() 1(3(6()) 2()) 4())");
        assert_eq!(code_to_tree(&c("0+")).to_string(), "0(1())");
        assert_eq!(code_to_tree(&c("0+ 1+ 2+")).to_string(), "0(1(2(3())))");
        assert_eq!(tree_to_code(&t("0(5() 1(3(6()) 2()) 4())")).to_string(), "0+ 1+ 1+ 1- 0+ 3+");
        assert_eq!(tree_to_code(&t("0(1())")).to_string(), "0+");
        assert_eq!(tree_to_code(&code_to_tree(&c("0+ 1+ 1-"))).to_string(), "0+ 1+ 1-");
        assert_eq!(tree_to_code(&t("0()")).n(), 0);
    }

    #[test]
    fn reverse_signs_examples() {
        assert_eq!(reverse_signs(&c("0+ 1+ 1- 2+ 2+ 2-")).to_string(), "0+ 1- 1+ 2- 2+ 2+");
        assert_eq!(reverse_signs(&c("0+ 1+ 1+ 1- 0+ 3+")).to_string(), "0+ 1- 1+ 1+ 0+ 3+");
        assert_eq!(reverse_signs(&c("0+ 0+ 0+")).to_string(), "0+ 0+ 0+");
    }

    #[test]
    fn drawing_examples() {
        let str_of = |d: &Drawing| d.to_string();
        assert_eq!(str_of(&tree_to_drawing(&t("0(2() 1())"))), "();(());(()())");
        assert_eq!(str_of(&tree_to_drawing(&t("0(1())"))), "();(())");
        assert_eq!(str_of(&tree_to_drawing(&t("0(1(2()))"))), "();(());((()))");
        assert_eq!(drawing_to_tree(&d("();(());(()())")).to_string(), "0(2() 1())");
        assert_eq!(drawing_to_tree(&d("();(())")).to_string(), "0(1())");
        assert_eq!(drawing_to_tree(&d("();(());((()))")).to_string(), "0(1(2()))");
        assert_eq!(drawing_to_tree(&d("()")).to_string(), "0()");
    }

    #[test]
    fn convert_examples() {
        let x = Object::Partition(p("1|3|2"));
        let tree = convert(&x, ClassId::OrderedPartition, ClassId::KlazarTree).unwrap();
        assert_eq!(tree, Object::Tree(code_to_tree(&c("0+ 1+ 1-"))));
        let y = Object::Code(c("0+ 1+ 2+"));
        assert_eq!(
            convert(&y, ClassId::CodeBefore, ClassId::OrderedPartition).unwrap().to_string(),
            "1|2|3"
        );
        assert_eq!(convert(&y, ClassId::CodeAfter, ClassId::CodeAfter).unwrap(), y);
        let bad = Object::Partition(p("2|1"));
        assert!(matches!(
            convert(&bad, ClassId::OrderedPartition, ClassId::Drawing),
            Err(MapError::NotInClass { .. })
        ));
        // a code of class (5) but not (4) is not accepted as a class (4) code
        let only_before = Object::Code(c("0+ 1+ 1-"));
        assert!(convert(&only_before, ClassId::CodeAfter, ClassId::Drawing).is_err());
        assert!(convert(&only_before, ClassId::CodeBefore, ClassId::Drawing).is_ok());
    }

    #[test]
    fn class_names_round_trip() {
        for id in ClassId::ALL {
            assert_eq!(id.name().parse::<ClassId>().unwrap(), id);
        }
        assert!("nope".parse::<ClassId>().is_err());
    }
}
