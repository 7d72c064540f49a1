use std::fmt;
use std::str::FromStr;

use super::{parse_error, ObjectError};

/// An unlabeled rooted plane tree: a root with an ordered list of subtrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

impl PlaneTree {
    /// The single-vertex tree.
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of vertices.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(PlaneTree::size).sum::<usize>()
    }

    /// Balanced-parentheses preorder encoding; equal iff the trees are equal.
    pub fn encoding(&self) -> String {
        let mut out = String::with_capacity(2 * self.size());
        self.write_encoding(&mut out);
        out
    }

    fn write_encoding(&self, out: &mut String) {
        out.push('(');
        for c in &self.children {
            c.write_encoding(out);
        }
        out.push(')');
    }

    /// Every tree obtained by deleting one non-root leaf, ordered by the
    /// preorder position of the deleted leaf.
    pub fn leaf_removals(&self) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        for (k, child) in self.children.iter().enumerate() {
            if child.is_leaf() {
                let mut children = self.children.clone();
                children.remove(k);
                out.push(PlaneTree { children });
            } else {
                for smaller in child.leaf_removals() {
                    let mut children = self.children.clone();
                    children[k] = smaller;
                    out.push(PlaneTree { children });
                }
            }
        }
        out
    }

    /// Every tree obtained by attaching one new leaf at one of the
    /// `2 * size - 1` insertion slots. Distinct slots may give equal trees.
    pub fn leaf_extensions(&self) -> Vec<PlaneTree> {
        let mut out = Vec::new();
        for slot in 0..=self.children.len() {
            let mut children = self.children.clone();
            children.insert(slot, PlaneTree::leaf());
            out.push(PlaneTree { children });
        }
        for (k, child) in self.children.iter().enumerate() {
            for bigger in child.leaf_extensions() {
                let mut children = self.children.clone();
                children[k] = bigger;
                out.push(PlaneTree { children });
            }
        }
        out
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encoding())
    }
}

impl FromStr for PlaneTree {
    type Err = ObjectError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_plane(&bytes, &mut pos).ok_or_else(|| parse_error("plane tree", s, "unbalanced parentheses"))?;
        if pos != bytes.len() {
            return Err(parse_error("plane tree", s, "trailing input"));
        }
        Ok(tree)
    }
}

fn parse_plane(b: &[u8], pos: &mut usize) -> Option<PlaneTree> {
    if b.get(*pos) != Some(&b'(') {
        return None;
    }
    *pos += 1;
    let mut children = Vec::new();
    loop {
        match b.get(*pos)? {
            b'(' => children.push(parse_plane(b, pos)?),
            b')' => {
                *pos += 1;
                return Some(PlaneTree { children });
            }
            _ => return None,
        }
    }
}

/// A rooted plane tree on `n + 1` vertices with an increasing labeling by
/// `{0, ..., n}`.
///
/// Vertices are addressed by their label. `children[v]` lists the labels of
/// the children of `v` from left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledTree {
    parent: Vec<usize>,
    children: Vec<Vec<usize>>,
}

impl LabeledTree {
    /// The tree consisting of the root labeled 0.
    pub fn root() -> Self {
        LabeledTree {
            parent: vec![0],
            children: vec![Vec::new()],
        }
    }

    /// Builds a tree from per-label child lists, checking that every label in
    /// `1..=n` has exactly one parent with a smaller label.
    pub fn from_children(children: Vec<Vec<usize>>) -> Result<Self, ObjectError> {
        if children.is_empty() {
            return Err(ObjectError::InvalidTree("no vertices".into()));
        }
        let n = children.len() - 1;
        let mut parent = vec![usize::MAX; n + 1];
        parent[0] = 0;
        for (v, kids) in children.iter().enumerate() {
            for &c in kids {
                if c == 0 || c > n {
                    return Err(ObjectError::InvalidTree(format!("label {c} outside 1..={n}")));
                }
                if c <= v {
                    return Err(ObjectError::InvalidTree(format!(
                        "child {c} does not exceed parent {v}"
                    )));
                }
                if parent[c] != usize::MAX {
                    return Err(ObjectError::InvalidTree(format!("label {c} used twice")));
                }
                parent[c] = v;
            }
        }
        if let Some(v) = parent.iter().position(|&p| p == usize::MAX) {
            return Err(ObjectError::InvalidTree(format!("label {v} missing")));
        }
        Ok(LabeledTree { parent, children })
    }

    pub fn n(&self) -> usize {
        self.children.len() - 1
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        (v != 0 && v <= self.n()).then(|| self.parent[v])
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.children[v].is_empty()
    }

    /// Adds a new vertex as the leftmost child of `p`, returning its label.
    pub(crate) fn push_leftmost_child(&mut self, p: usize) -> usize {
        let label = self.children.len();
        self.children.push(Vec::new());
        self.parent.push(p);
        self.children[p].insert(0, label);
        label
    }

    /// Adds a new vertex as the immediate right sibling of `j`, returning its label.
    pub(crate) fn push_right_of(&mut self, j: usize) -> usize {
        let label = self.children.len();
        let p = self.parent[j];
        let k = self.children[p].iter().position(|&c| c == j).expect("j is a child of its parent");
        self.children.push(Vec::new());
        self.parent.push(p);
        self.children[p].insert(k + 1, label);
        label
    }

    /// The right associate of `v`: among right siblings `u` with
    /// `u > v` whose label is below every sibling strictly between `v` and
    /// `u`, the one with the smallest label.
    pub fn right_associate(&self, v: usize) -> Option<usize> {
        let p = self.parent(v)?;
        let siblings = &self.children[p];
        let k = siblings.iter().position(|&c| c == v)?;
        let mut between_min = usize::MAX;
        let mut best = None;
        for &u in &siblings[k + 1..] {
            if u > v && u < between_min {
                best = Some(best.map_or(u, |b: usize| b.min(u)));
            }
            between_min = between_min.min(u);
        }
        best
    }

    pub fn is_klazar(&self) -> bool {
        (1..=self.n()).all(|v| match self.right_associate(v) {
            None => true,
            Some(u) => self.children[v].iter().min().is_some_and(|&m| u > m),
        })
    }

    /// The induced subtree on labels `<= i`.
    pub fn restrict(&self, i: usize) -> LabeledTree {
        let i = i.min(self.n());
        let children = self.children[..=i]
            .iter()
            .map(|kids| kids.iter().copied().filter(|&c| c <= i).collect())
            .collect();
        LabeledTree {
            parent: self.parent[..=i].to_vec(),
            children,
        }
    }

    /// The underlying unlabeled plane tree.
    pub fn shape(&self) -> PlaneTree {
        self.shape_at(0)
    }

    fn shape_at(&self, v: usize) -> PlaneTree {
        PlaneTree::with_children(self.children[v].iter().map(|&c| self.shape_at(c)).collect())
    }

    fn write_at(&self, v: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{v}(")?;
        for (i, &c) in self.children[v].iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            self.write_at(c, f)?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for LabeledTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(0, f)
    }
}

impl FromStr for LabeledTree {
    type Err = ObjectError;

    /// Parses the nested preorder form `label(child child ...)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = LabelParser { src: s, b: s.as_bytes(), pos: 0, edges: Vec::new() };
        let root = p.vertex()?;
        p.skip_ws();
        if p.pos != p.b.len() {
            return Err(parse_error("labeled tree", s, "trailing input"));
        }
        if root != 0 {
            return Err(ObjectError::InvalidTree(format!("root labeled {root}, expected 0")));
        }
        let n = p.edges.len();
        let mut children = vec![Vec::new(); n + 1];
        for (parent, child) in p.edges {
            if parent > n || child > n {
                return Err(ObjectError::InvalidTree(format!("labels must lie in 0..={n}")));
            }
            children[parent].push(child);
        }
        LabeledTree::from_children(children)
    }
}

struct LabelParser<'a> {
    src: &'a str,
    b: &'a [u8],
    pos: usize,
    edges: Vec<(usize, usize)>,
}

impl LabelParser<'_> {
    fn skip_ws(&mut self) {
        while self.b.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, reason: &str) -> ObjectError {
        parse_error("labeled tree", self.src, format!("{reason} at byte {}", self.pos))
    }

    fn vertex(&mut self) -> Result<usize, ObjectError> {
        self.skip_ws();
        let start = self.pos;
        while self.b.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        let label: usize = self.src[start..self.pos].parse().map_err(|_| self.err("expected label"))?;
        self.skip_ws();
        if self.b.get(self.pos) != Some(&b'(') {
            return Err(self.err("expected '('"));
        }
        self.pos += 1;
        loop {
            self.skip_ws();
            match self.b.get(self.pos) {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(label);
                }
                Some(_) => {
                    let child = self.vertex()?;
                    self.edges.push((label, child));
                }
                None => return Err(self.err("unterminated child list")),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> LabeledTree {
        s.parse().unwrap()
    }

    #[test]
    fn encodings() {
        assert_eq!(PlaneTree::leaf().encoding(), "()");
        let cherry = PlaneTree::with_children(vec![PlaneTree::leaf(), PlaneTree::leaf()]);
        assert_eq!(cherry.encoding(), "(()())");
        let path = PlaneTree::with_children(vec![PlaneTree::with_children(vec![PlaneTree::leaf()])]);
        assert_eq!(path.encoding(), "((()))");
        assert_eq!("( ( ) ( ) )".parse::<PlaneTree>().unwrap(), cherry);
        assert!("(()".parse::<PlaneTree>().is_err());
        assert!("()()".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn leaf_removals_and_extensions() {
        let cherry: PlaneTree = "(()())".parse().unwrap();
        let removed: Vec<String> = cherry.leaf_removals().iter().map(PlaneTree::encoding).collect();
        assert_eq!(removed, ["(())", "(())"]);
        assert!(PlaneTree::leaf().leaf_removals().is_empty());
        // slot count is 2 * size - 1
        let t: PlaneTree = "((())())".parse().unwrap();
        assert_eq!(t.leaf_extensions().len(), 2 * t.size() - 1);
        for e in t.leaf_extensions() {
            assert!(e.leaf_removals().contains(&t));
        }
    }

    #[test]
    fn labeled_parse_display() {
        let s = "0(5() 1(3(6()) 2()) 4())";
        assert_eq!(t(s).to_string(), s);
        assert_eq!(t(s).n(), 6);
        assert_eq!(t("0()").n(), 0);
        assert_eq!(t("0(1(3() 2()) )").to_string(), "0(1(3() 2()))");
        assert!("1()".parse::<LabeledTree>().is_err());
        assert!("0(2())".parse::<LabeledTree>().is_err());
        assert!("0(2(1()))".parse::<LabeledTree>().is_err());
        assert!("0(1() 1())".parse::<LabeledTree>().is_err());
        assert!("0(1()".parse::<LabeledTree>().is_err());
    }

    #[test]
    fn right_associate_examples() {
        let t21 = t("0(2() 1())");
        assert_eq!(t21.right_associate(2), None);
        let t12 = t("0(1() 2())");
        assert_eq!(t12.right_associate(1), Some(2));
        assert_eq!(t12.right_associate(0), None);
        // a smaller sibling in between blocks every candidate beyond it
        let blocked = t("0(2() 1() 3())");
        assert_eq!(blocked.right_associate(2), None);
        let stretch = t("0(2() 4() 1() 3())");
        assert_eq!(stretch.right_associate(2), Some(4));
        assert_eq!(stretch.right_associate(1), Some(3));
        let nested = t("0(1() 4() 3() 2())");
        assert_eq!(nested.right_associate(1), Some(2));
    }

    #[test]
    fn klazar_examples() {
        assert!(t("0(2() 1())").is_klazar());
        assert!(!t("0(1() 2())").is_klazar());
        assert!(t("0(1(2()))").is_klazar());
        assert!(t("0()").is_klazar());
        // right associate 3 of vertex 1 arrives after 1's child 2
        assert!(t("0(1(2()) 3())").is_klazar());
        // right associate 2 of vertex 1 arrives before 1's only child 3
        assert!(!t("0(1(3()) 2())").is_klazar());
    }

    #[test]
    fn restrict_and_shape() {
        let tree = t("0(5() 1(3(6()) 2()) 4())");
        assert_eq!(tree.restrict(3).to_string(), "0(1(3() 2()))");
        assert_eq!(tree.restrict(0).to_string(), "0()");
        assert_eq!(tree.shape().encoding(), "(()((())())())");
        assert_eq!(tree.parent(6), Some(3));
        assert_eq!(tree.parent(0), None);
    }
}
