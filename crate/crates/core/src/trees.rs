//! Planar complete rooted binary trees, right rotations and the Tamari order.
//!
//! Internal nodes are identified by their infix index `1..=n` (left subtree,
//! then the node, then the right subtree).

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagrams::{DualTamariDiagram, TamariDiagram};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

/// Edge `(k, l)` where node `k` is the left child of node `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationEdge {
    pub k: usize,
    pub l: usize,
}

/// Infix indices of the neighbours of one internal node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct NodeLinks {
    pub parent: Option<usize>,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// How [`tamari_leq_with`] decides the Tamari order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LeqMethod {
    /// Componentwise comparison of Tamari diagrams.
    #[default]
    Diagram,
    /// Breadth-first closure under right rotations.
    RotationClosure,
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// Tree whose internal nodes all lie on the leftmost branch.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(t, BinaryTree::Leaf))
    }

    /// Tree whose internal nodes all lie on the rightmost branch.
    pub fn right_comb(n: usize) -> Self {
        (0..n).fold(BinaryTree::Leaf, |t, _| BinaryTree::node(BinaryTree::Leaf, t))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    /// Number of internal nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => l.size() + r.size() + 1,
        }
    }

    /// `u_i` is the number of internal nodes in the right subtree of node `i`.
    pub fn tamari_diagram(&self) -> TamariDiagram {
        fn walk(t: &BinaryTree, out: &mut Vec<usize>) -> usize {
            match t {
                BinaryTree::Leaf => 0,
                BinaryTree::Node(l, r) => {
                    let sl = walk(l, out);
                    let at = out.len();
                    out.push(0);
                    let sr = walk(r, out);
                    out[at] = sr;
                    sl + sr + 1
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        TamariDiagram::new_unchecked(out)
    }

    /// `v_i` is the number of internal nodes in the left subtree of node `i`.
    pub fn dual_tamari_diagram(&self) -> DualTamariDiagram {
        fn walk(t: &BinaryTree, out: &mut Vec<usize>) -> usize {
            match t {
                BinaryTree::Leaf => 0,
                BinaryTree::Node(l, r) => {
                    let sl = walk(l, out);
                    out.push(sl);
                    let sr = walk(r, out);
                    sl + sr + 1
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        DualTamariDiagram::new_unchecked(out)
    }

    /// Rebuilds the tree of a Tamari diagram word, splitting at the smallest
    /// position holding its maximal allowed value.
    pub fn from_tamari_diagram(word: &[usize]) -> Result<Self> {
        let d = TamariDiagram::new(word.to_vec())?;
        Ok(Self::from_valid_tamari(d.as_slice()))
    }

    pub(crate) fn from_valid_tamari(word: &[usize]) -> Self {
        let n = word.len();
        if n == 0 {
            return BinaryTree::Leaf;
        }
        let root = (1..=n).find(|&i| word[i - 1] == n - i).expect("last letter is 0");
        BinaryTree::node(
            Self::from_valid_tamari(&word[..root - 1]),
            Self::from_valid_tamari(&word[root..]),
        )
    }

    /// Rebuilds the tree of a dual Tamari diagram word, splitting at the
    /// largest position holding its maximal allowed value.
    pub fn from_dual_tamari_diagram(word: &[usize]) -> Result<Self> {
        let d = DualTamariDiagram::new(word.to_vec())?;
        Ok(Self::from_valid_dual(d.as_slice()))
    }

    pub(crate) fn from_valid_dual(word: &[usize]) -> Self {
        let n = word.len();
        if n == 0 {
            return BinaryTree::Leaf;
        }
        let root = (1..=n).rev().find(|&i| word[i - 1] == i - 1).expect("first letter is 0");
        BinaryTree::node(
            Self::from_valid_dual(&word[..root - 1]),
            Self::from_valid_dual(&word[root..]),
        )
    }

    /// Parent and children of every internal node, indexed by `infix - 1`.
    pub fn node_links(&self) -> Vec<NodeLinks> {
        // Returns the infix index of the subtree root, if internal.
        fn walk(t: &BinaryTree, offset: usize, out: &mut Vec<NodeLinks>) -> Option<usize> {
            match t {
                BinaryTree::Leaf => None,
                BinaryTree::Node(l, r) => {
                    let idx = offset + l.size() + 1;
                    let left = walk(l, offset, out);
                    let right = walk(r, idx, out);
                    for child in [left, right].into_iter().flatten() {
                        out[child - 1].parent = Some(idx);
                    }
                    out[idx - 1].left = left;
                    out[idx - 1].right = right;
                    Some(idx)
                }
            }
        }
        let mut out = vec![NodeLinks::default(); self.size()];
        walk(self, 0, &mut out);
        out
    }

    /// Every edge `(k, l)` with `k` the left child of `l`, sorted.
    pub fn rotation_edges(&self) -> Vec<RotationEdge> {
        self.node_links()
            .iter()
            .enumerate()
            .filter_map(|(i, links)| links.left.map(|k| RotationEdge { k, l: i + 1 }))
            .collect()
    }

    /// Right rotation `((A, B), C) -> (A, (B, C))` of the edge `(k, l)`.
    pub fn right_rotate(&self, edge: RotationEdge) -> Result<Self> {
        fn walk(t: &BinaryTree, offset: usize, e: RotationEdge) -> Option<BinaryTree> {
            let BinaryTree::Node(left, right) = t else { return None };
            let idx = offset + left.size() + 1;
            if e.l < idx {
                return walk(left, offset, e).map(|nl| BinaryTree::Node(Box::new(nl), right.clone()));
            }
            if e.l > idx {
                return walk(right, idx, e).map(|nr| BinaryTree::Node(left.clone(), Box::new(nr)));
            }
            match left.as_ref() {
                BinaryTree::Node(a, b) if offset + a.size() + 1 == e.k => Some(BinaryTree::Node(
                    a.clone(),
                    Box::new(BinaryTree::Node(b.clone(), right.clone())),
                )),
                _ => None,
            }
        }
        walk(self, 0, edge).ok_or(Error::InvalidRotationEdge { k: edge.k, l: edge.l })
    }

    /// All trees obtained by one right rotation, in edge order.
    pub fn rotations(&self) -> Vec<BinaryTree> {
        self.rotation_edges()
            .into_iter()
            .map(|e| self.right_rotate(e).expect("edge taken from the tree"))
            .collect()
    }

    /// Orientation of the leaves read left to right (left child 0, right
    /// child 1), with the first and last letters dropped.
    pub fn canopy(&self) -> Vec<u8> {
        fn walk(t: &BinaryTree, from_left: bool, out: &mut Vec<u8>) {
            match t {
                BinaryTree::Leaf => out.push(if from_left { 0 } else { 1 }),
                BinaryTree::Node(l, r) => {
                    walk(l, true, out);
                    walk(r, false, out);
                }
            }
        }
        let BinaryTree::Node(l, r) = self else { return Vec::new() };
        let mut out = Vec::new();
        walk(l, true, &mut out);
        walk(r, false, &mut out);
        out[1..out.len() - 1].to_vec()
    }
}

/// `s <= t` in the Tamari lattice.
pub fn tamari_leq(s: &BinaryTree, t: &BinaryTree) -> Result<bool> {
    tamari_leq_with(s, t, LeqMethod::Diagram)
}

pub fn tamari_leq_with(s: &BinaryTree, t: &BinaryTree, method: LeqMethod) -> Result<bool> {
    let (ns, nt) = (s.size(), t.size());
    if ns != nt {
        return Err(Error::SizeMismatch { left: ns, right: nt });
    }
    Ok(match method {
        LeqMethod::Diagram => s.tamari_diagram().le_componentwise(&t.tamari_diagram()),
        LeqMethod::RotationClosure => reachable_by_rotations(s, t),
    })
}

fn reachable_by_rotations(s: &BinaryTree, t: &BinaryTree) -> bool {
    let mut seen = HashSet::from([s.clone()]);
    let mut queue = VecDeque::from([s.clone()]);
    while let Some(x) = queue.pop_front() {
        if &x == t {
            return true;
        }
        for y in x.rotations() {
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    false
}

/// Meet in the Tamari lattice: componentwise minimum of the Tamari diagrams.
pub fn tamari_meet(s: &BinaryTree, t: &BinaryTree) -> Result<BinaryTree> {
    let (a, b) = (s.tamari_diagram(), t.tamari_diagram());
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let w: Vec<usize> = a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| *x.min(y)).collect();
    Ok(BinaryTree::from_valid_tamari(&w))
}

/// Join in the Tamari lattice: componentwise minimum of the dual diagrams.
pub fn tamari_join(s: &BinaryTree, t: &BinaryTree) -> Result<BinaryTree> {
    let (a, b) = (s.dual_tamari_diagram(), t.dual_tamari_diagram());
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let w: Vec<usize> = a.as_slice().iter().zip(b.as_slice()).map(|(x, y)| *x.min(y)).collect();
    Ok(BinaryTree::from_valid_dual(&w))
}

/// All binary trees with `n` internal nodes, sorted.
pub fn enumerate_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
    for m in 1..=n {
        let mut level = Vec::new();
        for k in 0..m {
            for l in &by_size[k] {
                for r in &by_size[m - 1 - k] {
                    level.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        level.sort();
        by_size.push(level);
    }
    by_size.swap_remove(n)
}

/// Balanced-parenthesis form: `( left ) right`, leaves empty.
impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => Ok(()),
            BinaryTree::Node(l, r) => write!(f, "({l}){r}"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({self})")
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
            if *pos >= bytes.len() || bytes[*pos] == b')' {
                return Ok(BinaryTree::Leaf);
            }
            if bytes[*pos] != b'(' {
                return Err(Error::Parse(format!("unexpected {:?} at {}", bytes[*pos] as char, pos)));
            }
            *pos += 1;
            let left = parse(bytes, pos)?;
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::Parse(format!("expected ')' at {pos}")));
            }
            *pos += 1;
            let right = parse(bytes, pos)?;
            Ok(BinaryTree::node(left, right))
        }
        let bytes = s.trim().as_bytes();
        let mut pos = 0;
        let t = parse(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(Error::Parse(format!("unbalanced ')' at {pos}")));
        }
        Ok(t)
    }
}

/// JSON form: `null` for a leaf, `[left, right]` for an internal node.
impl Serialize for BinaryTree {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BinaryTree::Leaf => s.serialize_none(),
            BinaryTree::Node(l, r) => (l.as_ref(), r.as_ref()).serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for BinaryTree {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let node: Option<(BinaryTree, BinaryTree)> = Deserialize::deserialize(d)?;
        Ok(match node {
            None => BinaryTree::Leaf,
            Some((l, r)) => BinaryTree::node(l, r),
        })
    }
}
