//! Rooted ternary trees.
//!
//! A tree with `n` nodes is stored as child slots per node; node 0 is the
//! root, attached to the root leaf. Around every node the four incident edges
//! read, counterclockwise: parent, left, middle, right. The external form is
//! the prefix word over `N` (node) and `L` (leaf), root leaf omitted.

use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;

use crate::error::{Error, Result};
use crate::rng::rng_from_seed;
use crate::Color;

pub type NodeId = usize;

pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Left = 0,
    Middle = 1,
    Right = 2,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::Left, Slot::Middle, Slot::Right];
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TernaryTree {
    children: Vec<[Option<NodeId>; 3]>,
    parent: Vec<Option<(NodeId, Slot)>>,
}

impl TernaryTree {
    /// The tree reduced to a single edge between the root leaf and one leaf.
    pub fn empty() -> Self {
        TernaryTree { children: Vec::new(), parent: Vec::new() }
    }

    pub fn from_word(word: &str) -> Result<Self> {
        let word = word.trim();
        if word.is_empty() {
            return Err(Error::InvalidTree("empty word".into()));
        }
        let mut tree = TernaryTree::empty();
        // stack of (node, next slot to fill)
        let mut stack: Vec<(NodeId, usize)> = Vec::new();
        let mut done = false;
        for (i, c) in word.chars().enumerate() {
            if done {
                return Err(Error::InvalidTree(format!("trailing symbols after position {i}")));
            }
            let attach = |tree: &mut TernaryTree, stack: &mut Vec<(NodeId, usize)>, child: Option<NodeId>| {
                if let Some((p, s)) = stack.last_mut() {
                    tree.children[*p][*s] = child;
                    if let Some(c) = child {
                        tree.parent[c] = Some((*p, Slot::ALL[*s]));
                    }
                    *s += 1;
                }
            };
            match c {
                'N' => {
                    let v = tree.children.len();
                    tree.children.push([None; 3]);
                    tree.parent.push(None);
                    attach(&mut tree, &mut stack, Some(v));
                    stack.push((v, 0));
                }
                'L' => {
                    if stack.is_empty() {
                        done = true;
                        continue;
                    }
                    attach(&mut tree, &mut stack, None);
                }
                other => return Err(Error::InvalidTree(format!("unexpected symbol {other:?}"))),
            }
            while let Some(&(_, s)) = stack.last() {
                if s < 3 {
                    break;
                }
                stack.pop();
                if stack.is_empty() {
                    done = true;
                }
            }
        }
        if !done {
            return Err(Error::InvalidTree("word ends before the tree is complete".into()));
        }
        Ok(tree)
    }

    pub fn to_word(&self) -> String {
        if self.children.is_empty() {
            return "L".into();
        }
        let mut out = String::with_capacity(3 * self.children.len() + 1);
        let mut stack = vec![Some(0)];
        while let Some(x) = stack.pop() {
            match x {
                None => out.push('L'),
                Some(v) => {
                    out.push('N');
                    for c in self.children[v].iter().rev() {
                        stack.push(*c);
                    }
                }
            }
        }
        out
    }

    pub fn node_count(&self) -> usize {
        self.children.len()
    }

    /// Leaves including the root leaf.
    pub fn leaf_count(&self) -> usize {
        2 * self.children.len() + 2
    }

    pub fn closed_edge_count(&self) -> usize {
        self.children.len().saturating_sub(1)
    }

    pub fn child(&self, v: NodeId, s: Slot) -> Option<NodeId> {
        self.children[v][s as usize]
    }

    pub fn children(&self, v: NodeId) -> [Option<NodeId>; 3] {
        self.children[v]
    }

    /// Parent node and the slot `v` occupies there; `None` for the root.
    pub fn parent(&self, v: NodeId) -> Option<(NodeId, Slot)> {
        self.parent[v]
    }

    /// Checks the degree and edge-count invariants.
    pub fn validate(&self) -> Result<()> {
        let n = self.children.len();
        let closed = self.children.iter().flatten().flatten().count();
        if n > 0 && closed != n - 1 {
            return Err(Error::InvalidTree(format!("{closed} closed edges for {n} nodes")));
        }
        let stems = 3 * n - closed;
        if n > 0 && stems + 1 != self.leaf_count() {
            return Err(Error::InvalidTree("leaf count mismatch".into()));
        }
        for (v, ch) in self.children.iter().enumerate() {
            for (s, c) in ch.iter().enumerate() {
                if let Some(c) = *c {
                    if self.parent[c] != Some((v, Slot::ALL[s])) {
                        return Err(Error::InvalidTree(format!("parent link of node {c}")));
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for TernaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_word())
    }
}

/// `(3n)! / ((2n+1)! n!)`, the number of ternary trees with `n` nodes.
pub fn count_ternary(n: usize) -> BigUint {
    // binom(3n, n) / (2n + 1)
    let mut c = BigUint::from(1u32);
    for i in 0..n {
        c = c * BigUint::from(3 * n - i) / BigUint::from(i + 1);
    }
    c / BigUint::from(2 * n + 1)
}

/// All trees with `n` nodes in lexicographic order of their words (`L < N`).
pub fn enumerate_trees(n: usize) -> Result<Vec<TernaryTree>> {
    enumerate_trees_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_trees_capped(n: usize, cap: usize) -> Result<Vec<TernaryTree>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    let mut words = Vec::new();
    let mut buf = String::new();
    // `need` = number of subtrees still to write, `left` = nodes still to place
    fn rec(buf: &mut String, need: usize, left: usize, out: &mut Vec<String>) {
        if need == 0 {
            if left == 0 {
                out.push(buf.clone());
            }
            return;
        }
        // leaves must leave room for the remaining nodes' subtrees
        if need > 1 || left == 0 {
            buf.push('L');
            rec(buf, need - 1, left, out);
            buf.pop();
        }
        if left > 0 {
            buf.push('N');
            rec(buf, need + 2, left - 1, out);
            buf.pop();
        }
    }
    rec(&mut buf, 1, n, &mut words);
    words.into_iter().map(|w| TernaryTree::from_word(&w)).collect()
}

/// Exactly uniform random tree with `n` nodes (cycle lemma).
pub fn random_tree(n: usize, seed: u64) -> TernaryTree {
    let mut rng = rng_from_seed(seed);
    let mut word: Vec<u8> = Vec::with_capacity(3 * n + 1);
    word.extend(std::iter::repeat_n(b'N', n));
    word.extend(std::iter::repeat_n(b'L', 2 * n + 1));
    word.shuffle(&mut rng);
    let mut sum = 0i64;
    let mut min = 0i64;
    let mut cut = 0;
    for (i, &c) in word.iter().enumerate() {
        sum += if c == b'N' { 2 } else { -1 };
        if sum < min {
            min = sum;
            cut = i + 1;
        }
    }
    let len = word.len();
    word.rotate_left(cut % len);
    TernaryTree::from_word(std::str::from_utf8(&word).unwrap()).expect("dominating conjugate is a tree")
}

/// A ternary tree with its alternating edge coloring.
///
/// The coloring is fixed by the color of the root stem: at every node the
/// middle child edge repeats the parent edge color, the side edges take the
/// other color.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BicoloredTernaryTree {
    tree: TernaryTree,
    root_color: Color,
    parent_color: Vec<Color>,
}

pub fn bicolor(tree: &TernaryTree, root_stem_color: Color) -> BicoloredTernaryTree {
    let n = tree.node_count();
    let mut parent_color = vec![root_stem_color; n];
    // parents precede children in prefix order, which is the node order
    for v in 1..n {
        let (p, s) = tree.parent(v).expect("non-root node has a parent");
        parent_color[v] = slot_color(parent_color[p], s);
    }
    BicoloredTernaryTree { tree: tree.clone(), root_color: root_stem_color, parent_color }
}

fn slot_color(parent: Color, s: Slot) -> Color {
    match s {
        Slot::Middle => parent,
        _ => parent.other(),
    }
}

impl BicoloredTernaryTree {
    pub fn tree(&self) -> &TernaryTree {
        &self.tree
    }

    pub fn root_color(&self) -> Color {
        self.root_color
    }

    /// Color of the edge from `v` to its parent (the root stem for the root).
    pub fn parent_edge_color(&self, v: NodeId) -> Color {
        self.parent_color[v]
    }

    pub fn child_edge_color(&self, v: NodeId, s: Slot) -> Color {
        slot_color(self.parent_color[v], s)
    }

    pub fn swapped(&self) -> Self {
        bicolor(&self.tree, self.root_color.other())
    }

    /// Edges of color `c`, closed edges and stems alike.
    pub fn count_edges(&self, c: Color) -> usize {
        let n = self.tree.node_count();
        if n == 0 {
            return usize::from(self.root_color == c);
        }
        let mut count = usize::from(self.root_color == c);
        for v in 0..n {
            for s in Slot::ALL {
                if self.child_edge_color(v, s) == c {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn count_red_edges(&self) -> usize {
        self.count_edges(Color::Red)
    }

    /// Closed edges of color `c` whose clockwise successor at both ends is closed.
    pub fn count_internal_edges(&self, c: Color) -> usize {
        let t = &self.tree;
        (1..t.node_count())
            .filter(|&v| {
                let (u, s) = t.parent(v).unwrap();
                if self.parent_color[v] != c || t.child(v, Slot::Right).is_none() {
                    return false;
                }
                match s {
                    Slot::Left => t.parent(u).is_some(),
                    Slot::Middle => t.child(u, Slot::Left).is_some(),
                    Slot::Right => t.child(u, Slot::Middle).is_some(),
                }
            })
            .count()
    }

    pub fn count_internal_red_edges(&self) -> usize {
        self.count_internal_edges(Color::Red)
    }
}

pub fn count_red_edges(t: &BicoloredTernaryTree) -> usize {
    t.count_red_edges()
}

pub fn count_internal_red_edges(t: &BicoloredTernaryTree) -> usize {
    t.count_internal_red_edges()
}
