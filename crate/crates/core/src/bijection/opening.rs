use crate::error::{Error, Result};
use crate::planar_map::{DartId, EdgeId, IrreducibleTriangulation, VertexId};
use crate::ternary_tree::{bicolor, BicoloredTernaryTree, TernaryTree};
use crate::transversal::{minimal_structure, phi, right_side_is_inside, EdgePartition};
use crate::Color;

/// Inner vertex count above which [`FourOrientation::has_clockwise_circuit`]
/// refuses to enumerate cycles.
pub const CIRCUIT_SEARCH_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Outer,
    /// One half-edge outgoing, the other ingoing.
    Stem,
    /// Both half-edges outgoing.
    Tree,
}

/// Half-edge orientation induced by a minimal partition: a half-edge leaves
/// its vertex iff the angle on its right is bicolored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourOrientation {
    out: Vec<Option<bool>>,
    kind: Vec<EdgeKind>,
}

pub fn four_orientation(t: &IrreducibleTriangulation, ep: &EdgePartition) -> Result<FourOrientation> {
    let m = t.map();
    let mut out = vec![None; m.dart_count()];
    for (d, slot) in out.iter_mut().enumerate() {
        if t.is_outer_edge(d / 2) {
            continue;
        }
        // angles at outer vertices count as unicolored
        *slot = Some(
            !t.is_outer_vertex(m.origin(d))
                && ep.dart_color(d, Color::Blue) != ep.dart_color(m.next_cw(d), Color::Blue),
        );
    }
    let mut kind = Vec::with_capacity(m.edge_count());
    for e in 0..m.edge_count() {
        kind.push(match (out[2 * e], out[2 * e + 1]) {
            (None, _) | (_, None) => EdgeKind::Outer,
            (Some(true), Some(true)) => EdgeKind::Tree,
            (Some(false), Some(false)) => return Err(Error::NotMinimal { edge: e }),
            _ => EdgeKind::Stem,
        });
    }
    Ok(FourOrientation { out, kind })
}

impl FourOrientation {
    /// `None` on the outer 4-gon.
    pub fn is_out(&self, d: DartId) -> Option<bool> {
        self.out[d]
    }

    pub fn kind(&self, e: EdgeId) -> EdgeKind {
        self.kind[e]
    }

    pub fn outdegree(&self, t: &IrreducibleTriangulation, v: VertexId) -> usize {
        t.map().darts_around(v).filter(|&d| self.out[d] == Some(true)).count()
    }

    pub fn count(&self, k: EdgeKind) -> usize {
        self.kind.iter().filter(|&&x| x == k).count()
    }

    /// Whether the tree edges form a spanning tree of the inner vertices.
    pub fn tree_edges_span(&self, t: &IrreducibleTriangulation) -> bool {
        let m = t.map();
        let inner: Vec<VertexId> = t.inner_vertices().collect();
        if self.count(EdgeKind::Tree) + 1 != inner.len() {
            return false;
        }
        let mut seen = vec![false; m.vertex_count()];
        let mut stack = vec![inner[0]];
        seen[inner[0]] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for d in m.darts_around(v) {
                let h = m.head(d);
                if self.kind[d / 2] == EdgeKind::Tree && !seen[h] {
                    seen[h] = true;
                    reached += 1;
                    stack.push(h);
                }
            }
        }
        reached == inner.len()
    }

    /// Searches every simple directed cycle on the inner vertices (tree edges
    /// usable both ways) for one with its interior on the right. Exhaustive,
    /// so limited to [`CIRCUIT_SEARCH_CAP`] inner vertices.
    pub fn has_clockwise_circuit(&self, t: &IrreducibleTriangulation) -> Result<bool> {
        let n = t.inner_vertex_count();
        if n > CIRCUIT_SEARCH_CAP {
            return Err(Error::CapExceeded { n, cap: CIRCUIT_SEARCH_CAP });
        }
        let m = t.map();
        let arcs = |v: VertexId| {
            m.darts_around(v).filter(move |&d| self.out[d] == Some(true) && !t.is_outer_vertex(m.head(d)))
        };
        for start in t.inner_vertices() {
            // depth-first over paths start -> ... using only vertices above start
            let mut path: Vec<DartId> = Vec::new();
            let mut on_path = vec![false; m.vertex_count()];
            on_path[start] = true;
            let mut iters: Vec<Vec<DartId>> = vec![arcs(start).collect()];
            while let Some(top) = iters.last_mut() {
                let Some(d) = top.pop() else {
                    iters.pop();
                    if let Some(d) = path.pop() {
                        on_path[m.head(d)] = false;
                    }
                    continue;
                };
                let h = m.head(d);
                if h == start {
                    if path.len() >= 2 {
                        let mut cycle = path.clone();
                        cycle.push(d);
                        if right_side_is_inside(m, &cycle) {
                            return Ok(true);
                        }
                    }
                    continue;
                }
                if h < start || on_path[h] {
                    continue;
                }
                on_path[h] = true;
                path.push(d);
                iters.push(arcs(h).collect());
            }
        }
        Ok(false)
    }
}

/// The stem into S met first counterclockwise around S after the outer edge
/// to E; the opening without a marker is rooted there.
pub fn canonical_root(t: &IrreducibleTriangulation) -> DartId {
    let m = t.map();
    let d =
        m.darts_from(t.dart(t.s(), t.e())).find(|&d| !t.is_outer_vertex(m.head(d))).expect("S has an inner neighbor");
    d ^ 1
}

/// Removes the outer 4-gon and every half-edge whose clockwise neighbor has
/// the same color, and reads the remaining tree from `root` (a stem dart,
/// oriented away from its node), or from [`canonical_root`].
pub fn opening(t: &IrreducibleTriangulation, ep: &EdgePartition, root: Option<DartId>) -> Result<BicoloredTernaryTree> {
    let fo = four_orientation(t, ep)?;
    let m = t.map();
    let root = root.unwrap_or_else(|| canonical_root(t));
    let is_stem = fo.is_out(root) == Some(true) && fo.is_out(root ^ 1) != Some(true);
    if !is_stem {
        return Err(Error::InvalidStructure(format!("root dart {root} is not a stem")));
    }
    enum Step {
        Leaf,
        Node(DartId),
    }
    let mut word = String::new();
    let mut seen = vec![false; m.vertex_count()];
    let mut stack = vec![Step::Node(root)];
    while let Some(step) = stack.pop() {
        let Step::Node(parent) = step else {
            word.push('L');
            continue;
        };
        let v = m.origin(parent);
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidStructure(format!("tree edges close a cycle at {v}")));
        }
        word.push('N');
        let kids: Vec<DartId> = m.darts_from(parent).skip(1).filter(|&d| fo.is_out(d) == Some(true)).collect();
        if kids.len() != 3 {
            return Err(Error::InvalidStructure(format!("vertex {v} has outdegree {}", kids.len() + 1)));
        }
        for &d in kids.iter().rev() {
            stack.push(match fo.kind(d / 2) {
                EdgeKind::Tree => Step::Node(d ^ 1),
                _ => Step::Leaf,
            });
        }
    }
    if word.matches('N').count() != t.inner_vertex_count() {
        return Err(Error::InvalidStructure("tree edges do not span the inner vertices".into()));
    }
    let tree = TernaryTree::from_word(&word)?;
    let color = ep.color(root / 2).ok_or_else(|| Error::InvalidStructure("root on the outer face".into()))?;
    Ok(bicolor(&tree, color))
}

/// Opening with the minimal partition computed from scratch.
pub fn open(t: &IrreducibleTriangulation) -> Result<BicoloredTernaryTree> {
    let ts = minimal_structure(t)?;
    opening(t, &phi(&ts), None)
}

#[cfg(test)]
mod tests {
    use super::super::closure::closure;
    use super::*;
    use crate::ternary_tree::enumerate_trees;

    #[test]
    fn n1_opening() {
        let tree = TernaryTree::from_word("NLLL").unwrap();
        let c = closure(&bicolor(&tree, Color::Red)).unwrap();
        let bt = open(&c.triangulation).unwrap();
        assert_eq!(bt.tree(), &tree);
        assert_eq!(bt.root_color(), Color::Red);
    }

    #[test]
    fn four_orientation_counts() {
        for n in 1..=5 {
            for tree in enumerate_trees(n).unwrap() {
                let c = closure(&bicolor(&tree, Color::Red)).unwrap();
                let t = &c.triangulation;
                let fo = four_orientation(t, &c.partition).unwrap();
                let (s, tr) = (fo.count(EdgeKind::Stem), fo.count(EdgeKind::Tree));
                assert_eq!(s + 2 * tr, 4 * n);
                assert_eq!(s + tr, 3 * n + 1);
                assert!(t.inner_vertices().all(|v| fo.outdegree(t, v) == 4));
                assert!(fo.tree_edges_span(t));
                assert!(!fo.has_clockwise_circuit(t).unwrap(), "{tree}");
            }
        }
    }

    #[test]
    fn opening_inverts_closure() {
        for n in 1..=5 {
            for tree in enumerate_trees(n).unwrap() {
                for color in [Color::Red, Color::Blue] {
                    let bt = bicolor(&tree, color);
                    let c = closure(&bt).unwrap();
                    assert_eq!(opening(&c.triangulation, &c.partition, Some(c.root)).unwrap(), bt);
                }
            }
        }
    }
}
