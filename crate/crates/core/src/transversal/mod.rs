//! Transversal edge-partitions and transversal structures (colored and
//! oriented inner edges), with their verification.
//!
//! Geometric conventions: W, N, E, S sit left, top, right, bottom. Red edges
//! run bottom to top, blue edges left to right. Around an inner vertex the
//! counterclockwise order is: outgoing red, ingoing blue, ingoing red,
//! outgoing blue.

mod alpha0;
mod bipolar;
mod flow;
mod lattice;

use std::collections::VecDeque;
use std::fmt;

pub use alpha0::{find_alpha0, psi, sweep_preimage, Alpha0Orientation};
pub use bipolar::{blue_map, red_map, BipolarMap};
pub use flow::FlowNetwork;
pub(crate) use lattice::right_side_is_inside;
pub use lattice::{
    classify_cycle, find_alternating_cycles, find_right_alternating_cycles, flip, flop, is_minimal, minimalize,
    minimalize_with, AlternatingFourCycle, Chirality,
};

use crate::planar_map::{AngularGraph, DartId, EdgeId, IrreducibleTriangulation, OuterLabel, VertexId};
use crate::Color;

/// A red/blue coloring of the inner edges (outer edges carry `None`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePartition {
    color: Vec<Option<Color>>,
}

impl EdgePartition {
    pub fn new(color: Vec<Option<Color>>) -> Self {
        EdgePartition { color }
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.color[e]
    }

    pub fn set_color(&mut self, e: EdgeId, c: Color) {
        self.color[e] = Some(c);
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.color
    }

    /// Color of the edge of dart `d`, outer edges counting as `outer`.
    pub fn dart_color(&self, d: DartId, outer: Color) -> Color {
        self.color[d / 2].unwrap_or(outer)
    }

    pub fn count(&self, c: Color) -> usize {
        self.color.iter().filter(|&&x| x == Some(c)).count()
    }
}

/// Colors plus orientations of the inner edges. `head_dart[e]` is the dart of
/// edge `e` that points from its tail to its head.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TransversalStructure {
    color: Vec<Option<Color>>,
    head_dart: Vec<Option<DartId>>,
}

impl TransversalStructure {
    pub fn new(color: Vec<Option<Color>>, head_dart: Vec<Option<DartId>>) -> Self {
        TransversalStructure { color, head_dart }
    }

    pub fn empty(edges: usize) -> Self {
        TransversalStructure { color: vec![None; edges], head_dart: vec![None; edges] }
    }

    pub fn color(&self, e: EdgeId) -> Option<Color> {
        self.color[e]
    }

    /// The oriented dart of edge `e`.
    pub fn oriented(&self, e: EdgeId) -> Option<DartId> {
        self.head_dart[e]
    }

    /// Sets edge `d / 2` to color `c`, oriented along `d`.
    pub fn set(&mut self, d: DartId, c: Color) {
        self.color[d / 2] = Some(c);
        self.head_dart[d / 2] = Some(d);
    }

    /// Whether dart `d` points along its edge orientation.
    pub fn is_forward(&self, d: DartId) -> bool {
        self.head_dart[d / 2] == Some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.color.len()
    }

    pub fn partition(&self) -> EdgePartition {
        EdgePartition::new(self.color.clone())
    }
}

/// Drops the orientations.
pub fn phi(ts: &TransversalStructure) -> EdgePartition {
    ts.partition()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An inner edge has no color (or no orientation).
    Uncolored { edge: EdgeId },
    /// An outer edge carries a color.
    ColoredOuterEdge { edge: EdgeId },
    /// The colors around an inner vertex do not form four alternating intervals.
    C1 { vertex: VertexId, changes: usize },
    /// Inner edges at an outer vertex have the wrong color.
    C2 { vertex: VertexId, label: OuterLabel },
    /// The oriented colors around an inner vertex are out of order.
    C1Prime { vertex: VertexId },
    /// Inner edges at an outer vertex have the wrong direction.
    C2Prime { vertex: VertexId, label: OuterLabel },
    /// The oriented inner edges contain a directed cycle through this vertex.
    Cycle { vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Uncolored { edge } => write!(f, "inner edge {edge} is not colored and oriented"),
            Violation::ColoredOuterEdge { edge } => write!(f, "outer edge {edge} is colored"),
            Violation::C1 { vertex, changes } => {
                write!(f, "C1 fails at vertex {vertex}: {changes} color changes, expected 4")
            }
            Violation::C2 { vertex, label } => write!(f, "C2 fails at outer vertex {vertex} ({label:?})"),
            Violation::C1Prime { vertex } => write!(f, "C1' fails at vertex {vertex}"),
            Violation::C2Prime { vertex, label } => write!(f, "C2' fails at outer vertex {vertex} ({label:?})"),
            Violation::Cycle { vertex } => write!(f, "directed cycle through vertex {vertex}"),
        }
    }
}

/// Required color of the inner edges at an outer vertex.
pub fn outer_color(label: OuterLabel) -> Color {
    match label {
        OuterLabel::N | OuterLabel::S => Color::Red,
        OuterLabel::W | OuterLabel::E => Color::Blue,
    }
}

fn color_changes(t: &IrreducibleTriangulation, colors: &[Option<Color>], v: VertexId) -> Option<usize> {
    let m = t.map();
    let mut changes = 0;
    for d in m.darts_around(v) {
        let (a, b) = (colors[d / 2]?, colors[m.next_ccw(d) / 2]?);
        if a != b {
            changes += 1;
        }
    }
    Some(changes)
}

/// Checks C1 and C2 of an edge partition; an empty result means valid.
pub fn verify_partition(t: &IrreducibleTriangulation, ep: &EdgePartition) -> Vec<Violation> {
    let m = t.map();
    let mut out = Vec::new();
    for e in 0..m.edge_count() {
        match (t.is_outer_edge(e), ep.color(e)) {
            (true, Some(_)) => out.push(Violation::ColoredOuterEdge { edge: e }),
            (false, None) => out.push(Violation::Uncolored { edge: e }),
            _ => {}
        }
    }
    if !out.is_empty() {
        return out;
    }
    for v in t.inner_vertices() {
        let changes = color_changes(t, ep.colors(), v).unwrap_or(0);
        if changes != 4 {
            out.push(Violation::C1 { vertex: v, changes });
        }
    }
    for label in OuterLabel::ALL {
        let v = t.label(label);
        let want = outer_color(label);
        if m.darts_around(v).any(|d| ep.color(d / 2).is_some_and(|c| c != want)) {
            out.push(Violation::C2 { vertex: v, label });
        }
    }
    out
}

/// Position of a dart in the counterclockwise pattern at an inner vertex.
fn kind(ts: &TransversalStructure, d: DartId) -> Option<u8> {
    let c = ts.color(d / 2)?;
    let out = ts.is_forward(d);
    Some(match (c, out) {
        (Color::Red, true) => 0,
        (Color::Blue, false) => 1,
        (Color::Red, false) => 2,
        (Color::Blue, true) => 3,
    })
}

/// Checks C1', C2' and acyclicity; an empty result means valid.
pub fn verify_structure(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> Vec<Violation> {
    let m = t.map();
    let mut out = Vec::new();
    for e in 0..m.edge_count() {
        let outer = t.is_outer_edge(e);
        let has = ts.color(e).is_some() && ts.oriented(e).is_some();
        if outer && (ts.color(e).is_some() || ts.oriented(e).is_some()) {
            out.push(Violation::ColoredOuterEdge { edge: e });
        } else if !outer && !has {
            out.push(Violation::Uncolored { edge: e });
        }
    }
    if !out.is_empty() {
        return out;
    }
    for v in t.inner_vertices() {
        let changes = color_changes(t, &ts.color, v).unwrap_or(0);
        if changes != 4 {
            out.push(Violation::C1 { vertex: v, changes });
            continue;
        }
        let mut steps = 0;
        let mut ok = true;
        for d in m.darts_around(v) {
            let (a, b) = (kind(ts, d).unwrap(), kind(ts, m.next_ccw(d)).unwrap());
            if a != b {
                steps += 1;
                ok &= b == (a + 1) % 4;
            }
        }
        if !ok || steps != 4 {
            out.push(Violation::C1Prime { vertex: v });
        }
    }
    for label in OuterLabel::ALL {
        let v = t.label(label);
        let want = outer_color(label);
        let want_out = matches!(label, OuterLabel::S | OuterLabel::W);
        let mut color_ok = true;
        let mut dir_ok = true;
        for d in m.darts_around(v) {
            if t.is_outer_edge(d / 2) {
                continue;
            }
            color_ok &= ts.color(d / 2) == Some(want);
            dir_ok &= ts.is_forward(d) == want_out;
        }
        if !color_ok {
            out.push(Violation::C2 { vertex: v, label });
        } else if !dir_ok {
            out.push(Violation::C2Prime { vertex: v, label });
        }
    }
    if let Some(v) = find_directed_cycle(t, ts) {
        out.push(Violation::Cycle { vertex: v });
    }
    out
}

/// A vertex on a directed cycle of the oriented inner edges, if any.
fn find_directed_cycle(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> Option<VertexId> {
    let m = t.map();
    let nv = m.vertex_count();
    let mut indeg = vec![0usize; nv];
    for e in t.inner_edges() {
        indeg[m.head(ts.oriented(e)?)] += 1;
    }
    let mut queue: VecDeque<VertexId> = (0..nv).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = queue.pop_front() {
        seen += 1;
        for d in m.darts_around(v) {
            if !t.is_outer_edge(d / 2) && ts.is_forward(d) {
                let h = m.head(d);
                indeg[h] -= 1;
                if indeg[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
    }
    if seen == nv {
        None
    } else {
        (0..nv).find(|&v| indeg[v] > 0)
    }
}

/// Computes some transversal structure from scratch (flow, then sweep).
pub fn compute_structure(t: &IrreducibleTriangulation) -> crate::Result<TransversalStructure> {
    let q = AngularGraph::new(t);
    let o = find_alpha0(t, &q)?;
    sweep_preimage(t, &q, &o)
}

/// The minimal transversal structure of `t`.
pub fn minimal_structure(t: &IrreducibleTriangulation) -> crate::Result<TransversalStructure> {
    let ts = compute_structure(t)?;
    let ep = minimalize(t, &phi(&ts));
    if ep == phi(&ts) {
        return Ok(ts);
    }
    orient(t, &ep)
}

/// Recovers the orientations of a valid edge partition.
pub fn orient(t: &IrreducibleTriangulation, ep: &EdgePartition) -> crate::Result<TransversalStructure> {
    let q = AngularGraph::new(t);
    let o = psi(t, &q, ep);
    sweep_preimage(t, &q, &o)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub fn n1() -> IrreducibleTriangulation {
        let rot = vec![vec![4, 1, 3], vec![0, 4, 2], vec![1, 4, 3], vec![2, 4, 0], vec![2, 1, 0, 3]];
        IrreducibleTriangulation::new(&rot, [0, 1, 2, 3]).unwrap()
    }

    pub fn n1_structure(t: &IrreducibleTriangulation) -> TransversalStructure {
        let mut ts = TransversalStructure::empty(t.map().edge_count());
        ts.set(t.dart(4, 1), Color::Red);
        ts.set(t.dart(3, 4), Color::Red);
        ts.set(t.dart(0, 4), Color::Blue);
        ts.set(t.dart(4, 2), Color::Blue);
        ts
    }

    #[test]
    fn n1_structure_is_valid() {
        let t = n1();
        let ts = n1_structure(&t);
        assert!(verify_structure(&t, &ts).is_empty());
        assert!(verify_partition(&t, &phi(&ts)).is_empty());
    }

    #[test]
    fn color_flip_breaks_c1() {
        let t = n1();
        let mut ts = n1_structure(&t);
        ts.set(t.dart(4, 1), Color::Blue);
        let v = verify_partition(&t, &phi(&ts));
        assert!(v.iter().any(|x| matches!(x, Violation::C1 { vertex: 4, .. })), "{v:?}");
    }

    #[test]
    fn reversed_edge_detected() {
        let t = n1();
        let mut ts = n1_structure(&t);
        ts.set(t.dart(1, 4), Color::Red);
        assert!(!verify_structure(&t, &ts).is_empty());
    }

    #[test]
    fn outer_color_check() {
        let t = n1();
        let mut ts = n1_structure(&t);
        ts.set(t.dart(0, 1), Color::Red);
        assert!(matches!(verify_structure(&t, &ts)[0], Violation::ColoredOuterEdge { .. }));
    }

    #[test]
    fn computed_structure_on_n1() {
        let t = n1();
        assert_eq!(compute_structure(&t).unwrap(), n1_structure(&t));
        assert_eq!(minimal_structure(&t).unwrap(), n1_structure(&t));
    }
}
