use std::collections::HashSet;

use super::EdgePartition;
use crate::error::{Error, Result};
use crate::planar_map::{DartId, EdgeId, FaceId, IrreducibleTriangulation, PlanarMap, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chirality {
    Left,
    Right,
}

/// A color-alternating 4-cycle, listed clockwise (interior on the right of
/// every dart `vertices[i] -> vertices[i + 1]`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlternatingFourCycle {
    pub vertices: [VertexId; 4],
    pub darts: [DartId; 4],
    pub chirality: Chirality,
}

impl AlternatingFourCycle {
    pub fn edges(&self) -> [EdgeId; 4] {
        self.darts.map(|d| d / 2)
    }
}

/// Faces strictly inside a cycle whose darts have the interior on their right.
fn inside_faces(m: &PlanarMap, darts: &[DartId]) -> Vec<FaceId> {
    let blocked: HashSet<EdgeId> = darts.iter().map(|d| d / 2).collect();
    let mut seen: HashSet<FaceId> = darts.iter().map(|&d| m.face(d)).collect();
    let mut stack: Vec<FaceId> = seen.iter().copied().collect();
    let mut out = Vec::new();
    while let Some(f) = stack.pop() {
        out.push(f);
        for &d in m.face_darts(f) {
            if blocked.contains(&(d / 2)) {
                continue;
            }
            let g = m.face(d ^ 1);
            if seen.insert(g) {
                stack.push(g);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether the side on the right of the cycle darts is bounded, found by
/// flooding both sides in lockstep until one of them reaches the outer face
/// or runs out.
pub(crate) fn right_side_is_inside(m: &PlanarMap, darts: &[DartId]) -> bool {
    let blocked: HashSet<EdgeId> = darts.iter().map(|d| d / 2).collect();
    let outer = m.outer_face();
    let mut sides: Vec<(HashSet<FaceId>, Vec<FaceId>)> = [0usize, 1]
        .iter()
        .map(|&flip| {
            let seeds: HashSet<FaceId> = darts.iter().map(|&d| m.face(d ^ flip)).collect();
            let stack = seeds.iter().copied().collect();
            (seeds, stack)
        })
        .collect();
    loop {
        for side in 0..2 {
            let (seen, stack) = &mut sides[side];
            let Some(f) = stack.pop() else {
                // this side is exhausted without meeting the outer face
                return side == 0;
            };
            if f == outer {
                return side == 1;
            }
            for &d in m.face_darts(f) {
                if blocked.contains(&(d / 2)) {
                    continue;
                }
                let g = m.face(d ^ 1);
                if seen.insert(g) {
                    stack.push(g);
                }
            }
        }
    }
}

/// Darts at `v` strictly inside the cycle, given the cycle neighbors `p -> v -> s`.
fn inside_darts(m: &PlanarMap, v_to_p: DartId, v_to_s: DartId) -> Vec<DartId> {
    let mut out = Vec::new();
    let mut d = m.next_ccw(v_to_p);
    while d != v_to_s {
        out.push(d);
        d = m.next_ccw(d);
    }
    out
}

/// Classifies a clockwise alternating 4-cycle; `None` if neither
/// configuration holds (only possible on invalid partitions).
pub fn classify_cycle(t: &IrreducibleTriangulation, ep: &EdgePartition, darts: &[DartId; 4]) -> Option<Chirality> {
    let m = t.map();
    let (mut left, mut right) = (true, true);
    for i in 0..4 {
        let into_v = darts[(i + 3) % 4];
        let v_to_s = darts[i];
        let v_to_p = into_v ^ 1;
        let (cl, cr) = (ep.color(v_to_s / 2)?, ep.color(v_to_p / 2)?);
        for d in inside_darts(m, v_to_p, v_to_s) {
            let c = ep.color(d / 2)?;
            left &= c == cl;
            right &= c == cr;
        }
    }
    match (left, right) {
        (true, false) => Some(Chirality::Left),
        (false, true) => Some(Chirality::Right),
        _ => None,
    }
}

/// All alternating 4-cycles on inner vertices, classified, in a fixed order.
pub fn find_alternating_cycles(t: &IrreducibleTriangulation, ep: &EdgePartition) -> Vec<AlternatingFourCycle> {
    let m = t.map();
    let nv = m.vertex_count();
    let inner: Vec<bool> = (0..nv).map(|v| !t.is_outer_vertex(v)).collect();
    let color = |a: VertexId, b: VertexId| ep.color(m.dart(a, b).unwrap() / 2);
    let mut out = Vec::new();
    for a in 0..nv {
        if !inner[a] {
            continue;
        }
        let nbrs: Vec<VertexId> = m.neighbors(a).filter(|&x| x > a && inner[x]).collect();
        for (i, &b) in nbrs.iter().enumerate() {
            for &d in &nbrs[i + 1..] {
                let (b, d) = (b.min(d), b.max(d));
                let (cab, cad) = (color(a, b), color(a, d));
                if cab == cad {
                    continue;
                }
                for c in m.neighbors(b) {
                    if c <= a || c == d || !inner[c] || !m.has_edge(c, d) {
                        continue;
                    }
                    if color(b, c) != cad || color(c, d) != cab {
                        continue;
                    }
                    let mut verts = [a, b, c, d];
                    let mut darts = cycle_darts(m, &verts);
                    if !right_side_is_inside(m, &darts) {
                        verts = [a, d, c, b];
                        darts = cycle_darts(m, &verts);
                    }
                    if let Some(ch) = classify_cycle(t, ep, &darts) {
                        out.push(AlternatingFourCycle { vertices: verts, darts, chirality: ch });
                    }
                }
            }
        }
    }
    out
}

fn cycle_darts(m: &PlanarMap, v: &[VertexId; 4]) -> [DartId; 4] {
    [0, 1, 2, 3].map(|i| m.dart(v[i], v[(i + 1) % 4]).unwrap())
}

pub fn find_right_alternating_cycles(t: &IrreducibleTriangulation, ep: &EdgePartition) -> Vec<AlternatingFourCycle> {
    find_alternating_cycles(t, ep).into_iter().filter(|c| c.chirality == Chirality::Right).collect()
}

pub fn is_minimal(t: &IrreducibleTriangulation, ep: &EdgePartition) -> bool {
    find_right_alternating_cycles(t, ep).is_empty()
}

fn switch_inside(t: &IrreducibleTriangulation, ep: &EdgePartition, c: &AlternatingFourCycle) -> EdgePartition {
    let m = t.map();
    let cycle_edges = c.edges();
    let mut out = ep.clone();
    let mut done = HashSet::new();
    for f in inside_faces(m, &c.darts) {
        for &d in m.face_darts(f) {
            let e = d / 2;
            if cycle_edges.contains(&e) || !done.insert(e) {
                continue;
            }
            let col = ep.color(e).expect("inner edge");
            out.set_color(e, col.other());
        }
    }
    out
}

/// Switches the colors strictly inside a right alternating 4-cycle.
pub fn flip(t: &IrreducibleTriangulation, ep: &EdgePartition, c: &AlternatingFourCycle) -> Result<EdgePartition> {
    if classify_cycle(t, ep, &c.darts) != Some(Chirality::Right) {
        return Err(Error::NotRightCycle);
    }
    Ok(switch_inside(t, ep, c))
}

/// The inverse of [`flip`], applied to a left alternating 4-cycle.
pub fn flop(t: &IrreducibleTriangulation, ep: &EdgePartition, c: &AlternatingFourCycle) -> Result<EdgePartition> {
    if classify_cycle(t, ep, &c.darts) != Some(Chirality::Left) {
        return Err(Error::NotLeftCycle);
    }
    Ok(switch_inside(t, ep, c))
}

/// Flips right alternating 4-cycles until none is left, always taking the
/// first one found.
pub fn minimalize(t: &IrreducibleTriangulation, ep: &EdgePartition) -> EdgePartition {
    minimalize_with(t, ep, |_| 0).0
}

/// Like [`minimalize`], with `pick` choosing which of the current right
/// cycles to flip. Returns the result and the number of flips.
pub fn minimalize_with(
    t: &IrreducibleTriangulation,
    ep: &EdgePartition,
    mut pick: impl FnMut(usize) -> usize,
) -> (EdgePartition, usize) {
    let mut cur = ep.clone();
    let mut flips = 0;
    loop {
        let rights = find_right_alternating_cycles(t, &cur);
        if rights.is_empty() {
            return (cur, flips);
        }
        let c = &rights[pick(rights.len()) % rights.len()];
        cur = switch_inside(t, &cur, c);
        flips += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::super::phi;
    use super::super::tests::{n1, n1_structure};
    use super::*;

    #[test]
    fn n1_has_no_alternating_cycle() {
        let t = n1();
        let ep = phi(&n1_structure(&t));
        assert!(find_alternating_cycles(&t, &ep).is_empty());
        assert_eq!(minimalize(&t, &ep), ep);
    }
}
