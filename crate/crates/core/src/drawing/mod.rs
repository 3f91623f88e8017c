//! Face-counting straight-line grid drawing.
//!
//! A vertex gets as abscissa the number of inner faces of the red-map on the
//! left of its separating red path, and as ordinate the number of inner faces
//! of the blue-map on the right of its separating blue path.

mod svg;
mod verify;

pub use svg::{emit_svg, SvgStyle};
pub use verify::{verify_drawing, DrawingReport, DrawingViolation};

use std::collections::BTreeMap;

use crate::planar_map::{DartId, IrreducibleTriangulation, VertexId};
use crate::transversal::{blue_map, red_map, BipolarMap, EdgePartition, TransversalStructure};
use crate::Color;

/// Integer coordinates per vertex (ids of the triangulation) on a
/// `width x height` grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridDrawing {
    pub coords: Vec<(i64, i64)>,
    pub width: i64,
    pub height: i64,
}

impl GridDrawing {
    pub fn half_perimeter(&self) -> i64 {
        self.width + self.height
    }

    /// Distinct abscissas (ordinates) carrying no vertex.
    pub fn unused_columns(&self) -> usize {
        let used: std::collections::BTreeSet<i64> = self.coords.iter().map(|c| c.0).collect();
        (self.width + 1) as usize - used.len()
    }

    pub fn unused_rows(&self) -> usize {
        let used: std::collections::BTreeSet<i64> = self.coords.iter().map(|c| c.1).collect();
        (self.height + 1) as usize - used.len()
    }
}

/// An oriented vertex sequence from the source to the sink of a bipolar map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingPath {
    pub vertices: Vec<VertexId>,
}

/// The leftmost outgoing dart at `v`, `None` at the sink.
pub fn leftmost_out(bm: &BipolarMap, v: VertexId) -> Option<DartId> {
    let m = bm.map();
    if v == bm.sink() {
        return None;
    }
    if v == bm.source() {
        return m.darts_around(v).find(|&d| m.is_outer_face(m.face(d ^ 1)));
    }
    m.darts_around(v).find(|&d| bm.is_out(d) && !bm.is_out(m.next_ccw(d)))
}

/// The rightmost ingoing edge at `v`, as a dart leaving `v`; `None` at the source.
pub fn rightmost_in(bm: &BipolarMap, v: VertexId) -> Option<DartId> {
    let m = bm.map();
    if v == bm.source() {
        return None;
    }
    if v == bm.sink() {
        return m.darts_around(v).find(|&d| m.is_outer_face(m.face(d ^ 1)));
    }
    m.darts_around(v).find(|&d| !bm.is_out(d) && bm.is_out(m.next_ccw(d)))
}

/// Leftmost outgoing path of `v` followed back from `v` along rightmost
/// ingoing edges, returned from source to sink.
pub fn separating_path(bm: &BipolarMap, v: VertexId) -> SeparatingPath {
    let m = bm.map();
    let mut down = vec![v];
    let mut x = v;
    while let Some(d) = rightmost_in(bm, x) {
        x = m.head(d);
        down.push(x);
    }
    down.reverse();
    let mut x = v;
    while let Some(d) = leftmost_out(bm, x) {
        x = m.head(d);
        down.push(x);
    }
    SeparatingPath { vertices: down }
}

/// Inner faces on the right (or left) of a source-to-sink path, by flooding.
fn faces_beside(bm: &BipolarMap, path: &SeparatingPath, right: bool) -> usize {
    let m = bm.map();
    let darts: Vec<DartId> = path.vertices.windows(2).map(|w| m.dart(w[0], w[1]).unwrap()).collect();
    let mut blocked = vec![false; m.edge_count()];
    for &d in &darts {
        blocked[d / 2] = true;
    }
    let mut seen = vec![false; m.face_count()];
    seen[m.outer_face()] = true;
    let mut stack = Vec::new();
    for &d in &darts {
        let f = m.face(if right { d } else { d ^ 1 });
        if !seen[f] {
            seen[f] = true;
            stack.push(f);
        }
    }
    let mut count = 0;
    while let Some(f) = stack.pop() {
        count += 1;
        for &d in m.face_darts(f) {
            let g = m.face(d ^ 1);
            if !blocked[d / 2] && !seen[g] {
                seen[g] = true;
                stack.push(g);
            }
        }
    }
    count
}

/// Reference implementation: one explicit path and one flood per vertex.
pub fn transversal_draw(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> GridDrawing {
    let (r, b) = (red_map(t, ts), blue_map(t, ts));
    let coords = (0..t.map().vertex_count())
        .map(|v| {
            let x = faces_beside(&r, &separating_path(&r, v), false);
            let y = faces_beside(&b, &separating_path(&b, v), true);
            (x as i64, y as i64)
        })
        .collect();
    GridDrawing { coords, width: r.inner_face_count() as i64, height: b.inner_face_count() as i64 }
}

fn topological_order(bm: &BipolarMap) -> Vec<VertexId> {
    let m = bm.map();
    let mut indeg: Vec<usize> =
        (0..m.vertex_count()).map(|v| m.darts_around(v).filter(|&d| !bm.is_out(d)).count()).collect();
    let mut order = Vec::with_capacity(m.vertex_count());
    let mut stack = vec![bm.source()];
    while let Some(v) = stack.pop() {
        order.push(v);
        for d in m.darts_around(v).filter(|&d| bm.is_out(d)) {
            let h = m.head(d);
            indeg[h] -= 1;
            if indeg[h] == 0 {
                stack.push(h);
            }
        }
    }
    order
}

/// Inner faces on the right of every separating path, in linear time.
///
/// Each inner face sends one unit of flow to the outer face, always crossing
/// an edge of its left boundary. Whatever lies on the right of a
/// source-to-sink path must cross it, so the count is the flow through the
/// path, summed along the two trees of leftmost outgoing and rightmost
/// ingoing edges.
fn faces_right_of_paths(bm: &BipolarMap) -> Vec<usize> {
    let m = bm.map();
    let outer = m.outer_face();
    let nf = m.face_count();
    // parent face and crossing edge per inner face
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; nf];
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); nf];
    let mut roots = Vec::new();
    for f in (0..nf).filter(|&f| f != outer) {
        let d = *m.face_darts(f).iter().find(|&&d| bm.is_out(d)).expect("face has a left boundary");
        let g = m.face(d ^ 1);
        parent[f] = Some((g, d / 2));
        if g == outer {
            roots.push(f);
        } else {
            children[g].push(f);
        }
    }
    let mut size = vec![1usize; nf];
    let mut flow = vec![0usize; m.edge_count()];
    for root in roots {
        // iterative post-order
        let mut stack = vec![(root, false)];
        while let Some((f, done)) = stack.pop() {
            if done {
                let (g, e) = parent[f].unwrap();
                flow[e] = size[f];
                if g != outer {
                    size[g] += size[f];
                }
                continue;
            }
            stack.push((f, true));
            stack.extend(children[f].iter().map(|&c| (c, false)));
        }
    }
    let order = topological_order(bm);
    let mut up = vec![0usize; m.vertex_count()];
    for &v in order.iter().rev() {
        if let Some(d) = leftmost_out(bm, v) {
            up[v] = flow[d / 2] + up[m.head(d)];
        }
    }
    let mut down = vec![0usize; m.vertex_count()];
    for &v in &order {
        if let Some(d) = rightmost_in(bm, v) {
            down[v] = flow[d / 2] + down[m.head(d)];
        }
    }
    (0..m.vertex_count()).map(|v| up[v] + down[v]).collect()
}

/// Same output as [`transversal_draw`] in linear time.
pub fn fast_coordinates(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> GridDrawing {
    let (r, b) = (red_map(t, ts), blue_map(t, ts));
    let fr = r.inner_face_count();
    let xr = faces_right_of_paths(&r);
    let yb = faces_right_of_paths(&b);
    let coords = (0..t.map().vertex_count()).map(|v| ((fr - xr[v]) as i64, yb[v] as i64)).collect();
    GridDrawing { coords, width: fr as i64, height: b.inner_face_count() as i64 }
}

/// Deletes every grid column and row that carries no vertex.
pub fn compact(d: &GridDrawing) -> GridDrawing {
    let rank = |vals: Vec<i64>| -> BTreeMap<i64, i64> { vals.into_iter().zip(0..).collect::<BTreeMap<_, _>>() };
    let mut xs: Vec<i64> = d.coords.iter().map(|c| c.0).collect();
    let mut ys: Vec<i64> = d.coords.iter().map(|c| c.1).collect();
    xs.sort_unstable();
    xs.dedup();
    ys.sort_unstable();
    ys.dedup();
    let (rx, ry) = (rank(xs), rank(ys));
    let coords: Vec<(i64, i64)> = d.coords.iter().map(|&(x, y)| (rx[&x], ry[&y])).collect();
    let width = coords.iter().map(|c| c.0).max().unwrap_or(0);
    let height = coords.iter().map(|c| c.1).max().unwrap_or(0);
    GridDrawing { coords, width, height }
}

/// Inner edges of color `c` whose counterclockwise successor at both ends has
/// the same color; outer edges count as having color `c`.
pub fn ccw_internal_edges(t: &IrreducibleTriangulation, ep: &EdgePartition, c: Color) -> usize {
    let m = t.map();
    t.inner_edges()
        .filter(|&e| ep.color(e) == Some(c) && [2 * e, 2 * e + 1].iter().all(|&d| ep.dart_color(m.next_ccw(d), c) == c))
        .count()
}
