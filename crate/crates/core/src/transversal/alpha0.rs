use super::flow::FlowNetwork;
use super::{EdgePartition, TransversalStructure};
use crate::error::{Error, Result};
use crate::planar_map::{AngularGraph, DartId, EdgeId, IrreducibleTriangulation, OuterLabel, QVertex, VertexId};
use crate::Color;

/// Orientation of the angular graph; `out_of_black[e]` tells whether Q edge
/// `e` leaves its black endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alpha0Orientation {
    out_of_black: Vec<bool>,
}

impl Alpha0Orientation {
    pub fn new(out_of_black: Vec<bool>) -> Self {
        Alpha0Orientation { out_of_black }
    }

    pub fn out_of_black(&self, e: EdgeId) -> bool {
        self.out_of_black[e]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.out_of_black
    }

    /// Outdegree of every vertex of Q.
    pub fn outdegrees(&self, q: &AngularGraph) -> Vec<usize> {
        let m = q.map();
        let mut deg = vec![0; m.vertex_count()];
        for (e, &out) in self.out_of_black.iter().enumerate() {
            let b = q.black_dart(e);
            if out {
                deg[m.origin(b)] += 1;
            } else {
                deg[m.head(b)] += 1;
            }
        }
        deg
    }

    /// Whether every outdegree matches [`alpha0`].
    pub fn is_valid(&self, t: &IrreducibleTriangulation, q: &AngularGraph) -> bool {
        self.outdegrees(q).iter().enumerate().all(|(v, &d)| d == alpha0(t, q, v))
    }
}

/// Prescribed outdegree of a vertex of Q.
pub fn alpha0(t: &IrreducibleTriangulation, q: &AngularGraph, v: VertexId) -> usize {
    match q.kind(v) {
        QVertex::White(_) => 1,
        QVertex::Black(b) => match t.outer_label(b) {
            None => 4,
            Some(OuterLabel::N | OuterLabel::S) => 2,
            Some(OuterLabel::W | OuterLabel::E) => 0,
        },
    }
}

/// Orients each angle out of its vertex iff the angle is bicolored, outer
/// edges counting as blue.
pub fn psi(t: &IrreducibleTriangulation, q: &AngularGraph, ep: &EdgePartition) -> Alpha0Orientation {
    let m = t.map();
    let mut out = vec![false; q.map().edge_count()];
    for (e, slot) in out.iter_mut().enumerate() {
        let d = q.edge_angle(e);
        *slot = ep.dart_color(d, Color::Blue) != ep.dart_color(m.next_cw(d), Color::Blue);
    }
    Alpha0Orientation { out_of_black: out }
}

/// Finds some α₀-orientation by max-flow: every angle is routed to the
/// endpoint it leaves, vertices absorb exactly their prescribed outdegree.
pub fn find_alpha0(t: &IrreducibleTriangulation, q: &AngularGraph) -> Result<Alpha0Orientation> {
    let qm = q.map();
    let ne = qm.edge_count();
    let nv = qm.vertex_count();
    // nodes: source, angles, Q vertices, sink
    let source = 0;
    let sink = 1 + ne + nv;
    let mut g = FlowNetwork::new(sink + 1);
    let mut to_black = Vec::with_capacity(ne);
    for e in 0..ne {
        g.add_edge(source, 1 + e, 1);
        let b = q.black_dart(e);
        to_black.push(g.add_edge(1 + e, 1 + ne + qm.origin(b), 1));
        g.add_edge(1 + e, 1 + ne + qm.head(b), 1);
    }
    let mut demand = 0;
    for v in 0..nv {
        let a = alpha0(t, q, v);
        demand += a;
        if a > 0 {
            g.add_edge(1 + ne + v, sink, a as i64);
        }
    }
    let flow = g.max_flow(source, sink) as usize;
    if flow != demand || demand != ne {
        return Err(Error::NoOrientation { flow, demand });
    }
    Ok(Alpha0Orientation { out_of_black: to_black.iter().map(|&a| g.flow(a) == 1).collect() })
}

/// Rebuilds the transversal structure of an α₀-orientation by sweeping a
/// W-to-E path from the top of the triangulation down to W, S, E.
pub fn sweep_preimage(
    t: &IrreducibleTriangulation,
    q: &AngularGraph,
    o: &Alpha0Orientation,
) -> Result<TransversalStructure> {
    let m = t.map();
    let (w, n, e, s) = (t.w(), t.n(), t.e(), t.s());
    let dart = |a: VertexId, b: VertexId| -> DartId { m.dart(a, b).expect("path vertices are adjacent") };
    let ingoing = |d: DartId| q.angle_edge(d).is_some_and(|qe| !o.out_of_black(qe));

    let mut ts = TransversalStructure::empty(m.edge_count());
    let mut path = vec![w];
    let mut d = m.next_ccw(dart(n, w));
    while m.head(d) != e {
        path.push(m.head(d));
        ts.set(d ^ 1, Color::Red);
        d = m.next_ccw(d);
    }
    path.push(e);

    let target = [w, s, e];
    while path != target {
        let len = path.len();
        let eps_left = |i: usize| m.next_ccw(dart(path[i], path[i - 1]));
        let eps_right = |i: usize| dart(path[i], path[i + 1]);
        let mut last_r: Option<usize> = None;
        let mut pair = None;
        for j in 0..len {
            if let Some(r) = last_r.filter(|_| j > 0 && ingoing(eps_left(j))) {
                pair = Some((r, j));
                break;
            }
            if j + 1 < len && ingoing(eps_right(j)) {
                last_r = Some(j);
            }
        }
        let Some((a, b)) = pair else {
            return Err(Error::Stuck { path_len: len });
        };
        if b < a + 2 {
            return Err(Error::Stuck { path_len: len });
        }

        let mut repl = vec![path[a]];
        for i in a + 1..b {
            let x = path[i];
            let stop = dart(x, path[i + 1]);
            let mut d = m.next_ccw(dart(x, path[i - 1]));
            while d != stop {
                let y = m.head(d);
                ts.set(d ^ 1, Color::Red);
                if repl.last() != Some(&y) {
                    repl.push(y);
                }
                d = m.next_ccw(d);
            }
        }
        if repl.last() != Some(&path[b]) {
            repl.push(path[b]);
        }
        for i in a..b {
            ts.set(dart(path[i], path[i + 1]), Color::Blue);
        }
        path.splice(a..=b, repl);
        if path.len() > m.vertex_count() {
            return Err(Error::Stuck { path_len: path.len() });
        }
    }
    if t.inner_edges().any(|e| ts.color(e).is_none()) {
        return Err(Error::Stuck { path_len: path.len() });
    }
    Ok(ts)
}
