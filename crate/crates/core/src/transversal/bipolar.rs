use super::TransversalStructure;
use crate::planar_map::{DartId, IrreducibleTriangulation, OuterSpec, PlanarMap, VertexId};
use crate::Color;

/// The red (or blue) edges of a structure together with the outer 4-gon,
/// as a plane map with a bipolar orientation. Vertex ids are those of the
/// triangulation.
#[derive(Debug, Clone)]
pub struct BipolarMap {
    map: PlanarMap,
    forward: Vec<bool>,
    source: VertexId,
    sink: VertexId,
}

impl BipolarMap {
    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn sink(&self) -> VertexId {
        self.sink
    }

    /// Whether dart `d` of [`Self::map`] follows the orientation.
    pub fn is_out(&self, d: DartId) -> bool {
        self.forward[d]
    }

    /// Number of inner faces.
    pub fn inner_face_count(&self) -> usize {
        self.map.face_count() - 1
    }

    /// Checks acyclicity and that `source`/`sink` are the only source and sink.
    pub fn is_bipolar(&self) -> bool {
        let m = &self.map;
        let nv = m.vertex_count();
        let mut indeg = vec![0usize; nv];
        let mut outdeg = vec![0usize; nv];
        for d in 0..m.dart_count() {
            if self.forward[d] {
                outdeg[m.origin(d)] += 1;
                indeg[m.head(d)] += 1;
            }
        }
        for v in 0..nv {
            let ok = if v == self.source {
                indeg[v] == 0
            } else if v == self.sink {
                outdeg[v] == 0
            } else {
                indeg[v] > 0 && outdeg[v] > 0
            };
            if !ok {
                return false;
            }
        }
        let mut queue: Vec<VertexId> = vec![self.source];
        let mut seen = 0;
        while let Some(v) = queue.pop() {
            seen += 1;
            for d in m.darts_around(v) {
                if self.forward[d] {
                    let h = m.head(d);
                    indeg[h] -= 1;
                    if indeg[h] == 0 {
                        queue.push(h);
                    }
                }
            }
        }
        seen == nv
    }
}

fn build(t: &IrreducibleTriangulation, ts: &TransversalStructure, color: Color) -> BipolarMap {
    let m = t.map();
    let (w, n, e, s) = (t.w(), t.n(), t.e(), t.s());
    let keep = |d: DartId| t.is_outer_edge(d / 2) || ts.color(d / 2) == Some(color);
    let rotation: Vec<Vec<VertexId>> =
        (0..m.vertex_count()).map(|v| m.darts_around(v).filter(|&d| keep(d)).map(|d| m.head(d)).collect()).collect();
    let map = PlanarMap::from_rotation(&rotation, OuterSpec::RightOf(w, s))
        .expect("subgraph of a plane map with the outer cycle is a plane map");
    let outer_arcs = match color {
        Color::Red => [(s, w), (w, n), (s, e), (e, n)],
        Color::Blue => [(w, n), (n, e), (w, s), (s, e)],
    };
    let mut forward = vec![false; map.dart_count()];
    for d in 0..map.dart_count() {
        let (a, b) = (map.origin(d), map.head(d));
        let td = m.dart(a, b).unwrap();
        forward[d] = if t.is_outer_edge(td / 2) { outer_arcs.contains(&(a, b)) } else { ts.is_forward(td) };
    }
    let (source, sink) = match color {
        Color::Red => (s, n),
        Color::Blue => (w, e),
    };
    BipolarMap { map, forward, source, sink }
}

/// Red inner edges plus the outer edges oriented S to N.
pub fn red_map(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> BipolarMap {
    build(t, ts, Color::Red)
}

/// Blue inner edges plus the outer edges oriented W to E.
pub fn blue_map(t: &IrreducibleTriangulation, ts: &TransversalStructure) -> BipolarMap {
    build(t, ts, Color::Blue)
}
