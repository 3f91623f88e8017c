use super::{DartId, EdgeId, FaceId, IrreducibleTriangulation, OuterSpec, PlanarMap, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QVertex {
    /// A vertex of the triangulation.
    Black(VertexId),
    /// An inner face of the triangulation.
    White(FaceId),
}

/// The bipartite map of vertex/inner-face incidences of a triangulation.
///
/// Black vertex `v` keeps id `v`; the white vertex of the `i`-th inner face has
/// id `V + i`. Each edge corresponds to an inner angle, identified by the dart
/// of the triangulation whose angle it is (the corner of `face(d)` at `origin(d)`).
#[derive(Debug, Clone)]
pub struct AngularGraph {
    map: PlanarMap,
    black_count: usize,
    white_face: Vec<FaceId>,
    face_white: Vec<Option<VertexId>>,
    angle_edge: Vec<Option<EdgeId>>,
    edge_angle: Vec<DartId>,
}

impl AngularGraph {
    pub fn new(t: &IrreducibleTriangulation) -> Self {
        let m = t.map();
        let black_count = m.vertex_count();
        let mut face_white = vec![None; m.face_count()];
        let mut white_face = Vec::new();
        for f in t.inner_faces() {
            face_white[f] = Some(black_count + white_face.len());
            white_face.push(f);
        }
        let mut rotation: Vec<Vec<VertexId>> = Vec::with_capacity(black_count + white_face.len());
        for v in 0..black_count {
            rotation.push(m.darts_around(v).filter_map(|d| face_white[m.face(d)]).collect());
        }
        for &f in &white_face {
            rotation.push(m.face_darts(f).iter().rev().map(|&d| m.origin(d)).collect());
        }
        let w = t.w();
        let first_inner = m.next_ccw(t.dart(w, t.s()));
        let outer_white = face_white[m.face(first_inner)].expect("inner face");
        let map = PlanarMap::from_rotation(&rotation, OuterSpec::RightOf(w, outer_white))
            .expect("angular graph of a valid triangulation is a plane map");

        let mut angle_edge = vec![None; m.dart_count()];
        let mut edge_angle = vec![0; map.edge_count()];
        for d in 0..m.dart_count() {
            if let Some(white) = face_white[m.face(d)] {
                let qd = map.dart(m.origin(d), white).unwrap();
                angle_edge[d] = Some(qd / 2);
                edge_angle[qd / 2] = d;
            }
        }
        AngularGraph { map, black_count, white_face, face_white, angle_edge, edge_angle }
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    pub fn black_count(&self) -> usize {
        self.black_count
    }

    pub fn white_count(&self) -> usize {
        self.white_face.len()
    }

    pub fn kind(&self, q: VertexId) -> QVertex {
        if q < self.black_count {
            QVertex::Black(q)
        } else {
            QVertex::White(self.white_face[q - self.black_count])
        }
    }

    pub fn white_of_face(&self, f: FaceId) -> Option<VertexId> {
        self.face_white[f]
    }

    /// Edge of Q for the angle of triangulation dart `d`, if that angle is inner.
    pub fn angle_edge(&self, d: DartId) -> Option<EdgeId> {
        self.angle_edge[d]
    }

    /// Triangulation dart whose angle is the Q edge `e`.
    pub fn edge_angle(&self, e: EdgeId) -> DartId {
        self.edge_angle[e]
    }

    /// The dart of Q edge `e` leaving its black endpoint.
    pub fn black_dart(&self, e: EdgeId) -> DartId {
        if self.map.origin(2 * e) < self.black_count {
            2 * e
        } else {
            2 * e + 1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n1() -> IrreducibleTriangulation {
        let rot = vec![vec![4, 1, 3], vec![0, 4, 2], vec![1, 4, 3], vec![2, 4, 0], vec![2, 1, 0, 3]];
        IrreducibleTriangulation::new(&rot, [0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn n1_counts() {
        let q = AngularGraph::new(&n1());
        assert_eq!(q.black_count(), 5);
        assert_eq!(q.white_count(), 4);
        assert_eq!(q.map().edge_count(), 12);
        for w in 5..9 {
            assert_eq!(q.map().degree(w), 3);
        }
    }

    #[test]
    fn inner_faces_are_quadrangles() {
        let q = AngularGraph::new(&n1());
        let m = q.map();
        assert_eq!(m.face_darts(m.outer_face()).len(), 8);
        for f in 0..m.face_count() {
            if f != m.outer_face() {
                assert_eq!(m.face_darts(f).len(), 4);
            }
        }
    }

    #[test]
    fn angle_maps_are_inverse() {
        let t = n1();
        let q = AngularGraph::new(&t);
        for e in 0..q.map().edge_count() {
            let d = q.edge_angle(e);
            assert_eq!(q.angle_edge(d), Some(e));
            assert_eq!(q.map().origin(q.black_dart(e)), t.map().origin(d));
        }
    }
}
