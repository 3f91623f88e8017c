use super::{build_map, DartId, EdgeId, FaceId, PlanarMap, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OuterLabel {
    W,
    N,
    E,
    S,
}

impl OuterLabel {
    pub const ALL: [OuterLabel; 4] = [OuterLabel::W, OuterLabel::N, OuterLabel::E, OuterLabel::S];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// A plane triangulation of the 4-gon without separating triangle, with the
/// outer vertices named W, N, E, S in clockwise order.
#[derive(Debug, Clone)]
pub struct IrreducibleTriangulation {
    map: PlanarMap,
    outer: [VertexId; 4],
    is_outer: Vec<bool>,
    outer_edge: Vec<bool>,
}

impl IrreducibleTriangulation {
    /// Builds and validates from ccw rotation lists and the labels `[W, N, E, S]`.
    pub fn new(rotation: &[Vec<VertexId>], labels: [VertexId; 4]) -> Result<Self> {
        let map = build_map(rotation, &labels)?;
        validate_irreducible(map, labels)
    }

    pub fn map(&self) -> &PlanarMap {
        &self.map
    }

    /// Outer vertices in the order W, N, E, S.
    pub fn outer(&self) -> [VertexId; 4] {
        self.outer
    }

    pub fn label(&self, l: OuterLabel) -> VertexId {
        self.outer[l.index()]
    }

    pub fn w(&self) -> VertexId {
        self.outer[0]
    }
    pub fn n(&self) -> VertexId {
        self.outer[1]
    }
    pub fn e(&self) -> VertexId {
        self.outer[2]
    }
    pub fn s(&self) -> VertexId {
        self.outer[3]
    }

    pub fn outer_label(&self, v: VertexId) -> Option<OuterLabel> {
        self.outer.iter().position(|&o| o == v).map(|i| OuterLabel::ALL[i])
    }

    pub fn is_outer_vertex(&self, v: VertexId) -> bool {
        self.is_outer[v]
    }

    pub fn is_outer_edge(&self, e: EdgeId) -> bool {
        self.outer_edge[e]
    }

    /// Number of inner vertices.
    pub fn inner_vertex_count(&self) -> usize {
        self.map.vertex_count() - 4
    }

    pub fn inner_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.map.vertex_count()).filter(|&v| !self.is_outer[v])
    }

    pub fn inner_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.map.edge_count()).filter(|&e| !self.outer_edge[e])
    }

    pub fn inner_faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        let outer = self.map.outer_face();
        (0..self.map.face_count()).filter(move |&f| f != outer)
    }

    pub fn dart(&self, u: VertexId, v: VertexId) -> DartId {
        self.map.dart(u, v).expect("no such edge")
    }

    /// Relabels the outer vertices: `[W, N, E, S]` becomes `labels`, which must
    /// be a cyclic shift of the current outer vertices in clockwise order.
    pub fn with_labels(&self, labels: [VertexId; 4]) -> Result<Self> {
        validate_irreducible(self.map.clone(), labels)
    }
}

/// Checks that `map` is an irreducible triangulation with clockwise outer
/// labels `[W, N, E, S]`.
pub fn validate_irreducible(map: PlanarMap, labels: [VertexId; 4]) -> Result<IrreducibleTriangulation> {
    let outer_darts = map.face_darts(map.outer_face()).to_vec();
    if outer_darts.len() != 4 {
        return Err(Error::NotQuadOuter { len: outer_darts.len() });
    }
    // the outer walk runs counterclockwise: W, S, E, N
    let walk = map.face_vertices(map.outer_face());
    let expected = [labels[0], labels[3], labels[2], labels[1]];
    let ok = (0..4).any(|s| (0..4).all(|i| walk[(s + i) % 4] == expected[i]));
    if !ok {
        return Err(Error::BadLabelOrder);
    }
    for f in 0..map.face_count() {
        if f != map.outer_face() && map.face_darts(f).len() != 3 {
            return Err(Error::NonTriangularInnerFace { face: f, len: map.face_darts(f).len() });
        }
    }
    if map.vertex_count() == 4 {
        return Err(Error::NoInnerVertex);
    }
    if let Some(t) = find_separating_triangle(&map) {
        return Err(Error::SeparatingTriangle(t));
    }
    let mut is_outer = vec![false; map.vertex_count()];
    for &v in &labels {
        is_outer[v] = true;
    }
    let mut outer_edge = vec![false; map.edge_count()];
    for &d in &outer_darts {
        outer_edge[d / 2] = true;
    }
    let n = map.vertex_count() - 4;
    debug_assert_eq!(map.edge_count() - 4, 3 * n + 1);
    debug_assert_eq!(map.face_count() - 1, 2 * n + 2);
    Ok(IrreducibleTriangulation { map, outer: labels, is_outer, outer_edge })
}

fn bounds_face(map: &PlanarMap, d: DartId, w: VertexId) -> bool {
    map.face_darts(map.face(d)).len() == 3 && map.head(map.face_next(d)) == w
}

/// Scans every 3-cycle through common neighbors of edge endpoints.
pub fn find_separating_triangle(map: &PlanarMap) -> Option<[VertexId; 3]> {
    for e in 0..map.edge_count() {
        let d = 2 * e;
        let (mut u, mut v) = (map.origin(d), map.head(d));
        if map.degree(u) > map.degree(v) {
            std::mem::swap(&mut u, &mut v);
        }
        let (lo, hi) = (u.min(v), u.max(v));
        for w in map.neighbors(u) {
            // report each triangle once, from its edge of two smallest ids
            if w <= hi || !map.has_edge(v, w) {
                continue;
            }
            let uv = map.dart(lo, hi).unwrap();
            if !bounds_face(map, uv, w) && !bounds_face(map, uv ^ 1, w) {
                return Some([lo, hi, w]);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn n1_rotation() -> Vec<Vec<VertexId>> {
        vec![vec![4, 1, 3], vec![0, 4, 2], vec![1, 4, 3], vec![2, 4, 0], vec![2, 1, 0, 3]]
    }

    #[test]
    fn n1_accepted() {
        let t = IrreducibleTriangulation::new(&n1_rotation(), [0, 1, 2, 3]).unwrap();
        assert_eq!(t.inner_vertex_count(), 1);
        assert_eq!(t.inner_edges().count(), 4);
        assert_eq!(t.inner_faces().count(), 4);
        assert_eq!(t.outer_label(2), Some(OuterLabel::E));
    }

    #[test]
    fn counterclockwise_labels_rejected() {
        let map = build_map(&n1_rotation(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(validate_irreducible(map, [0, 3, 2, 1]).unwrap_err(), Error::BadLabelOrder);
        // cyclic shifts of a clockwise order are fine
        let map = build_map(&n1_rotation(), &[0, 1, 2, 3]).unwrap();
        assert!(validate_irreducible(map, [1, 2, 3, 0]).is_ok());
    }

    #[test]
    fn octahedron_with_triangular_outer_face() {
        // outer triangle 0,1,2 clockwise; inner triangle 3,4,5
        // 0 bottom-left, 1 top, 2 bottom-right; 3 near edge 01, 4 near 12, 5 near 20
        let rot = vec![
            vec![2, 5, 3, 1],
            vec![0, 3, 4, 2],
            vec![1, 4, 5, 0],
            vec![0, 5, 4, 1],
            vec![1, 3, 5, 2],
            vec![2, 4, 3, 0],
        ];
        let map = build_map(&rot, &[0, 1, 2]).unwrap();
        assert_eq!(validate_irreducible(map, [0, 1, 2, 3]).unwrap_err(), Error::NotQuadOuter { len: 3 });
    }

    #[test]
    fn filled_triangle_rejected() {
        // n=1 instance with a vertex 5 inserted in face (W, N, center)
        let rot =
            vec![vec![4, 5, 1, 3], vec![0, 5, 4, 2], vec![1, 4, 3], vec![2, 4, 0], vec![2, 1, 5, 0, 3], vec![1, 0, 4]];
        let map = build_map(&rot, &[0, 1, 2, 3]).unwrap();
        match validate_irreducible(map, [0, 1, 2, 3]) {
            Err(Error::SeparatingTriangle(t)) => assert_eq!(t, [0, 1, 4]),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn quadrangle_inner_face_rejected() {
        // 4-gon with a center joined to W, N, E only
        let rot = vec![vec![4, 1, 3], vec![0, 4, 2], vec![1, 4, 3], vec![2, 0], vec![2, 1, 0]];
        let map = build_map(&rot, &[0, 1, 2, 3]).unwrap();
        assert!(matches!(validate_irreducible(map, [0, 1, 2, 3]), Err(Error::NonTriangularInnerFace { len: 4, .. })));
    }

    #[test]
    fn diagonal_only_rejected() {
        let rot = vec![vec![2, 1, 3], vec![0, 2], vec![1, 0, 3], vec![2, 0]];
        let map = build_map(&rot, &[0, 1, 2, 3]).unwrap();
        assert_eq!(validate_irreducible(map, [0, 1, 2, 3]).unwrap_err(), Error::NoInnerVertex);
    }
}
