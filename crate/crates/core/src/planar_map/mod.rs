//! Combinatorial maps given by rotation systems.
//!
//! Every undirected edge `e` owns the two darts `2e` and `2e + 1`, so the twin
//! of a dart is `d ^ 1`. Rotations are counterclockwise. The face on the right
//! of a dart `d` is traced by `d -> next_ccw(twin(d))`, so inner faces are
//! walked clockwise and the outer face counterclockwise.

mod angular;
mod triangulation;

use std::collections::{HashMap, VecDeque};

pub use angular::{AngularGraph, QVertex};
pub use triangulation::{IrreducibleTriangulation, OuterLabel};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type DartId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// Snapshot of one dart of a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dart {
    pub id: DartId,
    pub vertex: VertexId,
    pub next_around_vertex: DartId,
    pub twin: DartId,
}

/// How the outer face of a new map is designated.
#[derive(Debug, Clone, Copy)]
pub enum OuterSpec<'a> {
    /// Vertices of the outer face listed clockwise.
    Cycle(&'a [VertexId]),
    /// The outer face lies on the right of the dart `(from, to)`.
    RightOf(VertexId, VertexId),
}

#[derive(Debug, Clone)]
pub struct PlanarMap {
    origin: Vec<VertexId>,
    next: Vec<DartId>,
    prev: Vec<DartId>,
    first: Vec<DartId>,
    face_of: Vec<FaceId>,
    faces: Vec<Vec<DartId>>,
    outer_face: FaceId,
    lookup: HashMap<(VertexId, VertexId), DartId>,
}

/// Builds a map from per-vertex counterclockwise neighbor lists.
///
/// `outer_face_hint` lists the outer face clockwise; a counterclockwise hint is
/// accepted too, which lets [`IrreducibleTriangulation::new`] report the label
/// order precisely.
pub fn build_map(rotation: &[Vec<VertexId>], outer_face_hint: &[VertexId]) -> Result<PlanarMap> {
    PlanarMap::from_rotation(rotation, OuterSpec::Cycle(outer_face_hint))
}

impl PlanarMap {
    pub fn from_rotation(rotation: &[Vec<VertexId>], outer: OuterSpec<'_>) -> Result<Self> {
        let n = rotation.len();
        if n == 0 {
            return Err(Error::MalformedRotation("no vertices".into()));
        }
        let mut lookup = HashMap::new();
        let mut origin = Vec::new();
        for (u, nbrs) in rotation.iter().enumerate() {
            let mut listed = std::collections::HashSet::new();
            for &v in nbrs {
                if v >= n {
                    return Err(Error::MalformedRotation(format!("vertex {u} lists unknown neighbor {v}")));
                }
                if v == u {
                    return Err(Error::MalformedRotation(format!("self-loop at {u}")));
                }
                if !listed.insert(v) {
                    return Err(Error::MalformedRotation(format!("duplicate edge {u}-{v}")));
                }
                if !rotation[v].contains(&u) {
                    return Err(Error::MalformedRotation(format!("edge {u}-{v} missing from the list of {v}")));
                }
                if u < v {
                    let d = origin.len();
                    origin.push(u);
                    origin.push(v);
                    lookup.insert((u, v), d);
                    lookup.insert((v, u), d + 1);
                }
            }
        }
        let darts = origin.len();
        if darts == 0 {
            return Err(Error::MalformedRotation("no edges".into()));
        }
        let mut next = vec![0; darts];
        let mut prev = vec![0; darts];
        let mut first = vec![usize::MAX; n];
        for (u, nbrs) in rotation.iter().enumerate() {
            if nbrs.is_empty() {
                return Err(Error::Disconnected);
            }
            let ds: Vec<DartId> = nbrs.iter().map(|&v| lookup[&(u, v)]).collect();
            first[u] = ds[0];
            for i in 0..ds.len() {
                let a = ds[i];
                let b = ds[(i + 1) % ds.len()];
                next[a] = b;
                prev[b] = a;
            }
        }

        // connectivity
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &rotation[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Disconnected);
        }

        let mut face_of = vec![usize::MAX; darts];
        let mut faces = Vec::new();
        for d0 in 0..darts {
            if face_of[d0] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut cycle = Vec::new();
            let mut d = d0;
            loop {
                face_of[d] = f;
                cycle.push(d);
                d = next[d ^ 1];
                if d == d0 {
                    break;
                }
            }
            faces.push(cycle);
        }
        let euler = n as i64 - (darts / 2) as i64 + faces.len() as i64;
        if euler != 2 {
            return Err(Error::NonPlanarRotation { euler });
        }

        let mut map = PlanarMap { origin, next, prev, first, face_of, faces, outer_face: 0, lookup };
        map.outer_face = match outer {
            OuterSpec::Cycle(hint) => map.find_face_cycle(hint).ok_or_else(|| Error::BadOuterHint(hint.to_vec()))?,
            OuterSpec::RightOf(u, v) => {
                let d = map.dart(u, v).ok_or_else(|| Error::BadOuterHint(vec![u, v]))?;
                map.face_of[d]
            }
        };
        Ok(map)
    }

    fn find_face_cycle(&self, hint: &[VertexId]) -> Option<FaceId> {
        if hint.is_empty() {
            return None;
        }
        let reversed: Vec<VertexId> = hint.iter().rev().copied().collect();
        let matches = |f: FaceId, target: &[VertexId]| {
            let walk = self.face_vertices(f);
            walk.len() == target.len()
                && (0..walk.len()).any(|s| (0..walk.len()).all(|i| walk[(s + i) % walk.len()] == target[i]))
        };
        (0..self.faces.len())
            .find(|&f| matches(f, &reversed))
            .or_else(|| (0..self.faces.len()).find(|&f| matches(f, hint)))
    }

    pub fn vertex_count(&self) -> usize {
        self.first.len()
    }

    pub fn dart_count(&self) -> usize {
        self.origin.len()
    }

    pub fn edge_count(&self) -> usize {
        self.origin.len() / 2
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_record(&self, d: DartId) -> Dart {
        Dart { id: d, vertex: self.origin[d], next_around_vertex: self.next[d], twin: d ^ 1 }
    }

    #[inline]
    pub fn origin(&self, d: DartId) -> VertexId {
        self.origin[d]
    }

    #[inline]
    pub fn head(&self, d: DartId) -> VertexId {
        self.origin[d ^ 1]
    }

    #[inline]
    pub fn twin(&self, d: DartId) -> DartId {
        d ^ 1
    }

    #[inline]
    pub fn edge_of(&self, d: DartId) -> EdgeId {
        d / 2
    }

    /// Next dart counterclockwise around the origin of `d`.
    #[inline]
    pub fn next_ccw(&self, d: DartId) -> DartId {
        self.next[d]
    }

    /// Next dart clockwise around the origin of `d`.
    #[inline]
    pub fn next_cw(&self, d: DartId) -> DartId {
        self.prev[d]
    }

    /// Successor of `d` along the face on its right.
    #[inline]
    pub fn face_next(&self, d: DartId) -> DartId {
        self.next[d ^ 1]
    }

    /// The face on the right of `d`; it contains the angle between `next_cw(d)` and `d`.
    #[inline]
    pub fn face(&self, d: DartId) -> FaceId {
        self.face_of[d]
    }

    pub fn face_darts(&self, f: FaceId) -> &[DartId] {
        &self.faces[f]
    }

    pub fn face_vertices(&self, f: FaceId) -> Vec<VertexId> {
        self.faces[f].iter().map(|&d| self.origin[d]).collect()
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer_face
    }

    pub fn is_outer_face(&self, f: FaceId) -> bool {
        f == self.outer_face
    }

    pub fn first_dart(&self, v: VertexId) -> DartId {
        self.first[v]
    }

    /// Darts leaving `v` in counterclockwise order.
    pub fn darts_around(&self, v: VertexId) -> impl Iterator<Item = DartId> + '_ {
        self.darts_from(self.first[v])
    }

    /// Darts around the origin of `start`, counterclockwise, beginning with `start`.
    pub fn darts_from(&self, start: DartId) -> impl Iterator<Item = DartId> + '_ {
        let mut cur = Some(start);
        std::iter::from_fn(move || {
            let d = cur?;
            let nd = self.next[d];
            cur = if nd == start { None } else { Some(nd) };
            Some(d)
        })
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_around(v).count()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.darts_around(v).map(|d| self.head(d))
    }

    pub fn dart(&self, u: VertexId, v: VertexId) -> Option<DartId> {
        self.lookup.get(&(u, v)).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.lookup.contains_key(&(u, v))
    }

    /// Counterclockwise neighbor lists, the inverse of [`build_map`].
    pub fn rotation(&self) -> Vec<Vec<VertexId>> {
        (0..self.vertex_count()).map(|v| self.neighbors(v).collect()).collect()
    }

    /// Outer face vertices listed clockwise, suitable as a hint for [`build_map`].
    pub fn outer_cycle_clockwise(&self) -> Vec<VertexId> {
        let mut walk = self.face_vertices(self.outer_face);
        walk.reverse();
        walk
    }

    /// Faces lying strictly inside a simple cycle, given as consecutive darts.
    ///
    /// The inside is the side that does not contain the outer face.
    pub fn faces_inside(&self, cycle: &[DartId]) -> Vec<FaceId> {
        let mut blocked = vec![false; self.edge_count()];
        for &d in cycle {
            blocked[d / 2] = true;
        }
        let flood = |seeds: Vec<FaceId>| -> Option<Vec<FaceId>> {
            let mut seen = vec![false; self.faces.len()];
            let mut stack = Vec::new();
            for f in seeds {
                if !seen[f] {
                    seen[f] = true;
                    stack.push(f);
                }
            }
            let mut region = Vec::new();
            while let Some(f) = stack.pop() {
                if f == self.outer_face {
                    return None;
                }
                region.push(f);
                for &d in &self.faces[f] {
                    if blocked[d / 2] {
                        continue;
                    }
                    let g = self.face_of[d ^ 1];
                    if !seen[g] {
                        seen[g] = true;
                        stack.push(g);
                    }
                }
            }
            Some(region)
        };
        let right: Vec<FaceId> = cycle.iter().map(|&d| self.face_of[d]).collect();
        if let Some(region) = flood(right) {
            return region;
        }
        let left: Vec<FaceId> = cycle.iter().map(|&d| self.face_of[d ^ 1]).collect();
        flood(left).unwrap_or_default()
    }

    /// Canonical code of the map rooted at `root`: vertices are relabeled in
    /// breadth-first order, each rotation read counterclockwise from the dart
    /// through which the vertex was discovered. Two maps rooted at darts have
    /// equal codes iff they are isomorphic as rooted maps.
    pub fn canonical_code(&self, root: DartId) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut entry = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        let r = self.origin[root];
        label[r] = 0;
        entry[r] = root;
        order.push(r);
        let mut code = Vec::with_capacity(self.dart_count() + n);
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for d in self.darts_from(entry[v]) {
                let w = self.head(d);
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = d ^ 1;
                    order.push(w);
                }
                code.push(label[w]);
            }
            code.push(usize::MAX);
        }
        code
    }

    /// Relabels vertices so that `canonical_code` order becomes the vertex order.
    /// Returns the permutation `old -> new`.
    pub fn bfs_labels(&self, root: DartId) -> Vec<VertexId> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut entry = vec![usize::MAX; n];
        let mut order = vec![self.origin[root]];
        label[self.origin[root]] = 0;
        entry[self.origin[root]] = root;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            i += 1;
            for d in self.darts_from(entry[v]) {
                let w = self.head(d);
                if label[w] == usize::MAX {
                    label[w] = order.len();
                    entry[w] = d ^ 1;
                    order.push(w);
                }
            }
        }
        label
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wheel4() -> Vec<Vec<VertexId>> {
        // W=0 (left), N=1 (top), E=2 (right), S=3 (bottom), center 4
        vec![vec![4, 1, 3], vec![0, 4, 2], vec![1, 4, 3], vec![2, 4, 0], vec![2, 1, 0, 3]]
    }

    #[test]
    fn single_edge() {
        let m = build_map(&[vec![1], vec![0]], &[0, 1]).unwrap();
        assert_eq!(m.vertex_count(), 2);
        assert_eq!(m.edge_count(), 1);
        assert_eq!(m.face_count(), 1);
    }

    #[test]
    fn k4_with_outer_triangle() {
        // outer triangle 0,1,2 drawn clockwise: 0 left-bottom, 1 top, 2 right-bottom; 3 center
        let rot = vec![vec![2, 3, 1], vec![0, 3, 2], vec![1, 3, 0], vec![0, 2, 1]];
        let m = build_map(&rot, &[0, 1, 2]).unwrap();
        assert_eq!(m.face_count(), 4);
        assert_eq!(m.vertex_count() as i64 - m.edge_count() as i64 + m.face_count() as i64, 2);
        assert_eq!(m.face_vertices(m.outer_face()).len(), 3);
    }

    #[test]
    fn quadrangle_with_center() {
        let m = build_map(&wheel4(), &[0, 1, 2, 3]).unwrap();
        assert_eq!(m.face_count(), 5);
        let lens: Vec<usize> = (0..5).map(|f| m.face_darts(f).len()).collect();
        assert_eq!(lens.iter().filter(|&&l| l == 3).count(), 4);
        assert_eq!(m.face_darts(m.outer_face()).len(), 4);
        // clockwise hint W N E S means the outer walk reads W S E N
        let walk = m.face_vertices(m.outer_face());
        let i = walk.iter().position(|&v| v == 0).unwrap();
        let rotated: Vec<_> = (0..4).map(|k| walk[(i + k) % 4]).collect();
        assert_eq!(rotated, vec![0, 3, 2, 1]);
        assert_eq!(m.rotation(), wheel4());
    }

    #[test]
    fn non_planar_rotation_detected() {
        // K4 with one rotation flipped yields genus 1
        let rot = vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]];
        let err = build_map(&rot, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::NonPlanarRotation { .. }));
    }

    #[test]
    fn disconnected_detected() {
        let rot = vec![vec![1], vec![0], vec![3], vec![2]];
        assert_eq!(build_map(&rot, &[0, 1]).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn bad_hint_detected() {
        let err = build_map(&wheel4(), &[0, 2, 4]).unwrap_err();
        assert!(matches!(err, Error::BadOuterHint(_)));
    }

    #[test]
    fn malformed_lists_rejected() {
        assert!(matches!(build_map(&[vec![1, 1], vec![0]], &[0, 1]), Err(Error::MalformedRotation(_))));
        assert!(matches!(build_map(&[vec![1], vec![]], &[0, 1]), Err(Error::MalformedRotation(_))));
    }

    #[test]
    fn faces_inside_cycle() {
        let m = build_map(&wheel4(), &[0, 1, 2, 3]).unwrap();
        // cycle W -> N -> center: one triangle inside
        let cyc = [m.dart(0, 1).unwrap(), m.dart(1, 4).unwrap(), m.dart(4, 0).unwrap()];
        assert_eq!(m.faces_inside(&cyc).len(), 1);
        let rev = [m.dart(0, 4).unwrap(), m.dart(4, 1).unwrap(), m.dart(1, 0).unwrap()];
        assert_eq!(m.faces_inside(&rev).len(), 1);
        let quad = [m.dart(0, 1).unwrap(), m.dart(1, 2).unwrap(), m.dart(2, 3).unwrap(), m.dart(3, 0).unwrap()];
        assert_eq!(m.faces_inside(&quad).len(), 4);
    }

    #[test]
    fn canonical_code_is_rotation_invariant() {
        let m = build_map(&wheel4(), &[0, 1, 2, 3]).unwrap();
        // relabel vertices by a permutation; codes from corresponding roots agree
        let perm = [3, 0, 4, 1, 2];
        let mut rot = vec![Vec::new(); 5];
        for (v, nb) in wheel4().into_iter().enumerate() {
            rot[perm[v]] = nb.into_iter().map(|w| perm[w]).collect();
        }
        let m2 = build_map(&rot, &[perm[0], perm[1], perm[2], perm[3]]).unwrap();
        let c1 = m.canonical_code(m.dart(0, 1).unwrap());
        let c2 = m2.canonical_code(m2.dart(perm[0], perm[1]).unwrap());
        assert_eq!(c1, c2);
        assert_ne!(c1, m.canonical_code(m.dart(0, 4).unwrap()));
    }
}
