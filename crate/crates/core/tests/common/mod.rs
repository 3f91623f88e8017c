//! Helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use transversal::bijection::{closure, Closure};
use transversal::planar_map::{DartId, IrreducibleTriangulation};
use transversal::ternary_tree::{bicolor, enumerate_trees, BicoloredTernaryTree};
use transversal::transversal::EdgePartition;
use transversal::Color;

/// Every bicolored tree with `n` nodes together with its closure.
pub fn all_closures(n: usize) -> Vec<(BicoloredTernaryTree, Closure)> {
    let mut out = Vec::new();
    for tree in enumerate_trees(n).unwrap() {
        for color in [Color::Red, Color::Blue] {
            let bt = bicolor(&tree, color);
            let c = closure(&bt).unwrap();
            out.push((bt, c));
        }
    }
    out
}

/// Isomorphism key of a triangulation with its W, N, E, S labels.
pub fn labeled_key(t: &IrreducibleTriangulation) -> Vec<usize> {
    t.map().canonical_code(t.map().dart(t.w(), t.n()).unwrap())
}

/// Key of a triangulation rooted at the outer edge from `W`, up to relabeling
/// the outer vertices by a rotation.
pub fn unlabeled_key(t: &IrreducibleTriangulation) -> Vec<usize> {
    let m = t.map();
    let o = [t.w(), t.n(), t.e(), t.s()];
    (0..4).map(|i| m.canonical_code(m.dart(o[i], o[(i + 1) % 4]).unwrap())).min().unwrap()
}

/// Key of a partition, in the vertex numbering of [`labeled_key`].
pub fn partition_key(t: &IrreducibleTriangulation, ep: &EdgePartition) -> Vec<(usize, usize, Option<Color>)> {
    let m = t.map();
    let lab = m.bfs_labels(m.dart(t.w(), t.n()).unwrap());
    let mut out: Vec<_> = (0..m.edge_count())
        .map(|e| {
            let (a, b) = (lab[m.origin(2 * e)], lab[m.head(2 * e)]);
            (a.min(b), a.max(b), ep.color(e))
        })
        .collect();
    out.sort_unstable();
    out
}

/// A dart as a pair of vertex labels in the numbering of [`labeled_key`].
pub fn dart_key(t: &IrreducibleTriangulation, d: DartId) -> (usize, usize) {
    let m = t.map();
    let lab = m.bfs_labels(m.dart(t.w(), t.n()).unwrap());
    (lab[m.origin(d)], lab[m.head(d)])
}

/// Distinct labeled triangulations with `n` inner vertices, each with the
/// partition produced by one of its closures.
pub fn labeled_triangulations(n: usize) -> Vec<(IrreducibleTriangulation, EdgePartition)> {
    let mut seen = BTreeMap::new();
    for (_, c) in all_closures(n) {
        seen.entry(labeled_key(&c.triangulation)).or_insert((c.triangulation, c.partition));
    }
    seen.into_values().collect()
}

/// All transversal edge-partitions, by trying every coloring of the inner edges.
pub fn brute_partitions(t: &IrreducibleTriangulation) -> Vec<EdgePartition> {
    use transversal::transversal::verify_partition;
    let inner: Vec<usize> = t.inner_edges().collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << inner.len() {
        let mut colors = vec![None; t.map().edge_count()];
        for (i, &e) in inner.iter().enumerate() {
            colors[e] = Some(if mask >> i & 1 == 1 { Color::Blue } else { Color::Red });
        }
        let ep = EdgePartition::new(colors);
        if verify_partition(t, &ep).is_empty() {
            out.push(ep);
        }
    }
    out
}

/// All transversal pairs of bipolar orientations. The oriented conditions
/// refine the unoriented ones, so only transversal colorings can carry one;
/// on each of them every orientation of the inner edges is tried.
pub fn brute_structures(
    t: &IrreducibleTriangulation,
    partitions: &[EdgePartition],
) -> Vec<transversal::transversal::TransversalStructure> {
    use transversal::transversal::{verify_structure, TransversalStructure};
    let inner: Vec<usize> = t.inner_edges().collect();
    let mut out = Vec::new();
    for ep in partitions {
        for mask in 0u64..1 << inner.len() {
            let mut heads = vec![None; t.map().edge_count()];
            for (i, &e) in inner.iter().enumerate() {
                heads[e] = Some(2 * e + (mask >> i & 1) as usize);
            }
            let ts = TransversalStructure::new(ep.colors().to_vec(), heads);
            if verify_structure(t, &ts).is_empty() {
                out.push(ts);
            }
        }
    }
    out
}

/// All α₀-orientations of the angular graph: each face vertex picks its one
/// outgoing angle, then the vertex outdegrees are checked against 4 (inner),
/// 2 (N, S) and 0 (W, E).
pub fn brute_alpha0(
    t: &IrreducibleTriangulation,
    q: &transversal::planar_map::AngularGraph,
) -> Vec<transversal::transversal::Alpha0Orientation> {
    use transversal::planar_map::QVertex;
    use transversal::transversal::Alpha0Orientation;
    let qm = q.map();
    let whites: Vec<usize> = (0..qm.vertex_count()).filter(|&v| matches!(q.kind(v), QVertex::White(_))).collect();
    let options: Vec<Vec<usize>> = whites.iter().map(|&w| qm.darts_around(w).map(|d| d / 2).collect()).collect();
    assert!(options.iter().all(|o| o.len() == 3));
    let want = |v: usize| {
        if v == t.n() || v == t.s() {
            2
        } else if v == t.w() || v == t.e() {
            0
        } else {
            4
        }
    };
    let mut out = Vec::new();
    let total = 3usize.pow(whites.len() as u32);
    for mut code in 0..total {
        let mut out_of_black = vec![true; qm.edge_count()];
        for o in &options {
            out_of_black[o[code % 3]] = false;
            code /= 3;
        }
        let mut deg = vec![0usize; t.map().vertex_count()];
        for (e, &ob) in out_of_black.iter().enumerate() {
            if ob {
                deg[qm.origin(q.black_dart(e))] += 1;
            }
        }
        if (0..deg.len()).all(|v| deg[v] == want(v)) {
            out.push(Alpha0Orientation::new(out_of_black));
        }
    }
    out
}
