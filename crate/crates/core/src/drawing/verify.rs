use std::fmt;

use super::GridDrawing;
use crate::planar_map::{EdgeId, IrreducibleTriangulation, VertexId};
use crate::transversal::TransversalStructure;
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DrawingViolation {
    OffGrid {
        vertex: VertexId,
    },
    SharedPosition {
        a: VertexId,
        b: VertexId,
    },
    Crossing {
        a: EdgeId,
        b: EdgeId,
    },
    /// A face not drawn as a counterclockwise triangle (or, for the outer
    /// face, not as a clockwise-walked quadrangle).
    FaceOrientation {
        face: usize,
    },
    Orientation {
        edge: EdgeId,
    },
}

impl fmt::Display for DrawingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DrawingViolation::OffGrid { vertex } => write!(f, "vertex {vertex} lies outside the grid"),
            DrawingViolation::SharedPosition { a, b } => write!(f, "vertices {a} and {b} share a position"),
            DrawingViolation::Crossing { a, b } => write!(f, "edges {a} and {b} intersect"),
            DrawingViolation::FaceOrientation { face } => write!(f, "face {face} is flipped or degenerate"),
            DrawingViolation::Orientation { edge } => write!(f, "edge {edge} breaks the orientation property"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DrawingReport {
    pub violations: Vec<DrawingViolation>,
}

impl DrawingReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn planar(&self) -> bool {
        !self.violations.iter().any(|v| !matches!(v, DrawingViolation::Orientation { .. }))
    }
}

type Pt = (i128, i128);

fn orient(a: Pt, b: Pt, c: Pt) -> i128 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn on_segment(a: Pt, b: Pt, p: Pt) -> bool {
    orient(a, b, p) == 0 && p.0 >= a.0.min(b.0) && p.0 <= a.0.max(b.0) && p.1 >= a.1.min(b.1) && p.1 <= a.1.max(b.1)
}

/// Closed segments `ab` and `cd` meet.
fn segments_meet(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let (o1, o2, o3, o4) = (orient(a, b, c), orient(a, b, d), orient(c, d, a), orient(c, d, b));
    if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
        return true;
    }
    on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b)
}

/// Segments `ab` and `ad` sharing endpoint `a` overlap beyond it.
fn overlap_from_shared(a: Pt, b: Pt, d: Pt) -> bool {
    orient(a, b, d) == 0 && (b.0 - a.0) * (d.0 - a.0) + (b.1 - a.1) * (d.1 - a.1) > 0
}

/// Exact geometric audit: grid bounds, distinct positions, pairwise segment
/// intersections, face orientations and, given a structure, the orientation
/// property (red edges upward and weakly rightward, blue edges rightward and
/// weakly downward).
pub fn verify_drawing(
    t: &IrreducibleTriangulation,
    d: &GridDrawing,
    ts: Option<&TransversalStructure>,
) -> DrawingReport {
    let m = t.map();
    let mut out = Vec::new();
    if d.coords.len() != m.vertex_count() {
        out.push(DrawingViolation::OffGrid { vertex: d.coords.len().min(m.vertex_count()) });
        return DrawingReport { violations: out };
    }
    let p = |v: VertexId| -> Pt { (d.coords[v].0 as i128, d.coords[v].1 as i128) };
    for (v, &(x, y)) in d.coords.iter().enumerate() {
        if x < 0 || y < 0 || x > d.width || y > d.height {
            out.push(DrawingViolation::OffGrid { vertex: v });
        }
    }
    let mut by_pos: Vec<(i64, i64, VertexId)> = d.coords.iter().enumerate().map(|(v, &(x, y))| (x, y, v)).collect();
    by_pos.sort_unstable();
    for w in by_pos.windows(2) {
        if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
            out.push(DrawingViolation::SharedPosition { a: w[0].2, b: w[1].2 });
        }
    }

    // sweep over x-extents; only pairs with overlapping boxes are tested
    let ends = |e: EdgeId| (m.origin(2 * e), m.head(2 * e));
    let mut segs: Vec<(i128, i128, EdgeId)> = (0..m.edge_count())
        .map(|e| {
            let (u, v) = ends(e);
            (p(u).0.min(p(v).0), p(u).0.max(p(v).0), e)
        })
        .collect();
    segs.sort_unstable();
    let mut active: Vec<(i128, EdgeId)> = Vec::new();
    for &(lo, hi, e) in &segs {
        active.retain(|&(h, _)| h >= lo);
        let (a, b) = ends(e);
        for &(_, f) in &active {
            let (c, dd) = ends(f);
            let (pa, pb, pc, pd) = (p(a), p(b), p(c), p(dd));
            if pa.1.max(pb.1) < pc.1.min(pd.1) || pc.1.max(pd.1) < pa.1.min(pb.1) {
                continue;
            }
            let bad = if a == c {
                overlap_from_shared(pa, pb, pd)
            } else if a == dd {
                overlap_from_shared(pa, pb, pc)
            } else if b == c {
                overlap_from_shared(pb, pa, pd)
            } else if b == dd {
                overlap_from_shared(pb, pa, pc)
            } else {
                segments_meet(pa, pb, pc, pd)
            };
            if bad {
                out.push(DrawingViolation::Crossing { a: f.min(e), b: f.max(e) });
            }
        }
        active.push((hi, e));
    }

    // inner faces are walked clockwise, the outer face counterclockwise
    for f in 0..m.face_count() {
        let vs = m.face_vertices(f);
        let area2: i128 = (0..vs.len())
            .map(|i| {
                let (a, b) = (p(vs[i]), p(vs[(i + 1) % vs.len()]));
                a.0 * b.1 - a.1 * b.0
            })
            .sum();
        let ok = if m.is_outer_face(f) { area2 > 0 } else { area2 < 0 };
        if !ok {
            out.push(DrawingViolation::FaceOrientation { face: f });
        }
    }

    if let Some(ts) = ts {
        for e in t.inner_edges() {
            let Some(dart) = ts.oriented(e) else {
                out.push(DrawingViolation::Orientation { edge: e });
                continue;
            };
            let (a, b) = (p(m.origin(dart)), p(m.head(dart)));
            let ok = match ts.color(e) {
                Some(Color::Red) => b.1 > a.1 && b.0 >= a.0,
                Some(Color::Blue) => b.0 > a.0 && b.1 <= a.1,
                None => false,
            };
            if !ok {
                out.push(DrawingViolation::Orientation { edge: e });
            }
        }
    }
    DrawingReport { violations: out }
}
