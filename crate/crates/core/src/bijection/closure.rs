use std::collections::{HashMap, VecDeque};

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::planar_map::{DartId, IrreducibleTriangulation, VertexId};
use crate::rng::{rng_from_seed, split_seed};
use crate::ternary_tree::{bicolor, random_tree, BicoloredTernaryTree, NodeId, Slot};
use crate::transversal::EdgePartition;
use crate::Color;

pub type HalfId = usize;

/// One step of the counterclockwise walk around the outer face of a figure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryItem {
    /// An unmatched stem.
    Stem(HalfId),
    /// The side of a closed edge, walked from the owner of the half-edge.
    Side(HalfId),
}

/// A tree during partial closure: half-edges around the nodes, some of them
/// still lacking an opposite half-edge (stems).
#[derive(Debug, Clone)]
pub struct PartialFigure {
    owner: Vec<NodeId>,
    color: Vec<Color>,
    twin: Vec<Option<HalfId>>,
    // half-edges around each node, counterclockwise, starting at the parent side
    rot: Vec<Vec<HalfId>>,
    root: HalfId,
    // outer boundary in walk order, each step tagged with its position in the
    // initial walk from the root stem
    boundary: VecDeque<(HalfId, usize)>,
}

impl PartialFigure {
    /// The tree itself, before any local closure. Needs at least one node.
    pub fn from_tree(bt: &BicoloredTernaryTree) -> Result<Self> {
        let t = bt.tree();
        let n = t.node_count();
        if n == 0 {
            return Err(Error::InvalidTree("closure needs at least one node".into()));
        }
        // half-edge 4v is the parent side of v, 4v + 1 + s the child side in slot s
        let mut owner = Vec::with_capacity(4 * n);
        let mut color = Vec::with_capacity(4 * n);
        let mut twin = vec![None; 4 * n];
        for v in 0..n {
            owner.extend([v; 4]);
            color.push(bt.parent_edge_color(v));
            for s in Slot::ALL {
                color.push(bt.child_edge_color(v, s));
            }
            if let Some((u, s)) = t.parent(v) {
                twin[4 * v] = Some(4 * u + 1 + s as usize);
                twin[4 * u + 1 + s as usize] = Some(4 * v);
            }
        }
        let rot = (0..n).map(|v| (4 * v..4 * v + 4).collect()).collect();
        let mut fig = PartialFigure { owner, color, twin, rot, root: 0, boundary: VecDeque::new() };
        let mut h = 0;
        loop {
            let pos = fig.boundary.len();
            fig.boundary.push_back((h, pos));
            h = fig.next_ccw(fig.twin[h].unwrap_or(h));
            if h == 0 {
                break;
            }
        }
        Ok(fig)
    }

    pub fn node_count(&self) -> usize {
        self.rot.len()
    }

    pub fn root(&self) -> HalfId {
        self.root
    }

    pub fn owner(&self, h: HalfId) -> NodeId {
        self.owner[h]
    }

    pub fn color(&self, h: HalfId) -> Color {
        self.color[h]
    }

    pub fn twin(&self, h: HalfId) -> Option<HalfId> {
        self.twin[h]
    }

    fn next_ccw(&self, h: HalfId) -> HalfId {
        let r = &self.rot[self.owner[h]];
        let i = r.iter().position(|&x| x == h).expect("half-edge is listed at its owner");
        r[(i + 1) % r.len()]
    }

    fn item(&self, h: HalfId) -> BoundaryItem {
        match self.twin[h] {
            None => BoundaryItem::Stem(h),
            Some(_) => BoundaryItem::Side(h),
        }
    }

    /// The outer boundary, starting from an arbitrary but fixed step.
    pub fn boundary(&self) -> Vec<BoundaryItem> {
        self.boundary.iter().map(|&(h, _)| self.item(h)).collect()
    }

    /// Number `n_s` of unmatched stems.
    pub fn stem_count(&self) -> usize {
        self.boundary.iter().filter(|&&(h, _)| self.twin[h].is_none()).count()
    }

    /// Number `n_e` of closed-edge sides on the outer face.
    pub fn side_count(&self) -> usize {
        self.boundary.len() - self.stem_count()
    }

    fn is_pattern(&self, a: HalfId, b: HalfId, c: HalfId) -> bool {
        self.twin[a].is_none() && self.twin[b].is_some() && self.twin[c].is_some()
    }

    /// Boundary indices `i` where steps `i, i+1, i+2` read stem, side, side.
    pub fn closable_positions(&self) -> Vec<usize> {
        let len = self.boundary.len();
        (0..len)
            .filter(|&i| {
                let at = |k: usize| self.boundary[(i + k) % len].0;
                self.is_pattern(at(0), at(1), at(2))
            })
            .collect()
    }

    // matches stem `s` against the far end of the side `h2`
    fn close(&mut self, s: HalfId, h2: HalfId) {
        let p2 = self.twin[h2].expect("side of a closed edge");
        let b = self.owner[p2];
        let h = self.owner.len();
        self.owner.push(b);
        self.color.push(self.color[s]);
        self.twin.push(Some(s));
        self.twin[s] = Some(h);
        let r = &mut self.rot[b];
        let i = r.iter().position(|&x| x == p2).unwrap();
        r.insert(i + 1, h);
    }

    /// Performs the local closure found at boundary index `i`.
    pub fn close_at(&self, i: usize) -> Result<Self> {
        let len = self.boundary.len();
        let at = |k: usize| self.boundary[(i + k) % len];
        let (a, b, c) = (at(0), at(1), at(2));
        if !self.is_pattern(a.0, b.0, c.0) {
            return Err(Error::InvalidStructure(format!("no local closure at boundary step {i}")));
        }
        let mut out = self.clone();
        out.close(a.0, c.0);
        out.boundary.rotate_left(i % len);
        out.boundary.drain(..3);
        out.boundary.push_front(a);
        Ok(out)
    }

    /// The first local closure along the boundary, if any.
    pub fn local_closure(&self) -> Option<Self> {
        let i = *self.closable_positions().first()?;
        self.close_at(i).ok()
    }

    /// Greedy local closures until none applies, in linear time.
    ///
    /// The boundary is rotated step by step; the steps already walked act as a
    /// stack whose top three entries are checked after every move.
    pub fn partial_closure(mut self) -> Self {
        let mut ring = std::mem::take(&mut self.boundary);
        let mut quiet = 0;
        while quiet < ring.len() {
            let x = ring.pop_front().unwrap();
            ring.push_back(x);
            quiet += 1;
            while ring.len() >= 3 {
                let len = ring.len();
                let (a, b, c) = (ring[len - 3], ring[len - 2], ring[len - 1]);
                if !self.is_pattern(a.0, b.0, c.0) {
                    break;
                }
                self.close(a.0, c.0);
                ring.truncate(len - 3);
                ring.push_back(a);
                quiet = 0;
            }
        }
        self.boundary = ring;
        self
    }

    /// Per node, the counterclockwise list of (other endpoint, color); `None`
    /// marks an unmatched stem. Independent of the order of local closures.
    pub fn adjacency(&self) -> Vec<Vec<(Option<NodeId>, Color)>> {
        self.rot
            .iter()
            .map(|r| r.iter().map(|&h| (self.twin[h].map(|t| self.owner[t]), self.color[h])).collect())
            .collect()
    }

    /// The boundary as (node, other endpoint) pairs, starting from the step
    /// closest to the root along the initial walk.
    pub fn boundary_trace(&self) -> Vec<(NodeId, Option<NodeId>)> {
        let start = (0..self.boundary.len()).min_by_key(|&i| self.boundary[i].1).unwrap_or(0);
        let len = self.boundary.len();
        (0..len)
            .map(|k| {
                let h = self.boundary[(start + k) % len].0;
                (self.owner[h], self.twin[h].map(|t| self.owner[t]))
            })
            .collect()
    }

    /// Unmatched stems grouped into maximal runs whose consecutive stems are
    /// separated by exactly one side, in boundary order, starting from the
    /// run containing the stem nearest to the root along the initial walk.
    pub fn intervals(&self) -> Vec<Vec<HalfId>> {
        let len = self.boundary.len();
        let stem = |i: usize| self.twin[self.boundary[i % len].0].is_none();
        // a run starts at a stem preceded by another stem
        let Some(first) = (0..len).find(|&i| stem(i) && stem(i + len - 1)) else {
            return Vec::new();
        };
        let mut runs: Vec<Vec<(HalfId, usize)>> = Vec::new();
        for k in 0..len {
            let i = (first + k) % len;
            if !stem(i) {
                continue;
            }
            if stem(i + len - 1) {
                runs.push(Vec::new());
            }
            runs.last_mut().unwrap().push(self.boundary[i]);
        }
        let lead = (0..runs.len()).min_by_key(|&r| runs[r].iter().map(|x| x.1).min()).unwrap_or(0);
        runs.rotate_left(lead);
        runs.into_iter().map(|r| r.into_iter().map(|x| x.0).collect()).collect()
    }

    /// Closes the figure with an outer 4-gon. The run holding the first red
    /// stem met from the root stem goes to S; the next runs counterclockwise
    /// go to E, N and W.
    pub fn complete_closure(&self) -> Result<Closure> {
        if !self.closable_positions().is_empty() {
            return Err(Error::InvalidStructure("partial closure is not finished".into()));
        }
        let runs = self.intervals();
        if runs.len() != 4 {
            return Err(Error::InvalidStructure(format!("{} stem intervals instead of 4", runs.len())));
        }
        let run_color = |r: &Vec<HalfId>| -> Result<Color> {
            let c = self.color[r[0]];
            if r.iter().any(|&h| self.color[h] != c) {
                return Err(Error::InvalidStructure("stem interval is not monochromatic".into()));
            }
            Ok(c)
        };
        let colors = runs.iter().map(run_color).collect::<Result<Vec<_>>>()?;
        if colors[0] != colors[2] || colors[1] != colors[3] || colors[0] == colors[1] {
            return Err(Error::InvalidStructure("stem intervals do not alternate in color".into()));
        }
        let pos: HashMap<HalfId, usize> = self.boundary.iter().copied().collect();
        let s_run =
            (0..4).filter(|&r| colors[r] == Color::Red).min_by_key(|&r| runs[r].iter().map(|h| pos[h]).min()).unwrap();

        let n = self.node_count();
        let (w, north, e, s) = (n, n + 1, n + 2, n + 3);
        // counterclockwise around the 4-gon: S, E, N, W
        let ccw = [s, e, north, w];
        let mut target: Vec<Option<VertexId>> =
            (0..self.owner.len()).map(|h| self.twin[h].map(|t| self.owner[t])).collect();
        let mut rotation: Vec<Vec<VertexId>> = vec![Vec::new(); n + 4];
        for k in 0..4 {
            let x = ccw[k];
            let run = &runs[(s_run + k) % 4];
            for &h in run {
                target[h] = Some(x);
            }
            let r = &mut rotation[x];
            r.push(ccw[(k + 1) % 4]);
            r.extend(run.iter().rev().map(|&h| self.owner[h]));
            r.push(ccw[(k + 3) % 4]);
        }
        for v in 0..n {
            rotation[v] = self.rot[v].iter().map(|&h| target[h].expect("every stem is matched")).collect();
        }
        let t = IrreducibleTriangulation::new(&rotation, [w, north, e, s])?;
        let m = t.map();
        let mut colors = vec![None; m.edge_count()];
        for (h, tg) in target.iter().enumerate() {
            colors[m.dart(self.owner[h], tg.unwrap()).unwrap() / 2] = Some(self.color[h]);
        }
        let root = m.dart(self.owner[self.root], target[self.root].unwrap()).unwrap();
        Ok(Closure { triangulation: t, partition: EdgePartition::new(colors), root })
    }
}

/// Result of the closure: the triangulation, its minimal edge partition and
/// the dart carrying the root stem of the tree.
#[derive(Debug, Clone)]
pub struct Closure {
    pub triangulation: IrreducibleTriangulation,
    pub partition: EdgePartition,
    pub root: DartId,
}

pub fn closure(bt: &BicoloredTernaryTree) -> Result<Closure> {
    PartialFigure::from_tree(bt)?.partial_closure().complete_closure()
}

/// Exchanges N with S and W with E. Colors are kept; every orientation
/// reverses.
pub fn half_turn(t: &IrreducibleTriangulation) -> IrreducibleTriangulation {
    t.with_labels([t.e(), t.s(), t.w(), t.n()]).expect("a half-turn keeps the labels valid")
}

/// Relabels a quarter turn clockwise (the old W becomes N) and swaps the
/// colors so that the partition stays transversal.
pub fn quarter_turn(t: &IrreducibleTriangulation, ep: &EdgePartition) -> (IrreducibleTriangulation, EdgePartition) {
    let t2 = t.with_labels([t.s(), t.w(), t.n(), t.e()]).expect("a quarter turn keeps the labels valid");
    let ep2 = EdgePartition::new(ep.colors().iter().map(|c| c.map(Color::other)).collect());
    (t2, ep2)
}

/// A uniformly random labeled irreducible triangulation with `n` inner
/// vertices, with its minimal partition: closure of a uniform tree under a
/// uniform root color, followed by a uniform half-turn.
pub fn random_triangulation(n: usize, seed: u64) -> Result<Closure> {
    let tree = random_tree(n, split_seed(seed, 0));
    let mut rng = rng_from_seed(split_seed(seed, 1));
    let color = if rng.gen::<bool>() { Color::Red } else { Color::Blue };
    let mut c = closure(&bicolor(&tree, color))?;
    if rng.gen::<bool>() {
        c.triangulation = half_turn(&c.triangulation);
    }
    Ok(c)
}
