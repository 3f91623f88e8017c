//! Text formats: maps with optional edge colors and directions, tree words
//! and grid coordinates.
//!
//! A map file reads
//!
//! ```text
//! planarmap 5
//! 0: 4 1 3
//! ...
//! outer: W N E S
//! 4 1 red >
//! root: 4 3
//! ```
//!
//! Rotation lines list neighbors counterclockwise; `outer` names the outer
//! quadrangle clockwise. Each edge line gives a color and a direction: `>`
//! for `u -> v`, `<` for `v -> u`, `-` when undirected. Lines starting with
//! `#` are ignored.

use std::fmt::Write as _;

use crate::drawing::GridDrawing;
use crate::error::{Error, Result};
use crate::planar_map::{DartId, IrreducibleTriangulation, VertexId};
use crate::ternary_tree::{bicolor, BicoloredTernaryTree, TernaryTree};
use crate::transversal::{EdgePartition, TransversalStructure};
use crate::Color;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
    Undirected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLine {
    pub u: VertexId,
    pub v: VertexId,
    pub color: Color,
    pub direction: Direction,
}

/// A parsed map file, not yet validated as a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapFile {
    pub rotation: Vec<Vec<VertexId>>,
    pub outer: [VertexId; 4],
    pub edges: Vec<EdgeLine>,
    pub root: Option<(VertexId, VertexId)>,
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn num(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| perr(line, format!("expected a vertex id, found {tok:?}")))
}

impl MapFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
        let count = match header.split_whitespace().collect::<Vec<_>>()[..] {
            ["planarmap", c] => num(c, ln)?,
            _ => return Err(perr(ln, "expected `planarmap <vertex_count>`")),
        };
        let mut rotation: Vec<Option<Vec<VertexId>>> = vec![None; count];
        let mut outer = None;
        let mut edges = Vec::new();
        let mut root = None;
        for (ln, l) in lines {
            if let Some(rest) = l.strip_prefix("outer:") {
                let vs = rest.split_whitespace().map(|t| num(t, ln)).collect::<Result<Vec<_>>>()?;
                let arr: [VertexId; 4] = vs.try_into().map_err(|_| perr(ln, "outer needs four vertices"))?;
                outer = Some(arr);
            } else if let Some(rest) = l.strip_prefix("root:") {
                let vs = rest.split_whitespace().map(|t| num(t, ln)).collect::<Result<Vec<_>>>()?;
                match vs[..] {
                    [u, v] => root = Some((u, v)),
                    _ => return Err(perr(ln, "root needs two vertices")),
                }
            } else if let Some((head, rest)) = l.split_once(':') {
                let v = num(head.trim(), ln)?;
                if v >= count {
                    return Err(perr(ln, format!("vertex {v} out of range")));
                }
                if rotation[v].is_some() {
                    return Err(perr(ln, format!("second rotation line for vertex {v}")));
                }
                let nbrs = rest.split_whitespace().map(|t| num(t, ln)).collect::<Result<Vec<_>>>()?;
                let mut sorted = nbrs.clone();
                sorted.sort_unstable();
                if sorted.windows(2).any(|w| w[0] == w[1]) {
                    return Err(perr(ln, format!("duplicate neighbor in the rotation of {v}")));
                }
                rotation[v] = Some(nbrs);
            } else {
                let toks: Vec<&str> = l.split_whitespace().collect();
                let [u, v, c, dir] = toks[..] else {
                    return Err(perr(ln, format!("unrecognized line {l:?}")));
                };
                let color = c.parse::<Color>().map_err(|_| perr(ln, format!("bad color {c:?}")))?;
                let direction = match dir {
                    ">" => Direction::Forward,
                    "<" => Direction::Backward,
                    "-" => Direction::Undirected,
                    _ => return Err(perr(ln, format!("bad direction {dir:?}"))),
                };
                edges.push(EdgeLine { u: num(u, ln)?, v: num(v, ln)?, color, direction });
            }
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| r.ok_or_else(|| perr(0, format!("no rotation line for vertex {v}"))))
            .collect::<Result<Vec<_>>>()?;
        let outer = outer.ok_or_else(|| perr(0, "missing `outer:` line"))?;
        Ok(MapFile { rotation, outer, edges, root })
    }

    pub fn triangulation(&self) -> Result<IrreducibleTriangulation> {
        IrreducibleTriangulation::new(&self.rotation, self.outer)
    }

    fn edge_of(t: &IrreducibleTriangulation, l: &EdgeLine) -> Result<DartId> {
        t.map().dart(l.u, l.v).ok_or_else(|| Error::InvalidStructure(format!("{} {} is not an edge", l.u, l.v)))
    }

    /// The edge colors, or `None` if the file has no edge lines.
    pub fn partition(&self, t: &IrreducibleTriangulation) -> Result<Option<EdgePartition>> {
        if self.edges.is_empty() {
            return Ok(None);
        }
        let mut colors = vec![None; t.map().edge_count()];
        for l in &self.edges {
            colors[Self::edge_of(t, l)? / 2] = Some(l.color);
        }
        Ok(Some(EdgePartition::new(colors)))
    }

    /// The oriented structure, if every edge line carries a direction.
    pub fn structure(&self, t: &IrreducibleTriangulation) -> Result<Option<TransversalStructure>> {
        if self.edges.is_empty() || self.edges.iter().any(|l| l.direction == Direction::Undirected) {
            return Ok(None);
        }
        let mut ts = TransversalStructure::empty(t.map().edge_count());
        for l in &self.edges {
            let d = Self::edge_of(t, l)?;
            ts.set(if l.direction == Direction::Forward { d } else { d ^ 1 }, l.color);
        }
        Ok(Some(ts))
    }

    pub fn root_dart(&self, t: &IrreducibleTriangulation) -> Result<Option<DartId>> {
        self.root
            .map(|(u, v)| {
                t.map().dart(u, v).ok_or_else(|| Error::InvalidStructure(format!("root {u} {v} is not an edge")))
            })
            .transpose()
    }
}

/// Colors and directions to append to a map file.
#[derive(Debug, Clone, Copy, Default)]
pub struct Annotations<'a> {
    pub partition: Option<&'a EdgePartition>,
    pub structure: Option<&'a TransversalStructure>,
    pub root: Option<DartId>,
}

pub fn write_map(t: &IrreducibleTriangulation, ann: Annotations<'_>) -> String {
    let m = t.map();
    let mut s = String::new();
    let _ = writeln!(s, "planarmap {}", m.vertex_count());
    for (v, r) in m.rotation().iter().enumerate() {
        let list: Vec<String> = r.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(s, "{v}: {}", list.join(" "));
    }
    let o = t.outer();
    let _ = writeln!(s, "outer: {} {} {} {}", o[0], o[1], o[2], o[3]);
    for e in t.inner_edges() {
        if let Some(ts) = ann.structure {
            if let (Some(c), Some(d)) = (ts.color(e), ts.oriented(e)) {
                let _ = writeln!(s, "{} {} {} >", m.origin(d), m.head(d), c.name());
                continue;
            }
        }
        if let Some(c) = ann.partition.and_then(|ep| ep.color(e)) {
            let _ = writeln!(s, "{} {} {} -", m.origin(2 * e), m.head(2 * e), c.name());
        }
    }
    if let Some(r) = ann.root {
        let _ = writeln!(s, "root: {} {}", m.origin(r), m.head(r));
    }
    s
}

/// A tree line: the prefix word, optionally followed by the root stem color
/// (red when omitted).
pub fn parse_tree(text: &str) -> Result<BicoloredTernaryTree> {
    let line = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    let toks: Vec<&str> = line.split_whitespace().collect();
    let (word, color) = match toks[..] {
        [w] => (w, Color::Red),
        [w, c] => (w, c.parse::<Color>().map_err(|_| perr(1, format!("bad color {c:?}")))?),
        _ => return Err(perr(1, "expected a tree word and an optional color")),
    };
    let tree = TernaryTree::from_word(word)?;
    if tree.node_count() == 0 {
        return Err(Error::InvalidTree("a tree needs at least one node".into()));
    }
    Ok(bicolor(&tree, color))
}

pub fn write_tree(bt: &BicoloredTernaryTree) -> String {
    format!("{} {}\n", bt.tree().to_word(), bt.root_color().name())
}

pub fn write_coords(d: &GridDrawing) -> String {
    let mut s = format!("grid {} {}\n", d.width, d.height);
    for (v, (x, y)) in d.coords.iter().enumerate() {
        let _ = writeln!(s, "{v}\t{x}\t{y}");
    }
    s
}

pub fn parse_coords(text: &str) -> Result<GridDrawing> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (ln, header) = lines.next().ok_or_else(|| perr(1, "empty file"))?;
    let int = |t: &str, ln: usize| t.parse::<i64>().map_err(|_| perr(ln, format!("expected an integer, found {t:?}")));
    let (width, height) = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["grid", w, h] => (int(w, ln)?, int(h, ln)?),
        _ => return Err(perr(ln, "expected `grid W H`")),
    };
    let mut coords = Vec::new();
    for (ln, l) in lines {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let [v, x, y] = toks[..] else {
            return Err(perr(ln, "expected `vertex x y`"));
        };
        if int(v, ln)? != coords.len() as i64 {
            return Err(perr(ln, "vertices must be listed in order"));
        }
        coords.push((int(x, ln)?, int(y, ln)?));
    }
    Ok(GridDrawing { coords, width, height })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transversal::tests::{n1, n1_structure};

    #[test]
    fn map_round_trip() {
        let t = n1();
        let ts = n1_structure(&t);
        let text = write_map(&t, Annotations { structure: Some(&ts), root: Some(t.dart(4, 3)), ..Default::default() });
        let f = MapFile::parse(&text).unwrap();
        let t2 = f.triangulation().unwrap();
        assert_eq!(t2.map().rotation(), t.map().rotation());
        assert_eq!(f.structure(&t2).unwrap().unwrap(), ts);
        assert_eq!(f.root_dart(&t2).unwrap(), Some(t.dart(4, 3)));
        assert_eq!(
            write_map(&t2, Annotations { structure: Some(&ts), root: Some(t.dart(4, 3)), ..Default::default() }),
            text
        );
    }

    #[test]
    fn rejects_duplicates_and_garbage() {
        let dup = "planarmap 2\n0: 1 1\n1: 0\nouter: 0 1 0 1\n";
        assert!(matches!(MapFile::parse(dup), Err(Error::Parse { line: 2, .. })));
        assert!(MapFile::parse("graph 3\n").is_err());
        assert!(MapFile::parse("planarmap 1\n0:\n").is_err());
    }

    #[test]
    fn tree_and_coords() {
        let bt = parse_tree("NLLL blue\n").unwrap();
        assert_eq!(write_tree(&bt), "NLLL blue\n");
        assert!(parse_tree("NLL").is_err());
        let d = GridDrawing { coords: vec![(0, 2), (1, 1)], width: 2, height: 2 };
        assert_eq!(parse_coords(&write_coords(&d)).unwrap(), d);
    }
}
