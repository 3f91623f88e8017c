use std::fmt::Write as _;

use super::GridDrawing;
use crate::planar_map::IrreducibleTriangulation;
use crate::transversal::EdgePartition;
use crate::Color;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvgStyle {
    /// Pixels per grid step.
    pub unit: u32,
    pub margin: u32,
    pub vertex_radius: u32,
    pub grid: bool,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle { unit: 20, margin: 10, vertex_radius: 3, grid: false }
    }
}

/// Deterministic SVG rendering; edges carry the class `red`, `blue` or `outer`.
pub fn emit_svg(t: &IrreducibleTriangulation, ep: &EdgePartition, d: &GridDrawing, style: &SvgStyle) -> String {
    let m = t.map();
    let (u, mg) = (style.unit as i64, style.margin as i64);
    let px = |x: i64| x * u + mg;
    let py = |y: i64| (d.height - y) * u + mg;
    let (w, h) = (d.width * u + 2 * mg, d.height * u + 2 * mg);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
    let _ = writeln!(
        s,
        "<style>.red{{stroke:#d62728}} .blue{{stroke:#1f77b4}} .outer{{stroke:#000}} .grid{{stroke:#ddd}} line{{stroke-width:1.5}}</style>"
    );
    if style.grid {
        s.push_str("<g class=\"grid\">\n");
        for x in 0..=d.width {
            let _ = writeln!(
                s,
                r#"<line class="grid" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(x),
                py(0),
                px(x),
                py(d.height)
            );
        }
        for y in 0..=d.height {
            let _ = writeln!(
                s,
                r#"<line class="grid" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                px(0),
                py(y),
                px(d.width),
                py(y)
            );
        }
        s.push_str("</g>\n");
    }
    s.push_str("<g class=\"edges\">\n");
    for e in 0..m.edge_count() {
        let (a, b) = (d.coords[m.origin(2 * e)], d.coords[m.head(2 * e)]);
        let class = match ep.color(e) {
            Some(Color::Red) => "red",
            Some(Color::Blue) => "blue",
            None => "outer",
        };
        let _ = writeln!(
            s,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            px(a.0),
            py(a.1),
            px(b.0),
            py(b.1)
        );
    }
    s.push_str("</g>\n<g class=\"vertices\">\n");
    for &(x, y) in &d.coords {
        let _ = writeln!(s, r#"<circle cx="{}" cy="{}" r="{}"/>"#, px(x), py(y), style.vertex_radius);
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::super::transversal_draw;
    use super::*;
    use crate::transversal::tests::{n1, n1_structure};

    #[test]
    fn n1_svg() {
        let t = n1();
        let ts = n1_structure(&t);
        let d = transversal_draw(&t, &ts);
        let a = emit_svg(&t, &ts.partition(), &d, &SvgStyle::default());
        let b = emit_svg(&t, &ts.partition(), &d, &SvgStyle::default());
        assert_eq!(a, b);
        assert_eq!(a.matches("<line").count(), 8);
        assert_eq!(a.matches("class=\"red\"").count(), 2);
    }
}
