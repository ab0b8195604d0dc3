//! SVG drawings of ordered hypergraphs: vertex `v` is column `v`,
//! coordinate `j` is row `j` (top to bottom), and each edge is a polyline
//! through its points. Comparable edges give polylines that never cross.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub column_spacing: f64,
    pub row_spacing: f64,
    pub point_radius: f64,
    /// Fill colors for colors `1, 2, ...`.
    pub palette: Vec<String>,
    /// Edge indices drawn with a thick stroke.
    pub highlight: BTreeSet<usize>,
    pub labels: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        RenderConfig {
            column_spacing: 40.0,
            row_spacing: 40.0,
            point_radius: 6.0,
            palette: [
                "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628",
            ]
            .map(String::from)
            .to_vec(),
            highlight: BTreeSet::new(),
            labels: false,
        }
    }
}

const EDGE_STROKE: f64 = 1.5;
const HIGHLIGHT_STROKE: f64 = 4.0;

impl RenderConfig {
    fn validate(&self, colors: Option<&Coloring>) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !positive(self.column_spacing) || !positive(self.row_spacing) {
            return Err(Error::Infeasible("spacings must be positive".into()));
        }
        if !positive(self.point_radius) {
            return Err(Error::Infeasible("point radius must be positive".into()));
        }
        if let Some(c) = colors {
            if self.palette.len() < c.k() as usize {
                return Err(Error::Infeasible(format!(
                    "palette has {} entries but the coloring uses k={}",
                    self.palette.len(),
                    c.k()
                )));
            }
        }
        Ok(())
    }

    /// Center of vertex `v` on row `row`; row 0 holds the vertex markers.
    pub fn point(&self, v: u32, row: usize) -> (f64, f64) {
        (
            self.column_spacing * v as f64,
            self.row_spacing * (row as f64 + 1.0),
        )
    }
}

pub fn render_svg(
    h: &impl Hypergraph,
    coloring: Option<&Coloring>,
    cfg: &RenderConfig,
) -> Result<String> {
    cfg.validate(coloring)?;
    if let Some(c) = coloring {
        if c.n() != h.n() {
            return Err(Error::VertexCountMismatch {
                expected: h.n(),
                found: c.n(),
            });
        }
    }
    let width = cfg.column_spacing * (h.n() as f64 + 1.0);
    let height = cfg.row_spacing * (h.m() as f64 + 2.0);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    out.push_str("<g class=\"edges\" fill=\"none\" stroke=\"#000000\">\n");
    for (i, e) in h.edges().iter().enumerate() {
        let points: Vec<String> = e
            .coords()
            .iter()
            .enumerate()
            .map(|(j, &v)| {
                let (x, y) = cfg.point(v, j + 1);
                format!("{x},{y}")
            })
            .collect();
        let stroke = if cfg.highlight.contains(&i) {
            HIGHLIGHT_STROKE
        } else {
            EDGE_STROKE
        };
        let _ = writeln!(
            out,
            r#"<polyline data-edge="{i}" points="{}" stroke-width="{stroke}"/>"#,
            points.join(" ")
        );
    }
    out.push_str("</g>\n<g class=\"vertices\" stroke=\"#000000\">\n");
    for v in 1..=h.n() as u32 {
        let (x, y) = cfg.point(v, 0);
        let fill = coloring.map_or("#ffffff", |c| cfg.palette[c.color(v) as usize - 1].as_str());
        let _ = writeln!(
            out,
            r#"<circle data-vertex="{v}" cx="{x}" cy="{y}" r="{}" fill="{fill}"/>"#,
            cfg.point_radius
        );
    }
    out.push_str("</g>\n");
    if cfg.labels {
        out.push_str("<g class=\"labels\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">\n");
        for v in 1..=h.n() as u32 {
            let (x, y) = cfg.point(v, 0);
            let _ = writeln!(
                out,
                r#"<text x="{x}" y="{}">{v}</text>"#,
                y - cfg.point_radius - 2.0
            );
        }
        for row in 1..=h.m() {
            let (_, y) = cfg.point(0, row);
            let _ = writeln!(
                out,
                r#"<text x="{}" y="{y}">{row}</text>"#,
                cfg.column_spacing / 2.0
            );
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}
