//! SVG rendering of a [`Drawing`].
//!
//! Control points are written verbatim in drawing coordinates (shortest
//! round-trip decimals); the y-axis flip happens in a group transform.

use std::fmt::Write;

use bezier_rac::Drawing;

#[derive(Clone, Copy, Debug)]
pub struct SvgStyle {
    pub mark_crossings: bool,
    /// Stroke width and vertex radius as fractions of the bounding-box
    /// diagonal.
    pub stroke: f64,
    pub vertex_radius: f64,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            mark_crossings: true,
            stroke: 0.002,
            vertex_radius: 0.006,
        }
    }
}

/// Renders `d` as a standalone SVG document.
pub fn render(d: &Drawing, style: &SvgStyle) -> String {
    let mut out = String::new();
    let Some(bb) = d.bounding_box() else {
        out.push_str("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\"></svg>\n");
        return out;
    };
    let (w, h) = (bb.max.x - bb.min.x, bb.max.y - bb.min.y);
    let scale = bb.diagonal().max(1e-9);
    let (mx, my) = (0.05 * w.max(scale * 0.1), 0.05 * h.max(scale * 0.1));
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{} {} {} {}\">",
        bb.min.x - mx,
        -(bb.max.y + my),
        w + 2.0 * mx,
        h + 2.0 * my
    );
    let _ = writeln!(out, "<g transform=\"scale(1 -1)\">");
    let _ = writeln!(
        out,
        "<g fill=\"none\" stroke=\"black\" stroke-width=\"{}\">",
        style.stroke * scale
    );
    for e in &d.edges {
        let [a, b, c, p] = e.curve.points();
        let _ = writeln!(
            out,
            "<path d=\"M {} {} C {} {} {} {} {} {}\"/>",
            a.x, a.y, b.x, b.y, c.x, c.y, p.x, p.y
        );
    }
    out.push_str("</g>\n");
    let r = style.vertex_radius * scale;
    let _ = writeln!(out, "<g fill=\"black\">");
    for v in &d.vertices {
        let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", v.x, v.y, r);
    }
    out.push_str("</g>\n");
    if style.mark_crossings && !d.crossings.is_empty() {
        let _ = writeln!(
            out,
            "<g fill=\"none\" stroke=\"red\" stroke-width=\"{}\">",
            style.stroke * scale
        );
        for c in &d.crossings {
            let _ = writeln!(out, "<circle cx=\"{}\" cy=\"{}\" r=\"{}\"/>", c.point.x, c.point.y, 1.5 * r);
        }
        out.push_str("</g>\n");
    }
    out.push_str("</g>\n</svg>\n");
    out
}
