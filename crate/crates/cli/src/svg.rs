//! Minimal SVG 1.1 stem plots: one panel per wavefunction, a vertical grid
//! line at `x = 0`, optional continuous curve drawn behind the stems.

use std::fmt::Write as _;

const PANEL_W: f64 = 260.0;
const PANEL_H: f64 = 170.0;
const PAD: f64 = 14.0;
const TITLE_H: f64 = 18.0;

#[derive(Clone, Debug, Default)]
pub struct Panel {
    pub title: String,
    /// `(x, y)` per grid point
    pub stems: Vec<(f64, f64)>,
    /// Non-finite samples are dropped; the rest is clipped to the frame.
    pub curve: Option<Vec<(f64, f64)>>,
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

struct Frame {
    x0: f64,
    x1: f64,
    ymax: f64,
}

impl Frame {
    fn of(panel: &Panel) -> Self {
        let xs = panel.stems.iter().map(|p| p.0);
        let x0 = xs.clone().fold(f64::INFINITY, f64::min);
        let x1 = xs.fold(f64::NEG_INFINITY, f64::max);
        let (x0, x1) = if x0 < x1 { (x0, x1) } else { (x0 - 1.0, x0 + 1.0) };
        let ymax = panel.stems.iter().map(|p| p.1.abs()).filter(|y| y.is_finite()).fold(0.0, f64::max);
        let ymax = if ymax > 0.0 { ymax * 1.1 } else { 1.0 };
        Self { x0, x1, ymax }
    }

    fn px(&self, x: f64) -> f64 {
        PAD + (x - self.x0) / (self.x1 - self.x0) * (PANEL_W - 2.0 * PAD)
    }

    fn py(&self, y: f64) -> f64 {
        let top = TITLE_H + PAD;
        let h = PANEL_H - top - PAD;
        top + h / 2.0 - y.clamp(-self.ymax, self.ymax) / self.ymax * h / 2.0
    }
}

fn render_panel(out: &mut String, panel: &Panel, ox: f64, oy: f64) {
    let f = Frame::of(panel);
    let w = |out: &mut String, s: String| out.push_str(&s);
    w(out, format!("<g class=\"panel\" transform=\"translate({ox:.1},{oy:.1})\">\n"));
    w(
        out,
        format!("<rect x=\"0.5\" y=\"0.5\" width=\"{:.1}\" height=\"{:.1}\" fill=\"white\" stroke=\"#999\"/>\n", PANEL_W - 1.0, PANEL_H - 1.0),
    );
    w(
        out,
        format!(
            "<text x=\"{:.1}\" y=\"13\" font-size=\"11\" font-family=\"sans-serif\" text-anchor=\"middle\">{}</text>\n",
            PANEL_W / 2.0,
            escape(&panel.title)
        ),
    );
    let y0 = f.py(0.0);
    w(
        out,
        format!("<line class=\"axis\" x1=\"{PAD:.1}\" y1=\"{y0:.2}\" x2=\"{:.1}\" y2=\"{y0:.2}\" stroke=\"#bbb\"/>\n", PANEL_W - PAD),
    );
    if f.x0 <= 0.0 && 0.0 <= f.x1 {
        let xz = f.px(0.0);
        w(
            out,
            format!(
                "<line class=\"grid\" x1=\"{xz:.2}\" y1=\"{:.1}\" x2=\"{xz:.2}\" y2=\"{:.1}\" stroke=\"#ddd\" stroke-dasharray=\"3,3\"/>\n",
                TITLE_H + PAD / 2.0,
                PANEL_H - PAD / 2.0
            ),
        );
    }
    if let Some(curve) = &panel.curve {
        let mut points = String::new();
        for &(x, y) in curve.iter().filter(|p| p.1.is_finite() && p.0 >= f.x0 && p.0 <= f.x1) {
            write!(points, "{:.2},{:.2} ", f.px(x), f.py(y)).expect("write to string");
        }
        w(
            out,
            format!("<polyline class=\"curve\" fill=\"none\" stroke=\"#e07b39\" stroke-width=\"1.2\" points=\"{}\"/>\n", points.trim_end()),
        );
    }
    for &(x, y) in &panel.stems {
        let (sx, sy) = (f.px(x), f.py(y));
        w(
            out,
            format!(
                "<g class=\"stem\"><line x1=\"{sx:.2}\" y1=\"{y0:.2}\" x2=\"{sx:.2}\" y2=\"{sy:.2}\" stroke=\"#2a5db0\"/><circle cx=\"{sx:.2}\" cy=\"{sy:.2}\" r=\"1.8\" fill=\"#2a5db0\"/></g>\n"
            ),
        );
    }
    out.push_str("</g>\n");
}

/// Panels laid out row by row, `cols` per row.
pub fn render(panels: &[Panel], cols: usize) -> String {
    let cols = cols.max(1);
    let rows = panels.len().div_ceil(cols);
    let (width, height) = (PANEL_W * cols as f64, PANEL_H * rows as f64);
    let mut out = format!(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"{height:.0}\" viewBox=\"0 0 {width:.0} {height:.0}\">\n"
    );
    for (i, panel) in panels.iter().enumerate() {
        let (r, c) = (i / cols, i % cols);
        render_panel(&mut out, panel, c as f64 * PANEL_W, r as f64 * PANEL_H);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stems_and_escaping() {
        let panel = Panel {
            title: "n = 0 & <c>".into(),
            stems: vec![(-1.0, 0.5), (0.0, 1.0), (1.0, 0.5)],
            curve: Some(vec![(-1.0, 0.4), (0.0, f64::INFINITY), (1.0, 0.4)]),
        };
        let svg = render(&[panel], 1);
        assert_eq!(svg.matches("class=\"stem\"").count(), 3);
        assert!(svg.contains("n = 0 &amp; &lt;c&gt;"));
        assert!(!svg.contains("inf") && !svg.contains("NaN"));
    }
}
