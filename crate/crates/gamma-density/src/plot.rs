//! Static plots of ratio traces: an ASCII panel for terminals and a
//! standalone SVG polyline. Both are pure text renderings of the trace
//! data — nothing interactive.

use crate::density::RatioTrace;

/// Renders the ratio sequence as a fixed-size ASCII panel. The x axis is
/// the scale index k (deeper scales to the right), the y axis the ratio
/// clamped to [0, ymax].
pub fn ascii_plot(trace: &RatioTrace, width: usize, height: usize) -> String {
    let ratios = trace.ratios();
    if ratios.is_empty() {
        return String::from("(empty trace)\n");
    }
    let ymax = ratios.iter().cloned().fold(0.0f64, f64::max).max(1e-12);
    let width = width.max(8);
    let height = height.max(4);
    let mut rows = vec![vec![b' '; width]; height];
    let n = ratios.len();
    for (i, r) in ratios.iter().enumerate() {
        let col = if n == 1 { 0 } else { i * (width - 1) / (n - 1) };
        let frac = (r / ymax).clamp(0.0, 1.0);
        let row = ((1.0 - frac) * (height - 1) as f64).round() as usize;
        rows[row.min(height - 1)][col] = b'*';
    }
    let mut out = String::new();
    for (j, row) in rows.iter().enumerate() {
        let label = if j == 0 {
            format!("{ymax:8.3} |")
        } else if j == height - 1 {
            format!("{:8.3} |", 0.0)
        } else {
            "         |".to_string()
        };
        out.push_str(&label);
        out.push_str(std::str::from_utf8(row).expect("ascii"));
        out.push('\n');
    }
    out.push_str("         +");
    out.push_str(&"-".repeat(width));
    out.push('\n');
    out.push_str(&format!(
        "          k = {} .. {}   (ratio vs scale index)\n",
        trace.records.first().map(|r| r.k).unwrap_or(0),
        trace.records.last().map(|r| r.k).unwrap_or(0),
    ));
    out
}

/// Renders the ratio sequence as a standalone SVG document with a single
/// polyline, axes, and a y-range annotation.
pub fn svg_plot(trace: &RatioTrace, title: &str) -> String {
    let ratios = trace.ratios();
    let (w, h, margin) = (640.0f64, 360.0f64, 40.0f64);
    let ymax = ratios.iter().cloned().fold(0.0f64, f64::max).max(1e-12);
    let n = ratios.len().max(2);
    let pts: Vec<String> = ratios
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let x = margin + i as f64 * (w - 2.0 * margin) / (n - 1) as f64;
            let y = h - margin - (r / ymax).clamp(0.0, 1.0) * (h - 2.0 * margin);
            format!("{x:.1},{y:.1}")
        })
        .collect();
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" ",
            "viewBox=\"0 0 {w} {h}\">\n",
            "  <rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "  <text x=\"{tx}\" y=\"20\" text-anchor=\"middle\" font-family=\"monospace\" ",
            "font-size=\"14\">{title}</text>\n",
            "  <line x1=\"{m}\" y1=\"{ybase}\" x2=\"{xend}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "  <line x1=\"{m}\" y1=\"{m}\" x2=\"{m}\" y2=\"{ybase}\" stroke=\"black\"/>\n",
            "  <text x=\"6\" y=\"{mt}\" font-family=\"monospace\" font-size=\"11\">{ymax:.3}</text>\n",
            "  <text x=\"6\" y=\"{ybase}\" font-family=\"monospace\" font-size=\"11\">0</text>\n",
            "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" points=\"{pts}\"/>\n",
            "</svg>\n",
        ),
        w = w,
        h = h,
        m = margin,
        mt = margin + 4.0,
        tx = w / 2.0,
        xend = w - margin,
        ybase = h - margin,
        ymax = ymax,
        title = title,
        pts = pts.join(" "),
    )
}
