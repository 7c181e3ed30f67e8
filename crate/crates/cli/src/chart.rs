//! Row-sum charts as monospace text and SVG.

use std::fmt::Write;

use crate::format::sig6;

const BAR_WIDTH: usize = 24;

/// Index of the largest value; the first one wins ties.
pub fn peak(values: &[f64]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &v) in values.iter().enumerate() {
        if best.map_or(true, |b| v > values[b]) {
            best = Some(i);
        }
    }
    best
}

fn max_abs(values: &[f64]) -> f64 {
    values.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Horizontal bars either side of a `|` zero axis.
pub fn text_chart(title: &str, values: &[f64], labels: &[String]) -> String {
    let scale = max_abs(values);
    let width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = format!("{title}\n");
    for (label, &v) in labels.iter().zip(values) {
        let len = if scale == 0.0 {
            0
        } else {
            (v.abs() / scale * BAR_WIDTH as f64).round() as usize
        };
        let (left, right) = if v < 0.0 { (len, 0) } else { (0, len) };
        let _ = writeln!(
            out,
            "{label:>width$} {pad}{neg}|{pos}{rest} {value}",
            pad = " ".repeat(BAR_WIDTH - left),
            neg = "#".repeat(left),
            pos = "#".repeat(right),
            rest = " ".repeat(BAR_WIDTH - right),
            value = sig6(v),
        );
    }
    if let Some(p) = peak(values) {
        let _ = writeln!(out, "peak: {} ({})", labels[p], sig6(values[p]));
    }
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Bar chart with a zero baseline, one labeled category per value and the
/// peak bar highlighted.
pub fn svg_chart(title: &str, values: &[f64], labels: &[String]) -> String {
    let step = 64.0;
    let left = 56.0;
    let top = 40.0;
    let plot_h = 240.0;
    let width = left + step * values.len() as f64 + 24.0;
    let height = top + plot_h + 56.0;

    let hi = values.iter().fold(0.0f64, |m, &v| m.max(v));
    let lo = values.iter().fold(0.0f64, |m, &v| m.min(v));
    let span = if hi - lo == 0.0 { 1.0 } else { hi - lo };
    let y_of = |v: f64| top + (hi - v) / span * plot_h;
    let base = y_of(0.0);
    let peak = peak(values);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="24" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
        width / 2.0,
        escape(title)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{left}" y1="{top}" x2="{left}" y2="{}" stroke="black"/>"#,
        top + plot_h
    );
    for (tick, v) in [("hi", hi), ("lo", lo)] {
        if v != 0.0 {
            let _ = writeln!(
                s,
                r#"<text class="tick-{tick}" x="{}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="end">{}</text>"#,
                left - 4.0,
                y_of(v) + 3.0,
                sig6(v)
            );
        }
    }
    for (i, (&v, label)) in values.iter().zip(labels).enumerate() {
        let x = left + step * i as f64 + 12.0;
        let (y, h) = if v >= 0.0 {
            (y_of(v), base - y_of(v))
        } else {
            (base, y_of(v) - base)
        };
        let fill = if Some(i) == peak { "#c0392b" } else { "#4a6fa5" };
        let _ = writeln!(
            s,
            r#"<rect class="bar" x="{x:.2}" y="{y:.2}" width="40" height="{h:.2}" fill="{fill}"/>"#
        );
        let vy = if v >= 0.0 { y - 4.0 } else { y + h + 12.0 };
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{vy:.2}" font-family="sans-serif" font-size="10" text-anchor="middle">{}</text>"#,
            x + 20.0,
            sig6(v)
        );
        let _ = writeln!(
            s,
            r#"<text class="category" x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">{}</text>"#,
            x + 20.0,
            top + plot_h + 20.0,
            escape(label)
        );
    }
    let _ = writeln!(
        s,
        r#"<line class="baseline" x1="{left}" y1="{base:.2}" x2="{:.2}" y2="{base:.2}" stroke="black"/>"#,
        width - 12.0
    );
    if let Some(p) = peak {
        let _ = writeln!(
            s,
            r#"<text class="peak" x="{left}" y="{:.2}" font-family="sans-serif" font-size="11">peak: {}</text>"#,
            top + plot_h + 44.0,
            escape(&labels[p])
        );
    }
    s.push_str("</svg>\n");
    s
}
