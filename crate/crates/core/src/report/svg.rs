use std::fmt::Write as _;

use crate::arcs::{Extrema, ExtremumKind, NullBand};
use crate::error::{Error, Result};
use crate::smoothing::Arc;

#[derive(Debug, Clone, PartialEq)]
pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub positive_color: String,
    pub negative_color: String,
    pub band_color: String,
    pub band_opacity: f64,
    pub title: Option<String>,
    /// Legend entries replacing the arcs' own labels, by index.
    pub legend: Vec<String>,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 800.0,
            height: 400.0,
            positive_color: "#c0392b".to_owned(),
            negative_color: "#2166ac".to_owned(),
            band_color: "#888888".to_owned(),
            band_opacity: 0.3,
            title: None,
            legend: Vec::new(),
        }
    }
}

const MARGIN_LEFT: f64 = 60.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 45.0;
const DASHES: [&str; 4] = ["", "6 3", "2 2", "8 3 2 3"];

struct Frame {
    left: f64,
    top: f64,
    w: f64,
    h: f64,
    ymin: f64,
    ymax: f64,
}

impl Frame {
    fn x(&self, position: f64) -> f64 {
        self.left + position * self.w
    }

    fn y(&self, value: f64) -> f64 {
        self.top + (self.ymax - value) / (self.ymax - self.ymin) * self.h
    }
}

/// Two decimals, never `-0.00`.
fn f2(v: f64) -> String {
    let s = format!("{v:.2}");
    if s == "-0.00" {
        "0.00".to_owned()
    } else {
        s
    }
}

pub(crate) fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Splits an arc into runs above (`true`) and below zero, cutting each
/// segment that crosses zero at its linearly interpolated crossing.
/// Zero counts as positive.
fn signed_runs(positions: &[f64], values: &[f64]) -> Vec<(bool, Vec<(f64, f64)>)> {
    let mut runs: Vec<(bool, Vec<(f64, f64)>)> = Vec::new();
    for (i, (&x, &v)) in positions.iter().zip(values).enumerate() {
        let positive = v >= 0.0;
        if i > 0 {
            let (px, pv) = (positions[i - 1], values[i - 1]);
            let was_positive = pv >= 0.0;
            if was_positive != positive {
                let t = pv / (pv - v);
                let cross = (px + t * (x - px), 0.0);
                runs.last_mut().expect("run started").1.push(cross);
                runs.push((positive, vec![cross]));
            }
        }
        match runs.last_mut() {
            Some((sign, pts)) if *sign == positive => pts.push((x, v)),
            _ => runs.push((positive, vec![(x, v)])),
        }
    }
    runs
}

fn path_data(frame: &Frame, runs: &[&Vec<(f64, f64)>]) -> String {
    let mut d = String::new();
    for pts in runs {
        for (k, &(x, v)) in pts.iter().enumerate() {
            if !d.is_empty() {
                d.push(' ');
            }
            d.push(if k == 0 { 'M' } else { 'L' });
            d.push_str(&f2(frame.x(x)));
            d.push(',');
            d.push_str(&f2(frame.y(v)));
        }
    }
    d
}

/// Renders arcs against narrative percent as a standalone SVG document.
///
/// `extrema[i]` annotates `arcs[i]`; pass fewer (or none) to skip labels.
/// Output depends only on the inputs, so equal inputs give equal bytes.
pub fn render_arc_svg(arcs: &[Arc], extrema: &[Extrema], band: Option<&NullBand>, options: &SvgOptions) -> Result<String> {
    if arcs.is_empty() || arcs.iter().any(Arc::is_empty) {
        return Err(Error::param("nothing to plot: no arc values"));
    }
    let mut ymin: f64 = 0.0;
    let mut ymax: f64 = 0.0;
    let all_values = arcs
        .iter()
        .flat_map(|a| a.values.iter())
        .chain(band.into_iter().flat_map(|b| b.lower.iter().chain(&b.upper)));
    for &v in all_values {
        ymin = ymin.min(v);
        ymax = ymax.max(v);
    }
    if ymax - ymin <= 0.0 {
        (ymin, ymax) = (-1.0, 1.0);
    }
    let pad = 0.05 * (ymax - ymin);
    let frame = Frame {
        left: MARGIN_LEFT,
        top: MARGIN_TOP,
        w: options.width - MARGIN_LEFT - MARGIN_RIGHT,
        h: options.height - MARGIN_TOP - MARGIN_BOTTOM,
        ymin: ymin - pad,
        ymax: ymax + pad,
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="11">"#,
        w = f2(options.width),
        h = f2(options.height)
    );
    let _ = writeln!(s, r#"<rect class="background" x="0" y="0" width="{}" height="{}" fill="white"/>"#, f2(options.width), f2(options.height));
    if let Some(title) = &options.title {
        let _ = writeln!(s, r#"<text class="title" x="{}" y="18" text-anchor="middle" font-size="14">{}</text>"#, f2(options.width / 2.0), escape(title));
    }

    if let Some(b) = band {
        let mut pts: Vec<String> = b.grid.iter().zip(&b.upper).map(|(&x, &v)| format!("{},{}", f2(frame.x(x)), f2(frame.y(v)))).collect();
        pts.extend(b.grid.iter().zip(&b.lower).rev().map(|(&x, &v)| format!("{},{}", f2(frame.x(x)), f2(frame.y(v)))));
        let _ = writeln!(
            s,
            r#"<polygon class="null-band" points="{}" fill="{}" fill-opacity="{}" stroke="none"/>"#,
            pts.join(" "),
            escape(&options.band_color),
            options.band_opacity
        );
    }

    // axes
    let (x0, x1) = (frame.x(0.0), frame.x(1.0));
    let (yt, yb) = (frame.top, frame.top + frame.h);
    let _ = writeln!(s, r#"<g class="axes" stroke="black" stroke-width="1">"#);
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, f2(x0), f2(yb), f2(x1), f2(yb));
    let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, f2(x0), f2(yt), f2(x0), f2(yb));
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g class="ticks" text-anchor="middle">"#);
    for pct in [0, 25, 50, 75, 100] {
        let x = frame.x(pct as f64 / 100.0);
        let _ = writeln!(s, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="black"/>"#, f2(yb), f2(yb + 4.0), x = f2(x));
        let _ = writeln!(s, r#"<text x="{}" y="{}">{pct}%</text>"#, f2(x), f2(yb + 16.0));
    }
    for v in [ymin, 0.0, ymax] {
        let _ = writeln!(s, r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#, f2(x0 - 6.0), f2(frame.y(v) + 4.0), f2(v));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(
        s,
        r#"<text class="x-label" x="{}" y="{}" text-anchor="middle">narrative position (%)</text>"#,
        f2(frame.x(0.5)),
        f2(options.height - 6.0)
    );
    let _ = writeln!(
        s,
        r##"<line class="zero-line" x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#444444" stroke-width="0.75" stroke-dasharray="3 3"/>"##,
        f2(x0),
        f2(x1),
        y = f2(frame.y(0.0))
    );

    let label_of = |i: usize| escape(&options.legend.get(i).cloned().unwrap_or_else(|| arcs[i].label()));
    for (i, arc) in arcs.iter().enumerate() {
        let runs = signed_runs(&arc.positions, &arc.values);
        let label = label_of(i);
        let dash = DASHES[i % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        for (positive, class, color) in [(true, "arc-positive", &options.positive_color), (false, "arc-negative", &options.negative_color)] {
            let mine: Vec<&Vec<(f64, f64)>> = runs.iter().filter(|r| r.0 == positive).map(|r| &r.1).collect();
            if mine.is_empty() {
                continue;
            }
            let _ = writeln!(
                s,
                r#"<g class="{class}" data-arc="{label}" stroke="{}" stroke-width="1.5" fill="none"{dash_attr}><path d="{}"/></g>"#,
                escape(color),
                path_data(&frame, &mine)
            );
        }
    }

    for (i, ex) in extrema.iter().enumerate().take(arcs.len()) {
        if ex.points.is_empty() {
            continue;
        }
        let _ = writeln!(s, r#"<g class="extrema" data-arc="{}">"#, label_of(i));
        for p in &ex.points {
            let (cx, cy) = (frame.x(p.position), frame.y(p.value));
            let (kind, dy) = match p.kind {
                ExtremumKind::Max => ("max", -7.0),
                ExtremumKind::Min => ("min", 14.0),
            };
            let _ = writeln!(s, r#"<circle class="extremum-{kind}" cx="{}" cy="{}" r="2.5" fill="black"/>"#, f2(cx), f2(cy));
            let _ = writeln!(s, r#"<text class="p-label" x="{}" y="{}" text-anchor="middle">{}</text>"#, f2(cx), f2(cy + dy), escape(&p.label));
        }
        let _ = writeln!(s, "</g>");
    }

    let _ = writeln!(s, r#"<g class="legend">"#);
    for i in 0..arcs.len() {
        let y = frame.top + 12.0 + 14.0 * i as f64;
        let x = x1 - 150.0;
        let dash = DASHES[i % DASHES.len()];
        let dash_attr = if dash.is_empty() {
            String::new()
        } else {
            format!(r#" stroke-dasharray="{dash}""#)
        };
        let _ = writeln!(s, r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="black"{dash_attr}/>"#, f2(x), f2(x + 24.0), y = f2(y - 4.0));
        let _ = writeln!(s, r#"<text x="{}" y="{}">{}</text>"#, f2(x + 30.0), f2(y), label_of(i));
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smoothing::SmootherParams;

    fn arc(values: Vec<f64>) -> Arc {
        let n = values.len();
        let positions = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
        Arc::new(SmootherParams::Dct { low_pass: 3, scale_range: false }, n, positions, values)
    }

    #[test]
    fn one_crossing_two_groups() {
        let svg = render_arc_svg(&[arc(vec![1.0, 0.5, -0.5, -1.0])], &[], None, &SvgOptions::default()).unwrap();
        assert_eq!(svg.matches(r#"<g class="arc-positive""#).count(), 1);
        assert_eq!(svg.matches(r#"<g class="arc-negative""#).count(), 1);
        assert_eq!(svg.matches("class=\"zero-line\"").count(), 1);
    }

    #[test]
    fn crossing_is_interpolated() {
        let runs = signed_runs(&[0.0, 1.0], &[1.0, -3.0]);
        assert_eq!(runs.len(), 2);
        assert_eq!(runs[0].1.last(), Some(&(0.25, 0.0)));
        assert_eq!(runs[1].1[0], (0.25, 0.0));
        let runs = signed_runs(&[0.0, 0.5, 1.0], &[1.0, -1.0, 1.0]);
        assert_eq!(runs.iter().map(|r| r.0).collect::<Vec<_>>(), [true, false, true]);
    }

    #[test]
    fn labels_escaped_and_empty_rejected() {
        let opts = SvgOptions {
            title: Some("A & <B>".into()),
            ..SvgOptions::default()
        };
        let svg = render_arc_svg(&[arc(vec![0.1, 0.3, 0.2])], &[], None, &opts).unwrap();
        assert!(svg.contains("A &amp; &lt;B&gt;"));
        assert!(render_arc_svg(&[], &[], None, &opts).is_err());
    }

    #[test]
    fn no_negative_zero() {
        assert_eq!(f2(-0.001), "0.00");
        assert_eq!(f2(-0.01), "-0.01");
    }
}
