//! Figure-style rendering of one sweep series: exact K solid, bounds
//! dotted, h on the abscissa. Output is a self-contained SVG plus a
//! sidecar plain-text table of the plotted points.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{CliError, Result};
use crate::record::{fmt_sig, ExperimentRecord};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN_LEFT: f64 = 70.0;
const MARGIN_RIGHT: f64 = 20.0;
const MARGIN_TOP: f64 = 30.0;
const MARGIN_BOTTOM: f64 = 50.0;

struct Series<'a> {
    label: &'a str,
    points: Vec<(f64, f64)>,
    dashed: bool,
    color: &'a str,
}

/// Renders the records (one mode, one base graph) as an SVG line chart and
/// writes a sidecar `<path>.txt` with the plotted values.
pub fn emit_plot(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(CliError::MixedSeries);
    }
    let mode = records[0].mode;
    let base = (records[0].n, records[0].rep);
    if records.iter().any(|r| r.mode != mode || (r.n, r.rep) != base) {
        return Err(CliError::MixedSeries);
    }
    let mut sorted: Vec<&ExperimentRecord> = records.iter().collect();
    sorted.sort_by_key(|r| r.h);

    let exact: Vec<(f64, f64)> = sorted
        .iter()
        .map(|r| (r.h as f64, r.k_perturbed))
        .collect();
    let bound: Vec<(f64, f64)> = sorted
        .iter()
        .filter_map(|r| r.bound_majorization.map(|b| (r.h as f64, b)))
        .collect();
    let mut series = vec![Series {
        label: "exact K",
        points: exact,
        dashed: false,
        color: "#1f5fa8",
    }];
    if !bound.is_empty() {
        series.push(Series {
            label: "majorization bound",
            points: bound,
            dashed: true,
            color: "#c23b22",
        });
    }

    let svg = render_svg(&series, mode.as_str());
    std::fs::write(path, svg)?;

    let mut sidecar = String::from("h\tK_perturbed\tbound_majorization\tK_G\n");
    for r in &sorted {
        writeln!(
            sidecar,
            "{}\t{}\t{}\t{}",
            r.h,
            fmt_sig(r.k_perturbed),
            r.bound_majorization.map(fmt_sig).unwrap_or_default(),
            fmt_sig(r.k_g)
        )
        .expect("string write");
    }
    let mut txt_path = path.as_os_str().to_owned();
    txt_path.push(".txt");
    std::fs::write(txt_path, sidecar)?;
    Ok(())
}

fn render_svg(series: &[Series], title: &str) -> String {
    let xs = series.iter().flat_map(|s| s.points.iter().map(|p| p.0));
    let ys = series.iter().flat_map(|s| s.points.iter().map(|p| p.1));
    let (x_min, x_max) = bounds_of(xs);
    let (y_min, y_max) = bounds_of(ys);
    let x_span = (x_max - x_min).max(1e-9);
    let y_span = (y_max - y_min).max(1e-9);

    let to_x = |x: f64| MARGIN_LEFT + (x - x_min) / x_span * (WIDTH - MARGIN_LEFT - MARGIN_RIGHT);
    let to_y =
        |y: f64| HEIGHT - MARGIN_BOTTOM - (y - y_min) / y_span * (HEIGHT - MARGIN_TOP - MARGIN_BOTTOM);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(svg, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="20" font-family="sans-serif" font-size="14">{title}</text>"#,
        MARGIN_LEFT
    );
    // axes
    let _ = writeln!(
        svg,
        r#"<line x1="{MARGIN_LEFT}" y1="{}" x2="{}" y2="{}" stroke="black"/>"#,
        HEIGHT - MARGIN_BOTTOM,
        WIDTH - MARGIN_RIGHT,
        HEIGHT - MARGIN_BOTTOM
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{}" stroke="black"/>"#,
        HEIGHT - MARGIN_BOTTOM
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12">h</text>"#,
        (WIDTH - MARGIN_RIGHT + MARGIN_LEFT) / 2.0,
        HEIGHT - 15.0
    );
    // axis extents
    for (v, x, y, anchor) in [
        (x_min, to_x(x_min), HEIGHT - MARGIN_BOTTOM + 18.0, "middle"),
        (x_max, to_x(x_max), HEIGHT - MARGIN_BOTTOM + 18.0, "middle"),
        (y_min, MARGIN_LEFT - 6.0, to_y(y_min) + 4.0, "end"),
        (y_max, MARGIN_LEFT - 6.0, to_y(y_max) + 4.0, "end"),
    ] {
        let _ = writeln!(
            svg,
            r#"<text x="{x}" y="{y}" text-anchor="{anchor}" font-family="sans-serif" font-size="11">{}</text>"#,
            fmt_sig(v)
        );
    }

    for s in series {
        let pts: Vec<String> = s
            .points
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", to_x(x), to_y(y)))
            .collect();
        let dash = if s.dashed { r#" stroke-dasharray="5,4""# } else { "" };
        let _ = writeln!(
            svg,
            r#"<polyline fill="none" stroke="{}" stroke-width="1.5"{dash} points="{}"/>"#,
            s.color,
            pts.join(" ")
        );
    }

    // legend
    for (i, s) in series.iter().enumerate() {
        let y = MARGIN_TOP + 16.0 * i as f64 + 10.0;
        let dash = if s.dashed { r#" stroke-dasharray="5,4""# } else { "" };
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="{}" stroke-width="1.5"{dash}/>"#,
            WIDTH - 220.0,
            WIDTH - 190.0,
            s.color
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11">{}</text>"#,
            WIDTH - 184.0,
            y + 4.0,
            s.label
        );
    }
    svg.push_str("</svg>\n");
    svg
}

fn bounds_of(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for v in values {
        min = min.min(v);
        max = max.max(v);
    }
    (min, max)
}
