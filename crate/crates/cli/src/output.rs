//! CSV tables and SVG plots.

use std::fmt::Write as _;

use fddof::rational::{self, Rational};
use fddof::{Caps, DofRegion};

/// Decimal rendering with `digits` significant digits, trailing zeros
/// removed.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() {
            "0".into()
        } else {
            x.to_string()
        };
    }
    let exponent = x.abs().log10().floor() as i32;
    if !(-5..digits as i32).contains(&exponent) {
        let s = format!("{:.*e}", digits.saturating_sub(1), x);
        let (mantissa, exp) = s.split_once('e').expect("exponent form");
        return format!("{}e{}", trim_zeros(mantissa), exp);
    }
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn decimal(x: &Rational) -> String {
    format_sig(rational::to_f64(x), 12)
}

/// `d1,d2` rows, counter-clockwise from the origin.
pub fn vertices_csv(region: &DofRegion) -> String {
    let mut out = String::from("d1,d2\n");
    for p in &region.vertices {
        let _ = writeln!(out, "{},{}", decimal(&p.d1), decimal(&p.d2));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub overlap: Rational,
    pub caps: Caps,
    pub rectangular: bool,
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("overlap,d1_cap,d2_cap,dsum_cap,rectangular\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            decimal(&r.overlap),
            decimal(&r.caps.d1_max),
            decimal(&r.caps.d2_max),
            decimal(&r.caps.dsum_max),
            r.rectangular
        );
    }
    out
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 460.0;
const TOP: f64 = 50.0;
const BOTTOM: f64 = 420.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Tick spacing of 1, 2 or 5 times a power of ten giving at most ten ticks.
fn tick_step(max: f64) -> f64 {
    let raw = max / 10.0;
    let base = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0]
        .into_iter()
        .map(|m| m * base)
        .find(|&s| s >= raw)
        .unwrap_or(10.0 * base)
}

/// Overlays `regions` on shared `d1`/`d2` axes with a legend.
pub fn regions_svg(title: &str, regions: &[(String, &DofRegion)]) -> String {
    let extent = |f: fn(&DofRegion) -> f64| {
        let m = regions.iter().map(|(_, r)| f(r)).fold(0.0, f64::max);
        if m > 0.0 {
            m * 1.1
        } else {
            1.0
        }
    };
    let x_max = extent(|r| rational::to_f64(&r.d1_cap));
    let y_max = extent(|r| rational::to_f64(&r.d2_cap));
    let px = |x: f64| LEFT + x / x_max * (RIGHT - LEFT);
    let py = |y: f64| BOTTOM - y / y_max * (BOTTOM - TOP);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="25" text-anchor="middle" font-size="14">{}</text>"#,
        (LEFT + RIGHT) / 2.0,
        escape(title)
    );

    // axes, ticks and labels
    let _ = writeln!(
        s,
        r#"<path d="M{LEFT:.2},{TOP:.2} L{LEFT:.2},{BOTTOM:.2} L{RIGHT:.2},{BOTTOM:.2}" fill="none" stroke="black"/>"#
    );
    for (axis_max, horizontal) in [(x_max, true), (y_max, false)] {
        let step = tick_step(axis_max);
        let mut k = 0u32;
        loop {
            let v = f64::from(k) * step;
            if v > axis_max {
                break;
            }
            let label = format_sig(v, 6);
            if horizontal {
                let x = px(v);
                let _ = writeln!(
                    s,
                    r#"<line x1="{x:.2}" y1="{BOTTOM:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{label}</text>"#,
                    BOTTOM + 5.0,
                    BOTTOM + 18.0
                );
            } else {
                let y = py(v);
                let _ = writeln!(
                    s,
                    r#"<line x1="{:.2}" y1="{y:.2}" x2="{LEFT:.2}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"#,
                    LEFT - 5.0,
                    LEFT - 8.0,
                    y + 4.0
                );
            }
            k += 1;
        }
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">d1</text>"#,
        (LEFT + RIGHT) / 2.0,
        BOTTOM + 40.0
    );
    let _ = writeln!(
        s,
        r#"<text x="20" y="{:.2}" text-anchor="middle" transform="rotate(-90 20 {:.2})">d2</text>"#,
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0
    );

    for (k, (label, region)) in regions.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let points: Vec<String> = region
            .vertices
            .iter()
            .map(|p| {
                let (x, y) = p.to_f64();
                format!("{:.2},{:.2}", px(x), py(y))
            })
            .collect();
        let _ = writeln!(
            s,
            r#"<polygon points="{}" fill="{color}" fill-opacity="0.12" stroke="{color}" stroke-width="2"><title>{}</title></polygon>"#,
            points.join(" "),
            escape(label)
        );
        let y = TOP + 10.0 + 20.0 * k as f64;
        let _ = writeln!(
            s,
            r#"<rect x="475" y="{:.2}" width="14" height="14" fill="{color}" fill-opacity="0.4" stroke="{color}"/><text x="495" y="{:.2}">{}</text>"#,
            y - 11.0,
            y,
            escape(label)
        );
    }
    s.push_str("</svg>\n");
    s
}
