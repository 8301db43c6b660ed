//! Stem charts of weight against node position over one period, written as
//! standalone SVG with a CSV of the plotted values alongside.

use std::fmt::Write as _;

use splinequad::ScaledRule;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 450.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 50.0;
const COLORS: [&str; 2] = ["black", "red"];

/// One plotted rule.
#[derive(Debug, Clone)]
pub struct Series {
    pub label: String,
    pub rule: ScaledRule<f64>,
}

/// Round step for about `target` ticks over `[0, max]`.
fn tick_step(max: f64, target: f64) -> f64 {
    let raw = max / target;
    let magnitude = 10f64.powf(raw.log10().floor());
    let fraction = raw / magnitude;
    let nice = if fraction <= 1.0 {
        1.0
    } else if fraction <= 2.0 {
        2.0
    } else if fraction <= 5.0 {
        5.0
    } else {
        10.0
    };
    nice * magnitude
}

pub fn svg(series: &[Series]) -> String {
    let period = series
        .iter()
        .map(|s| s.rule.period_intervals())
        .max()
        .unwrap_or(1) as f64;
    let w_max = series
        .iter()
        .flat_map(|s| {
            s.rule
                .intervals
                .iter()
                .flat_map(|i| i.weights.iter().copied())
        })
        .fold(0.0f64, f64::max);
    let step = tick_step(w_max.max(f64::MIN_POSITIVE), 5.0);
    let y_max = (w_max / step).ceil().max(1.0) * step;

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + x / period * plot_w;
    let sy = |y: f64| TOP + plot_h - y / y_max * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let title: Vec<&str> = series.iter().map(|s| s.label.as_str()).collect();
    let _ = writeln!(
        s,
        r#"<text x="{}" y="22" text-anchor="middle" font-size="14">weights of {}</text>"#,
        WIDTH / 2.0,
        title.join(" and ")
    );

    // Axes, ticks and interval separators.
    let (x0, y0) = (sx(0.0), sy(0.0));
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{}" y2="{y0}" stroke="black"/>"#,
        sx(period)
    );
    let _ = writeln!(
        s,
        r#"<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{}" stroke="black"/>"#,
        sy(y_max)
    );
    let x_ticks = (period * 4.0) as usize;
    for k in 0..=x_ticks {
        let x = k as f64 / 4.0;
        let px = sx(x);
        let _ = writeln!(
            s,
            r#"<line x1="{px}" y1="{y0}" x2="{px}" y2="{}" stroke="black"/>"#,
            y0 + 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{px}" y="{}" text-anchor="middle">{x}</text>"#,
            y0 + 20.0
        );
    }
    for k in 1..period as usize {
        let px = sx(k as f64);
        let _ = writeln!(
            s,
            r#"<line x1="{px}" y1="{y0}" x2="{px}" y2="{}" stroke="gray" stroke-dasharray="4 4"/>"#,
            sy(y_max)
        );
    }
    let y_ticks = (y_max / step).round() as usize;
    for k in 0..=y_ticks {
        let y = k as f64 * step;
        let py = sy(y);
        let _ = writeln!(
            s,
            r#"<line x1="{}" y1="{py}" x2="{x0}" y2="{py}" stroke="black"/>"#,
            x0 - 5.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            x0 - 8.0,
            py + 4.0,
            format_tick(y, step)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">node</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 10.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{}" text-anchor="middle" transform="rotate(-90 16 {})">weight</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    let legend = series.len() > 1;
    for (k, series) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let _ = writeln!(s, r#"<g stroke="{color}" fill="{color}">"#);
        for (x, w) in series.rule.entries() {
            let (px, py) = (sx(x), sy(w));
            let _ = writeln!(
                s,
                r#"<line x1="{px:.2}" y1="{y0:.2}" x2="{px:.2}" y2="{py:.2}"/><circle cx="{px:.2}" cy="{py:.2}" r="2.5"/>"#
            );
        }
        let _ = writeln!(s, "</g>");
        if legend {
            let ly = TOP + 8.0 + 16.0 * k as f64;
            let lx = WIDTH - RIGHT - 180.0;
            let _ = writeln!(
                s,
                r#"<circle cx="{lx}" cy="{ly}" r="4" fill="{color}"/><text x="{}" y="{}">{}</text>"#,
                lx + 10.0,
                ly + 4.0,
                series.label
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

fn format_tick(v: f64, step: f64) -> String {
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    format!("{v:.decimals$}")
}

/// Plotted values, one row per stem.
pub fn csv(series: &[Series]) -> String {
    let mut s = String::from("series,interval,index,node,weight\n");
    for series in series {
        for (k, interval) in series.rule.intervals.iter().enumerate() {
            for (j, (x, w)) in interval.nodes.iter().zip(&interval.weights).enumerate() {
                let _ = writeln!(s, "{},{k},{j},{x:e},{w:e}", series.label);
            }
        }
    }
    s
}
