//! JSON, CSV and list-of-lists renderings of a rule.

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use splinequad::{Family, Real, ScaledRule};

/// Significant digits in every output format.
pub const DIGITS: usize = 25;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Maple,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalDocument {
    pub nodes: Vec<String>,
    pub weights: Vec<String>,
}

/// JSON form of a rule. Numbers are decimal strings so that no precision is
/// lost to a JSON parser.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleDocument {
    pub family: String,
    pub class: u8,
    pub degree: usize,
    pub n: usize,
    pub period_intervals: usize,
    /// `null` for families without a square-root parameter.
    pub delta: Option<String>,
    pub intervals: Vec<IntervalDocument>,
}

fn plain<T: Real>(v: T) -> String {
    v.to_digits(DIGITS).to_plain()
}

fn has_delta(family: Family) -> bool {
    matches!(
        family,
        Family::C0Even | Family::C1OddInterior | Family::C1Even
    )
}

impl RuleDocument {
    pub fn from_rule<T: Real>(rule: &ScaledRule<T>) -> Self {
        // The one-point interior rule is given directly and has no δ.
        let has_delta = has_delta(rule.family) && rule.delta != T::zero();
        Self {
            family: rule.family.slug().to_string(),
            class: rule.family.continuity().order() as u8,
            degree: rule.degree,
            n: rule.n,
            period_intervals: rule.period_intervals(),
            delta: has_delta.then(|| plain(rule.delta)),
            intervals: rule
                .intervals
                .iter()
                .map(|i| IntervalDocument {
                    nodes: i.nodes.iter().map(|&x| plain(x)).collect(),
                    weights: i.weights.iter().map(|&w| plain(w)).collect(),
                })
                .collect(),
        }
    }
}

pub fn to_json<T: Real>(rule: &ScaledRule<T>) -> String {
    let mut s = serde_json::to_string_pretty(&RuleDocument::from_rule(rule))
        .expect("rule document serializes");
    s.push('\n');
    s
}

pub fn to_csv<T: Real>(rule: &ScaledRule<T>) -> String {
    let mut s = String::from("interval,index,node,weight\n");
    for (k, interval) in rule.intervals.iter().enumerate() {
        for (j, (&x, &w)) in interval.nodes.iter().zip(&interval.weights).enumerate() {
            s.push_str(&format!("{k},{j},{},{}\n", plain(x), plain(w)));
        }
    }
    s
}

/// `Name := [ [x1, w1], [x2, w2] ];` with trailing zeros trimmed and the
/// leading zero dropped, e.g. `.5`.
pub fn to_maple<T: Real>(rule: &ScaledRule<T>) -> String {
    let pairs: Vec<String> = rule
        .entries()
        .into_iter()
        .map(|(x, w)| {
            format!(
                "[{}, {}]",
                x.to_digits(DIGITS).to_cas(),
                w.to_digits(DIGITS).to_cas()
            )
        })
        .collect();
    format!("{} := [ {} ];\n", rule.name(), pairs.join(", "))
}

pub fn render<T: Real>(rule: &ScaledRule<T>, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => to_json(rule),
        OutputFormat::Csv => to_csv(rule),
        OutputFormat::Maple => to_maple(rule),
    }
}

/// Reads the `(node, weight)` pairs back out of a list-of-lists line.
pub fn parse_maple(text: &str) -> Option<(String, Vec<(String, String)>)> {
    let (name, rest) = text.split_once(":=")?;
    let body = rest.trim().strip_suffix(';')?.trim();
    let body = body.strip_prefix('[')?.strip_suffix(']')?;
    let mut pairs = Vec::new();
    for chunk in body.split(']') {
        let chunk = chunk.trim().trim_start_matches(',').trim();
        if chunk.is_empty() {
            continue;
        }
        let (x, w) = chunk.strip_prefix('[')?.split_once(',')?;
        pairs.push((x.trim().to_string(), w.trim().to_string()));
    }
    Some((name.trim().to_string(), pairs))
}
