//! Reference tables of published rules, stored as 25-digit decimal strings.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::assembly::ScaledRule;
use crate::error::Error;
use crate::families::{Continuity, Family, Variant};
use crate::real::Real;

const BUNDLED: &str = include_str!("../../data/golden.json");

/// One reference table, e.g. `C1xD5x2`. Entries are ordered interval by
/// interval, nodes ascending, in unit-interval coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRule {
    pub id: String,
    pub class: u8,
    pub degree: usize,
    /// `default`, `endpoint` or `interior`.
    pub variant: String,
    pub entries: Vec<[String; 2]>,
}

impl GoldenRule {
    pub fn family_and_index(&self) -> Result<(Family, usize), Error> {
        let continuity = match self.class {
            0 => Continuity::C0,
            1 => Continuity::C1,
            c => return Err(Error::Golden(format!("{}: unknown class {c}", self.id))),
        };
        let variant = match self.variant.as_str() {
            "default" => None,
            "endpoint" => Some(Variant::Endpoint),
            "interior" => Some(Variant::Interior),
            v => return Err(Error::Golden(format!("{}: unknown variant `{v}`", self.id))),
        };
        Family::from_degree(continuity, self.degree, variant)
    }

    /// Parses all entries into `(node, weight)` pairs.
    pub fn parsed<T: Real>(&self) -> Result<Vec<(T, T)>, Error> {
        let parse = |s: &str| {
            T::parse_decimal(s)
                .ok_or_else(|| Error::Golden(format!("{}: bad number `{s}`", self.id)))
        };
        self.entries
            .iter()
            .map(|[x, w]| Ok((parse(x)?, parse(w)?)))
            .collect()
    }

    /// Checks the entry count and the per-interval split against the
    /// family's node-count formula.
    pub fn validate(&self) -> Result<(), Error> {
        let (family, n) = self.family_and_index()?;
        if family.rule_name(n) != self.id {
            return Err(Error::Golden(format!(
                "{}: id does not match class/degree/variant ({})",
                self.id,
                family.rule_name(n)
            )));
        }
        let expected = family.node_count(n);
        if self.entries.len() != expected {
            return Err(Error::EntryCountMismatch {
                id: self.id.clone(),
                expected,
                actual: self.entries.len(),
            });
        }
        let first: usize = match family {
            Family::C0Odd | Family::C1Even => n,
            _ => expected,
        };
        let points = self.parsed::<f64>()?;
        let split_ok = points.iter().enumerate().all(|(k, &(x, _))| {
            if k < first {
                (0.0..=1.0).contains(&x)
            } else {
                x > 1.0 && x <= 2.0
            }
        });
        if !split_ok {
            return Err(Error::Golden(format!(
                "{}: nodes do not follow the interval split",
                self.id
            )));
        }
        Ok(())
    }
}

pub fn parse_golden(json: &str) -> Result<Vec<GoldenRule>, Error> {
    serde_json::from_str(json).map_err(|e| Error::Golden(e.to_string()))
}

pub fn load_golden(path: &Path) -> Result<Vec<GoldenRule>, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Golden(format!("{}: {e}", path.display())))?;
    parse_golden(&text)
}

/// The tables shipped with the crate.
pub fn bundled_golden() -> Vec<GoldenRule> {
    parse_golden(BUNDLED).expect("bundled golden data is valid JSON")
}

#[derive(Debug, Clone, PartialEq)]
pub struct GoldenComparison {
    pub id: String,
    /// `max(|Δnode|, |Δweight|)` over all entries.
    pub max_deviation: f64,
    pub worst_entry: usize,
    pub tolerance: f64,
}

impl GoldenComparison {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tolerance
    }
}

/// Positional comparison of a generated rule with a reference table.
pub fn compare_golden<T: Real>(
    rule: &ScaledRule<T>,
    golden: &GoldenRule,
    tol: f64,
) -> Result<GoldenComparison, Error> {
    let generated = rule.entries();
    let reference = golden.parsed::<T>()?;
    if generated.len() != reference.len() {
        return Err(Error::EntryCountMismatch {
            id: golden.id.clone(),
            expected: reference.len(),
            actual: generated.len(),
        });
    }
    let mut max_deviation = 0.0f64;
    let mut worst_entry = 0;
    for (k, ((x, w), (gx, gw))) in generated.into_iter().zip(reference).enumerate() {
        let dev = (x - gx).abs().to_f64().max((w - gw).abs().to_f64());
        if dev > max_deviation {
            max_deviation = dev;
            worst_entry = k;
        }
    }
    Ok(GoldenComparison {
        id: golden.id.clone(),
        max_deviation,
        worst_entry,
        tolerance: tol,
    })
}
