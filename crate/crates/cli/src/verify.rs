//! Golden-table and spline-exactness suites with a per-family summary.

use std::fmt::Write as _;

use clap::ValueEnum;
use splinequad::splinecheck::{bundled_golden, check_exactness, compare_golden, DEFAULT_COPIES};
use splinequad::{scaled_rule, Family};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Scope {
    Golden,
    Exactness,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub golden: f64,
    pub exactness: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            golden: 1e-13,
            exactness: 1e-11,
        }
    }
}

/// Worst result of one suite for one family.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyRow {
    pub suite: &'static str,
    pub family: Family,
    pub rules: usize,
    pub max_error: f64,
    /// Rule name of the worst case, or the error that stopped the suite.
    pub worst: String,
    pub tolerance: f64,
    pub error: Option<String>,
}

impl FamilyRow {
    fn new(suite: &'static str, family: Family, tolerance: f64) -> Self {
        Self {
            suite,
            family,
            rules: 0,
            max_error: 0.0,
            worst: String::from("-"),
            tolerance,
            error: None,
        }
    }

    fn record(&mut self, name: String, err: f64) {
        self.rules += 1;
        // A NaN error is a failure and sticks once recorded.
        if self.max_error.is_nan() {
            return;
        }
        if err.is_nan() || err > self.max_error {
            self.max_error = err;
            self.worst = name;
        }
    }

    pub fn passed(&self) -> bool {
        self.error.is_none() && self.max_error <= self.tolerance
    }
}

fn golden_row(family: Family, tol: f64) -> FamilyRow {
    let mut row = FamilyRow::new("golden", family, tol);
    for table in bundled_golden() {
        let resolved = table.family_and_index();
        let Ok((f, n)) = resolved else {
            row.error = Some(format!("{}: {}", table.id, resolved.unwrap_err()));
            continue;
        };
        if f != family {
            continue;
        }
        match scaled_rule::<f64>(f, n).and_then(|r| compare_golden(&r, &table, tol)) {
            Ok(cmp) => row.record(cmp.id, cmp.max_deviation),
            Err(e) => {
                row.worst = table.id.clone();
                row.error = Some(e.to_string());
            }
        }
    }
    row
}

fn exactness_row(family: Family, max_n: usize, tol: f64) -> FamilyRow {
    let mut row = FamilyRow::new("exactness", family, tol);
    for n in family.min_index()..=max_n {
        match scaled_rule::<f64>(family, n) {
            Ok(rule) => {
                let report = check_exactness(&rule, DEFAULT_COPIES);
                row.record(rule.name(), report.max_abs_error);
            }
            Err(e) => {
                row.worst = family.rule_name(n);
                row.error = Some(e.to_string());
            }
        }
    }
    row
}

/// Runs the selected suites, one thread per family and suite.
pub fn run(scope: Scope, max_n: usize, tol: Tolerances) -> Vec<FamilyRow> {
    let golden = matches!(scope, Scope::Golden | Scope::All);
    let exactness = matches!(scope, Scope::Exactness | Scope::All);
    std::thread::scope(|s| {
        let mut handles = Vec::new();
        if golden {
            for family in Family::ALL {
                handles.push(s.spawn(move || golden_row(family, tol.golden)));
            }
        }
        if exactness {
            for family in Family::ALL {
                handles.push(s.spawn(move || exactness_row(family, max_n, tol.exactness)));
            }
        }
        handles
            .into_iter()
            .map(|h| h.join().expect("verification thread panicked"))
            .collect()
    })
}

pub fn table(rows: &[FamilyRow]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{:<10} {:<16} {:>5} {:>10} {:>10}  {:<10} status",
        "suite", "family", "rules", "max error", "tolerance", "worst"
    );
    for r in rows {
        let status = match (&r.error, r.passed()) {
            (Some(e), _) => format!("ERROR {e}"),
            (None, true) => "ok".into(),
            (None, false) => "FAIL".into(),
        };
        let _ = writeln!(
            s,
            "{:<10} {:<16} {:>5} {:>10.2e} {:>10.0e}  {:<10} {}",
            r.suite,
            r.family.slug(),
            r.rules,
            r.max_error,
            r.tolerance,
            r.worst,
            status
        );
    }
    s
}

/// The failing row with the largest error relative to its tolerance.
pub fn worst_offender(rows: &[FamilyRow]) -> Option<&FamilyRow> {
    let ratio = |r: &FamilyRow| {
        if r.error.is_some() || r.max_error.is_nan() {
            f64::INFINITY
        } else {
            r.max_error / r.tolerance
        }
    };
    rows.iter()
        .filter(|r| !r.passed())
        .max_by(|a, b| ratio(a).total_cmp(&ratio(b)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_golden_passes() {
        let rows = run(Scope::Golden, 0, Tolerances::default());
        assert_eq!(rows.iter().map(|r| r.rules).sum::<usize>(), 34);
        assert!(rows.iter().all(FamilyRow::passed), "{}", table(&rows));
    }

    #[test]
    fn impossible_tolerance_names_offender() {
        let tol = Tolerances {
            golden: 1e-30,
            exactness: 1e-30,
        };
        let rows = run(Scope::Golden, 0, tol);
        let worst = worst_offender(&rows).unwrap();
        assert!(worst.worst.starts_with('C'));
    }

    #[test]
    fn nan_is_a_failure() {
        let mut row = FamilyRow::new("exactness", Family::C0Odd, 1e-11);
        row.record("a".into(), 1e-15);
        row.record("b".into(), f64::NAN);
        row.record("c".into(), 1e-14);
        assert!(!row.passed());
        assert_eq!(row.worst, "b");
    }
}
