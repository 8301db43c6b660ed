//! Acceptance criteria, one test per criterion. Each prints a single
//! `PASS`/`FAIL` line before asserting, so `cargo test --test acceptance --
//! --nocapture` gives a readable summary.

use std::time::{Duration, Instant};

use splinequad::assembly::assemble;
use splinequad::families::build_c1_interior_with_sign;
use splinequad::splinecheck::{
    bundled_golden, check_exactness, check_exactness_in, compare_golden, SplineSpace,
    DEFAULT_COPIES,
};
use splinequad::{scaled_c0_even, scaled_rule, DeltaSign, Error, Family, ScaledRule};

fn report(id: u8, name: &str, ok: bool, detail: String) {
    println!(
        "[{}] criterion {id} {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
}

/// Indices `n` whose degree is at most `max_degree`.
fn indices_up_to_degree(family: Family, max_degree: usize) -> impl Iterator<Item = usize> {
    (family.min_index()..).take_while(move |&n| family.degree(n) <= max_degree)
}

fn indices_up_to(family: Family, max_n: usize) -> std::ops::RangeInclusive<usize> {
    family.min_index()..=max_n
}

/// Largest deviation of an interval from its mirror image about `centre`.
fn mirror_deviation(nodes: &[f64], weights: &[f64], centre: f64) -> f64 {
    let m = nodes.len();
    (0..m)
        .map(|i| {
            let j = m - 1 - i;
            (nodes[i] + nodes[j] - 2.0 * centre)
                .abs()
                .max((weights[i] - weights[j]).abs())
        })
        .fold(0.0, f64::max)
}

fn hausdorff(a: &[f64], b: &[f64]) -> f64 {
    let directed = |p: &[f64], q: &[f64]| {
        p.iter()
            .map(|x| {
                q.iter()
                    .map(|y| (x - y).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
    };
    directed(a, b).max(directed(b, a))
}

#[test]
fn criterion_1_golden_regression() {
    let start = Instant::now();
    let tables = bundled_golden();
    let mut worst = (String::new(), 0.0f64);
    let mut failures = Vec::new();
    for table in &tables {
        let (family, n) = table.family_and_index().unwrap();
        let rule = scaled_rule::<f64>(family, n).unwrap();
        let cmp = compare_golden(&rule, table, 1e-13).unwrap();
        if cmp.max_deviation > worst.1 {
            worst = (cmp.id.clone(), cmp.max_deviation);
        }
        if !cmp.passed() {
            failures.push(cmp.id.clone());
        }
    }
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed < Duration::from_secs(5);
    report(
        1,
        "golden regression",
        ok,
        format!(
            "{} tables, worst {} at {:.2e} (tol 1e-13), {:.2?} (limit 5s), failures {:?}",
            tables.len(),
            worst.0,
            worst.1,
            elapsed,
            failures
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_2_spline_exactness() {
    let start = Instant::now();
    let mut worst = (String::new(), 0.0f64);
    let mut checked = 0;
    for family in Family::ALL {
        for n in indices_up_to_degree(family, 25) {
            let rule = scaled_rule::<f64>(family, n).unwrap();
            let r = check_exactness(&rule, DEFAULT_COPIES);
            assert!(r.tested_basis_count > 0, "{family} n={n}");
            checked += 1;
            if r.max_abs_error > worst.1 {
                worst = (rule.name(), r.max_abs_error);
            }
        }
    }
    let elapsed = start.elapsed();
    let ok = worst.1 <= 1e-11 && elapsed < Duration::from_secs(60);
    report(
        2,
        "spline exactness",
        ok,
        format!(
            "{checked} rules with D <= 25, worst {} at {:.2e} (tol 1e-11), {:.2?} (limit 60s)",
            worst.0, worst.1, elapsed
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_3_negative_control() {
    let mut lines = Vec::new();
    let mut ok = true;
    for family in Family::ALL {
        let n = family.min_index().max(3);
        let rule = scaled_rule::<f64>(family, n).unwrap();
        let space = SplineSpace {
            degree: rule.degree + 1,
            continuity: family.continuity().order(),
        };
        let r = check_exactness_in(&rule, DEFAULT_COPIES, space);
        ok &= r.max_abs_error > 1e-6;
        lines.push(format!("{} {:.2e}", rule.name(), r.max_abs_error));
    }
    report(
        3,
        "negative control",
        ok,
        format!("degree D+1 errors (need > 1e-6): {}", lines.join(", ")),
    );
    assert!(ok);
}

fn containment_violation(rule: &ScaledRule<f64>) -> Option<String> {
    let endpoint = matches!(rule.family, Family::C1OddEndpoint | Family::C1Even);
    for (k, interval) in rule.intervals.iter().enumerate() {
        let (lo, hi) = (k as f64, k as f64 + 1.0);
        for (j, (&x, &w)) in interval.nodes.iter().zip(&interval.weights).enumerate() {
            if w.is_nan() || w <= 0.0 {
                return Some(format!("{} weight {w} at {x}", rule.name()));
            }
            let boundary_node = endpoint && k == 0 && j == 0;
            let inside = if boundary_node {
                x == lo
            } else {
                x > lo && x < hi
            };
            if !inside {
                return Some(format!("{} node {x} outside ({lo}, {hi})", rule.name()));
            }
        }
    }
    None
}

#[test]
fn criterion_4_positivity_and_containment() {
    let mut checked = 0;
    let mut violations = Vec::new();
    for family in Family::ALL {
        for n in indices_up_to(family, 50) {
            let rule = scaled_rule::<f64>(family, n).unwrap();
            checked += 1;
            violations.extend(containment_violation(&rule));
        }
    }
    let ok = violations.is_empty();
    report(
        4,
        "weight positivity and node containment",
        ok,
        format!("{checked} rules with n <= 50, violations {violations:?}"),
    );
    assert!(ok);
}

#[test]
fn criterion_5_symmetry() {
    let mut c0_odd = 0.0f64;
    for n in indices_up_to(Family::C0Odd, 50) {
        let rule = scaled_rule::<f64>(Family::C0Odd, n).unwrap();
        for (k, i) in rule.intervals.iter().enumerate() {
            c0_odd = c0_odd.max(mirror_deviation(&i.nodes, &i.weights, k as f64 + 0.5));
        }
    }

    let mut c1_odd = 0.0f64;
    for family in [Family::C1OddEndpoint, Family::C1OddInterior] {
        for n in indices_up_to(family, 50) {
            let rule = splinequad::reference_rule::<f64>(family, n).unwrap();
            let i = &rule.intervals[0];
            // The boundary node at −1 is its own mirror image on the line.
            let skip = usize::from(family == Family::C1OddEndpoint);
            c1_odd = c1_odd.max(mirror_deviation(&i.nodes[skip..], &i.weights[skip..], 0.0));
        }
    }

    let mut c1_even = 0.0f64;
    for n in indices_up_to(Family::C1Even, 50) {
        let rule = scaled_rule::<f64>(Family::C1Even, n).unwrap();
        let (first, second) = (&rule.intervals[0], &rule.intervals[1]);
        assert_eq!(first.len(), second.len() + 1);
        for (j, (&x, &w)) in second.nodes.iter().zip(&second.weights).enumerate() {
            let m = first.len() - 1 - j;
            c1_even = c1_even
                .max((x - (2.0 - first.nodes[m])).abs())
                .max((w - first.weights[m]).abs());
        }
    }

    let mut c0_even_min = f64::INFINITY;
    let mut sign_reflection = 0.0f64;
    for n in 1..=50 {
        let plus = scaled_c0_even::<f64>(n, DeltaSign::Plus).unwrap();
        let minus = scaled_c0_even::<f64>(n, DeltaSign::Minus).unwrap();
        let (p, m) = (&plus.intervals[0], &minus.intervals[0]);
        if n >= 2 {
            c0_even_min = c0_even_min.min(mirror_deviation(&p.nodes, &p.weights, 0.5));
        }
        let len = p.len();
        for j in 0..len {
            let r = len - 1 - j;
            sign_reflection = sign_reflection
                .max((m.nodes[j] - (1.0 - p.nodes[r])).abs())
                .max((m.weights[j] - p.weights[r]).abs());
        }
    }

    let ok = c0_odd <= 1e-12
        && c1_odd <= 1e-12
        && c1_even <= 1e-12
        && c0_even_min > 1e-6
        && sign_reflection <= 1e-13;
    report(
        5,
        "symmetry",
        ok,
        format!(
            "C0 odd {c0_odd:.2e}, C1 odd {c1_odd:.2e}, C1 even {c1_even:.2e} (each <= 1e-12); \
             C0 even min asymmetry {c0_even_min:.2e} (> 1e-6); sign flip vs reflection \
             {sign_reflection:.2e} (<= 1e-13)"
        ),
    );
    assert!(ok);
}

#[test]
fn criterion_6_negative_delta_rejected() {
    let mut unexpected = Vec::new();
    for n in 2..=10 {
        let spec = build_c1_interior_with_sign::<f64>(n, DeltaSign::Minus).unwrap();
        match assemble(&spec) {
            Err(Error::CountMismatch { .. }) => {}
            other => unexpected.push(format!("n={n}: {other:?}")),
        }
    }
    let ok = unexpected.is_empty();
    report(
        6,
        "negative delta rejection",
        ok,
        format!("n = 2..10 raise CountMismatch, unexpected {unexpected:?}"),
    );
    assert!(ok);
}

fn interior_node_distance(n: usize) -> f64 {
    let endpoint = scaled_rule::<f64>(Family::C1OddEndpoint, n).unwrap();
    let interior = scaled_rule::<f64>(Family::C1OddInterior, n).unwrap();
    hausdorff(
        &endpoint.intervals[0].nodes[1..],
        &interior.intervals[0].nodes,
    )
}

#[test]
fn criterion_7_variants_converge() {
    let (d5, d20) = (interior_node_distance(5), interior_node_distance(20));
    let ok = d20 < d5;
    report(
        7,
        "C1 odd variants converge",
        ok,
        format!("Hausdorff distance n=5 {d5:.4e}, n=20 {d20:.4e}"),
    );
    assert!(ok);
}

#[test]
fn criterion_8_weight_normalization() {
    let mut worst = (String::new(), 0.0f64);
    for family in Family::ALL {
        for n in indices_up_to(family, 50) {
            let rule = scaled_rule::<f64>(family, n).unwrap();
            let err = (rule.weight_sum() - rule.period_intervals() as f64).abs();
            if err > worst.1 {
                worst = (rule.name(), err);
            }
        }
    }
    let ok = worst.1 <= 1e-12;
    report(
        8,
        "weight normalization",
        ok,
        format!("n <= 50, worst {} at {:.2e} (tol 1e-12)", worst.0, worst.1),
    );
    assert!(ok);
}
