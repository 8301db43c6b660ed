//! Turns a [`FamilySpec`] into concrete nodes and weights.

use crate::error::Error;
use crate::families::{DeltaSign, Family, FamilySpec, IntervalDef, IntervalSpec};
use crate::real::Real;
use crate::rootfind::isolate_and_refine;

/// Nodes (ascending) and weights of one interval of a period.
#[derive(Debug, Clone, PartialEq)]
pub struct RuleInterval<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

impl<T: Real> RuleInterval<T> {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn map<U>(&self, f: impl Fn(T) -> U) -> RuleInterval<U> {
        RuleInterval {
            nodes: self.nodes.iter().map(|&x| f(x)).collect(),
            weights: self.weights.iter().map(|&w| f(w)).collect(),
        }
    }
}

/// A rule on the reference interval `[−1, 1]`, one entry per interval of the
/// period.
#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceRule<T> {
    pub family: Family,
    pub n: usize,
    pub degree: usize,
    pub delta: T,
    pub intervals: Vec<RuleInterval<T>>,
}

/// A rule with interval `k` of the period mapped onto `[k, k + 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaledRule<T> {
    pub family: Family,
    pub n: usize,
    pub degree: usize,
    pub delta: T,
    pub intervals: Vec<RuleInterval<T>>,
}

impl<T: Real> ScaledRule<T> {
    pub fn period_intervals(&self) -> usize {
        self.intervals.len()
    }

    pub fn name(&self) -> String {
        self.family.rule_name(self.n)
    }

    /// `(node, weight)` pairs, interval by interval, each ascending.
    pub fn entries(&self) -> Vec<(T, T)> {
        self.intervals
            .iter()
            .flat_map(|i| i.nodes.iter().copied().zip(i.weights.iter().copied()))
            .collect()
    }

    pub fn weight_sum(&self) -> T {
        self.intervals
            .iter()
            .flat_map(|i| i.weights.iter().copied())
            .fold(T::zero(), |acc, w| acc + w)
    }

    /// Rounds every value to double precision.
    pub fn to_f64(&self) -> ScaledRule<f64> {
        ScaledRule {
            family: self.family,
            n: self.n,
            degree: self.degree,
            delta: self.delta.to_f64(),
            intervals: self.intervals.iter().map(|i| i.map(Real::to_f64)).collect(),
        }
    }
}

fn free_nodes<T: Real>(interval: &IntervalSpec<T>) -> Result<(Vec<T>, Vec<T>), Error> {
    let one = T::one();
    let roots = isolate_and_refine(&interval.r, -one, one, interval.expected_free_nodes)?;
    let mut weights = Vec::with_capacity(roots.roots.len());
    for &x in &roots.roots {
        let (_, dr) = interval.r.eval(x);
        let denominator = dr * interval.s.value(x) * interval.weight_factor.eval(x);
        if denominator.abs().to_f64() <= 1e-300 {
            return Err(Error::DegenerateWeight { node: x.to_f64() });
        }
        weights.push(interval.a / denominator);
    }
    Ok((roots.roots, weights))
}

/// Computes nodes and closed-form weights for every interval of the period.
pub fn assemble<T: Real>(spec: &FamilySpec<T>) -> Result<ReferenceRule<T>, Error> {
    let mut intervals: Vec<RuleInterval<T>> = Vec::with_capacity(spec.intervals.len());
    // Free part of the first interval, kept for reflection.
    let mut first_free: Option<(Vec<T>, Vec<T>)> = None;
    for def in &spec.intervals {
        let interval = match def {
            IntervalDef::Explicit(i) => {
                let (free_x, free_w) = free_nodes(i)?;
                if first_free.is_none() {
                    first_free = Some((free_x.clone(), free_w.clone()));
                }
                let mut nodes = Vec::with_capacity(free_x.len() + 1);
                let mut weights = Vec::with_capacity(free_x.len() + 1);
                if let Some(fixed) = i.fixed_node {
                    nodes.push(fixed.x);
                    weights.push(fixed.w);
                }
                nodes.extend(free_x);
                weights.extend(free_w);
                RuleInterval { nodes, weights }
            }
            IntervalDef::ReflectionOfFirst => {
                let (x, w) = first_free.as_ref().ok_or_else(|| {
                    Error::InvalidParameter("reflected interval precedes an explicit one".into())
                })?;
                RuleInterval {
                    nodes: x.iter().rev().map(|&v| -v).collect(),
                    weights: w.iter().rev().copied().collect(),
                }
            }
        };
        intervals.push(interval);
    }
    Ok(ReferenceRule {
        family: spec.family,
        n: spec.n,
        degree: spec.degree,
        delta: spec.delta,
        intervals,
    })
}

/// Maps interval `k` of the period to `[k, k + 1]` via `x ↦ k + (x + 1)/2`
/// and halves the weights.
pub fn scale_to_unit_intervals<T: Real>(rule: &ReferenceRule<T>) -> ScaledRule<T> {
    let half = T::from_f64(0.5);
    let intervals = rule
        .intervals
        .iter()
        .enumerate()
        .map(|(k, i)| {
            let offset = T::from_i128(k as i128);
            RuleInterval {
                nodes: i
                    .nodes
                    .iter()
                    .map(|&x| offset + (x + T::one()) * half)
                    .collect(),
                weights: i.weights.iter().map(|&w| w * half).collect(),
            }
        })
        .collect();
    ScaledRule {
        family: rule.family,
        n: rule.n,
        degree: rule.degree,
        delta: rule.delta,
        intervals,
    }
}

/// `copies` translated periods of the rule, as one ascending list.
pub fn replicate_periodically<T: Real>(rule: &ScaledRule<T>, copies: usize) -> Vec<(T, T)> {
    let period = rule.period_intervals() as i128;
    let entries = rule.entries();
    let mut out = Vec::with_capacity(entries.len() * copies);
    for k in 0..copies {
        let shift = T::from_i128(k as i128 * period);
        out.extend(entries.iter().map(|&(x, w)| (x + shift, w)));
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite nodes"));
    out
}

/// Reference-domain rule for `family` at index `n` (default δ sign).
pub fn reference_rule<T: Real>(family: Family, n: usize) -> Result<ReferenceRule<T>, Error> {
    assemble(&FamilySpec::build(family, n)?)
}

/// Unit-interval rule for `family` at index `n` (default δ sign).
pub fn scaled_rule<T: Real>(family: Family, n: usize) -> Result<ScaledRule<T>, Error> {
    Ok(scale_to_unit_intervals(&reference_rule(family, n)?))
}

/// Unit-interval even-degree C⁰ rule with an explicit δ sign.
pub fn scaled_c0_even<T: Real>(n: usize, sign: DeltaSign) -> Result<ScaledRule<T>, Error> {
    let spec = crate::families::build_c0_even(n, sign)?;
    Ok(scale_to_unit_intervals(&assemble(&spec)?))
}
