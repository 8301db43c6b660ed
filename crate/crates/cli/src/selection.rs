//! Maps user-facing `(class, degree, variant, delta sign)` choices onto a
//! rule family.

use clap::ValueEnum;
use splinequad::{
    scaled_c0_even, scaled_rule, Continuity, DeltaSign, Family, Real, ScaledRule, Variant,
};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    C0,
    C1,
}

impl From<ClassArg> for Continuity {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::C0 => Continuity::C0,
            ClassArg::C1 => Continuity::C1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Endpoint,
    Interior,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Endpoint => Variant::Endpoint,
            VariantArg::Interior => Variant::Interior,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DeltaSignArg {
    #[value(alias = "+")]
    Plus,
    #[value(alias = "-")]
    Minus,
}

impl From<DeltaSignArg> for DeltaSign {
    fn from(s: DeltaSignArg) -> Self {
        match s {
            DeltaSignArg::Plus => DeltaSign::Plus,
            DeltaSignArg::Minus => DeltaSign::Minus,
        }
    }
}

/// A validated family choice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Selection {
    pub family: Family,
    pub n: usize,
    pub delta_sign: DeltaSign,
}

impl Selection {
    pub fn resolve(
        class: ClassArg,
        degree: usize,
        variant: Option<VariantArg>,
        delta_sign: Option<DeltaSignArg>,
    ) -> Result<Self, CliError> {
        if variant.is_some() && !(class == ClassArg::C1 && degree % 2 == 1) {
            return Err(CliError::Usage(
                "--variant applies only to odd-degree c1 rules".into(),
            ));
        }
        if delta_sign.is_some() && !(class == ClassArg::C0 && degree.is_multiple_of(2)) {
            return Err(CliError::Usage(
                "--delta-sign applies only to even-degree c0 rules".into(),
            ));
        }
        let (family, n) = Family::from_degree(class.into(), degree, variant.map(Into::into))
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Self {
            family,
            n,
            delta_sign: delta_sign.map(Into::into).unwrap_or_default(),
        })
    }

    pub fn build<T: Real>(&self) -> Result<ScaledRule<T>, CliError> {
        let rule = if self.family == Family::C0Even {
            scaled_c0_even(self.n, self.delta_sign)
        } else {
            scaled_rule(self.family, self.n)
        };
        rule.map_err(|e| CliError::Failure(format!("{}: {e}", self.family.rule_name(self.n))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_families() {
        let s = Selection::resolve(ClassArg::C1, 9, Some(VariantArg::Interior), None).unwrap();
        assert_eq!((s.family, s.n), (Family::C1OddInterior, 4));
        let s = Selection::resolve(ClassArg::C0, 6, None, Some(DeltaSignArg::Minus)).unwrap();
        assert_eq!(
            (s.family, s.n, s.delta_sign),
            (Family::C0Even, 3, DeltaSign::Minus)
        );
        let s = Selection::resolve(ClassArg::C1, 5, None, None).unwrap();
        assert_eq!(s.family, Family::C1OddEndpoint);
    }

    #[test]
    fn rejects_misplaced_options() {
        for (class, degree, variant, sign) in [
            (ClassArg::C1, 4, Some(VariantArg::Interior), None),
            (ClassArg::C0, 5, Some(VariantArg::Endpoint), None),
            (ClassArg::C0, 5, None, Some(DeltaSignArg::Plus)),
            (ClassArg::C1, 6, None, Some(DeltaSignArg::Minus)),
            (ClassArg::C0, 0, None, None),
            (ClassArg::C1, 2, None, None),
        ] {
            assert!(matches!(
                Selection::resolve(class, degree, variant, sign),
                Err(CliError::Usage(_))
            ));
        }
    }
}
