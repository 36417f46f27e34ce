use crate::error::{Error, Result};

use super::sampler::{parity_sweep_count, sample_tuple};
use super::{EvalStructure, IdentityTemplate, SamplerConfig, Value};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerificationStatus {
    /// Residual was exactly zero on every evaluated tuple.
    HoldsOnSamples,
    Violated,
}

/// One failed tuple: the sampled inputs together with the exact nonzero
/// residual, kept in canonical form for diagnosis.
#[derive(Clone, Debug)]
pub struct Violation {
    pub draw_index: usize,
    pub inputs: Vec<Value>,
    pub residual: Value,
}

/// The evidence a verification run produces.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub identity: String,
    pub structure: String,
    pub samples: usize,
    pub seed: u64,
    pub parity_sweeps: usize,
    pub status: VerificationStatus,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

/// Evaluates the template on `config.samples` seeded homogeneous tuples,
/// cycling through every parity assignment the slots leave free, and
/// reports each tuple with a nonzero residual.
///
/// Re-running with the same configuration reproduces the report exactly.
pub fn verify(
    template: &IdentityTemplate,
    structure: &EvalStructure,
    config: &SamplerConfig,
) -> Result<VerificationReport> {
    config.validate()?;
    template.validate()?;
    if template.requires_square_zero_delta {
        let delta = structure.delta().ok_or(Error::MissingDelta)?;
        if !delta.is_square_zero()? {
            return Err(Error::Precondition(format!(
                "`{}` is only asserted for a square-zero odd derivation",
                template.name
            )));
        }
    }

    let mut violations = Vec::new();
    for draw in 0..config.samples {
        let inputs = sample_tuple(config, &template.slots, structure, draw)?;
        let residual = super::evaluate(template, structure, &inputs)?;
        if !residual.is_zero() {
            violations.push(Violation {
                draw_index: draw,
                inputs,
                residual,
            });
        }
    }
    // Draws run in order, so violations are already sorted by index; keep
    // that contract explicit for any future parallel evaluation.
    violations.sort_by_key(|v| v.draw_index);

    let status = if violations.is_empty() {
        VerificationStatus::HoldsOnSamples
    } else {
        VerificationStatus::Violated
    };
    let mut notes = template.notes.clone();
    if let Some(tp) = structure.tp() {
        if let Some(t) = tp.ternary_source() {
            if t == tp.bracket_source() {
                // Observed, not asserted: expansion suggests the ternary
                // bracket vanishes identically in this configuration.
                notes.push(
                    "ternary and bracket derivations coincide; the ternary bracket \
                     has been observed to vanish identically in this configuration"
                        .into(),
                );
            }
        }
    }
    Ok(VerificationReport {
        identity: template.name.clone(),
        structure: structure.description().to_string(),
        samples: config.samples,
        seed: config.seed,
        parity_sweeps: parity_sweep_count(&template.slots, &config.parity_overrides),
        status,
        violations,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::TPStructure;
    use crate::derivation::Derivation;
    use crate::element::Element;
    use crate::identity::builtin_catalog;
    use crate::parity::Parity;
    use crate::signature::AlgebraSignature;
    use std::sync::Arc;

    fn find(name: &str) -> IdentityTemplate {
        builtin_catalog()
            .into_iter()
            .find(|t| t.name == name)
            .unwrap()
    }

    #[test]
    fn filippov_jacobi_holds_on_samples() {
        let sig = AlgebraSignature::make(&["t", "s"], &["th1", "th2"]);
        let dt = Arc::new(
            Derivation::new(&sig, Parity::EVEN, &[("t", Element::one(&sig))]).unwrap(),
        );
        let ds = Arc::new(
            Derivation::new(&sig, Parity::EVEN, &[("s", Element::one(&sig))]).unwrap(),
        );
        let structure =
            EvalStructure::from_tp(TPStructure::with_ternary(dt, ds).unwrap());
        let report = verify(
            &find("filippov-jacobi"),
            &structure,
            &SamplerConfig::new(11).with_samples(100),
        )
        .unwrap();
        assert_eq!(report.status, VerificationStatus::HoldsOnSamples);
        assert!(report.violations.is_empty());
        assert_eq!(report.samples, 100);
        assert_eq!(report.parity_sweeps, 32);
    }

    #[test]
    fn jordan_module_gate_requires_square_zero() {
        let sig = AlgebraSignature::make(&["t"], &["th1", "th2"]);
        // delta' with th1 -> t and t -> th1 squares to the identity-like map
        let delta = Arc::new(
            Derivation::new(
                &sig,
                Parity::ODD,
                &[
                    ("th1", Element::generator(&sig, "t").unwrap()),
                    ("t", Element::generator(&sig, "th1").unwrap()),
                ],
            )
            .unwrap(),
        );
        let structure = EvalStructure::from_delta(delta);
        let err = verify(
            &find("jordan-module"),
            &structure,
            &SamplerConfig::new(1).with_samples(10),
        )
        .unwrap_err();
        assert!(matches!(err, Error::Precondition(_)));
    }

    #[test]
    fn zero_samples_hold_vacuously() {
        let sig = AlgebraSignature::make(&["t"], &[]);
        let d = Arc::new(
            Derivation::new(&sig, Parity::EVEN, &[("t", Element::one(&sig))]).unwrap(),
        );
        let structure = EvalStructure::from_tp(TPStructure::new(d).unwrap());
        let report = verify(
            &find("jacobi-super"),
            &structure,
            &SamplerConfig::new(5).with_samples(0),
        )
        .unwrap();
        assert_eq!(report.samples, 0);
        assert_eq!(report.status, VerificationStatus::HoldsOnSamples);
    }

    #[test]
    fn pseudo_bracket_is_caught_on_samples() {
        let sig = AlgebraSignature::make(&["t"], &[]);
        let d = Arc::new(
            Derivation::new(&sig, Parity::EVEN, &[("t", Element::one(&sig))]).unwrap(),
        );
        let structure = EvalStructure::from_tp(TPStructure::new(d).unwrap());
        let report = verify(
            &find("pseudo-bracket"),
            &structure,
            &SamplerConfig::new(2).with_samples(40),
        )
        .unwrap();
        assert_eq!(report.status, VerificationStatus::Violated);
        let first = &report.violations[0];
        assert!(!first.residual.is_zero());
        // violations come back in draw order
        let mut sorted = report.violations.clone();
        sorted.sort_by_key(|v| v.draw_index);
        assert_eq!(
            report.violations.iter().map(|v| v.draw_index).collect::<Vec<_>>(),
            sorted.iter().map(|v| v.draw_index).collect::<Vec<_>>()
        );
    }
}
