use num_traits::One;

use crate::element::{Element, Rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::signature::AlgebraSignature;
use crate::vector_field::VectorField;

use super::{EvalStructure, IdentityTemplate, SlotKind, Value};

/// Bounds for the exhaustive witness search: every slot runs over the
/// monomials (coefficient 1) of total degree at most `max_total_degree`.
#[derive(Clone, Copy, Debug)]
pub struct SearchBounds {
    pub max_total_degree: u32,
}

#[derive(Clone, Debug)]
pub enum SearchOutcome {
    /// The first tuple, in enumeration order, with a nonzero residual.
    Witness {
        index: usize,
        inputs: Vec<Value>,
        residual: Value,
    },
    NoneFound {
        examined: usize,
    },
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<(&[Value], &Value)> {
        match self {
            SearchOutcome::Witness {
                inputs, residual, ..
            } => Some((inputs, residual)),
            SearchOutcome::NoneFound { .. } => None,
        }
    }
}

/// All monomials of total degree <= `max`, ordered by (degree, canonical
/// monomial order). The order is part of the contract: re-running a search
/// yields the same witness.
pub(crate) fn monomials_up_to(sig: &AlgebraSignature, max: u32) -> Vec<Monomial> {
    let ne = sig.even_count();
    let no = sig.odd_count() as u32;

    let mut exponent_lists: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..ne {
        let mut next = Vec::new();
        for list in &exponent_lists {
            let used: u32 = list.iter().sum();
            for e in 0..=(max - used.min(max)) {
                let mut l = list.clone();
                l.push(e);
                next.push(l);
            }
        }
        exponent_lists = next;
    }

    let mut subsets: Vec<Vec<u32>> = Vec::new();
    for mask in 0u32..(1 << no) {
        let subset: Vec<u32> = (0..no).filter(|i| mask >> i & 1 == 1).collect();
        subsets.push(subset);
    }

    let mut monomials = Vec::new();
    for evens in &exponent_lists {
        for subset in &subsets {
            let m = Monomial::from_parts(evens.clone(), subset.clone());
            if m.total_degree() <= max {
                monomials.push(m);
            }
        }
    }
    monomials.sort_by(|a, b| {
        a.total_degree()
            .cmp(&b.total_degree())
            .then_with(|| a.cmp(b))
    });
    monomials
}

/// Deterministic exhaustive search for a violating tuple. Slots enumerate
/// monomial elements (or monomial-coefficient vector fields) within the
/// bounds, tuples are visited in lexicographic order with the last slot
/// varying fastest, and the first nonzero residual is returned with its
/// witness.
pub fn search_counterexample(
    template: &IdentityTemplate,
    structure: &EvalStructure,
    bounds: &SearchBounds,
) -> Result<SearchOutcome> {
    template.validate()?;
    let sig = structure.signature();
    let all = monomials_up_to(sig, bounds.max_total_degree);

    let mut candidates: Vec<Vec<Value>> = Vec::with_capacity(template.slots.len());
    for slot in &template.slots {
        let mut slot_values = Vec::new();
        for m in &all {
            match slot.kind {
                SlotKind::Element => {
                    if let Some(p) = slot.parity {
                        if m.parity() != p {
                            continue;
                        }
                    }
                    slot_values.push(Value::Element(Element::from_monomial(
                        sig,
                        m.clone(),
                        Rational::one(),
                    )));
                }
                SlotKind::VectorField => {
                    let delta = structure.delta().ok_or(Error::MissingDelta)?;
                    if let Some(p) = slot.parity {
                        if m.parity() + delta.parity() != p {
                            continue;
                        }
                    }
                    let coeff = Element::from_monomial(sig, m.clone(), Rational::one());
                    slot_values.push(Value::VectorField(VectorField::new(coeff, delta)?));
                }
            }
        }
        if slot_values.is_empty() {
            return Ok(SearchOutcome::NoneFound { examined: 0 });
        }
        candidates.push(slot_values);
    }

    let mut indices = vec![0usize; candidates.len()];
    let mut examined = 0usize;
    loop {
        let inputs: Vec<Value> = indices
            .iter()
            .zip(&candidates)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let residual = super::evaluate(template, structure, &inputs)?;
        if !residual.is_zero() {
            return Ok(SearchOutcome::Witness {
                index: examined,
                inputs,
                residual,
            });
        }
        examined += 1;

        // odometer, last slot fastest
        let mut pos = indices.len();
        loop {
            if pos == 0 {
                return Ok(SearchOutcome::NoneFound { examined });
            }
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < candidates[pos].len() {
                break;
            }
            indices[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::TPStructure;
    use crate::derivation::Derivation;
    use crate::identity::builtin_catalog;
    use crate::parity::Parity;
    use crate::signature::AlgebraSignature;
    use std::sync::Arc;

    #[test]
    fn monomial_enumeration_is_graded_and_complete() {
        let sig = AlgebraSignature::make(&["t"], &["th1", "th2"]);
        let ms = monomials_up_to(&sig, 2);
        // 1, t, th1, th2, t^2, t th1, t th2, th1 th2
        assert_eq!(ms.len(), 8);
        assert!(ms[0].is_one());
        let degrees: Vec<u32> = ms.iter().map(|m| m.total_degree()).collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        assert_eq!(degrees, sorted);
    }

    #[test]
    fn no_witness_for_a_valid_identity() {
        let sig = AlgebraSignature::make(&["t"], &["th1"]);
        let d = Arc::new(
            Derivation::new(
                &sig,
                Parity::EVEN,
                &[("t", Element::generator(&sig, "t").unwrap())],
            )
            .unwrap(),
        );
        let structure = EvalStructure::from_tp(TPStructure::new(d).unwrap());
        let template = builtin_catalog()
            .into_iter()
            .find(|t| t.name == "thm2-identity-4")
            .unwrap();
        let outcome =
            search_counterexample(&template, &structure, &SearchBounds { max_total_degree: 2 })
                .unwrap();
        match outcome {
            SearchOutcome::NoneFound { examined } => {
                // 5 monomials of degree <= 2 (1, th1, t, t th1, t^2), 4 slots
                assert_eq!(examined, 5usize.pow(4));
            }
            SearchOutcome::Witness { .. } => panic!("valid identity has no witness"),
        }
    }

    #[test]
    fn degree_zero_bounds_are_vacuous_for_jacobi() {
        let sig = AlgebraSignature::make(&["t"], &[]);
        let d = Arc::new(
            Derivation::new(&sig, Parity::EVEN, &[("t", Element::one(&sig))]).unwrap(),
        );
        let structure = EvalStructure::from_tp(TPStructure::new(d).unwrap());
        let template = builtin_catalog()
            .into_iter()
            .find(|t| t.name == "jacobi-super")
            .unwrap();
        let outcome =
            search_counterexample(&template, &structure, &SearchBounds { max_total_degree: 0 })
                .unwrap();
        assert!(matches!(
            outcome,
            SearchOutcome::NoneFound { examined: 1 }
        ));
    }

    #[test]
    fn search_is_deterministic() {
        let sig = AlgebraSignature::make(&["t"], &["th1", "th2", "th3"]);
        let delta = Arc::new(
            Derivation::new(
                &sig,
                Parity::ODD,
                &[
                    ("th1", Element::generator(&sig, "t").unwrap()),
                    ("th2", Element::one(&sig)),
                ],
            )
            .unwrap(),
        );
        let structure = EvalStructure::from_delta(delta);
        let template = builtin_catalog()
            .into_iter()
            .find(|t| t.name == "super-jordan")
            .unwrap();
        let bounds = SearchBounds {
            max_total_degree: 1,
        };
        let a = search_counterexample(&template, &structure, &bounds).unwrap();
        let b = search_counterexample(&template, &structure, &bounds).unwrap();
        match (a, b) {
            (
                SearchOutcome::Witness {
                    index: ia,
                    inputs: wa,
                    residual: ra,
                },
                SearchOutcome::Witness {
                    index: ib,
                    inputs: wb,
                    residual: rb,
                },
            ) => {
                assert_eq!(ia, ib);
                assert_eq!(wa, wb);
                assert_eq!(ra, rb);
            }
            (SearchOutcome::NoneFound { examined: ea }, SearchOutcome::NoneFound { examined: eb }) => {
                assert_eq!(ea, eb);
            }
            _ => panic!("outcomes differ between runs"),
        }
    }
}
