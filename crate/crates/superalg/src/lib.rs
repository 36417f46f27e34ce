//! Exact arithmetic for free graded-commutative superalgebras, their graded
//! derivations, the brackets these derivations generate, and machine
//! verification of the multilinear identities those brackets satisfy.
//!
//! All coefficients are arbitrary-precision rationals and every identity
//! check compares canonical forms for exact equality; there are no floating
//! point modes and no tolerances anywhere in the crate.

pub mod brackets;
pub mod derivation;
pub mod element;
pub mod error;
pub mod identity;
pub mod monomial;
pub mod parity;
pub mod signature;
pub mod vector_field;

pub use brackets::{even_lie_bracket, pseudo_bracket, ternary_bracket, TPStructure};
pub use derivation::Derivation;
pub use element::{linear_combine, Element, Rational};
pub use error::{Error, Result};
pub use identity::{
    builtin_catalog, evaluate, sample_tuple, search_counterexample, verify, EvalStructure,
    IdentityTemplate, SamplerConfig, SearchBounds, SearchOutcome, SignExpr, SlotKind, SlotSpec,
    TemplateExpr, TemplateTerm, Value, VerificationReport, VerificationStatus, Violation,
};
pub use monomial::Monomial;
pub use parity::{Parity, ParityClass};
pub use signature::{AlgebraSignature, Generator};
pub use vector_field::{jordan_sum_product, module_action, VectorField};
