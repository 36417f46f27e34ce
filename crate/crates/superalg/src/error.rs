use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by the kernel. Everything here is an input error: the
/// kernel itself never fails on well-formed data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("operands belong to different algebra signatures")]
    SignatureMismatch,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("generator `{0}` is given two images")]
    DuplicateImage(String),
    #[error("image of generator `{0}` has a parity inconsistent with the derivation parity")]
    ImageParity(String),
    #[error("this operation requires an even derivation")]
    EvenDerivationRequired,
    #[error("this operation requires an odd derivation")]
    OddDerivationRequired,
    #[error("vector fields are generated by different derivations")]
    DerivationMismatch,
    #[error("expected a homogeneous input")]
    InhomogeneousInput,
    #[error("slot {slot} requires a homogeneous value of parity {expected}")]
    SlotParity { slot: usize, expected: crate::parity::Parity },
    #[error("slot {slot} expects a value of kind {expected}")]
    SlotKind { slot: usize, expected: &'static str },
    #[error("template `{name}` takes {arity} inputs")]
    Arity { name: String, arity: usize },
    #[error("structure has no bracket derivation")]
    MissingBracketSource,
    #[error("structure has no ternary derivation")]
    MissingTernarySource,
    #[error("structure has no generating derivation for vector fields")]
    MissingDelta,
    #[error("ternary derivation must commute with the bracket derivation")]
    TernaryIncompatible,
    #[error("pair must split into an even and an odd vector field")]
    PairParity,
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(String),
    #[error("linear combination needs equally many coefficients and elements, at least one each")]
    LinearCombineShape,
    #[error("template is ill-typed: {0}")]
    IllTypedTemplate(String),
}
