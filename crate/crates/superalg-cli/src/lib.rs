//! Spec-file language for algebras, derivations and named elements, shared
//! by the `superalg` binary and its tests.

pub mod parser;
