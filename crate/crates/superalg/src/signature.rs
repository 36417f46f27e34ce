use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::parity::Parity;

/// The generating set of a free graded-commutative superalgebra: a list of
/// polynomial (even) generators and a list of Grassmann (odd) generators.
///
/// The order of the odd generators is fixed at construction; canonical
/// monomials list odd factors by ascending index in this order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraSignature {
    even: Vec<String>,
    odd: Vec<String>,
}

/// One generator of a signature, identified by kind and index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Even(usize),
    Odd(usize),
}

impl Generator {
    pub fn parity(self) -> Parity {
        match self {
            Generator::Even(_) => Parity::EVEN,
            Generator::Odd(_) => Parity::ODD,
        }
    }
}

impl AlgebraSignature {
    pub fn new<S: Into<String>>(even: Vec<S>, odd: Vec<S>) -> Result<AlgebraSignature> {
        let even: Vec<String> = even.into_iter().map(Into::into).collect();
        let odd: Vec<String> = odd.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for name in even.iter().chain(odd.iter()) {
            if !seen.insert(name.clone()) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(AlgebraSignature { even, odd })
    }

    /// Convenience constructor that panics on duplicate names; intended for
    /// statically known generator lists.
    pub fn make(even: &[&str], odd: &[&str]) -> Arc<AlgebraSignature> {
        Arc::new(
            AlgebraSignature::new(even.to_vec(), odd.to_vec()).expect("duplicate generator name"),
        )
    }

    pub fn even_count(&self) -> usize {
        self.even.len()
    }

    pub fn odd_count(&self) -> usize {
        self.odd.len()
    }

    pub fn even_names(&self) -> &[String] {
        &self.even
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        if let Some(i) = self.even.iter().position(|n| n == name) {
            return Some(Generator::Even(i));
        }
        self.odd
            .iter()
            .position(|n| n == name)
            .map(Generator::Odd)
    }

    pub fn generator_name(&self, g: Generator) -> &str {
        match g {
            Generator::Even(i) => &self.even[i],
            Generator::Odd(i) => &self.odd[i],
        }
    }

    /// All generators, even ones first.
    pub fn generators(&self) -> impl Iterator<Item = Generator> + '_ {
        (0..self.even.len())
            .map(Generator::Even)
            .chain((0..self.odd.len()).map(Generator::Odd))
    }
}

impl fmt::Display for AlgebraSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "even [{}] odd [{}]",
            self.even.join(" "),
            self.odd.join(" ")
        )
    }
}

/// Signatures are shared by `Arc`; two elements interoperate when they point
/// at the same signature or at structurally equal ones.
pub(crate) fn same_signature(a: &Arc<AlgebraSignature>, b: &Arc<AlgebraSignature>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
