use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::element::{rat, Element, Rational};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parity::Parity;
use crate::signature::{same_signature, AlgebraSignature, Generator};

/// A graded derivation of the free superalgebra, stored by its generator
/// images and extended to the whole algebra by the graded Leibniz rule
/// `D(uv) = D(u) v + (-1)^{|D||u|} u D(v)`.
///
/// On a free algebra a derivation is determined by its generator images, so
/// equality of derivations is equality of all images. Generators without a
/// stored image map to zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Derivation {
    signature: Arc<AlgebraSignature>,
    parity: Parity,
    images: Vec<Element>, // even generators first, then odd ones
}

impl Derivation {
    pub fn new(
        signature: &Arc<AlgebraSignature>,
        parity: Parity,
        images: &[(&str, Element)],
    ) -> Result<Derivation> {
        let mut stored = vec![Element::zero(signature); signature.even_count() + signature.odd_count()];
        let mut seen = std::collections::HashSet::new();
        for (name, image) in images {
            let g = signature
                .generator(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            if !seen.insert(g) {
                return Err(Error::DuplicateImage(name.to_string()));
            }
            if !same_signature(signature, image.signature()) {
                return Err(Error::SignatureMismatch);
            }
            if !image.parity().has_parity(g.parity() + parity) {
                return Err(Error::ImageParity(name.to_string()));
            }
            stored[index_of(signature, g)] = image.clone();
        }
        Ok(Derivation {
            signature: Arc::clone(signature),
            parity,
            images: stored,
        })
    }

    pub fn zero(signature: &Arc<AlgebraSignature>, parity: Parity) -> Derivation {
        Derivation {
            signature: Arc::clone(signature),
            parity,
            images: vec![Element::zero(signature); signature.even_count() + signature.odd_count()],
        }
    }

    pub(crate) fn from_images(
        signature: &Arc<AlgebraSignature>,
        parity: Parity,
        images: Vec<Element>,
    ) -> Derivation {
        debug_assert_eq!(
            images.len(),
            signature.even_count() + signature.odd_count()
        );
        Derivation {
            signature: Arc::clone(signature),
            parity,
            images,
        }
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.signature
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn image(&self, g: Generator) -> &Element {
        &self.images[index_of(&self.signature, g)]
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Element::is_zero)
    }

    /// Applies the derivation by the graded Leibniz rule, term by term.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        if !same_signature(&self.signature, a.signature()) {
            return Err(Error::SignatureMismatch);
        }
        let mut acc = Element::zero(&self.signature);
        for (m, c) in a.terms() {
            let da = self.apply_monomial(m);
            if !da.is_zero() {
                acc = &acc + &da.scaled(c);
            }
        }
        Ok(acc)
    }

    /// Leibniz expansion over the factors of one canonical monomial. The
    /// even factors sit to the left of the odd ones and are central, so only
    /// odd factors preceding the differentiated one contribute a sign.
    fn apply_monomial(&self, m: &Monomial) -> Element {
        let sig = &self.signature;
        let ne = sig.even_count();
        let mut acc = Element::zero(sig);

        for i in 0..ne {
            let k = m.even_exponent(i);
            if k == 0 {
                continue;
            }
            let image = &self.images[i];
            if image.is_zero() {
                continue;
            }
            let mut even = m.even_exponents().to_vec();
            even[i] -= 1;
            let lowered = Element::from_monomial(
                sig,
                Monomial::from_parts(even, vec![]),
                rat(k as i64),
            );
            let odd_tail = Element::from_monomial(
                sig,
                Monomial::from_parts(vec![0; ne], m.odd_factors().to_vec()),
                Rational::one(),
            );
            acc = &acc + &(&(&lowered * image) * &odd_tail);
        }

        let odd = m.odd_factors();
        for (r, &j) in odd.iter().enumerate() {
            let image = &self.images[ne + j as usize];
            if image.is_zero() {
                continue;
            }
            let sign = if self.parity.is_odd() && r % 2 == 1 { -1 } else { 1 };
            let head = Element::from_monomial(
                sig,
                Monomial::from_parts(m.even_exponents().to_vec(), odd[..r].to_vec()),
                rat(sign),
            );
            let tail = Element::from_monomial(
                sig,
                Monomial::from_parts(vec![0; ne], odd[r + 1..].to_vec()),
                Rational::one(),
            );
            acc = &acc + &(&(&head * image) * &tail);
        }
        acc
    }

    /// The graded commutator `D1 o D2 - (-1)^{|D1||D2|} D2 o D1`, returned
    /// as a derivation through its generator images.
    pub fn graded_commutator(&self, other: &Derivation) -> Result<Derivation> {
        if !same_signature(&self.signature, &other.signature) {
            return Err(Error::SignatureMismatch);
        }
        let sign = self.parity.koszul_sign(other.parity);
        let mut images = Vec::with_capacity(self.images.len());
        for g in self.signature.generators() {
            let forward = self.apply(other.image(g))?;
            let backward = other.apply(self.image(g))?;
            images.push(&forward - &backward.scaled_int(sign));
        }
        Ok(Derivation::from_images(
            &self.signature,
            self.parity + other.parity,
            images,
        ))
    }

    /// Whether the square of an odd derivation vanishes. Checking the
    /// generator images suffices: the square is half the self-commutator,
    /// hence itself a derivation.
    pub fn is_square_zero(&self) -> Result<bool> {
        if self.parity.is_even() {
            return Err(Error::OddDerivationRequired);
        }
        for g in self.signature.generators() {
            if !self.apply(self.image(g))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} derivation {{", self.parity)?;
        for g in self.signature.generators() {
            let img = self.image(g);
            if !img.is_zero() {
                write!(f, " {} -> {};", self.signature.generator_name(g), img)?;
            }
        }
        f.write_str(" }")
    }
}

fn index_of(sig: &AlgebraSignature, g: Generator) -> usize {
    match g {
        Generator::Even(i) => i,
        Generator::Odd(i) => sig.even_count() + i,
    }
}
