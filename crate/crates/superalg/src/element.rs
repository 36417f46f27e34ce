use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parity::{Parity, ParityClass};
use crate::signature::{same_signature, AlgebraSignature};

/// Exact coefficient type used throughout the kernel.
pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An element of the free graded-commutative superalgebra over the
/// rationals: a finite sum of canonical supermonomials with nonzero
/// coefficients.
///
/// Elements are immutable values in canonical form, so equality is a plain
/// term-map comparison. Arithmetic through the operator impls panics on a
/// signature mismatch; the `checked_*` methods report it as an error
/// instead.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    signature: Arc<AlgebraSignature>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Element {
    pub fn zero(signature: &Arc<AlgebraSignature>) -> Element {
        Element {
            signature: Arc::clone(signature),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(signature: &Arc<AlgebraSignature>) -> Element {
        Element::constant(signature, Rational::one())
    }

    pub fn constant(signature: &Arc<AlgebraSignature>, value: Rational) -> Element {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::one(signature.even_count()), value);
        }
        Element {
            signature: Arc::clone(signature),
            terms,
        }
    }

    pub fn from_int(signature: &Arc<AlgebraSignature>, n: i64) -> Element {
        Element::constant(signature, rat(n))
    }

    /// The element representing a single generator.
    pub fn generator(signature: &Arc<AlgebraSignature>, name: &str) -> Result<Element> {
        let g = signature
            .generator(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        let m = match g {
            crate::signature::Generator::Even(i) => {
                let mut even = vec![0; signature.even_count()];
                even[i] = 1;
                Monomial::from_parts(even, vec![])
            }
            crate::signature::Generator::Odd(i) => {
                Monomial::from_parts(vec![0; signature.even_count()], vec![i as u32])
            }
        };
        Ok(Element::from_monomial(signature, m, Rational::one()))
    }

    pub(crate) fn from_monomial(
        signature: &Arc<AlgebraSignature>,
        monomial: Monomial,
        coefficient: Rational,
    ) -> Element {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(monomial, coefficient);
        }
        Element {
            signature: Arc::clone(signature),
            terms,
        }
    }

    pub(crate) fn from_terms<I>(signature: &Arc<AlgebraSignature>, iter: I) -> Element
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match acc.entry(m) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
                std::collections::btree_map::Entry::Occupied(mut o) => {
                    *o.get_mut() += c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
            }
        }
        Element {
            signature: Arc::clone(signature),
            terms: acc,
        }
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.signature
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.compatible(other)?;
        Ok(Element::from_terms(
            &self.signature,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        ))
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.compatible(other)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((m, sign)) = ma.mul(mb) {
                    products.push((m, ca * cb * rat(sign)));
                }
            }
        }
        Ok(Element::from_terms(&self.signature, products))
    }

    pub fn scaled(&self, c: &Rational) -> Element {
        if c.is_zero() {
            return Element::zero(&self.signature);
        }
        Element {
            signature: Arc::clone(&self.signature),
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q * c))
                .collect(),
        }
    }

    pub fn scaled_int(&self, n: i64) -> Element {
        self.scaled(&rat(n))
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one(&self.signature);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Parity classification: homogeneous if every monomial has the same
    /// parity; the zero element is homogeneous of every parity.
    pub fn parity(&self) -> ParityClass {
        let mut it = self.terms.keys();
        match it.next() {
            None => ParityClass::Zero,
            Some(first) => {
                let p = first.parity();
                if it.all(|m| m.parity() == p) {
                    ParityClass::Homogeneous(p)
                } else {
                    ParityClass::Inhomogeneous
                }
            }
        }
    }

    /// Splits into the even and odd parts, `self = even + odd`.
    pub fn decompose(&self) -> (Element, Element) {
        (
            self.parity_part(Parity::EVEN),
            self.parity_part(Parity::ODD),
        )
    }

    pub fn parity_part(&self, p: Parity) -> Element {
        Element {
            signature: Arc::clone(&self.signature),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity() == p)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Nonzero homogeneous components, each tagged with its parity.
    pub(crate) fn homogeneous_parts(&self) -> Vec<(Element, Parity)> {
        let mut parts = Vec::with_capacity(2);
        for p in [Parity::EVEN, Parity::ODD] {
            let part = self.parity_part(p);
            if !part.is_zero() {
                parts.push((part, p));
            }
        }
        parts
    }

    fn compatible(&self, other: &Element) -> Result<()> {
        if same_signature(&self.signature, &other.signature) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }
}

/// Exact linear combination `sum coeffs[i] * elems[i]`.
pub fn linear_combine(coeffs: &[Rational], elems: &[Element]) -> Result<Element> {
    if coeffs.len() != elems.len() || elems.is_empty() {
        return Err(Error::LinearCombineShape);
    }
    let sig = elems[0].signature().clone();
    let mut acc = Element::zero(&sig);
    for (c, e) in coeffs.iter().zip(elems) {
        acc = acc.checked_add(&e.scaled(c))?;
    }
    Ok(acc)
}

impl Add for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        self.checked_add(rhs).expect("signature mismatch in +")
    }
}

impl Sub for &Element {
    type Output = Element;

    fn sub(self, rhs: &Element) -> Element {
        self.checked_sub(rhs).expect("signature mismatch in -")
    }
}

impl Mul for &Element {
    type Output = Element;

    fn mul(self, rhs: &Element) -> Element {
        self.checked_mul(rhs).expect("signature mismatch in *")
    }
}

impl Neg for &Element {
    type Output = Element;

    fn neg(self) -> Element {
        self.scaled_int(-1)
    }
}

impl fmt::Display for Element {
    /// Canonical textual form, parseable by the spec-file expression
    /// grammar: terms in canonical monomial order, `*` between all factors,
    /// `^` for even exponents greater than one.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let abs = c.abs();
            let mut factors: Vec<String> = Vec::new();
            // A leading negative term keeps an explicit coefficient so the
            // printed form stays inside the expression grammar ("-1*t", not
            // "-t").
            if !abs.is_one() || m.is_one() || (i == 0 && neg) {
                factors.push(abs.to_string());
            }
            for (idx, &e) in m.even_exponents().iter().enumerate() {
                if e == 1 {
                    factors.push(self.signature.even_names()[idx].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.signature.even_names()[idx], e));
                }
            }
            for &j in m.odd_factors() {
                factors.push(self.signature.odd_names()[j as usize].clone());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
