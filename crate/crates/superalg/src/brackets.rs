use std::sync::Arc;

use crate::derivation::Derivation;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::signature::{same_signature, AlgebraSignature};

/// The Lie superbracket generated by an even derivation:
///
/// `[x, y] = x D(y) - (-1)^{|x||y|} y D(x)`
///
/// Inhomogeneous arguments are decomposed into their homogeneous parts and
/// the bracket is extended bilinearly, evaluating the Koszul sign per part.
pub fn even_lie_bracket(d: &Derivation, x: &Element, y: &Element) -> Result<Element> {
    if d.parity().is_odd() {
        return Err(Error::EvenDerivationRequired);
    }
    derivation_bracket(d, x, y, -1)
}

/// The deliberately wrong variant `x D(y) + (-1)^{|x||y|} y D(x)` used as a
/// negative control: it is not a Lie bracket and detectably violates the
/// graded Jacobi identity.
pub fn pseudo_bracket(d: &Derivation, x: &Element, y: &Element) -> Result<Element> {
    if d.parity().is_odd() {
        return Err(Error::EvenDerivationRequired);
    }
    derivation_bracket(d, x, y, 1)
}

fn derivation_bracket(
    d: &Derivation,
    x: &Element,
    y: &Element,
    reflip: i64,
) -> Result<Element> {
    if !same_signature(d.signature(), x.signature()) || !same_signature(d.signature(), y.signature())
    {
        return Err(Error::SignatureMismatch);
    }
    let sig = d.signature().clone();
    let mut acc = Element::zero(&sig);
    for (xp, px) in x.homogeneous_parts() {
        for (yp, py) in y.homogeneous_parts() {
            let sign = reflip * px.koszul_sign(py);
            acc = &acc + &(&(&xp * &d.apply(&yp)?) + &(&yp * &d.apply(&xp)?).scaled_int(sign));
        }
    }
    Ok(acc)
}

/// A commutative superalgebra equipped with the bracket generated by an even
/// derivation, and optionally with a second even derivation used to build
/// the ternary bracket.
///
/// The ternary derivation must be a derivation of the bracket as well as of
/// the product. The product rule holds for any derivation by construction;
/// for the bracket, on a unital algebra an even derivation `T` is a
/// derivation of the `B`-generated bracket exactly when `[T, B] = 0`, which
/// is decided exactly on generator images.
#[derive(Clone, Debug)]
pub struct TPStructure {
    signature: Arc<AlgebraSignature>,
    bracket_source: Arc<Derivation>,
    ternary_source: Option<Arc<Derivation>>,
}

impl TPStructure {
    pub fn new(bracket_source: Arc<Derivation>) -> Result<TPStructure> {
        if bracket_source.parity().is_odd() {
            return Err(Error::EvenDerivationRequired);
        }
        Ok(TPStructure {
            signature: bracket_source.signature().clone(),
            bracket_source,
            ternary_source: None,
        })
    }

    pub fn with_ternary(
        bracket_source: Arc<Derivation>,
        ternary_source: Arc<Derivation>,
    ) -> Result<TPStructure> {
        let mut s = TPStructure::new(bracket_source)?;
        if ternary_source.parity().is_odd() {
            return Err(Error::EvenDerivationRequired);
        }
        if !same_signature(&s.signature, ternary_source.signature()) {
            return Err(Error::SignatureMismatch);
        }
        if !ternary_source
            .graded_commutator(&s.bracket_source)?
            .is_zero()
        {
            return Err(Error::TernaryIncompatible);
        }
        s.ternary_source = Some(ternary_source);
        Ok(s)
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.signature
    }

    pub fn bracket_source(&self) -> &Arc<Derivation> {
        &self.bracket_source
    }

    pub fn ternary_source(&self) -> Option<&Arc<Derivation>> {
        self.ternary_source.as_ref()
    }

    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        even_lie_bracket(&self.bracket_source, x, y)
    }

    pub fn pseudo_bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        pseudo_bracket(&self.bracket_source, x, y)
    }

    pub fn ternary(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        ternary_bracket(self, x, y, z)
    }
}

/// The ternary bracket built from the structure's ternary derivation `T`
/// and binary bracket:
///
/// `[x,y,z] = T(x) [y,z] + (-1)^{|x|(|y|+|z|)} T(y) [z,x]
///          + (-1)^{(|x|+|y|)|z|} T(z) [x,y]`
///
/// extended trilinearly over homogeneous parts.
pub fn ternary_bracket(
    s: &TPStructure,
    x: &Element,
    y: &Element,
    z: &Element,
) -> Result<Element> {
    let t = s.ternary_source().ok_or(Error::MissingTernarySource)?;
    for e in [x, y, z] {
        if !same_signature(s.signature(), e.signature()) {
            return Err(Error::SignatureMismatch);
        }
    }
    let mut acc = Element::zero(s.signature());
    for (xp, px) in x.homogeneous_parts() {
        for (yp, py) in y.homogeneous_parts() {
            for (zp, pz) in z.homogeneous_parts() {
                let s1 = px.koszul_sign(py) * px.koszul_sign(pz);
                let s2 = px.koszul_sign(pz) * py.koszul_sign(pz);
                let t1 = &t.apply(&xp)? * &s.bracket(&yp, &zp)?;
                let t2 = (&t.apply(&yp)? * &s.bracket(&zp, &xp)?).scaled_int(s1);
                let t3 = (&t.apply(&zp)? * &s.bracket(&xp, &yp)?).scaled_int(s2);
                acc = &acc + &(&(&t1 + &t2) + &t3);
            }
        }
    }
    Ok(acc)
}
