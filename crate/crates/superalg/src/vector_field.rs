use std::fmt;
use std::sync::Arc;

use crate::derivation::Derivation;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::parity::{Parity, ParityClass};
use crate::signature::same_signature;

/// A vector field `x . D`: an element of the left supermodule generated by a
/// fixed derivation `D`, acting by `(x . D)(y) = x D(y)` and graded by
/// `|x . D| = |x| + |D|`.
#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    coefficient: Element,
    derivation: Arc<Derivation>,
}

impl VectorField {
    pub fn new(coefficient: Element, derivation: &Arc<Derivation>) -> Result<VectorField> {
        if !same_signature(coefficient.signature(), derivation.signature()) {
            return Err(Error::SignatureMismatch);
        }
        Ok(VectorField {
            coefficient,
            derivation: Arc::clone(derivation),
        })
    }

    pub fn zero(derivation: &Arc<Derivation>) -> VectorField {
        VectorField {
            coefficient: Element::zero(derivation.signature()),
            derivation: Arc::clone(derivation),
        }
    }

    pub fn coefficient(&self) -> &Element {
        &self.coefficient
    }

    pub fn derivation(&self) -> &Arc<Derivation> {
        &self.derivation
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn parity(&self) -> ParityClass {
        match self.coefficient.parity() {
            ParityClass::Zero => ParityClass::Zero,
            ParityClass::Homogeneous(p) => {
                ParityClass::Homogeneous(p + self.derivation.parity())
            }
            ParityClass::Inhomogeneous => ParityClass::Inhomogeneous,
        }
    }

    /// Acts on an algebra element: `(x . D)(y) = x D(y)`.
    pub fn apply(&self, a: &Element) -> Result<Element> {
        Ok(&self.coefficient * &self.derivation.apply(a)?)
    }

    /// Module action `z . (x . D) = (z x) . D`.
    pub fn scaled_by(&self, z: &Element) -> Result<VectorField> {
        Ok(VectorField {
            coefficient: z.checked_mul(&self.coefficient)?,
            derivation: Arc::clone(&self.derivation),
        })
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        self.same_module(other)?;
        Ok(VectorField {
            coefficient: self.coefficient.checked_add(&other.coefficient)?,
            derivation: Arc::clone(&self.derivation),
        })
    }

    pub fn checked_sub(&self, other: &VectorField) -> Result<VectorField> {
        self.same_module(other)?;
        Ok(VectorField {
            coefficient: self.coefficient.checked_sub(&other.coefficient)?,
            derivation: Arc::clone(&self.derivation),
        })
    }

    pub fn scaled_int(&self, n: i64) -> VectorField {
        VectorField {
            coefficient: self.coefficient.scaled_int(n),
            derivation: Arc::clone(&self.derivation),
        }
    }

    /// The graded commutator of two vector fields over the same derivation,
    /// split into its first-order and second-order parts:
    ///
    /// `[x.D, y.D] = (x D(y) - (-1)^{(|x|+|D|)(|y|+|D|)} y D(x)) . D
    ///             + ((-1)^{|y||D|} - (-1)^{|y||D|+|D|}) (x y) . D^2`
    ///
    /// Both coefficients are returned so callers can observe that the
    /// second-order part vanishes exactly when `D` is even.
    pub fn graded_commutator(&self, other: &VectorField) -> Result<(Element, Element)> {
        self.same_module(other)?;
        let d = &self.derivation;
        let pd = d.parity();
        let sig = self.coefficient.signature().clone();
        let mut first = Element::zero(&sig);
        let mut second = Element::zero(&sig);
        for (xp, px) in self.coefficient.homogeneous_parts() {
            for (yp, py) in other.coefficient.homogeneous_parts() {
                let sign = (px + pd).koszul_sign(py + pd);
                first = &first
                    + &(&(&xp * &d.apply(&yp)?) - &(&yp * &d.apply(&xp)?).scaled_int(sign));
                if pd.is_odd() {
                    // (-1)^{|y|} - (-1)^{|y|+1} = 2 (-1)^{|y|}
                    second = &second + &(&xp * &yp).scaled_int(2 * py.sign());
                }
            }
        }
        Ok((first, second))
    }

    /// The symmetric bracket on the supermodule generated by an odd
    /// derivation:
    ///
    /// `{x.d, y.d} = (x d(y) + (-1)^{(|x|+1)(|y|+1)} y d(x)) . d`
    ///
    /// Taking the plus sign is what cancels the second-order term that the
    /// graded commutator would keep for odd `d`.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        self.same_module(other)?;
        let d = &self.derivation;
        if d.parity().is_even() {
            return Err(Error::OddDerivationRequired);
        }
        let sig = self.coefficient.signature().clone();
        let mut acc = Element::zero(&sig);
        for (xp, px) in self.coefficient.homogeneous_parts() {
            for (yp, py) in other.coefficient.homogeneous_parts() {
                let sign = (px + Parity::ODD).koszul_sign(py + Parity::ODD);
                acc = &acc
                    + &(&(&xp * &d.apply(&yp)?) + &(&yp * &d.apply(&xp)?).scaled_int(sign));
            }
        }
        Ok(VectorField {
            coefficient: acc,
            derivation: Arc::clone(d),
        })
    }

    fn same_module(&self, other: &VectorField) -> Result<()> {
        if Arc::ptr_eq(&self.derivation, &other.derivation)
            || self.derivation == other.derivation
        {
            Ok(())
        } else {
            Err(Error::DerivationMismatch)
        }
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}).d", self.coefficient)
    }
}

/// Module action `z . X`, the free-function spelling of
/// [`VectorField::scaled_by`].
pub fn module_action(z: &Element, x: &VectorField) -> Result<VectorField> {
    x.scaled_by(z)
}

/// Componentwise product on pairs (even part, odd part) of vector fields:
///
/// `(X0, X1) . (Y0, Y1) = ({X0,Y0}, {X0,Y1} + {X1,Y0})`
///
/// The first member of each pair must be an even vector field and the second
/// an odd one.
pub fn jordan_sum_product(
    p: (&VectorField, &VectorField),
    q: (&VectorField, &VectorField),
) -> Result<(VectorField, VectorField)> {
    for even_part in [p.0, q.0] {
        if !even_part.parity().has_parity(Parity::EVEN) {
            return Err(Error::PairParity);
        }
    }
    for odd_part in [p.1, q.1] {
        if !odd_part.parity().has_parity(Parity::ODD) {
            return Err(Error::PairParity);
        }
    }
    let even = p.0.bracket(q.0)?;
    let odd = p.0.bracket(q.1)?.checked_add(&p.1.bracket(q.0)?)?;
    Ok((even, odd))
}
