//! A template language for graded multilinear identities, an exact residual
//! evaluator, a seeded sampler for homogeneous inputs, and an exhaustive
//! counterexample search. The built-in catalog covers every identity the
//! rest of the crate constructs brackets for.

mod catalog;
mod sampler;
mod search;
mod verify;

pub use catalog::builtin_catalog;
pub use sampler::{sample_tuple, SamplerConfig};
pub use search::{search_counterexample, SearchBounds, SearchOutcome};
pub use verify::{verify, VerificationReport, VerificationStatus, Violation};

use std::fmt;
use std::sync::Arc;

use crate::brackets::TPStructure;
use crate::derivation::Derivation;
use crate::element::Element;
use crate::error::{Error, Result};
use crate::parity::{Parity, ParityClass};
use crate::signature::{same_signature, AlgebraSignature};
use crate::vector_field::VectorField;

/// What kind of value a template slot takes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SlotKind {
    Element,
    VectorField,
}

impl SlotKind {
    fn name(self) -> &'static str {
        match self {
            SlotKind::Element => "element",
            SlotKind::VectorField => "vector field",
        }
    }
}

/// One slot of an identity template. A fixed parity restricts the slot to
/// homogeneous inputs of that parity; `None` means both parities are swept.
#[derive(Clone, Debug)]
pub struct SlotSpec {
    pub kind: SlotKind,
    pub parity: Option<Parity>,
    pub label: &'static str,
}

impl SlotSpec {
    pub fn element(label: &'static str) -> SlotSpec {
        SlotSpec {
            kind: SlotKind::Element,
            parity: None,
            label,
        }
    }

    pub fn vector_field(label: &'static str) -> SlotSpec {
        SlotSpec {
            kind: SlotKind::VectorField,
            parity: None,
            label,
        }
    }

    pub fn vector_field_of(label: &'static str, parity: Parity) -> SlotSpec {
        SlotSpec {
            kind: SlotKind::VectorField,
            parity: Some(parity),
            label,
        }
    }
}

/// A formal sum (mod 2) of products of slot parities: the exponent of the
/// Koszul sign in front of a template term. Each inner list multiplies the
/// parities of the named slots; the empty product is the constant 1.
#[derive(Clone, Debug, Default)]
pub struct SignExpr {
    products: Vec<Vec<usize>>,
}

impl SignExpr {
    /// The exponent 0: no sign.
    pub fn zero() -> SignExpr {
        SignExpr { products: vec![] }
    }

    /// A single product of slot parities, e.g. `product(&[0, 2])` is |x||z|.
    pub fn product(slots: &[usize]) -> SignExpr {
        SignExpr {
            products: vec![slots.to_vec()],
        }
    }

    /// A product of sums of slot parities, expanded: e.g.
    /// `product_of_sums(&[&[1, 2], &[3, 4]])` is (|y|+|z|)(|u|+|v|).
    pub fn product_of_sums(factors: &[&[usize]]) -> SignExpr {
        let mut products: Vec<Vec<usize>> = vec![vec![]];
        for factor in factors {
            let mut next = Vec::with_capacity(products.len() * factor.len());
            for p in &products {
                for &s in *factor {
                    let mut q = p.clone();
                    q.push(s);
                    next.push(q);
                }
            }
            products = next;
        }
        SignExpr { products }
    }

    /// The mod-2 sum of several exponents.
    pub fn sum(parts: &[SignExpr]) -> SignExpr {
        SignExpr {
            products: parts.iter().flat_map(|p| p.products.clone()).collect(),
        }
    }

    /// Evaluates the exponent on concrete slot parities.
    pub fn eval(&self, parities: &[Parity]) -> Parity {
        let mut acc = Parity::EVEN;
        for p in &self.products {
            let mut prod = Parity::ODD; // neutral for multiplication mod 2
            for &slot in p {
                if parities[slot].is_even() {
                    prod = Parity::EVEN;
                    break;
                }
            }
            acc = acc + prod;
        }
        acc
    }

    fn max_slot(&self) -> Option<usize> {
        self.products.iter().flatten().copied().max()
    }
}

/// Expression tree of one template term. Slots are referenced by index; the
/// operations are the ones the bracket constructors provide.
#[derive(Clone, Debug)]
pub enum TemplateExpr {
    Slot(usize),
    /// Product in the superalgebra.
    Product(Box<TemplateExpr>, Box<TemplateExpr>),
    /// Bracket generated by the structure's bracket derivation.
    Bracket(Box<TemplateExpr>, Box<TemplateExpr>),
    /// Sign-flipped bracket; negative control only.
    PseudoBracket(Box<TemplateExpr>, Box<TemplateExpr>),
    /// The structure's ternary derivation applied to an element.
    DerivationApply(Box<TemplateExpr>),
    /// Ternary bracket from the structure's ternary derivation.
    Ternary(Box<TemplateExpr>, Box<TemplateExpr>, Box<TemplateExpr>),
    /// Symmetric bracket on vector fields over the structure's odd
    /// derivation.
    VfBracket(Box<TemplateExpr>, Box<TemplateExpr>),
    /// Module action of an element on a vector field.
    ModuleAction(Box<TemplateExpr>, Box<TemplateExpr>),
}

/// One signed term of an identity, `coefficient * (-1)^{sign} * expr`.
#[derive(Clone, Debug)]
pub struct TemplateTerm {
    pub coefficient: i64,
    pub sign: SignExpr,
    pub expr: TemplateExpr,
}

/// A graded multilinear identity in residual form: the identity holds on an
/// input tuple exactly when the signed sum of its terms evaluates to zero.
#[derive(Clone, Debug)]
pub struct IdentityTemplate {
    pub name: String,
    pub description: String,
    pub slots: Vec<SlotSpec>,
    pub terms: Vec<TemplateTerm>,
    /// Gate for identities that are only asserted for square-zero odd
    /// derivations.
    pub requires_square_zero_delta: bool,
    /// Free-text notes copied into every report on this template.
    pub notes: Vec<String>,
}

impl IdentityTemplate {
    pub fn arity(&self) -> usize {
        self.slots.len()
    }

    /// Checks slot references and operation typing; returns the carrier
    /// kind every term evaluates into.
    pub fn validate(&self) -> Result<SlotKind> {
        if self.slots.is_empty() || self.terms.is_empty() {
            return Err(Error::IllTypedTemplate("empty template".into()));
        }
        let mut carrier: Option<SlotKind> = None;
        for term in &self.terms {
            if let Some(max) = term.sign.max_slot() {
                if max >= self.slots.len() {
                    return Err(Error::IllTypedTemplate(format!(
                        "sign exponent references slot {max}"
                    )));
                }
            }
            let kind = self.expr_kind(&term.expr)?;
            match carrier {
                None => carrier = Some(kind),
                Some(k) if k == kind => {}
                Some(_) => {
                    return Err(Error::IllTypedTemplate(
                        "terms land in different carriers".into(),
                    ))
                }
            }
        }
        Ok(carrier.expect("nonempty terms"))
    }

    fn expr_kind(&self, e: &TemplateExpr) -> Result<SlotKind> {
        use TemplateExpr::*;
        let el = SlotKind::Element;
        let vf = SlotKind::VectorField;
        match e {
            Slot(i) => self
                .slots
                .get(*i)
                .map(|s| s.kind)
                .ok_or_else(|| Error::IllTypedTemplate(format!("unknown slot {i}"))),
            Product(a, b) | Bracket(a, b) | PseudoBracket(a, b) => {
                self.expect_kind(a, el)?;
                self.expect_kind(b, el)?;
                Ok(el)
            }
            DerivationApply(a) => {
                self.expect_kind(a, el)?;
                Ok(el)
            }
            Ternary(a, b, c) => {
                self.expect_kind(a, el)?;
                self.expect_kind(b, el)?;
                self.expect_kind(c, el)?;
                Ok(el)
            }
            VfBracket(a, b) => {
                self.expect_kind(a, vf)?;
                self.expect_kind(b, vf)?;
                Ok(vf)
            }
            ModuleAction(a, b) => {
                self.expect_kind(a, el)?;
                self.expect_kind(b, vf)?;
                Ok(vf)
            }
        }
    }

    fn expect_kind(&self, e: &TemplateExpr, want: SlotKind) -> Result<()> {
        let got = self.expr_kind(e)?;
        if got == want {
            Ok(())
        } else {
            Err(Error::IllTypedTemplate(format!(
                "expected {}, found {}",
                want.name(),
                got.name()
            )))
        }
    }
}

/// A runtime value flowing through template evaluation.
#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Element(Element),
    VectorField(VectorField),
}

impl Value {
    pub fn kind(&self) -> SlotKind {
        match self {
            Value::Element(_) => SlotKind::Element,
            Value::VectorField(_) => SlotKind::VectorField,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Element(e) => e.is_zero(),
            Value::VectorField(v) => v.is_zero(),
        }
    }

    pub fn parity(&self) -> ParityClass {
        match self {
            Value::Element(e) => e.parity(),
            Value::VectorField(v) => v.parity(),
        }
    }

    pub fn as_element(&self) -> Option<&Element> {
        match self {
            Value::Element(e) => Some(e),
            Value::VectorField(_) => None,
        }
    }

    pub fn as_vector_field(&self) -> Option<&VectorField> {
        match self {
            Value::Element(_) => None,
            Value::VectorField(v) => Some(v),
        }
    }

    fn scaled_int(&self, n: i64) -> Value {
        match self {
            Value::Element(e) => Value::Element(e.scaled_int(n)),
            Value::VectorField(v) => Value::VectorField(v.scaled_int(n)),
        }
    }

    fn checked_add(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Element(a), Value::Element(b)) => Ok(Value::Element(a.checked_add(b)?)),
            (Value::VectorField(a), Value::VectorField(b)) => {
                Ok(Value::VectorField(a.checked_add(b)?))
            }
            _ => Err(Error::IllTypedTemplate(
                "terms land in different carriers".into(),
            )),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Element(e) => write!(f, "{e}"),
            Value::VectorField(v) => write!(f, "({})*delta", v.coefficient()),
        }
    }
}

/// The structure an identity is evaluated over: a bracket structure for
/// element-valued templates, an odd derivation generating the vector-field
/// module for module-valued ones, or both.
#[derive(Clone)]
pub struct EvalStructure {
    tp: Option<TPStructure>,
    delta: Option<Arc<Derivation>>,
    signature: Arc<AlgebraSignature>,
    description: String,
}

impl EvalStructure {
    pub fn new(tp: Option<TPStructure>, delta: Option<Arc<Derivation>>) -> Result<EvalStructure> {
        let signature = match (&tp, &delta) {
            (Some(t), Some(d)) => {
                if !same_signature(t.signature(), d.signature()) {
                    return Err(Error::SignatureMismatch);
                }
                t.signature().clone()
            }
            (Some(t), None) => t.signature().clone(),
            (None, Some(d)) => d.signature().clone(),
            (None, None) => {
                return Err(Error::Precondition(
                    "structure needs a bracket derivation or a module derivation".into(),
                ))
            }
        };
        Ok(EvalStructure {
            tp,
            delta,
            signature,
            description: String::from("unnamed structure"),
        })
    }

    pub fn from_tp(tp: TPStructure) -> EvalStructure {
        EvalStructure::new(Some(tp), None).expect("tp structure present")
    }

    pub fn from_delta(delta: Arc<Derivation>) -> EvalStructure {
        EvalStructure::new(None, Some(delta)).expect("delta present")
    }

    pub fn with_description(mut self, description: impl Into<String>) -> EvalStructure {
        self.description = description.into();
        self
    }

    pub fn tp(&self) -> Option<&TPStructure> {
        self.tp.as_ref()
    }

    pub fn delta(&self) -> Option<&Arc<Derivation>> {
        self.delta.as_ref()
    }

    pub fn signature(&self) -> &Arc<AlgebraSignature> {
        &self.signature
    }

    pub fn description(&self) -> &str {
        &self.description
    }
}

/// Evaluates the residual of `template` on one tuple of homogeneous inputs.
/// The result is zero exactly when the identity holds on that tuple.
pub fn evaluate(
    template: &IdentityTemplate,
    structure: &EvalStructure,
    inputs: &[Value],
) -> Result<Value> {
    let carrier = template.validate()?;
    if inputs.len() != template.arity() {
        return Err(Error::Arity {
            name: template.name.clone(),
            arity: template.arity(),
        });
    }

    let mut parities = Vec::with_capacity(inputs.len());
    for (i, (slot, value)) in template.slots.iter().zip(inputs).enumerate() {
        if value.kind() != slot.kind {
            return Err(Error::SlotKind {
                slot: i,
                expected: slot.kind.name(),
            });
        }
        if let Value::VectorField(v) = value {
            let delta = structure.delta().ok_or(Error::MissingDelta)?;
            if !Arc::ptr_eq(v.derivation(), delta) && v.derivation() != delta {
                return Err(Error::DerivationMismatch);
            }
        }
        let class = value.parity();
        if !class.is_homogeneous() {
            return Err(Error::InhomogeneousInput);
        }
        if let Some(p) = slot.parity {
            if !class.has_parity(p) {
                return Err(Error::SlotParity {
                    slot: i,
                    expected: p,
                });
            }
        }
        // A zero input is compatible with both parities; any choice gives
        // the same residual because every term is linear in every slot.
        let fallback = slot.parity.unwrap_or(Parity::EVEN);
        parities.push(class.parity_or(fallback).expect("homogeneous"));
    }

    let mut residual = zero_value(carrier, structure)?;
    for term in &template.terms {
        let value = eval_expr(&term.expr, structure, inputs)?;
        let sign = term.sign.eval(&parities).sign();
        residual = residual.checked_add(&value.scaled_int(term.coefficient * sign))?;
    }
    Ok(residual)
}

fn zero_value(kind: SlotKind, structure: &EvalStructure) -> Result<Value> {
    match kind {
        SlotKind::Element => Ok(Value::Element(Element::zero(structure.signature()))),
        SlotKind::VectorField => {
            let delta = structure.delta().ok_or(Error::MissingDelta)?;
            Ok(Value::VectorField(VectorField::zero(delta)))
        }
    }
}

fn eval_expr(
    expr: &TemplateExpr,
    structure: &EvalStructure,
    inputs: &[Value],
) -> Result<Value> {
    use TemplateExpr::*;
    match expr {
        Slot(i) => Ok(inputs[*i].clone()),
        Product(a, b) => {
            let a = eval_element(a, structure, inputs)?;
            let b = eval_element(b, structure, inputs)?;
            Ok(Value::Element(a.checked_mul(&b)?))
        }
        Bracket(a, b) => {
            let tp = structure.tp().ok_or(Error::MissingBracketSource)?;
            let a = eval_element(a, structure, inputs)?;
            let b = eval_element(b, structure, inputs)?;
            Ok(Value::Element(tp.bracket(&a, &b)?))
        }
        PseudoBracket(a, b) => {
            let tp = structure.tp().ok_or(Error::MissingBracketSource)?;
            let a = eval_element(a, structure, inputs)?;
            let b = eval_element(b, structure, inputs)?;
            Ok(Value::Element(tp.pseudo_bracket(&a, &b)?))
        }
        DerivationApply(a) => {
            let tp = structure.tp().ok_or(Error::MissingBracketSource)?;
            let t = tp.ternary_source().ok_or(Error::MissingTernarySource)?;
            let a = eval_element(a, structure, inputs)?;
            Ok(Value::Element(t.apply(&a)?))
        }
        Ternary(a, b, c) => {
            let tp = structure.tp().ok_or(Error::MissingBracketSource)?;
            let a = eval_element(a, structure, inputs)?;
            let b = eval_element(b, structure, inputs)?;
            let c = eval_element(c, structure, inputs)?;
            Ok(Value::Element(tp.ternary(&a, &b, &c)?))
        }
        VfBracket(a, b) => {
            let a = eval_vf(a, structure, inputs)?;
            let b = eval_vf(b, structure, inputs)?;
            Ok(Value::VectorField(a.bracket(&b)?))
        }
        ModuleAction(a, b) => {
            let a = eval_element(a, structure, inputs)?;
            let b = eval_vf(b, structure, inputs)?;
            Ok(Value::VectorField(b.scaled_by(&a)?))
        }
    }
}

fn eval_element(
    expr: &TemplateExpr,
    structure: &EvalStructure,
    inputs: &[Value],
) -> Result<Element> {
    match eval_expr(expr, structure, inputs)? {
        Value::Element(e) => Ok(e),
        Value::VectorField(_) => Err(Error::IllTypedTemplate(
            "expected an element subexpression".into(),
        )),
    }
}

fn eval_vf(
    expr: &TemplateExpr,
    structure: &EvalStructure,
    inputs: &[Value],
) -> Result<VectorField> {
    match eval_expr(expr, structure, inputs)? {
        Value::Element(_) => Err(Error::IllTypedTemplate(
            "expected a vector-field subexpression".into(),
        )),
        Value::VectorField(v) => Ok(v),
    }
}
