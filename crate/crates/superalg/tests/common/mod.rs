//! Dense oracle over the 16-dimensional Grassmann algebra on four odd
//! generators. Everything here is written against its own representation
//! (coefficient arrays indexed by bitmask) with its own sign bookkeeping,
//! so it shares no arithmetic with the sparse kernel it cross-checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use std::sync::Arc;

use superalg::{
    AlgebraSignature, Element, EvalStructure, IdentityTemplate, SlotKind, TemplateExpr, Value,
};

pub const DIM: usize = 16;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense element of Lambda(th1..th4): one rational per basis bitmask.
#[derive(Clone, PartialEq, Debug)]
pub struct Dense {
    pub coeffs: Vec<BigRational>,
}

impl Dense {
    pub fn zero() -> Dense {
        Dense {
            coeffs: vec![BigRational::zero(); DIM],
        }
    }

    pub fn basis(mask: usize) -> Dense {
        let mut d = Dense::zero();
        d.coeffs[mask] = rat(1);
        d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Dense) -> Dense {
        Dense {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, n: i64) -> Dense {
        Dense {
            coeffs: self.coeffs.iter().map(|c| c * rat(n)).collect(),
        }
    }

    /// Parity part selected by popcount.
    pub fn part(&self, parity: u32) -> Dense {
        let mut d = Dense::zero();
        for (mask, c) in self.coeffs.iter().enumerate() {
            if mask.count_ones() % 2 == parity {
                d.coeffs[mask] = c.clone();
            }
        }
        d
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        let mut out = Dense::zero();
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                if let Some((mask, sign)) = mul_basis(a, b) {
                    out.coeffs[mask] += ca * cb * rat(sign);
                }
            }
        }
        out
    }
}

/// Multiplies two basis monomials by inserting the factors of `b` one at a
/// time, bubbling each into sorted position and counting the crossings.
pub fn mul_basis(a: usize, b: usize) -> Option<(usize, i64)> {
    let mut acc = a;
    let mut sign = 1i64;
    for j in 0..4 {
        if b >> j & 1 == 0 {
            continue;
        }
        if acc >> j & 1 == 1 {
            return None;
        }
        let mut crossings = 0;
        for k in (j + 1)..4 {
            if acc >> k & 1 == 1 {
                crossings += 1;
            }
        }
        if crossings % 2 == 1 {
            sign = -sign;
        }
        acc |= 1 << j;
    }
    Some((acc, sign))
}

/// Dense derivation: a parity and one dense image per generator, applied by
/// walking the factors of each basis monomial.
#[derive(Clone)]
pub struct DenseDerivation {
    pub parity: u32,
    pub images: Vec<Dense>,
}

impl DenseDerivation {
    pub fn apply(&self, e: &Dense) -> Dense {
        let mut out = Dense::zero();
        for (mask, c) in e.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let applied = self.apply_basis(mask);
            for (m, q) in applied.coeffs.iter().enumerate() {
                out.coeffs[m] += q * c;
            }
        }
        out
    }

    fn apply_basis(&self, mask: usize) -> Dense {
        let factors: Vec<usize> = (0..4).filter(|j| mask >> j & 1 == 1).collect();
        let mut out = Dense::zero();
        for (r, &j) in factors.iter().enumerate() {
            let mut term = Dense::basis(0);
            if self.parity == 1 && r % 2 == 1 {
                term = term.scaled(-1);
            }
            for &i in &factors[..r] {
                term = term.mul(&Dense::basis(1 << i));
            }
            term = term.mul(&self.images[j]);
            for &i in &factors[r + 1..] {
                term = term.mul(&Dense::basis(1 << i));
            }
            out = out.add(&term);
        }
        out
    }
}

fn koszul(p: u32, q: u32) -> i64 {
    if p % 2 == 1 && q % 2 == 1 {
        -1
    } else {
        1
    }
}

/// Bilinear extension of `x D(y) -/+ (-1)^{|x||y|} y D(x)` over parity parts.
pub fn dense_bracket(d: &DenseDerivation, x: &Dense, y: &Dense, reflip: i64) -> Dense {
    let mut acc = Dense::zero();
    for px in 0..2u32 {
        for py in 0..2u32 {
            let (xp, yp) = (x.part(px), y.part(py));
            if xp.is_zero() || yp.is_zero() {
                continue;
            }
            let sign = reflip * koszul(px, py);
            acc = acc.add(&xp.mul(&d.apply(&yp)));
            acc = acc.add(&yp.mul(&d.apply(&xp)).scaled(sign));
        }
    }
    acc
}

pub fn dense_ternary(
    bracket: &DenseDerivation,
    ternary: &DenseDerivation,
    x: &Dense,
    y: &Dense,
    z: &Dense,
) -> Dense {
    let mut acc = Dense::zero();
    for px in 0..2u32 {
        for py in 0..2u32 {
            for pz in 0..2u32 {
                let (xp, yp, zp) = (x.part(px), y.part(py), z.part(pz));
                if xp.is_zero() || yp.is_zero() || zp.is_zero() {
                    continue;
                }
                let s1 = koszul(px, py) * koszul(px, pz);
                let s2 = koszul(px, pz) * koszul(py, pz);
                let t1 = ternary.apply(&xp).mul(&dense_bracket(bracket, &yp, &zp, -1));
                let t2 = ternary
                    .apply(&yp)
                    .mul(&dense_bracket(bracket, &zp, &xp, -1))
                    .scaled(s1);
                let t3 = ternary
                    .apply(&zp)
                    .mul(&dense_bracket(bracket, &xp, &yp, -1))
                    .scaled(s2);
                acc = acc.add(&t1).add(&t2).add(&t3);
            }
        }
    }
    acc
}

/// Coefficient of `{x.d, y.d}` for an odd dense derivation.
pub fn dense_vf_bracket(d: &DenseDerivation, x: &Dense, y: &Dense) -> Dense {
    assert_eq!(d.parity, 1);
    let mut acc = Dense::zero();
    for px in 0..2u32 {
        for py in 0..2u32 {
            let (xp, yp) = (x.part(px), y.part(py));
            if xp.is_zero() || yp.is_zero() {
                continue;
            }
            let sign = koszul(px + 1, py + 1);
            acc = acc.add(&xp.mul(&d.apply(&yp)));
            acc = acc.add(&yp.mul(&d.apply(&xp)).scaled(sign));
        }
    }
    acc
}

/// Dense counterpart of a template evaluation structure.
pub struct DenseStructure {
    pub bracket: Option<DenseDerivation>,
    pub ternary: Option<DenseDerivation>,
    pub delta: Option<DenseDerivation>,
}

/// Dense values: elements, or vector-field coefficients over the dense
/// delta.
#[derive(Clone, Debug, PartialEq)]
pub enum DenseValue {
    Element(Dense),
    VectorField(Dense),
}

impl DenseValue {
    fn scaled(&self, n: i64) -> DenseValue {
        match self {
            DenseValue::Element(d) => DenseValue::Element(d.scaled(n)),
            DenseValue::VectorField(d) => DenseValue::VectorField(d.scaled(n)),
        }
    }

    fn add(&self, other: &DenseValue) -> DenseValue {
        match (self, other) {
            (DenseValue::Element(a), DenseValue::Element(b)) => DenseValue::Element(a.add(b)),
            (DenseValue::VectorField(a), DenseValue::VectorField(b)) => {
                DenseValue::VectorField(a.add(b))
            }
            _ => panic!("mixed carriers"),
        }
    }
}

/// Evaluates a template over the dense representation. The sign exponents
/// are evaluated with the same `SignExpr` data, but every algebraic
/// operation routes through the dense tables above.
pub fn dense_evaluate(
    template: &IdentityTemplate,
    structure: &DenseStructure,
    inputs: &[DenseValue],
) -> DenseValue {
    use superalg::Parity;
    let parities: Vec<Parity> = inputs
        .iter()
        .map(|v| {
            let (d, shift) = match v {
                DenseValue::Element(d) => (d, 0),
                // |x.delta| = |x| + 1
                DenseValue::VectorField(d) => (d, 1),
            };
            let mut parity = None;
            for (mask, c) in d.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let p = mask.count_ones() % 2;
                match parity {
                    None => parity = Some(p),
                    Some(q) => assert_eq!(p, q, "inhomogeneous dense input"),
                }
            }
            Parity::from_u32(parity.unwrap_or(0) + shift)
        })
        .collect();

    let mut residual: Option<DenseValue> = None;
    for term in &template.terms {
        let v = eval_expr(&term.expr, structure, inputs);
        let sign = term.sign.eval(&parities).sign();
        let signed = v.scaled(term.coefficient * sign);
        residual = Some(match residual {
            None => signed,
            Some(acc) => acc.add(&signed),
        });
    }
    residual.expect("template has terms")
}

fn eval_expr(expr: &TemplateExpr, st: &DenseStructure, inputs: &[DenseValue]) -> DenseValue {
    use TemplateExpr::*;
    match expr {
        Slot(i) => inputs[*i].clone(),
        Product(a, b) => {
            let (a, b) = (eval_el(a, st, inputs), eval_el(b, st, inputs));
            DenseValue::Element(a.mul(&b))
        }
        Bracket(a, b) => {
            let (a, b) = (eval_el(a, st, inputs), eval_el(b, st, inputs));
            DenseValue::Element(dense_bracket(st.bracket.as_ref().unwrap(), &a, &b, -1))
        }
        PseudoBracket(a, b) => {
            let (a, b) = (eval_el(a, st, inputs), eval_el(b, st, inputs));
            DenseValue::Element(dense_bracket(st.bracket.as_ref().unwrap(), &a, &b, 1))
        }
        DerivationApply(a) => {
            let a = eval_el(a, st, inputs);
            DenseValue::Element(st.ternary.as_ref().unwrap().apply(&a))
        }
        Ternary(a, b, c) => {
            let (a, b, c) = (
                eval_el(a, st, inputs),
                eval_el(b, st, inputs),
                eval_el(c, st, inputs),
            );
            DenseValue::Element(dense_ternary(
                st.bracket.as_ref().unwrap(),
                st.ternary.as_ref().unwrap(),
                &a,
                &b,
                &c,
            ))
        }
        VfBracket(a, b) => {
            let (a, b) = (eval_vf(a, st, inputs), eval_vf(b, st, inputs));
            DenseValue::VectorField(dense_vf_bracket(st.delta.as_ref().unwrap(), &a, &b))
        }
        ModuleAction(a, b) => {
            let (a, b) = (eval_el(a, st, inputs), eval_vf(b, st, inputs));
            DenseValue::VectorField(a.mul(&b))
        }
    }
}

fn eval_el(e: &TemplateExpr, st: &DenseStructure, inputs: &[DenseValue]) -> Dense {
    match eval_expr(e, st, inputs) {
        DenseValue::Element(d) => d,
        DenseValue::VectorField(_) => panic!("expected element"),
    }
}

fn eval_vf(e: &TemplateExpr, st: &DenseStructure, inputs: &[DenseValue]) -> Dense {
    match eval_expr(e, st, inputs) {
        DenseValue::VectorField(d) => d,
        DenseValue::Element(_) => panic!("expected vector field"),
    }
}

/// The signature Lambda(th1..th4) shared by the sparse side of the oracle
/// comparison.
pub fn grassmann4() -> Arc<AlgebraSignature> {
    AlgebraSignature::make(&[], &["th1", "th2", "th3", "th4"])
}

/// Sparse element for a basis bitmask.
pub fn sparse_basis(sig: &Arc<AlgebraSignature>, mask: usize) -> Element {
    let mut e = Element::one(sig);
    for j in 0..4 {
        if mask >> j & 1 == 1 {
            let name = format!("th{}", j + 1);
            e = e.checked_mul(&Element::generator(sig, &name).unwrap()).unwrap();
        }
    }
    e
}

/// Converts a sparse kernel element (over `grassmann4`) to dense form.
pub fn to_dense(e: &Element) -> Dense {
    let mut d = Dense::zero();
    for (m, c) in e.terms() {
        assert!(m.even_exponents().iter().all(|&x| x == 0));
        let mut mask = 0usize;
        for &j in m.odd_factors() {
            mask |= 1 << j;
        }
        d.coeffs[mask] = c.clone();
    }
    d
}

pub fn value_to_dense(v: &Value) -> DenseValue {
    match v {
        Value::Element(e) => DenseValue::Element(to_dense(e)),
        Value::VectorField(vf) => DenseValue::VectorField(to_dense(vf.coefficient())),
    }
}

/// Every slot-kind-respecting basis tuple for a template of arity <= 3,
/// paired between the sparse and dense sides. Slots with a pinned parity
/// only enumerate matching basis monomials.
pub fn basis_tuples(
    template: &IdentityTemplate,
    sig: &Arc<AlgebraSignature>,
    structure: &EvalStructure,
) -> Vec<(Vec<Value>, Vec<DenseValue>)> {
    let mut per_slot: Vec<Vec<(Value, DenseValue)>> = Vec::new();
    for slot in &template.slots {
        let mut options = Vec::new();
        for mask in 0..DIM {
            let parity_u = mask.count_ones() % 2;
            match slot.kind {
                SlotKind::Element => {
                    if let Some(p) = slot.parity {
                        if p.as_u8() as u32 != parity_u {
                            continue;
                        }
                    }
                    options.push((
                        Value::Element(sparse_basis(sig, mask)),
                        DenseValue::Element(Dense::basis(mask)),
                    ));
                }
                SlotKind::VectorField => {
                    let delta = structure.delta().expect("delta required");
                    if let Some(p) = slot.parity {
                        if (parity_u + 1) % 2 != p.as_u8() as u32 {
                            continue;
                        }
                    }
                    let coeff = sparse_basis(sig, mask);
                    options.push((
                        Value::VectorField(
                            superalg::VectorField::new(coeff, delta).unwrap(),
                        ),
                        DenseValue::VectorField(Dense::basis(mask)),
                    ));
                }
            }
        }
        per_slot.push(options);
    }

    let mut tuples = vec![(Vec::new(), Vec::new())];
    for options in &per_slot {
        let mut next = Vec::with_capacity(tuples.len() * options.len());
        for (sp, de) in &tuples {
            for (v, d) in options {
                let mut sp = sp.clone();
                let mut de = de.clone();
                sp.push(v.clone());
                de.push(d.clone());
                next.push((sp, de));
            }
        }
        tuples = next;
    }
    tuples
}
