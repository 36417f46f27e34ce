//! Recursive-descent parser for the spec-file language.
//!
//! ```text
//! spec       := stmt* ;
//! stmt       := algebra | derivation | letdef ;
//! algebra    := "algebra" IDENT "{" "even" IDENT* ";" "odd" IDENT* ";" "}" ;
//! derivation := "derivation" IDENT ("even"|"odd") "on" IDENT
//!               "{" (IDENT "->" expr ";")* "}" ;
//! letdef     := "let" IDENT "=" expr ";" ;
//! expr       := term (("+"|"-") term)* ;
//! term       := factor ("*" factor)* ;
//! factor     := RATIONAL | IDENT ("^" NAT)? | "(" expr ")" ;
//! RATIONAL   := integer ("/" positive-integer)? ;
//! ```
//!
//! Whitespace is insignificant, `#` starts a line comment, `*` is mandatory
//! between factors. The lexer keeps numbers unsigned; the sign of a RATIONAL
//! is handled at factor position, which is what lets `t - 3` read as a
//! binary minus while `-3*t` still parses.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use superalg::{AlgebraSignature, Derivation, Element, Error as KernelError, Parity};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

/// A positioned parse or resolution error.
#[derive(Clone, Debug)]
pub struct ParseError {
    pub pos: Pos,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: Pos, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        pos,
        message: message.into(),
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Ident(String),
    Number(String),
    KwAlgebra,
    KwDerivation,
    KwLet,
    KwEven,
    KwOdd,
    KwOn,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Semi,
    Star,
    Plus,
    Minus,
    Slash,
    Caret,
    Equals,
    Arrow,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::KwAlgebra => "`algebra`".into(),
            Tok::KwDerivation => "`derivation`".into(),
            Tok::KwLet => "`let`".into(),
            Tok::KwEven => "`even`".into(),
            Tok::KwOdd => "`odd`".into(),
            Tok::KwOn => "`on`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Semi => "`;`".into(),
            Tok::Star => "`*`".into(),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Slash => "`/`".into(),
            Tok::Caret => "`^`".into(),
            Tok::Equals => "`=`".into(),
            Tok::Arrow => "`->`".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();

    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '#' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                    col += 1;
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut word = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() || c == '_' {
                        word.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                let tok = match word.as_str() {
                    "algebra" => Tok::KwAlgebra,
                    "derivation" => Tok::KwDerivation,
                    "let" => Tok::KwLet,
                    "even" => Tok::KwEven,
                    "odd" => Tok::KwOdd,
                    "on" => Tok::KwOn,
                    _ => Tok::Ident(word),
                };
                tokens.push((tok, pos));
            }
            c if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_digit() {
                        digits.push(c);
                        chars.next();
                        col += 1;
                    } else {
                        break;
                    }
                }
                tokens.push((Tok::Number(digits), pos));
            }
            _ => {
                chars.next();
                col += 1;
                let tok = match c {
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ';' => Tok::Semi,
                    '*' => Tok::Star,
                    '+' => Tok::Plus,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '=' => Tok::Equals,
                    '-' => {
                        if chars.peek() == Some(&'>') {
                            chars.next();
                            col += 1;
                            Tok::Arrow
                        } else {
                            Tok::Minus
                        }
                    }
                    other => return err(pos, format!("unexpected character `{other}`")),
                };
                tokens.push((tok, pos));
            }
        }
    }
    Ok(tokens)
}

#[derive(Clone, Debug)]
enum ExprAst {
    Rational(BigRational),
    Name(String, Pos),
    Pow(String, Pos, u32),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
}

impl ExprAst {
    fn names<'a>(&'a self, out: &mut Vec<(&'a str, Pos)>) {
        match self {
            ExprAst::Rational(_) => {}
            ExprAst::Name(n, p) | ExprAst::Pow(n, p, _) => out.push((n, *p)),
            ExprAst::Mul(a, b) | ExprAst::Add(a, b) | ExprAst::Sub(a, b) => {
                a.names(out);
                b.names(out);
            }
        }
    }
}

/// Everything a spec file declares, with derivation parities validated and
/// `let` expressions already evaluated to canonical elements.
#[derive(Clone, Debug, Default)]
pub struct SpecModel {
    pub algebras: Vec<(String, Arc<AlgebraSignature>)>,
    pub derivations: Vec<(String, String, Arc<Derivation>)>,
    pub elements: Vec<(String, Element)>,
}

impl SpecModel {
    pub fn algebra(&self, name: &str) -> Option<&Arc<AlgebraSignature>> {
        self.algebras
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, a)| a)
    }

    pub fn derivation(&self, name: &str) -> Option<&Arc<Derivation>> {
        self.derivations
            .iter()
            .find(|(n, _, _)| n == name)
            .map(|(_, _, d)| d)
    }

    pub fn element(&self, name: &str) -> Option<&Element> {
        self.elements
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e)
    }

    fn name_in_use(&self, name: &str) -> bool {
        self.algebra(name).is_some()
            || self.derivation(name).is_some()
            || self.element(name).is_some()
    }

    fn generator_somewhere(&self, name: &str) -> bool {
        self.algebras
            .iter()
            .any(|(_, sig)| sig.generator(name).is_some())
    }
}

struct Parser<'a> {
    tokens: &'a [(Tok, Pos)],
    index: usize,
    end: Pos,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.index).map(|(t, _)| t)
    }

    fn pos(&self) -> Pos {
        self.tokens
            .get(self.index)
            .map(|(_, p)| *p)
            .unwrap_or(self.end)
    }

    fn next(&mut self) -> Option<(Tok, Pos)> {
        let t = self.tokens.get(self.index).cloned();
        self.index += 1;
        t
    }

    fn found(&self) -> String {
        match self.tokens.get(self.index) {
            Some((t, _)) => format!("found {}", t.describe()),
            None => "found end of input".into(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<Pos, ParseError> {
        match self.tokens.get(self.index) {
            Some((t, p)) if *t == tok => {
                self.index += 1;
                Ok(*p)
            }
            _ => err(
                self.pos(),
                format!("expected {}, {}", tok.describe(), self.found()),
            ),
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, Pos), ParseError> {
        match self.tokens.get(self.index) {
            Some((Tok::Ident(name), p)) => {
                let out = (name.clone(), *p);
                self.index += 1;
                Ok(out)
            }
            _ => err(
                self.pos(),
                format!("expected {what} identifier, {}", self.found()),
            ),
        }
    }

    fn number(&mut self, what: &str) -> Result<(BigInt, Pos), ParseError> {
        match self.tokens.get(self.index) {
            Some((Tok::Number(digits), p)) => {
                let out = (digits.parse::<BigInt>().unwrap(), *p);
                self.index += 1;
                Ok(out)
            }
            _ => err(self.pos(), format!("expected {what}, {}", self.found())),
        }
    }

    /// RATIONAL := integer ("/" positive-integer)?; the sign was consumed by
    /// the caller.
    fn rational_tail(&mut self, numerator: BigInt) -> Result<BigRational, ParseError> {
        if self.peek() == Some(&Tok::Slash) {
            self.next();
            let (den, pos) = self.number("positive denominator")?;
            if den == BigInt::from(0) {
                return err(pos, "denominator must be a positive integer");
            }
            Ok(BigRational::new(numerator, den))
        } else {
            Ok(BigRational::from_integer(numerator))
        }
    }

    fn expr(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    acc = ExprAst::Add(Box::new(acc), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.next();
                    acc = ExprAst::Sub(Box::new(acc), Box::new(self.term()?));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<ExprAst, ParseError> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.next();
            acc = ExprAst::Mul(Box::new(acc), Box::new(self.factor()?));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<ExprAst, ParseError> {
        match self.tokens.get(self.index).cloned() {
            Some((Tok::Minus, _)) => {
                // negative RATIONAL literal
                self.next();
                let (n, _) = self.number("number after `-`")?;
                Ok(ExprAst::Rational(-self.rational_tail(n)?))
            }
            Some((Tok::Number(_), _)) => {
                let (n, _) = self.number("number")?;
                Ok(ExprAst::Rational(self.rational_tail(n)?))
            }
            Some((Tok::Ident(name), p)) => {
                self.next();
                if self.peek() == Some(&Tok::Caret) {
                    self.next();
                    let (exp, epos) = self.number("exponent")?;
                    let exp: u32 = exp
                        .try_into()
                        .map_err(|_| ParseError {
                            pos: epos,
                            message: "exponent is too large".into(),
                        })?;
                    Ok(ExprAst::Pow(name, p, exp))
                } else {
                    Ok(ExprAst::Name(name, p))
                }
            }
            Some((Tok::LParen, _)) => {
                self.next();
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(inner)
            }
            _ => err(
                self.pos(),
                format!(
                    "expected a rational, an identifier or `(`, {}",
                    self.found()
                ),
            ),
        }
    }

    fn ident_list(&mut self) -> Vec<(String, Pos)> {
        let mut names = Vec::new();
        while let Some(Tok::Ident(_)) = self.peek() {
            if let Some((Tok::Ident(n), p)) = self.next() {
                names.push((n, p));
            }
        }
        names
    }
}

/// Evaluates an expression against one concrete algebra. Identifiers
/// resolve to generators first, then to `let`-bound elements of the same
/// algebra.
fn eval_in(
    ast: &ExprAst,
    sig: &Arc<AlgebraSignature>,
    model: &SpecModel,
) -> Result<Element, ParseError> {
    match ast {
        ExprAst::Rational(q) => Ok(Element::constant(sig, q.clone())),
        ExprAst::Name(name, pos) => resolve_name(name, *pos, sig, model),
        ExprAst::Pow(name, pos, exp) => Ok(resolve_name(name, *pos, sig, model)?.pow(*exp)),
        ExprAst::Mul(a, b) => Ok(&eval_in(a, sig, model)? * &eval_in(b, sig, model)?),
        ExprAst::Add(a, b) => Ok(&eval_in(a, sig, model)? + &eval_in(b, sig, model)?),
        ExprAst::Sub(a, b) => Ok(&eval_in(a, sig, model)? - &eval_in(b, sig, model)?),
    }
}

fn resolve_name(
    name: &str,
    pos: Pos,
    sig: &Arc<AlgebraSignature>,
    model: &SpecModel,
) -> Result<Element, ParseError> {
    if sig.generator(name).is_some() {
        return Element::generator(sig, name).map_err(|e| ParseError {
            pos,
            message: e.to_string(),
        });
    }
    if let Some(e) = model.element(name) {
        if e.signature() == sig || **e.signature() == **sig {
            return Ok(e.clone());
        }
    }
    err(pos, format!("unknown generator `{name}`"))
}

/// Picks the algebra an expression lives in: the first declared algebra in
/// which every identifier resolves. Pure constants go to the first algebra
/// (or the empty one when none is declared).
fn eval_expr_ast(ast: &ExprAst, model: &SpecModel) -> Result<Element, ParseError> {
    let mut names = Vec::new();
    ast.names(&mut names);

    if model.algebras.is_empty() {
        if let Some(&(name, pos)) = names.first() {
            return err(pos, format!("unknown generator `{name}` (no algebra declared)"));
        }
        let empty = AlgebraSignature::make(&[], &[]);
        return eval_in(ast, &empty, model);
    }

    let resolves_in = |n: &str, sig: &Arc<AlgebraSignature>| {
        sig.generator(n).is_some()
            || model
                .element(n)
                .map(|e| **e.signature() == **sig)
                .unwrap_or(false)
    };
    for (_, sig) in &model.algebras {
        if names.iter().all(|(n, _)| resolves_in(n, sig)) {
            return eval_in(ast, sig, model);
        }
    }
    // Point at the first name that no algebra knows; if every name resolves
    // somewhere the expression mixes algebras.
    for (name, pos) in &names {
        if !model.algebras.iter().any(|(_, sig)| resolves_in(name, sig)) {
            return err(*pos, format!("unknown generator `{name}`"));
        }
    }
    let (name, pos) = names[0];
    err(
        pos,
        format!("`{name}` mixes generators from different algebras"),
    )
}

fn kernel_err(pos: Pos, e: KernelError) -> ParseError {
    ParseError {
        pos,
        message: e.to_string(),
    }
}

/// Parses a complete spec file into a model. Every byte is consumed or a
/// positioned error is returned.
pub fn parse_spec(text: &str) -> Result<SpecModel, ParseError> {
    let tokens = lex(text)?;
    let last_line = text.lines().count().max(1);
    let end = Pos {
        line: last_line,
        col: text.lines().last().map(|l| l.chars().count() + 1).unwrap_or(1),
    };
    let mut p = Parser {
        tokens: &tokens,
        index: 0,
        end,
    };
    let mut model = SpecModel::default();

    while let Some(tok) = p.peek() {
        match tok {
            Tok::KwAlgebra => parse_algebra(&mut p, &mut model)?,
            Tok::KwDerivation => parse_derivation(&mut p, &mut model)?,
            Tok::KwLet => parse_let(&mut p, &mut model)?,
            _ => {
                return err(
                    p.pos(),
                    format!(
                        "expected `algebra`, `derivation` or `let`, {}",
                        p.found()
                    ),
                )
            }
        }
    }
    Ok(model)
}

fn parse_algebra(p: &mut Parser, model: &mut SpecModel) -> Result<(), ParseError> {
    p.expect(Tok::KwAlgebra)?;
    let (name, npos) = p.expect_ident("algebra")?;
    if model.name_in_use(&name) {
        return err(npos, format!("duplicate name `{name}`"));
    }
    p.expect(Tok::LBrace)?;
    p.expect(Tok::KwEven)?;
    let even = p.ident_list();
    p.expect(Tok::Semi)?;
    p.expect(Tok::KwOdd)?;
    let odd = p.ident_list();
    p.expect(Tok::Semi)?;
    p.expect(Tok::RBrace)?;

    let signature = AlgebraSignature::new(
        even.iter().map(|(n, _)| n.clone()).collect(),
        odd.iter().map(|(n, _)| n.clone()).collect(),
    )
    .map_err(|e| kernel_err(npos, e))?;
    model.algebras.push((name, Arc::new(signature)));
    Ok(())
}

fn parse_derivation(p: &mut Parser, model: &mut SpecModel) -> Result<(), ParseError> {
    p.expect(Tok::KwDerivation)?;
    let (name, npos) = p.expect_ident("derivation")?;
    if model.name_in_use(&name) || model.generator_somewhere(&name) {
        return err(npos, format!("duplicate name `{name}`"));
    }
    let parity = match p.peek() {
        Some(Tok::KwEven) => {
            p.next();
            Parity::EVEN
        }
        Some(Tok::KwOdd) => {
            p.next();
            Parity::ODD
        }
        _ => {
            return err(
                p.pos(),
                format!("expected `even` or `odd`, {}", p.found()),
            )
        }
    };
    p.expect(Tok::KwOn)?;
    let (algebra_name, apos) = p.expect_ident("algebra")?;
    let sig = model
        .algebra(&algebra_name)
        .cloned()
        .ok_or_else(|| ParseError {
            pos: apos,
            message: format!("unknown algebra `{algebra_name}`"),
        })?;
    p.expect(Tok::LBrace)?;

    let mut images: Vec<(String, Pos, Element)> = Vec::new();
    while let Some(Tok::Ident(_)) = p.peek() {
        let (gen_name, gpos) = p.expect_ident("generator")?;
        p.expect(Tok::Arrow)?;
        let ast = p.expr()?;
        p.expect(Tok::Semi)?;
        let image = eval_in(&ast, &sig, model)?;
        images.push((gen_name, gpos, image));
    }
    p.expect(Tok::RBrace)?;

    let image_refs: Vec<(&str, Element)> = images
        .iter()
        .map(|(n, _, e)| (n.as_str(), e.clone()))
        .collect();
    let derivation = Derivation::new(&sig, parity, &image_refs).map_err(|e| {
        // attribute the error to the offending generator when we can
        let pos = match &e {
            KernelError::UnknownGenerator(g)
            | KernelError::ImageParity(g)
            | KernelError::DuplicateImage(g) => images
                .iter()
                .find(|(n, _, _)| n == g)
                .map(|(_, p, _)| *p)
                .unwrap_or(npos),
            _ => npos,
        };
        kernel_err(pos, e)
    })?;
    model
        .derivations
        .push((name, algebra_name, Arc::new(derivation)));
    Ok(())
}

fn parse_let(p: &mut Parser, model: &mut SpecModel) -> Result<(), ParseError> {
    p.expect(Tok::KwLet)?;
    let (name, npos) = p.expect_ident("binding")?;
    if model.name_in_use(&name) || model.generator_somewhere(&name) {
        return err(npos, format!("duplicate name `{name}`"));
    }
    p.expect(Tok::Equals)?;
    let ast = p.expr()?;
    p.expect(Tok::Semi)?;
    let value = eval_expr_ast(&ast, model)?;
    model.elements.push((name, value));
    Ok(())
}

/// Parses a standalone expression (the `eval` command and report
/// round-trips) against an already-loaded model.
pub fn parse_expression(text: &str, model: &SpecModel) -> Result<Element, ParseError> {
    let tokens = lex(text)?;
    let end = Pos {
        line: 1,
        col: text.chars().count() + 1,
    };
    let mut p = Parser {
        tokens: &tokens,
        index: 0,
        end,
    };
    let ast = p.expr()?;
    if p.peek().is_some() {
        return err(p.pos(), format!("expected end of expression, {}", p.found()));
    }
    eval_expr_ast(&ast, model)
}
