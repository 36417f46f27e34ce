//! The built-in identity catalog. Sign exponents follow the Koszul rule;
//! slot indices in the builders below refer to the slot lists given with
//! each template.

use crate::parity::Parity;

use super::{IdentityTemplate, SignExpr, SlotSpec, TemplateExpr, TemplateTerm};

fn s(i: usize) -> TemplateExpr {
    TemplateExpr::Slot(i)
}

fn prod(a: TemplateExpr, b: TemplateExpr) -> TemplateExpr {
    TemplateExpr::Product(Box::new(a), Box::new(b))
}

fn brk(a: TemplateExpr, b: TemplateExpr) -> TemplateExpr {
    TemplateExpr::Bracket(Box::new(a), Box::new(b))
}

fn pbrk(a: TemplateExpr, b: TemplateExpr) -> TemplateExpr {
    TemplateExpr::PseudoBracket(Box::new(a), Box::new(b))
}

fn dap(a: TemplateExpr) -> TemplateExpr {
    TemplateExpr::DerivationApply(Box::new(a))
}

fn tern(a: TemplateExpr, b: TemplateExpr, c: TemplateExpr) -> TemplateExpr {
    TemplateExpr::Ternary(Box::new(a), Box::new(b), Box::new(c))
}

fn vbrk(a: TemplateExpr, b: TemplateExpr) -> TemplateExpr {
    TemplateExpr::VfBracket(Box::new(a), Box::new(b))
}

fn act(a: TemplateExpr, b: TemplateExpr) -> TemplateExpr {
    TemplateExpr::ModuleAction(Box::new(a), Box::new(b))
}

fn term(coefficient: i64, sign: SignExpr, expr: TemplateExpr) -> TemplateTerm {
    TemplateTerm {
        coefficient,
        sign,
        expr,
    }
}

fn template(
    name: &str,
    description: &str,
    slots: Vec<SlotSpec>,
    terms: Vec<TemplateTerm>,
) -> IdentityTemplate {
    IdentityTemplate {
        name: name.into(),
        description: description.into(),
        slots,
        terms,
        requires_square_zero_delta: false,
        notes: vec![],
    }
}

/// Every identity the engine ships, in residual form (all terms moved to
/// the left-hand side).
#[allow(clippy::vec_init_then_push)]
pub fn builtin_catalog() -> Vec<IdentityTemplate> {
    let el = SlotSpec::element;
    let vf = SlotSpec::vector_field;
    let x = 0;
    let y = 1;
    let z = 2;

    let mut catalog = Vec::new();

    catalog.push(template(
        "tp-compat",
        "transposed compatibility of product and bracket: \
         2z[x,y] - [zx,y] - (-1)^{|x||z|}[x,zy] = 0",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(2, SignExpr::zero(), prod(s(z), brk(s(x), s(y)))),
            term(-1, SignExpr::zero(), brk(prod(s(z), s(x)), s(y))),
            term(-1, SignExpr::product(&[x, z]), brk(s(x), prod(s(z), s(y)))),
        ],
    ));

    catalog.push(template(
        "jacobi-super",
        "graded Jacobi identity for the bracket: \
         (-1)^{|x||z|}[[x,y],z] + (-1)^{|x||y|}[[y,z],x] + (-1)^{|y||z|}[[z,x],y] = 0",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(1, SignExpr::product(&[x, z]), brk(brk(s(x), s(y)), s(z))),
            term(1, SignExpr::product(&[x, y]), brk(brk(s(y), s(z)), s(x))),
            term(1, SignExpr::product(&[y, z]), brk(brk(s(z), s(x)), s(y))),
        ],
    ));

    catalog.push(template(
        "bracket-antisymmetry",
        "graded antisymmetry of the bracket: [x,y] + (-1)^{|x||y|}[y,x] = 0",
        vec![el("x"), el("y")],
        vec![
            term(1, SignExpr::zero(), brk(s(x), s(y))),
            term(1, SignExpr::product(&[x, y]), brk(s(y), s(x))),
        ],
    ));

    catalog.push(template(
        "pseudo-bracket",
        "negative control: the graded Jacobi sum for the sign-flipped bracket \
         xD(y) + (-1)^{|x||y|}yD(x); nonzero residuals are expected",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(1, SignExpr::product(&[x, z]), pbrk(pbrk(s(x), s(y)), s(z))),
            term(1, SignExpr::product(&[x, y]), pbrk(pbrk(s(y), s(z)), s(x))),
            term(1, SignExpr::product(&[y, z]), pbrk(pbrk(s(z), s(x)), s(y))),
        ],
    ));

    // Six product/bracket interchange identities valid in any transposed
    // Poisson superalgebra. Slot order is (h, x, y, z) for the first four
    // and (x, y, u, v) for the last two.
    {
        let (h, x, y, z) = (0, 1, 2, 3);
        catalog.push(template(
            "thm2-identity-1",
            "cyclic vanishing of x[y,z]: \
             (-1)^{|x||z|}x[y,z] + (-1)^{|x||y|}y[z,x] + (-1)^{|y||z|}z[x,y] = 0",
            vec![el("x"), el("y"), el("z")],
            vec![
                term(1, SignExpr::product(&[0, 2]), prod(s(0), brk(s(1), s(2)))),
                term(1, SignExpr::product(&[0, 1]), prod(s(1), brk(s(2), s(0)))),
                term(1, SignExpr::product(&[1, 2]), prod(s(2), brk(s(0), s(1)))),
            ],
        ));
        catalog.push(template(
            "thm2-identity-2",
            "cyclic vanishing of [h[x,y],z]: \
             (-1)^{|x||z|}[h[x,y],z] + (-1)^{|x||y|}[h[y,z],x] + (-1)^{|y||z|}[h[z,x],y] = 0",
            vec![el("h"), el("x"), el("y"), el("z")],
            vec![
                term(
                    1,
                    SignExpr::product(&[x, z]),
                    brk(prod(s(h), brk(s(x), s(y))), s(z)),
                ),
                term(
                    1,
                    SignExpr::product(&[x, y]),
                    brk(prod(s(h), brk(s(y), s(z))), s(x)),
                ),
                term(
                    1,
                    SignExpr::product(&[y, z]),
                    brk(prod(s(h), brk(s(z), s(x))), s(y)),
                ),
            ],
        ));
        catalog.push(template(
            "thm2-identity-3",
            "cyclic vanishing of [hx,[y,z]]: \
             (-1)^{|x||z|}[hx,[y,z]] + (-1)^{|x||y|}[hy,[z,x]] + (-1)^{|y||z|}[hz,[x,y]] = 0",
            vec![el("h"), el("x"), el("y"), el("z")],
            vec![
                term(
                    1,
                    SignExpr::product(&[x, z]),
                    brk(prod(s(h), s(x)), brk(s(y), s(z))),
                ),
                term(
                    1,
                    SignExpr::product(&[x, y]),
                    brk(prod(s(h), s(y)), brk(s(z), s(x))),
                ),
                term(
                    1,
                    SignExpr::product(&[y, z]),
                    brk(prod(s(h), s(z)), brk(s(x), s(y))),
                ),
            ],
        ));
        catalog.push(template(
            "thm2-identity-4",
            "cyclic vanishing of [h,x][y,z]: \
             (-1)^{|x||z|}[h,x][y,z] + (-1)^{|x||y|}[h,y][z,x] + (-1)^{|y||z|}[h,z][x,y] = 0",
            vec![el("h"), el("x"), el("y"), el("z")],
            vec![
                term(
                    1,
                    SignExpr::product(&[x, z]),
                    prod(brk(s(h), s(x)), brk(s(y), s(z))),
                ),
                term(
                    1,
                    SignExpr::product(&[x, y]),
                    prod(brk(s(h), s(y)), brk(s(z), s(x))),
                ),
                term(
                    1,
                    SignExpr::product(&[y, z]),
                    prod(brk(s(h), s(z)), brk(s(x), s(y))),
                ),
            ],
        ));
    }
    {
        let (x, y, u, v) = (0, 1, 2, 3);
        catalog.push(template(
            "thm2-identity-5",
            "rescaled product rule: 2uv[x,y] - (-1)^{|x||v|}[ux,vy] \
             - (-1)^{|u|(|x|+|v|)}[vx,uy] = 0",
            vec![el("x"), el("y"), el("u"), el("v")],
            vec![
                term(
                    2,
                    SignExpr::zero(),
                    prod(s(u), prod(s(v), brk(s(x), s(y)))),
                ),
                term(
                    -1,
                    SignExpr::product(&[x, v]),
                    brk(prod(s(u), s(x)), prod(s(v), s(y))),
                ),
                term(
                    -1,
                    SignExpr::product_of_sums(&[&[u], &[x, v]]),
                    brk(prod(s(v), s(x)), prod(s(u), s(y))),
                ),
            ],
        ));
        catalog.push(template(
            "thm2-identity-6",
            "mixed product/bracket cycle: (-1)^{|u|(|y|+|v|)}x[u,yv] \
             + (-1)^{|v|(|x|+|y|)}v[xy,u] + (-1)^{|x|(|y|+|v|)}(y[v,x])u = 0",
            vec![el("x"), el("y"), el("u"), el("v")],
            vec![
                term(
                    1,
                    SignExpr::product_of_sums(&[&[u], &[y, v]]),
                    prod(s(x), brk(s(u), prod(s(y), s(v)))),
                ),
                term(
                    1,
                    SignExpr::product_of_sums(&[&[v], &[x, y]]),
                    prod(s(v), brk(prod(s(x), s(y)), s(u))),
                ),
                term(
                    1,
                    SignExpr::product_of_sums(&[&[x], &[y, v]]),
                    prod(prod(s(y), brk(s(v), s(x))), s(u)),
                ),
            ],
        ));
    }

    catalog.push(template(
        "ternary-skew-12",
        "graded skew-symmetry of the ternary bracket in the first pair: \
         [y,x,z] + (-1)^{|x||y|}[x,y,z] = 0",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(1, SignExpr::zero(), tern(s(y), s(x), s(z))),
            term(1, SignExpr::product(&[x, y]), tern(s(x), s(y), s(z))),
        ],
    ));

    catalog.push(template(
        "ternary-skew-23",
        "graded skew-symmetry of the ternary bracket in the second pair: \
         [x,z,y] + (-1)^{|y||z|}[x,y,z] = 0",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(1, SignExpr::zero(), tern(s(x), s(z), s(y))),
            term(1, SignExpr::product(&[y, z]), tern(s(x), s(y), s(z))),
        ],
    ));

    {
        let (x, y, z, u, v) = (0, 1, 2, 3, 4);
        catalog.push(template(
            "filippov-jacobi",
            "fundamental identity of the ternary bracket: [[x,y,z],u,v] \
             - (-1)^{|yz,uv|}[[x,u,v],y,z] - (-1)^{|x,yz|+|xz,uv|}[[y,u,v],z,x] \
             - (-1)^{|xy,zuv|}[[z,u,v],x,y] = 0",
            vec![el("x"), el("y"), el("z"), el("u"), el("v")],
            vec![
                term(
                    1,
                    SignExpr::zero(),
                    tern(tern(s(x), s(y), s(z)), s(u), s(v)),
                ),
                term(
                    -1,
                    SignExpr::product_of_sums(&[&[y, z], &[u, v]]),
                    tern(tern(s(x), s(u), s(v)), s(y), s(z)),
                ),
                term(
                    -1,
                    SignExpr::sum(&[
                        SignExpr::product_of_sums(&[&[x], &[y, z]]),
                        SignExpr::product_of_sums(&[&[x, z], &[u, v]]),
                    ]),
                    tern(tern(s(y), s(u), s(v)), s(z), s(x)),
                ),
                term(
                    -1,
                    SignExpr::product_of_sums(&[&[x, y], &[z, u, v]]),
                    tern(tern(s(z), s(u), s(v)), s(x), s(y)),
                ),
            ],
        ));
    }

    catalog.push(template(
        "lemma-1",
        "six-term exchange between the ternary derivation and the bracket: \
         T(x)T([y,z]) + (-1)^{|x|(|y|+|z|)}T(y)T([z,x]) + (-1)^{(|x|+|y|)|z|}T(z)T([x,y]) \
         + x[T(y),T(z)] + (-1)^{|x|(|y|+|z|)}y[T(z),T(x)] + (-1)^{(|x|+|y|)|z|}z[T(x),T(y)] = 0",
        vec![el("x"), el("y"), el("z")],
        vec![
            term(1, SignExpr::zero(), prod(dap(s(x)), dap(brk(s(y), s(z))))),
            term(
                1,
                SignExpr::product_of_sums(&[&[x], &[y, z]]),
                prod(dap(s(y)), dap(brk(s(z), s(x)))),
            ),
            term(
                1,
                SignExpr::product_of_sums(&[&[x, y], &[z]]),
                prod(dap(s(z)), dap(brk(s(x), s(y)))),
            ),
            term(1, SignExpr::zero(), prod(s(x), brk(dap(s(y)), dap(s(z))))),
            term(
                1,
                SignExpr::product_of_sums(&[&[x], &[y, z]]),
                prod(s(y), brk(dap(s(z)), dap(s(x)))),
            ),
            term(
                1,
                SignExpr::product_of_sums(&[&[x, y], &[z]]),
                prod(s(z), brk(dap(s(x)), dap(s(y)))),
            ),
        ],
    ));

    catalog.push(template(
        "bracket-symmetry",
        "supersymmetry of the module bracket: {X,Y} - (-1)^{|X||Y|}{Y,X} = 0",
        vec![vf("X"), vf("Y")],
        vec![
            term(1, SignExpr::zero(), vbrk(s(x), s(y))),
            term(-1, SignExpr::product(&[x, y]), vbrk(s(y), s(x))),
        ],
    ));

    catalog.push(template(
        "tp-compat-module",
        "transposed compatibility of the module action with the module \
         bracket: 2z{X,Y} - {zX,Y} - (-1)^{|z||X|}{X,zY} = 0",
        vec![el("z"), vf("X"), vf("Y")],
        vec![
            term(2, SignExpr::zero(), act(s(0), vbrk(s(1), s(2)))),
            term(-1, SignExpr::zero(), vbrk(act(s(0), s(1)), s(2))),
            term(-1, SignExpr::product(&[0, 1]), vbrk(s(1), act(s(0), s(2)))),
        ],
    ));

    catalog.push(template(
        "jordan-identity",
        "Jordan identity on even vector fields: \
         {{X,X},{Y,X}} - {{{X,X},Y},X} = 0",
        vec![
            SlotSpec::vector_field_of("X", Parity::EVEN),
            SlotSpec::vector_field_of("Y", Parity::EVEN),
        ],
        vec![
            term(
                1,
                SignExpr::zero(),
                vbrk(vbrk(s(x), s(x)), vbrk(s(y), s(x))),
            ),
            term(
                -1,
                SignExpr::zero(),
                vbrk(vbrk(vbrk(s(x), s(x)), s(y)), s(x)),
            ),
        ],
    ));

    let mut jordan_module = template(
        "jordan-module",
        "linearized Jordan identity making odd vector fields a module over \
         the even ones: {{{X,X},Y},Z} - {{X,X},{Y,Z}} - 2{{X,Y},{X,Z}} \
         + 2{X,{Y,{X,Z}}} = 0",
        vec![
            SlotSpec::vector_field_of("X", Parity::EVEN),
            SlotSpec::vector_field_of("Y", Parity::ODD),
            SlotSpec::vector_field_of("Z", Parity::EVEN),
        ],
        vec![
            term(
                1,
                SignExpr::zero(),
                vbrk(vbrk(vbrk(s(x), s(x)), s(y)), s(z)),
            ),
            term(
                -1,
                SignExpr::zero(),
                vbrk(vbrk(s(x), s(x)), vbrk(s(y), s(z))),
            ),
            term(
                -2,
                SignExpr::zero(),
                vbrk(vbrk(s(x), s(y)), vbrk(s(x), s(z))),
            ),
            term(
                2,
                SignExpr::zero(),
                vbrk(s(x), vbrk(s(y), vbrk(s(x), s(z)))),
            ),
        ],
    );
    jordan_module.requires_square_zero_delta = true;
    catalog.push(jordan_module);

    let mut super_jordan = template(
        "super-jordan",
        "Koszul-signed extension of the Jordan module identity to the whole \
         vector-field module: {{{X,X},Y},Z} - {{X,X},{Y,Z}} \
         - 2(-1)^{|X||Y|}{{X,Y},{X,Z}} + 2(-1)^{|X||Y|}{X,{Y,{X,Z}}} = 0",
        vec![vf("X"), vf("Y"), vf("Z")],
        vec![
            term(
                1,
                SignExpr::zero(),
                vbrk(vbrk(vbrk(s(x), s(x)), s(y)), s(z)),
            ),
            term(
                -1,
                SignExpr::zero(),
                vbrk(vbrk(s(x), s(x)), vbrk(s(y), s(z))),
            ),
            term(
                -2,
                SignExpr::product(&[x, y]),
                vbrk(vbrk(s(x), s(y)), vbrk(s(x), s(z))),
            ),
            term(
                2,
                SignExpr::product(&[x, y]),
                vbrk(s(x), vbrk(s(y), vbrk(s(x), s(z)))),
            ),
        ],
    );
    super_jordan.notes.push(
        "the graded form of the super Jordan identity is this tool's own \
         reading: the Jordan module identity with Koszul signs, taken on the \
         whole vector-field module"
            .into(),
    );
    catalog.push(super_jordan);

    catalog
}
