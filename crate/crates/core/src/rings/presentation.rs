//! Generators and relations for the Rees algebra of the Heaviside filtration
//! and its specializations at `u = 0` (associated graded) and `u = 1`.
//!
//! Relations are first written over `e_i^+, e_i^-, u` and then mapped to the
//! requested variables: by default `e_i^-` is eliminated through
//! `e_i^- = u - e_i^+`, which makes the sum relations vanish.

use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::One;
use serde::Serialize;

use super::poly::{Poly, Term};
use crate::circuits::{circuits, CircuitSet};
use crate::com::{require_com, Com};
use crate::error::{Error, Result};
use crate::sign::{Sign, SignVector};
use crate::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rees,
    Gr,
    Vg,
}

impl Mode {
    /// The value substituted for `u`, if any.
    pub fn u_value(self) -> Option<i64> {
        match self {
            Mode::Rees => None,
            Mode::Gr => Some(0),
            Mode::Vg => Some(1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Rees => "rees",
            Mode::Gr => "gr",
            Mode::Vg => "vg",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "rees" => Ok(Mode::Rees),
            "gr" => Ok(Mode::Gr),
            "vg" => Ok(Mode::Vg),
            _ => Err(Error::Parse(format!("unknown mode {s:?}; expected rees, gr or vg"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variable {
    E(usize, Sign),
    U,
}

/// Variable order: `e_0^+, (e_0^-), e_1^+, (e_1^-), ..., (u)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarLayout {
    pub n: usize,
    pub symmetric: bool,
    pub mode: Mode,
}

impl VarLayout {
    pub fn new(n: usize, symmetric: bool, mode: Mode) -> VarLayout {
        VarLayout { n, symmetric, mode }
    }

    fn per_element(&self) -> usize {
        if self.symmetric {
            2
        } else {
            1
        }
    }

    pub fn len(&self) -> usize {
        self.n * self.per_element() + usize::from(self.mode == Mode::Rees)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn u_index(&self) -> Option<usize> {
        (self.mode == Mode::Rees).then(|| self.n * self.per_element())
    }

    pub fn variable(&self, k: usize) -> Variable {
        if Some(k) == self.u_index() {
            return Variable::U;
        }
        let i = k / self.per_element();
        let s = if k.is_multiple_of(self.per_element()) { Sign::Plus } else { Sign::Minus };
        Variable::E(i, s)
    }

    pub fn index(&self, v: Variable) -> Option<usize> {
        match v {
            Variable::U => self.u_index(),
            Variable::E(i, Sign::Plus) => Some(i * self.per_element()),
            Variable::E(i, Sign::Minus) if self.symmetric => Some(2 * i + 1),
            _ => None,
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len())
            .map(|k| match self.variable(k) {
                Variable::U => "u".to_string(),
                Variable::E(i, s) => format!("e{i}{}", s.to_char()),
            })
            .collect()
    }

    /// Identifier-safe names (`e0p`, `e0m`, `u`).
    pub fn plain_names(&self) -> Vec<String> {
        (0..self.len())
            .map(|k| match self.variable(k) {
                Variable::U => "u".to_string(),
                Variable::E(i, Sign::Plus) => format!("e{i}p"),
                Variable::E(i, _) => format!("e{i}m"),
            })
            .collect()
    }

    fn u_poly(&self) -> Poly {
        match self.u_index() {
            Some(k) => Poly::var(self.len(), k),
            None => Poly::constant(self.len(), self.mode.u_value().expect("specialized mode").into()),
        }
    }

    fn e_poly(&self, i: usize, s: Sign) -> Poly {
        match self.index(Variable::E(i, s)) {
            Some(k) => Poly::var(self.len(), k),
            // e_i^- = u - e_i^+
            None => self.u_poly().sub(&self.e_poly(i, Sign::Plus)),
        }
    }

    fn poly_of(&self, v: Variable) -> Poly {
        match v {
            Variable::U => self.u_poly(),
            Variable::E(i, s) => self.e_poly(i, s),
        }
    }
}

/// Rewrites `p`, written over `from`, in the variables of `to`.
fn remap(p: &Poly, from: &VarLayout, to: &VarLayout) -> Poly {
    p.eval_with(
        Poly::zero(to.len()),
        |c| Poly::constant(to.len(), c.clone()),
        |k, pw| to.poly_of(from.variable(k)).pow(pw),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationKind {
    /// `e_i^+ e_i^-`
    Diag,
    /// `e_i^+ + e_i^- - u`
    Sum,
    /// `e_X` for a circuit `X`
    Circuit,
    /// `f_X = (e_X - e_{-X}) / u` for a pair `±X` of circuits
    Pair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub element: Option<usize>,
    pub circuit: Option<SignVector>,
    pub poly: Poly,
}

impl Relation {
    /// Top degree in the generators (each of filtration level one).
    pub fn filtration_level(&self) -> u32 {
        self.poly.total_degree().unwrap_or(0)
    }

    pub fn cohomological_degree(&self) -> u32 {
        2 * self.filtration_level()
    }

    fn label(&self) -> String {
        match (self.kind, self.element, &self.circuit) {
            (RelationKind::Diag, Some(i), _) => format!("diag {i}"),
            (RelationKind::Sum, Some(i), _) => format!("sum {i}"),
            (RelationKind::Circuit, _, Some(x)) => format!("circuit {x}"),
            (RelationKind::Pair, _, Some(x)) => format!("pair {x}"),
            _ => "relation".to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub layout: VarLayout,
    pub reduced: bool,
    pub relations: Vec<Relation>,
}

/// Builds the presentation. `reduced` keeps only circuits `X` with `-X` not a
/// circuit (the zero circuit of the empty COM is always kept, since dropping
/// it would present a nonzero ring for an empty tope set). `symmetric` keeps
/// both `e_i^+` and `e_i^-` with the diag and sum relations.
pub fn presentation(l: &Com, mode: Mode, reduced: bool, symmetric: bool) -> Result<Presentation> {
    require_com(l)?;
    presentation_with(l, &circuits(l), mode, reduced, symmetric)
}

pub(crate) fn presentation_with(
    l: &Com,
    c: &CircuitSet,
    mode: Mode,
    reduced: bool,
    symmetric: bool,
) -> Result<Presentation> {
    let n = l.n();
    let full = VarLayout::new(n, true, Mode::Rees);
    let elim = VarLayout::new(n, false, Mode::Rees);
    let target = VarLayout::new(n, symmetric, mode);
    let mut relations = Vec::new();
    let mut push = |kind, element, circuit, p: Poly| {
        relations.push(Relation {
            kind,
            element,
            circuit,
            poly: p.normalized(),
        });
    };

    for i in 0..n {
        let diag = full.e_poly(i, Sign::Plus).mul(&full.e_poly(i, Sign::Minus));
        push(RelationKind::Diag, Some(i), None, remap(&diag, &full, &target));
        if symmetric {
            let sum = full
                .e_poly(i, Sign::Plus)
                .add(&full.e_poly(i, Sign::Minus))
                .sub(&full.u_poly());
            push(RelationKind::Sum, Some(i), None, remap(&sum, &full, &target));
        }
    }

    for x in c.iter() {
        let paired = c.contains(&x.negate());
        if reduced && paired && !x.is_zero() {
            continue;
        }
        push(RelationKind::Circuit, None, Some(*x), remap(&e_x_poly(&full, x), &full, &target));
    }

    let natural: Vec<usize> = (0..n).collect();
    for x in c.signed_pairs(&natural) {
        let diff = e_x_poly(&full, &x).sub(&e_x_poly(&full, &x.negate()));
        let diff = remap(&diff, &full, &elim);
        let f = diff
            .div_var(elim.u_index().expect("rees layout"))
            .ok_or_else(|| Error::Invariant(format!("e_X - e_-X is not divisible by u for X = {x}")))?;
        push(RelationKind::Pair, None, Some(x), remap(&f, &elim, &target));
    }

    Ok(Presentation {
        layout: target,
        reduced,
        relations,
    })
}

/// `e_X = prod_{X+} e_i^+ prod_{X-} (-e_i^-)` over the given layout.
fn e_x_poly(layout: &VarLayout, x: &SignVector) -> Poly {
    let mut p = Poly::constant(layout.len(), Integer::one());
    for i in x.plus().iter() {
        p = p.mul(&layout.e_poly(i, Sign::Plus));
    }
    for i in x.minus().iter() {
        p = p.mul(&layout.e_poly(i, Sign::Minus).neg());
    }
    p
}

#[derive(Serialize)]
struct VariableView {
    name: String,
    cohomological_degree: u32,
    filtration_level: u32,
}

#[derive(Serialize)]
struct RelationView {
    kind: RelationKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    element: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    circuit: Option<SignVector>,
    text: String,
    filtration_level: u32,
    cohomological_degree: u32,
    terms: Vec<Term>,
}

#[derive(Serialize)]
struct PresentationView {
    mode: Mode,
    reduced: bool,
    symmetric: bool,
    n: usize,
    variables: Vec<VariableView>,
    relations: Vec<RelationView>,
}

impl Presentation {
    pub fn mode(&self) -> Mode {
        self.layout.mode
    }

    pub fn variable_names(&self) -> Vec<String> {
        self.layout.names()
    }

    pub fn polys(&self) -> Vec<&Poly> {
        self.relations.iter().map(|r| &r.poly).collect()
    }

    fn view(&self) -> PresentationView {
        let names = self.layout.names();
        PresentationView {
            mode: self.layout.mode,
            reduced: self.reduced,
            symmetric: self.layout.symmetric,
            n: self.layout.n,
            variables: names
                .iter()
                .map(|name| VariableView {
                    name: name.clone(),
                    cohomological_degree: 2,
                    filtration_level: 1,
                })
                .collect(),
            relations: self
                .relations
                .iter()
                .map(|r| RelationView {
                    kind: r.kind,
                    element: r.element,
                    circuit: r.circuit,
                    text: r.poly.render(&names, "*"),
                    filtration_level: r.filtration_level(),
                    cohomological_degree: r.cohomological_degree(),
                    terms: r.poly.structured(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.view()).expect("presentation serializes")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.view()).expect("presentation serializes")
    }

    /// One relation per line, labelled by kind.
    pub fn to_text(&self) -> String {
        let names = self.layout.names();
        let mut out = String::new();
        let _ = writeln!(out, "mode: {}", self.layout.mode.name());
        let _ = writeln!(out, "reduced: {}", self.reduced);
        let _ = writeln!(out, "symmetric: {}", self.layout.symmetric);
        let _ = writeln!(out, "variables: {}", names.join(" "));
        let _ = writeln!(
            out,
            "degrees: every generator has cohomological degree 2 (filtration level 1)"
        );
        let _ = writeln!(out, "relations:");
        let width = self.relations.iter().map(|r| r.label().len()).max().unwrap_or(0);
        for r in &self.relations {
            let _ = writeln!(out, "  {:width$}  {}", r.label(), r.poly.render(&names, "*"));
        }
        out
    }

    /// A Macaulay2-style script defining the quotient ring.
    pub fn to_cas_script(&self) -> String {
        let names = self.layout.plain_names();
        let mut out = String::new();
        let _ = writeln!(
            out,
            "-- {} presentation, {} generators of degree 2",
            self.layout.mode.name(),
            names.len()
        );
        let degrees = vec!["2"; names.len()].join(",");
        let _ = writeln!(out, "R = ZZ[{}, Degrees => {{{}}}];", names.join(", "), degrees);
        let gens: Vec<String> = self.relations.iter().map(|r| r.poly.render(&names, "*")).collect();
        if gens.is_empty() {
            let _ = writeln!(out, "I = ideal(0_R);");
        } else {
            let _ = writeln!(out, "I = ideal(\n    {}\n);", gens.join(",\n    "));
        }
        let _ = writeln!(out, "Q = R / I;");
        out
    }
}
