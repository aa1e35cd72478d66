//! Integer-valued functions on topes, the Heaviside filtration and the ring
//! presentations built from circuits.
//!
//! Elements of the Rees algebra are modelled as tope-wise polynomials in `u`;
//! `rho` sends `e_i^±` to `u * h_i^±`, where `h_i^±` is the indicator of the
//! topes with sign `±` at `i`.

mod poly;
mod presentation;
mod upoly;
mod verify;

use std::fmt;

use serde::Serialize;

use crate::circuits::{circuits, CircuitSet};
use crate::com::{require_com, topes, Com};
use crate::error::{Error, Result};
use crate::sign::{IndexSet, Sign, SignVector};
use crate::Integer;

pub use poly::{grlex_desc, Exponents, Poly, Term};
pub use presentation::{presentation, Mode, Presentation, Relation, RelationKind, VarLayout, Variable};
pub use upoly::UPoly;
pub use verify::{
    gr_multiply, heaviside_product, hilbert_series, nbc_basis_matrix, verify_presentation,
    verify_presentation_with, FiltrationReport,
};

/// A map from the topes of a COM (in canonical order) to polynomials in `u`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct TopeFunction {
    pub topes: Vec<SignVector>,
    pub values: Vec<UPoly>,
}

impl TopeFunction {
    pub fn constant(topes: Vec<SignVector>, p: UPoly) -> TopeFunction {
        let values = vec![p; topes.len()];
        TopeFunction { topes, values }
    }

    /// Tope-wise values from a closure.
    pub fn from_fn(topes: Vec<SignVector>, f: impl Fn(&SignVector) -> UPoly) -> TopeFunction {
        let values = topes.iter().map(f).collect();
        TopeFunction { topes, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(UPoly::is_zero)
    }

    fn zip(&self, other: &TopeFunction, f: impl Fn(&UPoly, &UPoly) -> UPoly) -> Result<TopeFunction> {
        if self.topes != other.topes {
            return Err(Error::Precondition("tope functions on different tope sets".into()));
        }
        Ok(TopeFunction {
            topes: self.topes.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &TopeFunction) -> Result<TopeFunction> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &TopeFunction) -> Result<TopeFunction> {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &TopeFunction) -> Result<TopeFunction> {
        self.zip(other, |a, b| a * b)
    }

    /// Tope-wise exact division by `u`.
    pub fn div_u(&self) -> Result<TopeFunction> {
        let values = self
            .values
            .iter()
            .zip(&self.topes)
            .map(|(v, t)| {
                v.div_u()
                    .ok_or_else(|| Error::Invariant(format!("value {v} at tope {t} is not divisible by u")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TopeFunction {
            topes: self.topes.clone(),
            values,
        })
    }

    /// Integer values after setting `u` to `at`.
    pub fn eval_u(&self, at: i64) -> Vec<Integer> {
        let at = Integer::from(at);
        self.values.iter().map(|v| v.eval(&at)).collect()
    }
}

impl fmt::Debug for TopeFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.topes.iter().zip(&self.values)).finish()
    }
}

fn require_index(l: &Com, i: usize) -> Result<()> {
    if i >= l.n() {
        return Err(Error::IndexOutOfRange { index: i, n: l.n() });
    }
    Ok(())
}

fn require_nonzero_sign(s: Sign) -> Result<()> {
    if s == Sign::Zero {
        return Err(Error::Precondition("Heaviside functions need a sign + or -".into()));
    }
    Ok(())
}

/// `h_i^s`: 1 on topes with sign `s` at `i`, 0 elsewhere. For a coloop the
/// tope set is empty and so is the function.
pub fn heaviside(l: &Com, i: usize, s: Sign) -> Result<TopeFunction> {
    require_com(l)?;
    require_index(l, i)?;
    require_nonzero_sign(s)?;
    Ok(TopeFunction::from_fn(topes(l), |t| {
        if t.get(i) == s {
            UPoly::one()
        } else {
            UPoly::zero()
        }
    }))
}

/// A word in the generators `e_i^±` times a power of `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EMonomial {
    pub factors: Vec<(usize, Sign)>,
    pub u_exp: u32,
}

impl EMonomial {
    pub fn new(factors: Vec<(usize, Sign)>, u_exp: u32) -> EMonomial {
        EMonomial { factors, u_exp }
    }
}

/// `rho(m)`: each `e_i^±` becomes `u * h_i^±`.
pub fn rho_eval(l: &Com, m: &EMonomial) -> Result<TopeFunction> {
    require_com(l)?;
    for &(i, s) in &m.factors {
        require_index(l, i)?;
        require_nonzero_sign(s)?;
    }
    let k = m.factors.len() + m.u_exp as usize;
    Ok(TopeFunction::from_fn(topes(l), |t| {
        if m.factors.iter().all(|&(i, s)| t.get(i) == s) {
            UPoly::monomial(1.into(), k)
        } else {
            UPoly::zero()
        }
    }))
}

/// `rho(e_X)` with `e_X = prod_{X+} e_i^+ * prod_{X-} (-e_i^-)`: on a tope `T`
/// this is `(-1)^|X-| u^|X|` when `T` agrees with `X` on its support, else 0.
pub fn e_x_eval(l: &Com, x: &SignVector) -> Result<TopeFunction> {
    require_com(l)?;
    l.check_vector(x)?;
    Ok(e_x_eval_unchecked(topes(l), x))
}

fn e_x_eval_unchecked(topes: Vec<SignVector>, x: &SignVector) -> TopeFunction {
    let sign: i64 = if x.minus().len().is_multiple_of(2) { 1 } else { -1 };
    let k = x.support().len();
    TopeFunction::from_fn(topes, |t| {
        if x.conforms_to(t) {
            UPoly::monomial(sign.into(), k)
        } else {
            UPoly::zero()
        }
    })
}

/// `rho(f_X)` with `f_X = (e_X - e_{-X}) / u`; needs `X` and `-X` to be circuits.
pub fn f_x_eval(l: &Com, x: &SignVector) -> Result<TopeFunction> {
    require_com(l)?;
    l.check_vector(x)?;
    f_x_eval_with(l, x, &circuits(l))
}

pub(crate) fn f_x_eval_with(l: &Com, x: &SignVector, c: &CircuitSet) -> Result<TopeFunction> {
    if !c.contains(x) || !c.contains(&x.negate()) {
        return Err(Error::Precondition(format!("{x} and its negative are not both circuits")));
    }
    let t = topes(l);
    let diff = e_x_eval_unchecked(t.clone(), x).sub(&e_x_eval_unchecked(t, &x.negate()))?;
    diff.div_u()
}

/// `rho` applied to a polynomial in the variables of a Rees layout.
pub fn rho_eval_poly(l: &Com, layout: &VarLayout, p: &Poly) -> Result<TopeFunction> {
    require_com(l)?;
    if layout.n != l.n() || p.nvars() != layout.len() {
        return Err(Error::Dimension {
            expected: layout.len(),
            found: p.nvars(),
        });
    }
    if layout.u_index().is_none() {
        return Err(Error::Precondition("rho needs the variable u".into()));
    }
    Ok(TopeFunction::from_fn(topes(l), |t| {
        p.eval_with(
            UPoly::zero(),
            |c| UPoly::monomial(c.clone(), 0),
            |k, pw| match layout.variable(k) {
                Variable::E(i, s) if t.get(i) != s => UPoly::zero(),
                _ => UPoly::monomial(1.into(), pw as usize),
            },
        )
    }))
}

/// `prod_{i in s} h_i^+` evaluated on the given topes, as 0/1 integers.
pub(crate) fn h_plus_vector(topes: &[SignVector], s: IndexSet) -> Vec<Integer> {
    topes
        .iter()
        .map(|t| Integer::from(u8::from(s.is_subset(t.plus()))))
        .collect()
}
