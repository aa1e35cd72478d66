//! Instance-wise verification of the presentation theorem by evaluation on
//! topes and exact integer linear algebra.
//!
//! `F_k` is the integer span of `h_S = prod_{i in S} h_i^+` over `|S| <= k`:
//! any Heaviside polynomial of degree at most `k` reduces to that span since
//! `h_i^- = 1 - h_i^+`, `(h_i^+)^2 = h_i^+` and `h_i^+ h_i^- = 0`.

use serde::{Serialize, Serializer};

use super::presentation::{presentation_with, Mode, VarLayout};
use super::{e_x_eval_unchecked, f_x_eval_with, h_plus_vector, rho_eval_poly};
use crate::circuits::{circuits, CircuitSet};
use crate::com::{require_com, topes, Com};
use crate::error::{Error, Result};
use crate::exactalg::{determinant, Matrix, RowSpan};
use crate::nbc::{nbc_sets_with, LinearOrder, NbcFamily};
use crate::sign::IndexSet;
use crate::{IntMatrix, Integer};

/// Rows: NBC sets in canonical order; columns: topes; entries `h_S(T)`.
pub fn nbc_basis_matrix(l: &Com, order: &LinearOrder) -> Result<IntMatrix> {
    require_com(l)?;
    let family = nbc_sets_with(l, order, &circuits(l))?;
    basis_matrix(l, &family)
}

fn basis_matrix(l: &Com, family: &NbcFamily) -> Result<IntMatrix> {
    let t = topes(l);
    if family.len() != t.len() {
        return Err(Error::Invariant(format!(
            "{} NBC sets but {} topes",
            family.len(),
            t.len()
        )));
    }
    Matrix::from_rows(t.len(), family.sets.iter().map(|s| h_plus_vector(&t, *s)).collect())
}

/// `h_S` on the topes of `l`, as a 0/1 vector.
pub fn heaviside_product(l: &Com, s: IndexSet) -> Result<Vec<Integer>> {
    require_com(l)?;
    if let Some(i) = s.difference(IndexSet::full(l.n())).iter().next() {
        return Err(Error::IndexOutOfRange { index: i, n: l.n() });
    }
    Ok(h_plus_vector(&topes(l), s))
}

fn as_string<S: Serializer>(v: &Integer, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    /// `counts[k]` NBC sets of size `k`.
    pub counts: Vec<usize>,
    pub topes: usize,
    #[serde(serialize_with = "as_string")]
    pub nbc_det: Integer,
    /// `rho(e_X) = 0` for every circuit and `rho(f_X) = 0` for every pair.
    pub kernel_ok: bool,
    /// Every emitted Rees relation evaluates to zero under `rho`.
    pub relations_ok: bool,
    /// `|det| = 1` for the NBC evaluation matrix.
    pub basis_ok: bool,
    /// Each `h_S` with `|S| <= k` is an integer combination of NBC rows of size `<= k`.
    pub membership_ok: bool,
    /// Rational rank of `{h_S : |S| <= k}` equals the number of NBC sets of size `<= k`.
    pub rank_ok: bool,
    pub failures: Vec<String>,
    pub holds: bool,
}

pub fn verify_presentation(l: &Com, order: &LinearOrder) -> Result<FiltrationReport> {
    require_com(l)?;
    let c = circuits(l);
    let family = nbc_sets_with(l, order, &c)?;
    verify_presentation_with(l, &c, &family)
}

pub fn verify_presentation_with(l: &Com, c: &CircuitSet, family: &NbcFamily) -> Result<FiltrationReport> {
    require_com(l)?;
    let n = l.n();
    let t = topes(l);
    let mut failures = Vec::new();

    let mut kernel_ok = true;
    for x in c.iter() {
        if !e_x_eval_unchecked(t.clone(), x).is_zero() {
            kernel_ok = false;
            failures.push(format!("rho(e_X) != 0 for circuit {x}"));
        }
        if !x.is_zero() && c.contains(&x.negate()) && !f_x_eval_with(l, x, c)?.is_zero() {
            kernel_ok = false;
            failures.push(format!("rho(f_X) != 0 for pair {x}"));
        }
    }

    let mut relations_ok = true;
    let pres = presentation_with(l, c, Mode::Rees, false, true)?;
    let layout = VarLayout::new(n, true, Mode::Rees);
    for r in &pres.relations {
        if !rho_eval_poly(l, &layout, &r.poly)?.is_zero() {
            relations_ok = false;
            failures.push(format!("relation {} not in the kernel", r.poly.render(&layout.names(), "*")));
        }
    }

    let (nbc_det, basis_ok) = match basis_matrix(l, family) {
        Ok(m) => {
            let d = determinant(&m)?;
            let ok = d == Integer::from(1) || d == Integer::from(-1);
            if !ok {
                failures.push(format!("NBC evaluation matrix has determinant {d}"));
            }
            (d, ok)
        }
        Err(e) => {
            failures.push(e.to_string());
            (Integer::from(0), false)
        }
    };

    let mut membership_ok = true;
    let mut rank_ok = true;
    let all: Vec<IndexSet> = IndexSet::full(n).subsets().collect();
    for k in 0..=n {
        let rows: Vec<Vec<Integer>> = family
            .sets
            .iter()
            .filter(|s| s.len() <= k)
            .map(|s| h_plus_vector(&t, *s))
            .collect();
        let expected = rows.len();
        let span = RowSpan::new(&Matrix::from_rows(t.len(), rows)?);
        let mut hs: Vec<Vec<Integer>> = Vec::new();
        for s in all.iter().filter(|s| s.len() <= k) {
            let v = h_plus_vector(&t, *s);
            if !span.contains(&v)? {
                membership_ok = false;
                failures.push(format!("h_S for S = {s} is not in the NBC span of level {k}"));
            }
            hs.push(v);
        }
        let r = RowSpan::new(&Matrix::from_rows(t.len(), hs)?).rank();
        if r != expected {
            rank_ok = false;
            failures.push(format!("level {k}: rank {r} but {expected} NBC sets"));
        }
    }

    let holds = kernel_ok && relations_ok && basis_ok && membership_ok && rank_ok;
    Ok(FiltrationReport {
        counts: family.counts.clone(),
        topes: t.len(),
        nbc_det,
        kernel_ok,
        relations_ok,
        basis_ok,
        membership_ok,
        rank_ok,
        failures,
        holds,
    })
}

/// `c_k` = number of NBC sets of size `k`: the rank of `F_k / F_{k-1}`, and for
/// a realized COM the `2k`-th Betti number of the complement `M_3`.
pub fn hilbert_series(l: &Com, order: &LinearOrder) -> Result<Vec<usize>> {
    require_com(l)?;
    Ok(nbc_sets_with(l, order, &circuits(l))?.counts)
}

/// The product `[h_S1] * [h_S2]` in the associated graded ring, as integer
/// coefficients on NBC sets of size `|S1| + |S2|` (nonzero entries only).
pub fn gr_multiply(l: &Com, order: &LinearOrder, s1: IndexSet, s2: IndexSet) -> Result<Vec<(IndexSet, Integer)>> {
    require_com(l)?;
    let family = nbc_sets_with(l, order, &circuits(l))?;
    for s in [s1, s2] {
        if !family.contains(s) {
            return Err(Error::Precondition(format!("{s} is not an NBC set")));
        }
    }
    let degree = s1.len() + s2.len();
    if !s1.is_disjoint(s2) {
        return Ok(Vec::new());
    }
    let m = basis_matrix(l, &family)?;
    let v = h_plus_vector(&topes(l), s1.union(s2));
    let coeffs = RowSpan::new(&m)
        .coefficients(&v)?
        .ok_or_else(|| Error::Invariant(format!("h_S for S = {} is not in the NBC span", s1.union(s2))))?;
    let mut out = Vec::new();
    for (s, c) in family.sets.iter().zip(coeffs) {
        if c == Integer::from(0) {
            continue;
        }
        if s.len() > degree {
            return Err(Error::Invariant(format!("product has a component on {s} above degree {degree}")));
        }
        if s.len() == degree {
            out.push((*s, c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{coloop, gen3, line};

    fn set(v: &[usize]) -> IndexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn basis_matrix_examples() {
        let m = nbc_basis_matrix(&line(), &LinearOrder::natural(1)).unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[1, 1], &[0, 1]]).unwrap());
        assert_eq!(determinant(&m).unwrap(), Integer::from(1));
        let m = nbc_basis_matrix(&gen3(), &LinearOrder::natural(3)).unwrap();
        assert_eq!((m.rows(), m.cols()), (6, 6));
        assert_eq!(determinant(&m).unwrap().magnitude(), &1u32.into());
    }

    #[test]
    fn verify_examples() {
        let r = verify_presentation(&gen3(), &LinearOrder::natural(3)).unwrap();
        assert!(r.holds, "{:?}", r.failures);
        assert_eq!(r.counts, vec![1, 3, 2]);
        let r = verify_presentation(&coloop(), &LinearOrder::natural(1)).unwrap();
        assert!(r.holds, "{:?}", r.failures);
        assert_eq!((r.topes, r.counts.len()), (0, 0));
        let r = verify_presentation(&Com::empty(2), &LinearOrder::natural(2)).unwrap();
        assert!(r.holds, "{:?}", r.failures);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_series(&gen3(), &LinearOrder::natural(3)).unwrap(), vec![1, 3, 2]);
        assert_eq!(hilbert_series(&line(), &LinearOrder::natural(1)).unwrap(), vec![1, 1]);
        let half = Com::from_words(1, &["+"]).unwrap();
        assert_eq!(hilbert_series(&half, &LinearOrder::natural(1)).unwrap(), vec![1]);
    }

    #[test]
    fn gr_multiply_examples() {
        let g = gen3();
        let o = LinearOrder::natural(3);
        assert_eq!(gr_multiply(&g, &o, set(&[0]), set(&[0])).unwrap(), vec![]);
        assert_eq!(gr_multiply(&g, &o, set(&[0]), set(&[1])).unwrap(), vec![(set(&[0, 1]), 1.into())]);
        assert_eq!(
            gr_multiply(&g, &o, set(&[1]), set(&[2])).unwrap(),
            vec![(set(&[0, 1]), 1.into()), (set(&[0, 2]), (-1).into())]
        );
        assert_eq!(gr_multiply(&g, &o, set(&[]), set(&[2])).unwrap(), vec![(set(&[2]), 1.into())]);
        assert!(gr_multiply(&g, &o, set(&[1, 2]), set(&[])).is_err());
    }
}
