//! Exact integer linear algebra: Hermite normal form, Bareiss determinant,
//! rank and integer row-span membership.
//!
//! HNF convention (row style): `H = U * M` with `U` unimodular; the nonzero
//! rows of `H` come first, each has a positive pivot strictly to the right of
//! the pivot above it, and every entry above a pivot lies in `[0, pivot)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::IntScalar;

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: IntScalar> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Matrix<T>> {
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix<T> {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix<T> {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    /// Builds from rows; `cols` is needed when there are no rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Matrix<T>> {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Dimension {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Matrix<T>> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| T::from(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Matrix<T> {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let v = out.get(r, c).clone() + a.clone() * other.get(k, c).clone();
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_mul_vec(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.rows {
            return Err(Error::Dimension {
                expected: self.rows,
                found: v.len(),
            });
        }
        let mut out = vec![T::zero(); self.cols];
        for (r, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = o.clone() + a.clone() * self.get(r, c).clone();
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// `row[dst] -= q * row[src]`.
    fn sub_row(&mut self, dst: usize, src: usize, q: &T) {
        for c in 0..self.cols {
            let v = self.get(dst, c).clone() - q.clone() * self.get(src, c).clone();
            self.set(dst, c, v);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = -self.get(r, c).clone();
            self.set(r, c, v);
        }
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[r * self.cols + c])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Row-style Hermite normal form `(H, U)` with `H = U * M`.
pub fn hermite_normal_form<T: IntScalar>(m: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let mut h = m.clone();
    let mut u = Matrix::identity(m.rows);
    let mut p = 0;
    for c in 0..m.cols {
        if p == m.rows {
            break;
        }
        // Euclid on column c among rows p.., smallest nonzero magnitude first.
        loop {
            let best = (p..h.rows)
                .filter(|&r| !h.get(r, c).is_zero())
                .min_by(|&a, &b| h.get(a, c).abs().cmp(&h.get(b, c).abs()));
            let Some(best) = best else { break };
            h.swap_rows(p, best);
            u.swap_rows(p, best);
            let mut done = true;
            for r in p + 1..h.rows {
                if h.get(r, c).is_zero() {
                    continue;
                }
                let q = h.get(r, c).div_floor(h.get(p, c));
                h.sub_row(r, p, &q);
                u.sub_row(r, p, &q);
                if !h.get(r, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(p, c).is_zero() {
            continue;
        }
        if h.get(p, c).is_negative() {
            h.negate_row(p);
            u.negate_row(p);
        }
        for r in 0..p {
            let q = h.get(r, c).div_floor(h.get(p, c));
            if !q.is_zero() {
                h.sub_row(r, p, &q);
                u.sub_row(r, p, &q);
            }
        }
        p += 1;
    }
    (h, u)
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant<T: IntScalar>(m: &Matrix<T>) -> Result<T> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(T::zero());
            };
            a.swap_rows(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j).clone() * a.get(k, k).clone() - a.get(i, k).clone() * a.get(k, j).clone())
                    / prev.clone();
                a.set(i, j, v);
            }
            a.set(i, k, T::zero());
        }
        prev = a.get(k, k).clone();
    }
    let d = if n == 0 { T::one() } else { a.get(n - 1, n - 1).clone() };
    Ok(if negate { -d } else { d })
}

/// Rank over the rationals.
pub fn rank<T: IntScalar>(m: &Matrix<T>) -> usize {
    RowSpan::new(m).rank()
}

/// Coefficients `y` of `v` over the rows of an HNF matrix, if they exist.
fn solve_hnf<T: IntScalar>(h: &Matrix<T>, v: &[T]) -> Option<Vec<T>> {
    let mut rest = v.to_vec();
    let mut y = vec![T::zero(); h.rows];
    for (r, yr) in y.iter_mut().enumerate() {
        let Some(c) = h.row(r).iter().position(|x| !x.is_zero()) else {
            break;
        };
        if rest[..c].iter().any(|x| !x.is_zero()) {
            return None;
        }
        let piv = h.get(r, c);
        if !rest[c].is_multiple_of(piv) {
            return None;
        }
        let q = rest[c].clone() / piv.clone();
        for (k, x) in rest.iter_mut().enumerate().skip(c) {
            *x = x.clone() - q.clone() * h.get(r, k).clone();
        }
        *yr = q;
    }
    rest.iter().all(|x| x.is_zero()).then_some(y)
}

fn check_width<T>(m: &Matrix<T>, v: &[T]) -> Result<()> {
    if v.len() != m.cols {
        return Err(Error::Dimension {
            expected: m.cols,
            found: v.len(),
        });
    }
    Ok(())
}

/// The integer row span of a matrix, with its HNF computed once for repeated queries.
pub struct RowSpan<T> {
    h: Matrix<T>,
    u: Matrix<T>,
}

impl<T: IntScalar> RowSpan<T> {
    pub fn new(m: &Matrix<T>) -> RowSpan<T> {
        let (h, u) = hermite_normal_form(m);
        RowSpan { h, u }
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        (0..self.h.rows)
            .take_while(|&r| self.h.row(r).iter().any(|v| !v.is_zero()))
            .count()
    }

    pub fn contains(&self, v: &[T]) -> Result<bool> {
        check_width(&self.h, v)?;
        Ok(solve_hnf(&self.h, v).is_some())
    }

    /// Integer coefficients `c` with `c * M = v`, if any exist.
    pub fn coefficients(&self, v: &[T]) -> Result<Option<Vec<T>>> {
        check_width(&self.h, v)?;
        match solve_hnf(&self.h, v) {
            Some(y) => Ok(Some(self.u.left_mul_vec(&y)?)),
            None => Ok(None),
        }
    }
}

/// `true` iff `v` is an integer combination of the rows of `m`.
pub fn in_row_span<T: IntScalar>(m: &Matrix<T>, v: &[T]) -> Result<bool> {
    check_width(m, v)?;
    RowSpan::new(m).contains(v)
}

/// Integer coefficients `c` with `c * M = v`, if any exist.
pub fn row_span_coefficients<T: IntScalar>(m: &Matrix<T>, v: &[T]) -> Result<Option<Vec<T>>> {
    check_width(m, v)?;
    RowSpan::new(m).coefficients(v)
}
