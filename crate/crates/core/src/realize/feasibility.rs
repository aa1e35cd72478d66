//! Exact strict linear feasibility.
//!
//! Equalities are removed by Gaussian elimination, which parametrizes their
//! solution set by the free variables. The remaining strict system is decided
//! by Fourier–Motzkin elimination: combining a lower bound `p*t > ...` and an
//! upper bound `-q*t > ...` with the positive multipliers `q`, `p` yields a
//! strict inequality, and a strict system is infeasible exactly when this
//! process produces `0 > d` with `d >= 0`. Every step uses field operations
//! only, so over the rationals the decision (and the witness built by
//! back-substitution) is rational. In particular a strict rational system has
//! a real solution iff it has a rational one.

use crate::error::{Error, Result};
use crate::scalar::OrderedField;

/// `coeffs . x (op) rhs`.
type Row<F> = (Vec<F>, F);

fn check_dims<F>(dim: usize, rows: &[Row<F>]) -> Result<()> {
    match rows.iter().find(|(a, _)| a.len() != dim) {
        Some((a, _)) => Err(Error::Dimension {
            expected: dim,
            found: a.len(),
        }),
        None => Ok(()),
    }
}

/// `true` iff some `x` satisfies `a.x = b` for every equality and `c.x > d`
/// for every strict inequality.
pub fn strictly_feasible<F: OrderedField>(dim: usize, equalities: &[Row<F>], stricts: &[Row<F>]) -> Result<bool> {
    Ok(feasible_point(dim, equalities, stricts)?.is_some())
}

/// A point satisfying the system, if one exists.
pub fn feasible_point<F: OrderedField>(
    dim: usize,
    equalities: &[Row<F>],
    stricts: &[Row<F>],
) -> Result<Option<Vec<F>>> {
    check_dims(dim, equalities)?;
    check_dims(dim, stricts)?;
    let Some(param) = Parametrization::solve(dim, equalities) else {
        return Ok(None);
    };
    let reduced: Vec<Row<F>> = stricts.iter().map(|r| param.substitute(r)).collect();
    Ok(strict_point(param.free.len(), reduced).map(|t| param.point(&t)))
}

/// Solution set of the equalities: `x[pivot_r] = rhs_r - sum_f coeff_r[f] * t_f`
/// over the free variables `t`.
struct Parametrization<F> {
    dim: usize,
    free: Vec<usize>,
    pivots: Vec<usize>,
    /// Reduced rows: coefficients on the free variables and the right-hand side.
    rows: Vec<Row<F>>,
}

impl<F: OrderedField> Parametrization<F> {
    fn solve(dim: usize, equalities: &[Row<F>]) -> Option<Parametrization<F>> {
        let mut m: Vec<Row<F>> = equalities.to_vec();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..dim {
            let Some(p) = (r..m.len())
                .filter(|&i| !m[i].0[c].is_zero())
                .max_by(|&i, &j| m[i].0[c].abs().partial_cmp(&m[j].0[c].abs()).expect("ordered"))
            else {
                continue;
            };
            m.swap(r, p);
            let inv = F::one() / m[r].0[c].clone();
            for v in m[r].0.iter_mut() {
                *v = v.clone() * inv.clone();
            }
            m[r].1 = m[r].1.clone() * inv;
            for i in 0..m.len() {
                if i == r || m[i].0[c].is_zero() {
                    continue;
                }
                let f = m[i].0[c].clone();
                for k in 0..dim {
                    let v = m[i].0[k].clone() - f.clone() * m[r].0[k].clone();
                    m[i].0[k] = v;
                }
                m[i].1 = m[i].1.clone() - f * m[r].1.clone();
            }
            pivots.push(c);
            r += 1;
        }
        if m[r..].iter().any(|(_, b)| !b.is_zero()) {
            return None;
        }
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let rows = m[..r]
            .iter()
            .map(|(a, b)| (free.iter().map(|&f| a[f].clone()).collect(), b.clone()))
            .collect();
        Some(Parametrization {
            dim,
            free,
            pivots,
            rows,
        })
    }

    /// Rewrites `c.x > d` over the free variables.
    fn substitute(&self, (c, d): &Row<F>) -> Row<F> {
        let mut g: Vec<F> = self.free.iter().map(|&f| c[f].clone()).collect();
        let mut h = d.clone();
        for (&p, (coeff, rhs)) in self.pivots.iter().zip(&self.rows) {
            let cp = &c[p];
            if cp.is_zero() {
                continue;
            }
            for (gf, a) in g.iter_mut().zip(coeff) {
                *gf = gf.clone() - cp.clone() * a.clone();
            }
            h = h - cp.clone() * rhs.clone();
        }
        (g, h)
    }

    fn point(&self, t: &[F]) -> Vec<F> {
        let mut x = vec![F::zero(); self.dim];
        for (&f, v) in self.free.iter().zip(t) {
            x[f] = v.clone();
        }
        for (&p, (coeff, rhs)) in self.pivots.iter().zip(&self.rows) {
            let mut v = rhs.clone();
            for (a, tf) in coeff.iter().zip(t) {
                v = v - a.clone() * tf.clone();
            }
            x[p] = v;
        }
        x
    }
}

/// Scales each row so its first nonzero coefficient has magnitude one, drops
/// trivially true rows and keeps only the strongest row per direction.
/// `None` when some row reads `0 > d` with `d >= 0`.
fn normalize<F: OrderedField>(rows: Vec<Row<F>>) -> Option<Vec<Row<F>>> {
    let mut out: Vec<Row<F>> = Vec::with_capacity(rows.len());
    for (g, h) in rows {
        let Some(lead) = g.iter().find(|v| !v.is_zero()).map(|v| v.abs()) else {
            if h < F::zero() {
                continue;
            }
            return None;
        };
        let g: Vec<F> = g.into_iter().map(|v| v / lead.clone()).collect();
        let h = h / lead;
        match out.iter_mut().find(|(og, _)| *og == g) {
            Some(existing) => {
                if h > existing.1 {
                    existing.1 = h;
                }
            }
            None => out.push((g, h)),
        }
    }
    Some(out)
}

/// Fourier–Motzkin on `g.t > h` over `k` variables, followed by
/// back-substitution.
fn strict_point<F: OrderedField>(k: usize, rows: Vec<Row<F>>) -> Option<Vec<F>> {
    // stages[j] holds the system over t_0..t_j, before t_j is eliminated.
    let mut stages: Vec<Vec<Row<F>>> = vec![Vec::new(); k];
    let mut cur = normalize(rows)?;
    for j in (0..k).rev() {
        let mut next = Vec::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for row in &cur {
            if row.0[j] > F::zero() {
                lower.push(row);
            } else if row.0[j] < F::zero() {
                upper.push(row);
            } else {
                next.push(row.clone());
            }
        }
        for lo in &lower {
            for up in &upper {
                let p = lo.0[j].clone();
                let q = -up.0[j].clone();
                let g: Vec<F> = lo
                    .0
                    .iter()
                    .zip(&up.0)
                    .map(|(a, b)| q.clone() * a.clone() + p.clone() * b.clone())
                    .collect();
                let h = q.clone() * lo.1.clone() + p.clone() * up.1.clone();
                next.push((g, h));
            }
        }
        stages[j] = cur;
        cur = normalize(next)?;
    }
    // After eliminating everything only satisfied constant rows can remain.
    debug_assert!(cur.is_empty());

    let two = F::from_i64(2);
    let mut t: Vec<F> = Vec::with_capacity(k);
    for (j, stage) in stages.iter().enumerate() {
        let mut lo: Option<F> = None;
        let mut hi: Option<F> = None;
        for (g, h) in stage {
            let gj = &g[j];
            if gj.is_zero() {
                continue;
            }
            let mut rest = h.clone();
            for (a, tv) in g[..j].iter().zip(&t) {
                rest = rest - a.clone() * tv.clone();
            }
            let bound = rest / gj.clone();
            if *gj > F::zero() {
                if lo.as_ref().is_none_or(|l| bound > *l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|u| bound < *u) {
                hi = Some(bound);
            }
        }
        let v = match (lo, hi) {
            (Some(l), Some(u)) => (l + u) / two.clone(),
            (Some(l), None) => l + F::one(),
            (None, Some(u)) => u - F::one(),
            (None, None) => F::zero(),
        };
        t.push(v);
    }
    Some(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Q = BigRational;

    fn q(v: i64) -> Q {
        Q::from_integer(v.into())
    }

    fn row(a: &[i64], b: i64) -> (Vec<Q>, Q) {
        (a.iter().map(|&v| q(v)).collect(), q(b))
    }

    fn satisfies(x: &[Q], eqs: &[(Vec<Q>, Q)], st: &[(Vec<Q>, Q)]) -> bool {
        let dot = |a: &[Q]| a.iter().zip(x).fold(q(0), |s, (a, b)| s + a * b);
        eqs.iter().all(|(a, b)| dot(a) == *b) && st.iter().all(|(c, d)| dot(c) > *d)
    }

    #[test]
    fn examples() {
        assert!(!strictly_feasible(1, &[row(&[1], 0)], &[row(&[1], 0)]).unwrap());
        assert!(strictly_feasible::<Q>(1, &[], &[row(&[1], 0), row(&[-1], -1)]).unwrap());
        assert!(!strictly_feasible(2, &[row(&[1, 1], 0)], &[row(&[1, 0], 0), row(&[0, 1], 0)]).unwrap());
        assert!(strictly_feasible::<Q>(1, &[], &[row(&[1], 0), row(&[1], 0)]).unwrap());
        assert!(!strictly_feasible::<Q>(1, &[], &[row(&[1], 0), row(&[-1], 0)]).unwrap());
        assert!(strictly_feasible::<Q>(0, &[], &[]).unwrap());
        assert!(!strictly_feasible::<Q>(0, &[], &[row(&[], 0)]).unwrap());
        assert!(strictly_feasible::<Q>(1, &[], &[row(&[2, 1], 1)]).is_err());
    }

    #[test]
    fn inconsistent_equalities() {
        let eqs = [row(&[1, 1], 1), row(&[2, 2], 3)];
        assert_eq!(feasible_point::<Q>(2, &eqs, &[]).unwrap(), None);
        let eqs = [row(&[1, 1], 1), row(&[2, 2], 2)];
        assert!(feasible_point::<Q>(2, &eqs, &[]).unwrap().is_some());
    }

    #[test]
    fn witness_points_satisfy_the_system() {
        let cases: Vec<(usize, Vec<(Vec<Q>, Q)>, Vec<(Vec<Q>, Q)>)> = vec![
            (1, vec![], vec![row(&[1], 0), row(&[-1], -1)]),
            (2, vec![], vec![row(&[1, 1], 0), row(&[1, -1], 0), row(&[-1, 0], -3)]),
            (3, vec![row(&[1, 1, 1], 2)], vec![row(&[1, 0, 0], 0), row(&[0, 1, 0], 0), row(&[0, 0, 1], 0)]),
            (2, vec![row(&[0, 1], 5)], vec![row(&[1, 0], 7)]),
            (2, vec![], vec![row(&[0, 1], -2), row(&[0, -1], 0), row(&[3, 1], 4)]),
        ];
        for (dim, eqs, st) in cases {
            let x = feasible_point(dim, &eqs, &st).unwrap().expect("feasible");
            assert!(satisfies(&x, &eqs, &st), "{x:?}");
        }
    }

    #[test]
    fn triangle_and_its_complement() {
        // Open triangle x > 0, y > 0, x + y < 1 intersected with x + y > 1 is empty.
        let st = [row(&[1, 0], 0), row(&[0, 1], 0), row(&[-1, -1], -1)];
        assert!(strictly_feasible::<Q>(2, &[], &st).unwrap());
        let mut more = st.to_vec();
        more.push(row(&[1, 1], 1));
        assert!(!strictly_feasible::<Q>(2, &[], &more).unwrap());
        // Touching the boundary line is not enough for strict feasibility.
        assert!(!strictly_feasible::<Q>(2, &[row(&[1, 1], 1)], &st).unwrap());
    }

    #[test]
    fn floating_point_instance() {
        let st = vec![(vec![1.0f64], 0.0), (vec![-1.0], -1.0)];
        let x = feasible_point(1, &[], &st).unwrap().unwrap();
        assert!(x[0] > 0.0 && x[0] < 1.0);
    }
}
