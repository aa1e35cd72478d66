use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::Integer;

/// Exponent vector of a monomial.
pub type Exponents = Vec<u32>;

/// Descending graded lexicographic order: higher total degree first, then
/// lexicographically larger exponent vectors (variable 0 is the largest).
pub fn grlex_desc(a: &Exponents, b: &Exponents) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    db.cmp(&da).then_with(|| b.cmp(a))
}

/// A polynomial with integer coefficients in `nvars` variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Exponents, Integer>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: String,
    pub exponents: Exponents,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Integer) -> Poly {
        let mut p = Poly::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, k: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[k] = 1;
        let mut p = Poly::zero(nvars);
        p.add_term(e, Integer::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exponents, c: Integer) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Terms in descending graded lexicographic order.
    pub fn terms(&self) -> Vec<(&Exponents, &Integer)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| grlex_desc(a.0, b.0));
        v
    }

    pub fn leading(&self) -> Option<(&Exponents, &Integer)> {
        self.terms().into_iter().next()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            Some(d) => degs.all(|x| x == d),
            None => true,
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Sets variable `k` to the integer `v` (the variable stays, with exponent zero).
    pub fn substitute(&self, k: usize, v: &Integer) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            let pw = e[k];
            e[k] = 0;
            out.add_term(e, c * num_traits::pow(v.clone(), pw as usize));
        }
        out
    }

    /// Removes variable `k`, which must not occur.
    pub fn drop_var(&self, k: usize) -> Poly {
        assert!(self.terms.keys().all(|e| e[k] == 0), "variable still occurs");
        Poly {
            nvars: self.nvars - 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.remove(k);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by variable `k`; `None` if some term does not contain it.
    pub fn div_var(&self, k: usize) -> Option<Poly> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[k] == 0 {
                return None;
            }
            let mut e = e.clone();
            e[k] -= 1;
            out.add_term(e, c.clone());
        }
        Some(out)
    }

    /// The same polynomial with a positive leading coefficient.
    pub fn normalized(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// Evaluates term by term: `coeff` maps coefficients and `power(k, p)`
    /// gives the `p`-th power of variable `k`.
    pub fn eval_with<V, C, P>(&self, zero: V, mut coeff: C, mut power: P) -> V
    where
        V: std::ops::Add<Output = V> + std::ops::Mul<Output = V>,
        C: FnMut(&Integer) -> V,
        P: FnMut(usize, u32) -> V,
    {
        let mut acc = zero;
        for (e, c) in &self.terms {
            let mut term = coeff(c);
            for (k, &p) in e.iter().enumerate() {
                if p > 0 {
                    term = term * power(k, p);
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::constant(self.nvars, Integer::one()), |acc, _| acc.mul(self))
    }

    pub fn structured(&self) -> Vec<Term> {
        self.terms()
            .into_iter()
            .map(|(e, c)| Term {
                coefficient: c.to_string(),
                exponents: e.clone(),
            })
            .collect()
    }

    /// Renders with the given variable names and multiplication sign.
    pub fn render(&self, names: &[String], times: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let factors: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| if p == 1 { names[k].clone() } else { format!("{}^{}", names[k], p) })
                .collect();
            if factors.is_empty() {
                let _ = write!(out, "{mag}");
            } else {
                if !mag.is_one() {
                    let _ = write!(out, "{mag}{times}");
                }
                out.push_str(&factors.join(times));
            }
        }
        out
    }
}

impl std::ops::Add for Poly {
    type Output = Poly;

    fn add(self, other: Poly) -> Poly {
        Poly::add(&self, &other)
    }
}

impl std::ops::Mul for Poly {
    type Output = Poly;

    fn mul(self, other: Poly) -> Poly {
        Poly::mul(&self, &other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        ["a", "b", "u"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn arithmetic_and_order() {
        let a = Poly::var(3, 0);
        let b = Poly::var(3, 1);
        let u = Poly::var(3, 2);
        let p = a.mul(&b.sub(&u));
        assert_eq!(p.render(&names(), "*"), "a*b - a*u");
        let q = a.mul(&a).sub(&u.mul(&a)).add(&Poly::constant(3, 2.into()));
        assert_eq!(q.render(&names(), "*"), "a^2 - a*u + 2");
        assert!(!q.is_homogeneous());
        assert_eq!(p.div_var(0).unwrap().render(&names(), "*"), "b - u");
        assert!(q.div_var(2).is_none());
        assert_eq!(p.substitute(2, &Integer::zero()).render(&names(), "*"), "a*b");
        assert_eq!(p.neg().normalized(), p);
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn evaluation() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let p = a.mul(&b).add(&b).sub(&Poly::constant(2, 3.into()));
        let v: Integer = p.eval_with(Integer::zero(), |c| c.clone(), |k, pw| {
            num_traits::pow(Integer::from(if k == 0 { 2 } else { 5 }), pw as usize)
        });
        assert_eq!(v, Integer::from(12));
    }
}
