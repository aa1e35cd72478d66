use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::Integer;

/// A polynomial in `u` with integer coefficients, stored low to high with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UPoly {
    coeffs: Vec<Integer>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Integer>) -> UPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> UPoly {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UPoly {
        UPoly::constant(1)
    }

    pub fn constant(c: i64) -> UPoly {
        UPoly::new(vec![c.into()])
    }

    /// `c * u^k`.
    pub fn monomial(c: Integer, k: usize) -> UPoly {
        let mut coeffs = vec![Integer::zero(); k];
        coeffs.push(c);
        UPoly::new(coeffs)
    }

    pub fn u() -> UPoly {
        UPoly::monomial(Integer::one(), 1)
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Integer {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Exact division by `u`; `None` when the constant term is nonzero.
    pub fn div_u(&self) -> Option<UPoly> {
        match self.coeffs.first() {
            None => Some(UPoly::zero()),
            Some(c) if c.is_zero() => Some(UPoly::new(self.coeffs[1..].to_vec())),
            Some(_) => None,
        }
    }

    pub fn eval(&self, u: &Integer) -> Integer {
        self.coeffs.iter().rev().fold(Integer::zero(), |acc, c| acc * u + c)
    }

    pub fn pow(&self, k: u32) -> UPoly {
        (0..k).fold(UPoly::one(), |acc, _| &acc * self)
    }
}

impl Add for &UPoly {
    type Output = UPoly;

    fn add(self, other: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }
}

impl Sub for &UPoly {
    type Output = UPoly;

    fn sub(self, other: &UPoly) -> UPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        UPoly::new((0..len).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }
}

impl Mul for &UPoly {
    type Output = UPoly;

    fn mul(self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Integer::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::new(out)
    }
}

impl Add for UPoly {
    type Output = UPoly;

    fn add(self, other: UPoly) -> UPoly {
        &self + &other
    }
}

impl Mul for UPoly {
    type Output = UPoly;

    fn mul(self, other: UPoly) -> UPoly {
        &self * &other
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Integer::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("u")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Serialized as the low-to-high coefficient list, each as a decimal string.
impl Serialize for UPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&c| c.into()).collect())
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[1, 1]) - &p(&[1, 1]), UPoly::zero());
        assert_eq!(&p(&[0, 3]) + &p(&[2]), p(&[2, 3]));
        assert_eq!(p(&[0, 0, 5]).div_u(), Some(p(&[0, 5])));
        assert_eq!(p(&[1, 1]).div_u(), None);
        assert_eq!(UPoly::u().pow(3), UPoly::monomial(1.into(), 3));
        assert_eq!(p(&[1, 2, 3]).eval(&2.into()), Integer::from(17));
        assert_eq!(UPoly::zero().degree(), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 0, 1]).to_string(), "u^2 - 1");
        assert_eq!(p(&[0, -2]).to_string(), "-2*u");
        assert_eq!(UPoly::zero().to_string(), "0");
    }
}
