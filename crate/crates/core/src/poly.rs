//! Integer-coefficient polynomials in one variable.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Polynomial with exact integer coefficients; `coeffs[i]` multiplies `m^i`.
/// Trailing zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The polynomial `m`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    /// `m - c`
    pub fn var_minus(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(-c), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = IntPolynomial::constant(1);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, m: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * m + c)
    }

    pub fn eval_u64(&self, m: u64) -> BigInt {
        self.eval(&BigInt::from(m))
    }

    /// True when the nonzero coefficients alternate in sign from the leading
    /// term down, with no gaps inside the nonzero run.
    pub fn signs_alternate(&self) -> bool {
        let Some(top) = self.degree() else {
            return true;
        };
        let mut seen_zero = false;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                seen_zero = true;
                continue;
            }
            if seen_zero {
                return false;
            }
            let expect_positive = (top - i) % 2 == 0;
            if c.is_positive() != expect_positive {
                return false;
            }
        }
        true
    }

    pub fn to_json(&self) -> PolynomialJson {
        PolynomialJson {
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn from_json(json: &PolynomialJson) -> Result<Self> {
        let coeffs = json
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|e| Error::Malformed(format!("coefficient `{s}`: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_coeffs(coeffs))
    }
}

/// Wire form `{"coeffs": ["c0", "c1", ...]}`; coefficients are decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub coeffs: Vec<String>,
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        let coeffs = (0..len)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "m")?,
                _ => write!(f, "m^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn arithmetic() {
        let a = p(&[-1, 1]); // m - 1
        assert_eq!(&a * &a, p(&[1, -2, 1]));
        assert_eq!(&a - &a, IntPolynomial::zero());
        assert_eq!(a.pow(3), p(&[-1, 3, -3, 1]));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn horner_evaluation() {
        // (m-1)^4 + (m-1) at m = 3
        let c4 = &p(&[-1, 1]).pow(4) + &p(&[-1, 1]);
        assert_eq!(c4.eval_u64(3), BigInt::from(18));
        assert_eq!(c4.eval_u64(0), c4.coeffs()[0]);
        let k3 = &(&IntPolynomial::var() * &IntPolynomial::var_minus(1)) * &IntPolynomial::var_minus(2);
        assert_eq!(k3.eval_u64(2), BigInt::zero());
    }

    #[test]
    fn display_and_json() {
        let k3 = p(&[0, 2, -3, 1]);
        assert_eq!(k3.to_string(), "m^3 - 3m^2 + 2m");
        let json = serde_json::to_string(&k3.to_json()).unwrap();
        assert_eq!(json, r#"{"coeffs":["0","2","-3","1"]}"#);
        let back = IntPolynomial::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, k3);
    }

    #[test]
    fn sign_alternation() {
        assert!(p(&[0, 2, -3, 1]).signs_alternate());
        assert!(!p(&[0, 2, 3, 1]).signs_alternate());
        assert!(!p(&[1, 0, 1]).signs_alternate());
    }
}
