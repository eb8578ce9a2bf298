//! Univariate polynomials in a vanishing parameter `ε` with exact rational
//! coefficients, used for parametric sequences of distributions.
//!
//! The property that matters is the sign for all sufficiently small `ε > 0`:
//! a nonzero polynomial has constant sign on some interval `(0, δ)`, given by
//! the sign of its lowest-order nonzero coefficient.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// `Σ_k coeffs[k] ε^k`, trailing zeros trimmed (the zero polynomial has no coefficients).
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct EpsPolynomial {
    coeffs: Vec<Rational>,
}

impl EpsPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        EpsPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        EpsPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `c ε^power`.
    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::new(coeffs)
    }

    /// The polynomial `ε`.
    pub fn eps() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `ε^power` (zero past the degree).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Power and coefficient of the lowest-order nonzero term.
    pub fn leading_term_near_zero(&self) -> Option<(usize, &Rational)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    /// Sign of the polynomial on `(0, δ)` for small enough `δ`.
    pub fn sign_near_zero(&self) -> Ordering {
        match self.leading_term_near_zero() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn is_positive_near_zero(&self) -> bool {
        self.sign_near_zero() == Ordering::Greater
    }

    pub fn is_nonnegative_near_zero(&self) -> bool {
        self.sign_near_zero() != Ordering::Less
    }

    pub fn is_nonpositive_near_zero(&self) -> bool {
        self.sign_near_zero() != Ordering::Greater
    }

    pub fn eval(&self, eps: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * eps + c;
        }
        acc
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        EpsPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add_scaled(&mut self, other: &EpsPolynomial, factor: &Rational) {
        if factor.is_zero() || other.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += b * factor;
            }
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl From<Vec<Rational>> for EpsPolynomial {
    fn from(coeffs: Vec<Rational>) -> Self {
        EpsPolynomial::new(coeffs)
    }
}

impl From<EpsPolynomial> for Vec<Rational> {
    fn from(p: EpsPolynomial) -> Self {
        p.coeffs
    }
}

impl From<Rational> for EpsPolynomial {
    fn from(c: Rational) -> Self {
        EpsPolynomial::constant(c)
    }
}

impl<'b> Add<&'b EpsPolynomial> for &EpsPolynomial {
    type Output = EpsPolynomial;
    fn add(self, rhs: &'b EpsPolynomial) -> EpsPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl Add for EpsPolynomial {
    type Output = EpsPolynomial;
    fn add(self, rhs: EpsPolynomial) -> EpsPolynomial {
        &self + &rhs
    }
}

impl<'b> Sub<&'b EpsPolynomial> for &EpsPolynomial {
    type Output = EpsPolynomial;
    fn sub(self, rhs: &'b EpsPolynomial) -> EpsPolynomial {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl Sub for EpsPolynomial {
    type Output = EpsPolynomial;
    fn sub(self, rhs: EpsPolynomial) -> EpsPolynomial {
        &self - &rhs
    }
}

impl<'b> Mul<&'b EpsPolynomial> for &EpsPolynomial {
    type Output = EpsPolynomial;
    fn mul(self, rhs: &'b EpsPolynomial) -> EpsPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return EpsPolynomial::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        EpsPolynomial::new(coeffs)
    }
}

impl Mul for EpsPolynomial {
    type Output = EpsPolynomial;
    fn mul(self, rhs: EpsPolynomial) -> EpsPolynomial {
        &self * &rhs
    }
}

impl Neg for EpsPolynomial {
    type Output = EpsPolynomial;
    fn neg(self) -> EpsPolynomial {
        EpsPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for &EpsPolynomial {
    type Output = EpsPolynomial;
    fn neg(self) -> EpsPolynomial {
        -self.clone()
    }
}

impl fmt::Display for EpsPolynomial {
    /// e.g. `-9/16 + 7/4ε - 1/2ε^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if k == 1 {
                        write!(f, "ε")?;
                    } else {
                        write!(f, "ε^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EpsPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn trims_and_degree() {
        let p = EpsPolynomial::new(vec![q(1, 1), q(0, 1), q(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert_eq!(EpsPolynomial::new(vec![q(0, 1)]), EpsPolynomial::zero());
        assert_eq!(EpsPolynomial::zero().degree(), None);
    }

    #[test]
    fn sign_near_zero_uses_lowest_order_term() {
        let p = EpsPolynomial::new(vec![q(0, 1), q(-1, 1000), q(5, 1)]);
        assert_eq!(p.sign_near_zero(), Ordering::Less);
        assert_eq!(EpsPolynomial::zero().sign_near_zero(), Ordering::Equal);
        assert!(EpsPolynomial::from_integers(&[3, -11, 8]).is_positive_near_zero());
    }

    #[test]
    fn product_of_tremble_rows() {
        // (1 - 3ε)(1 - ε) = 1 - 4ε + 3ε²
        let a = EpsPolynomial::from_integers(&[1, -3]);
        let b = EpsPolynomial::from_integers(&[1, -1]);
        assert_eq!(&a * &b, EpsPolynomial::from_integers(&[1, -4, 3]));
        assert_eq!(&a - &a, EpsPolynomial::zero());
    }

    #[test]
    fn display() {
        let p = EpsPolynomial::new(vec![q(-9, 16), q(7, 4), q(-1, 2)]);
        assert_eq!(p.to_string(), "-9/16 + 7/4ε - 1/2ε^2");
        assert_eq!(EpsPolynomial::monomial(q(6, 1), 1).to_string(), "6ε");
        assert_eq!(EpsPolynomial::eps().to_string(), "ε");
        assert_eq!(EpsPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn eval_horner() {
        let p = EpsPolynomial::from_integers(&[3, -11, 8]);
        assert_eq!(p.eval(&q(1, 2)), q(-1, 2));
        assert_eq!(p.eval(&Rational::zero()), q(3, 1));
    }

    #[test]
    fn serde_as_coefficient_list() {
        let p = EpsPolynomial::new(vec![q(1, 1), q(-2, 1), q(-1, 1)]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"["1","-2","-1"]"#);
        let back: EpsPolynomial = serde_json::from_str(&text).unwrap();
        assert_eq!(back, p);
    }
}
