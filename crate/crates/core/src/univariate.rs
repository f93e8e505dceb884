//! Dense univariate polynomials in `t`, produced by line restrictions.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{ExponentVector, Polynomial};

/// Coefficients in increasing degree; trailing zeros are trimmed on construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnivariatePoly {
    coeffs: Vec<Complex64>,
}

impl UnivariatePoly {
    /// Trims trailing coefficients with modulus below `tol`.
    pub fn from_coeffs_trimmed(mut coeffs: Vec<Complex64>, tol: f64) -> Self {
        while coeffs.last().is_some_and(|c| c.norm() < tol) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Complex64>) -> Self {
        Self::from_coeffs_trimmed(coeffs, crate::poly::PRUNE_TOL)
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&r| Complex64::new(r, 0.0)).collect())
    }

    pub(crate) fn from_coeffs_raw(coeffs: Vec<Complex64>) -> Self {
        UnivariatePoly { coeffs }
    }

    pub fn one() -> Self {
        UnivariatePoly {
            coeffs: vec![Complex64::one()],
        }
    }

    pub fn constant(c: Complex64) -> Self {
        UnivariatePoly { coeffs: vec![c] }
    }

    /// Builds `c · Π (t - r_k)`.
    pub fn from_roots(leading: Complex64, roots: &[Complex64]) -> Self {
        let mut p = Self::constant(leading);
        for &r in roots {
            p = p.mul(&UnivariatePoly::from_coeffs_raw(vec![-r, Complex64::one()]));
        }
        p
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<Complex64> {
        self.coeffs.last().copied()
    }

    pub fn eval(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, &c| acc * t + c)
    }

    /// `Σ |a_k| |t|^k`, the scale against which `|p(t)|` is judged.
    pub fn abs_eval(&self, t: Complex64) -> f64 {
        let r = t.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    pub fn derivative(&self) -> Self {
        UnivariatePoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UnivariatePoly { coeffs: Vec::new() };
        }
        let mut out = vec![Complex64::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePoly { coeffs: out }
    }

    /// The same polynomial as a one-variable [`Polynomial`].
    pub fn to_polynomial(&self) -> Polynomial {
        Polynomial::from_terms(
            1,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| (ExponentVector::new(vec![k as u32]), c)),
        )
        .expect("single variable")
    }
}
