//! Univariate holomorphic polynomials.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_complex::Complex64;

use super::{BiPoly, DEGREE_CAP};
use crate::error::{Error, Result};

/// A polynomial in the holomorphic coordinate `x`, stored as dense
/// coefficients in ascending degree order.
///
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty vector. Degrees are capped at [`DEGREE_CAP`].
#[derive(Debug, Clone, PartialEq)]
pub struct HoloPoly {
    coeffs: Vec<Complex64>,
}

impl HoloPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        let mut p = HoloPoly { coeffs };
        p.normalize();
        p.check_cap()?;
        Ok(p)
    }

    /// Convenience constructor from real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        HoloPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = HoloPoly { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// `c · x^deg`.
    pub fn monomial(c: Complex64, deg: u32) -> Result<Self> {
        if deg > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: deg, cap: DEGREE_CAP });
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); deg as usize + 1];
        coeffs[deg as usize] = c;
        let mut p = HoloPoly { coeffs };
        p.normalize();
        Ok(p)
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|c| c.re == 0.0 && c.im == 0.0)
        {
            self.coeffs.pop();
        }
    }

    fn check_cap(&self) -> Result<()> {
        match self.degree() {
            Some(d) if d > DEGREE_CAP => Err(Error::DegreeOverflow { degree: d, cap: DEGREE_CAP }),
            _ => Ok(()),
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as u32 - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^j` (zero past the degree).
    pub fn coeff(&self, j: u32) -> Complex64 {
        self.coeffs
            .get(j as usize)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut p = HoloPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        };
        p.normalize();
        p
    }

    /// Product of two polynomials; errors if the result would pass the
    /// degree cap.
    pub fn try_mul(&self, rhs: &HoloPoly) -> Result<Self> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero());
        }
        let deg = self.coeffs.len() + rhs.coeffs.len() - 2;
        if deg as u32 > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: deg as u32, cap: DEGREE_CAP });
        }
        let mut out = vec![Complex64::new(0.0, 0.0); deg + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = HoloPoly { coeffs: out };
        p.normalize();
        Ok(p)
    }

    /// Formal derivative d/dx.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (j, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c * j as f64);
        }
        let mut p = HoloPoly { coeffs: out };
        p.normalize();
        p
    }

    /// Horner evaluation at a point.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `self(x) · conj(rhs(x))` as a bivariate polynomial in `x` and
    /// `conj(x)`: coefficient `(j, k)` is `self_j · conj(rhs_k)`.
    ///
    /// The result is Hermitian-symmetric exactly when `self == rhs` (then it
    /// is `|self(x)|²`); for distinct arguments it is a general bivariate
    /// polynomial.
    pub fn mul_conj(&self, rhs: &HoloPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (j, a) in self.coeffs.iter().enumerate() {
            if a.re == 0.0 && a.im == 0.0 {
                continue;
            }
            for (k, b) in rhs.coeffs.iter().enumerate() {
                if b.re == 0.0 && b.im == 0.0 {
                    continue;
                }
                // Degrees are individually capped, so the insert cannot fail.
                out.add_term(j as u32, k as u32, a * b.conj())
                    .expect("mul_conj stays within the degree cap");
            }
        }
        out
    }
}

impl Add for &HoloPoly {
    type Output = HoloPoly;

    fn add(self, rhs: &HoloPoly) -> HoloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j as u32) + rhs.coeff(j as u32));
        }
        let mut p = HoloPoly { coeffs: out };
        p.normalize();
        p
    }
}

impl Sub for &HoloPoly {
    type Output = HoloPoly;

    fn sub(self, rhs: &HoloPoly) -> HoloPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            out.push(self.coeff(j as u32) - rhs.coeff(j as u32));
        }
        let mut p = HoloPoly { coeffs: out };
        p.normalize();
        p
    }
}

impl Neg for &HoloPoly {
    type Output = HoloPoly;

    fn neg(self) -> HoloPoly {
        HoloPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for HoloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.re == 0.0 && c.im == 0.0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if j == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})·x^{j}")?;
            }
        }
        Ok(())
    }
}
