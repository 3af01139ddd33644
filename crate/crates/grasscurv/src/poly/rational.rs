//! Quotients of Hermitian polynomials.

use num_complex::Complex64;

use super::HermitianPoly;
use crate::error::{Error, Result};

/// `|den(x)|` below this fraction of the denominator's coefficient scale
/// counts as a pole.
pub(crate) const POLE_TOL: f64 = 1e-14;

/// A real-valued rational function `num/den` with Hermitian numerator and
/// denominator. No GCD reduction is attempted; the representation is whatever
/// the producing operation yields.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianRational {
    num: HermitianPoly,
    den: HermitianPoly,
}

impl HermitianRational {
    pub fn new(num: HermitianPoly, den: HermitianPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(HermitianRational { num, den })
    }

    pub fn num(&self) -> &HermitianPoly {
        &self.num
    }

    pub fn den(&self) -> &HermitianPoly {
        &self.den
    }

    pub fn scale(&self, s: f64) -> HermitianRational {
        HermitianRational {
            num: self.num.scale(s),
            den: self.den.clone(),
        }
    }

    /// Evaluates the quotient; errors with [`Error::PoleAtPoint`] when the
    /// denominator is numerically zero at `x`.
    pub fn eval(&self, x: Complex64) -> Result<f64> {
        let den = self.den.eval(x)?;
        let scale = self.den.max_abs_coeff().max(1.0);
        if den.abs() < POLE_TOL * scale {
            return Err(Error::PoleAtPoint { x, den_abs: den.abs() });
        }
        Ok(self.num.eval(x)? / den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::BiPoly;

    #[test]
    fn rejects_zero_denominator() {
        assert!(matches!(
            HermitianRational::new(HermitianPoly::constant(1.0), HermitianPoly::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn reports_poles() {
        // |x|² / |x|² has a pole (as represented) at the origin.
        let mut b = BiPoly::zero();
        b.add_term(1, 1, Complex64::new(1.0, 0.0)).unwrap();
        let q = HermitianPoly::new(b).unwrap();
        let r = HermitianRational::new(q.clone(), q).unwrap();
        assert!(matches!(
            r.eval(Complex64::new(0.0, 0.0)),
            Err(Error::PoleAtPoint { .. })
        ));
        let v = r.eval(Complex64::new(0.5, 0.5)).unwrap();
        assert!((v - 1.0).abs() < 1e-14);
    }
}
