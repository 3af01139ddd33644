//! Hermitian-symmetric bivariate polynomials (real-valued on the plane).

use num_complex::Complex64;

use super::{binomial, BiPoly, HermitianRational, STRUCT_TOL};
use crate::error::{Error, Result};

/// Tolerance on the imaginary residue of an evaluation that must be real,
/// relative to `1 + |Re|`.
pub(crate) const EVAL_IM_TOL: f64 = 1e-9;

/// A [`BiPoly`] whose coefficient map satisfies `c(k,j) = conj(c(j,k))`.
///
/// Such a polynomial takes real values everywhere; Gram determinants and
/// energy-density numerators/denominators all have this shape. The canonical
/// form stores both `(j,k)` and `(k,j)` entries, the lower one derived from
/// the upper by conjugation and the diagonal purely real.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianPoly {
    inner: BiPoly,
}

impl HermitianPoly {
    /// Validates Hermitian symmetry (within [`STRUCT_TOL`] relative to the
    /// largest coefficient) and canonicalizes.
    pub fn new(b: BiPoly) -> Result<Self> {
        let scale = b.max_abs_coeff().max(1.0);
        for (j, k, c) in b.terms() {
            let defect = (b.coeff(k, j) - c.conj()).norm();
            if defect > STRUCT_TOL * scale {
                return Err(Error::NotHermitian { j, k, defect });
            }
        }
        let mut canon = BiPoly::zero();
        for (j, k, c) in b.terms() {
            if j < k {
                // Averaging with the mirror kills sub-tolerance asymmetry and
                // is the identity when the map is already exactly symmetric.
                let v = (c + b.coeff(k, j).conj()) * 0.5;
                canon.add_term(j, k, v)?;
                canon.add_term(k, j, v.conj())?;
            } else if j == k {
                canon.add_term(j, j, Complex64::new(c.re, 0.0))?;
            }
        }
        Ok(HermitianPoly { inner: canon })
    }

    pub fn zero() -> Self {
        HermitianPoly { inner: BiPoly::zero() }
    }

    pub fn constant(c: f64) -> Self {
        HermitianPoly {
            inner: BiPoly::constant(Complex64::new(c, 0.0)),
        }
    }

    pub fn as_bipoly(&self) -> &BiPoly {
        &self.inner
    }

    pub fn into_bipoly(self) -> BiPoly {
        self.inner
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.inner.max_abs_coeff()
    }

    pub fn coeff(&self, j: u32, k: u32) -> Complex64 {
        self.inner.coeff(j, k)
    }

    pub fn add(&self, rhs: &HermitianPoly) -> HermitianPoly {
        HermitianPoly {
            inner: self.inner.add(&rhs.inner),
        }
    }

    pub fn sub(&self, rhs: &HermitianPoly) -> HermitianPoly {
        HermitianPoly {
            inner: self.inner.sub(&rhs.inner),
        }
    }

    /// Scaling by a real number preserves Hermitian symmetry.
    pub fn scale(&self, s: f64) -> HermitianPoly {
        HermitianPoly {
            inner: self.inner.scale(Complex64::new(s, 0.0)),
        }
    }

    /// Product of Hermitian polynomials is Hermitian; re-canonicalized to
    /// keep the symmetry exact against accumulation-order rounding.
    pub fn try_mul(&self, rhs: &HermitianPoly) -> Result<HermitianPoly> {
        HermitianPoly::new(self.inner.try_mul(&rhs.inner)?)
    }

    pub fn partial_z(&self) -> BiPoly {
        self.inner.partial_z()
    }

    pub fn partial_zbar(&self) -> BiPoly {
        self.inner.partial_zbar()
    }

    /// The mixed second derivative ∂∂̄, again Hermitian.
    pub fn mixed_laplacian(&self) -> HermitianPoly {
        // (∂∂̄h)(j,k) = (j+1)(k+1) h(j+1,k+1): the symmetry is inherited
        // entry-for-entry, so no re-canonicalization is needed.
        HermitianPoly {
            inner: self.inner.partial_zbar().partial_z(),
        }
    }

    /// Evaluates to a real number; the imaginary residue (pure rounding, the
    /// value is real by symmetry) is checked against [`EVAL_IM_TOL`] and
    /// discarded.
    pub fn eval(&self, x: Complex64) -> Result<f64> {
        let v = self.inner.eval(x);
        if v.im.abs() > EVAL_IM_TOL * (1.0 + v.re.abs()) {
            return Err(Error::NonRealValue { re: v.re, im: v.im });
        }
        Ok(v.re)
    }

    /// `∂∂̄ ln h` as an exact rational function:
    /// `(h·∂∂̄h − ∂h·∂̄h) / h²`.
    ///
    /// Both numerator and denominator are Hermitian. Errors on the zero
    /// polynomial and on degree overflow.
    pub fn log_laplacian(&self) -> Result<HermitianRational> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let h = &self.inner;
        let lap = self.mixed_laplacian();
        let num = h
            .try_mul(lap.as_bipoly())?
            .sub(&h.partial_z().try_mul(&h.partial_zbar())?);
        let den = h.try_mul(h)?;
        HermitianRational::new(HermitianPoly::new(num)?, HermitianPoly::new(den)?)
    }

    /// Largest `k` with a nonzero diagonal coefficient `(k, k)`, or `None`
    /// for a polynomial with an empty diagonal.
    pub fn top_diagonal_degree(&self) -> Option<u32> {
        self.inner
            .terms()
            .filter(|&(j, k, _)| j == k)
            .map(|(j, _, _)| j)
            .max()
    }

    /// Tests whether this polynomial is `c · (1 + |x|²)^r` for some `c > 0`
    /// and integer `r ≥ 0`; returns `(r, c)` on a match.
    ///
    /// `c` is anchored at the constant coefficient. All deviations are
    /// measured against `tol` times the largest coefficient: determinant
    /// expansions cancel their highest-order terms exactly, and the rounding
    /// residue of that cancellation — proportional to the size of the
    /// intermediate products, not of the constant term — must neither
    /// masquerade as a higher degree nor fail an exact zero.
    pub fn binomial_match(&self, tol: f64) -> Option<(u32, f64)> {
        let c0 = self.coeff(0, 0).re;
        if !(c0 > 0.0) || !c0.is_finite() {
            return None;
        }
        let floor = tol * self.inner.max_abs_coeff().max(c0);
        let r = self
            .inner
            .terms()
            .filter(|&(j, k, v)| j == k && v.norm() > floor)
            .map(|(j, _, _)| j)
            .max()?;
        for k in 0..=r {
            let want = c0 * binomial(r, k);
            if (self.coeff(k, k).re - want).abs() > floor.max(tol * want) {
                return None;
            }
        }
        for (j, k, v) in self.inner.terms() {
            if j != k && v.norm() > floor {
                return None;
            }
        }
        Some((r, c0))
    }
}
