//! Small numeric helpers shared by the pointwise (non-symbolic) checks.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Squared-norm threshold under which a Gram–Schmidt intermediate counts as
/// degenerate.
pub(crate) const DEGEN_TOL: f64 = 1e-12;

/// Classical Gram–Schmidt over ℂ, kept unnormalized so callers can use the
/// squared norms directly (their product is the Gram determinant).
pub(crate) struct GramSchmidt {
    /// Mutually orthogonal (unnormalized) columns.
    pub ortho: DMatrix<Complex64>,
    /// Squared norms of those columns, in order.
    pub norms_sq: Vec<f64>,
}

/// Orthogonalizes the columns of `cols` in order. `x` only labels the error
/// when an intermediate collapses.
pub(crate) fn gram_schmidt(cols: &DMatrix<Complex64>, x: Complex64) -> Result<GramSchmidt> {
    let mut ortho = cols.clone();
    let m = cols.ncols();
    let mut norms_sq = Vec::with_capacity(m);
    for i in 0..m {
        for j in 0..i {
            // coefficient = <e_j, f_i> / |e_j|²
            let inner: Complex64 = ortho.column(j).dotc(&ortho.column(i));
            let coeff = inner / Complex64::new(norms_sq[j], 0.0);
            let proj = ortho.column(j) * coeff;
            let mut col = ortho.column_mut(i);
            col -= proj;
        }
        let nsq = ortho.column(i).norm_squared();
        if nsq < DEGEN_TOL {
            return Err(Error::DegenerateAtPoint { x, norm_sq: nsq });
        }
        norms_sq.push(nsq);
    }
    Ok(GramSchmidt { ortho, norms_sq })
}

impl GramSchmidt {
    /// The orthonormal frame (columns scaled to unit length).
    pub fn orthonormal(&self) -> DMatrix<Complex64> {
        let mut q = self.ortho.clone();
        for (i, &nsq) in self.norms_sq.iter().enumerate() {
            let inv = 1.0 / nsq.sqrt();
            for v in q.column_mut(i).iter_mut() {
                *v *= inv;
            }
        }
        q
    }

    /// Product of the squared norms = Gram determinant of the input columns.
    pub fn gram_det(&self) -> f64 {
        self.norms_sq.iter().product()
    }
}

/// Orthogonal projector `Q Q†` onto the span of the (orthonormal) columns.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn projector(q: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    q * q.adjoint()
}
