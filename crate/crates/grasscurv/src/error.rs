//! Library-wide error type.
//!
//! Every fallible operation in this crate returns [`Error`]. Variants are
//! deliberately specific: callers (and the CLI) branch on them to decide
//! between "bad input" and "numeric/geometric failure".

use num_complex::Complex64;
use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    /// An operation that needs a nonzero polynomial received the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    /// A polynomial degree went past the per-variable cap.
    #[error("polynomial degree {degree} exceeds the supported cap of {cap} per variable")]
    DegreeOverflow { degree: u32, cap: u32 },

    /// Rational evaluation hit a (near-)zero denominator.
    #[error("denominator vanishes at x = {x} (|den| = {den_abs:.3e} below scale threshold)")]
    PoleAtPoint { x: Complex64, den_abs: f64 },

    /// A bivariate polynomial handed to a Hermitian-only constructor is not
    /// conjugate-symmetric within tolerance.
    #[error("coefficient map is not Hermitian: |c({j},{k}) - conj(c({k},{j}))| = {defect:.3e}")]
    NotHermitian { j: u32, k: u32, defect: f64 },

    /// An evaluation that must be real came back with a non-negligible
    /// imaginary part.
    #[error("evaluation expected to be real has imaginary residue {im:.3e} (re = {re:.3e})")]
    NonRealValue { re: f64, im: f64 },

    /// Dimensions do not describe a valid Grassmannian target or matrix shape.
    #[error("bad dimension: {0}")]
    BadDimension(String),

    /// An operation specific to a column count (rank) was asked of an
    /// unsupported one, e.g. Plücker relations outside m = 2.
    #[error("unsupported rank m = {m}: {reason}")]
    UnsupportedRank { m: usize, reason: &'static str },

    /// A pointwise construction (Gram–Schmidt, orbit, gauge) degenerated:
    /// an intermediate vector collapsed below the norm threshold.
    #[error("degenerate at x = {x}: intermediate squared norm {norm_sq:.3e} below threshold")]
    DegenerateAtPoint { x: Complex64, norm_sq: f64 },

    /// The energy density vanishes (or is not positive) where a curvature was
    /// requested, so the induced metric has no curvature there.
    #[error("metric degenerate at x = {x}: energy density {l:.3e}")]
    DegenerateMetric { x: Complex64, l: f64 },

    /// Exponent data for the monomial ansatz is malformed.
    #[error("bad ansatz exponents: {0}")]
    BadExponents(String),

    /// The ansatz cannot place its top Plücker power at the requested target.
    #[error("ansatz power mismatch: {0}")]
    PowerMismatch(String),
}
