//! Polynomial algebra over the complex line.
//!
//! Two families of objects live here:
//!
//! * [`HoloPoly`] — univariate polynomials in the holomorphic coordinate
//!   `x` (dense ascending coefficients),
//! * [`BiPoly`] / [`HermitianPoly`] / [`HermitianRational`] — bivariate
//!   polynomials (and quotients) in `x` and `conj(x)`, sparse by monomial.
//!
//! A `HermitianPoly` is a `BiPoly` whose coefficient map satisfies
//! `c(k,j) = conj(c(j,k))`; such polynomials are real-valued on the whole
//! plane. Determinants of Gram matrices, energy densities and the
//! binomial-shape test all live on top of these types.

mod bipoly;
mod hermitian;
mod holo;
mod rational;

pub use bipoly::BiPoly;
pub use hermitian::HermitianPoly;
pub use holo::HoloPoly;
pub use rational::HermitianRational;

/// Per-variable degree cap. Everything this crate builds from the shipped
/// constructions stays far below it; hitting the cap is reported as
/// [`crate::Error::DegreeOverflow`] rather than silently producing huge
/// objects.
pub const DEGREE_CAP: u32 = 64;

/// Relative tolerance for structural checks (Hermitian symmetry, coefficient
/// comparisons) that should hold up to accumulated rounding.
pub const STRUCT_TOL: f64 = 1e-9;

/// Binomial coefficient C(n, k) as an f64, exact for the sizes the degree cap
/// admits in practice.
pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * f64::from(n - i) / f64::from(i + 1);
    }
    acc.round()
}
