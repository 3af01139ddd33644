//! Holomorphic maps of the sphere into complex Grassmannians G(m, n).
//!
//! The crate provides, in layers:
//!
//! * [`poly`] — holomorphic and Hermitian polynomial algebra, including the
//!   exact logarithmic Laplacian and the binomial-shape test that certifies
//!   constant Gaussian curvature,
//! * [`grassmann`] — polynomial frames, Plücker coordinates, Gram
//!   determinants in both parametrizations, duality and embedding moves,
//! * [`veronese`] — the Veronese curve and its derivative frames, the
//!   canonical constant-curvature solutions,
//! * [`curvature`] — energy density, Gaussian curvature, constant-curvature
//!   reports, and a numeric Euler–Lagrange residual,
//! * [`search`] — the monomial ansatz, binomial constraint systems, a seeded
//!   multistart least-squares solver, and per-rank classification with
//!   honest residual floors where no solution exists.

pub mod curvature;
mod error;
pub mod grassmann;
mod numeric;
pub mod poly;
pub mod search;
pub mod veronese;

pub use error::{Error, Result};
