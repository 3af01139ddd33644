//! The Veronese family of holomorphic curves and their derivative frames.
//!
//! The rational normal curve with square-rooted binomial coefficients,
//! `f = (√C(n−1,0)·x⁰, …, √C(n−1,n−1)·x^{n−1})`, is the canonical example of a
//! constant-curvature holomorphic map of the sphere.  Bundling it with its first
//! `m−1` derivatives produces an `n×m` frame whose Gram determinant is exactly
//! `c·(1+|x|²)^{m(n−m)}`, i.e. the minimal constant-curvature solution for each
//! shape `(m, n)`.  This module constructs that family in both the raw derivative
//! parametrization and the gauge-fixed `(𝕀; K)` form, and exposes the pointwise
//! projector orbit used to cross-check the two.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grassmann::{GrassmannFrame, MacfarlaneMap};
use crate::numeric::gram_schmidt;
use crate::poly::{binomial, HoloPoly};

/// Shape parameters `(m, n)` of a Veronese solution in `G(m, n)`.
///
/// Construction validates `1 ≤ m < n`, so every method on a built value is
/// total.  The distinguished exponent for the shape is [`r_max`](Self::r_max)
/// `= m(n−m)`: both parametrizations produce Gram determinants proportional to
/// `(1+|x|²)^{m(n−m)}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VeroneseSpec {
    m: usize,
    n: usize,
}

/// The basic Veronese curve in `ℂP^{n−1}` as a single-column frame.
///
/// Entry `r` (0-based) is `√C(n−1,r)·x^r`, so the squared norm of the column is
/// `(1+|x|²)^{n−1}` exactly.
///
/// # Errors
///
/// [`Error::BadDimension`] if `n < 2` (there is no curve into a point).
pub fn veronese_cp(n: usize) -> Result<GrassmannFrame> {
    if n < 2 {
        return Err(Error::BadDimension(format!(
            "Veronese curve needs ambient dimension n ≥ 2, got n = {n}"
        )));
    }
    let mut entries = Vec::with_capacity(n);
    for r in 0..n {
        let c = binomial((n - 1) as u32, r as u32).sqrt();
        entries.push(HoloPoly::monomial(Complex64::new(c, 0.0), r as u32)?);
    }
    GrassmannFrame::new(n, 1, vec![entries])
}

impl VeroneseSpec {
    /// Validates the shape `1 ≤ m < n`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || m >= n {
            return Err(Error::BadDimension(format!(
                "Veronese shape needs 1 ≤ m < n, got m = {m}, n = {n}"
            )));
        }
        Ok(Self { m, n })
    }

    /// Number of columns (subspace dimension).
    pub fn m(&self) -> usize {
        self.m
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// The Gram-determinant exponent `m(n−m)` realized by this shape.
    pub fn r_max(&self) -> u32 {
        (self.m * (self.n - self.m)) as u32
    }

    /// The derivative frame `(f, ∂f, …, ∂^{m−1}f)` of the basic curve.
    pub fn frame(&self) -> Result<GrassmannFrame> {
        let curve = veronese_cp(self.n)?;
        let mut column: Vec<HoloPoly> = curve.columns()[0].clone();
        let mut columns = Vec::with_capacity(self.m);
        for _ in 0..self.m {
            columns.push(column.clone());
            column = column.iter().map(HoloPoly::derivative).collect();
        }
        GrassmannFrame::new(self.n, self.m, columns)
    }

    /// The gauge-fixed form of the same solution: the `(n−m)×m` matrix `K` whose
    /// stacked frame `(𝕀_m; K)` spans the derivative frame's subspace.
    ///
    /// Every entry is a single real monomial; the closed form (1-based `i` for
    /// rows, `j` for columns) is
    ///
    /// ```text
    /// K[i][j] = (−1)^{m−j} · (m−j+1)/(m−j+i)
    ///           · √( C(n−1, i+m−1) / C(n−1, j−1) )
    ///           · C(i+m−1, m) · C(m, j−1) · x^{i−j+m}
    /// ```
    ///
    /// and the resulting `det(𝕀 + K†K)` is `(1+|x|²)^{m(n−m)}` with leading
    /// constant exactly 1.
    pub fn macfarlane(&self) -> Result<MacfarlaneMap> {
        let (m, n) = (self.m, self.n);
        let nm1 = (n - 1) as u32;
        let mut rows = Vec::with_capacity(n - m);
        for i in 1..=(n - m) {
            let mut row = Vec::with_capacity(m);
            for j in 1..=m {
                let sign = if (m - j) % 2 == 0 { 1.0 } else { -1.0 };
                let ratio = (m - j + 1) as f64 / (m - j + i) as f64;
                let root = (binomial(nm1, (i + m - 1) as u32) / binomial(nm1, (j - 1) as u32)).sqrt();
                let factors = binomial((i + m - 1) as u32, m as u32) * binomial(m as u32, (j - 1) as u32);
                let coeff = sign * ratio * root * factors;
                row.push(HoloPoly::monomial(
                    Complex64::new(coeff, 0.0),
                    (i + m - j) as u32,
                )?);
            }
            rows.push(row);
        }
        MacfarlaneMap::new(n, m, rows)
    }
}

/// Successive projector images `f, P₊f, …, P₊^k f` of a curve, evaluated at `x`.
///
/// `P₊` sends a vector field `g` to `∂g − (g†∂g / |g|²)·g`, i.e. the component of
/// the derivative orthogonal to the field itself.  For a holomorphic curve the
/// iterates coincide, value for value, with the unnormalized Gram–Schmidt
/// orthogonalization of `(f(x), ∂f(x), …, ∂^k f(x))`, which is how they are
/// computed here.  Consecutive vectors are therefore mutually orthogonal at
/// every regular point.
///
/// # Errors
///
/// * [`Error::BadDimension`] if the frame has more than one column or if
///   `k ≥ n` (the orbit of a curve in `ℂP^{n−1}` has at most `n` members).
/// * [`Error::DegenerateAtPoint`] if an intermediate vector collapses at `x`
///   (a ramification point of the curve).
pub fn pplus_orbit(
    frame: &GrassmannFrame,
    k: usize,
    x: Complex64,
) -> Result<Vec<DVector<Complex64>>> {
    if frame.m() != 1 {
        return Err(Error::BadDimension(format!(
            "projector orbit is defined for single-column frames, got m = {}",
            frame.m()
        )));
    }
    let n = frame.n();
    if k >= n {
        return Err(Error::BadDimension(format!(
            "orbit depth k = {k} out of range for a curve in ℂP^{}",
            n - 1
        )));
    }
    let mut column: Vec<HoloPoly> = frame.columns()[0].clone();
    let mut derivatives = DMatrix::<Complex64>::zeros(n, k + 1);
    for col in 0..=k {
        for (row, entry) in column.iter().enumerate() {
            derivatives[(row, col)] = entry.eval(x);
        }
        column = column.iter().map(HoloPoly::derivative).collect();
    }
    let gs = gram_schmidt(&derivatives, x)?;
    Ok((0..=k).map(|i| DVector::from(gs.ortho.column(i))).collect())
}
