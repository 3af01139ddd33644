//! Polynomial frames and Plücker coordinates for maps into G(m, n).
//!
//! Three interchangeable views of the same geometry:
//!
//! * [`GrassmannFrame`] — `m` polynomial columns of length `n` spanning the
//!   moving subspace,
//! * [`MacfarlaneMap`] — the normalized form `(𝕀_m; K)` with `K` an
//!   `(n−m)×m` polynomial matrix,
//! * [`PlueckerVector`] — the `C(n,m)` maximal minors in lexicographic
//!   index order.
//!
//! The payoff of the Plücker view is the Gram determinant as a sum of
//! squared moduli of the minors; the payoff of the `K` view is the compact
//! determinant `det(𝕀_m + K†K)` and the transpose move to G(n−m, n).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numeric::gram_schmidt;
use crate::poly::{BiPoly, HermitianPoly, HoloPoly};

/// Relative tolerance for the quadratic Plücker relations check.
pub const RELATIONS_TOL: f64 = 1e-10;

/// Gram-determinant threshold for the numeric column-independence probe.
const INDEPENDENCE_TOL: f64 = 1e-10;

/// Fixed sample points for pointwise probes that need no configurability.
fn probe_points() -> [Complex64; 3] {
    [
        Complex64::new(0.37, 0.24),
        Complex64::new(-0.51, 0.83),
        Complex64::new(1.13, -0.71),
    ]
}

// ---- Small polynomial determinants ----

/// Determinant of a square matrix of holomorphic polynomials by Laplace
/// expansion along the first row. Matrices here are at most m×m with m ≤ 4,
/// so the naive recursion is fine.
fn holo_det(mat: &[Vec<HoloPoly>]) -> Result<HoloPoly> {
    let sz = mat.len();
    debug_assert!(mat.iter().all(|row| row.len() == sz));
    if sz == 0 {
        return Ok(HoloPoly::one());
    }
    if sz == 1 {
        return Ok(mat[0][0].clone());
    }
    let mut acc = HoloPoly::zero();
    for (c, top) in mat[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let sub: Vec<Vec<HoloPoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(cc, _)| cc != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = top.try_mul(&holo_det(&sub)?)?;
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    Ok(acc)
}

/// Same expansion for bivariate polynomial matrices (used for Gram
/// determinants in the `K` parametrization).
fn bipoly_det(mat: &[Vec<BiPoly>]) -> Result<BiPoly> {
    let sz = mat.len();
    debug_assert!(mat.iter().all(|row| row.len() == sz));
    if sz == 0 {
        return Ok(BiPoly::constant(Complex64::new(1.0, 0.0)));
    }
    if sz == 1 {
        return Ok(mat[0][0].clone());
    }
    let mut acc = BiPoly::zero();
    for (c, top) in mat[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let sub: Vec<Vec<BiPoly>> = mat[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(cc, _)| cc != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = top.try_mul(&bipoly_det(&sub)?)?;
        acc = if c % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    Ok(acc)
}

// ---- Index tuples ----

/// All strictly increasing `m`-tuples from `{1, …, n}` in lexicographic
/// order; the canonical indexing of Plücker coordinates.
pub fn index_tuples(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let need = m - cur.len();
        for i in start..=(n - need + 1) {
            cur.push(i);
            rec(i + 1, n, m, cur, out);
            cur.pop();
        }
    }
    if m >= 1 && m <= n {
        rec(1, n, m, &mut cur, &mut out);
    }
    out
}

// ---- GrassmannFrame ----

/// A holomorphic map into G(m, n) given by `m` polynomial columns of length
/// `n`. Columns are stored column-major: `columns[a][row]`.
///
/// The constructor validates shape only; linear independence is a pointwise
/// numeric question answered by [`GrassmannFrame::is_nondegenerate`], and
/// degenerate frames are still legal inputs for the minor/Gram operations
/// (they simply produce zero).
#[derive(Debug, Clone, PartialEq)]
pub struct GrassmannFrame {
    n: usize,
    m: usize,
    columns: Vec<Vec<HoloPoly>>,
}

impl GrassmannFrame {
    pub fn new(n: usize, m: usize, columns: Vec<Vec<HoloPoly>>) -> Result<Self> {
        if m < 1 || m >= n {
            return Err(Error::BadDimension(format!(
                "need 1 ≤ m < n, got m = {m}, n = {n}"
            )));
        }
        if columns.len() != m {
            return Err(Error::BadDimension(format!(
                "expected {m} columns, got {}",
                columns.len()
            )));
        }
        for (a, col) in columns.iter().enumerate() {
            if col.len() != n {
                return Err(Error::BadDimension(format!(
                    "column {a} has {} entries, expected {n}",
                    col.len()
                )));
            }
        }
        Ok(GrassmannFrame { n, m, columns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn columns(&self) -> &[Vec<HoloPoly>] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> &HoloPoly {
        &self.columns[col][row]
    }

    /// Evaluates all columns at a point into an `n × m` complex matrix.
    pub fn eval_columns(&self, x: Complex64) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.n, self.m, |row, col| self.columns[col][row].eval(x))
    }

    /// All `C(n,m)` maximal minors in lexicographic row-tuple order.
    pub fn pluecker_minors(&self) -> Result<PlueckerVector> {
        let tuples = index_tuples(self.n, self.m);
        let mut entries = Vec::with_capacity(tuples.len());
        for t in &tuples {
            let sub: Vec<Vec<HoloPoly>> = t
                .iter()
                .map(|&row| {
                    (0..self.m)
                        .map(|col| self.columns[col][row - 1].clone())
                        .collect()
                })
                .collect();
            entries.push(holo_det(&sub)?);
        }
        PlueckerVector::new(self.n, self.m, entries)
    }

    /// The Gram determinant `det(Z†Z)` as a Hermitian polynomial, computed
    /// as the sum of squared moduli of the Plücker minors.
    ///
    /// Dependent columns give the zero polynomial.
    pub fn gram_det(&self) -> Result<HermitianPoly> {
        self.pluecker_minors()?.gram_det()
    }

    /// Appends a zero row: the same subspace family inside G(m, n+1). The
    /// Gram determinant is preserved exactly (bit-identically): new minors
    /// involve the zero row and vanish identically, contributing nothing.
    pub fn embed_pad(&self) -> GrassmannFrame {
        let columns = self
            .columns
            .iter()
            .map(|col| {
                let mut c = col.clone();
                c.push(HoloPoly::zero());
                c
            })
            .collect();
        GrassmannFrame {
            n: self.n + 1,
            m: self.m,
            columns,
        }
    }

    /// Right-multiplies by a constant `m × m` matrix (a change of basis of
    /// the spanning columns; scales every Plücker minor by `det g`).
    pub fn right_multiply(&self, g: &DMatrix<Complex64>) -> Result<GrassmannFrame> {
        if g.nrows() != self.m || g.ncols() != self.m {
            return Err(Error::BadDimension(format!(
                "gauge matrix must be {0}×{0}, got {1}×{2}",
                self.m,
                g.nrows(),
                g.ncols()
            )));
        }
        let mut columns = Vec::with_capacity(self.m);
        for b in 0..self.m {
            let mut col = vec![HoloPoly::zero(); self.n];
            for a in 0..self.m {
                let w = g[(a, b)];
                if w.re == 0.0 && w.im == 0.0 {
                    continue;
                }
                for (row, slot) in col.iter_mut().enumerate() {
                    *slot = &*slot + &self.columns[a][row].scale(w);
                }
            }
            columns.push(col);
        }
        Ok(GrassmannFrame {
            n: self.n,
            m: self.m,
            columns,
        })
    }

    /// Converts to the normalized `(𝕀_m; K)` form. Requires the top `m × m`
    /// block to be invertible as a polynomial matrix, i.e. to have constant
    /// nonzero determinant; otherwise `K` would be rational and the frame is
    /// rejected.
    pub fn to_macfarlane(&self) -> Result<MacfarlaneMap> {
        let m = self.m;
        let top: Vec<Vec<HoloPoly>> = (0..m)
            .map(|row| (0..m).map(|col| self.columns[col][row].clone()).collect())
            .collect();
        let det = holo_det(&top)?;
        let det_c = match det.degree() {
            Some(0) => det.coeff(0),
            _ => {
                return Err(Error::BadDimension(
                    "top block determinant is not a nonzero constant; frame has no polynomial \
                     normalized form"
                        .to_string(),
                ))
            }
        };
        // Adjugate of the top block: adj[r][c] = (−1)^{r+c} · det(minor with
        // row c and column r removed); then K = bottom · adj / det.
        let mut adj = vec![vec![HoloPoly::zero(); m]; m];
        for r in 0..m {
            for c in 0..m {
                let sub: Vec<Vec<HoloPoly>> = (0..m)
                    .filter(|&rr| rr != c)
                    .map(|rr| {
                        (0..m)
                            .filter(|&cc| cc != r)
                            .map(|cc| top[rr][cc].clone())
                            .collect()
                    })
                    .collect();
                let cof = holo_det(&sub)?;
                adj[r][c] = if (r + c) % 2 == 0 { cof } else { -&cof };
            }
        }
        let inv_det = Complex64::new(1.0, 0.0) / det_c;
        let mut k = vec![vec![HoloPoly::zero(); m]; self.n - m];
        for i in 0..(self.n - m) {
            for j in 0..m {
                let mut acc = HoloPoly::zero();
                for c in 0..m {
                    acc = &acc + &self.columns[c][m + i].try_mul(&adj[c][j])?;
                }
                k[i][j] = acc.scale(inv_det);
            }
        }
        MacfarlaneMap::new(self.n, m, k)
    }

    /// Numeric column-independence probe: evaluates the frame at three fixed
    /// points and asks for a Gram determinant above `1e-10` at one of them.
    pub fn is_nondegenerate(&self) -> bool {
        probe_points().iter().any(|&x| {
            let cols = self.eval_columns(x);
            let g = (cols.adjoint() * &cols).determinant();
            g.norm() > INDEPENDENCE_TOL
        })
    }

    /// Cross-checks the symbolic Gram determinant against a numeric
    /// Gram–Schmidt factorization at the given points; returns the maximum
    /// relative error. Errors if an intermediate vector degenerates.
    pub fn gram_schmidt_check(&self, points: &[Complex64]) -> Result<f64> {
        let sym = self.gram_det()?;
        let mut worst = 0.0f64;
        for &x in points {
            let gs = gram_schmidt(&self.eval_columns(x), x)?;
            let numeric = gs.gram_det();
            let symbolic = sym.eval(x)?;
            let rel = (numeric - symbolic).abs() / symbolic.abs().max(1e-300);
            worst = worst.max(rel);
        }
        Ok(worst)
    }
}

// ---- MacfarlaneMap ----

/// The normalized parametrization `Ẑ = (𝕀_m; K)` of a map into G(m, n),
/// with `K` an `(n−m) × m` matrix of holomorphic polynomials stored
/// row-major: `k[row][col]`.
#[derive(Debug, Clone, PartialEq)]
pub struct MacfarlaneMap {
    n: usize,
    m: usize,
    k: Vec<Vec<HoloPoly>>,
}

impl MacfarlaneMap {
    pub fn new(n: usize, m: usize, k: Vec<Vec<HoloPoly>>) -> Result<Self> {
        if m < 1 || m >= n {
            return Err(Error::BadDimension(format!(
                "need 1 ≤ m < n, got m = {m}, n = {n}"
            )));
        }
        if k.len() != n - m {
            return Err(Error::BadDimension(format!(
                "K must have {} rows, got {}",
                n - m,
                k.len()
            )));
        }
        for (i, row) in k.iter().enumerate() {
            if row.len() != m {
                return Err(Error::BadDimension(format!(
                    "K row {i} has {} entries, expected {m}",
                    row.len()
                )));
            }
        }
        Ok(MacfarlaneMap { n, m, k })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> &[Vec<HoloPoly>] {
        &self.k
    }

    pub fn entry(&self, row: usize, col: usize) -> &HoloPoly {
        &self.k[row][col]
    }

    /// The stacked frame `(𝕀_m; K)`.
    pub fn to_frame(&self) -> GrassmannFrame {
        let mut columns = Vec::with_capacity(self.m);
        for j in 0..self.m {
            let mut col = Vec::with_capacity(self.n);
            for i in 0..self.m {
                col.push(if i == j { HoloPoly::one() } else { HoloPoly::zero() });
            }
            for row in &self.k {
                col.push(row[j].clone());
            }
            columns.push(col);
        }
        GrassmannFrame {
            n: self.n,
            m: self.m,
            columns,
        }
    }

    /// `det(𝕀_m + K†K)` expanded as a Hermitian polynomial. Equals the Gram
    /// determinant of the stacked frame.
    pub fn gram_det(&self) -> Result<HermitianPoly> {
        let m = self.m;
        let mut mat = vec![vec![BiPoly::zero(); m]; m];
        for a in 0..m {
            for b in 0..m {
                let mut acc = if a == b {
                    BiPoly::constant(Complex64::new(1.0, 0.0))
                } else {
                    BiPoly::zero()
                };
                for row in &self.k {
                    // (K†K)_{ab} = Σ_i conj(K_{ia}) K_{ib}
                    acc = acc.add(&row[b].mul_conj(&row[a]));
                }
                mat[a][b] = acc;
            }
        }
        HermitianPoly::new(bipoly_det(&mat)?)
    }

    /// The duality move `K → Kᵀ`: a map into G(n−m, n) with the same Gram
    /// determinant.
    pub fn duality_transpose(&self) -> MacfarlaneMap {
        let rows = self.m;
        let cols = self.n - self.m;
        let k = (0..rows)
            .map(|i| (0..cols).map(|j| self.k[j][i].clone()).collect())
            .collect();
        MacfarlaneMap {
            n: self.n,
            m: cols,
            k,
        }
    }

    /// Appends a zero row to `K`: the embedding G(m, n) → G(m, n+1) that
    /// preserves the Gram determinant exactly.
    pub fn embed_pad(&self) -> MacfarlaneMap {
        let mut k = self.k.clone();
        k.push(vec![HoloPoly::zero(); self.m]);
        MacfarlaneMap {
            n: self.n + 1,
            m: self.m,
            k,
        }
    }
}

// ---- PlueckerVector ----

/// The `C(n,m)` Plücker coordinates of a map, in lexicographic index-tuple
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct PlueckerVector {
    n: usize,
    m: usize,
    entries: Vec<HoloPoly>,
}

impl PlueckerVector {
    pub fn new(n: usize, m: usize, entries: Vec<HoloPoly>) -> Result<Self> {
        if m < 1 || m >= n {
            return Err(Error::BadDimension(format!(
                "need 1 ≤ m < n, got m = {m}, n = {n}"
            )));
        }
        let want = index_tuples(n, m).len();
        if entries.len() != want {
            return Err(Error::BadDimension(format!(
                "expected {want} Plücker entries for G({m},{n}), got {}",
                entries.len()
            )));
        }
        Ok(PlueckerVector { n, m, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[HoloPoly] {
        &self.entries
    }

    pub fn tuples(&self) -> Vec<Vec<usize>> {
        index_tuples(self.n, self.m)
    }

    /// Entry by index tuple (1-based, strictly increasing).
    pub fn entry(&self, tuple: &[usize]) -> Option<&HoloPoly> {
        let tuples = index_tuples(self.n, self.m);
        tuples
            .iter()
            .position(|t| t == tuple)
            .map(|i| &self.entries[i])
    }

    /// `Σ_I |p_I|²` as a Hermitian polynomial — the Gram determinant of any
    /// frame with these minors.
    pub fn gram_det(&self) -> Result<HermitianPoly> {
        let mut acc = BiPoly::zero();
        for p in &self.entries {
            acc = acc.add(&p.mul_conj(p));
        }
        HermitianPoly::new(acc)
    }

    /// Verifies the quadratic three-term Plücker relations
    /// `p_ab·p_cd − p_ac·p_bd + p_ad·p_bc = 0` over all quadruples
    /// `a<b<c<d`, coefficientwise within `tol` relative to the product
    /// scale. Only decomposable for m = 2; other ranks are rejected.
    pub fn relations_check(&self, tol: f64) -> Result<bool> {
        if self.m != 2 {
            return Err(Error::UnsupportedRank {
                m: self.m,
                reason: "quadratic relations are implemented for m = 2 only",
            });
        }
        let get = |i: usize, j: usize| -> &HoloPoly {
            // lexicographic rank of (i, j), 1-based, i < j
            let mut idx = 0;
            for a in 1..i {
                idx += self.n - a;
            }
            idx += j - i - 1;
            &self.entries[idx]
        };
        for a in 1..=self.n {
            for b in (a + 1)..=self.n {
                for c in (b + 1)..=self.n {
                    for d in (c + 1)..=self.n {
                        let t1 = get(a, b).try_mul(get(c, d))?;
                        let t2 = get(a, c).try_mul(get(b, d))?;
                        let t3 = get(a, d).try_mul(get(b, c))?;
                        let scale = t1
                            .max_abs_coeff()
                            .max(t2.max_abs_coeff())
                            .max(t3.max_abs_coeff())
                            .max(1.0);
                        let resid = &(&t1 - &t2) + &t3;
                        if resid.max_abs_coeff() > tol * scale {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }

    /// Reconstructs the normalized `(𝕀₂; K)` form from m = 2 Plücker data
    /// with constant nonzero `p₁₂` (entries are rescaled so `p₁₂ = 1`; then
    /// `K_{i,1} = −p_{2,i+2}` and `K_{i,2} = p_{1,i+2}`).
    pub fn macfarlane(&self) -> Result<MacfarlaneMap> {
        if self.m != 2 {
            return Err(Error::UnsupportedRank {
                m: self.m,
                reason: "normalized-form reconstruction is implemented for m = 2 only",
            });
        }
        let p12 = &self.entries[0];
        let c = match p12.degree() {
            Some(0) => p12.coeff(0),
            _ => {
                return Err(Error::BadDimension(
                    "p₁₂ must be a nonzero constant to reconstruct the normalized form"
                        .to_string(),
                ))
            }
        };
        let inv = Complex64::new(1.0, 0.0) / c;
        // Lexicographic order opens with (1,2), (1,3), …, (1,n), then
        // (2,3), …, (2,n).
        let p1 = |i: usize| &self.entries[i - 2]; // p_{1,i}, i ≥ 3
        let p2 = |i: usize| &self.entries[(self.n - 1) + (i - 3)]; // p_{2,i}, i ≥ 3
        let mut k = Vec::with_capacity(self.n - 2);
        for i in 3..=self.n {
            k.push(vec![(-p2(i)).scale(inv), p1(i).scale(inv)]);
        }
        MacfarlaneMap::new(self.n, 2, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn x_pow(k: u32) -> HoloPoly {
        HoloPoly::monomial(c(1.0, 0.0), k).unwrap()
    }

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(
            index_tuples(4, 2),
            vec![
                vec![1, 2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![2, 4],
                vec![3, 4]
            ]
        );
        assert_eq!(index_tuples(5, 3).len(), 10);
    }

    #[test]
    fn single_column_minors_are_the_entries() {
        let col = vec![HoloPoly::one(), x_pow(1), x_pow(2)];
        let f = GrassmannFrame::new(3, 1, vec![col.clone()]).unwrap();
        let pv = f.pluecker_minors().unwrap();
        assert_eq!(pv.entries(), &col[..]);
    }

    #[test]
    fn repeated_column_kills_all_minors() {
        let col = vec![HoloPoly::one(), x_pow(1), x_pow(2)];
        let f = GrassmannFrame::new(3, 2, vec![col.clone(), col]).unwrap();
        let pv = f.pluecker_minors().unwrap();
        assert!(pv.entries().iter().all(|p| p.is_zero()));
        // Dependent columns → Gram determinant is the zero polynomial.
        assert!(f.gram_det().unwrap().is_zero());
        assert!(!f.is_nondegenerate());
    }

    #[test]
    fn macfarlane_gram_det_single_column() {
        // K = (x, x²)ᵀ for G(1,3): det(1 + K†K) = 1 + |x|² + |x|⁴.
        let k = vec![vec![x_pow(1)], vec![x_pow(2)]];
        let map = MacfarlaneMap::new(3, 1, k).unwrap();
        let det = map.gram_det().unwrap();
        for kk in 0..=2 {
            assert_eq!(det.coeff(kk, kk), c(1.0, 0.0));
        }
        assert_eq!(det.as_bipoly().terms().count(), 3);
    }

    #[test]
    fn zero_k_gives_unit_gram_det() {
        let k = vec![vec![HoloPoly::zero(), HoloPoly::zero()]; 2];
        let map = MacfarlaneMap::new(4, 2, k).unwrap();
        assert_eq!(map.gram_det().unwrap(), HermitianPoly::constant(1.0));
    }

    #[test]
    fn stacked_frame_matches_k_parametrization() {
        let k = vec![
            vec![HoloPoly::from_real(&[0.0, 2.0]).unwrap(), x_pow(2)],
            vec![x_pow(3), HoloPoly::from_real(&[1.0, 0.0, -1.0]).unwrap()],
        ];
        let map = MacfarlaneMap::new(4, 2, k).unwrap();
        let via_k = map.gram_det().unwrap();
        let via_frame = map.to_frame().gram_det().unwrap();
        let scale = via_k.max_abs_coeff().max(1.0);
        let diff = via_k.sub(&via_frame);
        assert!(diff.max_abs_coeff() <= 1e-12 * scale);
    }

    #[test]
    fn duality_transpose_is_an_involution() {
        let k = vec![
            vec![x_pow(1), x_pow(2)],
            vec![HoloPoly::one(), x_pow(1)],
            vec![x_pow(3), HoloPoly::zero()],
        ];
        let map = MacfarlaneMap::new(5, 2, k).unwrap();
        let t = map.duality_transpose();
        assert_eq!(t.m(), 3);
        assert_eq!(t.duality_transpose(), map);
    }

    #[test]
    fn embed_pad_extends_with_exact_zeros() {
        let col = vec![HoloPoly::one(), x_pow(1)];
        let f = GrassmannFrame::new(2, 1, vec![col]).unwrap();
        let g = f.embed_pad();
        assert_eq!(g.n(), 3);
        let pv = g.pluecker_minors().unwrap();
        assert!(pv.entries()[2].is_zero());
        assert_eq!(f.gram_det().unwrap(), g.gram_det().unwrap());
    }

    #[test]
    fn to_macfarlane_recovers_k() {
        let k = vec![vec![x_pow(1), x_pow(2)], vec![x_pow(2), HoloPoly::one()]];
        let map = MacfarlaneMap::new(4, 2, k).unwrap();
        let back = map.to_frame().to_macfarlane().unwrap();
        assert_eq!(back, map);
    }

    #[test]
    fn to_macfarlane_rejects_non_constant_top_determinant() {
        // Columns (1, x) and (x, x²): top 2×2 block has det x·x − x·... the
        // top block is [[1, x],[x, x²]] with determinant 0 — rejected.
        let f = GrassmannFrame::new(
            3,
            2,
            vec![
                vec![HoloPoly::one(), x_pow(1), x_pow(2)],
                vec![x_pow(1), x_pow(2), HoloPoly::one()],
            ],
        )
        .unwrap();
        assert!(matches!(f.to_macfarlane(), Err(Error::BadDimension(_))));
    }

    #[test]
    fn relations_reject_other_ranks() {
        let entries = vec![HoloPoly::one(); index_tuples(5, 3).len()];
        let pv = PlueckerVector::new(5, 3, entries).unwrap();
        assert!(matches!(
            pv.relations_check(RELATIONS_TOL),
            Err(Error::UnsupportedRank { m: 3, .. })
        ));
    }

    #[test]
    fn relations_hold_for_actual_minors_and_fail_when_perturbed() {
        let f = GrassmannFrame::new(
            4,
            2,
            vec![
                vec![HoloPoly::one(), x_pow(1), x_pow(2), x_pow(3)],
                vec![HoloPoly::zero(), HoloPoly::one(), x_pow(1), x_pow(2)],
            ],
        )
        .unwrap();
        let pv = f.pluecker_minors().unwrap();
        assert!(pv.relations_check(RELATIONS_TOL).unwrap());

        let mut entries = pv.entries().to_vec();
        let bumped = &entries[3] + &HoloPoly::constant(c(1e-3, 0.0));
        entries[3] = bumped;
        let bad = PlueckerVector::new(4, 2, entries).unwrap();
        assert!(!bad.relations_check(RELATIONS_TOL).unwrap());
    }

    #[test]
    fn gram_schmidt_check_agrees_for_a_generic_frame() {
        let f = GrassmannFrame::new(
            4,
            2,
            vec![
                vec![HoloPoly::one(), x_pow(1), x_pow(2), x_pow(3)],
                vec![HoloPoly::zero(), HoloPoly::one(), x_pow(1), x_pow(2)],
            ],
        )
        .unwrap();
        let pts = [c(0.2, 0.1), c(-0.7, 0.4), c(1.1, -0.9)];
        let err = f.gram_schmidt_check(&pts).unwrap();
        assert!(err < 1e-10, "relative error {err}");
    }

    #[test]
    fn gram_schmidt_check_flags_degenerate_points() {
        let col = vec![HoloPoly::one(), x_pow(1), x_pow(2)];
        let dep = GrassmannFrame::new(3, 2, vec![col.clone(), col]).unwrap();
        assert!(matches!(
            dep.gram_schmidt_check(&[c(0.3, 0.2)]),
            Err(Error::DegenerateAtPoint { .. })
        ));
    }

    #[test]
    fn pluecker_macfarlane_roundtrip() {
        let k = vec![
            vec![x_pow(1), x_pow(2)],
            vec![HoloPoly::from_real(&[0.0, -2.0]).unwrap(), x_pow(1)],
        ];
        let map = MacfarlaneMap::new(4, 2, k).unwrap();
        let pv = map.to_frame().pluecker_minors().unwrap();
        assert_eq!(pv.macfarlane().unwrap(), map);
    }
}
