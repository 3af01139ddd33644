//! The monomial ansatz: exponent layout, coefficient slots, zero patterns.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grassmann::MacfarlaneMap;
use crate::poly::{HoloPoly, DEGREE_CAP};

/// How one coefficient slot of the ansatz may vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlotKind {
    /// Free and real-valued.  The residual gauge freedom of the ansatz allows
    /// rotating every `α` and the first `β` onto the real axis, so these slots
    /// carry one real unknown each (sign unconstrained).
    Real,
    /// Free complex value; carries two real unknowns.
    Complex,
    /// Structurally pinned to zero.
    Zero,
}

/// Which coefficients of an ansatz are pinned to zero.
///
/// Row indices are 0-based (row `i` holds `α_{i+1}`, `β_{i+1}` in the classical
/// 1-based naming used by labels and reports).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZeroPattern {
    alpha: Vec<bool>,
    beta: Vec<bool>,
}

impl ZeroPattern {
    /// All coefficients free.
    pub fn none(rows: usize) -> Self {
        Self {
            alpha: vec![false; rows],
            beta: vec![false; rows],
        }
    }

    /// Pins `α` of the given 0-based row.
    pub fn pin_alpha(mut self, row: usize) -> Self {
        self.alpha[row] = true;
        self
    }

    /// Pins `β` of the given 0-based row.
    pub fn pin_beta(mut self, row: usize) -> Self {
        self.beta[row] = true;
        self
    }

    pub fn rows(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha_pinned(&self, row: usize) -> bool {
        self.alpha[row]
    }

    pub fn beta_pinned(&self, row: usize) -> bool {
        self.beta[row]
    }
}

/// Symbolic coefficient of one Plücker monomial of the ansatz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoeffExpr {
    /// The constant 1 contributed by the gauge-fixed top minor.
    One,
    /// `β` of the given 0-based row.
    Beta(usize),
    /// `−α` of the given 0-based row.
    NegAlpha(usize),
    /// `γ(a, b) = α_a β_b − α_b β_a` for 0-based rows `a < b`.
    Gamma(usize, usize),
}

/// One Plücker coordinate of the ansatz: a single monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlueckerMonomial {
    /// 1-based Grassmann index pair `(i, j)` with `i < j`.
    pub tuple: (usize, usize),
    /// Power of `x` carried by the monomial.
    pub power: u32,
    /// Its coefficient in terms of the ansatz unknowns.
    pub coeff: CoeffExpr,
}

/// Real unknowns of an ansatz, in report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Slot {
    Alpha(usize),
    BetaRe(usize),
    BetaIm(usize),
}

/// A single-monomial ansatz for a map into `G(2, n)`.
///
/// Rows are indexed `0..n−2`; row `i` of the gauge-fixed matrix reads
/// `(α_i x^{r_i}, β_i x^{s_i})` with `s_i = r_i + (s_1 − r_1)` so the offset
/// between the two columns is shared by all rows.  The Plücker coordinates of
/// the stacked frame `(𝕀₂; K)` are then single monomials with coefficients
/// `1`, `β_i`, `−α_i`, and `γ(a,b) = α_a β_b − α_b β_a`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialAnsatz {
    n: usize,
    r_exp: Vec<u32>,
    s1: u32,
    alpha: Vec<SlotKind>,
    beta: Vec<SlotKind>,
}

/// Validates and assembles an ansatz.
///
/// `r_exp` lists `r_1..r_{n−2}` (nondecreasing, `r_1 ≥ 1`; the standard gauge
/// takes `r_1 = 1`, larger values are accepted for relaxed enumeration).
/// `s1` fixes the column offset.  Pinned slots come from `pattern`.
///
/// # Errors
///
/// [`Error::BadExponents`] on any shape or ordering violation, or when the top
/// Plücker power would exceed the polynomial degree cap.
pub fn build_ansatz(
    n: usize,
    r_exp: &[u32],
    s1: u32,
    pattern: &ZeroPattern,
) -> Result<MonomialAnsatz> {
    if n < 4 {
        return Err(Error::BadExponents(format!(
            "ansatz needs n ≥ 4 (two rows), got n = {n}"
        )));
    }
    let rows = n - 2;
    if r_exp.len() != rows || pattern.rows() != rows {
        return Err(Error::BadExponents(format!(
            "expected {rows} row exponents and pattern rows for n = {n}, got {} and {}",
            r_exp.len(),
            pattern.rows()
        )));
    }
    if r_exp[0] < 1 || s1 < 1 {
        return Err(Error::BadExponents(format!(
            "exponents must be positive, got r_1 = {}, s_1 = {s1}",
            r_exp[0]
        )));
    }
    if r_exp.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::BadExponents(format!(
            "row exponents must be nondecreasing, got {r_exp:?}"
        )));
    }
    let shift = i64::from(s1) - i64::from(r_exp[0]);
    let top = i64::from(r_exp[rows - 1]) + i64::from(r_exp[rows.saturating_sub(2)]) + shift;
    if top > i64::from(DEGREE_CAP) {
        return Err(Error::BadExponents(format!(
            "top Plücker power {top} exceeds the degree cap {DEGREE_CAP}"
        )));
    }
    let alpha = (0..rows)
        .map(|i| {
            if pattern.alpha_pinned(i) {
                SlotKind::Zero
            } else {
                SlotKind::Real
            }
        })
        .collect();
    let beta = (0..rows)
        .map(|i| {
            if pattern.beta_pinned(i) {
                SlotKind::Zero
            } else if i == 0 {
                SlotKind::Real
            } else {
                SlotKind::Complex
            }
        })
        .collect();
    Ok(MonomialAnsatz {
        n,
        r_exp: r_exp.to_vec(),
        s1,
        alpha,
        beta,
    })
}

impl MonomialAnsatz {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows of the gauge-fixed matrix, `n − 2`.
    pub fn rows(&self) -> usize {
        self.n - 2
    }

    /// Row exponents `r_1..r_{n−2}` of the first column.
    pub fn r_exp(&self) -> &[u32] {
        &self.r_exp
    }

    /// First-row exponent of the second column.
    pub fn s1(&self) -> u32 {
        self.s1
    }

    /// Second-column exponent of the given 0-based row.
    pub fn s_exp(&self, row: usize) -> u32 {
        let shift = i64::from(self.s1) - i64::from(self.r_exp[0]);
        (i64::from(self.r_exp[row]) + shift) as u32
    }

    pub fn alpha_kind(&self, row: usize) -> SlotKind {
        self.alpha[row]
    }

    pub fn beta_kind(&self, row: usize) -> SlotKind {
        self.beta[row]
    }

    /// Compact human-readable identity of the branch, used in traces.
    pub fn label(&self) -> String {
        let r = self
            .r_exp
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let pins = self.pinned_names().join(",");
        format!("r=[{r}] s1={} pins=[{pins}]", self.s1)
    }

    /// Names of the pinned slots, 1-based (`alpha2`, `beta1`, …).
    pub fn pinned_names(&self) -> Vec<String> {
        let mut out = Vec::new();
        for row in 0..self.rows() {
            if self.alpha[row] == SlotKind::Zero {
                out.push(format!("alpha{}", row + 1));
            }
        }
        for row in 0..self.rows() {
            if self.beta[row] == SlotKind::Zero {
                out.push(format!("beta{}", row + 1));
            }
        }
        out
    }

    /// All structurally present Plücker monomials, in display order: the top
    /// minor first, then per ambient index `i = 3..n` the `(2,i)` and `(1,i)`
    /// entries, then the `γ` block in lexicographic order.
    pub fn monomials(&self) -> Vec<PlueckerMonomial> {
        let mut out = vec![PlueckerMonomial {
            tuple: (1, 2),
            power: 0,
            coeff: CoeffExpr::One,
        }];
        for row in 0..self.rows() {
            let i = row + 3;
            if self.alpha[row] != SlotKind::Zero {
                out.push(PlueckerMonomial {
                    tuple: (2, i),
                    power: self.r_exp[row],
                    coeff: CoeffExpr::NegAlpha(row),
                });
            }
            if self.beta[row] != SlotKind::Zero {
                out.push(PlueckerMonomial {
                    tuple: (1, i),
                    power: self.s_exp(row),
                    coeff: CoeffExpr::Beta(row),
                });
            }
        }
        let shift = i64::from(self.s1) - i64::from(self.r_exp[0]);
        for a in 0..self.rows() {
            for b in (a + 1)..self.rows() {
                let present = (self.alpha[a] != SlotKind::Zero && self.beta[b] != SlotKind::Zero)
                    || (self.alpha[b] != SlotKind::Zero && self.beta[a] != SlotKind::Zero);
                if present {
                    let power =
                        (i64::from(self.r_exp[a]) + i64::from(self.r_exp[b]) + shift) as u32;
                    out.push(PlueckerMonomial {
                        tuple: (a + 3, b + 3),
                        power,
                        coeff: CoeffExpr::Gamma(a, b),
                    });
                }
            }
        }
        out
    }

    /// Real unknowns in report order: all free `α` rows first, then the free
    /// `β` slots (one unknown for the real first row, two for complex rows).
    pub(crate) fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::new();
        for row in 0..self.rows() {
            if self.alpha[row] != SlotKind::Zero {
                out.push(Slot::Alpha(row));
            }
        }
        for row in 0..self.rows() {
            match self.beta[row] {
                SlotKind::Zero => {}
                SlotKind::Real => out.push(Slot::BetaRe(row)),
                SlotKind::Complex => {
                    out.push(Slot::BetaRe(row));
                    out.push(Slot::BetaIm(row));
                }
            }
        }
        out
    }

    /// Number of real unknowns.
    pub fn unknown_count(&self) -> usize {
        self.slots().len()
    }

    /// Names of the real unknowns, matching the order of solver points.
    pub fn unknown_names(&self) -> Vec<String> {
        self.slots()
            .iter()
            .map(|slot| match slot {
                Slot::Alpha(row) => format!("alpha{}", row + 1),
                Slot::BetaRe(row) => {
                    if self.beta[*row] == SlotKind::Real {
                        format!("beta{}", row + 1)
                    } else {
                        format!("beta{}_re", row + 1)
                    }
                }
                Slot::BetaIm(row) => format!("beta{}_im", row + 1),
            })
            .collect()
    }

    /// Expands a solver point into the per-row `(α, β)` coefficient values.
    pub(crate) fn coefficient_values(&self, point: &[f64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let rows = self.rows();
        let mut alphas = vec![Complex64::new(0.0, 0.0); rows];
        let mut betas = vec![Complex64::new(0.0, 0.0); rows];
        for (slot, value) in self.slots().iter().zip(point) {
            match slot {
                Slot::Alpha(row) => alphas[*row].re = *value,
                Slot::BetaRe(row) => betas[*row].re = *value,
                Slot::BetaIm(row) => betas[*row].im = *value,
            }
        }
        (alphas, betas)
    }

    /// Builds the gauge-fixed map for a solver point.
    ///
    /// # Errors
    ///
    /// [`Error::BadDimension`] if the point length does not match
    /// [`unknown_count`](Self::unknown_count).
    pub fn witness(&self, point: &[f64]) -> Result<MacfarlaneMap> {
        if point.len() != self.unknown_count() {
            return Err(Error::BadDimension(format!(
                "expected {} unknowns, got a point of length {}",
                self.unknown_count(),
                point.len()
            )));
        }
        let (alphas, betas) = self.coefficient_values(point);
        let mut rows = Vec::with_capacity(self.rows());
        for row in 0..self.rows() {
            let first = if alphas[row] == Complex64::new(0.0, 0.0) {
                HoloPoly::zero()
            } else {
                HoloPoly::monomial(alphas[row], self.r_exp[row])?
            };
            let second = if betas[row] == Complex64::new(0.0, 0.0) {
                HoloPoly::zero()
            } else {
                HoloPoly::monomial(betas[row], self.s_exp(row))?
            };
            rows.push(vec![first, second]);
        }
        MacfarlaneMap::new(self.n, 2, rows)
    }

    /// The transposition image of the ansatz, meaningful only for `n = 4`
    /// (where target and source subspaces have equal dimension and `K ↦ Kᵀ`
    /// is a symmetry of the problem).
    ///
    /// Transposing swaps the off-diagonal entries of the 2×2 matrix, which in
    /// ansatz terms exchanges `(r_2, s_1)` and swaps the `α_2`/`β_1` pin tags.
    /// Returns `None` for other `n` or when the image violates the exponent
    /// ordering.
    pub fn transposed(&self) -> Option<MonomialAnsatz> {
        if self.n != 4 {
            return None;
        }
        let (r1, r2) = (self.r_exp[0], self.r_exp[1]);
        if self.s1 < r1 {
            return None;
        }
        // Off-diagonal swap: the new second-row α inherits the β_1 pin and
        // vice versa; the diagonal pins stay put.
        let mut pattern = ZeroPattern::none(2);
        if self.alpha[0] == SlotKind::Zero {
            pattern = pattern.pin_alpha(0);
        }
        if self.beta[0] == SlotKind::Zero {
            pattern = pattern.pin_alpha(1);
        }
        if self.alpha[1] == SlotKind::Zero {
            pattern = pattern.pin_beta(0);
        }
        if self.beta[1] == SlotKind::Zero {
            pattern = pattern.pin_beta(1);
        }
        build_ansatz(4, &[r1, self.s1], r2, &pattern).ok()
    }

    /// Key used to pick a canonical representative inside a transposition
    /// class: the larger key wins, matching the classical convention of
    /// putting the growth into the first column.
    pub(crate) fn canonical_key(&self) -> (Vec<u32>, u32, Vec<bool>, Vec<bool>) {
        (
            self.r_exp.clone(),
            self.s1,
            self.alpha.iter().map(|k| *k == SlotKind::Zero).collect(),
            self.beta.iter().map(|k| *k == SlotKind::Zero).collect(),
        )
    }
}
