//! Quadratic constraint systems: match `Σ|p_I|²` to a binomial row.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grassmann::MacfarlaneMap;
use crate::poly::{binomial, HermitianPoly};

use super::ansatz::{CoeffExpr, MonomialAnsatz};

/// One real equation: the summed squared moduli of the listed coefficients
/// must equal `rhs`.
#[derive(Debug, Clone)]
pub(crate) struct Equation {
    /// Mixed power `|x|^{2k}` this equation matches; kept for diagnostics.
    #[cfg_attr(not(test), allow(dead_code))]
    pub power: u32,
    pub rhs: f64,
    pub terms: Vec<CoeffExpr>,
}

/// The real quadratic system demanding that an ansatz's Gram determinant be
/// exactly `(1+|x|²)^{target_r}`.
///
/// Equation `k` (for `k = 0..=target_r`) collects every Plücker monomial of
/// power `k` and requires the sum of its squared coefficient moduli to equal
/// the binomial coefficient `C(target_r, k)`; the power-0 equation is the
/// trivial identity `1 = 1` contributed by the gauge-fixed top minor.  A `γ`
/// monomial whose power exceeds the target contributes an extra equation with
/// right-hand side zero: unlike the linear coefficients, `γ` can vanish at a
/// genuine solution without being structurally pinned, so such branches stay
/// searchable.
#[derive(Debug, Clone)]
pub struct ConstraintSystem {
    ansatz: MonomialAnsatz,
    target_r: u32,
    equations: Vec<Equation>,
}

impl ConstraintSystem {
    /// Groups the ansatz monomials by power and attaches the binomial
    /// right-hand sides.
    ///
    /// # Errors
    ///
    /// [`Error::PowerMismatch`] if a free `α` or `β` monomial sits above the
    /// target power (its pinned variant is the meaningful branch), or if no
    /// monomial reaches the target power at all.
    pub fn from_ansatz(ansatz: &MonomialAnsatz, target_r: u32) -> Result<Self> {
        if target_r < 1 {
            return Err(Error::PowerMismatch(
                "target exponent must be at least 1".into(),
            ));
        }
        let monomials = ansatz.monomials();
        for m in &monomials {
            let linear = matches!(m.coeff, CoeffExpr::Beta(_) | CoeffExpr::NegAlpha(_));
            if linear && m.power > target_r {
                return Err(Error::PowerMismatch(format!(
                    "entry p{}{} has power {} above the target {}; pin its coefficient instead",
                    m.tuple.0, m.tuple.1, m.power, target_r
                )));
            }
        }
        let reached = monomials.iter().any(|m| m.power == target_r);
        if !reached {
            return Err(Error::PowerMismatch(format!(
                "no monomial reaches the target power {target_r}"
            )));
        }
        let mut equations = Vec::new();
        for k in 0..=target_r {
            equations.push(Equation {
                power: k,
                rhs: binomial(target_r, k),
                terms: monomials
                    .iter()
                    .filter(|m| m.power == k)
                    .map(|m| m.coeff)
                    .collect(),
            });
        }
        let mut extra: Vec<u32> = monomials
            .iter()
            .map(|m| m.power)
            .filter(|p| *p > target_r)
            .collect();
        extra.sort_unstable();
        extra.dedup();
        for k in extra {
            equations.push(Equation {
                power: k,
                rhs: 0.0,
                terms: monomials
                    .iter()
                    .filter(|m| m.power == k)
                    .map(|m| m.coeff)
                    .collect(),
            });
        }
        Ok(Self {
            ansatz: ansatz.clone(),
            target_r,
            equations,
        })
    }

    pub fn ansatz(&self) -> &MonomialAnsatz {
        &self.ansatz
    }

    pub fn target_r(&self) -> u32 {
        self.target_r
    }

    /// Number of real unknowns.
    pub fn dim(&self) -> usize {
        self.ansatz.unknown_count()
    }

    pub fn equation_count(&self) -> usize {
        self.equations.len()
    }

    pub(crate) fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// Per-equation violations `LHS − RHS` at a point.
    pub fn residuals(&self, point: &[f64]) -> Vec<f64> {
        let (alphas, betas) = self.ansatz.coefficient_values(point);
        self.equations
            .iter()
            .map(|eq| {
                let lhs: f64 = eq
                    .terms
                    .iter()
                    .map(|t| coeff_value(t, &alphas, &betas).norm_sqr())
                    .sum();
                lhs - eq.rhs
            })
            .collect()
    }

    /// Sum of squared equation violations at a point.
    pub fn residual_sum(&self, point: &[f64]) -> f64 {
        self.residuals(point).iter().map(|r| r * r).sum()
    }

    /// Builds the gauge-fixed map for a solver point.
    pub fn witness(&self, point: &[f64]) -> Result<MacfarlaneMap> {
        self.ansatz.witness(point)
    }
}

/// Evaluates a symbolic coefficient at concrete `(α, β)` values.
pub(crate) fn coeff_value(
    expr: &CoeffExpr,
    alphas: &[Complex64],
    betas: &[Complex64],
) -> Complex64 {
    match expr {
        CoeffExpr::One => Complex64::new(1.0, 0.0),
        CoeffExpr::Beta(row) => betas[*row],
        CoeffExpr::NegAlpha(row) => -alphas[*row],
        CoeffExpr::Gamma(a, b) => alphas[*a] * betas[*b] - alphas[*b] * betas[*a],
    }
}

/// Squared distance between a Hermitian determinant and the exact binomial row
/// `(1+|x|²)^{target_r}`: deviations on the diagonal coefficients plus the
/// squared moduli of every stray term.
///
/// At a solver point this agrees with [`ConstraintSystem::residual_sum`],
/// because the determinant of a single-monomial ansatz is diagonal with the
/// equation left-hand sides as coefficients; the function also applies to
/// witnesses that did not come from an ansatz (embeddings, closed forms).
pub fn det_residual(det: &HermitianPoly, target_r: u32) -> f64 {
    let mut sum = 0.0;
    for k in 0..=target_r {
        let c = det.coeff(k, k);
        sum += (c.re - binomial(target_r, k)).powi(2) + c.im * c.im;
    }
    for (j, k, c) in det.as_bipoly().terms() {
        if j != k || j > target_r {
            sum += c.norm_sqr();
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::super::ansatz::{build_ansatz, ZeroPattern};
    use super::*;

    #[test]
    fn high_exponent_system_has_one_unknown_per_equation() {
        let a = build_ansatz(4, &[1, 3], 2, &ZeroPattern::none(2)).unwrap();
        let sys = ConstraintSystem::from_ansatz(&a, 5).unwrap();
        assert_eq!(sys.equation_count(), 6);
        let rhs: Vec<f64> = sys.equations().iter().map(|e| e.rhs).collect();
        assert_eq!(rhs, vec![1.0, 5.0, 10.0, 10.0, 5.0, 1.0]);
        for eq in sys.equations().iter().skip(1) {
            assert_eq!(eq.terms.len(), 1, "power {}", eq.power);
        }
    }

    #[test]
    fn veronese_point_solves_its_system() {
        // The closed-form solution for n = 4 in ansatz coordinates:
        // α = (2, √3), β = (−√3, −2) with exponents r = (1,2), s1 = 2.
        let a = build_ansatz(4, &[1, 2], 2, &ZeroPattern::none(2)).unwrap();
        let sys = ConstraintSystem::from_ansatz(&a, 4).unwrap();
        let s3 = 3f64.sqrt();
        let point = [2.0, s3, -s3, -2.0, 0.0];
        assert!(sys.residual_sum(&point) < 1e-24);
        let det = sys.witness(&point).unwrap().gram_det().unwrap();
        let (r, c) = det.binomial_match(1e-9).expect("binomial row");
        assert_eq!(r, 4);
        assert!((c - 1.0).abs() < 1e-12);
    }

    #[test]
    fn seven_system_matches_printed_equations() {
        let a = build_ansatz(6, &[1, 2, 3, 3], 2, &ZeroPattern::none(4).pin_alpha(3)).unwrap();
        let sys = ConstraintSystem::from_ansatz(&a, 7).unwrap();
        let rhs: Vec<f64> = sys.equations().iter().map(|e| e.rhs).collect();
        assert_eq!(rhs, vec![1.0, 7.0, 21.0, 35.0, 35.0, 21.0, 7.0, 1.0]);
        let counts: Vec<usize> = sys.equations().iter().map(|e| e.terms.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 3, 2, 2, 1]);
        assert_eq!(sys.dim(), 3 + 1 + 2 * 3);
    }

    #[test]
    fn rejects_unreachable_or_overshooting_targets() {
        let a = build_ansatz(4, &[1, 2], 1, &ZeroPattern::none(2)).unwrap();
        assert!(matches!(
            ConstraintSystem::from_ansatz(&a, 5),
            Err(Error::PowerMismatch(_))
        ));
        let b = build_ansatz(4, &[1, 6], 1, &ZeroPattern::none(2)).unwrap();
        assert!(matches!(
            ConstraintSystem::from_ansatz(&b, 5),
            Err(Error::PowerMismatch(_))
        ));
    }

    #[test]
    fn gamma_above_target_becomes_zero_equation() {
        let a = build_ansatz(4, &[1, 2], 3, &ZeroPattern::none(2)).unwrap();
        let sys = ConstraintSystem::from_ansatz(&a, 4).unwrap();
        assert_eq!(sys.equation_count(), 6);
        let last = sys.equations().last().unwrap();
        assert_eq!(last.power, 5);
        assert_eq!(last.rhs, 0.0);
        assert!(matches!(last.terms[..], [CoeffExpr::Gamma(0, 1)]));
    }

    #[test]
    fn det_residual_is_zero_exactly_on_the_binomial_row() {
        use crate::poly::BiPoly;
        let mut base = BiPoly::constant(Complex64::new(1.0, 0.0));
        base.add_term(1, 1, Complex64::new(1.0, 0.0)).unwrap();
        let row1 = HermitianPoly::new(base).unwrap();
        let row3 = row1.try_mul(&row1).unwrap().try_mul(&row1).unwrap();
        assert_eq!(det_residual(&row3, 3), 0.0);
        assert!(det_residual(&row3, 4) > 1.0);

        let mut off = row3.clone();
        let mut bump = BiPoly::zero();
        bump.add_term(2, 1, Complex64::new(1e-3, 0.0)).unwrap();
        bump.add_term(1, 2, Complex64::new(1e-3, 0.0)).unwrap();
        off = off.add(&HermitianPoly::new(bump).unwrap());
        let extra = det_residual(&off, 3);
        assert!((extra - 2e-6).abs() < 1e-12, "got {extra}");
    }
}
