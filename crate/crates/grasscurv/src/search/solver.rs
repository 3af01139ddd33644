//! Seeded multistart damped least squares for the quadratic systems.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::constraints::ConstraintSystem;

/// Residual sum at or below which an outcome counts as solved.
pub const CERTIFY_TOL: f64 = 1e-10;

/// Inner stopping threshold.  Iterating to machine scale (rather than to the
/// certification tolerance) makes certified points reproduce the binomial row
/// to ~1e−13 per coefficient, so downstream shape checks pass with room to
/// spare.
const STOP_TOL: f64 = 1e-28;
const MAX_ITERS: usize = 200;
const JACOBIAN_STEP: f64 = 1e-7;
const LAMBDA_INIT: f64 = 1e-3;
const LAMBDA_MAX: f64 = 1e10;
const LAMBDA_MIN: f64 = 1e-14;

/// How a multistart run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Some restart reached a residual at or below [`CERTIFY_TOL`].
    Solved,
    /// No restart certified; the best residual found is reported as a floor.
    /// This is evidence of infeasibility, never a proof.
    ResidualFloor,
    /// The system has no free unknowns to optimize and its fixed residual is
    /// above tolerance.
    Degenerate,
}

impl fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SolveStatus::Solved => "solved",
            SolveStatus::ResidualFloor => "residual_floor",
            SolveStatus::Degenerate => "degenerate",
        })
    }
}

/// Result of [`solve_multistart`]: the best point found, its residual sum, and
/// how much of the restart budget was used.  `status == Solved` implies
/// `residual ≤ CERTIFY_TOL`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    /// Best assignment of the system's real unknowns, in
    /// [`ConstraintSystem`] report order.
    pub best_point: Vec<f64>,
    /// Sum of squared equation violations at `best_point`.
    pub residual: f64,
    /// Restarts consumed (stops early at the first certified point).
    pub restarts_used: u32,
    /// Seed the run was keyed on.
    pub seed: u64,
}

/// Runs damped least-squares refinement from `restarts` seeded random starts.
///
/// Starts are uniform in `[0, U)^dim` with `U = √(max right-hand side)`; each
/// restart derives its own generator from `seed` and the start index, so
/// results are deterministic and independent of evaluation order.  Restarts
/// stop at the first certified point; otherwise the best (lowest-residual,
/// earliest-start) point is reported as a floor.
pub fn solve_multistart(sys: &ConstraintSystem, restarts: u32, seed: u64) -> SolveOutcome {
    let dim = sys.dim();
    if dim == 0 {
        let residual = sys.residual_sum(&[]);
        let status = if residual <= CERTIFY_TOL {
            SolveStatus::Solved
        } else {
            SolveStatus::Degenerate
        };
        return SolveOutcome {
            status,
            best_point: Vec::new(),
            residual,
            restarts_used: 0,
            seed,
        };
    }
    let span = sys
        .equations()
        .iter()
        .map(|e| e.rhs)
        .fold(1.0, f64::max)
        .sqrt();
    let mut best_point = vec![0.0; dim];
    let mut best_res = f64::INFINITY;
    for start in 0..restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed.wrapping_add(u64::from(start).wrapping_mul(0x9E37_79B9_7F4A_7C15)),
        );
        let x0: Vec<f64> = (0..dim).map(|_| rng.gen_range(0.0..span)).collect();
        let (x, f) = refine(sys, x0);
        if f < best_res {
            best_res = f;
            best_point = x;
        }
        if best_res <= CERTIFY_TOL {
            return SolveOutcome {
                status: SolveStatus::Solved,
                best_point,
                residual: best_res,
                restarts_used: start + 1,
                seed,
            };
        }
    }
    SolveOutcome {
        status: SolveStatus::ResidualFloor,
        best_point,
        residual: best_res,
        restarts_used: restarts.max(1),
        seed,
    }
}

/// One damped least-squares descent with a forward-difference Jacobian.
/// Accepted steps shrink the damping, rejected steps grow it; the residual sum
/// is monotone non-increasing by construction.
fn refine(sys: &ConstraintSystem, x0: Vec<f64>) -> (Vec<f64>, f64) {
    let m = sys.equation_count();
    let dim = x0.len();
    let mut x = x0;
    let mut r = DVector::from_vec(sys.residuals(&x));
    let mut f = r.norm_squared();
    let mut lambda = LAMBDA_INIT;
    for _ in 0..MAX_ITERS {
        if f <= STOP_TOL {
            break;
        }
        let mut jac = DMatrix::<f64>::zeros(m, dim);
        for j in 0..dim {
            let h = JACOBIAN_STEP * (1.0 + x[j].abs());
            let mut xp = x.clone();
            xp[j] += h;
            let rp = sys.residuals(&xp);
            for i in 0..m {
                jac[(i, j)] = (rp[i] - r[i]) / h;
            }
        }
        let jtj = jac.transpose() * &jac;
        let g = jac.transpose() * &r;
        let mut stepped = false;
        while lambda <= LAMBDA_MAX {
            let mut a = jtj.clone();
            for d in 0..dim {
                a[(d, d)] += lambda;
            }
            let rhs = -&g;
            let delta = match a.clone().cholesky() {
                Some(ch) => Some(ch.solve(&rhs)),
                None => a.lu().solve(&rhs),
            };
            let Some(delta) = delta else { break };
            let xc: Vec<f64> = x.iter().zip(delta.iter()).map(|(a, b)| a + b).collect();
            let rc = DVector::from_vec(sys.residuals(&xc));
            let fc = rc.norm_squared();
            if fc < f {
                x = xc;
                r = rc;
                f = fc;
                lambda = (lambda * 0.1).max(LAMBDA_MIN);
                stepped = true;
                break;
            }
            lambda *= 10.0;
        }
        if !stepped {
            break;
        }
    }
    (x, f)
}
