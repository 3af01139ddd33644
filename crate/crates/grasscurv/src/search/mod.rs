//! Search for constant-curvature maps into `G(2, n)` via a monomial ansatz.
//!
//! The gauge-fixed form of a `G(2, n)` map is an `(n−2)×2` matrix `K`; the
//! ansatz restricts every entry to a single monomial, `K[i][0] = α_i x^{r_i}`
//! and `K[i][1] = β_i x^{s_i}` with a shared offset `s_i − r_i`.  Every Plücker
//! coordinate of such a map is itself a single monomial, so demanding
//! `Σ|p_I|² = (1+|x|²)^r` reduces to finitely many real quadratic equations:
//! the squared coefficient moduli grouped by power must reproduce the binomial
//! row of `r`.  This module enumerates the admissible exponent layouts and
//! structural zero patterns, assembles those constraint systems, solves them by
//! seeded multistart damped least squares, and aggregates the results into
//! classification tables and infeasibility probes.  A probe never claims a
//! proof: a system that resists the solver is reported as a residual floor over
//! a stated restart budget, nothing stronger.

mod ansatz;
mod classify;
mod constraints;
mod solver;

pub use ansatz::{
    build_ansatz, CoeffExpr, MonomialAnsatz, PlueckerMonomial, SlotKind, ZeroPattern,
};
pub use classify::{
    classify, enumerate_exponents, enumerate_with, infeasibility_probe, BranchProbe, ClassifyRow,
    ClassifyTable, EnumerateOptions, ProbeBudget, ProbeReport, SearchConfig, WitnessSource,
};
pub use constraints::{det_residual, ConstraintSystem};
pub use solver::{solve_multistart, SolveOutcome, SolveStatus, CERTIFY_TOL};
