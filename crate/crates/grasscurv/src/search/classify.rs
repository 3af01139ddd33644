//! Exhaustive enumeration of monomial ansatz branches and the per-curvature
//! classification driver built on top of the multistart solver.
//!
//! [`enumerate_exponents`] lists every admissible branch for a given target
//! exponent; [`classify`] walks a range of targets for one ambient dimension
//! and reports, per target, either a certified witness or the residual floor
//! reached by an exhaustive solve over all branches.

use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::curvature::constant_curvature_check;
use crate::grassmann::MacfarlaneMap;
use crate::poly::HoloPoly;
use crate::veronese::VeroneseSpec;

use super::ansatz::{build_ansatz, CoeffExpr, MonomialAnsatz, ZeroPattern};
use super::constraints::{det_residual, ConstraintSystem};
use super::solver::{solve_multistart, SolveOutcome, SolveStatus, CERTIFY_TOL};

/// Tolerance used when re-verifying a candidate witness geometrically.
const VERIFY_TOL: f64 = 1e-9;

/// Knobs for branch enumeration.
#[derive(Debug, Clone, Default)]
pub struct EnumerateOptions {
    /// Allow the first row's leading exponent to exceed 1.  The default
    /// (gauge-fixed) enumeration pins `r₁ = 1`, which loses no generality for
    /// full maps; relaxing it widens the search at a steep combinatorial cost.
    pub relax_r1: bool,
}

/// Enumerate every admissible monomial ansatz for maps into G(2, n) whose
/// Gram determinant can match the binomial profile with top power `target_r`.
///
/// A branch is admissible when:
/// - no row is fully pinned to zero (such a row factors through a smaller
///   ambient dimension and is handled by the embedding constructor instead),
/// - no linear coordinate's power exceeds `target_r`,
/// - the powers that are actually present reach `target_r` and cover every
///   intermediate power `0..=target_r` (pair products whose power exceeds the
///   target are allowed but must then vanish, so they contribute to neither
///   coverage nor the maximum),
/// - for n = 4, where transposing `K` maps branches onto each other, only the
///   lexicographically larger representative of each pair is kept.
///
/// Exponent rows are gauge-fixed to `r₁ = 1` and nondecreasing.
pub fn enumerate_exponents(n: usize, target_r: u32) -> Vec<MonomialAnsatz> {
    enumerate_with(n, target_r, &EnumerateOptions::default())
}

/// [`enumerate_exponents`] with explicit [`EnumerateOptions`].
pub fn enumerate_with(n: usize, target_r: u32, opts: &EnumerateOptions) -> Vec<MonomialAnsatz> {
    if n < 4 || target_r < 1 {
        return Vec::new();
    }
    let rows = n - 2;
    let r1_max = if opts.relax_r1 { target_r } else { 1 };

    let mut out = Vec::new();
    for r_exp in exponent_tuples(rows, r1_max, target_r) {
        for s1 in 1..=target_r {
            for mask in 0..3u32.pow(rows as u32) {
                let Some(pattern) = decode_pattern(rows, mask) else {
                    continue;
                };
                let Ok(ansatz) = build_ansatz(n, &r_exp, s1, &pattern) else {
                    continue;
                };
                if !is_admissible(&ansatz, target_r) {
                    continue;
                }
                if n == 4 {
                    if let Some(twin) = ansatz.transposed() {
                        if ansatz.canonical_key() < twin.canonical_key() {
                            continue;
                        }
                    }
                }
                out.push(ansatz);
            }
        }
    }
    out
}

/// Nondecreasing exponent tuples `(r₁, …, r_rows)` with `1 ≤ r₁ ≤ r1_max`
/// and every entry at most `cap`.
fn exponent_tuples(rows: usize, r1_max: u32, cap: u32) -> Vec<Vec<u32>> {
    fn rec(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, rows: usize, hi_first: u32, cap: u32) {
        if cur.len() == rows {
            out.push(cur.clone());
            return;
        }
        let (lo, hi) = match cur.last() {
            None => (1, hi_first),
            Some(&prev) => (prev, cap),
        };
        for v in lo..=hi {
            cur.push(v);
            rec(out, cur, rows, hi_first, cap);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut out, &mut Vec::with_capacity(rows), rows, r1_max, cap);
    out
}

/// Decode a base-3 mask into a zero pattern: digit 0 leaves the row free,
/// 1 pins the row's α, 2 pins its β.  Fully-pinned rows cannot arise here
/// because each digit pins at most one slot.
fn decode_pattern(rows: usize, mask: u32) -> Option<ZeroPattern> {
    let mut pattern = ZeroPattern::none(rows);
    let mut m = mask;
    for row in 0..rows {
        match m % 3 {
            0 => {}
            1 => pattern = pattern.pin_alpha(row),
            2 => pattern = pattern.pin_beta(row),
            _ => unreachable!(),
        }
        m /= 3;
    }
    if m != 0 {
        return None;
    }
    Some(pattern)
}

fn is_admissible(ansatz: &MonomialAnsatz, target_r: u32) -> bool {
    let mut covered = vec![false; target_r as usize + 1];
    let mut top = 0;
    for mono in ansatz.monomials() {
        let linear = matches!(mono.coeff, CoeffExpr::Beta(_) | CoeffExpr::NegAlpha(_));
        if mono.power > target_r {
            if linear {
                return false;
            }
            // Over-target pair product: forced to vanish, so it neither
            // covers a power nor raises the effective maximum.
            continue;
        }
        covered[mono.power as usize] = true;
        top = top.max(mono.power);
    }
    top == target_r && covered.iter().all(|&c| c)
}

// ---- infeasibility probe ----

/// Restart budget for an exhaustive probe over a set of branches.
#[derive(Debug, Clone)]
pub struct ProbeBudget {
    pub restarts: u32,
    pub seed: u64,
}

impl Default for ProbeBudget {
    fn default() -> Self {
        Self {
            restarts: 100,
            seed: 42,
        }
    }
}

/// Outcome of solving a single branch during a probe or classification run.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchProbe {
    /// Human-readable branch label (exponents plus pinned slots).
    pub label: String,
    /// Leading exponents `r₁ ≤ … ≤ r_rows` of the branch.
    pub r_exp: Vec<u32>,
    /// Second-column offset exponent `s₁`.
    pub s1: u32,
    /// Names of the slots pinned to zero in this branch.
    pub pinned: Vec<String>,
    /// The solver's verdict for this branch.
    pub outcome: SolveOutcome,
}

/// Aggregate evidence that no branch of an enumeration admits a solution:
/// the per-branch solver outcomes and the smallest residual any of them
/// reached.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbeReport {
    /// Minimum residual over all branches (`+∞` when there are none).
    pub floor: f64,
    pub branches: Vec<BranchProbe>,
}

/// Run the multistart solver over every system, without early exit, and
/// report the residual floor.  A floor comfortably above the certification
/// tolerance across an exhaustive branch list is numerical evidence that the
/// target curvature admits no map of this form.
pub fn infeasibility_probe(systems: &[ConstraintSystem], budget: &ProbeBudget) -> ProbeReport {
    let (_, branches) = probe_branches(systems, budget.restarts, budget.seed, false);
    let floor = branches
        .iter()
        .map(|b| b.outcome.residual)
        .fold(f64::INFINITY, f64::min);
    ProbeReport { floor, branches }
}

/// Solve each system in order.  Returns the index of the first certified
/// branch (if any) and the per-branch records accumulated so far; with
/// `early_exit` the loop stops at the first success.
fn probe_branches(
    systems: &[ConstraintSystem],
    restarts: u32,
    seed: u64,
    early_exit: bool,
) -> (Option<usize>, Vec<BranchProbe>) {
    let mut branches = Vec::with_capacity(systems.len());
    let mut solved = None;
    for (idx, sys) in systems.iter().enumerate() {
        let outcome = solve_multistart(sys, restarts, seed);
        let hit = outcome.status == SolveStatus::Solved;
        branches.push(BranchProbe {
            label: sys.ansatz().label(),
            r_exp: sys.ansatz().r_exp().to_vec(),
            s1: sys.ansatz().s1(),
            pinned: sys.ansatz().pinned_names(),
            outcome,
        });
        if hit && solved.is_none() {
            solved = Some(idx);
            if early_exit {
                break;
            }
        }
    }
    (solved, branches)
}

// ---- classification ----

/// Knobs for [`classify`].
#[derive(Debug, Clone)]
pub struct SearchConfig {
    /// Multistart restarts per branch.
    pub restarts: u32,
    /// Base RNG seed; every run with the same seed is bit-reproducible.
    pub seed: u64,
    /// Forwarded to [`EnumerateOptions::relax_r1`].
    pub relax_r1: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            restarts: 100,
            seed: 42,
            relax_r1: false,
        }
    }
}

/// How a row's witness was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessSource {
    /// Numerical solution of a monomial ansatz branch.
    Search,
    /// Closed-form Veronese map (top curvature for the ambient dimension).
    Veronese,
    /// Witness for a smaller ambient dimension, padded with a zero row.
    Embedding,
}

/// One classified target exponent.
#[derive(Debug, Clone)]
pub struct ClassifyRow {
    /// Target top power `r` of the Gram determinant.
    pub r: u32,
    /// The curvature `4/r` this row is about.
    pub kappa: f64,
    /// `Solved` with a certified witness, or `ResidualFloor` with probe
    /// evidence that no branch reaches a solution.
    pub status: SolveStatus,
    /// Determinant residual of the witness, or the probe floor.
    pub residual: f64,
    /// A certified witness map, when one was found.
    pub witness: Option<MacfarlaneMap>,
    /// Label of the solved branch, when the witness came from the search.
    pub branch: Option<String>,
    /// Every construction that produced this row's curvature, in preference
    /// order (search result first, then closed forms).
    pub sources: Vec<WitnessSource>,
    /// The exhaustive branch trace, attached to rows without a witness.
    pub probe: Option<ProbeReport>,
}

/// Classification of a range of target exponents for one ambient dimension.
#[derive(Debug, Clone)]
pub struct ClassifyTable {
    pub n: usize,
    pub rows: Vec<ClassifyRow>,
    /// True when the branch enumeration for this ambient dimension is known
    /// to be exhaustive, so a residual floor is evidence of nonexistence
    /// rather than merely of an incomplete search.
    pub exhaustive: bool,
}

/// Classify each `r` in `r_range` for maps into G(2, n): find a certified
/// constant-curvature witness with `𝒦 = 4/r`, or record the residual floor
/// of an exhaustive branch solve.
///
/// Witnesses are sought in preference order: a solved ansatz branch, the
/// Veronese map when `r = 2(n−2)`, and an embedding of a witness for ambient
/// dimension `n−1` when `r ≤ 2(n−3)`.  Every candidate is re-verified
/// geometrically before a row is marked solved.
pub fn classify(n: usize, r_range: RangeInclusive<u32>, config: &SearchConfig) -> ClassifyTable {
    let rows = r_range.map(|r| classify_row(n, r, config)).collect();
    ClassifyTable {
        n,
        rows,
        exhaustive: matches!(n, 4 | 5 | 6),
    }
}

fn classify_row(n: usize, r: u32, config: &SearchConfig) -> ClassifyRow {
    let kappa = 4.0 / f64::from(r);
    let opts = EnumerateOptions {
        relax_r1: config.relax_r1,
    };
    let systems: Vec<ConstraintSystem> = enumerate_with(n, r, &opts)
        .iter()
        .filter_map(|a| ConstraintSystem::from_ansatz(a, r).ok())
        .collect();
    let (solved_idx, branches) = probe_branches(&systems, config.restarts, config.seed, true);

    // Candidate witnesses in preference order.
    let mut candidates: Vec<(WitnessSource, Option<String>, MacfarlaneMap)> = Vec::new();
    if let Some(idx) = solved_idx {
        if let Ok(w) = systems[idx].witness(&branches[idx].outcome.best_point) {
            candidates.push((
                WitnessSource::Search,
                Some(branches[idx].label.clone()),
                w,
            ));
        }
    }
    if i64::from(r) == 2 * n as i64 - 4 {
        if let Ok(k) = VeroneseSpec::new(2, n).and_then(|s| s.macfarlane()) {
            candidates.push((WitnessSource::Veronese, None, k));
        }
    }
    if i64::from(r) <= 2 * n as i64 - 6 {
        if let Some(k) = construct_witness(n - 1, r, config) {
            candidates.push((WitnessSource::Embedding, None, k.embed_pad()));
        }
    }
    let sources: Vec<WitnessSource> = candidates.iter().map(|c| c.0).collect();

    for (_, label, witness) in candidates {
        let Ok(det) = witness.gram_det() else {
            continue;
        };
        let residual = det_residual(&det, r);
        let verified = constant_curvature_check(&det, VERIFY_TOL)
            .map(|rep| rep.constant && rep.r == Some(r))
            .unwrap_or(false);
        if verified && residual <= CERTIFY_TOL {
            return ClassifyRow {
                r,
                kappa,
                status: SolveStatus::Solved,
                residual,
                witness: Some(witness),
                branch: label,
                sources,
                probe: None,
            };
        }
    }

    // No certified witness from any source: report the floor together with
    // the full branch trace.  (When the solver certified a branch but the
    // witness failed re-verification — which a correct solve cannot produce —
    // the trace below is the partial one accumulated before the early exit.)
    let floor = branches
        .iter()
        .map(|b| b.outcome.residual)
        .fold(f64::INFINITY, f64::min);
    ClassifyRow {
        r,
        kappa,
        status: SolveStatus::ResidualFloor,
        residual: floor,
        witness: None,
        branch: None,
        sources,
        probe: Some(ProbeReport { floor, branches }),
    }
}

/// Closed-form-first construction of a witness for `𝒦 = 4/r` in G(2, n),
/// used by the embedding source.  Recurses down the ambient dimension:
/// `r = 1` has an explicit one-row witness, `r = 2(n−2)` is the Veronese map,
/// `r ≤ 2(n−3)` embeds from `n−1`, and the single remaining case per
/// dimension (`r = 2(n−2) − 1`) falls back to the branch search.
fn construct_witness(n: usize, r: u32, config: &SearchConfig) -> Option<MacfarlaneMap> {
    if n < 3 || r < 1 {
        return None;
    }
    if r == 1 {
        // K = [[x, 0], 0, …]: the Gram determinant is 1 + |x|².
        let mut k = vec![vec![
            HoloPoly::monomial(Complex64::new(1.0, 0.0), 1).ok()?,
            HoloPoly::zero(),
        ]];
        for _ in 1..(n - 2) {
            k.push(vec![HoloPoly::zero(), HoloPoly::zero()]);
        }
        return MacfarlaneMap::new(n, 2, k).ok();
    }
    if i64::from(r) == 2 * n as i64 - 4 {
        return VeroneseSpec::new(2, n).ok()?.macfarlane().ok();
    }
    if i64::from(r) <= 2 * n as i64 - 6 {
        return construct_witness(n - 1, r, config).map(|k| k.embed_pad());
    }
    let opts = EnumerateOptions {
        relax_r1: config.relax_r1,
    };
    for ansatz in enumerate_with(n, r, &opts) {
        let Ok(sys) = ConstraintSystem::from_ansatz(&ansatz, r) else {
            continue;
        };
        let outcome = solve_multistart(&sys, config.restarts, config.seed);
        if outcome.status == SolveStatus::Solved {
            if let Ok(w) = sys.witness(&outcome.best_point) {
                return Some(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_free(a: &MonomialAnsatz) -> bool {
        a.pinned_names().is_empty()
    }

    #[test]
    fn enumerate_gauge_fixes_and_dedupes_transposes() {
        let branches = enumerate_exponents(4, 3);
        assert!(!branches.is_empty());
        for a in &branches {
            assert_eq!(a.r_exp()[0], 1, "leading exponent is gauge-fixed");
        }
        // The free representative of the only nontrivial class is
        // r = [1, 2], s₁ = 1; its transpose r = [1, 1], s₁ = 2 must be gone.
        assert!(branches
            .iter()
            .any(|a| all_free(a) && a.r_exp() == [1, 2] && a.s1() == 1));
        assert!(!branches
            .iter()
            .any(|a| all_free(a) && a.r_exp() == [1, 1] && a.s1() == 2));
    }

    #[test]
    fn enumerate_top_target_for_n4_has_single_free_class() {
        let branches = enumerate_exponents(4, 5);
        let free: Vec<_> = branches.iter().filter(|a| all_free(a)).collect();
        assert_eq!(free.len(), 1);
        assert_eq!(free[0].r_exp(), [1, 3]);
        assert_eq!(free[0].s1(), 2);
    }

    #[test]
    fn enumerate_requires_full_power_coverage() {
        for a in enumerate_exponents(4, 4) {
            let mut covered = vec![false; 5];
            for mono in a.monomials() {
                if mono.power <= 4 {
                    covered[mono.power as usize] = true;
                }
            }
            assert!(covered.iter().all(|&c| c), "gap in {}", a.label());
        }
    }

    #[test]
    fn enumerate_n5_target7_pair_constraints() {
        // Branches keeping both pair products of the third row alive must
        // have r₂ = 2 and r₃ + s₁ = 6.
        let branches = enumerate_exponents(5, 7);
        let mut seen = 0;
        for a in &branches {
            let monos = a.monomials();
            let has = |i, j| {
                monos
                    .iter()
                    .any(|m| m.coeff == CoeffExpr::Gamma(i, j) && m.power <= 7)
            };
            if has(0, 2) && has(1, 2) {
                seen += 1;
                assert_eq!(a.r_exp()[1], 2, "branch {}", a.label());
                assert_eq!(a.r_exp()[2] + a.s1(), 6, "branch {}", a.label());
                assert!(a.s1() == 2 || a.s1() == 3, "branch {}", a.label());
            }
        }
        assert!(seen > 0);
    }

    #[test]
    fn probe_reports_floor_for_feasible_control() {
        // Target 4 in G(2, 4) is feasible (Veronese), so an exhaustive probe
        // must drive some branch's residual to certification level.
        let systems: Vec<ConstraintSystem> = enumerate_exponents(4, 4)
            .iter()
            .filter_map(|a| ConstraintSystem::from_ansatz(a, 4).ok())
            .collect();
        let budget = ProbeBudget {
            restarts: 30,
            seed: 42,
        };
        let report = infeasibility_probe(&systems, &budget);
        assert_eq!(report.branches.len(), systems.len());
        assert!(report.floor < CERTIFY_TOL, "floor {}", report.floor);
    }

    #[test]
    fn classify_n4_full_range() {
        let config = SearchConfig {
            restarts: 60,
            ..SearchConfig::default()
        };
        let table = classify(4, 1..=5, &config);
        assert!(table.exhaustive);
        assert_eq!(table.rows.len(), 5);
        for (row, want_r) in table.rows.iter().zip(1u32..) {
            assert_eq!(row.r, want_r);
            assert!((row.kappa - 4.0 / f64::from(want_r)).abs() < 1e-15);
        }
        for row in &table.rows[..4] {
            assert_eq!(row.status, SolveStatus::Solved, "r = {}", row.r);
            assert!(row.residual <= CERTIFY_TOL, "r = {}", row.r);
            assert!(row.witness.is_some());
            assert!(!row.sources.is_empty());
        }
        let floor_row = &table.rows[4];
        assert_eq!(floor_row.status, SolveStatus::ResidualFloor);
        assert!(floor_row.residual > 1e-2, "floor {}", floor_row.residual);
        let probe = floor_row.probe.as_ref().expect("floor rows carry a trace");
        assert!(!probe.branches.is_empty());
        assert!(probe.branches.iter().all(|b| !b.label.is_empty()));
    }

    #[test]
    fn classify_offers_embedding_source_below_top() {
        // r = 3 in G(2, 5) embeds the top map of G(2, 4).
        let config = SearchConfig {
            restarts: 40,
            ..SearchConfig::default()
        };
        let table = classify(5, 3..=3, &config);
        let row = &table.rows[0];
        assert_eq!(row.status, SolveStatus::Solved);
        assert!(row.sources.contains(&WitnessSource::Embedding));
        let witness = row.witness.as_ref().unwrap();
        assert_eq!(witness.n(), 5);
    }

    #[test]
    fn construct_witness_terminal_cases() {
        let config = SearchConfig::default();
        // r = 1 explicit witness in G(2, 3).
        let w1 = construct_witness(3, 1, &config).unwrap();
        let det = w1.gram_det().unwrap();
        assert!(det.binomial_match(1e-12).is_some());
        assert_eq!(det.top_diagonal_degree(), Some(1));
        // Veronese terminal: r = 2 in G(2, 3).
        let w2 = construct_witness(3, 2, &config).unwrap();
        assert_eq!(w2.gram_det().unwrap().top_diagonal_degree(), Some(2));
        // Out-of-range requests fail cleanly.
        assert!(construct_witness(3, 3, &config).is_none());
        assert!(construct_witness(2, 1, &config).is_none());
    }
}
