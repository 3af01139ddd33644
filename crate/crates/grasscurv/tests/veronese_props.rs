//! Properties of the rational-curve family: binomial determinants, agreement
//! of the two parametrizations, the projector orbit against an exact symbolic
//! recursion, and the shape of the minor vector.

use grasscurv::curvature::{energy_density, gauss_curvature};
use grasscurv::poly::{BiPoly, HoloPoly};
use grasscurv::veronese::{pplus_orbit, veronese_cp, VeroneseSpec};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn both_parametrizations_have_binomial_determinants() {
    for n in 2..=8usize {
        for m in 1..n {
            let spec = VeroneseSpec::new(m, n).unwrap();
            let r = spec.r_max();
            let (r_frame, c_frame) = spec
                .frame()
                .unwrap()
                .gram_det()
                .unwrap()
                .binomial_match(1e-9)
                .unwrap_or_else(|| panic!("({m},{n}) frame determinant not binomial"));
            assert_eq!(r_frame, r);
            assert!(c_frame > 0.0);
            let (r_k, c_k) = spec
                .macfarlane()
                .unwrap()
                .gram_det()
                .unwrap()
                .binomial_match(1e-9)
                .unwrap_or_else(|| panic!("({m},{n}) normalized determinant not binomial"));
            assert_eq!(r_k, r);
            assert!((c_k - 1.0).abs() < 1e-9, "({m},{n}): c = {c_k}");
        }
    }
}

#[test]
fn parametrizations_agree_on_energy_and_curvature() {
    let mut rng = ChaCha8Rng::seed_from_u64(2201);
    for &(m, n) in &[(2, 4), (2, 5), (3, 5), (2, 6), (3, 6), (2, 7)] {
        let spec = VeroneseSpec::new(m, n).unwrap();
        let r = spec.r_max();
        let frame_det = spec.frame().unwrap().gram_det().unwrap();
        let k_det = spec.macfarlane().unwrap().gram_det().unwrap();
        let l_frame = energy_density(&frame_det).unwrap();
        let l_k = energy_density(&k_det).unwrap();
        let kappa = 4.0 / f64::from(r);
        for _ in 0..10 {
            let x = c(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5));
            let e_frame = l_frame.eval(x).unwrap();
            let e_k = l_k.eval(x).unwrap();
            assert!(
                (e_frame - e_k).abs() <= 1e-8 * (1.0 + e_frame.abs()),
                "({m},{n}) energies differ at {x}: {e_frame} vs {e_k}"
            );
            for l in [&l_frame, &l_k] {
                let k_val = gauss_curvature(l, x).unwrap();
                assert!(
                    (k_val - kappa).abs() <= 1e-9 * (1.0 + kappa),
                    "({m},{n}) curvature {k_val} ≠ {kappa} at {x}"
                );
            }
        }
    }
}

#[test]
fn energy_times_conformal_factor_is_half_r() {
    // For a binomial determinant, ℒ(x)·(1+|x|²)² = r/2 identically.
    let mut rng = ChaCha8Rng::seed_from_u64(2202);
    for &(m, n) in &[(1, 2), (1, 5), (2, 4), (2, 6), (3, 5)] {
        let spec = VeroneseSpec::new(m, n).unwrap();
        let r = f64::from(spec.r_max());
        let det = spec.macfarlane().unwrap().gram_det().unwrap();
        let l = energy_density(&det).unwrap();
        for _ in 0..5 {
            let x = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let conf = (1.0 + x.norm_sqr()).powi(2);
            let got = l.eval(x).unwrap() * conf;
            assert!(
                (got - r / 2.0).abs() <= 1e-9 * (1.0 + r),
                "({m},{n}) at {x}: {got} vs {}",
                r / 2.0
            );
        }
    }
}

/// One exact step of the orbit recursion on the pair `(G, d)` representing
/// the rational column `E = G/d`: with `H = d·∂G − ∂d·G`, `s = G†G` and
/// `t = G†H`, the projected derivative is `(s·H − t·G) / (d²·s)` — every
/// operation a polynomial one.
fn orbit_step(g: &[BiPoly], d: &BiPoly) -> (Vec<BiPoly>, BiPoly) {
    let dd = d.partial_z();
    let h: Vec<BiPoly> = g
        .iter()
        .map(|gi| d.try_mul(&gi.partial_z()).unwrap().sub(&dd.try_mul(gi).unwrap()))
        .collect();
    let mut s = BiPoly::zero();
    let mut t = BiPoly::zero();
    for (gi, hi) in g.iter().zip(&h) {
        s = s.add(&gi.conj_fn().try_mul(gi).unwrap());
        t = t.add(&gi.conj_fn().try_mul(hi).unwrap());
    }
    let next_g = g
        .iter()
        .zip(&h)
        .map(|(gi, hi)| s.try_mul(hi).unwrap().sub(&t.try_mul(gi).unwrap()))
        .collect();
    let next_d = d.try_mul(d).unwrap().try_mul(&s).unwrap();
    (next_g, next_d)
}

fn holo_to_bipoly(p: &HoloPoly) -> BiPoly {
    let mut b = BiPoly::zero();
    for (j, coeff) in p.coeffs().iter().enumerate() {
        if coeff.norm() > 0.0 {
            b.add_term(j as u32, 0, *coeff).unwrap();
        }
    }
    b
}

#[test]
fn orbit_matches_exact_rational_recursion() {
    // The numerically-orthogonalized orbit must coincide with the exact
    // symbolic recursion evaluated at the same point.
    for (n, depth) in [(3usize, 2usize), (4, 3)] {
        let frame = veronese_cp(n).unwrap();
        let column: Vec<BiPoly> = frame.columns()[0].iter().map(holo_to_bipoly).collect();
        let mut g = column;
        let mut d = BiPoly::constant(c(1.0, 0.0));
        let mut exact_values: Vec<Vec<Complex64>> = Vec::new();
        let x = c(0.37, -0.61);
        for k in 0..=depth {
            let dv = d.eval(x);
            exact_values.push(g.iter().map(|gi| gi.eval(x) / dv).collect());
            if k < depth {
                let (ng, nd) = orbit_step(&g, &d);
                g = ng;
                d = nd;
            }
        }
        let orbit = pplus_orbit(&frame, depth, x).unwrap();
        assert_eq!(orbit.len(), depth + 1);
        for (k, vec) in orbit.iter().enumerate() {
            let scale: f64 = exact_values[k].iter().map(|v| v.norm()).sum::<f64>() + 1.0;
            for (row, got) in vec.iter().enumerate() {
                let want = exact_values[k][row];
                assert!(
                    (got - want).norm() <= 1e-8 * scale,
                    "n={n} depth {k} row {row}: {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn stacked_minors_match_the_displayed_rank_two_veronese_vector() {
    // The (𝕀; K) minors of the (2,5) map carry the same multiset of
    // (degree, |coefficient|) pairs as the published component list, even
    // though the lexicographic labeling assigns them to different slots.
    let spec = VeroneseSpec::new(2, 5).unwrap();
    let minors = spec
        .macfarlane()
        .unwrap()
        .to_frame()
        .pluecker_minors()
        .unwrap();
    let mut got: Vec<(u32, f64)> = minors
        .entries()
        .iter()
        .map(|p| {
            let deg = p.degree().expect("no vanishing minors here");
            // Each minor is a monomial: all lower coefficients vanish.
            for j in 0..deg {
                assert!(p.coeff(j).norm() < 1e-12, "minor is not a monomial");
            }
            (deg, p.coeff(deg).norm())
        })
        .collect();
    let six = 6.0f64.sqrt();
    let mut want: Vec<(u32, f64)> = vec![
        (0, 1.0),
        (1, six),
        (2, six),
        (2, 3.0),
        (3, 4.0),
        (3, 2.0),
        (4, 3.0),
        (4, six),
        (5, six),
        (6, 1.0),
    ];
    let key = |a: &(u32, f64), b: &(u32, f64)| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1));
    got.sort_by(key);
    want.sort_by(key);
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(&want) {
        assert_eq!(g.0, w.0);
        assert!((g.1 - w.1).abs() < 1e-9, "coefficient {} vs {}", g.1, w.1);
    }
}

#[test]
fn orbit_terminates_at_the_ambient_dimension() {
    // Depth n−1 exhausts the flag; the final vector is still well-defined
    // and orthogonal to all previous ones.
    let n = 5;
    let frame = veronese_cp(n).unwrap();
    let x = c(0.4, 0.2);
    let orbit = pplus_orbit(&frame, n - 1, x).unwrap();
    assert_eq!(orbit.len(), n);
    for a in 0..orbit.len() {
        for b in 0..a {
            let dot: Complex64 = orbit[a]
                .iter()
                .zip(orbit[b].iter())
                .map(|(p, q)| p.conj() * q)
                .sum();
            let scale = orbit[a].norm() * orbit[b].norm() + 1e-30;
            assert!(
                dot.norm() / scale < 1e-8,
                "orbit vectors {a} and {b} not orthogonal"
            );
        }
    }
}
