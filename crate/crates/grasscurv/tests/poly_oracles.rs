//! Finite-difference oracles for the symbolic derivative operators, plus
//! algebraic closure properties of the polynomial types.

use grasscurv::poly::{binomial, BiPoly, HermitianPoly, HoloPoly};
use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const FD_STEP: f64 = 1e-4;
const FD_REL_TOL: f64 = 1e-5;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// A random Hermitian polynomial: random upper-triangle terms mirrored by
/// conjugation, diagonal kept real.
fn random_hermitian(rng: &mut ChaCha8Rng, max_deg: u32, terms: usize) -> HermitianPoly {
    let mut b = BiPoly::zero();
    for _ in 0..terms {
        let j = rng.gen_range(0..=max_deg);
        let k = rng.gen_range(0..=max_deg);
        let re = rng.gen_range(-1.0..1.0);
        let im = if j == k { 0.0 } else { rng.gen_range(-1.0..1.0) };
        b.add_term(j, k, c(re, im)).unwrap();
        if j != k {
            b.add_term(k, j, c(re, -im)).unwrap();
        }
    }
    // Guarantee a nonzero constant term so the polynomial is not empty.
    b.add_term(0, 0, c(1.0, 0.0)).unwrap();
    HermitianPoly::new(b).unwrap()
}

/// Wirtinger derivatives of a complex-valued function of the plane by
/// central differences: `∂ = ½(∂_re − i ∂_im)`, `∂̄ = ½(∂_re + i ∂_im)`.
fn wirtinger_fd<F>(f: F, x: Complex64, h: f64) -> (Complex64, Complex64)
where
    F: Fn(Complex64) -> Complex64,
{
    let d_re = (f(x + c(h, 0.0)) - f(x - c(h, 0.0))) / c(2.0 * h, 0.0);
    let d_im = (f(x + c(0.0, h)) - f(x - c(0.0, h))) / c(2.0 * h, 0.0);
    let i = c(0.0, 1.0);
    ((d_re - i * d_im) * 0.5, (d_re + i * d_im) * 0.5)
}

/// `∂∂̄f` by the five-point Laplacian stencil (`∂∂̄ = ¼Δ`).
fn mixed_fd<F>(f: F, x: Complex64, h: f64) -> Complex64
where
    F: Fn(Complex64) -> Complex64,
{
    let sum = f(x + c(h, 0.0)) + f(x - c(h, 0.0)) + f(x + c(0.0, h)) + f(x - c(0.0, h))
        - 4.0 * f(x);
    sum / c(4.0 * h * h, 0.0)
}

fn assert_close(got: Complex64, want: Complex64, scale: f64, what: &str) {
    let err = (got - want).norm();
    assert!(
        err <= FD_REL_TOL * (1.0 + scale),
        "{what}: |{got} - {want}| = {err:e} over scale {scale:e}"
    );
}

#[test]
fn wirtinger_derivatives_match_finite_differences_on_50_random_polys() {
    let mut rng = ChaCha8Rng::seed_from_u64(7001);
    for case in 0..50 {
        let p = random_hermitian(&mut rng, 5, 8);
        let dz = p.partial_z();
        let dzbar = p.partial_zbar();
        for _ in 0..3 {
            let x = c(rng.gen_range(-1.2..1.2), rng.gen_range(-1.2..1.2));
            let (fd_z, fd_zbar) = wirtinger_fd(|y| p.as_bipoly().eval(y), x, FD_STEP);
            let sym_z = dz.eval(x);
            let sym_zbar = dzbar.eval(x);
            assert_close(sym_z, fd_z, sym_z.norm(), &format!("case {case} ∂"));
            assert_close(sym_zbar, fd_zbar, sym_zbar.norm(), &format!("case {case} ∂̄"));
            // The polynomial is real-valued, so the two derivatives are
            // conjugate to each other.
            assert!((sym_z.conj() - sym_zbar).norm() < 1e-10 * (1.0 + sym_z.norm()));
        }
    }
}

#[test]
fn mixed_laplacian_matches_stencil() {
    let mut rng = ChaCha8Rng::seed_from_u64(7002);
    for case in 0..20 {
        let p = random_hermitian(&mut rng, 4, 6);
        let lap = p.mixed_laplacian();
        for _ in 0..3 {
            let x = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let fd = mixed_fd(|y| p.as_bipoly().eval(y), x, FD_STEP);
            let sym = c(lap.eval(x).unwrap(), 0.0);
            assert_close(sym, fd, sym.norm(), &format!("case {case} ∂∂̄"));
        }
    }
}

#[test]
fn log_laplacian_matches_stencil_on_positive_polys() {
    let mut rng = ChaCha8Rng::seed_from_u64(7003);
    for case in 0..20 {
        // Make the polynomial comfortably positive on the sample square by
        // inflating the constant term past the total coefficient mass.
        let raw = random_hermitian(&mut rng, 3, 6);
        let mass: f64 = raw
            .as_bipoly()
            .terms()
            .map(|(j, k, v)| v.norm() * 1.6f64.powi((j + k) as i32))
            .sum();
        let p = raw.add(&HermitianPoly::constant(2.0 * mass + 1.0));
        let llap = p.log_laplacian().unwrap();
        for _ in 0..3 {
            let x = c(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8));
            let fd = mixed_fd(|y| c(p.as_bipoly().eval(y).re.ln(), 0.0), x, FD_STEP);
            let sym = llap.eval(x).unwrap();
            assert_close(c(sym, 0.0), fd, sym.abs(), &format!("case {case} ∂∂̄ln"));
        }
    }
}

#[test]
fn binomial_row_built_by_repeated_multiplication_matches() {
    // (1 + |x|²)^r assembled with try_mul, then recognized.
    let mut base = BiPoly::constant(c(1.0, 0.0));
    base.add_term(1, 1, c(1.0, 0.0)).unwrap();
    let base = HermitianPoly::new(base).unwrap();
    let mut acc = HermitianPoly::constant(3.0);
    for r in 1..=8u32 {
        acc = acc.try_mul(&base).unwrap();
        let (got_r, got_c) = acc.binomial_match(1e-12).expect("exact binomial row");
        assert_eq!(got_r, r);
        assert!((got_c - 3.0).abs() < 1e-12);
        for k in 0..=r {
            assert!((acc.coeff(k, k).re - 3.0 * binomial(r, k)).abs() < 1e-9);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn holo_product_evaluates_pointwise(
        a in prop::collection::vec(-2.0f64..2.0, 1..5),
        b in prop::collection::vec(-2.0f64..2.0, 1..5),
        xr in -1.5f64..1.5,
        xi in -1.5f64..1.5,
    ) {
        let p = HoloPoly::from_real(&a).unwrap();
        let q = HoloPoly::from_real(&b).unwrap();
        let x = c(xr, xi);
        let prod = p.try_mul(&q).unwrap();
        let err = (prod.eval(x) - p.eval(x) * q.eval(x)).norm();
        prop_assert!(err < 1e-9 * (1.0 + p.eval(x).norm() * q.eval(x).norm()));
    }

    #[test]
    fn mul_conj_evaluates_to_product_with_conjugate(
        a in prop::collection::vec(-2.0f64..2.0, 1..5),
        b in prop::collection::vec(-2.0f64..2.0, 1..5),
        xr in -1.5f64..1.5,
        xi in -1.5f64..1.5,
    ) {
        let p = HoloPoly::from_real(&a).unwrap();
        let q = HoloPoly::from_real(&b).unwrap();
        let x = c(xr, xi);
        let want = p.eval(x) * q.eval(x).conj();
        let got = p.mul_conj(&q).eval(x);
        prop_assert!((got - want).norm() < 1e-9 * (1.0 + want.norm()));
    }

    #[test]
    fn squared_modulus_is_hermitian_and_nonnegative(
        a in prop::collection::vec(-2.0f64..2.0, 1..6),
        xr in -1.5f64..1.5,
        xi in -1.5f64..1.5,
    ) {
        let p = HoloPoly::from_real(&a).unwrap();
        let sq = HermitianPoly::new(p.mul_conj(&p)).unwrap();
        let v = sq.eval(c(xr, xi)).unwrap();
        prop_assert!(v >= -1e-12);
    }

    #[test]
    fn derivative_matches_difference_quotient(
        a in prop::collection::vec(-2.0f64..2.0, 2..6),
        xr in -1.0f64..1.0,
        xi in -1.0f64..1.0,
    ) {
        let p = HoloPoly::from_real(&a).unwrap();
        let x = c(xr, xi);
        let h = 1e-5;
        let fd = (p.eval(x + c(h, 0.0)) - p.eval(x - c(h, 0.0))) / c(2.0 * h, 0.0);
        let sym = p.derivative().eval(x);
        prop_assert!((fd - sym).norm() < 1e-6 * (1.0 + sym.norm()));
    }
}
