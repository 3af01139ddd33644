//! Sparse bivariate polynomials in `x` and `conj(x)`.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::DEGREE_CAP;
use crate::error::{Error, Result};

/// A polynomial `Σ c(j,k) · x^j · conj(x)^k`, sparse over monomials.
///
/// The key order of the underlying map is lexicographic in `(j, k)`, which
/// makes every accumulation deterministic — important because several
/// invariants downstream (embedding, duality) are checked for bit-identical
/// coefficient maps.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BiPoly {
    coeffs: BTreeMap<(u32, u32), Complex64>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = BiPoly::zero();
        if c.re != 0.0 || c.im != 0.0 {
            p.coeffs.insert((0, 0), c);
        }
        p
    }

    /// Adds `c · x^j conj(x)^k` into the polynomial, dropping the entry if it
    /// cancels to exactly zero.
    pub fn add_term(&mut self, j: u32, k: u32, c: Complex64) -> Result<()> {
        if c.re == 0.0 && c.im == 0.0 {
            return Ok(());
        }
        let deg = j.max(k);
        if deg > DEGREE_CAP {
            return Err(Error::DegreeOverflow { degree: deg, cap: DEGREE_CAP });
        }
        let slot = self.coeffs.entry((j, k)).or_insert(Complex64::new(0.0, 0.0));
        *slot += c;
        if slot.re == 0.0 && slot.im == 0.0 {
            self.coeffs.remove(&(j, k));
        }
        Ok(())
    }

    pub fn coeff(&self, j: u32, k: u32) -> Complex64 {
        self.coeffs
            .get(&(j, k))
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// Iterates stored monomials in lexicographic `(j, k)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, Complex64)> + '_ {
        self.coeffs.iter().map(|(&(j, k), &c)| (j, k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Maximum degrees `(deg_x, deg_conj_x)`, or `None` when zero.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        if self.coeffs.is_empty() {
            return None;
        }
        let mut dj = 0;
        let mut dk = 0;
        for &(j, k) in self.coeffs.keys() {
            dj = dj.max(j);
            dk = dk.max(k);
        }
        Some((dj, dk))
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, &c) in &rhs.coeffs {
            let slot = out.coeffs.entry(key).or_insert(Complex64::new(0.0, 0.0));
            *slot += c;
            if slot.re == 0.0 && slot.im == 0.0 {
                out.coeffs.remove(&key);
            }
        }
        out
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&key, &c) in &rhs.coeffs {
            let slot = out.coeffs.entry(key).or_insert(Complex64::new(0.0, 0.0));
            *slot -= c;
            if slot.re == 0.0 && slot.im == 0.0 {
                out.coeffs.remove(&key);
            }
        }
        out
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly {
            coeffs: self.coeffs.iter().map(|(&k, &c)| (k, -c)).collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&key, &c) in &self.coeffs {
            let v = c * s;
            if v.re != 0.0 || v.im != 0.0 {
                out.coeffs.insert(key, v);
            }
        }
        out
    }

    /// Product; errors when a resulting degree passes the cap.
    pub fn try_mul(&self, rhs: &BiPoly) -> Result<BiPoly> {
        let mut out = BiPoly::zero();
        for (&(j1, k1), &a) in &self.coeffs {
            for (&(j2, k2), &b) in &rhs.coeffs {
                out.add_term(j1 + j2, k1 + k2, a * b)?;
            }
        }
        Ok(out)
    }

    /// Holomorphic derivative ∂ = ½(∂x₁ − i∂x₂): on monomials,
    /// `∂(x^j conj(x)^k) = j x^(j−1) conj(x)^k`.
    pub fn partial_z(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(j, k), &c) in &self.coeffs {
            if j > 0 {
                out.coeffs.insert((j - 1, k), c * f64::from(j));
            }
        }
        out
    }

    /// Antiholomorphic derivative ∂̄ = ½(∂x₁ + i∂x₂): on monomials,
    /// `∂̄(x^j conj(x)^k) = k x^j conj(x)^(k−1)`.
    pub fn partial_zbar(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(j, k), &c) in &self.coeffs {
            if k > 0 {
                out.coeffs.insert((j, k - 1), c * f64::from(k));
            }
        }
        out
    }

    /// The polynomial whose value is the complex conjugate of this one at
    /// every point: swaps `(j, k) → (k, j)` and conjugates coefficients.
    pub fn conj_fn(&self) -> BiPoly {
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(j, k), &c)| ((k, j), c.conj()))
                .collect(),
        }
    }

    /// Evaluates at a point (grouping by powers of `x` for stability).
    pub fn eval(&self, x: Complex64) -> Complex64 {
        let xb = x.conj();
        let mut acc = Complex64::new(0.0, 0.0);
        let mut pow_x = Complex64::new(1.0, 0.0);
        let mut cur_j = 0u32;
        // Terms come out sorted by j, so walk the powers of x incrementally.
        let mut inner = Complex64::new(0.0, 0.0);
        for (&(j, k), &c) in &self.coeffs {
            if j != cur_j {
                acc += pow_x * inner;
                for _ in cur_j..j {
                    pow_x *= x;
                }
                cur_j = j;
                inner = Complex64::new(0.0, 0.0);
            }
            inner += c * xb.powu(k);
        }
        acc + pow_x * inner
    }

    /// True when `c(k,j) == conj(c(j,k))` for all entries, within `tol`
    /// relative to the largest coefficient.
    pub fn is_hermitian(&self, tol: f64) -> bool {
        let scale = self.max_abs_coeff().max(1.0);
        for (&(j, k), &c) in &self.coeffs {
            let mirror = self.coeff(k, j);
            if (mirror - c.conj()).norm() > tol * scale {
                return false;
            }
        }
        true
    }
}
