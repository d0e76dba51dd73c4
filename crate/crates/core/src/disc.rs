//! Exact solution of the Dirichlet problem on the unit disc for polynomial
//! boundary data.
//!
//! The solve rests on the boundary reduction of monomials: on the unit circle
//! `zⁿz̄ᵐ` equals `1` when `n = m`, `z^(n-m)` when `n > m` and `z̄^(m-n)` when
//! `m > n`, and each of those extends harmonically into the disc unchanged.

use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{to_zzbar, ComplexPolyZZbar, RealPoly2};

/// Evaluations are allowed this far past the closed unit disc.
const DOMAIN_SLACK: f64 = 1e-12;

/// Trailing coefficients below this are trimmed when a representation is
/// assembled from quadrature data.
const TRIM_TOL: f64 = 1e-13;

/// Harmonic function on the unit disc in the canonical form
/// `u(z) = a₀ + Σₙ aₙ zⁿ + Σₘ bₘ z̄ᵐ`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct HarmonicRep {
    a0: Complex64,
    analytic: Vec<Complex64>,
    antianalytic: Vec<Complex64>,
    real_valued: bool,
}

impl HarmonicRep {
    pub fn new(a0: Complex64, analytic: Vec<Complex64>, antianalytic: Vec<Complex64>) -> Self {
        let mut rep = HarmonicRep { a0, analytic, antianalytic, real_valued: false };
        rep.trim();
        rep
    }

    /// Marks the representation real-valued and enforces the structural
    /// symmetry `Im a₀ = 0`, `bₘ = conj(aₘ)` exactly.
    pub fn into_real_valued(mut self) -> Self {
        self.a0 = Complex64::new(self.a0.re, 0.0);
        let k = self.analytic.len().max(self.antianalytic.len());
        self.analytic.resize(k, Complex64::new(0.0, 0.0));
        self.antianalytic.resize(k, Complex64::new(0.0, 0.0));
        for i in 0..k {
            let sym = (self.analytic[i] + self.antianalytic[i].conj()) * 0.5;
            self.analytic[i] = sym;
            self.antianalytic[i] = sym.conj();
        }
        self.real_valued = true;
        self.trim();
        self
    }

    fn trim(&mut self) {
        while self
            .analytic
            .last()
            .map(|c| c.norm() <= TRIM_TOL)
            .unwrap_or(false)
            && self
                .antianalytic
                .last()
                .map(|c| c.norm() <= TRIM_TOL)
                .unwrap_or(false)
        {
            self.analytic.pop();
            self.antianalytic.pop();
        }
        if self.analytic.len() != self.antianalytic.len() {
            let k = self.analytic.len().max(self.antianalytic.len());
            self.analytic.resize(k, Complex64::new(0.0, 0.0));
            self.antianalytic.resize(k, Complex64::new(0.0, 0.0));
        }
    }

    pub fn a0(&self) -> Complex64 {
        self.a0
    }

    /// Coefficients `a₁ .. a_K` of the analytic part.
    pub fn analytic_coeffs(&self) -> &[Complex64] {
        &self.analytic
    }

    /// Coefficients `b₁ .. b_K` of the anti-analytic part.
    pub fn antianalytic_coeffs(&self) -> &[Complex64] {
        &self.antianalytic
    }

    pub fn real_valued(&self) -> bool {
        self.real_valued
    }

    /// Number of retained coefficient pairs.
    pub fn order(&self) -> usize {
        self.analytic.len()
    }

    /// Termwise evaluation, low order to high, inside `|z| ≤ 1`.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let modulus = z.norm();
        if modulus > 1.0 + DOMAIN_SLACK {
            return Err(Error::OutsideDomain { modulus });
        }
        Ok(self.eval_unchecked(z))
    }

    fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let mut sum = self.a0;
        let mut zp = Complex64::new(1.0, 0.0);
        let mut zbp = Complex64::new(1.0, 0.0);
        for (an, bn) in self.analytic.iter().zip(self.antianalytic.iter()) {
            zp *= z;
            zbp *= zb;
            sum += an * zp + bn * zbp;
        }
        sum
    }

    /// Real-part evaluation; the natural reading for real-valued data.
    pub fn eval_real(&self, z: Complex64) -> Result<f64> {
        Ok(self.eval(z)?.re)
    }

    /// Scaled linear combination `α·self + β·other`, preserving the
    /// real-valued flag only when both inputs carry it.
    pub fn linear_combination(&self, alpha: f64, other: &Self, beta: f64) -> Self {
        let k = self.analytic.len().max(other.analytic.len());
        let get = |v: &[Complex64], i: usize| v.get(i).copied().unwrap_or(Complex64::new(0.0, 0.0));
        let mut analytic = Vec::with_capacity(k);
        let mut antianalytic = Vec::with_capacity(k);
        for i in 0..k {
            analytic.push(get(&self.analytic, i) * alpha + get(&other.analytic, i) * beta);
            antianalytic.push(get(&self.antianalytic, i) * alpha + get(&other.antianalytic, i) * beta);
        }
        let mut rep = HarmonicRep::new(self.a0 * alpha + other.a0 * beta, analytic, antianalytic);
        rep.real_valued = self.real_valued && other.real_valued;
        rep
    }
}

impl Add for &HarmonicRep {
    type Output = HarmonicRep;
    fn add(self, rhs: &HarmonicRep) -> HarmonicRep {
        self.linear_combination(1.0, rhs, 1.0)
    }
}

impl Mul<f64> for &HarmonicRep {
    type Output = HarmonicRep;
    fn mul(self, s: f64) -> HarmonicRep {
        self.linear_combination(s, &HarmonicRep::default(), 0.0)
    }
}

/// Replaces each term `zⁿz̄ᵐ` by its value pattern on the unit circle:
/// `1` for `n = m`, `z^(n-m)` for `n > m`, `z̄^(m-n)` for `m > n`.
///
/// The result agrees with `q` at every point of the unit circle and is
/// harmonic inside. The real-valued flag is left unset; use [`solve_disc`]
/// for data that came from a real polynomial.
pub fn reduce_on_circle(q: &ComplexPolyZZbar) -> HarmonicRep {
    let mut k_max = 0usize;
    for (m, _) in q.terms() {
        let gap = (m.a as i64 - m.b as i64).unsigned_abs() as usize;
        k_max = k_max.max(gap);
    }
    let mut a0 = Complex64::new(0.0, 0.0);
    let mut analytic = alloc::vec![Complex64::new(0.0, 0.0); k_max];
    let mut antianalytic = alloc::vec![Complex64::new(0.0, 0.0); k_max];
    for (m, c) in q.terms() {
        if m.a == m.b {
            a0 += c;
        } else if m.a > m.b {
            analytic[(m.a - m.b) as usize - 1] += c;
        } else {
            antianalytic[(m.b - m.a) as usize - 1] += c;
        }
    }
    HarmonicRep::new(a0, analytic, antianalytic)
}

/// Solves the Dirichlet problem on the unit disc with polynomial boundary
/// data: converts to the `(z, z̄)` basis and reduces on the circle.
pub fn solve_disc(boundary: &RealPoly2) -> HarmonicRep {
    reduce_on_circle(&to_zzbar(boundary)).into_real_valued()
}

/// Evaluates a representation at `z`; errors outside the closed disc.
pub fn eval_harmonic(rep: &HarmonicRep, z: Complex64) -> Result<Complex64> {
    rep.eval(z)
}
