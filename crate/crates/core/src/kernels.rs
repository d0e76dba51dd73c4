//! Poisson and Cauchy kernels on the unit disc, truncated kernels with a
//! certified geometric error bound, and spectral trapezoid quadrature of the
//! boundary integrals.
//!
//! All integrals over the circle are discretized by the composite trapezoid
//! rule on equispaced periodic nodes `θ_j = 2πj/M`, which is exact for
//! trigonometric polynomials of degree below `M` and spectrally accurate for
//! smooth periodic integrands. Evaluation points are restricted to
//! `|z| ≤ 0.999`: the kernel's boundary singularity defeats fixed-`M`
//! quadrature, so accuracy is only certified on compact subsets.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::poly::ComplexPolyZZbar;

const TAU: f64 = 2.0 * core::f64::consts::PI;

/// Largest evaluation radius for the boundary integrals.
pub const NEAR_BOUNDARY_CUTOFF: f64 = 0.999;

/// Composite trapezoid rule on `[0, 2π)` with `M ≥ 16` equispaced nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadratureSpec {
    m: usize,
}

impl QuadratureSpec {
    pub const DEFAULT_NODES: usize = 512;

    pub fn new(m: usize) -> Result<Self> {
        if m < 16 {
            return Err(Error::InvalidSpec(alloc::format!(
                "quadrature needs at least 16 nodes, got {m}"
            )));
        }
        Ok(QuadratureSpec { m })
    }

    pub fn node_count(&self) -> usize {
        self.m
    }

    /// Node angles `θ_j = 2πj/M` in order.
    pub fn nodes(&self) -> impl Iterator<Item = f64> {
        let m = self.m;
        (0..m).map(move |j| TAU * j as f64 / m as f64)
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec { m: Self::DEFAULT_NODES }
    }
}

/// Which closed form of the Poisson kernel to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum KernelForm {
    /// `1 + zw̄/(1-zw̄) + z̄w/(1-z̄w)`
    SeriesClosed,
    /// `Re((w+z)/(w-z))`
    HerglotzRe,
    /// `(1-|z|²)/|z-w|²`; the fewest cancellations, hence the default.
    #[default]
    ModulusSq,
}

/// Truncation order together with the certified error bound
/// `2·ρ^(N+1)/(1-ρ)` valid for all `|z| ≤ ρ`, `|w| = 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KernelTruncation {
    pub n: u32,
    pub rho_max: f64,
    pub bound: f64,
}

/// Continuous function on the unit circle, either in closed form or as
/// equispaced samples.
#[derive(Clone, Debug)]
pub enum BoundaryFunction {
    /// `φ(θ) = c`
    Const(f64),
    /// `φ(θ) = cos(kθ)`
    Cos(u32),
    /// `φ(θ) = sin(kθ)`
    Sin(u32),
    /// `φ(θ) = |sin θ|`
    AbsSin,
    /// Trace of a polynomial on the circle, `φ(θ) = q(e^{iθ})`.
    PolyTrace(ComplexPolyZZbar),
    /// `M ≥ 16` samples at the equispaced nodes `θ_j = 2πj/M`.
    Samples(Vec<Complex64>),
    /// `φ(θ) - a·cos θ - b`; produced by the affine shift of the circle
    /// approximation pipeline.
    Shifted { inner: Box<BoundaryFunction>, a: f64, b: f64 },
}

impl BoundaryFunction {
    /// Trace of a real polynomial `p(x, y)` on the circle.
    pub fn poly_trace(p: &crate::poly::RealPoly2) -> Self {
        BoundaryFunction::PolyTrace(crate::poly::to_zzbar(p))
    }

    pub fn from_samples(values: Vec<Complex64>) -> Result<Self> {
        if values.len() < 16 {
            return Err(Error::InvalidSpec(alloc::format!(
                "sampled boundary data needs at least 16 nodes, got {}",
                values.len()
            )));
        }
        Ok(BoundaryFunction::Samples(values))
    }

    pub fn from_real_samples(values: Vec<f64>) -> Result<Self> {
        Self::from_samples(values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    /// Evaluates at an arbitrary angle. Sampled data is interpolated
    /// linearly between its nodes (periodically); integration never does
    /// this — it always uses the stored samples directly.
    pub fn eval(&self, theta: f64) -> Complex64 {
        match self {
            BoundaryFunction::Const(c) => Complex64::new(*c, 0.0),
            BoundaryFunction::Cos(k) => Complex64::new((*k as f64 * theta).cos(), 0.0),
            BoundaryFunction::Sin(k) => Complex64::new((*k as f64 * theta).sin(), 0.0),
            BoundaryFunction::AbsSin => Complex64::new(theta.sin().abs(), 0.0),
            BoundaryFunction::PolyTrace(q) => {
                q.eval(Complex64::new(theta.cos(), theta.sin()))
            }
            BoundaryFunction::Samples(v) => {
                let m = v.len() as f64;
                let mut t = (theta / TAU * m) % m;
                if t < 0.0 {
                    t += m;
                }
                let j = t.floor() as usize % v.len();
                let frac = t - t.floor();
                let next = (j + 1) % v.len();
                v[j] * (1.0 - frac) + v[next] * frac
            }
            BoundaryFunction::Shifted { inner, a, b } => {
                inner.eval(theta) - Complex64::new(a * theta.cos() + b, 0.0)
            }
        }
    }

    pub fn eval_real(&self, theta: f64) -> f64 {
        self.eval(theta).re
    }

    /// Whether the data is real-valued (within 1e-12 for samples and
    /// polynomial traces).
    pub fn is_real(&self) -> bool {
        match self {
            BoundaryFunction::Const(_)
            | BoundaryFunction::Cos(_)
            | BoundaryFunction::Sin(_)
            | BoundaryFunction::AbsSin => true,
            BoundaryFunction::PolyTrace(q) => q.conjugate_symmetry_residual() <= 1e-12,
            BoundaryFunction::Samples(v) => v.iter().all(|c| c.im.abs() <= 1e-12),
            BoundaryFunction::Shifted { inner, .. } => inner.is_real(),
        }
    }

    /// Number of integration nodes: sampled data is integrated on its own
    /// nodes, closed-form data on the quadrature's.
    pub fn integration_nodes(&self, quad: &QuadratureSpec) -> usize {
        match self {
            BoundaryFunction::Samples(v) => v.len(),
            BoundaryFunction::Shifted { inner, .. } => inner.integration_nodes(quad),
            _ => quad.node_count(),
        }
    }

    /// Value at integration node `j` of `m` (no interpolation for samples).
    fn node_value(&self, j: usize, m: usize) -> Complex64 {
        let theta = TAU * j as f64 / m as f64;
        match self {
            BoundaryFunction::Samples(v) => {
                debug_assert_eq!(v.len(), m);
                v[j]
            }
            BoundaryFunction::Shifted { inner, a, b } => {
                inner.node_value(j, m) - Complex64::new(a * theta.cos() + b, 0.0)
            }
            other => other.eval(theta),
        }
    }

    /// Circle average `(1/M) Σ φ(θ_j)`.
    pub fn circle_average(&self, quad: &QuadratureSpec) -> Complex64 {
        let m = self.integration_nodes(quad);
        let mut sum = Complex64::new(0.0, 0.0);
        for j in 0..m {
            sum += self.node_value(j, m);
        }
        sum / m as f64
    }
}

fn check_eval_point(z: Complex64) -> Result<()> {
    let r = z.norm();
    if r > NEAR_BOUNDARY_CUTOFF {
        return Err(Error::DomainViolation(alloc::format!(
            "|z| = {r} exceeds the near-boundary cutoff {NEAR_BOUNDARY_CUTOFF}; \
             fixed-node quadrature is not certified there"
        )));
    }
    Ok(())
}

fn check_on_circle(w: Complex64) -> Result<()> {
    let d = (w.norm() - 1.0).abs();
    if d > 1e-12 {
        return Err(Error::DomainViolation(alloc::format!(
            "w must lie on the unit circle (| |w|-1 | = {d:e})"
        )));
    }
    Ok(())
}

/// The Poisson kernel `K(z, w)` for `|z| < 1`, `|w| = 1`, in the requested
/// closed form. The three forms agree to rounding and are all positive.
pub fn poisson_kernel(z: Complex64, w: Complex64, form: KernelForm) -> Result<f64> {
    if z.norm() >= 1.0 {
        return Err(Error::DomainViolation(
            "the Poisson kernel needs |z| < 1".to_string(),
        ));
    }
    check_on_circle(w)?;
    let value = match form {
        KernelForm::SeriesClosed => {
            let t = z * w.conj();
            1.0 + 2.0 * (t / (Complex64::new(1.0, 0.0) - t)).re
        }
        KernelForm::HerglotzRe => ((w + z) / (w - z)).re,
        KernelForm::ModulusSq => (1.0 - z.norm_sqr()) / (z - w).norm_sqr(),
    };
    Ok(value)
}

/// The degree-`N` truncated kernel
/// `K_N(z, w) = 1 + Σ_{n=1}^N (zw̄)ⁿ + Σ_{n=1}^N (z̄w)ⁿ`.
///
/// The two geometric sums are conjugate, so the value is computed as
/// `1 + 2·Re Σ (zw̄)ⁿ` and is exactly real.
pub fn poisson_kernel_truncated(z: Complex64, w: Complex64, n: u32) -> f64 {
    let t = z * w.conj();
    let mut power = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for _ in 0..n {
        power *= t;
        sum += power;
    }
    1.0 + 2.0 * sum.re
}

/// The certified truncation bound `2·ρ^(N+1)/(1-ρ)`:
/// `|K_N(z,w) - K(z,w)| ≤ bound` for all `|z| ≤ ρ`, `|w| = 1`.
pub fn truncation_error_bound(rho: f64, n: u32) -> Result<f64> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::DomainViolation(alloc::format!(
            "truncation bound needs 0 ≤ ρ < 1, got {rho}"
        )));
    }
    Ok(2.0 * rho.powi(n as i32 + 1) / (1.0 - rho))
}

/// Smallest `N` whose truncation bound at radius `rho` is at most `eps`.
pub fn choose_truncation(rho: f64, eps: f64) -> Result<KernelTruncation> {
    if !(0.0..1.0).contains(&rho) {
        return Err(Error::DomainViolation(alloc::format!(
            "truncation choice needs 0 ≤ ρ < 1, got {rho}"
        )));
    }
    if eps <= 0.0 {
        return Err(Error::InvalidSpec("eps must be positive".to_string()));
    }
    let mut n: u32 = if rho == 0.0 {
        0
    } else {
        // invert 2·ρ^(N+1)/(1-ρ) = eps, then correct for rounding
        let guess = ((eps * (1.0 - rho) / 2.0).ln() / rho.ln() - 1.0).ceil();
        if guess.is_finite() && guess > 0.0 {
            guess as u32
        } else {
            0
        }
    };
    while truncation_error_bound(rho, n)? > eps {
        n += 1;
    }
    while n > 0 && truncation_error_bound(rho, n - 1)? <= eps {
        n -= 1;
    }
    let bound = truncation_error_bound(rho, n)?;
    Ok(KernelTruncation { n, rho_max: rho, bound })
}

/// Poisson integral `(1/2π) ∫ K(z, e^{iθ}) φ(θ) dθ` by the trapezoid rule.
///
/// `φ` must be real-valued and `|z| ≤ 0.999`.
pub fn poisson_integral(
    phi: &BoundaryFunction,
    z: Complex64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    check_eval_point(z)?;
    if !phi.is_real() {
        return Err(Error::DomainViolation(
            "the Poisson integral needs real boundary data".to_string(),
        ));
    }
    let m = phi.integration_nodes(quad);
    let mut sum = 0.0;
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let w = Complex64::new(theta.cos(), theta.sin());
        let k = (1.0 - z.norm_sqr()) / (z - w).norm_sqr();
        sum += k * phi.node_value(j, m).re;
    }
    Ok(sum / m as f64)
}

/// The analytic part `h(z) = (1/2π) ∫ ze^{-iθ}/(1 - ze^{-iθ}) φ(θ) dθ`.
///
/// `h` vanishes at the origin, and for real `φ` the solution decomposes as
/// `a₀ + h + conj(h)` with `a₀` the circle average of `φ`.
pub fn analytic_part(
    phi: &BoundaryFunction,
    z: Complex64,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    check_eval_point(z)?;
    let m = phi.integration_nodes(quad);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let e = Complex64::new(theta.cos(), -theta.sin());
        let t = z * e;
        sum += t / (Complex64::new(1.0, 0.0) - t) * phi.node_value(j, m);
    }
    Ok(sum / m as f64)
}

/// Cauchy integral `(1/2π) ∫ f(e^{iθ})/(1 - ze^{-iθ}) dθ`, which reproduces
/// `f(z)` when `f` is the boundary trace of a function analytic past the
/// closed disc (the caller's responsibility).
pub fn cauchy_integral(
    f: &BoundaryFunction,
    z: Complex64,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    check_eval_point(z)?;
    let m = f.integration_nodes(quad);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let e = Complex64::new(theta.cos(), -theta.sin());
        sum += f.node_value(j, m) / (Complex64::new(1.0, 0.0) - z * e);
    }
    Ok(sum / m as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disc::solve_disc;
    use crate::poly::RealPoly2;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn kernel_at_origin_is_one() {
        for k in 0..8 {
            let th = TAU * k as f64 / 8.0;
            let w = Complex64::new(th.cos(), th.sin());
            for form in [KernelForm::SeriesClosed, KernelForm::HerglotzRe, KernelForm::ModulusSq] {
                let v = poisson_kernel(Complex64::new(0.0, 0.0), w, form).unwrap();
                assert_close(v, 1.0, 1e-14);
            }
        }
    }

    #[test]
    fn kernel_known_values() {
        let z = Complex64::new(0.5, 0.0);
        let v = poisson_kernel(z, Complex64::new(1.0, 0.0), KernelForm::ModulusSq).unwrap();
        assert_close(v, 3.0, 1e-14);
        let v = poisson_kernel(z, Complex64::new(-1.0, 0.0), KernelForm::ModulusSq).unwrap();
        assert_close(v, 1.0 / 3.0, 1e-14);
    }

    #[test]
    fn kernel_rejects_bad_arguments() {
        let on = Complex64::new(1.0, 0.0);
        assert!(poisson_kernel(Complex64::new(1.0, 0.0), on, KernelForm::ModulusSq).is_err());
        assert!(poisson_kernel(Complex64::new(0.5, 0.0), Complex64::new(0.9, 0.0), KernelForm::ModulusSq).is_err());
    }

    #[test]
    fn truncated_kernel_examples() {
        let w = Complex64::new(1.0, 0.0);
        assert_close(poisson_kernel_truncated(Complex64::new(0.0, 0.0), w, 5), 1.0, 0.0);
        assert_close(poisson_kernel_truncated(Complex64::new(0.5, 0.0), w, 1), 2.0, 0.0);
        // N -> infinity recovers the closed form at z = 0.5, w = 1
        let v = poisson_kernel_truncated(Complex64::new(0.5, 0.0), w, 60);
        assert_close(v, 3.0, 1e-15);
    }

    #[test]
    fn truncation_bound_examples() {
        assert_close(truncation_error_bound(0.0, 7).unwrap(), 0.0, 0.0);
        assert_close(truncation_error_bound(0.5, 9).unwrap(), 0.00390625, 0.0);
        assert_close(truncation_error_bound(0.9, 0).unwrap(), 18.0, 1e-13);
        assert!(truncation_error_bound(1.0, 3).is_err());
    }

    #[test]
    fn choose_truncation_examples() {
        assert_eq!(choose_truncation(0.0, 1e-12).unwrap().n, 0);
        let t = choose_truncation(0.5, 1e-6).unwrap();
        assert_eq!(t.n, 21);
        assert!(t.bound <= 1e-6);
        assert_eq!(choose_truncation(0.5, 4.0).unwrap().n, 0);
        assert!(choose_truncation(1.0, 1e-3).is_err());
    }

    #[test]
    fn poisson_integral_of_constant_is_one() {
        let quad = QuadratureSpec::default();
        let phi = BoundaryFunction::Const(1.0);
        for z in [Complex64::new(0.0, 0.0), Complex64::new(0.3, -0.5), Complex64::new(-0.8, 0.1)] {
            assert_close(poisson_integral(&phi, z, &quad).unwrap(), 1.0, 1e-12);
        }
    }

    #[test]
    fn poisson_integral_of_cos_is_x() {
        let quad = QuadratureSpec::default();
        let phi = BoundaryFunction::Cos(1);
        let v = poisson_integral(&phi, Complex64::new(0.5, 0.0), &quad).unwrap();
        assert_close(v, 0.5, 1e-12);
    }

    #[test]
    fn poisson_integral_of_cos2_matches_re_z_squared() {
        let quad = QuadratureSpec::default();
        let phi = BoundaryFunction::Cos(2);
        let v = poisson_integral(&phi, Complex64::new(0.4, 0.0), &quad).unwrap();
        assert_close(v, 0.16, 1e-12);
    }

    #[test]
    fn poisson_integral_rejects_near_boundary() {
        let quad = QuadratureSpec::default();
        let phi = BoundaryFunction::Const(1.0);
        assert!(poisson_integral(&phi, Complex64::new(0.9995, 0.0), &quad).is_err());
    }

    #[test]
    fn analytic_part_of_constant_vanishes() {
        let quad = QuadratureSpec::default();
        let h = analytic_part(&BoundaryFunction::Const(1.0), Complex64::new(0.4, 0.2), &quad).unwrap();
        assert_close(h.norm(), 0.0, 1e-13);
    }

    #[test]
    fn analytic_part_of_cos_is_half_z() {
        let quad = QuadratureSpec::default();
        let h = analytic_part(&BoundaryFunction::Cos(1), Complex64::new(0.6, 0.0), &quad).unwrap();
        assert_close(h.re, 0.3, 1e-12);
        assert_close(h.im, 0.0, 1e-12);
    }

    #[test]
    fn analytic_part_of_sin_and_decomposition() {
        let quad = QuadratureSpec::default();
        let phi = BoundaryFunction::Sin(1);
        let z = Complex64::new(0.6, 0.0);
        let h = analytic_part(&phi, z, &quad).unwrap();
        assert_close(h.re, 0.0, 1e-12);
        assert_close(h.im, -0.3, 1e-12);
        // a0 + h + conj(h) must reproduce Im z = 0 at a real point
        let a0 = phi.circle_average(&quad).re;
        assert_close(a0 + 2.0 * h.re, z.im, 1e-12);
    }

    #[test]
    fn analytic_part_vanishes_at_origin() {
        let quad = QuadratureSpec::default();
        let h = analytic_part(&BoundaryFunction::AbsSin, Complex64::new(0.0, 0.0), &quad).unwrap();
        assert_close(h.norm(), 0.0, 0.0);
    }

    #[test]
    fn cauchy_integral_reproduces_traces() {
        let quad = QuadratureSpec::default();
        let one = BoundaryFunction::PolyTrace(ComplexPolyZZbar::monomial(0, 0));
        let v = cauchy_integral(&one, Complex64::new(0.3, 0.0), &quad).unwrap();
        assert_close(v.re, 1.0, 1e-12);
        assert_close(v.im, 0.0, 1e-12);

        let z2 = BoundaryFunction::PolyTrace(ComplexPolyZZbar::monomial(2, 0));
        let v = cauchy_integral(&z2, Complex64::new(0.3, 0.0), &quad).unwrap();
        assert_close(v.re, 0.09, 1e-12);

        let z3 = BoundaryFunction::PolyTrace(ComplexPolyZZbar::monomial(3, 0));
        let v = cauchy_integral(&z3, Complex64::new(0.0, 0.0), &quad).unwrap();
        assert_close(v.norm(), 0.0, 1e-13);
    }

    #[test]
    fn poisson_matches_disc_solver() {
        let quad = QuadratureSpec::default();
        let p = RealPoly2::from_terms([((2, 0), 1.0), ((1, 1), -0.5), ((0, 1), 0.25)]);
        let rep = solve_disc(&p);
        let phi = BoundaryFunction::poly_trace(&p);
        for (x, y) in [(0.0, 0.0), (0.5, 0.3), (-0.7, 0.2), (0.1, -0.85)] {
            let z = Complex64::new(x, y);
            let a = poisson_integral(&phi, z, &quad).unwrap();
            let b = rep.eval_real(z).unwrap();
            assert_close(a, b, 1e-10);
        }
    }

    #[test]
    fn sampled_data_uses_its_own_nodes() {
        // samples of cos θ at 64 nodes; integral should match the closed form
        let quad = QuadratureSpec::new(512).unwrap();
        let m = 64;
        let vals: Vec<f64> = (0..m).map(|j| (TAU * j as f64 / m as f64).cos()).collect();
        let phi = BoundaryFunction::from_real_samples(vals).unwrap();
        assert_eq!(phi.integration_nodes(&quad), 64);
        let v = poisson_integral(&phi, Complex64::new(0.5, 0.0), &quad).unwrap();
        assert_close(v, 0.5, 1e-12);
    }

    #[test]
    fn sample_count_is_validated() {
        assert!(BoundaryFunction::from_real_samples(alloc::vec![0.0; 8]).is_err());
        assert!(QuadratureSpec::new(8).is_err());
    }

    #[test]
    fn non_real_data_is_rejected_by_poisson() {
        let quad = QuadratureSpec::default();
        let f = BoundaryFunction::PolyTrace(ComplexPolyZZbar::monomial(1, 0));
        assert!(poisson_integral(&f, Complex64::new(0.2, 0.0), &quad).is_err());
    }
}
