//! Constructive polynomial approximation of continuous functions on the
//! unit circle: affine shift to vanish at ±1, top/bottom split, 1-D
//! Bernstein approximation, polynomial cutoff blend.
//!
//! The 1-D approximants are carried in the Bernstein basis and evaluated by
//! normalized binomial weights, which stays accurate to roundoff at any
//! degree. High-degree Bernstein polynomials must not be expanded into f64
//! monomial coefficients: the exact coefficients grow like a central
//! binomial (≈1e26 at degree 128) and overflow f64 past degree ≈1030, so
//! monomial conversion is provided for modest degrees only and documented as
//! such. Everything the pipeline reports — sup errors, circle evaluations,
//! harmonic extensions — goes through the stable basis.

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::disc::HarmonicRep;
use crate::error::{Error, Result};
use crate::kernels::BoundaryFunction;
use crate::poly::{Monomial, RealPoly2};

const TAU: f64 = 2.0 * core::f64::consts::PI;

/// Degree and cutoff budgets for [`circle_polynomial_approx`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxPlan {
    degree_1d: u32,
    epsilon: f64,
    cutoff_degree: u32,
}

impl ApproxPlan {
    pub const DEFAULT_EPSILON: f64 = 0.1;

    pub fn new(degree_1d: u32, epsilon: f64, cutoff_degree: u32) -> Result<Self> {
        if degree_1d < 1 || cutoff_degree < 1 {
            return Err(Error::InvalidSpec(alloc::format!(
                "degree budgets must be positive, got ({degree_1d}, {cutoff_degree})"
            )));
        }
        if !(epsilon > 0.0 && epsilon <= 0.5) {
            return Err(Error::InvalidSpec(alloc::format!(
                "cutoff half-width must lie in (0, 0.5], got {epsilon}"
            )));
        }
        Ok(ApproxPlan { degree_1d, epsilon, cutoff_degree })
    }

    pub fn degree_1d(&self) -> u32 {
        self.degree_1d
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn cutoff_degree(&self) -> u32 {
        self.cutoff_degree
    }

    /// Doubles all three budgets: both degrees double, the cutoff half-width
    /// halves.
    pub fn doubled(&self) -> ApproxPlan {
        ApproxPlan {
            degree_1d: self.degree_1d * 2,
            epsilon: self.epsilon / 2.0,
            cutoff_degree: self.cutoff_degree * 2,
        }
    }
}

impl Default for ApproxPlan {
    fn default() -> Self {
        ApproxPlan { degree_1d: 64, epsilon: Self::DEFAULT_EPSILON, cutoff_degree: 64 }
    }
}

/// A continuous real function on `[-1, 1]`.
pub struct RealFunction1D {
    f: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

impl core::fmt::Debug for RealFunction1D {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("RealFunction1D")
    }
}

impl RealFunction1D {
    pub fn new(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        RealFunction1D { f: Box::new(f) }
    }

    pub fn eval(&self, x: f64) -> f64 {
        (self.f)(x)
    }
}

/// Univariate polynomial on `[-1, 1]` carried in the Bernstein basis: the
/// stored values are the basis coefficients `g(k/n)` of the degree-`n`
/// Bernstein approximant under the affine map from `[0, 1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct BernsteinPoly {
    /// coefficient of the k-th Bernstein basis function, `k = 0..=n`
    values: Vec<f64>,
}

impl BernsteinPoly {
    pub fn degree(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    pub fn basis_coefficients(&self) -> &[f64] {
        &self.values
    }

    /// Evaluation on `[-1, 1]` by normalized binomial weights, accurate to
    /// roundoff at any degree. Arguments are clamped to the interval.
    pub fn eval(&self, x: f64) -> f64 {
        let t = ((x + 1.0) * 0.5).clamp(0.0, 1.0);
        self.eval_unit(t)
    }

    /// Evaluation at `t ∈ [0, 1]` in the unmapped parameter.
    pub fn eval_unit(&self, t: f64) -> f64 {
        let n = self.values.len() - 1;
        if n == 0 {
            return self.values[0];
        }
        if t <= 0.0 {
            return self.values[0];
        }
        if t >= 1.0 {
            return self.values[n];
        }
        // start at the weight mode and sweep outward; the binomial weights
        // are unimodal, so both sweeps terminate once contributions vanish
        let k0 = (((n + 1) as f64) * t).floor().min(n as f64) as usize;
        let ln_w0 = ln_binomial(n, k0)
            + k0 as f64 * t.ln()
            + (n - k0) as f64 * (1.0 - t).ln();
        let w0 = ln_w0.exp();
        let ratio = t / (1.0 - t);
        let mut num = w0 * self.values[k0];
        let mut den = w0;
        let mut w = w0;
        let mut k = k0;
        while k < n {
            w *= ratio * (n - k) as f64 / (k + 1) as f64;
            k += 1;
            num += w * self.values[k];
            den += w;
            if w <= den * 1e-18 {
                break;
            }
        }
        w = w0;
        k = k0;
        while k > 0 {
            w *= k as f64 / ((n - k + 1) as f64 * ratio);
            k -= 1;
            num += w * self.values[k];
            den += w;
            if w <= den * 1e-18 {
                break;
            }
        }
        num / den
    }

    /// Monomial coefficients in the unmapped parameter `t` on `[0, 1]`:
    /// coefficient of `t^j` is `C(n,j)·Δʲg(0)`.
    ///
    /// Exact in principle but numerically useless past degree ≈ 50: the
    /// coefficients themselves grow combinatorially.
    pub fn to_monomial_unit(&self) -> Vec<f64> {
        let n = self.values.len() - 1;
        let mut diffs = self.values.clone();
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            out.push(crate::poly::binomial(n as u32, j as u32) * diffs[0]);
            for i in 0..(diffs.len() - 1) {
                diffs[i] = diffs[i + 1] - diffs[i];
            }
            diffs.pop();
        }
        out
    }

    /// Monomial coefficients in `x` on `[-1, 1]` (substitutes
    /// `t = (x+1)/2`). Same stability caveat as [`Self::to_monomial_unit`].
    pub fn to_monomial(&self) -> Vec<f64> {
        let unit = self.to_monomial_unit();
        let n = unit.len() - 1;
        let mut out = alloc::vec![0.0f64; n + 1];
        for (j, &cj) in unit.iter().enumerate() {
            let scale = 0.5f64.powi(j as i32);
            for i in 0..=j {
                out[i] += cj * scale * crate::poly::binomial(j as u32, i as u32);
            }
        }
        out
    }

    /// As a sparse polynomial in `x` (exponent slot `a`).
    pub fn to_poly_in_x(&self) -> RealPoly2 {
        let mut p = RealPoly2::zero();
        for (i, c) in self.to_monomial().into_iter().enumerate() {
            p.insert_add(Monomial::new(i as u32, 0), c);
        }
        p
    }

    /// As a sparse polynomial in `±y` (exponent slot `b`); `flip` composes
    /// with `y ↦ -y`.
    pub fn to_poly_in_y(&self, flip: bool) -> RealPoly2 {
        let mut p = RealPoly2::zero();
        for (i, c) in self.to_monomial().into_iter().enumerate() {
            let sign = if flip && i % 2 == 1 { -1.0 } else { 1.0 };
            p.insert_add(Monomial::new(0, i as u32), sign * c);
        }
        p
    }
}

fn ln_binomial(n: usize, k: usize) -> f64 {
    libm::lgamma((n + 1) as f64) - libm::lgamma((k + 1) as f64) - libm::lgamma((n - k + 1) as f64)
}

/// Subtracts `a·cos θ + b` so the data vanishes at the circle points ±1:
/// `a = (φ(1) − φ(−1))/2`, `b = (φ(1) + φ(−1))/2`.
pub fn affine_shift(phi: &BoundaryFunction) -> (f64, f64, BoundaryFunction) {
    let at_one = phi.eval_real(0.0);
    let at_minus_one = phi.eval_real(core::f64::consts::PI);
    let a = 0.5 * (at_one - at_minus_one);
    let b = 0.5 * (at_one + at_minus_one);
    let psi = BoundaryFunction::Shifted { inner: Box::new(phi.clone()), a, b };
    (a, b, psi)
}

/// Splits shifted circle data into its upper and lower semicircle traces
/// as functions of `x`: `h_top(x) = ψ(arccos x)`, `h_bot(x) = ψ(−arccos x)`.
///
/// Requires `ψ(±1) = 0` within 1e-10; both traces then vanish at ±1.
pub fn split_top_bot(psi: &BoundaryFunction) -> Result<(RealFunction1D, RealFunction1D)> {
    let at_one = psi.eval_real(0.0);
    let at_minus_one = psi.eval_real(core::f64::consts::PI);
    if at_one.abs() > 1e-10 || at_minus_one.abs() > 1e-10 {
        return Err(Error::ShiftRequired { at_one, at_minus_one });
    }
    let top = psi.clone();
    let bot = psi.clone();
    Ok((
        RealFunction1D::new(move |x: f64| top.eval_real(x.clamp(-1.0, 1.0).acos())),
        RealFunction1D::new(move |x: f64| bot.eval_real(-(x.clamp(-1.0, 1.0).acos()))),
    ))
}

/// Degree-`n` Bernstein approximant of `g` on `[-1, 1]` (the `[0, 1]`
/// construction composed with the affine map).
pub fn approx_1d(g: &RealFunction1D, degree: u32) -> BernsteinPoly {
    assert!(degree >= 1, "approximation degree must be positive");
    let n = degree as usize;
    let mut values = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let x = 2.0 * (k as f64 / n as f64) - 1.0;
        values.push(g.eval(x));
    }
    BernsteinPoly { values }
}

/// Polynomial approximant of the piecewise-linear cutoff `χ_ε` (0 below
/// `-ε`, 1 above `ε`, linear between), as a Bernstein polynomial in `y`.
pub fn cutoff_poly(epsilon: f64, degree: u32) -> Result<BernsteinPoly> {
    if !(epsilon > 0.0 && epsilon <= 0.5) {
        return Err(Error::InvalidSpec(alloc::format!(
            "cutoff half-width must lie in (0, 0.5], got {epsilon}"
        )));
    }
    let chi = RealFunction1D::new(move |y: f64| ((y + epsilon) / (2.0 * epsilon)).clamp(0.0, 1.0));
    Ok(approx_1d(&chi, degree))
}

/// The assembled circle approximant
/// `p(x, y) = a·x + b + p_top(x)·p_ε(y) + p_bot(x)·p_ε(−y)`
/// in factored form.
#[derive(Clone, Debug)]
pub struct CircleApprox {
    pub shift_a: f64,
    pub shift_b: f64,
    pub p_top: BernsteinPoly,
    pub p_bot: BernsteinPoly,
    pub cutoff: BernsteinPoly,
}

impl CircleApprox {
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        self.shift_a * x
            + self.shift_b
            + self.p_top.eval(x) * self.cutoff.eval(y)
            + self.p_bot.eval(x) * self.cutoff.eval(-y)
    }

    pub fn eval_circle(&self, theta: f64) -> f64 {
        self.eval(theta.cos(), theta.sin())
    }

    /// Total degree of the expanded polynomial.
    pub fn total_degree(&self) -> u32 {
        let product = self.p_top.degree().max(self.p_bot.degree()) + self.cutoff.degree();
        product.max(1)
    }

    /// Expands into sparse monomial form. Faithful for modest budgets; at
    /// high degrees the monomial coefficients are astronomically large and
    /// f64 expansion loses all accuracy, so prefer the factored evaluation.
    pub fn to_real_poly2(&self) -> RealPoly2 {
        let mut p = RealPoly2::from_terms([((1, 0), self.shift_a), ((0, 0), self.shift_b)]);
        let top_x = self.p_top.to_poly_in_x();
        let bot_x = self.p_bot.to_poly_in_x();
        let cut_pos = self.cutoff.to_poly_in_y(false);
        let cut_neg = self.cutoff.to_poly_in_y(true);
        p = &p + &(&top_x * &cut_pos);
        p = &p + &(&bot_x * &cut_neg);
        p
    }

    /// Harmonic extension into the disc: the Fourier coefficients of the
    /// boundary trace, computed by an alias-free trapezoid sum (the trace is
    /// a trigonometric polynomial of the total degree, so with more than
    /// twice that many nodes the sums are exact up to roundoff). Agrees with
    /// `solve_disc(to_real_poly2())` wherever the expansion is accurate, and
    /// stays accurate at budgets where it is not.
    pub fn harmonic_extension(&self) -> HarmonicRep {
        let d = self.total_degree() as usize;
        let m = 2 * d + 16;
        let mut trace = Vec::with_capacity(m);
        for j in 0..m {
            trace.push(self.eval_circle(TAU * j as f64 / m as f64));
        }
        let mut a0 = Complex64::new(0.0, 0.0);
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); d];
        for (j, &f) in trace.iter().enumerate() {
            let theta = TAU * j as f64 / m as f64;
            let step = Complex64::new(theta.cos(), -theta.sin());
            let mut phase = Complex64::new(1.0, 0.0);
            a0 += f;
            for c in coeffs.iter_mut() {
                phase *= step;
                *c += f * phase;
            }
        }
        let scale = 1.0 / m as f64;
        a0 *= scale;
        let analytic: Vec<Complex64> = coeffs.iter().map(|c| c * scale).collect();
        let antianalytic: Vec<Complex64> = analytic.iter().map(|c| c.conj()).collect();
        HarmonicRep::new(a0, analytic, antianalytic).into_real_valued()
    }
}

/// Runs the full pipeline and measures the sup error over 2048 circle
/// points. The error is measured, never predicted.
pub fn circle_polynomial_approx(
    phi: &BoundaryFunction,
    plan: &ApproxPlan,
) -> Result<(CircleApprox, f64)> {
    let (a, b, psi) = affine_shift(phi);
    let (h_top, h_bot) = split_top_bot(&psi)?;
    let p_top = approx_1d(&h_top, plan.degree_1d);
    let p_bot = approx_1d(&h_bot, plan.degree_1d);
    let cutoff = cutoff_poly(plan.epsilon, plan.cutoff_degree)?;
    let approx = CircleApprox { shift_a: a, shift_b: b, p_top, p_bot, cutoff };
    let mut sup = 0.0f64;
    for j in 0..2048 {
        let theta = TAU * j as f64 / 2048.0;
        sup = sup.max((approx.eval_circle(theta) - phi.eval_real(theta)).abs());
    }
    Ok((approx, sup))
}

/// Max over equispaced circle samples of `|φ(θ) − p(cos θ, sin θ)|`.
pub fn sup_error_on_circle(phi: &BoundaryFunction, p: &RealPoly2, samples: usize) -> f64 {
    assert!(samples >= 16, "need at least 16 samples");
    let mut sup = 0.0f64;
    for j in 0..samples {
        let theta = TAU * j as f64 / samples as f64;
        sup = sup.max((phi.eval_real(theta) - p.eval(theta.cos(), theta.sin())).abs());
    }
    sup
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
    }

    #[test]
    fn affine_shift_absorbs_cos() {
        let (a, b, psi) = affine_shift(&BoundaryFunction::Cos(1));
        assert_close(a, 1.0, 0.0);
        assert_close(b, 0.0, 0.0);
        for k in 0..16 {
            assert_close(psi.eval_real(TAU * k as f64 / 16.0), 0.0, 1e-15);
        }
    }

    #[test]
    fn affine_shift_leaves_sin_alone() {
        let (a, b, psi) = affine_shift(&BoundaryFunction::Sin(1));
        assert_close(a, 0.0, 1e-15);
        assert_close(b, 0.0, 1e-15);
        assert_close(psi.eval_real(1.0), 1.0f64.sin(), 1e-15);
    }

    #[test]
    fn affine_shift_of_constant() {
        let (a, b, psi) = affine_shift(&BoundaryFunction::Const(5.0));
        assert_close(a, 0.0, 0.0);
        assert_close(b, 5.0, 0.0);
        assert_close(psi.eval_real(2.0), 0.0, 0.0);
    }

    #[test]
    fn split_of_sin_gives_semicircle_traces() {
        let (_, _, psi) = affine_shift(&BoundaryFunction::Sin(1));
        let (top, bot) = split_top_bot(&psi).unwrap();
        for &x in &[-1.0, -0.5, 0.0, 0.3, 0.99, 1.0] {
            let s = (1.0 - x * x as f64).max(0.0).sqrt();
            assert_close(top.eval(x), s, 1e-12);
            assert_close(bot.eval(x), -s, 1e-12);
        }
    }

    #[test]
    fn split_of_sin2_matches_double_angle() {
        let (_, _, psi) = affine_shift(&BoundaryFunction::Sin(2));
        let (top, _) = split_top_bot(&psi).unwrap();
        for &x in &[-0.9, -0.2, 0.4, 0.8] {
            let expect = 2.0 * x * (1.0 - x * x as f64).sqrt();
            assert_close(top.eval(x), expect, 1e-12);
        }
    }

    #[test]
    fn split_requires_vanishing_endpoints() {
        match split_top_bot(&BoundaryFunction::Cos(1)) {
            Err(Error::ShiftRequired { at_one, .. }) => assert_close(at_one, 1.0, 1e-15),
            other => panic!("expected ShiftRequired, got {other:?}"),
        }
    }

    #[test]
    fn bernstein_reproduces_affine_functions() {
        let g = RealFunction1D::new(|x| x);
        for degree in [1, 4, 9] {
            let p = approx_1d(&g, degree);
            let coeffs = p.to_monomial();
            assert_close(coeffs[0], 0.0, 1e-12);
            assert_close(coeffs[1], 1.0, 1e-12);
            for c in &coeffs[2..] {
                assert_close(*c, 0.0, 1e-12);
            }
        }
    }

    #[test]
    fn bernstein_of_square_on_unit_interval() {
        // in the unmapped parameter, the degree-n approximant of t² is
        // t² + t(1-t)/n, i.e. coefficients [0, 1/n, 1 - 1/n]
        let g = RealFunction1D::new(|x| {
            let t = (x + 1.0) / 2.0;
            t * t
        });
        for n in [2u32, 5, 8] {
            let p = approx_1d(&g, n);
            let unit = p.to_monomial_unit();
            assert_close(unit[0], 0.0, 1e-14);
            assert_close(unit[1], 1.0 / n as f64, 1e-13);
            assert_close(unit[2], 1.0 - 1.0 / n as f64, 1e-13);
        }
    }

    #[test]
    fn bernstein_of_constant() {
        let g = RealFunction1D::new(|_| 2.5);
        let p = approx_1d(&g, 7);
        for &x in &[-1.0, -0.3, 0.2, 1.0] {
            assert_close(p.eval(x), 2.5, 1e-13);
        }
    }

    #[test]
    fn stable_eval_matches_monomial_eval_at_low_degree() {
        let g = RealFunction1D::new(|x| (2.0 * x).sin() + 0.3 * x * x);
        let p = approx_1d(&g, 12);
        let coeffs = p.to_monomial();
        for k in 0..=20 {
            let x = -1.0 + 0.1 * k as f64;
            let direct: f64 = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * x.powi(i as i32))
                .sum();
            assert_close(p.eval(x), direct, 1e-10);
        }
    }

    #[test]
    fn stable_eval_is_finite_and_accurate_at_high_degree() {
        // values of a smooth function; the stable path must stay at
        // roundoff even where monomial expansion would be hopeless
        let g = RealFunction1D::new(|x| (1.0 - x * x as f64).max(0.0).sqrt());
        let p = approx_1d(&g, 2048);
        let v = p.eval(0.0);
        assert!(v.is_finite());
        assert_close(v, 1.0, 1e-3); // Bernstein converges slowly but surely
    }

    #[test]
    fn cutoff_plateau_values() {
        let p = cutoff_poly(0.1, 64).unwrap();
        assert_close(p.eval(0.0), 0.5, 0.05);
        assert_close(p.eval(1.0), 1.0, 0.05);
        assert_close(p.eval(-1.0), 0.0, 0.05);
    }

    #[test]
    fn cutoff_range_stays_bracketed() {
        let p = cutoff_poly(0.05, 128).unwrap();
        for k in 0..=400 {
            let y = -1.0 + k as f64 / 200.0;
            let v = p.eval(y);
            assert!((-0.2..=1.2).contains(&v), "cutoff out of range: {v} at {y}");
        }
    }

    #[test]
    fn cutoff_rejects_bad_epsilon() {
        assert!(cutoff_poly(0.0, 16).is_err());
        assert!(cutoff_poly(0.6, 16).is_err());
        assert!(ApproxPlan::new(16, 0.0, 16).is_err());
        assert!(ApproxPlan::new(0, 0.1, 16).is_err());
    }

    #[test]
    fn pipeline_collapses_for_cos() {
        let plan = ApproxPlan::new(16, 0.1, 16).unwrap();
        let (approx, sup) = circle_polynomial_approx(&BoundaryFunction::Cos(1), &plan).unwrap();
        assert!(sup <= 1e-10, "cos θ is absorbed by the shift, sup = {sup}");
        let p = approx.to_real_poly2();
        assert_close(p.coeff(1, 0), 1.0, 1e-12);
        assert!(p.len() == 1, "expected exactly the polynomial x, got {p:?}");
    }

    #[test]
    fn pipeline_on_sin_with_generous_plan() {
        let plan = ApproxPlan::new(64, 0.1, 64).unwrap();
        let (_, sup) = circle_polynomial_approx(&BoundaryFunction::Sin(1), &plan).unwrap();
        assert!(sup <= 0.1, "sup = {sup}");
        assert_close(sup, 0.091160, 1e-4);
    }

    #[test]
    fn pipeline_on_abs_sin() {
        let plan = ApproxPlan::new(128, 0.05, 128).unwrap();
        let (_, sup) = circle_polynomial_approx(&BoundaryFunction::AbsSin, &plan).unwrap();
        assert!(sup <= 0.1, "sup = {sup}");
        assert_close(sup, 0.048643, 1e-4);
    }

    #[test]
    fn sup_error_examples() {
        let x = RealPoly2::var_x();
        assert!(sup_error_on_circle(&BoundaryFunction::Cos(1), &x, 720) <= 1e-12);
        assert_close(
            sup_error_on_circle(&BoundaryFunction::Const(1.0), &RealPoly2::zero(), 720),
            1.0,
            0.0,
        );
        let cos2 = RealPoly2::from_terms([((2, 0), 1.0), ((0, 2), -1.0)]);
        assert!(sup_error_on_circle(&BoundaryFunction::Cos(2), &cos2, 720) <= 1e-12);
    }

    #[test]
    fn decomposition_matches_manual_expansion() {
        let plan = ApproxPlan::new(6, 0.2, 5).unwrap();
        let (approx, _) = circle_polynomial_approx(&BoundaryFunction::Sin(1), &plan).unwrap();
        let expanded = approx.to_real_poly2();
        let manual = &(&RealPoly2::from_terms([((1, 0), approx.shift_a), ((0, 0), approx.shift_b)])
            + &(&approx.p_top.to_poly_in_x() * &approx.cutoff.to_poly_in_y(false)))
            + &(&approx.p_bot.to_poly_in_x() * &approx.cutoff.to_poly_in_y(true));
        let diff = &expanded - &manual;
        assert!(diff.max_abs_coeff() <= 1e-12);
    }

    #[test]
    fn harmonic_extension_matches_disc_solver_at_low_budget() {
        let plan = ApproxPlan::new(8, 0.2, 8).unwrap();
        let (approx, _) = circle_polynomial_approx(&BoundaryFunction::Sin(1), &plan).unwrap();
        let via_fourier = approx.harmonic_extension();
        let via_monomials = crate::disc::solve_disc(&approx.to_real_poly2());
        for (x, y) in [(0.0, 0.0), (0.4, 0.3), (-0.6, 0.2)] {
            let z = Complex64::new(x, y);
            assert_close(
                via_fourier.eval_real(z).unwrap(),
                via_monomials.eval_real(z).unwrap(),
                1e-10,
            );
        }
    }
}
