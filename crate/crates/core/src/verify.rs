//! Numerical embodiment of the defining identities: averaging property,
//! maximum principle, finite-difference Laplacian, contour integrals on
//! circles and rectangles, the complex Green's theorem on the disc, the
//! contour length estimate, and Goursat bisection localization.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;
#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::disc::HarmonicRep;
use crate::error::{Error, Result};
use crate::kernels::QuadratureSpec;
use crate::poly::{wirtinger, ComplexPolyZZbar, RealPoly2, Wirtinger};

const TAU: f64 = 2.0 * core::f64::consts::PI;

/// Geometric slack accepted when testing containment.
const GEOM_SLACK: f64 = 1e-12;

/// Declared domain of an evaluator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EvalDomain {
    Disc { center: Complex64, radius: f64 },
    Rect { x0: f64, y0: f64, x1: f64, y1: f64 },
    Entire,
}

impl EvalDomain {
    pub fn unit_disc() -> Self {
        EvalDomain::Disc { center: Complex64::new(0.0, 0.0), radius: 1.0 }
    }

    fn contains_point(&self, z: Complex64) -> bool {
        match self {
            EvalDomain::Disc { center, radius } => (z - center).norm() <= radius + GEOM_SLACK,
            EvalDomain::Rect { x0, y0, x1, y1 } => {
                z.re >= x0 - GEOM_SLACK
                    && z.re <= x1 + GEOM_SLACK
                    && z.im >= y0 - GEOM_SLACK
                    && z.im <= y1 + GEOM_SLACK
            }
            EvalDomain::Entire => true,
        }
    }

    fn contains_disc(&self, a: Complex64, r: f64) -> bool {
        match self {
            EvalDomain::Disc { center, radius } => (a - center).norm() + r <= radius + GEOM_SLACK,
            EvalDomain::Rect { x0, y0, x1, y1 } => {
                a.re - r >= x0 - GEOM_SLACK
                    && a.re + r <= x1 + GEOM_SLACK
                    && a.im - r >= y0 - GEOM_SLACK
                    && a.im + r <= y1 + GEOM_SLACK
            }
            EvalDomain::Entire => true,
        }
    }

    fn contains_rect(&self, rect: &Rect) -> bool {
        let corners = [
            Complex64::new(rect.x0, rect.y0),
            Complex64::new(rect.x1, rect.y0),
            Complex64::new(rect.x1, rect.y1),
            Complex64::new(rect.x0, rect.y1),
        ];
        corners.iter().all(|c| self.contains_point(*c))
    }
}

/// A complex-valued function handle together with its declared domain.
pub struct Evaluator {
    f: Box<dyn Fn(Complex64) -> Complex64 + Send + Sync>,
    domain: EvalDomain,
}

impl Evaluator {
    pub fn new(
        domain: EvalDomain,
        f: impl Fn(Complex64) -> Complex64 + Send + Sync + 'static,
    ) -> Self {
        Evaluator { f: Box::new(f), domain }
    }

    /// Wraps a harmonic representation on its natural domain, the closed
    /// unit disc.
    pub fn from_harmonic(rep: &HarmonicRep) -> Self {
        let rep = rep.clone();
        Evaluator::new(EvalDomain::unit_disc(), move |z| {
            rep.eval(z).unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        })
    }

    /// Wraps a real polynomial; polynomials are entire.
    pub fn from_real_poly(p: &RealPoly2) -> Self {
        let p = p.clone();
        Evaluator::new(EvalDomain::Entire, move |z| Complex64::new(p.eval_at(z), 0.0))
    }

    /// Wraps a `(z, z̄)` polynomial; polynomials are entire.
    pub fn from_zzbar_poly(q: &ComplexPolyZZbar) -> Self {
        let q = q.clone();
        Evaluator::new(EvalDomain::Entire, move |z| q.eval(z))
    }

    pub fn domain(&self) -> EvalDomain {
        self.domain
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        if !self.domain.contains_point(z) {
            return Err(Error::DomainViolation(alloc::format!(
                "evaluation point ({}, {}) lies outside the evaluator's domain",
                z.re, z.im
            )));
        }
        Ok((self.f)(z))
    }

    fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        (self.f)(z)
    }
}

/// `|u(a) − (1/M) Σ u(a + r e^{iθ_j})|`: the averaging-property residual.
pub fn check_averaging(
    u: &Evaluator,
    a: Complex64,
    r: f64,
    quad: &QuadratureSpec,
) -> Result<f64> {
    if r <= 0.0 || !u.domain.contains_disc(a, r) {
        return Err(Error::DomainViolation(
            "the closed disc of the averaging check must lie in the domain".to_string(),
        ));
    }
    let m = quad.node_count();
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        sum += u.eval_unchecked(a + Complex64::new(r * theta.cos(), r * theta.sin()));
    }
    Ok((u.eval_unchecked(a) - sum / m as f64).norm())
}

/// Trapezoid discretization of `∮_{C_r(a)} f dz`.
pub fn contour_integral_circle(
    f: &Evaluator,
    a: Complex64,
    r: f64,
    quad: &QuadratureSpec,
) -> Result<Complex64> {
    if r <= 0.0 || !f.domain.contains_disc(a, r) {
        return Err(Error::DomainViolation(
            "the contour circle must lie in the domain".to_string(),
        ));
    }
    let m = quad.node_count();
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let e = Complex64::new(theta.cos(), theta.sin());
        // dz = i r e^{iθ} dθ
        sum += f.eval_unchecked(a + e * r) * Complex64::new(0.0, r) * e;
    }
    Ok(sum * (TAU / m as f64))
}

/// Axis-aligned rectangle given by opposite corners.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub y0: f64,
    pub x1: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Rect { x0: x0.min(x1), y0: y0.min(y1), x1: x0.max(x1), y1: y0.max(y1) }
    }

    pub fn unit_square() -> Self {
        Rect { x0: 0.0, y0: 0.0, x1: 1.0, y1: 1.0 }
    }

    pub fn area(&self) -> f64 {
        (self.x1 - self.x0) * (self.y1 - self.y0)
    }

    pub fn perimeter(&self) -> f64 {
        2.0 * ((self.x1 - self.x0) + (self.y1 - self.y0))
    }

    /// Corner list in counterclockwise order starting at `(x0, y0)`.
    fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.x0, self.y0),
            Complex64::new(self.x1, self.y0),
            Complex64::new(self.x1, self.y1),
            Complex64::new(self.x0, self.y1),
        ]
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` by Newton iteration on the
/// Legendre recurrence.
pub fn gauss_legendre(order: usize) -> Vec<(f64, f64)> {
    assert!(order >= 1, "quadrature order must be positive");
    let n = order;
    let mut out = Vec::with_capacity(n);
    for i in 1..=(n + 1) / 2 {
        let mut x = (core::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            // evaluate P_n and P_{n-1} by the three-term recurrence
            let mut p0 = 1.0f64;
            let mut p1 = x;
            for k in 1..n {
                let p2 = ((2 * k + 1) as f64 * x * p1 - k as f64 * p0) / (k + 1) as f64;
                p0 = p1;
                p1 = p2;
            }
            pp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / pp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * pp * pp);
        out.push((-x, w));
        if i != n + 1 - i {
            out.push((x, w));
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

fn edge_integral(
    f: &Evaluator,
    za: Complex64,
    zb: Complex64,
    rule: &[(f64, f64)],
) -> Complex64 {
    let mid = (za + zb) * 0.5;
    let half = (zb - za) * 0.5;
    let mut sum = Complex64::new(0.0, 0.0);
    for &(t, w) in rule {
        sum += f.eval_unchecked(mid + half * t) * w;
    }
    sum * half
}

/// `∮ f dz` around the counterclockwise rectangle boundary, each edge by
/// Gauss–Legendre of the given order (16 is exact for the polynomial
/// integrands in scope, so "zero" results are limited only by rounding).
pub fn contour_integral_rect(f: &Evaluator, rect: &Rect, edge_order: usize) -> Result<Complex64> {
    if !f.domain.contains_rect(rect) {
        return Err(Error::DomainViolation(
            "the contour rectangle must lie in the domain".to_string(),
        ));
    }
    let rule = gauss_legendre(edge_order);
    let c = rect.corners();
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..4 {
        sum += edge_integral(f, c[k], c[(k + 1) % 4], &rule);
    }
    Ok(sum)
}

/// Residual of the complex Green's theorem on the unit disc:
/// `|∮_{C_1(0)} f dz − 2i ∬_{D_1(0)} ∂f/∂z̄ dA|`.
///
/// The contour side is quadrature; the area side is exact from monomial
/// moments (`∬ zⁿz̄ᵐ dA` is `0` for `n ≠ m` and `π/(n+1)` for `n = m`).
pub fn green_residual_disc(f: &ComplexPolyZZbar, quad: &QuadratureSpec) -> f64 {
    let contour = {
        let ev = Evaluator::from_zzbar_poly(f);
        contour_integral_circle(&ev, Complex64::new(0.0, 0.0), 1.0, quad)
            .expect("unit circle lies in the entire plane")
    };
    let df = wirtinger(f, Wirtinger::DDzbar);
    let mut area = Complex64::new(0.0, 0.0);
    for (m, c) in df.terms() {
        if m.a == m.b {
            area += c * (core::f64::consts::PI / (m.a as f64 + 1.0));
        }
    }
    (contour - Complex64::new(0.0, 2.0) * area).norm()
}

/// Five-point finite-difference Laplacian
/// `(u(z+h) + u(z−h) + u(z+ih) + u(z−ih) − 4u(z))/h²`, real part.
///
/// The differences are taken against the center value pairwise before
/// summing, which keeps the cancellation error near roundoff.
pub fn fd_laplacian(u: &Evaluator, z: Complex64, h: f64) -> Result<f64> {
    if h <= 0.0 {
        return Err(Error::InvalidSpec("step must be positive".to_string()));
    }
    let offsets = [
        Complex64::new(h, 0.0),
        Complex64::new(-h, 0.0),
        Complex64::new(0.0, h),
        Complex64::new(0.0, -h),
    ];
    for d in offsets.iter() {
        if !u.domain.contains_point(z + d) {
            return Err(Error::DomainViolation(
                "the five-point stencil must fit in the domain".to_string(),
            ));
        }
    }
    let center = u.eval(z)?;
    let mut acc = Complex64::new(0.0, 0.0);
    for d in offsets.iter() {
        acc += u.eval_unchecked(z + d) - center;
    }
    Ok(acc.re / (h * h))
}

/// Curve argument of [`contour_length_bound_check`].
#[derive(Clone, Copy, Debug)]
pub enum Curve {
    Circle { center: Complex64, radius: f64 },
    Rect(Rect),
}

/// Returns `(lhs, rhs)` of the basic contour estimate
/// `|∮ f dz| ≤ sup|f| · Length`: the quadrature value of the integral and
/// the sampled sup times the curve length.
pub fn contour_length_bound_check(
    f: &Evaluator,
    curve: &Curve,
    quad: &QuadratureSpec,
) -> Result<(f64, f64)> {
    match curve {
        Curve::Circle { center, radius } => {
            let integral = contour_integral_circle(f, *center, *radius, quad)?;
            let m = quad.node_count();
            let mut sup = 0.0f64;
            for j in 0..m {
                let theta = TAU * j as f64 / m as f64;
                let z = center + Complex64::new(radius * theta.cos(), radius * theta.sin());
                sup = sup.max(f.eval_unchecked(z).norm());
            }
            Ok((integral.norm(), sup * TAU * radius))
        }
        Curve::Rect(rect) => {
            let integral = contour_integral_rect(f, rect, 16)?;
            let rule = gauss_legendre(16);
            let c = rect.corners();
            let mut sup = 0.0f64;
            for k in 0..4 {
                let mid = (c[k] + c[(k + 1) % 4]) * 0.5;
                let half = (c[(k + 1) % 4] - c[k]) * 0.5;
                for &(t, _) in &rule {
                    sup = sup.max(f.eval_unchecked(mid + half * t).norm());
                }
            }
            Ok((integral.norm(), sup * rect.perimeter()))
        }
    }
}

/// Axis-aligned square given by center and side length.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquareSpec {
    pub center: Complex64,
    pub side: f64,
}

impl SquareSpec {
    pub fn new(center: Complex64, side: f64) -> Self {
        SquareSpec { center, side }
    }

    pub fn to_rect(&self) -> Rect {
        let h = self.side * 0.5;
        Rect::new(self.center.re - h, self.center.im - h, self.center.re + h, self.center.im + h)
    }

    pub fn area(&self) -> f64 {
        self.side * self.side
    }
}

/// One level of the bisection trace.
#[derive(Clone, Copy, Debug)]
pub struct GoursatLevel {
    pub square: SquareSpec,
    pub integral: Complex64,
    pub modulus: f64,
    /// whether `|∮_{σ_n} f| ≥ |I|·area(S_n)` held at this level (with 1e-10
    /// slack)
    pub lower_bound_ok: bool,
}

/// Trace of the nested-square localization.
#[derive(Clone, Debug)]
pub struct GoursatTrace {
    pub initial_square: SquareSpec,
    pub initial_integral: Complex64,
    pub levels: Vec<GoursatLevel>,
    pub limit_point: Complex64,
    /// set when the initial integral is already below 1e-12 and no
    /// localization is attempted
    pub analytic: bool,
}

impl GoursatTrace {
    /// Whether every recorded level satisfied the area-scaled lower bound.
    pub fn all_levels_ok(&self) -> bool {
        self.levels.iter().all(|l| l.lower_bound_ok)
    }
}

/// Goursat bisection: splits the square into four, follows the child with
/// the largest contour integral (ties resolved in NW, NE, SW, SE order) and
/// records, at every level, the lower bound `|∮_{σ_n} f| ≥ |I|·area(S_n)`
/// that makes a nonzero initial integral contradict differentiability.
pub fn goursat_localize(
    f: &Evaluator,
    square: SquareSpec,
    depth: u32,
    edge_order: usize,
) -> Result<GoursatTrace> {
    let initial_integral = contour_integral_rect(f, &square.to_rect(), edge_order)?;
    let magnitude = initial_integral.norm();
    if magnitude <= 1e-12 {
        return Ok(GoursatTrace {
            initial_square: square,
            initial_integral,
            levels: Vec::new(),
            limit_point: square.center,
            analytic: true,
        });
    }
    let mut levels = Vec::with_capacity(depth as usize);
    let mut current = square;
    for _ in 0..depth {
        let h = current.side * 0.25;
        // NW, NE, SW, SE
        let children = [
            SquareSpec::new(current.center + Complex64::new(-h, h), current.side * 0.5),
            SquareSpec::new(current.center + Complex64::new(h, h), current.side * 0.5),
            SquareSpec::new(current.center + Complex64::new(-h, -h), current.side * 0.5),
            SquareSpec::new(current.center + Complex64::new(h, -h), current.side * 0.5),
        ];
        let mut best = 0usize;
        let mut best_integral = Complex64::new(0.0, 0.0);
        let mut best_modulus = -1.0f64;
        for (idx, child) in children.iter().enumerate() {
            let integral = contour_integral_rect(f, &child.to_rect(), edge_order)?;
            let modulus = integral.norm();
            if modulus > best_modulus {
                best = idx;
                best_integral = integral;
                best_modulus = modulus;
            }
        }
        let chosen = children[best];
        let lower_bound_ok = best_modulus + 1e-10 >= magnitude * chosen.area();
        levels.push(GoursatLevel {
            square: chosen,
            integral: best_integral,
            modulus: best_modulus,
            lower_bound_ok,
        });
        current = chosen;
    }
    Ok(GoursatTrace {
        initial_square: square,
        initial_integral,
        levels,
        limit_point: current.center,
        analytic: false,
    })
}

/// Result of the maximum-principle check on the closed unit disc.
#[derive(Clone, Copy, Debug)]
pub struct MaxPrincipleReport {
    pub interior_max: f64,
    pub boundary_max: f64,
    pub ok: bool,
}

/// Compares the max of `Re u` over an interior lattice against 720 boundary
/// samples: `ok` iff `interior ≤ boundary + 1e-9`.
pub fn check_max_principle(u: &Evaluator, grid_n: usize) -> Result<MaxPrincipleReport> {
    if grid_n < 2 {
        return Err(Error::InvalidSpec("grid resolution must be at least 2".to_string()));
    }
    let mut interior_max = f64::NEG_INFINITY;
    for iy in 0..grid_n {
        let y = -1.0 + 2.0 * iy as f64 / (grid_n - 1) as f64;
        for ix in 0..grid_n {
            let x = -1.0 + 2.0 * ix as f64 / (grid_n - 1) as f64;
            if x * x + y * y < 1.0 {
                interior_max = interior_max.max(u.eval(Complex64::new(x, y))?.re);
            }
        }
    }
    let mut boundary_max = f64::NEG_INFINITY;
    for j in 0..720 {
        let theta = TAU * j as f64 / 720.0;
        let z = Complex64::new(theta.cos(), theta.sin());
        boundary_max = boundary_max.max(u.eval(z)?.re);
    }
    Ok(MaxPrincipleReport {
        interior_max,
        boundary_max,
        ok: interior_max <= boundary_max + 1e-9,
    })
}
