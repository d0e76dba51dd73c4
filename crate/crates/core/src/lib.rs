//! Solvers for the Dirichlet problem on the unit disc and on ellipses,
//! exact for polynomial boundary data and numerical for continuous data,
//! together with the Poisson and Cauchy kernels (including truncations with
//! certified error bounds) and a toolkit of numerical identity checks:
//! circle averaging, the maximum principle, finite-difference harmonicity,
//! contour integrals on circles and rectangles, the complex Green's theorem,
//! and Goursat bisection localization.
//!
//! The crate is `no_std` (with `alloc`); float transcendentals come from
//! `libm`. All values are immutable after construction and every operation
//! is a pure function, so concurrent use needs no synchronization.
//!
//! # Layout
//!
//! - [`poly`] — sparse bivariate polynomials over `(x, y)` and `(z, z̄)`,
//!   Wirtinger derivatives, the Laplacian, basis conversions
//! - [`grammar`] — polynomial text parsing and printing
//! - [`disc`] — exact Dirichlet solve on the unit disc by boundary reduction
//! - [`kernels`] — Poisson/Cauchy kernels and trapezoid boundary integrals
//! - [`ellipse`] — the linear-algebra Dirichlet solve on `{r < 0}` domains
//! - [`approx`] — constructive polynomial approximation on the circle
//! - [`verify`] — the numerical identity checks

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod approx;
pub mod disc;
pub mod ellipse;
pub mod error;
pub mod grammar;
pub mod kernels;
mod linalg;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};

pub use poly::{
    from_zzbar, laplacian, to_zzbar, wirtinger, ComplexPolyZZbar, Monomial, RealPoly2, Wirtinger,
};

pub use disc::{eval_harmonic, reduce_on_circle, solve_disc, HarmonicRep};

pub use kernels::{
    analytic_part, cauchy_integral, choose_truncation, poisson_integral, poisson_kernel,
    poisson_kernel_truncated, truncation_error_bound, BoundaryFunction, KernelForm,
    KernelTruncation, QuadratureSpec,
};

pub use ellipse::{solve_ellipse, solve_ellipse_full, validate_domain, EllipseDomain, EllipseSolution};

pub use approx::{
    affine_shift, approx_1d, circle_polynomial_approx, cutoff_poly, split_top_bot,
    sup_error_on_circle, ApproxPlan, BernsteinPoly, CircleApprox, RealFunction1D,
};

pub use verify::{
    check_averaging, check_max_principle, contour_integral_circle, contour_integral_rect,
    contour_length_bound_check, fd_laplacian, goursat_localize, green_residual_disc, Curve,
    EvalDomain, Evaluator, GoursatLevel, GoursatTrace, MaxPrincipleReport, Rect, SquareSpec,
};
