//! Kernel invariants: the three closed forms agree pairwise, the kernel is
//! positive with unit circle mean, the truncation bound is never violated,
//! and the truncated kernel reproduces the basis functions under quadrature.

mod common;

use common::{assert_close, random_point_in_disc, random_poly, rng};
use dirichlet_core::kernels::{
    poisson_integral, poisson_kernel, poisson_kernel_truncated, truncation_error_bound,
    BoundaryFunction, KernelForm, QuadratureSpec,
};
use dirichlet_core::solve_disc;
use num_complex::Complex64;

const TAU: f64 = core::f64::consts::TAU;

fn kernel_grid() -> impl Iterator<Item = (Complex64, Complex64)> {
    // z along 20 radii in [0, 0.95], w over 36 angles; the kernel depends
    // only on z·w̄, so sweeping the relative angle covers the geometry
    (0..20).flat_map(|i| {
        let rho = 0.95 * i as f64 / 19.0;
        (0..36).map(move |j| {
            let th = TAU * j as f64 / 36.0;
            (
                Complex64::new(rho, 0.0),
                Complex64::new(th.cos(), th.sin()),
            )
        })
    })
}

#[test]
fn three_forms_agree_pairwise() {
    for (z, w) in kernel_grid() {
        let a = poisson_kernel(z, w, KernelForm::SeriesClosed).unwrap();
        let b = poisson_kernel(z, w, KernelForm::HerglotzRe).unwrap();
        let c = poisson_kernel(z, w, KernelForm::ModulusSq).unwrap();
        assert_close(a, b, 1e-12 * (1.0 + a.abs()));
        assert_close(b, c, 1e-12 * (1.0 + b.abs()));
        assert_close(a, c, 1e-12 * (1.0 + c.abs()));
    }
}

#[test]
fn kernel_is_positive() {
    for (z, w) in kernel_grid() {
        let v = poisson_kernel(z, w, KernelForm::ModulusSq).unwrap();
        assert!(v > 0.0, "kernel not positive at z={z}, w={w}");
    }
}

#[test]
fn kernel_has_unit_mean() {
    let m = 512usize;
    let mut r = rng(31);
    for _ in 0..20 {
        let z = random_point_in_disc(&mut r, 0.9);
        let mut mean = 0.0;
        for j in 0..m {
            let th = TAU * j as f64 / m as f64;
            let w = Complex64::new(th.cos(), th.sin());
            mean += poisson_kernel(z, w, KernelForm::ModulusSq).unwrap();
        }
        mean /= m as f64;
        assert_close(mean, 1.0, 1e-10);
    }
}

#[test]
fn truncation_bound_is_never_violated() {
    for (z, w) in kernel_grid() {
        let exact = poisson_kernel(z, w, KernelForm::ModulusSq).unwrap();
        let rho = z.norm();
        for n in 0..=64u32 {
            let truncated = poisson_kernel_truncated(z, w, n);
            let bound = truncation_error_bound(rho, n).unwrap();
            assert!(
                (truncated - exact).abs() <= bound + 1e-12,
                "violation at |z|={rho}, w={w}, N={n}: err={} bound={bound}",
                (truncated - exact).abs()
            );
        }
    }
}

#[test]
fn truncated_kernel_reproduces_basis_functions() {
    // quadrature of K_N against zⁿ, z̄ⁿ and 1 returns the function value
    let mut r = rng(32);
    for n_trunc in [4u32, 9, 16] {
        let m = (4 * n_trunc + 16) as usize;
        for _ in 0..5 {
            let z = random_point_in_disc(&mut r, 0.9);
            for n in 0..=n_trunc {
                let mut sum_analytic = Complex64::new(0.0, 0.0);
                let mut sum_anti = Complex64::new(0.0, 0.0);
                for j in 0..m {
                    let th = TAU * j as f64 / m as f64;
                    let w = Complex64::new(th.cos(), th.sin());
                    let k = poisson_kernel_truncated(z, w, n_trunc);
                    sum_analytic += k * w.powi(n as i32);
                    sum_anti += k * w.conj().powi(n as i32);
                }
                let expect = z.powi(n as i32);
                assert!(
                    (sum_analytic / m as f64 - expect).norm() <= 1e-10,
                    "zⁿ reproduction failed at n={n}, N={n_trunc}"
                );
                assert!(
                    (sum_anti / m as f64 - expect.conj()).norm() <= 1e-10,
                    "z̄ⁿ reproduction failed at n={n}, N={n_trunc}"
                );
            }
        }
    }
}

#[test]
fn poisson_integral_consistent_with_disc_solver() {
    let mut r = rng(33);
    let quad = QuadratureSpec::default();
    for _ in 0..15 {
        let p = random_poly(&mut r, 6);
        let rep = solve_disc(&p);
        let phi = BoundaryFunction::poly_trace(&p);
        for _ in 0..10 {
            let z = random_point_in_disc(&mut r, 0.9);
            let integral = poisson_integral(&phi, z, &quad).unwrap();
            let exact = rep.eval_real(z).unwrap();
            assert_close(integral, exact, 1e-9);
        }
    }
}
