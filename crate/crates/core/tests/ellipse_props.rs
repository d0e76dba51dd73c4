//! Invariants of the linear-algebra Dirichlet solver: well-conditioned
//! systems on reasonable ellipses, harmonic solutions, exact polynomial
//! boundary agreement, consistency with the disc solver, and the maximum
//! principle sampled along the boundary.

mod common;

use common::{assert_close, random_point_in_disc, random_poly, rng};
use dirichlet_core::ellipse::{solve_ellipse_full, validate_domain, EllipseDomain};
use dirichlet_core::poly::{laplacian, RealPoly2};
use dirichlet_core::solve_disc;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const TAU: f64 = core::f64::consts::TAU;

fn unit_disc() -> EllipseDomain {
    validate_domain(&RealPoly2::from_terms([
        ((2, 0), 1.0),
        ((0, 2), 1.0),
        ((0, 0), -1.0),
    ]))
    .unwrap()
}

/// Random ellipse `λ₁(x-cx)² + λ₂(y-cy)² - ρ`, axis ratio at most `ratio`.
fn random_ellipse(r: &mut ChaCha8Rng, ratio: f64) -> EllipseDomain {
    let lam1 = 1.0f64;
    let lam2 = r.random_range(1.0 / (ratio * ratio)..1.0);
    let (cx, cy) = (r.random_range(-0.5..0.5), r.random_range(-0.5..0.5));
    let rho = r.random_range(0.5..2.0);
    let poly = RealPoly2::from_terms([
        ((2, 0), lam1),
        ((1, 0), -2.0 * lam1 * cx),
        ((0, 2), lam2),
        ((0, 1), -2.0 * lam2 * cy),
        ((0, 0), lam1 * cx * cx + lam2 * cy * cy - rho),
    ]);
    validate_domain(&poly).unwrap()
}

#[test]
fn systems_stay_well_conditioned() {
    let mut r = rng(41);
    for _ in 0..15 {
        let ratio = r.random_range(1.0..20.0f64);
        let dom = random_ellipse(&mut r, ratio);
        assert!(dom.axis_ratio() <= 20.0 + 1e-9);
        let n = r.random_range(0..=10u32);
        let q = {
            let mut q = random_poly(&mut r, n);
            q.insert_add(dirichlet_core::Monomial::new(n, 0), 1.0);
            q
        };
        let sol = solve_ellipse_full(&dom, &q).unwrap();
        assert!(
            sol.condition < 1e12,
            "condition {} at ratio {ratio}, N={n}",
            sol.condition
        );
    }
}

#[test]
fn solutions_are_harmonic() {
    let mut r = rng(42);
    for _ in 0..20 {
        let dom = random_ellipse(&mut r, 10.0);
        let q = random_poly(&mut r, 8);
        let sol = solve_ellipse_full(&dom, &q).unwrap();
        let residual = laplacian(&sol.u).max_abs_coeff();
        assert!(residual <= 1e-8, "laplacian residual {residual}");
        assert!(sol.residual_laplacian_max <= 1e-8);
    }
}

#[test]
fn boundary_agreement_is_polynomial_exact() {
    let mut r = rng(43);
    for _ in 0..20 {
        let dom = random_ellipse(&mut r, 8.0);
        let q = random_poly(&mut r, 7);
        let sol = solve_ellipse_full(&dom, &q).unwrap();
        let residual = &(&sol.u - &q) + &(dom.defining_polynomial() * &sol.p);
        assert!(
            residual.max_abs_coeff() <= 1e-9,
            "(u-q)+r·p residual {}",
            residual.max_abs_coeff()
        );
    }
}

#[test]
fn disc_case_agrees_with_monomial_reduction() {
    let mut r = rng(44);
    let dom = unit_disc();
    for _ in 0..10 {
        let q = random_poly(&mut r, 7);
        let u = dirichlet_core::solve_ellipse(&dom, &q).unwrap();
        let rep = solve_disc(&q);
        for _ in 0..10 {
            let z = random_point_in_disc(&mut r, 0.999);
            assert_close(u.eval(z.re, z.im), rep.eval_real(z).unwrap(), 1e-8);
        }
    }
}

#[test]
fn max_principle_along_parameterized_boundary() {
    let mut r = rng(45);
    for _ in 0..10 {
        let dom = random_ellipse(&mut r, 6.0);
        let q = random_poly(&mut r, 6);
        let sol = solve_ellipse_full(&dom, &q).unwrap();
        // boundary max over 720 parameterized points
        let (cx, cy) = dom.center();
        let (lam1, lam2) = dom.eigenvalues();
        let rho = -dom.min_value();
        let mut boundary_max = f64::NEG_INFINITY;
        for j in 0..720 {
            let t = TAU * j as f64 / 720.0;
            let x = cx + (rho / lam1).sqrt() * t.cos();
            let y = cy + (rho / lam2).sqrt() * t.sin();
            debug_assert!(dom.defining_polynomial().eval(x, y).abs() <= 1e-9);
            boundary_max = boundary_max.max(sol.u.eval(x, y));
        }
        // interior grid max
        let (x0, y0, x1, y1) = dom.bounding_box();
        let mut interior_max = f64::NEG_INFINITY;
        for iy in 0..60 {
            for ix in 0..60 {
                let x = x0 + (x1 - x0) * ix as f64 / 59.0;
                let y = y0 + (y1 - y0) * iy as f64 / 59.0;
                if dom.contains(x, y, -1e-9) {
                    interior_max = interior_max.max(sol.u.eval(x, y));
                }
            }
        }
        assert!(
            interior_max <= boundary_max + 1e-7,
            "interior {interior_max} vs boundary {boundary_max}"
        );
    }
}

#[test]
fn emitted_multiplier_matches_the_callers_r() {
    // the reported p must satisfy u = q − r·p for the original, unscaled r
    let r = RealPoly2::from_terms([((2, 0), 3.0), ((0, 2), 5.0), ((0, 0), -2.0)]);
    let dom = validate_domain(&r).unwrap();
    let q = RealPoly2::from_terms([((2, 0), 1.0)]);
    let sol = solve_ellipse_full(&dom, &q).unwrap();
    let reconstructed = &(&q - &(&r * &sol.p)) - &sol.u;
    assert!(reconstructed.max_abs_coeff() <= 1e-12);
}
