//! Dirichlet solver on discs and ellipses by finite-dimensional linear
//! algebra.
//!
//! For a degree-2 defining polynomial `r` with bounded sublevel set
//! `Ω = {r < 0}` and polynomial data `q`, the map `p ↦ Δ(r·p)` sends the
//! space of polynomials of degree at most `N` to itself (multiplying by `r`
//! raises the degree by two and the Laplacian lowers it by two) and is
//! one-to-one, hence onto. Solving `Δ(r·p) = Δq` yields the solution
//! `u = q − r·p`: harmonic, and equal to `q` on the boundary `{r = 0}`.

use alloc::vec;
use alloc::vec::Vec;

#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::error::{Error, Result};
use crate::linalg::{lu_factor, DenseMatrix};
use crate::poly::{laplacian, Monomial, RealPoly2};

/// Positive-definiteness threshold for the quadratic form's eigenvalues.
const EIGEN_TOL: f64 = 1e-10;

/// Interior-nonemptiness threshold on `min r`.
const INTERIOR_TOL: f64 = 1e-10;

/// Condition-number gate on the assembled system.
const CONDITION_LIMIT: f64 = 1e12;

/// Validated degree-2 defining polynomial with bounded negative sublevel set
/// `Ω = {r < 0}`: a disc or an ellipse.
#[derive(Clone, Debug)]
pub struct EllipseDomain {
    r: RealPoly2,
    /// `r` scaled so its quadratic form has trace 2; same zero set.
    r_normalized: RealPoly2,
    /// scale with `r_normalized = scale · r`
    scale: f64,
    center: (f64, f64),
    /// eigenvalues of the quadratic form, descending
    eigenvalues: (f64, f64),
    /// unit eigenvectors paired with the eigenvalues
    eigenvectors: ((f64, f64), (f64, f64)),
    semi_axes: (f64, f64),
    min_value: f64,
}

impl EllipseDomain {
    pub fn defining_polynomial(&self) -> &RealPoly2 {
        &self.r
    }

    pub fn center(&self) -> (f64, f64) {
        self.center
    }

    /// Eigenvalues of the quadratic form, descending.
    pub fn eigenvalues(&self) -> (f64, f64) {
        self.eigenvalues
    }

    /// Minimum of `r` over the plane (attained at the center).
    pub fn min_value(&self) -> f64 {
        self.min_value
    }

    /// Semi-axis lengths paired with the eigenvectors (shorter first, since
    /// the larger eigenvalue gives the shorter axis).
    pub fn semi_axes(&self) -> (f64, f64) {
        self.semi_axes
    }

    pub fn axis_ratio(&self) -> f64 {
        let (a, b) = self.semi_axes;
        a.max(b) / a.min(b)
    }

    /// Whether `(x, y)` lies in the closed domain, within `tol` on `r`.
    pub fn contains(&self, x: f64, y: f64, tol: f64) -> bool {
        self.r.eval(x, y) <= tol
    }

    /// Axis-aligned bounding box of the closed ellipse.
    pub fn bounding_box(&self) -> (f64, f64, f64, f64) {
        let (s1, s2) = self.semi_axes;
        let (v1, v2) = self.eigenvectors;
        let hx = ((s1 * v1.0).powi(2) + (s2 * v2.0).powi(2)).sqrt();
        let hy = ((s1 * v1.1).powi(2) + (s2 * v2.1).powi(2)).sqrt();
        (self.center.0 - hx, self.center.1 - hy, self.center.0 + hx, self.center.1 + hy)
    }
}

/// Validates a defining polynomial: total degree exactly 2, positive
/// definite quadratic part, nonempty interior.
pub fn validate_domain(r: &RealPoly2) -> Result<EllipseDomain> {
    let degree = r.degree();
    if degree != 2 {
        return Err(Error::NotDegreeTwo { degree });
    }
    let q11 = r.coeff(2, 0);
    let q12 = 0.5 * r.coeff(1, 1);
    let q22 = r.coeff(0, 2);
    let mid = 0.5 * (q11 + q22);
    let disc = (0.25 * (q11 - q22) * (q11 - q22) + q12 * q12).sqrt();
    let lam1 = mid + disc;
    let lam2 = mid - disc;
    if lam2 <= EIGEN_TOL {
        return Err(Error::UnboundedDomain);
    }
    // center solves 2Q c = -grad of the linear part
    let g = (r.coeff(1, 0), r.coeff(0, 1));
    let det = q11 * q22 - q12 * q12;
    let cx = (-0.5 * g.0 * q22 + 0.5 * g.1 * q12) / det;
    let cy = (-0.5 * g.1 * q11 + 0.5 * g.0 * q12) / det;
    let min_value = r.eval(cx, cy);
    if min_value >= -INTERIOR_TOL {
        return Err(Error::EmptyInterior { min_value });
    }
    // eigenvector for lam1; the second is its rotation by 90 degrees
    let v1 = if q12.abs() > 1e-300 {
        normalize(lam1 - q22, q12)
    } else if q11 >= q22 {
        (1.0, 0.0)
    } else {
        (0.0, 1.0)
    };
    let v2 = (-v1.1, v1.0);
    let semi_axes = ((-min_value / lam1).sqrt(), (-min_value / lam2).sqrt());
    let scale = 2.0 / (q11 + q22);
    Ok(EllipseDomain {
        r: r.clone(),
        r_normalized: r.scale(scale),
        scale,
        center: (cx, cy),
        eigenvalues: (lam1, lam2),
        eigenvectors: (v1, v2),
        semi_axes,
        min_value,
    })
}

fn normalize(x: f64, y: f64) -> (f64, f64) {
    let n = x.hypot(y);
    (x / n, y / n)
}

/// Full output of the linear-algebra Dirichlet solve.
#[derive(Clone, Debug)]
pub struct EllipseSolution {
    /// The harmonic solution `u = q − r·p`.
    pub u: RealPoly2,
    /// The multiplier `p`, relative to the caller's `r`.
    pub p: RealPoly2,
    /// 1-norm condition number of the assembled system.
    pub condition: f64,
    /// Largest coefficient magnitude of `Δu`.
    pub residual_laplacian_max: f64,
}

/// Graded-lex basis monomials of total degree at most `n`.
fn basis(n: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for d in 0..=n {
        for a in (0..=d).rev() {
            out.push(Monomial::new(a, d - a));
        }
    }
    out
}

/// Solves `Δ(r·p) = Δq` over polynomials of degree at most `deg q` and
/// returns `u = q − r·p` with diagnostics.
pub fn solve_ellipse_full(dom: &EllipseDomain, q: &RealPoly2) -> Result<EllipseSolution> {
    let n = q.degree().max(0) as u32;
    let monos = basis(n);
    let dim = monos.len();
    let index_of = |m: &Monomial| monos.iter().position(|k| k == m);

    // column j holds the coefficients of Δ(r̃ · basis_j)
    let mut a = DenseMatrix::zeros(dim);
    for (j, mono) in monos.iter().enumerate() {
        let basis_poly = RealPoly2::from_terms([((mono.a, mono.b), 1.0)]);
        let image = laplacian(&(&dom.r_normalized * &basis_poly));
        for (m, c) in image.terms() {
            match index_of(&m) {
                Some(i) => a.set(i, j, c),
                None => unreachable!("Δ(r·p) cannot exceed deg p"),
            }
        }
    }

    let lu = lu_factor(&a).ok_or(Error::SingularSystem { condition: f64::INFINITY })?;
    let condition = a.norm1() * lu.inverse_norm1();
    if !condition.is_finite() || condition > CONDITION_LIMIT {
        return Err(Error::SingularSystem { condition });
    }

    let mut rhs = vec![0.0; dim];
    for (m, c) in laplacian(q).terms() {
        let i = index_of(&m).expect("Δq has degree ≤ deg q");
        rhs[i] = c;
    }
    let coeffs = lu.solve(&rhs);

    let mut p_tilde = RealPoly2::zero();
    for (mono, c) in monos.iter().zip(coeffs.iter()) {
        p_tilde.insert_add(*mono, *c);
    }
    let u = q - &(&dom.r_normalized * &p_tilde);
    // report p relative to the caller's r, so u = q − r·p as handed in
    let p = p_tilde.scale(dom.scale);
    let residual_laplacian_max = laplacian(&u).max_abs_coeff();
    Ok(EllipseSolution { u, p, condition, residual_laplacian_max })
}

/// Solves the Dirichlet problem on the ellipse and returns the harmonic
/// polynomial `u = q − r·p`.
pub fn solve_ellipse(dom: &EllipseDomain, q: &RealPoly2) -> Result<RealPoly2> {
    Ok(solve_ellipse_full(dom, q)?.u)
}
