#![allow(dead_code)]

use dirichlet_core::RealPoly2;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random sparse polynomial of total degree at most `max_degree` with
/// coefficients in [-1, 1].
pub fn random_poly(rng: &mut ChaCha8Rng, max_degree: u32) -> RealPoly2 {
    let mut terms = Vec::new();
    for i in 0..=max_degree {
        for j in 0..=(max_degree - i) {
            if rng.random_range(0.0..1.0) < 0.7 {
                terms.push(((i, j), rng.random_range(-1.0..1.0)));
            }
        }
    }
    RealPoly2::from_terms(terms)
}

pub fn random_point_in_disc(rng: &mut ChaCha8Rng, rmax: f64) -> Complex64 {
    loop {
        let x = rng.random_range(-rmax..rmax);
        let y = rng.random_range(-rmax..rmax);
        if x * x + y * y <= rmax * rmax {
            return Complex64::new(x, y);
        }
    }
}

pub fn assert_close(a: f64, b: f64, tol: f64) {
    assert!((a - b).abs() <= tol, "{a} vs {b} (tol {tol})");
}
