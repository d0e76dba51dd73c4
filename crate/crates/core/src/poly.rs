//! Sparse bivariate polynomial algebra over the real `(x, y)` and complex
//! `(z, z̄)` monomial bases.
//!
//! Both polynomial types store a map from exponent pairs to coefficients in
//! graded-lexicographic order, prune coefficients with magnitude at or below
//! [`PRUNE_TOL`] after every operation, and evaluate termwise in map order so
//! sums are reproducible bit for bit.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
#[allow(unused_imports)] // needed for float math in pure no_std builds
use num_traits::Float;

use crate::error::{Error, Result};

/// Coefficients with magnitude at or below this are dropped from storage.
pub const PRUNE_TOL: f64 = 1e-14;

/// Exponent pair of a bivariate monomial.
///
/// For [`RealPoly2`] the components are the powers of `x` and `y`; for
/// [`ComplexPolyZZbar`] they are the powers of `z` and `z̄`. The ordering is
/// graded lexicographic: lower total degree first, and within a degree the
/// power of the first variable descends (`1 < x < y < x² < xy < y² < …`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
}

impl Monomial {
    pub fn new(a: u32, b: u32) -> Self {
        Monomial { a, b }
    }

    pub fn total_degree(&self) -> u32 {
        self.a + self.b
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(other.a.cmp(&self.a))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Binomial coefficient as a float. Exact for every value that fits in the
/// 53-bit mantissa, which covers all degrees this crate assembles.
pub(crate) fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    // round to the nearest integer: the product is integral in exact arithmetic
    (acc + 0.5).floor()
}

/// Sparse real polynomial in `(x, y)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct RealPoly2 {
    terms: BTreeMap<Monomial, f64>,
}

impl RealPoly2 {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: f64) -> Self {
        let mut p = Self::default();
        p.insert_add(Monomial::new(0, 0), c);
        p
    }

    /// The coordinate polynomial `x`.
    pub fn var_x() -> Self {
        Self::from_terms([((1, 0), 1.0)])
    }

    /// The coordinate polynomial `y`.
    pub fn var_y() -> Self {
        Self::from_terms([((0, 1), 1.0)])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), f64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for ((a, b), c) in terms {
            p.insert_add(Monomial::new(a, b), c);
        }
        p
    }

    /// Adds `c` to the coefficient of the monomial, pruning if the result is
    /// at or below [`PRUNE_TOL`].
    pub fn insert_add(&mut self, m: Monomial, c: f64) {
        let entry = self.terms.entry(m).or_insert(0.0);
        *entry += c;
        if entry.abs() <= PRUNE_TOL {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial has degree -1.
    pub fn degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i32)
            .max()
            .unwrap_or(-1)
    }

    pub fn coeff(&self, a: u32, b: u32) -> f64 {
        self.terms.get(&Monomial::new(a, b)).copied().unwrap_or(0.0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, f64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Termwise evaluation in graded-lex order.
    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut sum = 0.0;
        for (m, c) in self.terms.iter() {
            sum += c * x.powi(m.a as i32) * y.powi(m.b as i32);
        }
        sum
    }

    /// Evaluation at the complex point `z = x + iy`.
    pub fn eval_at(&self, z: Complex64) -> f64 {
        self.eval(z.re, z.im)
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = Self::default();
        for (m, c) in self.terms.iter() {
            out.insert_add(*m, c * s);
        }
        out
    }
}

impl Add for &RealPoly2 {
    type Output = RealPoly2;
    fn add(self, rhs: &RealPoly2) -> RealPoly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_add(*m, *c);
        }
        out
    }
}

impl Sub for &RealPoly2 {
    type Output = RealPoly2;
    fn sub(self, rhs: &RealPoly2) -> RealPoly2 {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_add(*m, -*c);
        }
        out
    }
}

impl Mul for &RealPoly2 {
    type Output = RealPoly2;
    fn mul(self, rhs: &RealPoly2) -> RealPoly2 {
        let mut out = RealPoly2::default();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.insert_add(Monomial::new(ma.a + mb.a, ma.b + mb.b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &RealPoly2 {
    type Output = RealPoly2;
    fn neg(self) -> RealPoly2 {
        self.scale(-1.0)
    }
}

/// Sparse complex polynomial in `(z, z̄)`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ComplexPolyZZbar {
    terms: BTreeMap<Monomial, Complex64>,
}

impl ComplexPolyZZbar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Complex64) -> Self {
        let mut p = Self::default();
        p.insert_add(Monomial::new(0, 0), c);
        p
    }

    /// The monomial `zⁿ z̄ᵐ` with unit coefficient.
    pub fn monomial(n: u32, m: u32) -> Self {
        Self::from_terms([((n, m), Complex64::new(1.0, 0.0))])
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, u32), Complex64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for ((n, m), c) in terms {
            p.insert_add(Monomial::new(n, m), c);
        }
        p
    }

    pub fn insert_add(&mut self, m: Monomial, c: Complex64) {
        let entry = self.terms.entry(m).or_insert(Complex64::new(0.0, 0.0));
        *entry += c;
        if entry.norm() <= PRUNE_TOL {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> i32 {
        self.terms
            .keys()
            .map(|m| m.total_degree() as i32)
            .max()
            .unwrap_or(-1)
    }

    pub fn coeff(&self, n: u32, m: u32) -> Complex64 {
        self.terms
            .get(&Monomial::new(n, m))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Complex64)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `true` iff every stored term has `m = 0` (a polynomial in `z` alone).
    pub fn is_analytic(&self) -> bool {
        self.terms.keys().all(|m| m.b == 0)
    }

    /// `true` iff every stored term has `n = 0` (a polynomial in `z̄` alone).
    pub fn is_anti_analytic(&self) -> bool {
        self.terms.keys().all(|m| m.a == 0)
    }

    /// The formal conjugate: swaps `(n, m) -> (m, n)` and conjugates each
    /// coefficient. Equals the pointwise conjugate on the plane.
    pub fn formal_conjugate(&self) -> Self {
        let mut out = Self::default();
        for (m, c) in self.terms.iter() {
            out.insert_add(Monomial::new(m.b, m.a), c.conj());
        }
        out
    }

    /// Largest deviation from conjugate symmetry; zero for polynomials that
    /// are real-valued on the plane.
    pub fn conjugate_symmetry_residual(&self) -> f64 {
        let mut res = 0.0f64;
        for (m, c) in self.terms.iter() {
            let mirror = self.coeff(m.b, m.a);
            res = res.max((*c - mirror.conj()).norm());
        }
        res
    }

    /// Termwise evaluation of `Σ c zⁿ z̄ᵐ` in graded-lex order.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let zb = z.conj();
        let mut sum = Complex64::new(0.0, 0.0);
        for (m, c) in self.terms.iter() {
            sum += c * z.powi(m.a as i32) * zb.powi(m.b as i32);
        }
        sum
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let mut out = Self::default();
        for (m, c) in self.terms.iter() {
            out.insert_add(*m, c * s);
        }
        out
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().fold(0.0, |m, c| m.max(c.norm()))
    }
}

impl Add for &ComplexPolyZZbar {
    type Output = ComplexPolyZZbar;
    fn add(self, rhs: &ComplexPolyZZbar) -> ComplexPolyZZbar {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_add(*m, *c);
        }
        out
    }
}

impl Sub for &ComplexPolyZZbar {
    type Output = ComplexPolyZZbar;
    fn sub(self, rhs: &ComplexPolyZZbar) -> ComplexPolyZZbar {
        let mut out = self.clone();
        for (m, c) in rhs.terms.iter() {
            out.insert_add(*m, -*c);
        }
        out
    }
}

impl Mul for &ComplexPolyZZbar {
    type Output = ComplexPolyZZbar;
    fn mul(self, rhs: &ComplexPolyZZbar) -> ComplexPolyZZbar {
        let mut out = ComplexPolyZZbar::default();
        for (ma, ca) in self.terms.iter() {
            for (mb, cb) in rhs.terms.iter() {
                out.insert_add(Monomial::new(ma.a + mb.a, ma.b + mb.b), ca * cb);
            }
        }
        out
    }
}

/// Which Wirtinger operator to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wirtinger {
    DDz,
    DDzbar,
}

/// Termwise formal Wirtinger derivative: `∂/∂z` sends `zⁿz̄ᵐ` to `n·zⁿ⁻¹z̄ᵐ`,
/// `∂/∂z̄` sends it to `m·zⁿz̄ᵐ⁻¹`.
pub fn wirtinger(q: &ComplexPolyZZbar, which: Wirtinger) -> ComplexPolyZZbar {
    let mut out = ComplexPolyZZbar::default();
    for (m, c) in q.terms() {
        match which {
            Wirtinger::DDz => {
                if m.a > 0 {
                    out.insert_add(Monomial::new(m.a - 1, m.b), c * m.a as f64);
                }
            }
            Wirtinger::DDzbar => {
                if m.b > 0 {
                    out.insert_add(Monomial::new(m.a, m.b - 1), c * m.b as f64);
                }
            }
        }
    }
    out
}

/// `∂²p/∂x² + ∂²p/∂y²`, termwise.
pub fn laplacian(p: &RealPoly2) -> RealPoly2 {
    let mut out = RealPoly2::default();
    for (m, c) in p.terms() {
        if m.a >= 2 {
            out.insert_add(
                Monomial::new(m.a - 2, m.b),
                c * (m.a as f64) * (m.a as f64 - 1.0),
            );
        }
        if m.b >= 2 {
            out.insert_add(
                Monomial::new(m.a, m.b - 2),
                c * (m.b as f64) * (m.b as f64 - 1.0),
            );
        }
    }
    out
}

const I_POWERS: [Complex64; 4] = [
    Complex64::new(1.0, 0.0),
    Complex64::new(0.0, 1.0),
    Complex64::new(-1.0, 0.0),
    Complex64::new(0.0, -1.0),
];

/// Substitutes `x = (z + z̄)/2`, `y = (z − z̄)/(2i)` and expands.
pub fn to_zzbar(p: &RealPoly2) -> ComplexPolyZZbar {
    let mut out = ComplexPolyZZbar::default();
    for (m, c) in p.terms() {
        let (i, j) = (m.a, m.b);
        let scale = 0.5f64.powi((i + j) as i32);
        // (1/(2i))^j = (-i/2)^j ; the (-i)^j factor cycles with period 4
        let rot = I_POWERS[((4 - (j % 4)) % 4) as usize];
        for a in 0..=i {
            let ca = binomial(i, a);
            for b in 0..=j {
                let sign = if (j - b) % 2 == 0 { 1.0 } else { -1.0 };
                let coeff = rot * (c * scale * ca * binomial(j, b) * sign);
                out.insert_add(Monomial::new(a + b, (i - a) + (j - b)), coeff);
            }
        }
    }
    out
}

/// Substitutes `z = x + iy`, `z̄ = x − iy` and expands.
///
/// Fails with [`Error::NonRealPolynomial`] unless `q` equals its own formal
/// conjugate within 1e-12 coefficient-wise, i.e. unless `q` is real-valued
/// on the plane.
pub fn from_zzbar(q: &ComplexPolyZZbar) -> Result<RealPoly2> {
    let residual = q.conjugate_symmetry_residual();
    if residual > 1e-12 {
        return Err(Error::NonRealPolynomial { residual });
    }
    // accumulate complex, then keep real parts; imaginary parts cancel by the
    // symmetry just checked
    let mut acc: BTreeMap<Monomial, Complex64> = BTreeMap::new();
    for (m, c) in q.terms() {
        let (n, mm) = (m.a, m.b);
        for a in 0..=n {
            let ia = I_POWERS[((n - a) % 4) as usize];
            let ca = binomial(n, a);
            for b in 0..=mm {
                let ib = I_POWERS[((4 - ((mm - b) % 4)) % 4) as usize];
                let coeff = c * ia * ib * (ca * binomial(mm, b));
                let key = Monomial::new(a + b, (n - a) + (mm - b));
                *acc.entry(key).or_insert(Complex64::new(0.0, 0.0)) += coeff;
            }
        }
    }
    let mut out = RealPoly2::default();
    for (m, c) in acc {
        out.insert_add(m, c.re);
    }
    Ok(out)
}
