//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Typed failures of the solvers, kernels and checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A `z`/`z̄` polynomial was asked to convert to a real polynomial but
    /// its formal-conjugate symmetry fails beyond 1e-12.
    NonRealPolynomial { residual: f64 },
    /// Evaluation requested outside the closed unit disc.
    OutsideDomain { modulus: f64 },
    /// A precondition on the geometric domain of an operation failed.
    DomainViolation(String),
    /// Defining polynomial of an ellipse domain is not of total degree two.
    NotDegreeTwo { degree: i32 },
    /// Quadratic part is not positive definite, so `{r < 0}` is unbounded.
    UnboundedDomain,
    /// `min r >= 0`: the sublevel set `{r < 0}` is empty.
    EmptyInterior { min_value: f64 },
    /// The assembled Dirichlet system is numerically singular.
    SingularSystem { condition: f64 },
    /// Boundary data must vanish at both circle points `1` and `-1` first.
    ShiftRequired { at_one: f64, at_minus_one: f64 },
    /// Polynomial text could not be parsed.
    Parse { offset: usize, message: String },
    /// An input value violated a structural invariant (node counts, plans).
    InvalidSpec(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonRealPolynomial { residual } => write!(
                f,
                "polynomial is not real-valued on the plane (conjugate-symmetry residual {residual:e})"
            ),
            Error::OutsideDomain { modulus } => {
                write!(f, "point with |z| = {modulus} lies outside the closed unit disc")
            }
            Error::DomainViolation(msg) => write!(f, "domain violation: {msg}"),
            Error::NotDegreeTwo { degree } => {
                write!(f, "defining polynomial must have total degree 2, got {degree}")
            }
            Error::UnboundedDomain => {
                write!(f, "quadratic form is not positive definite; sublevel set is unbounded")
            }
            Error::EmptyInterior { min_value } => {
                write!(f, "defining polynomial has minimum {min_value} >= 0; interior is empty")
            }
            Error::SingularSystem { condition } => {
                write!(f, "assembled system is numerically singular (condition estimate {condition:e})")
            }
            Error::ShiftRequired { at_one, at_minus_one } => write!(
                f,
                "boundary data must vanish at ±1 (values {at_one:e}, {at_minus_one:e}); apply affine_shift first"
            ),
            Error::Parse { offset, message } => {
                write!(f, "parse error at byte {offset}: {message}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid specification: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
