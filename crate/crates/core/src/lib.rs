//! Exact arithmetic for eigenforms for real multiplication on genus-two
//! Jacobians, and for the arithmetic geometry of Weierstrass (Teichmueller)
//! curves in Hilbert modular surfaces.
//!
//! The crate is organized around an eigenform location algorithm: given a
//! weighted-projective parametrization of a Hilbert modular surface, a
//! quintic curve model z^2 = f_a(w) and a surface point b, it certifies that
//! the Jacobian of the curve carries real multiplication and factors the
//! certified quadratic differential into a pair of eigenforms. All of it is
//! exact; there is no floating point anywhere in the library.
//!
//! Layers, bottom up:
//!
//! * [`field`], [`quad`], [`fp`], [`unipoly`], [`ratfun`], [`multipoly`],
//!   [`matrix`] — exact coefficient fields and linear algebra.
//! * [`genus2`] — quintic curve models, Igusa-Clebsch invariants, weighted
//!   projective points and chart derivatives.
//! * [`pairing`] — the pairing between quadratic differentials and
//!   deformations of the coefficient vector (matrices M(a) and N(r)).
//! * [`ela`] — the eigenform location algorithm itself, pointwise and over
//!   function fields, plus family certification.
//! * [`cusps`] — splitting prototypes, spin invariants, stable limits and
//!   cuspidal polynomials.
//! * [`arithlab`] — singular primes of integral models, elliptic curve
//!   group law over quadratic fields, divisor tools.
//! * [`modulardata`] — the data registry (JSON on disk, exact rationals as
//!   strings) and its validation.

pub mod arithlab;
pub mod cusps;
pub mod ela;
pub mod field;
pub mod fp;
pub mod genus2;
pub mod matrix;
pub mod modulardata;
pub mod multipoly;
pub mod pairing;
pub mod quad;
pub mod reports;
pub mod ratfun;
pub mod unipoly;

pub use field::Field;
pub use fp::Fp;
pub use matrix::Matrix;
pub use multipoly::MultiPoly;
pub use quad::Quad;
pub use ratfun::RatFun;
pub use unipoly::UniPoly;

/// Crate-wide error type for operations whose failure is part of the
/// contract (as opposed to precondition violations, which panic).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Math(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl From<String> for Error {
    fn from(s: String) -> Self {
        Error::Math(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
