//! Exact arithmetic for generic character tables.
//!
//! [`Rational`] is an arbitrary-precision fraction, [`CyclotomicNumber`] an
//! element of some Q(ζ_N) stored sparsely over a declared order. Equality,
//! rationality and integrality are decided in the power basis modulo Φ_N
//! (see [`cyclopoly`]). [`embed`] gives certified complex enclosures, used
//! only where an exact rational answer is not available.

pub mod cyclopoly;
pub mod cyclotomic;
pub mod interval;
pub mod rational;
pub mod serial;
pub mod sqrt;
pub mod sum;

pub use cyclopoly::CycloField;
pub use cyclotomic::{root_of_unity, CyclotomicNumber};
pub use interval::{embed, precision_cap, sign_real, ComplexInterval, Embedder, RealInterval};
pub use rational::Rational;
pub use serial::TermJson;
pub use sqrt::{gauss_sum, sqrt_integer};
pub use sum::{GroupedSum, SumResult};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("root of unity order must be positive")]
    InvalidOrder,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("sign undecidable at {bits} bits of precision")]
    Undecidable { bits: u32 },
    #[error("value is not real")]
    NotReal,
    #[error("parse error: {0}")]
    Parse(String),
}
