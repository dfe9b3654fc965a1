//! Fusion rings stored as a flat tensor N_{i,j}^k, with checks of the ring
//! axioms and the usual structural statistics.

mod axioms;
mod dims;
mod ring;

pub use axioms::{verify_axioms, Axiom, AxiomReport, Violation};
pub use dims::{fpdims, is_frobenius_type, is_simple, multiplicity, self_dual_count, FusionType};
pub use ring::{FusionRing, RingJson};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("malformed ring: {0}")]
    Shape(String),
    #[error("inconsistent table: {0}")]
    Inconsistent(String),
    #[error("non-integral dimensions: {0}")]
    NonIntegral(String),
    #[error("json: {0}")]
    Json(String),
}
