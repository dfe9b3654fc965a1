//! Generic eigentables: the interpolated PSL(2,q) tables behind R_q, the
//! affine-group tables behind T_q, and exact checks of the hypotheses needed
//! to reconstruct a fusion ring from a table.

mod etingof;
mod labels;
mod psl2;
mod table;
pub mod verify;

pub use etingof::build_etingof_table;
pub use labels::{Family, RowFamily, RowLabel};
pub use psl2::build_psl2_table;
pub use table::{column_norm, Eigentable, TableJson};
pub use verify::{
    egyptian_sum, orthogonality_failures, verify_egyptian, verify_reconstruction_assumptions,
    verify_schur_orthogonality, ReconstructionReport,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChartError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed table: {0}")]
    Shape(String),
    #[error("inconsistent table: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Exact(#[from] exactnum::ExactError),
}

/// Table of the given family at q.
pub fn build_table(family: Family, q: u64) -> Result<Eigentable, ChartError> {
    match family {
        Family::Psl2 => build_psl2_table(q),
        Family::Etingof => build_etingof_table(q),
        Family::Custom => Err(ChartError::InvalidArgument("custom tables are read from files".into())),
    }
}
