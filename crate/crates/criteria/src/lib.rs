//! Numerical categorification criteria for commutative fusion rings.
//!
//! Table criteria take an eigentable; the spectrum criteria and the modular
//! divisibility check take a fusion ring. Every decision is exact: a sign
//! that cannot be certified within the precision cap gives `Undecided`.

mod modular;
mod report;
mod spectrum;
mod table;

use chartables::{build_table, ChartError, Eigentable, Family};
use fusionring::FusionRing;
use verlinde::VerlindeError;

pub use modular::{divisibility_failures, modular_divisibility};
pub use report::{Criterion, CriterionReport, Method, Verdict, Witness};
pub use spectrum::{
    one_cover, one_spectrum, zero_cover, zero_spectrum, OneTuple, SearchOutcome, SpectrumData, SpectrumMode,
    ZeroTuple,
};
pub use table::{
    drinfeld_center, extended_cyclotomic, frobenius, inverse_square_codegree_sum, isaacs, ostrik, schur_product,
    schur_value, schur_values, SchurValue,
};

#[derive(Debug, thiserror::Error)]
pub enum CriteriaError {
    #[error(transparent)]
    Table(#[from] ChartError),
    #[error(transparent)]
    Reconstruction(#[from] VerlindeError),
}

/// The criteria [`run_all`] evaluates. The modular divisibility check is
/// left out: it concerns braided categorifications only, and the interpolated
/// rings fail it by design.
pub const CATEGORIFICATION_CRITERIA: [Criterion; 8] = [
    Criterion::Schur,
    Criterion::Ostrik,
    Criterion::Drinfeld,
    Criterion::Cyclotomic,
    Criterion::Isaacs,
    Criterion::Frobenius,
    Criterion::ZeroSpectrum,
    Criterion::OneSpectrum,
];

/// Evaluates one criterion. `ring` is needed for the spectrum criteria and
/// the modular divisibility check.
pub fn evaluate(c: Criterion, t: &Eigentable, ring: &FusionRing, spectrum: SpectrumMode) -> CriterionReport {
    match c {
        Criterion::Schur => schur_product(t),
        Criterion::Ostrik => ostrik(t),
        Criterion::Drinfeld => drinfeld_center(t),
        Criterion::Cyclotomic => extended_cyclotomic(t),
        Criterion::Isaacs => isaacs(t),
        Criterion::Frobenius => frobenius(t),
        Criterion::ZeroSpectrum => zero_spectrum(ring, spectrum),
        Criterion::OneSpectrum => one_spectrum(ring, spectrum),
        Criterion::ModularDivisibility => modular_divisibility(ring),
    }
}

/// Builds the table and ring for (q, family) and evaluates `which`, sorted
/// by criterion.
pub fn run_selected(
    q: u64,
    family: Family,
    which: &[Criterion],
    spectrum: SpectrumMode,
) -> Result<Vec<CriterionReport>, CriteriaError> {
    let t = build_table(family, q)?;
    let ring = verlinde::reconstruct(&t)?;
    let mut which = which.to_vec();
    which.sort();
    which.dedup();
    Ok(which.into_iter().map(|c| evaluate(c, &t, &ring, spectrum)).collect())
}

/// Every categorification criterion, spectrum criteria in fast mode.
pub fn run_all(q: u64, family: Family) -> Result<Vec<CriterionReport>, CriteriaError> {
    run_selected(q, family, &CATEGORIFICATION_CRITERIA, SpectrumMode::Fast)
}
