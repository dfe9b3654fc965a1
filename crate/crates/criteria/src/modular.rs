//! The divisibility obstruction to modular categorification: in a
//! pseudo-unitary modular category, FPdim(x)² divides FPdim of the category.

use fusionring::{fpdims, FusionRing};

use crate::{Criterion, CriterionReport, Method, Witness};

/// Basis elements with d_i² ∤ FPdim(R), with their dimensions.
pub fn divisibility_failures(dims: &[u64]) -> Vec<usize> {
    let total: u128 = dims.iter().map(|&d| d as u128 * d as u128).sum();
    (0..dims.len()).filter(|&i| total % (dims[i] as u128 * dims[i] as u128) != 0).collect()
}

/// Fails (obstruction present) when some d_i² does not divide FPdim(R).
/// The witness lists every such i, followed by FPdim(R) and their d_i.
pub fn modular_divisibility(ring: &FusionRing) -> CriterionReport {
    let c = Criterion::ModularDivisibility;
    let dims = match fpdims(ring, None) {
        Ok(d) => d,
        Err(e) => {
            return CriterionReport::fail(c, Method::Exact, Witness::new(vec![], vec![e.to_string()]), "ring is not integral")
        }
    };
    let total: u128 = dims.iter().map(|&d| d as u128 * d as u128).sum();
    let bad = divisibility_failures(&dims);
    if bad.is_empty() {
        return CriterionReport::pass(c, Method::Exact, "every d_i² divides FPdim(R)");
    }
    let mut values = vec![total.to_string()];
    values.extend(bad.iter().map(|&i| dims[i].to_string()));
    CriterionReport::fail(
        c,
        Method::Exact,
        Witness::new(bad, values),
        "d_i² does not divide FPdim(R): no pseudo-unitary modular categorification",
    )
}
