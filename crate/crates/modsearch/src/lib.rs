//! Search for simple integral modular fusion types of small rank.
//!
//! In a pseudo-unitary modular category with simple dimensions d_i and
//! D = Σ d_i², every D/d_i² is an algebraic integer, hence a positive
//! integer. Their pairwise ratios are squares, so they share one square
//! class: D/d_i² = c·s_i² and Σ 1/s_i² = c. The unit has the largest s,
//! and d_i = s_max/s_i. A nonpointed simple candidate has one invertible
//! object only, and no simple of prime-power dimension other than 1.

mod egyptian;
mod search;

pub use egyptian::{enumerate_unit_sum_of_inverse_squares, inverse_square_sum, Enumeration, Multiset};
pub use search::{
    is_prime_power, search_nonpointed_simple_modular_types, search_with, Certificate, FilterCounts,
    ModularTypeCandidate, SearchOptions,
};
