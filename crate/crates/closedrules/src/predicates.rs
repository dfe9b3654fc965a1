//! The index conditions attached to the sums in the fusion rules.

/// Kronecker δ as an integer coefficient.
pub fn delta(a: u64, b: u64) -> i64 {
    i64::from(a == b)
}

/// "c_1 + c_2 + c_3 = target or 2·max(c_1, c_2, c_3)".
///
/// The complementary condition "≠ target and 2·max" is its negation: the sum
/// differs from both quantities.
pub fn sum_is_special(c1: u64, c2: u64, c3: u64, target: u64) -> bool {
    let s = c1 + c2 + c3;
    s == target || s == 2 * c1.max(c2).max(c3)
}
