//! Tables of the affine groups F_q ⋊ F_q^*, interpolated to every q ≥ 2.
//!
//! Rows x_{1,c} (c = 0..q−2) then x_{q−1,1}; columns: identity, k = 1..q−2
//! (class size q), and one column of size q−1.

use exactnum::{root_of_unity, CyclotomicNumber, Rational};

use crate::{ChartError, Eigentable, Family, RowFamily, RowLabel};

pub fn build_etingof_table(q: u64) -> Result<Eigentable, ChartError> {
    if q < 2 {
        return Err(ChartError::InvalidArgument(format!("q must be at least 2, got {q}")));
    }
    let mut rows: Vec<RowLabel> = (0..q - 1).map(|c| RowLabel::new(1, c, RowFamily::Linear)).collect();
    rows.push(RowLabel::new(q - 1, 1, RowFamily::Big));
    let mut sizes = vec![Rational::one()];
    sizes.extend((1..q - 1).map(|_| Rational::from(q)));
    sizes.push(Rational::from(q - 1));
    let one = CyclotomicNumber::one();
    let mut entries: Vec<Vec<CyclotomicNumber>> = (0..q - 1)
        .map(|c| {
            let mut row = vec![one.clone()];
            row.extend((1..q - 1).map(|k| root_of_unity(q - 1, (k * c) as i64).unwrap()));
            row.push(one.clone());
            row
        })
        .collect();
    let mut big = vec![CyclotomicNumber::from_integer(q as i64 - 1)];
    big.extend((1..q - 1).map(|_| CyclotomicNumber::zero()));
    big.push(CyclotomicNumber::from_integer(-1));
    entries.push(big);
    Eigentable::new(Family::Etingof, q, rows, sizes, entries)
}
