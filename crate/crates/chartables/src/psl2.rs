//! The three interpolated generic tables of PSL(2,q), for every q ≥ 2.
//!
//! Rows and columns follow the printed block order, which downstream golden
//! data depends on:
//!
//! * q even: rows 1, x_{q−1,c} (c ≤ q/2), x_{q,1}, x_{q+1,c} (c ≤ (q−2)/2);
//!   columns 1, u, a_k (k ≤ (q−2)/2, ζ_{q−1}), b_k (k ≤ q/2, ζ_{q+1}).
//! * q ≡ 3 mod 4: rows 1, x_{(q−1)/2,c} (c ≤ 2), x_{q−1,c}, x_{q,1}, x_{q+1,c}
//!   (c ≤ (q−3)/4); columns 1, p_1, p_2, a_k, b_k (k ≤ (q−3)/4), then the lone
//!   column k = (q+1)/4.
//! * q ≡ 1 mod 4: rows 1, x_{(q+1)/2,c} (c ≤ 2), x_{q−1,c} (c ≤ (q−1)/4),
//!   x_{q,1}, x_{q+1,c} (c ≤ (q−5)/4); columns 1, p_1, p_2, a_k (k ≤ (q−5)/4),
//!   the lone column k = (q−1)/4, b_k (k ≤ (q−1)/4).

use exactnum::{root_of_unity, sqrt_integer, CyclotomicNumber, Rational};

use crate::{ChartError, Eigentable, Family, RowFamily, RowLabel};

fn int(n: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_integer(n)
}

fn sign(e: u64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// ζ_n^m + ζ_n^{−m}.
fn pair(n: u64, m: i64) -> CyclotomicNumber {
    CyclotomicNumber::from_terms(n, [(m, Rational::one()), (-m, Rational::one())]).expect("n > 0")
}

fn labels(blocks: &[(u64, RowFamily, u64)]) -> Vec<RowLabel> {
    let mut out = vec![RowLabel::new(1, 1, RowFamily::Trivial)];
    for &(degree, fam, count) in blocks {
        out.extend((1..=count).map(|c| RowLabel::new(degree, c, fam)));
    }
    out
}

pub fn build_psl2_table(q: u64) -> Result<Eigentable, ChartError> {
    if q < 2 {
        return Err(ChartError::InvalidArgument(format!("q must be at least 2, got {q}")));
    }
    if q % 2 == 0 {
        even(q)
    } else if q % 4 == 3 {
        three_mod_four(q)
    } else {
        one_mod_four(q)
    }
}

fn even(q: u64) -> Result<Eigentable, ChartError> {
    let (na, nb) = ((q - 2) / 2, q / 2);
    let rows = labels(&[
        (q - 1, RowFamily::Minus, q / 2),
        (q, RowFamily::Steinberg, 1),
        (q + 1, RowFamily::Plus, (q - 2) / 2),
    ]);
    let mut sizes = vec![Rational::one(), Rational::from(q * q - 1)];
    sizes.extend((0..na).map(|_| Rational::from(q * (q + 1))));
    sizes.extend((0..nb).map(|_| Rational::from(q * (q - 1))));
    let qi = q as i64;
    let entries = rows
        .iter()
        .map(|lab| {
            let c = lab.charparam as i64;
            let mut row = Vec::with_capacity(rows.len());
            match lab.family {
                RowFamily::Trivial => row.extend((0..rows.len()).map(|_| int(1))),
                RowFamily::Minus => {
                    row.push(int(qi - 1));
                    row.push(int(-1));
                    row.extend((0..na).map(|_| int(0)));
                    row.extend((1..=nb as i64).map(|k| -pair(q + 1, k * c)));
                }
                RowFamily::Steinberg => {
                    row.push(int(qi));
                    row.push(int(0));
                    row.extend((0..na).map(|_| int(1)));
                    row.extend((0..nb).map(|_| int(-1)));
                }
                RowFamily::Plus => {
                    row.push(int(qi + 1));
                    row.push(int(1));
                    row.extend((1..=na as i64).map(|k| pair(q - 1, k * c)));
                    row.extend((0..nb).map(|_| int(0)));
                }
                _ => unreachable!(),
            }
            row
        })
        .collect();
    Eigentable::new(Family::Psl2, q, rows, sizes, entries)
}

/// (u + i^{[imag]}·s·√q)/2 with s = ±1, where `imag` selects i√q = ζ_4·√q.
fn half_entry(u: i64, s: i64, q: u64, imag: bool) -> CyclotomicNumber {
    let mut root = sqrt_integer(q).expect("q ≥ 1");
    if imag {
        root = &root_of_unity(4, 1).unwrap() * &root;
    }
    (int(u) + root.scale(&Rational::from_integer(s))).scale(&Rational::new(1, 2))
}

fn three_mod_four(q: u64) -> Result<Eigentable, ChartError> {
    let m = (q - 3) / 4;
    let lone = ((q + 1) / 4) as u64;
    let rows = labels(&[
        ((q - 1) / 2, RowFamily::Half, 2),
        (q - 1, RowFamily::Minus, m),
        (q, RowFamily::Steinberg, 1),
        (q + 1, RowFamily::Plus, m),
    ]);
    let mut sizes = vec![Rational::one()];
    sizes.extend((0..2).map(|_| Rational::from((q * q - 1) / 2)));
    sizes.extend((0..m).map(|_| Rational::from(q * (q + 1))));
    sizes.extend((0..m).map(|_| Rational::from(q * (q - 1))));
    sizes.push(Rational::from(q * (q - 1) / 2));
    let qi = q as i64;
    let entries = rows
        .iter()
        .map(|lab| {
            let c = lab.charparam;
            let ci = c as i64;
            let mut row = Vec::with_capacity(rows.len());
            match lab.family {
                RowFamily::Trivial => row.extend((0..rows.len()).map(|_| int(1))),
                RowFamily::Half => {
                    row.push(int((qi - 1) / 2));
                    row.extend((1..=2u64).map(|k| half_entry(-1, sign(k + c), q, true)));
                    row.extend((0..m).map(|_| int(0)));
                    row.extend((1..=m).map(|k| int(sign(k + 1))));
                    row.push(int(sign(lone + 1)));
                }
                RowFamily::Minus => {
                    row.push(int(qi - 1));
                    row.extend((0..2).map(|_| int(-1)));
                    row.extend((0..m).map(|_| int(0)));
                    row.extend((1..=m as i64).map(|k| -pair(q + 1, 2 * k * ci)));
                    row.push(int(-2 * sign(c)));
                }
                RowFamily::Steinberg => {
                    row.push(int(qi));
                    row.extend((0..2).map(|_| int(0)));
                    row.extend((0..m).map(|_| int(1)));
                    row.extend((0..m).map(|_| int(-1)));
                    row.push(int(-1));
                }
                RowFamily::Plus => {
                    row.push(int(qi + 1));
                    row.extend((0..2).map(|_| int(1)));
                    row.extend((1..=m as i64).map(|k| pair(q - 1, 2 * k * ci)));
                    row.extend((0..m).map(|_| int(0)));
                    row.push(int(0));
                }
                _ => unreachable!(),
            }
            row
        })
        .collect();
    Eigentable::new(Family::Psl2, q, rows, sizes, entries)
}

fn one_mod_four(q: u64) -> Result<Eigentable, ChartError> {
    let na = if q >= 5 { (q - 5) / 4 } else { 0 };
    let nb = (q - 1) / 4;
    let lone = (q - 1) / 4;
    let rows = labels(&[
        ((q + 1) / 2, RowFamily::Half, 2),
        (q - 1, RowFamily::Minus, nb),
        (q, RowFamily::Steinberg, 1),
        (q + 1, RowFamily::Plus, na),
    ]);
    let mut sizes = vec![Rational::one()];
    sizes.extend((0..2).map(|_| Rational::from((q * q - 1) / 2)));
    sizes.extend((0..na).map(|_| Rational::from(q * (q + 1))));
    sizes.push(Rational::from(q * (q + 1) / 2));
    sizes.extend((0..nb).map(|_| Rational::from(q * (q - 1))));
    let qi = q as i64;
    let entries = rows
        .iter()
        .map(|lab| {
            let c = lab.charparam;
            let ci = c as i64;
            let mut row = Vec::with_capacity(rows.len());
            match lab.family {
                RowFamily::Trivial => row.extend((0..rows.len()).map(|_| int(1))),
                RowFamily::Half => {
                    row.push(int((qi + 1) / 2));
                    row.extend((1..=2u64).map(|k| half_entry(1, sign(k + c), q, false)));
                    row.extend((1..=na).map(|k| int(sign(k))));
                    row.push(int(sign(lone)));
                    row.extend((0..nb).map(|_| int(0)));
                }
                RowFamily::Minus => {
                    row.push(int(qi - 1));
                    row.extend((0..2).map(|_| int(-1)));
                    row.extend((0..na).map(|_| int(0)));
                    row.push(int(0));
                    row.extend((1..=nb as i64).map(|k| -pair(q + 1, 2 * k * ci)));
                }
                RowFamily::Steinberg => {
                    row.push(int(qi));
                    row.extend((0..2).map(|_| int(0)));
                    row.extend((0..na).map(|_| int(1)));
                    row.push(int(1));
                    row.extend((0..nb).map(|_| int(-1)));
                }
                RowFamily::Plus => {
                    row.push(int(qi + 1));
                    row.extend((0..2).map(|_| int(1)));
                    row.extend((1..=na as i64).map(|k| pair(q - 1, 2 * k * ci)));
                    row.push(int(2 * sign(c)));
                    row.extend((0..nb).map(|_| int(0)));
                }
                _ => unreachable!(),
            }
            row
        })
        .collect();
    Eigentable::new(Family::Psl2, q, rows, sizes, entries)
}
