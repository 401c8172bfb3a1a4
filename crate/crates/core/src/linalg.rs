//! Exact rank computations on sparse integer rows.
//!
//! Rows are inserted one at a time into an echelon basis keyed by leading
//! column. Over the rationals the elimination is fraction-free with content
//! removal after every step; over a prime field it is ordinary elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// Coefficient field for rank and homology computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    /// `GF(p)`; `p` must be prime and below `2^31`.
    Prime(u64),
}

/// Sparse row: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

fn content(row: &SparseRow) -> BigInt {
    row.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v))
}

fn normalize(row: &mut SparseRow) {
    let g = content(row);
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in row.iter_mut() {
            *v = -&*v;
        }
    }
}

/// `a·row − b·pivot`, dropping zeros.
fn combine(row: &SparseRow, a: &BigInt, pivot: &SparseRow, b: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, a * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(b * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, a * &row[i - 1].1 - b * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

/// Incremental echelon basis over the rationals.
#[derive(Debug, Default)]
pub struct RationalEchelon {
    pivots: BTreeMap<usize, SparseRow>,
}

impl RationalEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        normalize(&mut row);
        while let Some((lead, lead_val)) = row.first().cloned() {
            match self.pivots.get(&lead) {
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(pivot) => {
                    let p = &pivot[0].1;
                    let g = p.gcd(&lead_val);
                    row = combine(&row, &(p / &g), pivot, &(&lead_val / &g));
                    normalize(&mut row);
                }
            }
        }
        false
    }
}

/// Incremental echelon basis over `GF(p)`, pivots scaled to 1.
#[derive(Debug)]
pub struct ModularEchelon {
    p: u64,
    pivots: BTreeMap<usize, Vec<(usize, u64)>>,
}

impl ModularEchelon {
    pub fn new(p: u64) -> Self {
        assert!((2..1 << 31).contains(&p), "modulus out of range");
        ModularEchelon {
            p,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat: a^(p-2).
        let (mut base, mut exp, mut acc) = (a % self.p, self.p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    pub fn insert(&mut self, row: &SparseRow) -> bool {
        let p = self.p;
        let modp = |v: &BigInt| -> u64 {
            let r = v.mod_floor(&BigInt::from(p));
            u64::try_from(r).expect("residue fits")
        };
        let mut dense: BTreeMap<usize, u64> = row
            .iter()
            .map(|(c, v)| (*c, modp(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some((&lead, &lead_val)) = dense.iter().next() {
            match self.pivots.get(&lead) {
                None => {
                    let inv = self.inverse(lead_val);
                    let scaled = dense.into_iter().map(|(c, v)| (c, v * inv % p)).collect();
                    self.pivots.insert(lead, scaled);
                    return true;
                }
                Some(pivot) => {
                    for &(c, pv) in pivot {
                        let e = dense.entry(c).or_insert(0);
                        *e = (*e + p - lead_val * pv % p) % p;
                        if *e == 0 {
                            dense.remove(&c);
                        }
                    }
                }
            }
        }
        false
    }
}

/// Rank of a set of sparse rows over `field`.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>, field: Field) -> usize {
    match field {
        Field::Rational => {
            let mut e = RationalEchelon::new();
            for r in rows {
                e.insert(r);
            }
            e.rank()
        }
        Field::Prime(p) => {
            let mut e = ModularEchelon::new(p);
            for r in rows {
                e.insert(&r);
            }
            e.rank()
        }
    }
}

/// Converts a dense row to sparse form.
pub fn sparse(dense: &[i64]) -> SparseRow {
    dense
        .iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(c, &v)| (c, BigInt::from(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::IntMatrix;
    use proptest::prelude::*;

    fn dense_rank(rows: &[Vec<i64>], field: Field) -> usize {
        rank(rows.iter().map(|r| sparse(r)), field)
    }

    #[test]
    fn small_cases() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(dense_rank(&rows, Field::Rational), 2);
        assert_eq!(dense_rank(&rows, Field::Prime(32003)), 2);
        // Full rank over Q, singular mod 2.
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(dense_rank(&rows, Field::Rational), 2);
        assert_eq!(dense_rank(&rows, Field::Prime(2)), 1);
        assert_eq!(dense_rank(&[], Field::Rational), 0);
        assert_eq!(dense_rank(&[vec![0, 0]], Field::Rational), 0);
    }

    #[test]
    fn insert_reports_independence() {
        let mut e = RationalEchelon::new();
        assert!(e.insert(sparse(&[0, 3, 6])));
        assert!(!e.insert(sparse(&[0, -1, -2])));
        assert!(e.insert(sparse(&[5, 0, 1])));
        assert_eq!(e.rank(), 2);
    }

    proptest! {
        #[test]
        fn square_rank_agrees_with_determinant(
            n in 1usize..6,
            entries in proptest::collection::vec(-3i64..4, 36),
        ) {
            let rows: Vec<Vec<i64>> = (0..n).map(|r| entries[r * 6..r * 6 + n].to_vec()).collect();
            let full = !IntMatrix::from_rows(&rows).det().is_zero();
            prop_assert_eq!(dense_rank(&rows, Field::Rational) == n, full);
        }

        #[test]
        fn rank_is_row_order_invariant(
            entries in proptest::collection::vec(-2i64..3, 20),
        ) {
            let rows: Vec<Vec<i64>> = entries.chunks(5).map(<[i64]>::to_vec).collect();
            let mut rev = rows.clone();
            rev.reverse();
            let a = dense_rank(&rows, Field::Rational);
            prop_assert_eq!(a, dense_rank(&rev, Field::Rational));
            prop_assert!(dense_rank(&rows, Field::Prime(32003)) <= a);
        }
    }
}
