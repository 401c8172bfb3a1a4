use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;

/// Dense square matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(BigInt::from(f(r, c)));
            }
        }
        IntMatrix { dim, data }
    }

    /// Row-major entries; panics unless there are exactly `dim * dim` of them.
    pub fn from_entries(dim: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), dim * dim, "wrong number of entries");
        IntMatrix { dim, data }
    }

    /// Panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        IntMatrix::from_fn(dim, |r, c| rows[r][c])
    }

    pub fn identity(dim: usize) -> Self {
        IntMatrix::from_fn(dim, |r, c| i64::from(r == c))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.dim + c]
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Every division in the update is exact, so entries stay integral and
    /// bounded by the minors of the input.
    pub fn det(&self) -> BigInt {
        let n = self.dim;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|r| self.data[r * n..(r + 1) * n].to_vec()).collect();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Laplace expansion along the first row.
    fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for c in 0..n {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let term = BigInt::from(m[0][c]) * cofactor_det(&minor);
            if c % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }

    #[test]
    fn examples() {
        let q_k4 = IntMatrix::from_rows(&[vec![3, 1, 1], vec![1, 3, 1], vec![1, 1, 3]]);
        assert_eq!(q_k4.det(), BigInt::from(20));
        let q_h = IntMatrix::from_rows(&[vec![4, 1, 1, 1], vec![1, 4, 1, 1], vec![1, 1, 3, 0], vec![1, 1, 0, 3]]);
        assert_eq!(q_h.det(), BigInt::from(99));
        assert_eq!(IntMatrix::identity(3).det(), BigInt::from(1));
        assert_eq!(IntMatrix::identity(0).det(), BigInt::from(1));
    }

    #[test]
    fn needs_pivoting() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.det(), BigInt::from(-1));
        let singular = IntMatrix::from_rows(&[vec![0, 0], vec![1, 5]]);
        assert_eq!(singular.det(), BigInt::zero());
    }

    proptest! {
        #[test]
        fn matches_cofactor_expansion(
            n in 1usize..6,
            entries in proptest::collection::vec(-9i64..10, 36),
        ) {
            let rows: Vec<Vec<i64>> = (0..n).map(|r| entries[r * 6..r * 6 + n].to_vec()).collect();
            prop_assert_eq!(IntMatrix::from_rows(&rows).det(), cofactor_det(&rows));
        }
    }
}
