use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::IntLinError;

/// Dense matrix of arbitrary-precision integers, stored row-major.
///
/// Dimensions are fixed at construction and entries cannot be modified
/// through the public API.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// All-ones square matrix.
    pub fn ones(n: usize) -> Self {
        IntMatrix {
            rows: n,
            cols: n,
            data: vec![BigInt::one(); n * n],
        }
    }

    /// Builds a matrix from rows of anything convertible into `BigInt`.
    ///
    /// An empty slice gives a `0 x 0` matrix; use [`IntMatrix::from_big_rows`]
    /// to build a matrix with zero rows but a known column count.
    pub fn from_rows<T>(rows: &[Vec<T>]) -> Result<Self, IntLinError>
    where
        T: Clone + Into<BigInt>,
    {
        let cols = rows.first().map_or(0, Vec::len);
        let big = rows
            .iter()
            .map(|r| r.iter().cloned().map(Into::into).collect())
            .collect();
        Self::from_big_rows(cols, big)
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, IntLinError> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n_rows = rows.len();
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(IntLinError::RaggedRow {
                    row: i,
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(IntMatrix {
            rows: n_rows,
            cols,
            data,
        })
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0 || self.cols == 0
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[BigInt]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.iter_rows().map(<[BigInt]>::to_vec).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix::from_raw(self.cols, self.rows, data)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix, IntLinError> {
        if self.cols != other.rows {
            return Err(IntLinError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product `self * v`.
    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, IntLinError> {
        if v.len() != self.cols {
            return Err(IntLinError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(self
            .iter_rows()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    /// Returns the matrix whose column `j` is column `perm[j]` of `self`.
    pub fn select_columns(&self, perm: &[usize]) -> Result<IntMatrix, IntLinError> {
        for &c in perm {
            if c >= self.cols {
                return Err(IntLinError::IndexOutOfRange {
                    index: c,
                    dim: self.cols,
                });
            }
        }
        let mut data = Vec::with_capacity(self.rows * perm.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(perm.iter().map(|&c| row[c].clone()));
        }
        Ok(IntMatrix::from_raw(self.rows, perm.len(), data))
    }

    /// Returns the matrix whose row `i` is row `perm[i]` of `self`.
    pub fn select_rows(&self, perm: &[usize]) -> Result<IntMatrix, IntLinError> {
        let mut data = Vec::with_capacity(perm.len() * self.cols);
        for &r in perm {
            if r >= self.rows {
                return Err(IntLinError::IndexOutOfRange {
                    index: r,
                    dim: self.rows,
                });
            }
            data.extend_from_slice(self.row(r));
        }
        Ok(IntMatrix::from_raw(perm.len(), self.cols, data))
    }

    /// Standard Kronecker product with lexicographic (`self`-major) indexing.
    pub fn kronecker(&self, other: &IntMatrix) -> IntMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut data = Vec::with_capacity(rows * cols);
        for i1 in 0..self.rows {
            for i2 in 0..other.rows {
                for j1 in 0..self.cols {
                    let a = self.get(i1, j1);
                    for j2 in 0..other.cols {
                        data.push(a * other.get(i2, j2));
                    }
                }
            }
        }
        IntMatrix::from_raw(rows, cols, data)
    }
}

/// Text form: one row per line, entries separated by single spaces.
impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.iter_rows() {
            let mut first = true;
            for x in row {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{x}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl FromStr for IntMatrix {
    type Err = IntLinError;

    /// Parses the text form; blank lines are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut rows = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<BigInt>().map_err(|_| IntLinError::Parse {
                        line: lineno + 1,
                        token: tok.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_big_rows(cols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn kronecker_of_identities_is_identity() {
        let i2 = IntMatrix::identity(2);
        assert_eq!(i2.kronecker(&i2), IntMatrix::identity(4));
    }

    #[test]
    fn kronecker_with_unit_factor() {
        let j = m(&[&[1, 1], &[1, 1]]);
        assert_eq!(j.kronecker(&m(&[&[1]])), j);
    }

    #[test]
    fn kronecker_block_layout() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kronecker(&b);
        assert_eq!(k.row(0), m(&[&[0, 5, 0, 10]]).row(0));
        assert_eq!(k.row(3), m(&[&[18, 21, 24, 28]]).row(0));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = IntMatrix::from_rows(&[vec![1, 2], vec![3]]).unwrap_err();
        assert_eq!(
            err,
            IntLinError::RaggedRow {
                row: 1,
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn text_round_trip() {
        let a = m(&[&[2, -1, 0], &[0, 0, i64::MIN]]);
        let text = a.to_string();
        assert_eq!(text.parse::<IntMatrix>().unwrap(), a);
        assert!("1 2\n3 x\n".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn product_and_transpose() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let at = a.transpose();
        assert_eq!(at, m(&[&[1, 3], &[2, 4]]));
        assert_eq!(a.mul(&at).unwrap(), m(&[&[5, 11], &[11, 25]]));
        assert!(a.mul(&m(&[&[1, 2, 3]])).is_err());
    }
}
