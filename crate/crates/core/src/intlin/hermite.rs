use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form.
///
/// Rows are upper echelon with strictly increasing pivot columns, every
/// pivot is positive and every entry above a pivot lies in `[0, pivot)`.
/// Zero rows are discarded, so `matrix.rows()` is the rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermiteForm {
    matrix: IntMatrix,
    pivot_columns: Vec<usize>,
    diagonal: Vec<BigInt>,
}

impl HermiteForm {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn pivot_columns(&self) -> &[usize] {
        &self.pivot_columns
    }

    /// Entries read down the main diagonal, one per column; zero where the
    /// diagonal position lies below the last row.
    pub fn diagonal(&self) -> &[BigInt] {
        &self.diagonal
    }

    pub fn rank(&self) -> usize {
        self.pivot_columns.len()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    /// The pivot values, in row order.
    pub fn pivots(&self) -> impl Iterator<Item = &BigInt> + '_ {
        self.pivot_columns
            .iter()
            .enumerate()
            .map(move |(r, &c)| self.matrix.get(r, c))
    }

    fn from_pivot_rows(cols: usize, rows: Vec<(usize, Vec<BigInt>)>) -> Self {
        let pivot_columns: Vec<usize> = rows.iter().map(|(c, _)| *c).collect();
        let rank = rows.len();
        let matrix = IntMatrix::from_big_rows(cols, rows.into_iter().map(|(_, r)| r).collect())
            .expect("pivot rows have uniform length");
        let diagonal = (0..cols)
            .map(|j| {
                if j < rank {
                    matrix.get(j, j).clone()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        HermiteForm {
            matrix,
            pivot_columns,
            diagonal,
        }
    }
}

pub fn hermite_normal_form(m: &IntMatrix) -> HermiteForm {
    let mut builder = EchelonBuilder::new(m.cols());
    builder.extend_dedup(m.iter_rows());
    builder.finish()
}

/// Incremental integer echelon form.
///
/// Rows are folded in one at a time with extended-gcd row operations. Once
/// the basis reaches full column rank its index `D` is known and every
/// non-pivot entry is kept reduced modulo `D`; this is exact because
/// `D * Z^n` already lies inside the lattice generated by the basis.
pub(crate) struct EchelonBuilder {
    cols: usize,
    pivots: Vec<Option<Vec<BigInt>>>,
    rank: usize,
    modulus: Option<BigInt>,
}

impl EchelonBuilder {
    pub(crate) fn new(cols: usize) -> Self {
        EchelonBuilder {
            cols,
            pivots: vec![None; cols],
            rank: 0,
            modulus: None,
        }
    }

    /// Builder for a lattice known to contain `m * Z^cols` (`m > 0`). The
    /// basis starts as `m * I`, so entries stay reduced modulo `m` from the
    /// first inserted row on.
    pub(crate) fn with_multiple(cols: usize, m: BigInt) -> Self {
        debug_assert!(m > BigInt::zero());
        let pivots = (0..cols)
            .map(|c| {
                let mut row = vec![BigInt::zero(); cols];
                row[c] = m.clone();
                Some(row)
            })
            .collect();
        EchelonBuilder {
            cols,
            pivots,
            rank: cols,
            modulus: (cols > 0).then_some(m),
        }
    }

    /// Inserts rows after dropping zero rows and exact duplicates.
    pub(crate) fn extend_dedup<'a, I>(&mut self, rows: I)
    where
        I: IntoIterator<Item = &'a [BigInt]>,
    {
        let mut seen: HashSet<&'a [BigInt]> = HashSet::new();
        for row in rows {
            if row.iter().all(Zero::is_zero) || !seen.insert(row) {
                continue;
            }
            self.insert(row.to_vec());
        }
    }

    pub(crate) fn insert(&mut self, mut v: Vec<BigInt>) {
        debug_assert_eq!(v.len(), self.cols);
        if let Some(d) = &self.modulus {
            for x in v.iter_mut() {
                if !x.is_zero() {
                    *x = x.mod_floor(d);
                }
            }
        }
        for c in 0..self.cols {
            if v[c].is_zero() {
                continue;
            }
            let Some(b) = self.pivots[c].as_mut() else {
                if v[c].is_negative() {
                    for x in v[c..].iter_mut() {
                        *x = -&*x;
                    }
                }
                self.pivots[c] = Some(v);
                self.rank += 1;
                if self.rank == self.cols {
                    self.refresh_modulus(None);
                }
                return;
            };
            let (q, r) = v[c].div_rem(&b[c]);
            if r.is_zero() {
                for j in c..self.cols {
                    if !b[j].is_zero() {
                        v[j] -= &q * &b[j];
                    }
                }
            } else {
                let e = b[c].extended_gcd(&v[c]);
                let (g, x, y) = if e.gcd.is_negative() {
                    (-e.gcd, -e.x, -e.y)
                } else {
                    (e.gcd, e.x, e.y)
                };
                let b_over = &b[c] / &g;
                let v_over = &v[c] / &g;
                for j in c..self.cols {
                    let bj = &b[j];
                    let vj = &v[j];
                    let nb = &x * bj + &y * vj;
                    let nv = &v_over * bj - &b_over * vj;
                    b[j] = nb;
                    v[j] = nv;
                }
                debug_assert!(v[c].is_zero());
                debug_assert_eq!(b[c], g);
                if self.modulus.is_some() {
                    self.refresh_modulus(Some(c));
                }
            }
            if let Some(d) = &self.modulus {
                for x in v[c + 1..].iter_mut() {
                    if !x.is_zero() {
                        *x = x.mod_floor(d);
                    }
                }
            }
        }
    }

    /// Recomputes the modulus as the gcd of the lattice index and the
    /// previous modulus, then re-reduces basis entries by it. `changed`
    /// restricts the reduction to one freshly combined row.
    fn refresh_modulus(&mut self, changed: Option<usize>) {
        let mut d: BigInt = self
            .pivots
            .iter()
            .enumerate()
            .map(|(c, row)| row.as_ref().expect("full rank")[c].clone())
            .product();
        if let Some(old) = &self.modulus {
            d = d.gcd(old);
        }
        let reduce_row = |c: usize, row: &mut Vec<BigInt>, d: &BigInt| {
            for x in row[c + 1..].iter_mut() {
                if !x.is_zero() {
                    *x = x.mod_floor(d);
                }
            }
        };
        let shrank = self.modulus.as_ref() != Some(&d);
        match changed {
            Some(c) if !shrank => {
                reduce_row(c, self.pivots[c].as_mut().unwrap(), &d);
            }
            _ => {
                for (c, row) in self.pivots.iter_mut().enumerate() {
                    reduce_row(c, row.as_mut().unwrap(), &d);
                }
            }
        }
        self.modulus = Some(d);
    }

    /// Finishes the reduction above each pivot and returns the Hermite form.
    pub(crate) fn finish(self) -> HermiteForm {
        let cols = self.cols;
        let mut rows: Vec<(usize, Vec<BigInt>)> = self
            .pivots
            .into_iter()
            .enumerate()
            .filter_map(|(c, r)| r.map(|r| (c, r)))
            .collect();
        for i in 0..rows.len() {
            let (pc, _) = rows[i];
            let (above, rest) = rows.split_at_mut(i);
            let pivot_row = &rest[0].1;
            let p = &pivot_row[pc];
            for (_, row) in above.iter_mut() {
                let e = &row[pc];
                if e.is_zero() || (!e.is_negative() && e < p) {
                    continue;
                }
                let q = e.div_floor(p);
                for j in pc..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] -= &q * &pivot_row[j];
                    }
                }
            }
        }
        HermiteForm::from_pivot_rows(cols, rows)
    }
}

/// Product of the Hermite diagonal for a full-column-rank form.
pub(crate) fn diagonal_product(h: &HermiteForm) -> BigInt {
    h.diagonal().iter().fold(BigInt::one(), |acc, d| acc * d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn already_hermite_example() {
        let h = hermite_normal_form(&m(&[&[2, 1], &[0, 2]]));
        assert_eq!(h.matrix(), &m(&[&[2, 1], &[0, 2]]));
        assert_eq!(h.diagonal(), big(&[2, 2]).as_slice());
    }

    #[test]
    fn column_swapped_example() {
        let h = hermite_normal_form(&m(&[&[1, 2], &[2, 0]]));
        assert_eq!(h.matrix(), &m(&[&[1, 2], &[0, 4]]));
        assert_eq!(h.diagonal(), big(&[1, 4]).as_slice());
    }

    #[test]
    fn zero_row_discarded() {
        let h = hermite_normal_form(&m(&[&[1, 0], &[0, 1], &[0, 0]]));
        assert_eq!(h.matrix(), &IntMatrix::identity(2));
        assert_eq!(h.diagonal(), big(&[1, 1]).as_slice());
    }

    #[test]
    fn rank_deficient_diagonal_pads_with_zero() {
        let h = hermite_normal_form(&IntMatrix::ones(3));
        assert_eq!(h.matrix(), &m(&[&[1, 1, 1]]));
        assert_eq!(h.pivot_columns(), &[0]);
        assert_eq!(h.diagonal(), big(&[1, 0, 0]).as_slice());
    }

    #[test]
    fn negative_entries_are_normalized() {
        let h = hermite_normal_form(&m(&[&[-3, 5, 7], &[0, -2, 9], &[6, 1, -4]]));
        for (r, &c) in h.pivot_columns().iter().enumerate() {
            let p = h.matrix().get(r, c);
            assert!(p > &BigInt::zero());
            for above in 0..r {
                let e = h.matrix().get(above, c);
                assert!(e >= &BigInt::zero() && e < p);
            }
        }
        // |det| = |-3(8-9) - 5(0-54) + 7(0+12)| = 357
        assert_eq!(diagonal_product(&h), BigInt::from(357));
    }

    #[test]
    fn pivot_skips_zero_column() {
        let h = hermite_normal_form(&m(&[&[0, 2, 4], &[0, 3, 1]]));
        assert_eq!(h.pivot_columns(), &[1, 2]);
        assert_eq!(h.matrix(), &m(&[&[0, 1, 7], &[0, 0, 10]]));
        assert_eq!(h.diagonal(), big(&[0, 0, 0]).as_slice());
    }
}
