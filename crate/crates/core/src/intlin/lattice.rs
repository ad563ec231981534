use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use std::collections::HashSet;

use super::hermite::{diagonal_product, EchelonBuilder, HermiteForm};
use super::modp::{abs_determinant, ModpEchelon, SCREEN_PRIME};
use super::{IntLinError, IntMatrix};

/// Integer span of a set of row vectors, held as its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowLattice {
    basis: HermiteForm,
    ambient_dim: usize,
}

pub fn row_lattice(m: &IntMatrix) -> RowLattice {
    let mut seen: HashSet<&[BigInt]> = HashSet::new();
    let distinct: Vec<&[BigInt]> = m
        .iter_rows()
        .filter(|r| r.iter().any(|x| !x.is_zero()) && seen.insert(r))
        .collect();
    RowLattice::from_row_fn(m.cols(), || distinct.iter().map(|r| r.to_vec()))
}

impl RowLattice {
    /// Plain incremental construction with no modular reduction until the
    /// basis reaches full rank.
    pub fn from_rows<'a, I>(ambient_dim: usize, rows: I) -> RowLattice
    where
        I: IntoIterator<Item = &'a [BigInt]>,
    {
        let mut b = EchelonBuilder::new(ambient_dim);
        b.extend_dedup(rows);
        RowLattice {
            basis: b.finish(),
            ambient_dim,
        }
    }

    /// Builds the lattice from a re-iterable row source in two passes.
    ///
    /// The first pass picks rows that are independent modulo a large prime.
    /// If they reach full rank, the absolute value of their determinant is a
    /// nonzero multiple of the lattice index, and the exact second pass runs
    /// modulo it from the start. Otherwise the second pass is unreduced.
    pub fn from_row_fn<F, I>(ambient_dim: usize, rows: F) -> RowLattice
    where
        F: Fn() -> I,
        I: Iterator<Item = Vec<BigInt>>,
    {
        let mut screen = ModpEchelon::new(ambient_dim, SCREEN_PRIME);
        let mut chosen = Vec::new();
        if ambient_dim > 0 {
            for r in rows() {
                if screen.insert(&r) {
                    chosen.push(r);
                    if screen.rank() == ambient_dim {
                        break;
                    }
                }
            }
        }
        let mut b = if chosen.len() == ambient_dim && ambient_dim > 0 {
            EchelonBuilder::with_multiple(ambient_dim, abs_determinant(&chosen))
        } else {
            EchelonBuilder::new(ambient_dim)
        };
        for r in rows() {
            b.insert(r);
        }
        RowLattice {
            basis: b.finish(),
            ambient_dim,
        }
    }

    pub fn basis(&self) -> &HermiteForm {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.basis.rank()
    }

    /// `[Z^n : L]` for a full-rank lattice, `None` otherwise.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.ambient_dim).then(|| diagonal_product(&self.basis))
    }

    /// True when the lattice is all of `Z^n`.
    pub fn is_full(&self) -> bool {
        self.index().is_some_and(|d| d.is_one())
    }

    pub fn contains(&self, v: &[BigInt]) -> Result<bool, IntLinError> {
        if v.len() != self.ambient_dim {
            return Err(IntLinError::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut v = v.to_vec();
        let h = self.basis.matrix();
        for (r, &c) in self.basis.pivot_columns().iter().enumerate() {
            if v[..c].iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
            if v[c].is_zero() {
                continue;
            }
            let row = h.row(r);
            let (q, rem) = v[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return Ok(false);
            }
            for j in c..self.ambient_dim {
                if !row[j].is_zero() {
                    v[j] -= &q * &row[j];
                }
            }
        }
        Ok(v.iter().all(Zero::is_zero))
    }

    /// Smallest `a > 0` with `a * e_i` in the lattice, or 0 if there is none.
    ///
    /// Computed by moving column `i` last and reading the final Hermite
    /// diagonal entry.
    pub fn minimal_axis_multiple(&self, i: usize) -> Result<BigInt, IntLinError> {
        let n = self.ambient_dim;
        if i >= n {
            return Err(IntLinError::IndexOutOfRange { index: i, dim: n });
        }
        if self.is_full() {
            return Ok(BigInt::one());
        }
        let perm: Vec<usize> = (0..n).filter(|&c| c != i).chain([i]).collect();
        let moved = self.basis.matrix().select_columns(&perm)?;
        let mut b = match self.index() {
            Some(d) => EchelonBuilder::with_multiple(n, d),
            None => EchelonBuilder::new(n),
        };
        for r in moved.iter_rows() {
            b.insert(r.to_vec());
        }
        let h = b.finish();
        Ok(match h.pivot_columns().last() {
            Some(&c) if c == n - 1 => h.matrix().get(h.rank() - 1, c).clone(),
            _ => BigInt::zero(),
        })
    }

    /// Same value as [`RowLattice::minimal_axis_multiple`], computed from the
    /// integer relations among the basis rows and `e_i`: the admissible
    /// multiples are exactly the `e_i` coefficients of such relations.
    pub fn axis_multiple_by_relations(&self, i: usize) -> Result<BigInt, IntLinError> {
        let n = self.ambient_dim;
        if i >= n {
            return Err(IntLinError::IndexOutOfRange { index: i, dim: n });
        }
        let basis = self.basis.matrix();
        let m = basis.rows() + 1;
        let mut builder = EchelonBuilder::new(n + m);
        let mut unit = vec![BigInt::zero(); n];
        unit[i] = BigInt::one();
        for (k, row) in basis.iter_rows().chain([unit.as_slice()]).enumerate() {
            let mut aug = row.to_vec();
            aug.extend((0..m).map(|j| if j == k { BigInt::one() } else { BigInt::zero() }));
            builder.insert(aug);
        }
        let h = builder.finish();
        let g = h
            .pivot_columns()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= n)
            .map(|(r, _)| h.matrix().get(r, n + m - 1).clone())
            .fold(BigInt::zero(), |acc, x| acc.gcd(&x));
        Ok(g)
    }

    /// Axis multiples for every coordinate.
    pub fn axis_multiples(&self) -> Vec<BigInt> {
        (0..self.ambient_dim)
            .map(|i| self.minimal_axis_multiple(i).expect("index in range"))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn ranks() {
        let l = row_lattice(&IntMatrix::identity(3));
        assert_eq!((l.rank(), l.ambient_dim()), (3, 3));
        assert!(l.is_full());
        assert_eq!(row_lattice(&m(&[&[1, 1, 0], &[0, 1, 1]])).rank(), 2);
        let k3 = row_lattice(&IntMatrix::ones(3));
        assert_eq!(k3.rank(), 1);
        assert_eq!(k3.basis().matrix(), &m(&[&[1, 1, 1]]));
    }

    #[test]
    fn membership() {
        let k3 = row_lattice(&IntMatrix::ones(3));
        assert!(k3.contains(&v(&[1, 1, 1])).unwrap());
        assert!(k3.contains(&v(&[-4, -4, -4])).unwrap());
        assert!(!k3.contains(&v(&[1, 0, 0])).unwrap());
        assert!(k3.contains(&v(&[0, 0, 0])).unwrap());
        assert!(k3.contains(&v(&[1, 1])).is_err());
        let l = row_lattice(&m(&[&[2, 1], &[0, 2]]));
        assert!(l.contains(&v(&[0, 2])).unwrap());
        assert!(l.contains(&v(&[4, 0])).unwrap());
        assert!(!l.contains(&v(&[2, 0])).unwrap());
    }

    #[test]
    fn axis_multiples_of_small_lattices() {
        let l = row_lattice(&m(&[&[2, 1], &[0, 2]]));
        assert_eq!(l.minimal_axis_multiple(1).unwrap(), BigInt::from(2));
        assert_eq!(l.minimal_axis_multiple(0).unwrap(), BigInt::from(4));
        let full = row_lattice(&IntMatrix::identity(4));
        assert!(full.axis_multiples().iter().all(One::is_one));
        let k3 = row_lattice(&IntMatrix::ones(3));
        assert_eq!(k3.minimal_axis_multiple(0).unwrap(), BigInt::zero());
        assert!(k3.minimal_axis_multiple(3).is_err());
    }

    #[test]
    fn relation_route_agrees() {
        for rows in [
            m(&[&[2, 1], &[0, 2]]),
            IntMatrix::ones(3),
            m(&[&[1, 1, 0], &[0, 1, 1]]),
            m(&[&[3, 5, 7], &[0, 6, 9], &[6, 1, 4]]),
            m(&[&[4, 0, 2], &[0, 6, 0]]),
        ] {
            let l = row_lattice(&rows);
            for i in 0..l.ambient_dim() {
                assert_eq!(
                    l.minimal_axis_multiple(i).unwrap(),
                    l.axis_multiple_by_relations(i).unwrap()
                );
            }
        }
    }
}
