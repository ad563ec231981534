use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::hermite::{diagonal_product, HermiteForm};
use super::{row_lattice, IntMatrix};

/// Elementary divisors `d_1 | d_2 | ...` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    divisors: Vec<BigInt>,
    rank: usize,
    cols: usize,
}

impl SmithForm {
    /// `min(rows, cols)` nonnegative divisors, nonzero ones first.
    pub fn divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cols - rank`: the dimension of the rational right kernel.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// The divisor list extended with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<BigInt> {
        let mut d = self.divisors.clone();
        if d.len() < n {
            d.resize(n, BigInt::zero());
        }
        d
    }

    /// Divisors different from 1 (zeros included).
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    /// Product of the nonzero divisors.
    pub fn nonzero_product(&self) -> BigInt {
        self.divisors
            .iter()
            .filter(|d| !d.is_zero())
            .fold(BigInt::one(), |acc, d| acc * d)
    }

    /// Builds a Smith form with the same divisor list as `self` padded or
    /// truncated to `len`, treating the column count as `len`.
    pub(crate) fn resized(&self, len: usize) -> SmithForm {
        let mut divisors = self.divisors.clone();
        divisors.resize(len, BigInt::zero());
        SmithForm {
            divisors,
            rank: self.rank,
            cols: len.max(self.rank),
        }
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let h = row_lattice(m);
    let mut s = smith_of_hermite(h.basis());
    s.divisors.resize(m.rows().min(m.cols()), BigInt::zero());
    s
}

/// Smith form of the lattice spanned by a Hermite basis.
///
/// The returned divisor list has length equal to the basis rank.
pub(crate) fn smith_of_hermite(h: &HermiteForm) -> SmithForm {
    let rank = h.rank();
    let cols = h.cols();
    let mut a: Vec<Vec<BigInt>> = h.matrix().to_rows();
    let modulus = (rank == cols && rank > 0).then(|| diagonal_product(h));
    let mut divisors = diagonalize(&mut a, modulus.as_ref());
    divisors.truncate(rank);
    if let Some(d) = &modulus {
        for x in divisors.iter_mut() {
            *x = x.gcd(d);
        }
    }
    SmithForm {
        divisors,
        rank,
        cols,
    }
}

/// Truncating reduction: only entries at least `D` in magnitude are touched,
/// so Euclidean remainders smaller than the pivot are left alone.
fn reduce(x: &mut BigInt, modulus: Option<&BigInt>) {
    if let Some(d) = modulus {
        if x.magnitude() >= d.magnitude() {
            *x %= d;
        }
    }
}

/// Diagonalizes `a` in place with unimodular row and column operations and
/// returns the diagonal (absolute values), which forms a divisibility chain.
///
/// With `modulus = Some(D)` every entry is kept reduced modulo `D`; callers
/// must then take `gcd(d_i, D)` of each returned entry, which is exact when
/// `D * Z^n` lies in the row lattice of `a`.
fn diagonalize(a: &mut [Vec<BigInt>], modulus: Option<&BigInt>) -> Vec<BigInt> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let k = rows.min(cols);
    let mut diag = Vec::with_capacity(k);
    for t in 0..k {
        let Some((pi, pj)) = min_abs_entry(a, t..rows, t..cols) else {
            diag.resize(k, modulus.cloned().unwrap_or_else(BigInt::zero));
            return diag;
        };
        a.swap(t, pi);
        swap_cols(a, t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                if !q.is_zero() {
                    let (top, bottom) = a.split_at_mut(i);
                    let pivot_row = &top[t];
                    for j in t..cols {
                        if !pivot_row[j].is_zero() {
                            bottom[0][j] -= &q * &pivot_row[j];
                            reduce(&mut bottom[0][j], modulus);
                        }
                    }
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                if !q.is_zero() {
                    for row in a.iter_mut().skip(t) {
                        if !row[t].is_zero() {
                            let delta = &q * &row[t];
                            row[j] -= delta;
                            reduce(&mut row[j], modulus);
                        }
                    }
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                let (ci, cj) = min_abs_cross(a, t);
                a.swap(t, ci);
                swap_cols(a, t, cj);
                continue;
            }
            let p = a[t][t].clone();
            let offender = (t + 1..rows).find(|&i| {
                a[i][t + 1..]
                    .iter()
                    .any(|x| !x.is_zero() && !x.is_multiple_of(&p))
            });
            match offender {
                Some(i) => {
                    let (top, bottom) = a.split_at_mut(i);
                    for j in t..cols {
                        if !bottom[0][j].is_zero() {
                            top[t][j] += &bottom[0][j];
                            reduce(&mut top[t][j], modulus);
                        }
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
    }
    diag
}

fn swap_cols(a: &mut [Vec<BigInt>], c1: usize, c2: usize) {
    if c1 != c2 {
        for row in a.iter_mut() {
            row.swap(c1, c2);
        }
    }
}

fn min_abs_entry(
    a: &[Vec<BigInt>],
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, &BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let x = &a[i][j];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some((_, _, b)) => x.magnitude() < b.magnitude(),
            };
            if better {
                if x.magnitude().is_one() {
                    return Some((i, j));
                }
                best = Some((i, j, x));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Position of the smallest nonzero entry among the pivot, the rest of row
/// `t` and the rest of column `t`.
fn min_abs_cross(a: &[Vec<BigInt>], t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut best_val: Option<&BigInt> = Some(&a[t][t]);
    for i in t + 1..a.len() {
        let x = &a[i][t];
        if !x.is_zero() && best_val.is_none_or(|b| x.magnitude() < b.magnitude()) {
            best = (i, t);
            best_val = Some(x);
        }
    }
    for j in t + 1..a[t].len() {
        let x = &a[t][j];
        if !x.is_zero() && best_val.is_none_or(|b| x.magnitude() < b.magnitude()) {
            best = (t, j);
            best_val = Some(x);
        }
    }
    best
}
