use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{IntLinError, IntMatrix};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Reduced row echelon form mod p; returns the rows and pivot columns.
fn rref_mod_p(m: &IntMatrix, p: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let cols = m.cols();
    let mut a: Vec<Vec<u64>> = m
        .iter_rows()
        .map(|r| r.iter().map(|x| residue(x, p)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = (*x + p - mul_mod(f, y, p)) % p;
            }
        }
        pivots.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    a.truncate(r);
    (a, pivots)
}

pub fn rank_mod_p(m: &IntMatrix, p: u64) -> Result<usize, IntLinError> {
    if !is_prime(p) {
        return Err(IntLinError::NotPrime(p));
    }
    Ok(rref_mod_p(m, p).1.len())
}

/// Basis of `{x : m x = 0 mod p}`, one vector per free column, entries in `[0, p)`.
pub fn kernel_basis_mod_p(m: &IntMatrix, p: u64) -> Result<Vec<Vec<u64>>, IntLinError> {
    if !is_prime(p) {
        return Err(IntLinError::NotPrime(p));
    }
    let cols = m.cols();
    let (rows, pivots) = rref_mod_p(m, p);
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let basis = (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut x = vec![0u64; cols];
            x[f] = 1;
            for (row, &c) in rows.iter().zip(&pivots) {
                x[c] = (p - row[f]) % p;
            }
            x
        })
        .collect();
    Ok(basis)
}

/// Prime used to pick rationally independent rows.
pub(crate) const SCREEN_PRIME: u64 = 2_147_483_647;

/// Incremental echelon form over `Z/pZ`, used only to select rows.
pub(crate) struct ModpEchelon {
    p: u64,
    pivots: Vec<Option<Vec<u64>>>,
    rank: usize,
}

impl ModpEchelon {
    pub(crate) fn new(cols: usize, p: u64) -> Self {
        ModpEchelon {
            p,
            pivots: vec![None; cols],
            rank: 0,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rank
    }

    /// Returns true when `row` raised the rank.
    pub(crate) fn insert(&mut self, row: &[BigInt]) -> bool {
        let p = self.p;
        let mut v: Vec<u64> = row.iter().map(|x| residue(x, p)).collect();
        for c in 0..v.len() {
            if v[c] == 0 {
                continue;
            }
            match &self.pivots[c] {
                Some(b) => {
                    let f = v[c];
                    for j in c..v.len() {
                        if b[j] != 0 {
                            v[j] = (v[j] + p - mul_mod(f, b[j], p)) % p;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(v[c], p);
                    for x in v[c..].iter_mut() {
                        *x = mul_mod(*x, inv, p);
                    }
                    self.pivots[c] = Some(v);
                    self.rank += 1;
                    return true;
                }
            }
        }
        false
    }
}

fn det_mod_p(rows: &[Vec<BigInt>], p: u64) -> u64 {
    let n = rows.len();
    let mut a: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| residue(x, p)).collect())
        .collect();
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i][c] != 0) else {
            return 0;
        };
        if pr != c {
            a.swap(pr, c);
            det = (p - det) % p;
        }
        det = mul_mod(det, a[c][c], p);
        let inv = inv_mod(a[c][c], p);
        let (top, bottom) = a.split_at_mut(c + 1);
        let pivot = &top[c];
        for row in bottom.iter_mut() {
            if row[c] == 0 {
                continue;
            }
            let f = mul_mod(row[c], inv, p);
            for j in c..n {
                if pivot[j] != 0 {
                    row[j] = (row[j] + p - mul_mod(f, pivot[j], p)) % p;
                }
            }
        }
    }
    det
}

/// `|det|` of a square integer matrix by Chinese remaindering over enough
/// primes to exceed twice the Hadamard bound.
pub(crate) fn abs_determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let bound_bits: u64 = rows
        .iter()
        .map(|r| {
            let sq: BigInt = r.iter().map(|x| x * x).sum();
            sq.bits().div_ceil(2)
        })
        .sum::<u64>()
        + 2;
    let mut modulus = BigInt::one();
    let mut residue_acc = BigInt::zero();
    let mut q = SCREEN_PRIME;
    while modulus.bits() <= bound_bits {
        while !is_prime(q) {
            q -= 2;
        }
        let r = det_mod_p(rows, q);
        let m_mod_q = residue(&modulus, q);
        let x_mod_q = residue(&residue_acc, q);
        let t = mul_mod((r + q - x_mod_q) % q, inv_mod(m_mod_q, q), q);
        residue_acc += &modulus * BigInt::from(t);
        modulus *= BigInt::from(q);
        q -= 2;
    }
    if &residue_acc * 2 > modulus {
        residue_acc -= &modulus;
    }
    residue_acc.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(!is_prime(0) && !is_prime(1) && !is_prime(9));
        assert!(is_prime(2) && is_prime(3) && is_prime(97));
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis_mod_p(&IntMatrix::identity(4), 2).unwrap().is_empty());
    }

    #[test]
    fn all_ones_kernel_mod_3() {
        let j = IntMatrix::ones(3);
        let k = kernel_basis_mod_p(&j, 3).unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(rank_mod_p(&j, 3).unwrap() + k.len(), 3);
        for x in &k {
            assert_eq!(x.iter().sum::<u64>() % 3, 0);
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(
            kernel_basis_mod_p(&IntMatrix::identity(2), 4),
            Err(IntLinError::NotPrime(4))
        );
    }

    #[test]
    fn determinant_by_remainders() {
        let rows = |v: &[&[i64]]| -> Vec<Vec<BigInt>> {
            v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        assert_eq!(abs_determinant(&rows(&[&[-3, 5, 7], &[0, -2, 9], &[6, 1, -4]])), BigInt::from(357));
        assert_eq!(abs_determinant(&rows(&[&[1, 2], &[2, 4]])), BigInt::zero());
        let big = rows(&[&[1_000_000_007, 3], &[5, 999_999_937]]);
        let want = BigInt::from(1_000_000_007i64) * 999_999_937i64 - 15;
        assert_eq!(abs_determinant(&big), want);
    }

    #[test]
    fn screen_detects_dependence() {
        let mut e = ModpEchelon::new(3, SCREEN_PRIME);
        let r = |v: [i64; 3]| v.map(BigInt::from).to_vec();
        assert!(e.insert(&r([1, 2, 3])));
        assert!(!e.insert(&r([2, 4, 6])));
        assert!(e.insert(&r([0, 1, 1])));
        assert!(!e.insert(&r([1, 3, 4])));
        assert_eq!(e.rank(), 2);
    }
}
