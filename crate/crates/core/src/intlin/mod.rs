//! Exact integer linear algebra over arbitrary-precision integers.

mod hermite;
mod lattice;
mod matrix;
mod modp;
mod smith;

use thiserror::Error;

pub use hermite::{hermite_normal_form, HermiteForm};
pub use lattice::{row_lattice, RowLattice};
pub use matrix::IntMatrix;
pub use modp::{is_prime, kernel_basis_mod_p, rank_mod_p};
pub use smith::{smith_normal_form, SmithForm};

pub(crate) use smith::smith_of_hermite;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntLinError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("line {line}: cannot parse integer from {token:?}")]
    Parse { line: usize, token: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// Standard Kronecker product, `a`-major.
pub fn kronecker_product(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    a.kronecker(b)
}

/// Nonnegative gcd of a sequence; the empty gcd is 0.
pub fn gcd_all<I>(values: I) -> num_bigint::BigInt
where
    I: IntoIterator<Item = num_bigint::BigInt>,
{
    use num_integer::Integer;
    use num_traits::Zero;
    values
        .into_iter()
        .fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(&x))
}
