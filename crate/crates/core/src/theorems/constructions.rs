use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::TheoremError;
use crate::graphs::{binary_graph, crown, kneser_vertices, Graph};
use crate::intlin::{is_prime, rank_mod_p, IntMatrix};
use crate::products::{disjoint_union, pyramid};
use crate::ra::classify;

fn invalid(msg: impl Into<String>) -> TheoremError {
    TheoremError::InvalidParameter(msg.into())
}

/// `(n, k) = (3^{a+1} + 2k - 1, 3^a + 1 + 2b)`.
pub fn kneser_prism_params(a: u32, b: u64) -> (u64, u64) {
    let k = 3u64.pow(a) + 1 + 2 * b;
    let n = 3u64.pow(a + 1) + 2 * k - 1;
    (n, k)
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// `C(n, k) mod p` by Lucas' theorem; `p` must be prime.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        let mut num = 1u64;
        let mut den = 1u64;
        for i in 0..kd {
            num = (num as u128 * ((nd - i) % p) as u128 % p as u128) as u64;
            den = (den as u128 * ((i + 1) % p) as u128 % p as u128) as u64;
        }
        let digit = (num as u128 * pow_mod(den, p - 2, p) as u128 % p as u128) as u64;
        acc = (acc as u128 * digit as u128 % p as u128) as u64;
        n /= p;
        k /= p;
    }
    acc % p
}

/// The mod-3 conditions making the prism over `Kn(n, k)` a 1/3-RA graph:
/// `C(n-2k+j, k) ≡ 0` for `j = 1..=k` and `C(n-2k, k) ≡ 1`.
pub fn kneser_prism_conditions(n: u64, k: u64) -> bool {
    if n < 2 * k {
        return false;
    }
    let base = n - 2 * k;
    (1..=k).all(|j| binomial_mod_p(base + j, k, 3) == 0) && binomial_mod_p(base, k, 3) == 1
}

fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut out = Vec::new();
    let mut m = n.clone();
    let mut d = BigInt::from(2u32);
    while &d * &d <= m {
        let mut e = 0;
        while m.is_multiple_of(&d) {
            m /= &d;
            e += 1;
        }
        if e > 0 {
            out.push((d.clone(), e));
        }
        d += 1u32;
    }
    if m > BigInt::one() {
        out.push((m, 1));
    }
    out
}

/// Rearranges the prime factors of a divisor multiset into the unique
/// divisibility chain with the same prime-power content. Zeros go last and
/// the length is preserved.
pub fn normalize_divisors(values: &[BigInt]) -> Vec<BigInt> {
    let nonzero: Vec<&BigInt> = values.iter().filter(|v| !v.is_zero()).collect();
    let len = nonzero.len();
    let mut exps: BTreeMap<BigInt, Vec<u32>> = BTreeMap::new();
    for (i, v) in nonzero.iter().enumerate() {
        for (p, e) in factor(&num_traits::Signed::abs(*v)) {
            exps.entry(p).or_insert_with(|| vec![0; len])[i] = e;
        }
    }
    let mut chain = vec![BigInt::one(); len];
    for (p, mut es) in exps {
        es.sort_unstable();
        for (slot, e) in chain.iter_mut().zip(es) {
            *slot *= num_traits::pow(p.clone(), e as usize);
        }
    }
    chain.resize(values.len(), BigInt::zero());
    chain
}

/// Divisors of `C_{a ⊠ b}` predicted from those of the factors: all
/// pairwise products, normalized into a chain.
pub fn strong_product_divisors(a: &Graph, b: &Graph) -> Vec<BigInt> {
    let da = classify(a).divisors;
    let db = classify(b).divisors;
    let products: Vec<BigInt> = da
        .iter()
        .flat_map(|x| db.iter().map(move |y| x * y))
        .collect();
    normalize_divisors(&products)
}

fn check_kneser(n: usize, p: usize) -> Result<(), TheoremError> {
    if !is_prime(p as u64) {
        return Err(TheoremError::IntLin(crate::intlin::IntLinError::NotPrime(p as u64)));
    }
    if n <= p || n > 63 {
        return Err(invalid("need p < n <= 63"));
    }
    Ok(())
}

/// The vector `Σ_v |x ∩ v| e_v` reduced mod `p`, indexed like
/// [`crate::graphs::kneser`]. `x` lists the elements of a `p`-subset of
/// `0..n`.
pub fn kneser_kernel_vector(n: usize, p: usize, x: &[usize]) -> Result<Vec<u64>, TheoremError> {
    check_kneser(n, p)?;
    let mut mask = 0u64;
    for &i in x {
        if i >= n {
            return Err(invalid(format!("element {i} outside 0..{n}")));
        }
        mask |= 1 << i;
    }
    if mask.count_ones() as usize != p || x.len() != p {
        return Err(invalid(format!("x must have exactly {p} distinct elements")));
    }
    Ok(kneser_vertices(n, p)?
        .into_iter()
        .map(|v| u64::from((v & mask).count_ones()) % p as u64)
        .collect())
}

/// `n - 2` if `p | n`, else `n - 1`.
pub fn kneser_kernel_span_dim(n: usize, p: usize) -> Result<usize, TheoremError> {
    check_kneser(n, p)?;
    Ok(if n.is_multiple_of(p) { n - 2 } else { n - 1 })
}

/// Rank mod `p` of all the kernel vectors stacked, computed directly.
pub fn kneser_kernel_span_rank(n: usize, p: usize) -> Result<usize, TheoremError> {
    check_kneser(n, p)?;
    let vs = kneser_vertices(n, p)?;
    let rows: Vec<Vec<u64>> = vs
        .iter()
        .map(|&x| {
            vs.iter()
                .map(|&v| u64::from((v & x).count_ones()) % p as u64)
                .collect()
        })
        .collect();
    let m = IntMatrix::from_rows(&rows)?;
    Ok(rank_mod_p(&m, p as u64)?)
}

fn check_z_arg(n: usize) -> Result<(), TheoremError> {
    if n < 2 {
        return Err(invalid("z(n) needs n >= 2"));
    }
    Ok(())
}

/// `z(2) = 0` and `z(m + 1) = z(m) + [m has at least three 1 bits]`.
pub fn z_recurrence(n: usize) -> Result<usize, TheoremError> {
    check_z_arg(n)?;
    Ok((2..n).filter(|m| m.count_ones() >= 3).count())
}

fn ceil_log2(x: usize) -> usize {
    usize::BITS as usize - (x - 1).leading_zeros() as usize
}

/// `n - 1 - r - C(r-1, 2) - ceil(log2(n - 2^{r-1}))` with `r = ceil(log2 n)`.
pub fn z_closed(n: usize) -> Result<usize, TheoremError> {
    check_z_arg(n)?;
    let r = ceil_log2(n) as i64;
    let c = (r - 1) * (r - 2) / 2;
    let tail = ceil_log2(n - (1usize << (r - 1))) as i64;
    let z = n as i64 - 1 - r - c - tail;
    usize::try_from(z).map_err(|_| invalid(format!("closed form negative at n = {n}")))
}

/// Smallest `N >= 2` with `z(N) = r`.
pub fn minimal_n_for_nullity(r: usize) -> usize {
    let mut n: usize = 2;
    let mut z = 0;
    while z < r {
        if n.count_ones() >= 3 {
            z += 1;
        }
        n += 1;
    }
    n
}

/// Pyramid over the disjoint union of `Cr(2d_i + 4)` and, when
/// `nullity > 0`, `Bg(N)` for the minimal `N` with `z(N) = nullity`.
pub fn construct_prescribed(divisors: &[u64], nullity: usize) -> Result<Graph, TheoremError> {
    if let Some(&d) = divisors.first() {
        if d < 2 {
            return Err(invalid("first divisor must be >= 2"));
        }
    }
    for w in divisors.windows(2) {
        if w[1] % w[0] != 0 {
            return Err(TheoremError::BrokenChain {
                prev: w[0],
                next: w[1],
            });
        }
    }
    let mut parts = Vec::with_capacity(divisors.len() + 1);
    for &d in divisors {
        let total = d
            .to_usize()
            .and_then(|d| d.checked_mul(2))
            .and_then(|x| x.checked_add(4))
            .ok_or_else(|| invalid("divisor too large"))?;
        parts.push(crown(total)?);
    }
    if nullity > 0 {
        parts.push(binary_graph(minimal_n_for_nullity(nullity))?);
    }
    Ok(pyramid(&disjoint_union(&parts)))
}
