//! Independent reference computations for the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use ragraph::graphs::{are_isomorphic, Graph};

/// Known numbers of graphs and of connected graphs on `n` vertices.
pub const GRAPH_COUNTS: [usize; 9] = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
pub const CONNECTED_COUNTS: [usize; 9] = [1, 1, 1, 2, 6, 21, 112, 853, 11117];

fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>, usize)> {
    let n = g.n();
    let mut inv: Vec<(usize, Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            let tri = g
                .neighbors(v)
                .map(|w| g.common_open_count(v, w))
                .sum::<usize>();
            (g.degree(v), nd, tri)
        })
        .collect();
    inv.sort();
    inv
}

/// All graphs on `0..=max_n` vertices up to isomorphism, grown one vertex at
/// a time by attaching a new vertex to every subset of the old ones.
pub fn all_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut levels = vec![vec![Graph::empty(0)]];
    for n in 1..=max_n {
        let mut buckets: HashMap<Vec<(usize, Vec<usize>, usize)>, Vec<Graph>> = HashMap::new();
        let mut order = Vec::new();
        for g in &levels[n - 1] {
            let old = g.edges();
            for mask in 0u32..(1u32 << (n - 1)) {
                let mut edges = old.clone();
                edges.extend((0..n - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n - 1)));
                let h = Graph::from_edges(n, &edges).unwrap();
                let key = invariant(&h);
                let bucket = buckets.entry(key.clone()).or_default();
                if !bucket.iter().any(|r| are_isomorphic(r, &h)) {
                    bucket.push(h);
                    order.push((key, bucket.len() - 1));
                }
            }
        }
        let level = order
            .into_iter()
            .map(|(k, i)| buckets[&k][i].clone())
            .collect();
        levels.push(level);
    }
    levels
}

pub fn connected_graphs(max_n: usize) -> Vec<Graph> {
    all_graphs(max_n)
        .into_iter()
        .skip(1)
        .flatten()
        .filter(|g| g.is_connected())
        .collect()
}

fn det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigInt>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Smith divisors from determinantal divisors: `D_k` is the gcd of all
/// `k x k` minors and `d_k = D_k / D_{k-1}`. Only for small matrices.
pub fn snf_by_minors(rows: &[Vec<i64>]) -> Vec<BigInt> {
    let r = rows.len();
    let c = rows.first().map_or(0, Vec::len);
    let m: Vec<Vec<BigInt>> = rows.iter().map(|row| row.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=r.min(c) {
        let mut g = BigInt::zero();
        for rs in combinations(r, k) {
            for cs in combinations(c, k) {
                let sub: Vec<Vec<BigInt>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j].clone()).collect()).collect();
                g = g.gcd(&det(&sub));
                if g.is_one() {
                    break;
                }
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            out.resize(r.min(c), BigInt::zero());
            return out;
        }
        out.push((&g / &prev).abs());
        prev = g;
    }
    out
}

/// Rows of `C_Γ` straight from the definition, as a set of 0/1 vectors.
pub fn brute_ra_rows(g: &Graph) -> BTreeSet<Vec<u8>> {
    let n = g.n();
    let closed: Vec<Vec<u8>> = (0..n)
        .map(|v| (0..n).map(|w| u8::from(v == w || g.has_edge(v, w))).collect())
        .collect();
    let mut rows = BTreeSet::new();
    for u in 0..n {
        rows.insert(closed[u].clone());
        for v in u + 1..n {
            let r: Vec<u8> = (0..n).map(|i| closed[u][i] & closed[v][i]).collect();
            if r.iter().any(|&x| x != 0) {
                rows.insert(r);
            }
        }
    }
    rows
}

/// Rank over `F_p` for a prime `p < 2^31` by plain elimination.
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = mod_pow(a[rank][c], p - 2, p);
        for j in 0..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for i in 0..a.len() {
            if i != rank && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..cols {
                    a[i][j] = (a[i][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mod_pow(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut acc = 1i64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Rational rank, as the largest rank seen modulo a few large primes.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    [2_147_483_647i64, 2_147_483_629, 2_147_483_587]
        .iter()
        .map(|&p| rank_mod(rows, p))
        .max()
        .unwrap_or(0)
}

pub fn rows_i64(rows: &BTreeSet<Vec<u8>>) -> Vec<Vec<i64>> {
    rows.iter().map(|r| r.iter().map(|&x| i64::from(x)).collect()).collect()
}

/// Random simple graph with each edge present with probability `p`.
pub fn random_graph<R: rand::Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Prime-power parts `(p, e)` of the nonzero values, sorted, plus the zero
/// count. Two diagonal matrices are equivalent exactly when these agree.
pub fn prime_power_parts(values: &[BigInt]) -> (Vec<(u64, u32)>, usize) {
    let mut parts = Vec::new();
    let mut zeros = 0;
    for v in values {
        if v.is_zero() {
            zeros += 1;
            continue;
        }
        let mut x: u64 = v.abs().try_into().expect("small divisor");
        let mut p = 2u64;
        while p * p <= x {
            let mut e = 0;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            if e > 0 {
                parts.push((p, e));
            }
            p += 1;
        }
        if x > 1 {
            parts.push((x, 1));
        }
    }
    parts.sort_unstable();
    (parts, zeros)
}
