use super::{Graph, GraphError};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

/// `P_n`: vertices `0..n` in path order.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::param("path", "need n >= 1"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1))
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::param("cycle", "need n >= 3"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::param("complete", "need n >= 1"));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
    if m < 1 || n < 1 {
        return Err(GraphError::param("complete_bipartite", "need m, n >= 1"));
    }
    Ok(Graph::from_fn(m + n, |u, v| u < m && v >= m))
}

/// `K_{1,n}` with the center at 0.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    complete_bipartite(1, n)
}

/// Triangle `0,1,2` with a pendant vertex 3 attached to 2.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid edges")
}

/// `Q_d`: vertex labels are the integers `0..2^d`, adjacent when they differ in one bit.
pub fn cube(d: usize) -> Result<Graph, GraphError> {
    if d > 20 {
        return Err(GraphError::param("cube", "dimension too large"));
    }
    Ok(Graph::from_fn(1 << d, |u, v| (u ^ v).is_power_of_two()))
}

/// `Q_{d-1}` plus an edge between each label and its bitwise complement.
pub fn folded_cube(d: usize) -> Result<Graph, GraphError> {
    if !(3..=21).contains(&d) {
        return Err(GraphError::param("folded_cube", "need 3 <= d <= 21"));
    }
    let mask = (1usize << (d - 1)) - 1;
    Ok(Graph::from_fn(1 << (d - 1), |u, v| {
        (u ^ v).is_power_of_two() || u ^ v == mask
    }))
}

/// `Cr(total)`: vertices `i` and `n + j` (for `i, j < n = total / 2`) are
/// adjacent iff `i != j`.
pub fn crown(total: usize) -> Result<Graph, GraphError> {
    if !total.is_multiple_of(2) || total < 4 {
        return Err(GraphError::param("crown", "need an even vertex count >= 4"));
    }
    let n = total / 2;
    Ok(Graph::from_fn(total, |u, v| u < n && v >= n && v - n != u))
}

/// The `k`-subsets of `0..n` as bitmasks in colexicographic order.
pub fn kneser_vertices(n: usize, k: usize) -> Result<Vec<u64>, GraphError> {
    if k < 1 || k > n || n > 63 {
        return Err(GraphError::param("kneser", "need 1 <= k <= n <= 63"));
    }
    let mut out = Vec::new();
    let mut s: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        out.push(s);
        // Next k-subset in numeric order.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    Ok(out)
}

/// `Kn(n, k)`: `k`-subsets in colex order, adjacent when disjoint.
pub fn kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    let vs = kneser_vertices(n, k)?;
    Ok(Graph::from_fn(vs.len(), |u, v| vs[u] & vs[v] == 0))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}

/// `Bg(n)`: number vertices `0..n` (vertex `k` stands for `k`), then
/// `r = ceil(log2 n)` bit vertices; both blocks are cliques and number `k`
/// meets bit vertex `n + i` when bit `i` of `k` is set.
pub fn binary_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::param("binary_graph", "need n >= 2"));
    }
    let r = usize::BITS as usize - (n - 1).leading_zeros() as usize;
    Ok(Graph::from_fn(n + r, |u, v| {
        (u < n && v < n) || (u >= n && v >= n) || (v >= n && u >> (v - n) & 1 == 1)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn kneser_degrees_and_order() {
        for (n, k) in [(5, 2), (6, 2), (7, 3), (9, 3), (8, 2)] {
            let g = kneser(n, k).unwrap();
            assert_eq!(g.n() as u64, binom(n as u64, k as u64));
            let d = binom((n - k) as u64, k as u64) as usize;
            assert!(g.degrees().iter().all(|&x| x == d));
        }
        let vs = kneser_vertices(4, 2).unwrap();
        assert_eq!(vs, vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
    }

    #[test]
    fn petersen_shape() {
        let g = petersen();
        assert_eq!(g.n(), 10);
        assert!(g.degrees().iter().all(|&d| d == 3));
        assert_eq!(g.girth(), Some(5));
    }

    #[test]
    fn crown_common_neighbors() {
        for half in 3..8 {
            let g = crown(2 * half).unwrap();
            for u in 0..g.n() {
                for v in u + 1..g.n() {
                    match g.distance(u, v) {
                        Some(1) => assert_eq!(g.common_open_count(u, v), 0),
                        Some(2) => assert_eq!(g.common_open_count(u, v), half - 2),
                        _ => {}
                    }
                }
            }
        }
        assert!(crown(5).is_err());
        assert!(crown(2).is_err());
    }

    #[test]
    fn binary_graph_layout() {
        let g = binary_graph(8).unwrap();
        assert_eq!(g.n(), 11);
        for u in 0..8 {
            for v in u + 1..8 {
                assert!(g.has_edge(u, v));
            }
        }
        assert!(g.has_edge(8, 9) && g.has_edge(9, 10) && g.has_edge(8, 10));
        assert_eq!((8..11).filter(|&b| g.has_edge(0, b)).count(), 0);
        // 6 = 0b110
        assert!(!g.has_edge(6, 8) && g.has_edge(6, 9) && g.has_edge(6, 10));
        assert_eq!(binary_graph(2).unwrap().n(), 3);
        assert_eq!(binary_graph(9).unwrap().n(), 13);
    }

    #[test]
    fn cube_and_folded_cube() {
        let q = cube(4).unwrap();
        assert_eq!(q.n(), 16);
        assert!(q.degrees().iter().all(|&d| d == 4));
        let f = folded_cube(5).unwrap();
        assert_eq!(f.n(), 16);
        assert!(f.degrees().iter().all(|&d| d == 5));
        assert_eq!(f.girth(), Some(4));
        assert_eq!(folded_cube(3).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn parameter_errors() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(kneser(3, 4).is_err());
        assert!(kneser(3, 0).is_err());
        assert!(binary_graph(1).is_err());
    }
}
