//! Finite simple graphs on vertices `0..n`.

mod families;
mod graph6;
mod iso;

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

pub use families::{
    binary_graph, complete, complete_bipartite, crown, cube, cycle, empty, folded_cube, kneser,
    kneser_vertices, paw, path, petersen, star,
};
pub use graph6::{decode as graph6_decode, encode as graph6_encode, parse_lines, Graph6Error};
pub use iso::are_isomorphic;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid parameters for {family}: {reason}")]
    InvalidParameter {
        family: &'static str,
        reason: String,
    },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

impl GraphError {
    pub(crate) fn param(family: &'static str, reason: impl Into<String>) -> Self {
        GraphError::InvalidParameter {
            family,
            reason: reason.into(),
        }
    }
}

/// A set of vertices of a fixed graph, as a bitset of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet(FixedBitSet);

impl VertexSet {
    pub fn with_capacity(n: usize) -> Self {
        VertexSet(FixedBitSet::with_capacity(n))
    }

    pub fn from_vertices(n: usize, vs: &[usize]) -> Self {
        let mut s = FixedBitSet::with_capacity(n);
        for &v in vs {
            s.insert(v);
        }
        VertexSet(s)
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.0.clone();
        s.intersect_with(&other.0);
        VertexSet(s)
    }

    pub fn intersection_count(&self, other: &VertexSet) -> usize {
        self.0.intersection_count(&other.0)
    }

    /// 0/1 indicator vector.
    pub fn indicator(&self) -> Vec<BigInt> {
        (0..self.0.len())
            .map(|i| {
                if self.0.contains(i) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect()
    }
}

/// Finite simple undirected graph with bitset adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", graph6_encode(self))
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds the graph whose edges are the pairs `u < v` with `f(u, v)`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 0..n {
            for u in 0..v {
                if f(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `v` then `u`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..self.n() {
            for u in self.adj[v].ones().take_while(|&u| u < v) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Open neighborhood bitset.
    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v].clone())
    }

    /// `N[v]`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        VertexSet(s)
    }

    /// `N[u] ∩ N[v]`.
    pub fn common_closed(&self, u: usize, v: usize) -> VertexSet {
        self.closed_neighborhood(u)
            .intersection(&self.closed_neighborhood(v))
    }

    /// `|N[u] ∩ N[v]|`.
    pub fn common_closed_count(&self, u: usize, v: usize) -> usize {
        let mut c = self.adj[u].intersection_count(&self.adj[v]);
        if u == v {
            return c + 1;
        }
        if self.has_edge(u, v) {
            c += 2;
        }
        c
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_open_count(&self, u: usize, v: usize) -> usize {
        self.adj[u].intersection_count(&self.adj[v])
    }

    /// BFS distances from `s`; `None` for unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[s] = Some(0);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Two-coloring as `(part containing each component's least vertex, rest)`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// True for graphs with exactly one component (the null graph is not connected).
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.distances_from(0).iter().all(Option::is_some)
    }

    /// True when no two distinct vertices share a closed neighborhood.
    pub fn is_neighborhood_distinguishable(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        (0..self.n()).all(|v| seen.insert(self.closed_neighborhood(v)))
    }

    /// True when some edge lies in no triangle.
    pub fn has_edge_outside_triangles(&self) -> bool {
        self.edges()
            .into_iter()
            .any(|(u, v)| self.common_open_count(u, v) == 0)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// Subgraph induced on `vs`; vertex `i` of the result is `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        Graph::from_fn(vs.len(), |i, j| self.has_edge(vs[i], vs[j]))
    }

    /// Relabeled copy in which old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length");
        let mut g = Graph::empty(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_neighborhoods() {
        let k3 = complete(3).unwrap();
        assert_eq!(k3.closed_neighborhood(0).to_vec(), vec![0, 1, 2]);
        let p3 = path(3).unwrap();
        assert_eq!(p3.common_closed(0, 2).to_vec(), vec![1]);
        assert_eq!(p3.common_closed_count(0, 2), 1);
        assert_eq!(p3.common_closed_count(0, 1), 2);
        assert_eq!(p3.common_closed_count(1, 1), 3);
        let q3 = cube(3).unwrap();
        for (u, v) in q3.edges() {
            assert_eq!(q3.common_closed(u, v).to_vec(), vec![u, v]);
        }
    }

    #[test]
    fn girth_values() {
        assert_eq!(cube(3).unwrap().girth(), Some(4));
        assert_eq!(complete(4).unwrap().girth(), Some(3));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(cycle(7).unwrap().girth(), Some(7));
        assert_eq!(path(5).unwrap().girth(), None);
        assert_eq!(Graph::empty(3).girth(), None);
    }

    #[test]
    fn bipartite_crown() {
        let (a, b) = crown(10).unwrap().bipartition().unwrap();
        assert_eq!(a, vec![0, 1, 2, 3, 4]);
        assert_eq!(b, vec![5, 6, 7, 8, 9]);
        assert!(!cycle(5).unwrap().is_bipartite());
    }

    #[test]
    fn connectivity() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(g.distance(0, 3), None);
        assert!(path(4).unwrap().is_connected());
        assert_eq!(path(4).unwrap().distance(0, 3), Some(3));
        assert!(!Graph::empty(0).is_connected());
    }

    #[test]
    fn distinguishability() {
        assert!(!complete(3).unwrap().is_neighborhood_distinguishable());
        assert!(path(4).unwrap().is_neighborhood_distinguishable());
    }

    #[test]
    fn bad_edges_rejected() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn relabeling_and_complement() {
        let p = path(3).unwrap();
        let q = p.permuted(&[1, 0, 2]);
        assert!(q.has_edge(1, 0) && q.has_edge(0, 2) && !q.has_edge(1, 2));
        assert_eq!(complete(4).unwrap().complement(), Graph::empty(4));
        let sub = cycle(5).unwrap().induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub, path(3).unwrap());
    }
}
