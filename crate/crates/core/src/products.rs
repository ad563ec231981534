//! Graph products and combinations. Product vertex `(u, i)` has index
//! `u * b.n() + i`.

use crate::graphs::Graph;

/// Index of `(u, i)` in a product whose second factor has `nb` vertices.
pub fn pair_index(u: usize, i: usize, nb: usize) -> usize {
    u * nb + i
}

fn product(a: &Graph, b: &Graph, adjacent: impl Fn(bool, bool, bool, bool) -> bool) -> Graph {
    let nb = b.n();
    Graph::from_fn(a.n() * nb, |x, y| {
        let (u, i) = (x / nb, x % nb);
        let (v, j) = (y / nb, y % nb);
        adjacent(u == v, a.has_edge(u, v), i == j, b.has_edge(i, j))
    })
}

/// `a □ b`: equal in one coordinate and adjacent in the other.
pub fn cartesian(a: &Graph, b: &Graph) -> Graph {
    product(a, b, |eu, au, ei, bi| (eu && bi) || (au && ei))
}

/// `a × b`: adjacent in both coordinates.
pub fn tensor(a: &Graph, b: &Graph) -> Graph {
    product(a, b, |_, au, _, bi| au && bi)
}

/// `a ⊠ b`: union of the cartesian and tensor edge sets.
pub fn strong(a: &Graph, b: &Graph) -> Graph {
    product(a, b, |eu, au, ei, bi| (eu || au) && (ei || bi))
}

/// Left fold of a binary product over `factors`.
pub fn fold_product(factors: &[Graph], op: fn(&Graph, &Graph) -> Graph) -> Option<Graph> {
    let (first, rest) = factors.split_first()?;
    Some(rest.iter().fold(first.clone(), |acc, g| op(&acc, g)))
}

/// Disjoint union with the parts placed in order.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let n = parts.iter().map(Graph::n).sum();
    let mut g = Graph::empty(n);
    let mut offset = 0;
    for p in parts {
        for (u, v) in p.edges() {
            g.add_edge(offset + u, offset + v);
        }
        offset += p.n();
    }
    g
}

/// `a + b`: disjoint union plus every edge between the two sides.
pub fn join(a: &Graph, b: &Graph) -> Graph {
    let na = a.n();
    let mut g = disjoint_union(&[a.clone(), b.clone()]);
    for u in 0..na {
        for v in 0..b.n() {
            g.add_edge(u, na + v);
        }
    }
    g
}

/// `K_1 + g` with the apex at vertex 0.
pub fn pyramid(g: &Graph) -> Graph {
    join(&Graph::empty(1), g)
}

/// `g □ K_2`.
pub fn prism(g: &Graph) -> Graph {
    cartesian(g, &crate::graphs::path(2).expect("K_2"))
}
