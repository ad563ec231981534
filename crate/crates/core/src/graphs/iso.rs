use super::Graph;

/// Backtracking isomorphism test, practical up to roughly a dozen vertices.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    let (deg_a, deg_b) = (da.clone(), db.clone());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend(a, b, &deg_a, &deg_b, 0, &mut map, &mut used)
}

fn extend(
    a: &Graph,
    b: &Graph,
    deg_a: &[usize],
    deg_b: &[usize],
    v: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if v == a.n() {
        return true;
    }
    for w in 0..b.n() {
        if used[w] || deg_a[v] != deg_b[w] {
            continue;
        }
        if (0..v).any(|u| a.has_edge(u, v) != b.has_edge(map[u], w)) {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, deg_a, deg_b, v + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{crown, cube, cycle, path};

    #[test]
    fn crown_eight_is_cube() {
        assert!(are_isomorphic(&crown(8).unwrap(), &cube(3).unwrap()));
    }

    #[test]
    fn relabeled_graphs_match() {
        let g = cycle(6).unwrap();
        assert!(are_isomorphic(&g, &g.permuted(&[3, 5, 0, 1, 4, 2])));
        assert!(!are_isomorphic(&cycle(4).unwrap(), &path(4).unwrap()));
        let two_triangles = crate::graphs::Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)],
        )
        .unwrap();
        assert!(!are_isomorphic(&two_triangles, &cycle(6).unwrap()));
    }
}
