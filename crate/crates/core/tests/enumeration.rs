mod common;

use common::{all_graphs, connected_graphs, CONNECTED_COUNTS, GRAPH_COUNTS};
use ragraph::graphs::{are_isomorphic, cube};
use ragraph::ra::classify;

#[test]
fn generator_matches_known_counts() {
    let levels = all_graphs(8);
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(level.len(), GRAPH_COUNTS[n], "graphs on {n} vertices");
        let connected = level.iter().filter(|g| g.n() == 0 || g.is_connected()).count();
        assert_eq!(connected, CONNECTED_COUNTS[n], "connected graphs on {n} vertices");
    }
}

#[test]
fn cube_is_the_only_small_girth4_non_ra_graph() {
    let non_ra: Vec<_> = connected_graphs(8)
        .into_iter()
        .filter(|g| g.girth() == Some(4) && !classify(g).is_ra())
        .collect();
    assert_eq!(non_ra.len(), 1);
    assert!(are_isomorphic(&non_ra[0], &cube(3).unwrap()));
}

/// About two minutes in the test profile.
#[test]
#[ignore]
fn nine_vertex_girth3_not_ra_count() {
    use ragraph::verify::{categorize, BatchCategory};
    let levels = all_graphs(9);
    let connected: Vec<_> = levels[9].iter().filter(|g| g.is_connected()).collect();
    assert_eq!(connected.len(), 261080);
    let count = connected
        .iter()
        .filter(|g| categorize(g) == BatchCategory::Girth3NotRa)
        .count();
    assert_eq!(count, 3);
}
