use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ragraph::graphs::{binary_graph, complete, crown, cube, cycle, folded_cube, kneser, paw, path, star, Graph};
use ragraph::group_oracle::{
    commutator_subgroup, cyclic, dihedral, direct_product, graph_power, heisenberg, FiniteGroup, DEFAULT_CAP,
};
use ragraph::products::{pair_index, tensor};
use ragraph::ra::{elementary_divisors, ra_lattice};

fn groups() -> Vec<FiniteGroup> {
    vec![
        heisenberg(2).unwrap(),
        heisenberg(3).unwrap(),
        dihedral(8).unwrap(),
        dihedral(12).unwrap(),
        direct_product(&cyclic(2).unwrap(), &dihedral(8).unwrap()).unwrap(),
    ]
}

#[test]
fn subgroup_orders_divide_the_group_order() {
    for g in groups() {
        for a in 0..g.order() {
            assert_eq!(g.order() % g.element_order(a), 0, "{} element {a}", g.name());
            for b in [0, g.order() / 2, g.order() - 1] {
                let h = g.closure(&[a, b]);
                assert_eq!(g.order() % h.len(), 0, "{} <{a}, {b}>", g.name());
            }
        }
    }
}

#[test]
fn commutator_subgroups_have_known_orders() {
    // H(F_p) has centre of order p; D_{2m} has rotations by even steps.
    let want = [2, 3, 2, 3, 2];
    for (g, w) in groups().iter().zip(want) {
        assert_eq!(commutator_subgroup(g).len(), w, "{}", g.name());
    }
}

#[test]
fn graph_power_orders_divide_the_full_power() {
    for g in groups().iter().take(3) {
        for graph in [path(3).unwrap(), cycle(4).unwrap(), paw(), complete(3).unwrap()] {
            let s = graph_power(g, &graph, DEFAULT_CAP).unwrap();
            let full = (g.order() as u128).pow(graph.n() as u32);
            assert_eq!(full % s.order() as u128, 0, "{} on {} vertices", g.name(), graph.n());
        }
    }
}

fn difference(n: usize, a: usize, b: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(0); n];
    v[a] += 1;
    v[b] -= 1;
    v
}

#[test]
fn tensor_with_triangle_free_edge_makes_pairs_negative_in_each_fibre() {
    let gammas: Vec<Graph> = vec![complete(3).unwrap(), cycle(5).unwrap(), paw(), complete(4).unwrap()];
    let lambdas: Vec<Graph> = vec![path(2).unwrap(), path(4).unwrap(), cycle(5).unwrap(), paw(), star(4).unwrap(), cube(3).unwrap()];
    for g in &gammas {
        for l in &lambdas {
            assert!(l.has_edge_outside_triangles());
            let t = tensor(g, l);
            let lat = ra_lattice(&t);
            let nl = l.n();
            for lambda in 0..nl {
                for u in 0..g.n() {
                    for v in u + 1..g.n() {
                        let x = difference(t.n(), pair_index(u, lambda, nl), pair_index(v, lambda, nl));
                        assert!(lat.contains(&x).unwrap(), "({u},{lambda}) - ({v},{lambda})");
                    }
                }
            }
        }
    }
}

#[test]
fn divisors_do_not_depend_on_vertex_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let family = [
        cube(4).unwrap(),
        folded_cube(5).unwrap(),
        crown(14).unwrap(),
        kneser(7, 2).unwrap(),
        binary_graph(12).unwrap(),
        paw(),
    ];
    for g in &family {
        let want = elementary_divisors(g);
        for _ in 0..5 {
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(elementary_divisors(&g.permuted(&perm)), want);
        }
    }
}
