//! Closed-form predictions of the nontrivial divisor `μ` and the explicit
//! constructions that go with them.

mod constructions;
mod tensor;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{Graph, GraphError};
use crate::intlin::IntLinError;
use crate::ra::{lattice_pair_sign, ra_lattice, PairSign};

pub use constructions::{
    binomial_mod_p, construct_prescribed, kneser_kernel_span_dim, kneser_kernel_span_rank,
    kneser_kernel_vector, kneser_prism_conditions, kneser_prism_params, minimal_n_for_nullity,
    normalize_divisors, strong_product_divisors, z_closed, z_recurrence,
};
pub use tensor::{
    mu_kneser_tensor_k2, mu_tensor, mu_tensor_bipartite, mu_tensor_both_bipartite,
    mu_tensor_complete, mu_tensor_completes, mu_tensor_no_triangle_edges, mu_tensor_scaled,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TheoremError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("divisor {next} is not a multiple of {prev}")]
    BrokenChain { prev: u64, next: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    IntLin(#[from] IntLinError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    Neighborly,
    HalfRa,
    PositivelyNeighborly,
    NegativelyNeighborly,
    Cartesian,
    Prism,
    UniqueCommonNeighbor,
    CartesianCompletes,
    TensorBipartite,
    TensorBothBipartite,
    TensorKneserK2,
    TensorComplete,
    TensorCompletes,
    TensorNoTriangleEdges,
    TensorScaled,
    Girth4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 16] = [
        TheoremId::Neighborly,
        TheoremId::HalfRa,
        TheoremId::PositivelyNeighborly,
        TheoremId::NegativelyNeighborly,
        TheoremId::Cartesian,
        TheoremId::Prism,
        TheoremId::UniqueCommonNeighbor,
        TheoremId::CartesianCompletes,
        TheoremId::TensorBipartite,
        TheoremId::TensorBothBipartite,
        TheoremId::TensorKneserK2,
        TheoremId::TensorComplete,
        TheoremId::TensorCompletes,
        TheoremId::TensorNoTriangleEdges,
        TheoremId::TensorScaled,
        TheoremId::Girth4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Neighborly => "neighborly",
            TheoremId::HalfRa => "half-ra",
            TheoremId::PositivelyNeighborly => "positively-neighborly",
            TheoremId::NegativelyNeighborly => "negatively-neighborly",
            TheoremId::Cartesian => "cartesian",
            TheoremId::Prism => "prism",
            TheoremId::UniqueCommonNeighbor => "unique-common-neighbor",
            TheoremId::CartesianCompletes => "cartesian-completes",
            TheoremId::TensorBipartite => "tensor-bipartite",
            TheoremId::TensorBothBipartite => "tensor-both-bipartite",
            TheoremId::TensorKneserK2 => "tensor-kneser-k2",
            TheoremId::TensorComplete => "tensor-complete",
            TheoremId::TensorCompletes => "tensor-completes",
            TheoremId::TensorNoTriangleEdges => "tensor-no-triangle-edges",
            TheoremId::TensorScaled => "tensor-scaled",
            TheoremId::Girth4 => "girth4",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = TheoremError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| TheoremError::InvalidParameter(format!("unknown theorem id {s:?}")))
    }
}

/// The gcd statistics a prediction was assembled from.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Ingredients {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa1: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa2: Option<u64>,
}

impl Ingredients {
    fn dk(delta: u64, kappa: u64) -> Self {
        Ingredients {
            delta: Some(delta),
            kappa: Some(kappa),
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuPrediction {
    pub theorem: TheoremId,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<u64>,
    pub ingredients: Ingredients,
    /// The failed hypothesis when `applicable` is false.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl MuPrediction {
    pub(crate) fn inapplicable(theorem: TheoremId, reason: impl Into<String>) -> Self {
        MuPrediction {
            theorem,
            applicable: false,
            mu: None,
            ingredients: Ingredients::default(),
            reason: Some(reason.into()),
        }
    }

    pub(crate) fn predicted(theorem: TheoremId, mu: u64, ingredients: Ingredients) -> Self {
        MuPrediction {
            theorem,
            applicable: true,
            mu: Some(mu),
            ingredients,
            reason: None,
        }
    }

    /// `μ = gcd(δ, κ)`, inapplicable when both are zero.
    pub(crate) fn from_gcd(theorem: TheoremId, ingredients: Ingredients) -> Self {
        let parts = [
            ingredients.delta,
            ingredients.kappa,
            ingredients.kappa1,
            ingredients.kappa2,
        ];
        let mu = parts.iter().flatten().fold(0u64, |acc, x| acc.gcd(x));
        if mu == 0 {
            let mut p = MuPrediction::inapplicable(theorem, "delta and kappa are both zero");
            p.ingredients = ingredients;
            return p;
        }
        MuPrediction::predicted(theorem, mu, ingredients)
    }

    pub(crate) fn with_reason_prefix(mut self, prefix: &str) -> Self {
        if let Some(r) = self.reason.take() {
            self.reason = Some(format!("{prefix}: {r}"));
        }
        self
    }
}

pub(crate) fn gcd_iter(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(0, |acc, x| acc.gcd(&x))
}

/// Unordered pairs `u < v`.
pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Pairs at distance exactly 2.
pub(crate) fn distance_two_pairs(g: &Graph) -> impl Iterator<Item = (usize, usize)> + '_ {
    pairs(g.n()).filter(|&(u, v)| !g.has_edge(u, v) && g.common_open_count(u, v) > 0)
}

/// Every degree odd and every pair of distinct vertices with an even number
/// of common neighbors.
pub fn half_ra_parity(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) % 2 == 1)
        && pairs(g.n()).all(|(u, v)| g.common_open_count(u, v).is_multiple_of(2))
}

fn two_or_one(parity: bool) -> u64 {
    if parity {
        2
    } else {
        1
    }
}

fn require_connected(theorem: TheoremId, g: &Graph) -> Result<(), MuPrediction> {
    if g.n() < 2 {
        return Err(MuPrediction::inapplicable(theorem, "needs at least 2 vertices"));
    }
    if !g.is_connected() {
        return Err(MuPrediction::inapplicable(theorem, "graph is not connected"));
    }
    Ok(())
}

/// `δ`, `κ` and `μ` for a neighborly graph with a signed partition `U ⊔ V`,
/// where `U = in_u`. The partition hypothesis is checked on the lattice.
pub fn mu_neighborly(g: &Graph, in_u: &[usize]) -> MuPrediction {
    let t = TheoremId::Neighborly;
    let n = g.n();
    if n == 0 {
        return MuPrediction::inapplicable(t, "empty graph");
    }
    let mut side = vec![false; n];
    for &u in in_u {
        if u >= n {
            return MuPrediction::inapplicable(t, format!("vertex {u} out of range"));
        }
        side[u] = true;
    }
    let l = ra_lattice(g);
    for v in 1..n {
        let s = lattice_pair_sign(&l, 0, v);
        let ok = if side[v] == side[0] {
            s.is_negative()
        } else {
            s.is_positive()
        };
        if !ok {
            return MuPrediction::inapplicable(
                t,
                format!("partition sign fails for vertices 0 and {v}"),
            );
        }
    }
    let signed = |set: &crate::graphs::VertexSet| -> i64 {
        set.iter()
            .map(|w| if side[w] { 1i64 } else { -1 })
            .sum::<i64>()
    };
    let delta = gcd_iter((0..n).map(|v| signed(&g.closed_neighborhood(v)).unsigned_abs()));
    let kappa = gcd_iter(pairs(n).map(|(u, v)| signed(&g.common_closed(u, v)).unsigned_abs()));
    MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
}

/// Neighborly with both `e_u ± e_v` in the lattice for some pair: `μ ≤ 2`,
/// decided by the parity test.
pub fn mu_half_ra(g: &Graph) -> MuPrediction {
    let t = TheoremId::HalfRa;
    if g.n() < 2 {
        return MuPrediction::inapplicable(t, "needs at least 2 vertices");
    }
    let l = ra_lattice(g);
    let edges = g.edges();
    if !edges
        .iter()
        .all(|&(u, v)| lattice_pair_sign(&l, u, v).is_signed())
    {
        return MuPrediction::inapplicable(t, "graph is not neighborly");
    }
    let both = pairs(g.n()).any(|(u, v)| lattice_pair_sign(&l, u, v) == PairSign::Both);
    if !both {
        return MuPrediction::inapplicable(t, "no pair with both e_u + e_v and e_u - e_v");
    }
    MuPrediction::predicted(t, two_or_one(half_ra_parity(g)), Ingredients::default())
}

pub fn mu_positively_neighborly(g: &Graph) -> MuPrediction {
    let t = TheoremId::PositivelyNeighborly;
    if let Err(p) = require_connected(t, g) {
        return p;
    }
    let l = ra_lattice(g);
    if !g
        .edges()
        .into_iter()
        .all(|(u, v)| lattice_pair_sign(&l, u, v).is_positive())
    {
        return MuPrediction::inapplicable(t, "graph is not positively neighborly");
    }
    if !g.is_bipartite() {
        return MuPrediction::predicted(t, two_or_one(half_ra_parity(g)), Ingredients::default());
    }
    bipartite_girth_gcd(t, g)
}

/// `gcd(δ, κ)` with `δ = gcd{deg − 1}` and `κ` over distance-2 pairs.
fn bipartite_girth_gcd(t: TheoremId, g: &Graph) -> MuPrediction {
    let delta = gcd_iter((0..g.n()).map(|v| g.degree(v) as u64 - 1));
    let kappa = gcd_iter(distance_two_pairs(g).map(|(u, v)| g.common_open_count(u, v) as u64));
    MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
}

pub fn mu_negatively_neighborly(g: &Graph) -> MuPrediction {
    let t = TheoremId::NegativelyNeighborly;
    if let Err(p) = require_connected(t, g) {
        return p;
    }
    let l = ra_lattice(g);
    if !g
        .edges()
        .into_iter()
        .all(|(u, v)| lattice_pair_sign(&l, u, v).is_negative())
    {
        return MuPrediction::inapplicable(t, "graph is not negatively neighborly");
    }
    let delta = gcd_iter((0..g.n()).map(|v| g.degree(v) as u64 + 1));
    let kappa = gcd_iter(pairs(g.n()).map(|(u, v)| g.common_closed_count(u, v) as u64));
    MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
}

pub fn mu_girth4(g: &Graph) -> MuPrediction {
    let t = TheoremId::Girth4;
    if let Err(p) = require_connected(t, g) {
        return p;
    }
    if g.girth() != Some(4) {
        return MuPrediction::inapplicable(t, "girth is not 4");
    }
    if g.is_bipartite() {
        return bipartite_girth_gcd(t, g);
    }
    let parity = (0..g.n()).all(|v| g.degree(v) % 2 == 1)
        && distance_two_pairs(g).all(|(u, v)| g.common_open_count(u, v).is_multiple_of(2));
    MuPrediction::predicted(t, two_or_one(parity), Ingredients::default())
}

/// All degrees share one parity; returns it (`true` for odd).
fn degree_parity(g: &Graph) -> Option<bool> {
    let first = g.degree(0) % 2 == 1;
    (0..g.n())
        .all(|v| (g.degree(v) % 2 == 1) == first)
        .then_some(first)
}

fn even_common_neighbors(g: &Graph) -> bool {
    pairs(g.n()).all(|(u, v)| g.common_open_count(u, v).is_multiple_of(2))
}

pub fn mu_cartesian(a: &Graph, b: &Graph) -> MuPrediction {
    let t = TheoremId::Cartesian;
    for (name, g) in [("first factor", a), ("second factor", b)] {
        if let Err(p) = require_connected(t, g) {
            return p.with_reason_prefix(name);
        }
    }
    let (ba, bb) = (a.is_bipartite(), b.is_bipartite());
    if ba == bb {
        let opposite = matches!(
            (degree_parity(a), degree_parity(b)),
            (Some(x), Some(y)) if x != y
        );
        let parity = opposite && even_common_neighbors(a) && even_common_neighbors(b);
        return MuPrediction::predicted(t, two_or_one(parity), Ingredients::default());
    }
    let (g1, g2) = if ba { (b, a) } else { (a, b) };
    let mut delta = 0u64;
    for u in 0..g1.n() {
        for i in 0..g2.n() {
            let x = 1 + g1.degree(u) as i64 - g2.degree(i) as i64;
            delta = delta.gcd(&x.unsigned_abs());
        }
    }
    let kappa1 = gcd_iter(pairs(g1.n()).map(|(u, v)| g1.common_closed_count(u, v) as u64));
    let kappa2 = gcd_iter(distance_two_pairs(g2).map(|(i, j)| g2.common_open_count(i, j) as u64));
    MuPrediction::from_gcd(
        t,
        Ingredients {
            delta: Some(delta),
            kappa1: Some(kappa1),
            kappa2: Some(kappa2),
            ..Default::default()
        },
    )
}

/// `g □ K_2` for connected non-bipartite `g`; `κ` ranges over `u ≠ v`.
pub fn mu_prism(g: &Graph) -> MuPrediction {
    let t = TheoremId::Prism;
    if let Err(p) = require_connected(t, g) {
        return p;
    }
    if g.is_bipartite() {
        return MuPrediction::inapplicable(t, "graph is bipartite");
    }
    let delta = gcd_iter((0..g.n()).map(|v| g.degree(v) as u64));
    let kappa = gcd_iter(pairs(g.n()).map(|(u, v)| g.common_closed_count(u, v) as u64));
    MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
}

/// RA when either factor has non-adjacent vertices with exactly one common
/// neighbor.
pub fn mu_unique_common_neighbor(a: &Graph, b: &Graph) -> MuPrediction {
    let t = TheoremId::UniqueCommonNeighbor;
    for (name, g) in [("first factor", a), ("second factor", b)] {
        if let Err(p) = require_connected(t, g) {
            return p.with_reason_prefix(name);
        }
    }
    let witness = |g: &Graph| distance_two_pairs(g).any(|(u, v)| g.common_open_count(u, v) == 1);
    if witness(a) || witness(b) {
        MuPrediction::predicted(t, 1, Ingredients::default())
    } else {
        MuPrediction::inapplicable(t, "no non-adjacent pair with a unique common neighbor")
    }
}

/// `K_{n_1} □ ... □ K_{n_m}`: RA iff `m` is even or some `n_i` is odd.
pub fn mu_cartesian_completes(ns: &[usize]) -> Result<MuPrediction, TheoremError> {
    if ns.len() < 2 || ns.iter().any(|&n| n < 2) {
        return Err(TheoremError::InvalidParameter(
            "need at least two factors, each of size >= 2".into(),
        ));
    }
    let ra = ns.len().is_multiple_of(2) || ns.iter().any(|n| n % 2 == 1);
    Ok(MuPrediction::predicted(
        TheoremId::CartesianCompletes,
        if ra { 1 } else { 2 },
        Ingredients::default(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, crown, cube, cycle, folded_cube, kneser, path};
    use crate::products::{cartesian, prism};
    use crate::ra::classify;

    fn computed_mu(g: &Graph) -> Option<u64> {
        classify(g).mu().map(|m| u64::try_from(m).unwrap())
    }

    #[test]
    fn neighborly_examples() {
        let cr = crown(10).unwrap();
        let p = mu_neighborly(&cr, &(0..5).collect::<Vec<_>>());
        assert_eq!(p.mu, Some(3));
        let q3 = cube(3).unwrap();
        let (u, _) = q3.bipartition().unwrap();
        assert_eq!(mu_neighborly(&q3, &u).mu, Some(2));
        let c4 = cycle(4).unwrap();
        let p = mu_neighborly(&c4, &[0, 2]);
        assert_eq!(p.mu, Some(1));
        assert_eq!(p.ingredients.delta, Some(1));
        assert!(!mu_neighborly(&cr, &[0]).applicable);
        assert!(!mu_neighborly(&complete(3).unwrap(), &[0]).applicable);
    }

    #[test]
    fn girth4_examples() {
        assert_eq!(mu_girth4(&cube(3).unwrap()).mu, Some(2));
        for n in 4..9 {
            assert_eq!(mu_girth4(&crown(2 * n).unwrap()).mu, Some(n as u64 - 2));
        }
        let fc = folded_cube(5).unwrap();
        assert_eq!(mu_girth4(&fc).mu, Some(2));
        assert_eq!(computed_mu(&fc), Some(2));
        assert!(!mu_girth4(&complete(4).unwrap()).applicable);
    }

    #[test]
    fn cartesian_examples() {
        let k4 = complete(4).unwrap();
        let k3 = complete(3).unwrap();
        assert_eq!(mu_cartesian(&k3, &k4).mu, Some(1));
        let k44 = cartesian(&k4, &k4);
        assert_eq!(mu_cartesian(&k44, &k4).mu, Some(2));
        assert_eq!(mu_cartesian_completes(&[4, 4, 4]).unwrap().mu, Some(2));
        let q2 = cube(2).unwrap();
        assert_eq!(mu_cartesian(&q2, &path(2).unwrap()).mu, Some(2));
        assert_eq!(mu_unique_common_neighbor(&path(3).unwrap(), &k4).mu, Some(1));
    }

    #[test]
    fn prism_examples() {
        let k62 = kneser(6, 2).unwrap();
        let p = mu_prism(&k62);
        assert_eq!(p.mu, Some(3));
        assert_eq!(p.ingredients, Ingredients::dk(6, 3));
        for (n, mu) in [(4, 4), (5, 1), (6, 2)] {
            let g = kneser(n, 2).unwrap().complement();
            assert_eq!(mu_prism(&g).mu, Some(mu));
            assert_eq!(computed_mu(&prism(&g)), Some(mu));
        }
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(t.as_str().parse::<TheoremId>().unwrap(), t);
        }
    }
}
