//! Activation and RA matrices, their elementary divisors, and the RA
//! classification.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::graphs::{graph6_encode, Graph};
use crate::intlin::{smith_of_hermite, IntMatrix, RowLattice, SmithForm};
use crate::serde_big;

/// `A_Γ = adjacency + I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActivationMatrix {
    matrix: IntMatrix,
}

impl ActivationMatrix {
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }
}

fn indicator(bits: &FixedBitSet, n: usize) -> Vec<BigInt> {
    (0..n)
        .map(|i| {
            if bits.contains(i) {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect()
}

pub fn activation_matrix(g: &Graph) -> ActivationMatrix {
    let n = g.n();
    let rows = (0..n)
        .map(|v| indicator(g.closed_neighborhood(v).bits(), n))
        .collect();
    ActivationMatrix {
        matrix: IntMatrix::from_big_rows(n, rows).expect("square rows"),
    }
}

/// Which neighborhood produced a row of `C_Γ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum RowSource {
    Vertex(usize),
    Pair(usize, usize),
}

/// `C_Γ` with zero and duplicate rows removed. Rows are kept as bitsets; the
/// first occurrence of each distinct row determines its provenance, and
/// vertex rows come first.
#[derive(Clone, Debug)]
pub struct RaMatrix {
    n: usize,
    rows: Vec<FixedBitSet>,
    provenance: Vec<RowSource>,
}

impl RaMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[FixedBitSet] {
        &self.rows
    }

    pub fn provenance(&self) -> &[RowSource] {
        &self.provenance
    }

    pub fn row_vector(&self, i: usize) -> Vec<BigInt> {
        indicator(&self.rows[i], self.n)
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_big_rows(self.n, (0..self.rows.len()).map(|i| self.row_vector(i)).collect())
            .expect("uniform rows")
    }

    /// Hermite basis of the row lattice, with the given column order
    /// (`order[j]` is the vertex placed in column `j`).
    pub fn lattice_with_order(&self, order: Option<&[usize]>) -> RowLattice {
        RowLattice::from_row_fn(self.n, || {
            self.rows.iter().map(move |r| match order {
                None => indicator(r, self.n),
                Some(ord) => ord
                    .iter()
                    .map(|&c| if r.contains(c) { BigInt::one() } else { BigInt::zero() })
                    .collect(),
            })
        })
    }

    pub fn lattice(&self) -> RowLattice {
        self.lattice_with_order(None)
    }
}

pub fn ra_matrix(g: &Graph) -> RaMatrix {
    let n = g.n();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut rows = Vec::new();
    let mut provenance = Vec::new();
    let closed: Vec<FixedBitSet> = (0..n).map(|v| g.closed_neighborhood(v).bits().clone()).collect();
    for (v, s) in closed.iter().enumerate() {
        if seen.insert(s.clone()) {
            rows.push(s.clone());
            provenance.push(RowSource::Vertex(v));
        }
    }
    for v in 0..n {
        for u in 0..v {
            let mut s = closed[u].clone();
            s.intersect_with(&closed[v]);
            if s.is_clear() || seen.contains(&s) {
                continue;
            }
            seen.insert(s.clone());
            rows.push(s);
            provenance.push(RowSource::Pair(u, v));
        }
    }
    RaMatrix {
        n,
        rows,
        provenance,
    }
}

/// Row lattice `Z^{C_Γ}`.
pub fn ra_lattice(g: &Graph) -> RowLattice {
    ra_matrix(g).lattice()
}

fn divisors_of_lattice(l: &RowLattice, n: usize) -> SmithForm {
    let s = smith_of_hermite(l.basis());
    s.resized(n)
}

/// Smith form of `C_Γ`, padded with zeros to length `n`.
pub fn elementary_divisors(g: &Graph) -> SmithForm {
    divisors_of_lattice(&ra_lattice(g), g.n())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RaStatus {
    Ra,
    OneOverMu(BigInt),
    General,
}

impl RaStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RaStatus::Ra => "RA",
            RaStatus::OneOverMu(_) => "1/k-RA",
            RaStatus::General => "general",
        }
    }

    /// `1` for RA, `k` for 1/k-RA.
    pub fn mu(&self) -> Option<BigInt> {
        match self {
            RaStatus::Ra => Some(BigInt::one()),
            RaStatus::OneOverMu(k) => Some(k.clone()),
            RaStatus::General => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaClassification {
    pub status: RaStatus,
    pub divisors: Vec<BigInt>,
    pub nullity: usize,
    pub axis_multiples: Vec<BigInt>,
    /// Divisors have the shape `[1^{n-1}, k]` with `k >= 2` but some axis
    /// multiple lies strictly between 1 and `k`, so some column order puts
    /// two pivots other than 1 on the Hermite diagonal.
    pub nonuniform_axis: bool,
}

impl RaClassification {
    pub fn is_ra(&self) -> bool {
        self.status == RaStatus::Ra
    }

    pub fn mu(&self) -> Option<BigInt> {
        self.status.mu()
    }

    /// Divisors other than 1, zeros included.
    pub fn nontrivial_divisors(&self) -> Vec<BigInt> {
        self.divisors.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn classify_lattice(l: &RowLattice) -> RaClassification {
    let n = l.ambient_dim();
    let s = divisors_of_lattice(l, n);
    let divisors = s.divisors().to_vec();
    let nullity = s.nullity();
    let all_one = divisors.iter().all(One::is_one);
    let axis_multiples = if all_one {
        vec![BigInt::one(); n]
    } else {
        l.axis_multiples()
    };
    let shape_k = (n > 0
        && divisors[..n - 1].iter().all(One::is_one)
        && divisors[n - 1] > BigInt::one())
    .then(|| divisors[n - 1].clone());
    let (status, nonuniform_axis) = if all_one {
        (RaStatus::Ra, false)
    } else if let Some(k) = shape_k {
        if axis_multiples.iter().all(|a| a.is_one() || *a == k) {
            (RaStatus::OneOverMu(k), false)
        } else {
            (RaStatus::General, true)
        }
    } else {
        (RaStatus::General, false)
    };
    RaClassification {
        status,
        divisors,
        nullity,
        axis_multiples,
        nonuniform_axis,
    }
}

/// Classifies the whole graph through its full RA matrix.
pub fn classify(g: &Graph) -> RaClassification {
    classify_lattice(&ra_lattice(g))
}

/// One classification per connected component, with the component's
/// vertices (in the original numbering).
pub fn classify_components(g: &Graph) -> Vec<(Vec<usize>, Graph, RaClassification)> {
    g.components()
        .into_iter()
        .map(|vs| {
            let sub = g.induced_subgraph(&vs);
            let c = classify(&sub);
            (vs, sub, c)
        })
        .collect()
}

/// Serializable analysis record for one (connected) graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationRecord {
    pub graph6: String,
    pub n: usize,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub connected: bool,
    #[serde(with = "serde_big::vec")]
    pub divisors: Vec<BigInt>,
    pub nullity: usize,
    pub status: String,
    #[serde(with = "serde_big::option")]
    pub mu: Option<BigInt>,
    #[serde(with = "serde_big::vec")]
    pub axis_multiples: Vec<BigInt>,
}

impl ClassificationRecord {
    pub fn new(g: &Graph, c: &RaClassification) -> Self {
        ClassificationRecord {
            graph6: graph6_encode(g),
            n: g.n(),
            girth: g.girth(),
            bipartite: g.is_bipartite(),
            connected: g.is_connected(),
            divisors: c.divisors.clone(),
            nullity: c.nullity,
            status: c.status.label().to_string(),
            mu: c.mu(),
            axis_multiples: c.axis_multiples.clone(),
        }
    }
}

pub fn analyze(g: &Graph) -> ClassificationRecord {
    ClassificationRecord::new(g, &classify(g))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairSign {
    Positive,
    Negative,
    Both,
    None,
}

impl PairSign {
    pub fn is_positive(self) -> bool {
        matches!(self, PairSign::Positive | PairSign::Both)
    }

    pub fn is_negative(self) -> bool {
        matches!(self, PairSign::Negative | PairSign::Both)
    }

    pub fn is_signed(self) -> bool {
        self != PairSign::None
    }
}

/// Membership of `e_u + e_v` and `e_u - e_v` in the lattice.
pub fn lattice_pair_sign(l: &RowLattice, u: usize, v: usize) -> PairSign {
    assert_ne!(u, v, "pair_sign needs distinct vertices");
    let n = l.ambient_dim();
    let mut plus = vec![BigInt::zero(); n];
    plus[u] = BigInt::one();
    plus[v] = BigInt::one();
    let mut minus = plus.clone();
    minus[v] = -BigInt::one();
    let p = l.contains(&plus).expect("dimension");
    let m = l.contains(&minus).expect("dimension");
    match (p, m) {
        (true, true) => PairSign::Both,
        (true, false) => PairSign::Positive,
        (false, true) => PairSign::Negative,
        (false, false) => PairSign::None,
    }
}

pub fn pair_sign(g: &Graph, u: usize, v: usize) -> PairSign {
    lattice_pair_sign(&ra_lattice(g), u, v)
}

fn every_edge(g: &Graph, pred: impl Fn(PairSign) -> bool) -> bool {
    let l = ra_lattice(g);
    g.edges()
        .into_iter()
        .all(|(u, v)| pred(lattice_pair_sign(&l, u, v)))
}

pub fn is_neighborly(g: &Graph) -> bool {
    every_edge(g, PairSign::is_signed)
}

pub fn is_positively_neighborly(g: &Graph) -> bool {
    every_edge(g, PairSign::is_positive)
}

pub fn is_negatively_neighborly(g: &Graph) -> bool {
    every_edge(g, PairSign::is_negative)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, crown, cube, graph6_decode, path};

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|x| i64::try_from(x).unwrap()).collect()
    }

    #[test]
    fn activation_examples() {
        assert_eq!(activation_matrix(&complete(3).unwrap()).matrix(), &IntMatrix::ones(3));
        let p3 = IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1]]).unwrap();
        assert_eq!(activation_matrix(&path(3).unwrap()).matrix(), &p3);
    }

    #[test]
    fn ra_matrix_rows() {
        let c = ra_matrix(&path(3).unwrap());
        let rows: Vec<Vec<i64>> = (0..c.row_count()).map(|i| ints(&c.row_vector(i))).collect();
        assert_eq!(rows, vec![vec![1, 1, 0], vec![1, 1, 1], vec![0, 1, 1], vec![0, 1, 0]]);
        assert_eq!(c.provenance()[3], RowSource::Pair(0, 2));
        assert_eq!(ra_matrix(&complete(5).unwrap()).row_count(), 1);
        // Cr(8): 8 neighborhoods, 12 edge pairs {u, v'} and 12 same-side pairs,
        // which are all distinct and nonzero; the 4 pairs {i, i'} meet in nothing.
        let cr = ra_matrix(&crown(8).unwrap());
        assert_eq!(cr.row_count(), 8 + 12 + 12);
    }

    #[test]
    fn divisor_examples() {
        assert_eq!(ints(elementary_divisors(&cube(3).unwrap()).divisors()), vec![1, 1, 1, 1, 1, 1, 1, 2]);
        assert_eq!(ints(elementary_divisors(&complete(3).unwrap()).divisors()), vec![1, 0, 0]);
        let k62 = crate::graphs::kneser(6, 2).unwrap();
        let d = ints(elementary_divisors(&k62).divisors());
        assert_eq!(d, [vec![1; 11], vec![2; 4]].concat());
    }

    #[test]
    fn classification_examples() {
        assert!(classify(&cube(4).unwrap()).is_ra());
        for half in 4..8 {
            let c = classify(&crown(2 * half).unwrap());
            assert_eq!(c.status, RaStatus::OneOverMu(BigInt::from(half - 2)));
        }
        let g = graph6_decode("I?otQji\\O").unwrap();
        let c = classify(&g);
        assert_eq!(c.status, RaStatus::General);
        assert_eq!(ints(&c.divisors), [vec![1; 9], vec![0]].concat());
        assert_eq!(c.nullity, 1);
    }

    #[test]
    fn signs() {
        let q3 = cube(3).unwrap();
        assert!(pair_sign(&q3, 0, 1).is_positive());
        assert_eq!(pair_sign(&path(4).unwrap(), 0, 3), PairSign::Both);
        assert_eq!(pair_sign(&complete(3).unwrap(), 0, 1), PairSign::None);
        assert!(!is_neighborly(&complete(3).unwrap()));
        assert!(is_positively_neighborly(&q3));
    }

    #[test]
    fn components_are_classified_separately() {
        let g = crate::products::disjoint_union(&[crown(8).unwrap(), path(3).unwrap()]);
        let parts = classify_components(&g);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].2.status, RaStatus::OneOverMu(BigInt::from(2)));
        assert!(parts[1].2.is_ra());
        let whole = classify(&g);
        assert_eq!(whole.status, RaStatus::OneOverMu(BigInt::from(2)));
        assert!(!whole.nonuniform_axis);
    }

    #[test]
    fn intermediate_axis_multiple_is_general() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 2]]).unwrap();
        let c = classify_lattice(&crate::intlin::row_lattice(&m));
        assert_eq!(c.divisors, vec![BigInt::from(1), BigInt::from(4)]);
        assert_eq!(c.axis_multiples, vec![BigInt::from(4), BigInt::from(2)]);
        assert_eq!(c.status, RaStatus::General);
        assert!(c.nonuniform_axis);
    }

    #[test]
    fn pyramid_apex_is_an_axis() {
        let g = crate::products::pyramid(&crown(8).unwrap());
        let c = classify(&g);
        assert_eq!(c.axis_multiples[0], BigInt::from(1));
        assert_eq!(c.status, RaStatus::OneOverMu(BigInt::from(2)));
    }

    #[test]
    fn record_json_fields() {
        let r = analyze(&cube(3).unwrap());
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "1/k-RA");
        assert_eq!(v["mu"], 2);
        assert_eq!(v["girth"], 4);
        assert_eq!(v["divisors"].as_array().unwrap().len(), 8);
        let fields: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(fields.len(), 10);
    }
}
