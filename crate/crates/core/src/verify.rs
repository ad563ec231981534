//! Named verification suites shared by the command line and the tests.
//!
//! Every suite produces rows `(check, input, predicted, computed, status)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{
    are_isomorphic, binary_graph, complete, complete_bipartite, crown, cube, cycle, folded_cube,
    graph6_decode, kneser, path, petersen, star, Graph,
};
use crate::group_oracle::{
    comm_b, commutator_subgroup, dihedral, direct_product, cyclic, graph_power, heisenberg,
    intersection_order, is_g_ra, matrix_power, matrix_power_generators, subgroup_matrix_power,
    tuple_fingerprint, FiniteGroup, DEFAULT_CAP,
};
use crate::intlin::{hermite_normal_form, IntMatrix};
use crate::products::{cartesian, fold_product, prism, pyramid, strong, tensor};
use crate::ra::{classify, classify_components, elementary_divisors, ra_matrix, RaClassification};
use crate::theorems::{
    construct_prescribed, kneser_kernel_span_dim, kneser_kernel_span_rank, kneser_kernel_vector,
    mu_cartesian, mu_cartesian_completes, mu_girth4, mu_half_ra, mu_kneser_tensor_k2,
    mu_negatively_neighborly, mu_neighborly, mu_positively_neighborly, mu_prism, mu_tensor,
    mu_tensor_completes, mu_tensor_scaled, mu_unique_common_neighbor, normalize_divisors,
    strong_product_divisors, z_closed, z_recurrence, MuPrediction,
};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown suite {0:?}")]
pub struct UnknownSuite(pub String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub theorem_id: String,
    pub input: String,
    pub predicted: String,
    pub computed: String,
    pub status: CheckStatus,
}

impl VerifyRow {
    fn new(
        check: impl Into<String>,
        input: impl Into<String>,
        predicted: impl Into<String>,
        computed: impl Into<String>,
    ) -> Self {
        let predicted = predicted.into();
        let computed = computed.into();
        let status = if predicted == computed {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        VerifyRow {
            theorem_id: check.into(),
            input: input.into(),
            predicted,
            computed,
            status,
        }
    }

    fn error(check: &str, input: impl Into<String>, predicted: impl Into<String>, e: impl fmt::Display) -> Self {
        VerifyRow {
            theorem_id: check.into(),
            input: input.into(),
            predicted: predicted.into(),
            computed: format!("error: {e}"),
            status: CheckStatus::Fail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hermite,
    Cubes,
    Crowns,
    KneserTable,
    KernelGraphs,
    HalfRa,
    Binary,
    Prescribed,
    Predictors,
    Strong,
    KneserKernel,
    Group,
    All,
}

impl Suite {
    pub const ALL: [Suite; 13] = [
        Suite::Hermite,
        Suite::Cubes,
        Suite::Crowns,
        Suite::KneserTable,
        Suite::KernelGraphs,
        Suite::HalfRa,
        Suite::Binary,
        Suite::Prescribed,
        Suite::Predictors,
        Suite::Strong,
        Suite::KneserKernel,
        Suite::Group,
        Suite::All,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Hermite => "hermite",
            Suite::Cubes => "cubes",
            Suite::Crowns => "crowns",
            Suite::KneserTable => "kneser-table",
            Suite::KernelGraphs => "kernel-graphs",
            Suite::HalfRa => "half-ra",
            Suite::Binary => "binary",
            Suite::Prescribed => "prescribed",
            Suite::Predictors => "predictors",
            Suite::Strong => "strong",
            Suite::KneserKernel => "kneser-kernel",
            Suite::Group => "group",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = UnknownSuite;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| UnknownSuite(s.to_string()))
    }
}

/// Runs a suite. `slow` adds the large Kneser entries.
pub fn run_suite(suite: Suite, slow: bool) -> Vec<VerifyRow> {
    match suite {
        Suite::Hermite => hermite_rows(),
        Suite::Cubes => cube_rows(),
        Suite::Crowns => crown_rows(),
        Suite::KneserTable => kneser_table_rows(slow),
        Suite::KernelGraphs => kernel_graph_rows(),
        Suite::HalfRa => half_ra_rows(),
        Suite::Binary => binary_rows(),
        Suite::Prescribed => prescribed_rows(),
        Suite::Predictors => predictor_rows(),
        Suite::Strong => strong_rows(),
        Suite::KneserKernel => kneser_kernel_rows(),
        Suite::Group => group_rows(),
        Suite::All => Suite::ALL[..Suite::ALL.len() - 1]
            .iter()
            .flat_map(|&s| run_suite(s, slow))
            .collect(),
    }
}

/// Header plus one tab-separated line per row.
pub fn to_tsv(rows: &[VerifyRow]) -> String {
    let mut out = String::from("theorem_id\tinput\tpredicted\tcomputed\tstatus\n");
    for r in rows {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            r.theorem_id, r.input, r.predicted, r.computed, r.status
        ));
    }
    out
}

/// Run-length notation: `[1,1,2,2,0]` becomes `1^2,2^2,0`.
pub fn format_divisors(ds: &[BigInt]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < ds.len() {
        let mut j = i;
        while j < ds.len() && ds[j] == ds[i] {
            j += 1;
        }
        parts.push(if j - i == 1 {
            ds[i].to_string()
        } else {
            format!("{}^{}", ds[i], j - i)
        });
        i = j;
    }
    parts.join(",")
}

/// Divisors greater than 1, zeros excluded, in run-length notation.
pub fn format_nontrivial(ds: &[BigInt]) -> String {
    let big: Vec<BigInt> = ds.iter().filter(|d| **d > BigInt::one()).cloned().collect();
    if big.is_empty() {
        "none".into()
    } else {
        format_divisors(&big)
    }
}

/// `RA`, `1/k-RA` with the value of `k`, or `general`.
pub fn status_text(c: &RaClassification) -> String {
    match c.mu() {
        Some(m) if m.is_one() => "RA".into(),
        Some(m) => format!("1/{m}-RA"),
        None => "general".into(),
    }
}

fn mu_text(mu: u64) -> String {
    if mu == 1 {
        "RA".into()
    } else {
        format!("1/{mu}-RA")
    }
}

fn hermite_rows() -> Vec<VerifyRow> {
    let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 2]]).expect("square");
    let swapped = m.select_columns(&[1, 0]).expect("permutation");
    [("[[2,1],[0,2]]", m, "2,2"), ("[[1,2],[2,0]]", swapped, "1,4")]
        .into_iter()
        .map(|(input, m, want)| {
            let h = hermite_normal_form(&m);
            let diag: Vec<String> = h.diagonal().iter().map(ToString::to_string).collect();
            VerifyRow::new("hermite-pivots", input, want, diag.join(","))
        })
        .collect()
}

fn cube_rows() -> Vec<VerifyRow> {
    (2..=6)
        .map(|d| {
            let want = if d % 2 == 0 { "RA" } else { "1/2-RA" };
            let g = cube(d).expect("d >= 1");
            VerifyRow::new("cube", format!("Q{d}"), want, status_text(&classify(&g)))
        })
        .collect()
}

fn crown_rows() -> Vec<VerifyRow> {
    (4..=10)
        .map(|n| {
            let g = crown(2 * n).expect("n >= 2");
            VerifyRow::new(
                "crown",
                format!("Cr({})", 2 * n),
                format!("1/{}-RA", n - 2),
                status_text(&classify(&g)),
            )
        })
        .collect()
}

/// Nontrivial divisors of `C_{Kn(n, p)}`: `(n, p, divisors, slow)`.
pub const KNESER_TABLE: [(usize, usize, &str, bool); 11] = [
    (6, 2, "2^4", false),
    (8, 2, "2^7", false),
    (10, 2, "2^8", false),
    (12, 2, "2^10,4", false),
    (14, 2, "2^12", true),
    (16, 2, "2^15", true),
    (18, 2, "2^16", true),
    (20, 2, "2^18,4", true),
    (9, 3, "3^7", false),
    (12, 3, "3^10", true),
    (15, 3, "3,9^13", true),
];

fn kneser_table_rows(slow: bool) -> Vec<VerifyRow> {
    KNESER_TABLE
        .iter()
        .filter(|e| slow || !e.3)
        .map(|&(n, p, want, _)| {
            let g = kneser(n, p).expect("valid parameters");
            let s = elementary_divisors(&g);
            VerifyRow::new("kneser-table", format!("Kn({n},{p})"), want, format_nontrivial(s.divisors()))
        })
        .collect()
}

fn kernel_graph_rows() -> Vec<VerifyRow> {
    ["I?otQji\\O", "ICQrThix_"]
        .into_iter()
        .map(|s| match graph6_decode(s) {
            Ok(g) => {
                let c = classify(&g);
                VerifyRow::new("kernel-graph", s, "1^9,0", format_divisors(&c.divisors))
            }
            Err(e) => VerifyRow::error("kernel-graph", s, "1^9,0", e),
        })
        .collect()
}

fn half_ra_rows() -> Vec<VerifyRow> {
    let mut inputs: Vec<(String, Result<Graph, String>)> = vec![(
        "pyramid(Cr(8))".into(),
        Ok(pyramid(&crown(8).expect("crown"))),
    )];
    for s in ["H?zTb_{", "HCOfFz~"] {
        inputs.push((s.into(), graph6_decode(s).map_err(|e| e.to_string())));
    }
    inputs
        .into_iter()
        .map(|(name, g)| match g {
            Ok(g) => {
                let c = classify(&g);
                let girth = g.girth().map_or("none".into(), |x| x.to_string());
                VerifyRow::new(
                    "girth3-half-ra",
                    name,
                    "1/2-RA girth 3",
                    format!("{} girth {girth}", status_text(&c)),
                )
            }
            Err(e) => VerifyRow::error("girth3-half-ra", name, "1/2-RA girth 3", e),
        })
        .collect()
}

fn binary_rows() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let mut agree = 0;
    let mut first = None;
    for n in 2..=512 {
        let (r, c) = (z_recurrence(n), z_closed(n));
        if r.is_ok() && r == c {
            agree += 1;
        }
        if first.is_none() && r.as_ref().is_ok_and(|&z| z > 0) {
            first = Some(n);
        }
    }
    rows.push(VerifyRow::new("z-closed-form", "2..=512", "511", agree.to_string()));
    rows.push(VerifyRow::new(
        "z-first-nonzero",
        "z(n) > 0",
        "8",
        first.map_or("none".into(), |n| n.to_string()),
    ));
    for n in 2..=40 {
        let g = binary_graph(n).expect("n >= 2");
        let z = z_recurrence(n).expect("n >= 2");
        rows.push(VerifyRow::new(
            "binary-nullity",
            format!("Bg({n})"),
            z.to_string(),
            elementary_divisors(&g).nullity().to_string(),
        ));
    }
    rows
}

/// Chains and nullities exercised by the prescribed-construction suite.
pub const PRESCRIBED: [(&[u64], usize); 5] = [(&[2], 0), (&[3], 0), (&[2, 4], 0), (&[2, 2], 1), (&[6], 2)];

/// `d_1,...,d_m` then `0^r`, or `none`.
fn prescribed_text(ds: &[u64], r: usize) -> String {
    let mut v: Vec<BigInt> = ds.iter().map(|&d| BigInt::from(d)).collect();
    v.extend(std::iter::repeat_n(BigInt::zero(), r));
    if v.is_empty() {
        "none".into()
    } else {
        format_divisors(&v)
    }
}

/// Divisors other than 1 in run-length notation.
pub fn format_not_one(ds: &[BigInt]) -> String {
    let v: Vec<BigInt> = ds.iter().filter(|d| !d.is_one()).cloned().collect();
    if v.is_empty() {
        "none".into()
    } else {
        format_divisors(&v)
    }
}

fn prescribed_rows() -> Vec<VerifyRow> {
    PRESCRIBED
        .iter()
        .map(|&(ds, r)| {
            let input = format!("divisors {ds:?} nullity {r}");
            let want = prescribed_text(ds, r);
            match construct_prescribed(ds, r) {
                Ok(g) => VerifyRow::new("prescribed", input, want, format_not_one(&classify(&g).divisors)),
                Err(e) => VerifyRow::error("prescribed", input, want, e),
            }
        })
        .collect()
}

/// One graph of the predictor corpus with every prediction that targets it.
#[derive(Clone, Debug)]
pub struct PredictorCase {
    pub input: String,
    pub graph: Graph,
    pub predictions: Vec<MuPrediction>,
}

fn single_graph_predictions(g: &Graph) -> Vec<MuPrediction> {
    let mut out = vec![
        mu_neighborly(g, &(0..g.n()).collect::<Vec<_>>()),
        mu_half_ra(g),
        mu_positively_neighborly(g),
        mu_negatively_neighborly(g),
        mu_girth4(g),
    ];
    if let Some((a, _)) = g.bipartition() {
        out.push(mu_neighborly(g, &a));
    }
    out
}

fn small_factors() -> Vec<(String, Graph)> {
    let mut f: Vec<(String, Graph)> = Vec::new();
    for n in 2..=5 {
        f.push((format!("P{n}"), path(n).expect("path")));
    }
    for n in 3..=6 {
        f.push((format!("C{n}"), cycle(n).expect("cycle")));
    }
    for n in 3..=5 {
        f.push((format!("K{n}"), complete(n).expect("complete")));
    }
    f.push(("K1,3".into(), star(4).expect("star")));
    f.push(("K2,3".into(), complete_bipartite(2, 3).expect("bipartite")));
    f.push(("Q3".into(), cube(3).expect("cube")));
    f.push(("paw".into(), crate::graphs::paw()));
    f
}

/// The fixed predictor cross-validation corpus, all graphs on at most 40
/// vertices.
pub fn predictor_corpus() -> Vec<PredictorCase> {
    const MAX: usize = 40;
    let mut cases = Vec::new();
    let push_single = |cases: &mut Vec<PredictorCase>, name: String, g: Graph, mut extra: Vec<MuPrediction>| {
        let mut p = single_graph_predictions(&g);
        p.append(&mut extra);
        cases.push(PredictorCase {
            input: name,
            graph: g,
            predictions: p,
        });
    };

    let mut singles: Vec<(String, Graph)> = Vec::new();
    for n in 3..=12 {
        singles.push((format!("P{n}"), path(n).expect("path")));
        singles.push((format!("C{n}"), cycle(n).expect("cycle")));
    }
    for n in 3..=8 {
        singles.push((format!("K{n}"), complete(n).expect("complete")));
    }
    for m in 2..=5 {
        for n in m..=6 {
            singles.push((format!("K{m},{n}"), complete_bipartite(m, n).expect("bipartite")));
        }
    }
    for d in 2..=5 {
        singles.push((format!("Q{d}"), cube(d).expect("cube")));
    }
    for d in 3..=5 {
        singles.push((format!("FQ{d}"), folded_cube(d).expect("folded cube")));
    }
    for n in 4..=20 {
        singles.push((format!("Cr({})", 2 * n), crown(2 * n).expect("crown")));
    }
    for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3)] {
        if let Ok(g) = kneser(n, k) {
            if g.n() <= MAX {
                singles.push((format!("Kn({n},{k})"), g));
            }
        }
    }
    for n in 4..=8 {
        singles.push((format!("star{n}"), star(n).expect("star")));
    }
    for n in 2..=16 {
        singles.push((format!("Bg({n})"), binary_graph(n).expect("binary graph")));
    }
    singles.push(("pyramid(Cr(8))".into(), pyramid(&crown(8).expect("crown"))));
    for (name, g) in singles {
        push_single(&mut cases, name, g, Vec::new());
    }

    let factors = small_factors();
    for (i, (na, a)) in factors.iter().enumerate() {
        for (nb, b) in &factors[i..] {
            if a.n() * b.n() > MAX {
                continue;
            }
            let g = cartesian(a, b);
            let extra = vec![mu_cartesian(a, b), mu_unique_common_neighbor(a, b)];
            push_single(&mut cases, format!("{na} □ {nb}"), g, extra);
        }
    }

    let mut prism_bases: Vec<(String, Graph)> = Vec::new();
    for n in 3..=7 {
        prism_bases.push((format!("K{n}"), complete(n).expect("complete")));
    }
    for n in [3, 5, 7, 9] {
        prism_bases.push((format!("C{n}"), cycle(n).expect("cycle")));
    }
    prism_bases.push(("Petersen".into(), petersen()));
    prism_bases.push(("Kn(6,2)".into(), kneser(6, 2).expect("kneser")));
    for n in [4, 5, 6] {
        let c = kneser(n, 2).expect("kneser").complement();
        prism_bases.push((format!("co-Kn({n},2)"), c));
    }
    prism_bases.push(("paw".into(), crate::graphs::paw()));
    for (name, g) in prism_bases {
        let extra = vec![mu_prism(&g)];
        push_single(&mut cases, format!("prism({name})"), prism(&g), extra);
    }

    let complete_lists: [&[usize]; 12] = [
        &[2, 2],
        &[2, 3],
        &[2, 4],
        &[3, 3],
        &[3, 4],
        &[4, 4],
        &[5, 5],
        &[6, 6],
        &[2, 2, 2],
        &[2, 2, 4],
        &[3, 3, 3],
        &[2, 2, 2, 2],
    ];
    for ns in complete_lists {
        let ks: Vec<Graph> = ns.iter().map(|&n| complete(n).expect("complete")).collect();
        let g = fold_product(&ks, cartesian).expect("nonempty");
        let extra = vec![mu_cartesian_completes(ns).expect("valid sizes")];
        push_single(&mut cases, format!("□K{ns:?}"), g, extra);
    }

    for (i, (na, a)) in factors.iter().enumerate() {
        for (nb, b) in &factors[i..] {
            if a.n() * b.n() > MAX || !a.is_connected() || !b.is_connected() {
                continue;
            }
            let g = tensor(a, b);
            let preds = mu_tensor(a, b);
            if preds.len() == 2 {
                for ((vs, sub, _), p) in classify_components(&g).into_iter().zip(preds) {
                    cases.push(PredictorCase {
                        input: format!("{na} × {nb} component at {}", vs[0]),
                        graph: sub,
                        predictions: vec![p],
                    });
                }
            } else {
                push_single(&mut cases, format!("{na} × {nb}"), g, preds);
            }
        }
    }
    for (n, k) in [(5, 1), (6, 1), (7, 2), (5, 2), (6, 2), (8, 3)] {
        let kn = kneser(n, k).expect("kneser");
        if 2 * kn.n() > MAX {
            continue;
        }
        let g = tensor(&kn, &path(2).expect("path"));
        let extra = vec![mu_kneser_tensor_k2(n, k).expect("n > 2k")];
        push_single(&mut cases, format!("Kn({n},{k}) × K2"), g, extra);
    }
    let tensor_lists: [&[usize]; 8] = [&[2, 3], &[2, 5], &[2, 8], &[3, 3], &[3, 4], &[4, 4], &[2, 3, 4], &[2, 4, 4]];
    for ms in tensor_lists {
        let ks: Vec<Graph> = ms.iter().map(|&m| complete(m).expect("complete")).collect();
        let g = fold_product(&ks, tensor).expect("nonempty");
        let extra = vec![mu_tensor_completes(ms).expect("valid sizes")];
        push_single(&mut cases, format!("×K{ms:?}"), g, extra);
    }
    let scaled_bases: Vec<(String, Graph)> = vec![
        ("C4".into(), cycle(4).expect("cycle")),
        ("C6".into(), cycle(6).expect("cycle")),
        ("K3,3".into(), complete_bipartite(3, 3).expect("bipartite")),
        ("Q3".into(), cube(3).expect("cube")),
        ("Cr(10)".into(), crown(10).expect("crown")),
    ];
    for (name, l) in &scaled_bases {
        for nu in 1..=4 {
            if l.n() * (nu + 2) > MAX {
                continue;
            }
            let g = tensor(l, &complete(nu + 2).expect("complete"));
            let extra = vec![mu_tensor_scaled(l, nu)];
            push_single(&mut cases, format!("{name} × K{}", nu + 2), g, extra);
        }
    }
    cases
}

/// Compares an applicable prediction with a computed classification;
/// `None` for inapplicable predictions.
pub fn check_prediction(p: &MuPrediction, input: &str, c: &RaClassification) -> Option<VerifyRow> {
    let mu = p.mu.filter(|_| p.applicable)?;
    Some(VerifyRow::new(p.theorem.as_str(), input, mu_text(mu), status_text(c)))
}

fn predictor_rows() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for case in predictor_corpus() {
        let c = classify(&case.graph);
        rows.extend(case.predictions.iter().filter_map(|p| check_prediction(p, &case.input, &c)));
    }
    rows
}

/// Fixed pairs for the strong-product suite.
fn strong_pairs() -> Vec<(String, Graph, String, Graph)> {
    let f = small_factors();
    let pick = [(0, 0), (0, 4), (4, 4), (8, 5), (11, 0), (13, 0), (12, 3), (10, 4)];
    pick.iter()
        .filter_map(|&(i, j)| {
            let (a, b) = (f.get(i)?, f.get(j)?);
            Some((a.0.clone(), a.1.clone(), b.0.clone(), b.1.clone()))
        })
        .collect()
}

/// Rows of `C_a ⊗ C_b` as a sorted multiset, against the rows of
/// `C_{a ⊠ b}` with the zero rows dropped from the Kronecker side.
pub fn strong_rows_agree(a: &Graph, b: &Graph) -> bool {
    let ca = ra_matrix(a).to_matrix();
    let cb = ra_matrix(b).to_matrix();
    let k = ca.kronecker(&cb);
    let mut left: Vec<Vec<BigInt>> = k.to_rows().into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect();
    left.sort();
    left.dedup();
    let mut right: Vec<Vec<BigInt>> = ra_matrix(&strong(a, b)).to_matrix().to_rows();
    right.sort();
    right.dedup();
    left == right
}

fn strong_rows() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for (na, a, nb, b) in strong_pairs() {
        let input = format!("{na} ⊠ {nb}");
        let predicted = format_divisors(&strong_product_divisors(&a, &b));
        let direct = format_divisors(&normalize_divisors(elementary_divisors(&strong(&a, &b)).divisors()));
        rows.push(VerifyRow::new("strong-divisors", &input, predicted, direct));
        let agree = strong_rows_agree(&a, &b);
        rows.push(VerifyRow::new("strong-kronecker", input, "true", agree.to_string()));
    }
    rows
}

fn kneser_kernel_rows() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    for (n, p) in [(6, 2), (9, 3)] {
        let g = kneser(n, p).expect("kneser");
        let c = ra_matrix(&g).to_matrix();
        let mut bad = 0usize;
        let mut count = 0usize;
        for x in subsets(n, p) {
            count += 1;
            let v = kneser_kernel_vector(n, p, &x).expect("valid subset");
            let v: Vec<BigInt> = v.into_iter().map(BigInt::from).collect();
            let prod = c.mul_vec(&v).expect("dimensions");
            if prod.iter().any(|y| !(y % BigInt::from(p)).is_zero()) {
                bad += 1;
            }
        }
        rows.push(VerifyRow::new(
            "kneser-kernel-vector",
            format!("Kn({n},{p}) mod {p}, {count} subsets"),
            "0 failures",
            format!("{bad} failures"),
        ));
    }
    for (n, p) in [(6, 2), (9, 3), (7, 2)] {
        let input = format!("span Kn({n},{p}) mod {p}");
        let want = kneser_kernel_span_dim(n, p).map_or_else(|e| e.to_string(), |d| d.to_string());
        let got = kneser_kernel_span_rank(n, p).map_or_else(|e| e.to_string(), |d| d.to_string());
        rows.push(VerifyRow::new("kneser-kernel-span", input, want, got));
    }
    rows
}

/// All `k`-subsets of `0..n` in colexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << n) {
        if mask.count_ones() as usize == k {
            out.push((0..n).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Connected graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    let mut reps: Vec<Graph> = Vec::new();
    for n in 1..=max_n {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u64..(1u64 << slots.len()) {
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(n, &edges).expect("valid edges");
            if g.is_connected() && !reps.iter().any(|r| are_isomorphic(r, &g)) {
                reps.push(g);
            }
        }
    }
    reps
}

/// `is_G_RA`, the intersection order and `Comm_b = [G,G]^{C_Γ}` against the
/// divisor test, for one group and one graph.
pub fn group_graph_rows(group: &FiniteGroup, p: u64, g: &Graph) -> Vec<VerifyRow> {
    let name = crate::graphs::graph6_encode(g);
    let input = format!("{} on {name}", group.name());
    let divs = classify(g).divisors;
    let pb = BigInt::from(p);
    let k = divs.iter().filter(|d| (*d % &pb).is_zero()).count();
    let mut rows = Vec::new();
    match is_g_ra(group, g, DEFAULT_CAP) {
        Ok(b) => rows.push(VerifyRow::new("group-ra", &input, (k == 0).to_string(), b.to_string())),
        Err(e) => rows.push(VerifyRow::error("group-ra", &input, (k == 0).to_string(), e)),
    }
    let want = (p as usize).pow((g.n() - k) as u32).to_string();
    match graph_power(group, g, DEFAULT_CAP) {
        Ok(pw) => rows.push(VerifyRow::new("group-intersection", &input, want, intersection_order(group, &pw).to_string())),
        Err(e) => rows.push(VerifyRow::error("group-intersection", &input, want, e)),
    }
    let c = ra_matrix(g).to_matrix();
    let cb = comm_b(group, g, DEFAULT_CAP);
    let mp = subgroup_matrix_power(group, &commutator_subgroup(group), &c, DEFAULT_CAP);
    match (cb, mp) {
        (Ok(cb), Ok(mp)) => rows.push(VerifyRow::new(
            "group-comm-b",
            &input,
            mp.order().to_string(),
            if cb.same_elements(&mp) { cb.order().to_string() } else { format!("{} (different set)", cb.order()) },
        )),
        (Err(e), _) | (_, Err(e)) => rows.push(VerifyRow::error("group-comm-b", &input, "", e)),
    }
    rows
}

fn group_rows() -> Vec<VerifyRow> {
    let mut rows = Vec::new();
    let graphs = connected_graphs_up_to(4);
    for p in [2usize, 3] {
        let h = heisenberg(p).expect("small prime");
        for g in &graphs {
            rows.extend(group_graph_rows(&h, p as u64, g));
        }
    }
    rows.extend(dihedral_rows());
    rows
}

fn dihedral_rows() -> Vec<VerifyRow> {
    let d8 = dihedral(8).expect("order 8");
    let c2d8 = direct_product(&cyclic(2).expect("C2"), &d8).expect("product");
    let cases = [
        ("M1 = [[1,0],[0,4]]", vec![vec![1, 0], vec![0, 4]], 8usize, d8.fingerprint()),
        ("M2 = [[1,2],[0,4]]", vec![vec![1, 2], vec![0, 4]], 16, c2d8.fingerprint()),
    ];
    let mut rows = Vec::new();
    for (name, m, order, fp) in cases {
        let m = IntMatrix::from_rows(&m).expect("rectangular");
        let input = format!("D_8 with {name}");
        match matrix_power(&d8, &m, DEFAULT_CAP) {
            Ok(s) => {
                rows.push(VerifyRow::new("dihedral-order", &input, order.to_string(), s.order().to_string()));
                let got = tuple_fingerprint(&d8, &s, &matrix_power_generators(&d8, &m), DEFAULT_CAP);
                rows.push(VerifyRow::new(
                    "dihedral-fingerprint",
                    &input,
                    format!("{fp:?}"),
                    match got {
                        Ok(Some(f)) => format!("{f:?}"),
                        Ok(None) => "too large".into(),
                        Err(e) => format!("error: {e}"),
                    },
                ));
            }
            Err(e) => rows.push(VerifyRow::error("dihedral-order", &input, order.to_string(), e)),
        }
    }
    rows
}

/// Row of the girth and RA-category summary table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BatchCategory {
    Girth3Indistinguishable,
    Girth3Ra,
    Girth3NotRa,
    Girth4Ra,
    Girth4NotRa,
    Girth5Plus,
    Disconnected,
}

impl BatchCategory {
    pub const TABLE: [BatchCategory; 6] = [
        BatchCategory::Girth3Indistinguishable,
        BatchCategory::Girth3Ra,
        BatchCategory::Girth3NotRa,
        BatchCategory::Girth4Ra,
        BatchCategory::Girth4NotRa,
        BatchCategory::Girth5Plus,
    ];

    pub fn label(self) -> &'static str {
        match self {
            BatchCategory::Girth3Indistinguishable => "girth 3\tnbhd-indist.",
            BatchCategory::Girth3Ra => "girth 3\tnbhd-dist. RA",
            BatchCategory::Girth3NotRa => "girth 3\tnbhd-dist. not RA",
            BatchCategory::Girth4Ra => "girth 4\tRA",
            BatchCategory::Girth4NotRa => "girth 4\tnot RA",
            BatchCategory::Girth5Plus => "girth 5+\t(all)",
            BatchCategory::Disconnected => "disconnected\t(skipped)",
        }
    }
}

/// Category of one graph. Forests count as girth 5+. The divisor
/// computation is skipped where the category does not depend on it.
pub fn categorize(g: &Graph) -> BatchCategory {
    if !g.is_connected() {
        return BatchCategory::Disconnected;
    }
    match g.girth() {
        Some(3) if !g.is_neighborhood_distinguishable() => BatchCategory::Girth3Indistinguishable,
        Some(3) if classify(g).is_ra() => BatchCategory::Girth3Ra,
        Some(3) => BatchCategory::Girth3NotRa,
        Some(4) if classify(g).is_ra() => BatchCategory::Girth4Ra,
        Some(4) => BatchCategory::Girth4NotRa,
        _ => BatchCategory::Girth5Plus,
    }
}

/// Per-category counts; merging is commutative so totals do not depend on
/// how the input was split.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BatchSummary {
    pub counts: std::collections::BTreeMap<BatchCategory, u64>,
    pub parse_errors: u64,
}

impl BatchSummary {
    pub fn add(&mut self, c: BatchCategory) {
        *self.counts.entry(c).or_insert(0) += 1;
    }

    pub fn merge(mut self, other: BatchSummary) -> BatchSummary {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
        self.parse_errors += other.parse_errors;
        self
    }

    pub fn count(&self, c: BatchCategory) -> u64 {
        self.counts.get(&c).copied().unwrap_or(0)
    }

    /// Connected graphs counted.
    pub fn total(&self) -> u64 {
        BatchCategory::TABLE.iter().map(|&c| self.count(c)).sum()
    }

    /// The six table rows, the disconnected row when nonzero, and the total.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        for c in BatchCategory::TABLE {
            out.push_str(&format!("{}\t{}\n", c.label(), self.count(c)));
        }
        let d = self.count(BatchCategory::Disconnected);
        if d > 0 {
            out.push_str(&format!("{}\t{d}\n", BatchCategory::Disconnected.label()));
        }
        out.push_str(&format!("total\t\t{}\n", self.total()));
        out
    }
}
