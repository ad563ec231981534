use num_integer::Integer;

use super::{
    gcd_iter, half_ra_parity, pairs, require_connected, two_or_one, Ingredients, MuPrediction,
    TheoremError, TheoremId,
};
use crate::graphs::Graph;
use crate::products::tensor;
use crate::ra::classify;

/// Common-neighbor statistics of one vertex class `S`: `gcd{deg v}` and
/// `gcd{|N(u) ∩ N(v)| : u ≠ v in S}`.
struct ClassStats {
    eq: u64,
    ne: u64,
}

impl ClassStats {
    fn of(g: &Graph, class: &[usize]) -> Self {
        let eq = gcd_iter(class.iter().map(|&v| g.degree(v) as u64));
        let ne = gcd_iter(
            pairs(class.len()).map(|(i, j)| g.common_open_count(class[i], class[j]) as u64),
        );
        ClassStats { eq, ne }
    }

    fn all(&self) -> u64 {
        self.eq.gcd(&self.ne)
    }
}

/// `gcd` of `|N(u) ∩ N(v)| · |N(λ1) ∩ N(λ2)|` over `u, v ∈ S`, `λ1, λ2 ∈ T`
/// with `(u, λ1) ≠ (v, λ2)`.
fn kappa_block(s: &ClassStats, t: &ClassStats) -> u64 {
    (s.ne * t.all()).gcd(&(s.eq * t.ne))
}

fn delta_block(g: &Graph, s: &[usize], h: &Graph, t: &[usize]) -> u64 {
    let mut d = 0u64;
    for &v in s {
        for &l in t {
            let x = (g.degree(v) * h.degree(l)) as i64 - 1;
            d = d.gcd(&x.unsigned_abs());
        }
    }
    d
}

fn check_factors(t: TheoremId, a: &Graph, b: &Graph) -> Result<(), MuPrediction> {
    for (name, g) in [("first factor", a), ("second factor", b)] {
        require_connected(t, g).map_err(|p| p.with_reason_prefix(name))?;
    }
    Ok(())
}

/// `Γ × Λ` with `Γ` non-bipartite and `Λ` bipartite.
pub fn mu_tensor_bipartite(gamma: &Graph, lambda: &Graph) -> MuPrediction {
    let t = TheoremId::TensorBipartite;
    if let Err(p) = check_factors(t, gamma, lambda) {
        return p;
    }
    if gamma.is_bipartite() {
        return MuPrediction::inapplicable(t, "first factor is bipartite");
    }
    let Some((l1, l2)) = lambda.bipartition() else {
        return MuPrediction::inapplicable(t, "second factor is not bipartite");
    };
    let all: Vec<usize> = (0..gamma.n()).collect();
    let delta = delta_block(gamma, &all, lambda, &(0..lambda.n()).collect::<Vec<_>>());
    let sg = ClassStats::of(gamma, &all);
    let kappa = kappa_block(&sg, &ClassStats::of(lambda, &l1))
        .gcd(&kappa_block(&sg, &ClassStats::of(lambda, &l2)));
    MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
}

/// Both factors bipartite: one prediction per component of the product.
/// The first pairs part `a` of `Γ` with part `a` of `Λ`, the second with
/// part `3 - a`.
pub fn mu_tensor_both_bipartite(gamma: &Graph, lambda: &Graph) -> Vec<MuPrediction> {
    let t = TheoremId::TensorBothBipartite;
    if let Err(p) = check_factors(t, gamma, lambda) {
        return vec![p];
    }
    let (Some((g1, g2)), Some((l1, l2))) = (gamma.bipartition(), lambda.bipartition()) else {
        return vec![MuPrediction::inapplicable(t, "a factor is not bipartite")];
    };
    let gs = [&g1, &g2];
    let ls = [&l1, &l2];
    let gst = [ClassStats::of(gamma, &g1), ClassStats::of(gamma, &g2)];
    let lst = [ClassStats::of(lambda, &l1), ClassStats::of(lambda, &l2)];
    (0..2)
        .map(|i| {
            let mut delta = 0u64;
            let mut kappa = 0u64;
            for a in 0..2 {
                let b = if i == 0 { a } else { 1 - a };
                delta = delta.gcd(&delta_block(gamma, gs[a], lambda, ls[b]));
                kappa = kappa.gcd(&kappa_block(&gst[a], &lst[b]));
            }
            MuPrediction::from_gcd(t, Ingredients::dk(delta, kappa))
        })
        .collect()
}

/// `Γ × K_m` with `Γ` non-bipartite and `m >= 3`.
pub fn mu_tensor_complete(gamma: &Graph, m: usize) -> MuPrediction {
    let t = TheoremId::TensorComplete;
    if let Err(p) = require_connected(t, gamma) {
        return p;
    }
    if gamma.is_bipartite() {
        return MuPrediction::inapplicable(t, "first factor is bipartite");
    }
    if m < 3 {
        return MuPrediction::inapplicable(t, "complete factor needs m >= 3");
    }
    let parity = m.is_multiple_of(2)
        && (0..gamma.n()).all(|v| gamma.degree(v) % 2 == 1)
        && pairs(gamma.n()).all(|(u, v)| gamma.common_closed_count(u, v).is_multiple_of(2));
    MuPrediction::predicted(t, two_or_one(parity), Ingredients::default())
}

/// Both factors non-bipartite, each with an edge in no triangle: `μ <= 2`,
/// decided by the parity test on the product.
pub fn mu_tensor_no_triangle_edges(a: &Graph, b: &Graph) -> MuPrediction {
    let t = TheoremId::TensorNoTriangleEdges;
    if let Err(p) = check_factors(t, a, b) {
        return p;
    }
    if a.is_bipartite() || b.is_bipartite() {
        return MuPrediction::inapplicable(t, "a factor is bipartite");
    }
    if !a.has_edge_outside_triangles() || !b.has_edge_outside_triangles() {
        return MuPrediction::inapplicable(t, "a factor has every edge in a triangle");
    }
    MuPrediction::predicted(t, two_or_one(half_ra_parity(&tensor(a, b))), Ingredients::default())
}

fn complete_size(g: &Graph) -> Option<usize> {
    let n = g.n();
    (n >= 1 && g.edge_count() == n * (n - 1) / 2).then_some(n)
}

/// Dispatches on the bipartiteness of the factors. Returns two predictions
/// when both factors are bipartite.
pub fn mu_tensor(a: &Graph, b: &Graph) -> Vec<MuPrediction> {
    match (a.is_bipartite(), b.is_bipartite()) {
        (true, true) => mu_tensor_both_bipartite(a, b),
        (false, true) => vec![mu_tensor_bipartite(a, b)],
        (true, false) => vec![mu_tensor_bipartite(b, a)],
        (false, false) => {
            if let Some(m) = complete_size(b).filter(|&m| m >= 3) {
                vec![mu_tensor_complete(a, m)]
            } else if let Some(m) = complete_size(a).filter(|&m| m >= 3) {
                vec![mu_tensor_complete(b, m)]
            } else {
                vec![mu_tensor_no_triangle_edges(a, b)]
            }
        }
    }
}

/// `Kn(n, k) × K_2` for `n > 2k`: `μ = n' / gcd(lcm(1..k), n')`, `n' = n - 2k`.
pub fn mu_kneser_tensor_k2(n: usize, k: usize) -> Result<MuPrediction, TheoremError> {
    if k < 1 || n <= 2 * k {
        return Err(TheoremError::InvalidParameter("need k >= 1 and n > 2k".into()));
    }
    let np = (n - 2 * k) as u64;
    let l = (1..=k as u64).fold(1u64, |acc, i| acc.lcm(&i));
    Ok(MuPrediction::predicted(
        TheoremId::TensorKneserK2,
        np / l.gcd(&np),
        Ingredients::default(),
    ))
}

#[cfg(test)]
fn kneser_tensor_general(n: usize, k: usize) -> Result<MuPrediction, TheoremError> {
    let g = crate::graphs::kneser(n, k)?;
    Ok(mu_tensor_bipartite(&g, &crate::graphs::path(2)?))
}

/// `K_{m_1} × ... × K_{m_n}` with `2 <= m_1 <= ...` (sorted here) and
/// `m_2 >= 3`.
pub fn mu_tensor_completes(ms: &[usize]) -> Result<MuPrediction, TheoremError> {
    let mut ms = ms.to_vec();
    ms.sort_unstable();
    if ms.len() < 2 || ms[0] < 2 || ms[1] < 3 {
        return Err(TheoremError::InvalidParameter(
            "need at least two sizes, all >= 2, second smallest >= 3".into(),
        ));
    }
    let t = TheoremId::TensorCompletes;
    if ms[0] == 2 {
        let mu = gcd_iter(ms[1..].iter().map(|&m| m as u64 - 2));
        return Ok(MuPrediction::predicted(t, mu, Ingredients::default()));
    }
    let mu = two_or_one(ms.iter().all(|m| m % 2 == 0));
    Ok(MuPrediction::predicted(t, mu, Ingredients::default()))
}

/// `Λ × K_{ν+2}` for a connected bipartite girth-4 `Λ` that classifies
/// `1/μ`-RA (or RA, `μ = 1`).
pub fn mu_tensor_scaled(lambda: &Graph, nu: usize) -> MuPrediction {
    let t = TheoremId::TensorScaled;
    if let Err(p) = require_connected(t, lambda) {
        return p;
    }
    if nu < 1 {
        return MuPrediction::inapplicable(t, "needs nu >= 1");
    }
    if !lambda.is_bipartite() || lambda.girth() != Some(4) {
        return MuPrediction::inapplicable(t, "factor is not bipartite of girth 4");
    }
    let Some(mu) = classify(lambda).mu() else {
        return MuPrediction::inapplicable(t, "factor is not 1/mu-RA");
    };
    let mu = u64::try_from(mu).expect("small divisor");
    MuPrediction::predicted(t, mu.gcd(&(nu as u64)), Ingredients::default())
}
