//! Brute-force enumeration of graph powers `G^Γ` and matrix powers `G^M`
//! for groups given by multiplication tables.

use std::collections::{BTreeMap, BTreeSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::graphs::{graph6_encode, Graph};
use crate::intlin::{is_prime, IntMatrix};

pub const DEFAULT_CAP: u64 = 10_000_000;

/// Largest `|G^Γ|` for which the derived subgroup is enumerated.
pub const DERIVED_LIMIT: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration needs {needed} tuples, over the budget of {cap}")]
    BudgetExceeded { needed: String, cap: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(
        name: impl Into<String>,
        table: Vec<Vec<usize>>,
        generators: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self, GroupError> {
        let bad = |m: String| GroupError::InvalidTable(m);
        let order = table.len();
        if order == 0 {
            return Err(bad("empty table".into()));
        }
        if labels.len() != order {
            return Err(bad(format!("{} labels for {order} elements", labels.len())));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (i, row) in table.iter().enumerate() {
            if row.len() != order {
                return Err(bad(format!("row {i} has length {}", row.len())));
            }
            for &x in row {
                if x >= order {
                    return Err(bad(format!("entry {x} out of range in row {i}")));
                }
                flat.push(x as u32);
            }
        }
        let at = |a: usize, b: usize| flat[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or_else(|| bad("no identity element".into()))?;
        let mut inverse = Vec::with_capacity(order);
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| at(a, b) == identity && at(b, a) == identity)
                .ok_or_else(|| bad(format!("element {a} has no inverse")))?;
            inverse.push(inv as u32);
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(bad(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        if let Some(&g) = generators.iter().find(|&&g| g >= order) {
            return Err(bad(format!("generator {g} out of range")));
        }
        let g = FiniteGroup {
            name: name.into(),
            order,
            table: flat,
            identity,
            inverse,
            generators,
            labels,
        };
        if g.closure(&g.generators).len() != order {
            return Err(bad("generators do not generate the group".into()));
        }
        Ok(g)
    }

    fn from_fn(
        name: String,
        order: usize,
        mul: impl Fn(usize, usize) -> usize,
        generators: Vec<usize>,
        label: impl Fn(usize) -> String,
    ) -> Result<Self, GroupError> {
        let table = (0..order)
            .map(|a| (0..order).map(|b| mul(a, b)).collect())
            .collect();
        let labels = (0..order).map(label).collect();
        Self::from_table(name, table, generators, labels)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `a^e` for any integer `e`.
    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut exp = e.unsigned_abs() % self.element_order(a) as u64;
        let mut acc = self.identity;
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, sq);
            }
            sq = self.mul(sq, sq);
            exp >>= 1;
        }
        acc
    }

    /// `[a, b] = a^{-1} b^{-1} a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Subgroup generated by `gens`, sorted.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        queue
    }

    pub fn commutators(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        set.into_iter().collect()
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let all: Vec<usize> = (0..self.order).collect();
        let derived = self.closure(&self.commutators()).len();
        let mut hist = BTreeMap::new();
        for &a in &all {
            *hist.entry(self.element_order(a)).or_insert(0usize) += 1;
        }
        Fingerprint {
            order: self.order as u64,
            abelianization: (self.order / derived) as u64,
            order_histogram: hist.into_iter().map(|(k, v)| (k as u64, v as u64)).collect(),
        }
    }
}

/// `[G, G]` as a sorted element set.
pub fn commutator_subgroup(g: &FiniteGroup) -> Vec<usize> {
    g.closure(&g.commutators())
}

/// Upper unitriangular `3 x 3` matrices over `F_p`; `(a, b, c)` is the
/// matrix with `a`, `b` on the superdiagonal and `c` in the corner.
pub fn heisenberg(p: usize) -> Result<FiniteGroup, GroupError> {
    if !is_prime(p as u64) || p > 7 {
        return Err(GroupError::InvalidParameter(format!(
            "heisenberg needs a prime p <= 7, got {p}"
        )));
    }
    let enc = |a: usize, b: usize, c: usize| (a * p + b) * p + c;
    let dec = |x: usize| (x / (p * p), x / p % p, x % p);
    FiniteGroup::from_fn(
        format!("H(F_{p})"),
        p * p * p,
        |x, y| {
            let (a, b, c) = dec(x);
            let (a2, b2, c2) = dec(y);
            enc((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p)
        },
        vec![enc(1, 0, 0), enc(0, 1, 0)],
        |x| {
            let (a, b, c) = dec(x);
            format!("({a},{b},{c})")
        },
    )
}

/// Symmetries of a regular `order / 2`-gon; element `i + m j` is `r^i s^j`.
pub fn dihedral(order: usize) -> Result<FiniteGroup, GroupError> {
    if order < 4 || !order.is_multiple_of(2) || order > 512 {
        return Err(GroupError::InvalidParameter(format!(
            "dihedral needs an even order in 4..=512, got {order}"
        )));
    }
    let m = order / 2;
    FiniteGroup::from_fn(
        format!("D_{order}"),
        order,
        |x, y| {
            let (i, j) = (x % m, x / m);
            let (k, l) = (y % m, y / m);
            let rot = if j == 0 { (i + k) % m } else { (i + m - k) % m };
            rot + m * ((j + l) % 2)
        },
        vec![1, m],
        |x| {
            let (i, j) = (x % m, x / m);
            match (i, j) {
                (0, 0) => "e".to_string(),
                (_, 0) => format!("r^{i}"),
                (0, _) => "s".to_string(),
                _ => format!("r^{i}s"),
            }
        },
    )
}

pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 4096 {
        return Err(GroupError::InvalidParameter(format!("cyclic needs 1..=4096, got {n}")));
    }
    FiniteGroup::from_fn(format!("C_{n}"), n, |a, b| (a + b) % n, vec![1 % n], |a| a.to_string())
}

/// `a × b` with element `(x, y)` at index `x * |b| + y`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let nb = b.order();
    let mut gens: Vec<usize> = a.generators().iter().map(|&x| x * nb + b.identity()).collect();
    gens.extend(b.generators().iter().map(|&y| a.identity() * nb + y));
    FiniteGroup::from_fn(
        format!("{} x {}", a.name(), b.name()),
        a.order() * nb,
        |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb),
        gens,
        |x| format!("({},{})", a.label(x / nb), b.label(x % nb)),
    )
}

/// Order, abelianization size and element-order histogram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fingerprint {
    pub order: u64,
    pub abelianization: u64,
    pub order_histogram: Vec<(u64, u64)>,
}

/// A subgroup of `G^n`, stored as the set of mixed-radix tuple codes.
#[derive(Clone, Debug)]
pub struct TupleSubgroup {
    n: usize,
    base: usize,
    members: FixedBitSet,
    elements: Vec<u64>,
}

struct TupleSpace {
    n: usize,
    base: usize,
}

impl TupleSpace {
    fn new(g: &FiniteGroup, n: usize, cap: u64) -> Result<Self, GroupError> {
        let size = BigInt::from(g.order()).pow(n as u32);
        if size > BigInt::from(cap) {
            return Err(GroupError::BudgetExceeded {
                needed: size.to_string(),
                cap,
            });
        }
        Ok(TupleSpace { n, base: g.order() })
    }

    fn size(&self) -> usize {
        self.base.pow(self.n as u32)
    }

    fn encode(&self, t: &[usize]) -> u64 {
        t.iter().fold(0u64, |acc, &x| acc * self.base as u64 + x as u64)
    }

    fn decode(&self, mut code: u64, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = (code % self.base as u64) as usize;
            code /= self.base as u64;
        }
    }
}

impl TupleSubgroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    fn space(&self) -> TupleSpace {
        TupleSpace {
            n: self.n,
            base: self.base,
        }
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        t.len() == self.n
            && t.iter().all(|&x| x < self.base)
            && self.members.contains(self.space().encode(t) as usize)
    }

    /// Elements in increasing code order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let s = self.space();
        self.elements.iter().map(move |&c| {
            let mut t = vec![0; s.n];
            s.decode(c, &mut t);
            t
        })
    }

    /// Equality as sets of tuples.
    pub fn same_elements(&self, other: &TupleSubgroup) -> bool {
        self.n == other.n && self.base == other.base && self.elements == other.elements
    }
}

fn tuple_mul(g: &FiniteGroup, a: &[usize], b: &[usize], out: &mut [usize]) {
    for i in 0..a.len() {
        out[i] = g.mul(a[i], b[i]);
    }
}

/// BFS closure of `gens` inside `G^n`.
fn tuple_closure(
    g: &FiniteGroup,
    n: usize,
    gens: &[Vec<usize>],
    cap: u64,
) -> Result<TupleSubgroup, GroupError> {
    let space = TupleSpace::new(g, n, cap)?;
    let identity = vec![g.identity(); n];
    let mut uniq: Vec<Vec<usize>> = gens
        .iter()
        .filter(|t| **t != identity)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    uniq.shrink_to_fit();
    let mut members = FixedBitSet::with_capacity(space.size());
    let start = space.encode(&identity);
    members.insert(start as usize);
    let mut elements = vec![start];
    let mut cur = vec![0; n];
    let mut next = vec![0; n];
    let mut i = 0;
    while i < elements.len() {
        space.decode(elements[i], &mut cur);
        i += 1;
        for s in &uniq {
            tuple_mul(g, &cur, s, &mut next);
            let code = space.encode(&next);
            if !members.put(code as usize) {
                elements.push(code);
            }
        }
    }
    elements.sort_unstable();
    Ok(TupleSubgroup {
        n,
        base: g.order(),
        members,
        elements,
    })
}

/// `a` placed at every vertex of the set, identity elsewhere.
fn placed(g: &FiniteGroup, n: usize, a: usize, set: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut t = vec![g.identity(); n];
    for v in set {
        t[v] = a;
    }
    t
}

/// `G^Γ`, generated by the clicks `s^{N[v]}` for the group generators `s`.
pub fn graph_power(g: &FiniteGroup, graph: &Graph, cap: u64) -> Result<TupleSubgroup, GroupError> {
    let n = graph.n();
    let gens: Vec<Vec<usize>> = (0..n)
        .flat_map(|v| {
            g.generators()
                .iter()
                .map(move |&s| placed(g, n, s, graph.closed_neighborhood(v).iter()))
        })
        .collect();
    tuple_closure(g, n, &gens, cap)
}

/// `G^M`, generated by `a^{row}` for every element `a` and row of `m`.
pub fn matrix_power(g: &FiniteGroup, m: &IntMatrix, cap: u64) -> Result<TupleSubgroup, GroupError> {
    subgroup_matrix_power(g, &(0..g.order()).collect::<Vec<_>>(), m, cap)
}

/// `H^M` for the subgroup `H` of `G` listed in `elements`.
pub fn subgroup_matrix_power(
    g: &FiniteGroup,
    elements: &[usize],
    m: &IntMatrix,
    cap: u64,
) -> Result<TupleSubgroup, GroupError> {
    let n = m.cols();
    let mut gens = Vec::with_capacity(m.rows() * elements.len());
    for row in m.iter_rows() {
        let exps: Vec<i64> = row
            .iter()
            .map(|x| {
                let r = x.mod_floor(&BigInt::from(g.order() as u64 * 2));
                r.to_i64().expect("reduced exponent")
            })
            .collect();
        for &a in elements {
            gens.push(exps.iter().map(|&e| g.pow(a, e)).collect());
        }
    }
    tuple_closure(g, n, &gens, cap)
}

/// Whether `[G,G]^n ≤ G^Γ`: every commutator placed alone at any vertex is
/// reachable.
pub fn is_g_ra(g: &FiniteGroup, graph: &Graph, cap: u64) -> Result<bool, GroupError> {
    let power = graph_power(g, graph, cap)?;
    Ok(contains_commutator_axes(g, graph.n(), &power))
}

fn contains_commutator_axes(g: &FiniteGroup, n: usize, power: &TupleSubgroup) -> bool {
    let comms = g.commutators();
    (0..n).all(|v| {
        comms
            .iter()
            .all(|&c| power.contains(&placed(g, n, c, std::iter::once(v))))
    })
}

/// `|[G,G]^n ∩ S|`.
pub fn intersection_order(g: &FiniteGroup, power: &TupleSubgroup) -> usize {
    let derived = commutator_subgroup(g);
    let mut in_derived = vec![false; g.order()];
    for &x in &derived {
        in_derived[x] = true;
    }
    power
        .elements()
        .filter(|t| t.iter().all(|&x| in_derived[x]))
        .count()
}

/// `Comm_b(G, Γ)`: generated by `[a^v, b^w]` over all elements `a, b` and
/// vertices `v, w`.
pub fn comm_b(g: &FiniteGroup, graph: &Graph, cap: u64) -> Result<TupleSubgroup, GroupError> {
    let n = graph.n();
    TupleSpace::new(g, n, cap)?;
    let nbhd: Vec<Vec<usize>> = (0..n).map(|v| graph.closed_neighborhood(v).to_vec()).collect();
    let mut gens = BTreeSet::new();
    for a in 0..g.order() {
        for b in 0..g.order() {
            let c = g.commutator(a, b);
            if c == g.identity() {
                continue;
            }
            for v in 0..n {
                for w in 0..n {
                    let t: Vec<usize> = (0..n)
                        .map(|x| {
                            let both = nbhd[v].binary_search(&x).is_ok()
                                && nbhd[w].binary_search(&x).is_ok();
                            if both { c } else { g.identity() }
                        })
                        .collect();
                    gens.insert(t);
                }
            }
        }
    }
    let gens: Vec<Vec<usize>> = gens.into_iter().collect();
    tuple_closure(g, n, &gens, cap)
}

/// `[S, S]` for an enumerated subgroup `S` of `G^n` with at most
/// [`DERIVED_LIMIT`] elements; `None` above the limit.
pub fn derived_subgroup(
    g: &FiniteGroup,
    s: &TupleSubgroup,
    gens: &[Vec<usize>],
    cap: u64,
) -> Result<Option<TupleSubgroup>, GroupError> {
    if s.order() > DERIVED_LIMIT {
        return Ok(None);
    }
    let n = s.arity();
    let tinv = |t: &[usize]| t.iter().map(|&x| g.inv(x)).collect::<Vec<_>>();
    let tmul = |a: &[usize], b: &[usize]| a.iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect::<Vec<_>>();
    let mut base = BTreeSet::new();
    for x in gens {
        for y in gens {
            let c = tmul(&tmul(&tinv(x), &tinv(y)), &tmul(x, y));
            base.insert(c);
        }
    }
    // Normal closure: conjugate the generator commutators by every element.
    let mut conj = BTreeSet::new();
    for h in s.elements() {
        let hi = tinv(&h);
        for c in &base {
            conj.insert(tmul(&tmul(&h, c), &hi));
        }
    }
    let conj: Vec<Vec<usize>> = conj.into_iter().collect();
    tuple_closure(g, n, &conj, cap).map(Some)
}

/// Order, abelianization size and element-order histogram of an enumerated
/// subgroup given with its generators.
pub fn tuple_fingerprint(
    g: &FiniteGroup,
    s: &TupleSubgroup,
    gens: &[Vec<usize>],
    cap: u64,
) -> Result<Option<Fingerprint>, GroupError> {
    let Some(d) = derived_subgroup(g, s, gens, cap)? else {
        return Ok(None);
    };
    let mut hist = BTreeMap::new();
    for t in s.elements() {
        let k = t
            .iter()
            .map(|&x| g.element_order(x) as u64)
            .fold(1u64, |acc, o| acc.lcm(&o));
        *hist.entry(k).or_insert(0u64) += 1;
    }
    Ok(Some(Fingerprint {
        order: s.order() as u64,
        abelianization: (s.order() / d.order()) as u64,
        order_histogram: hist.into_iter().collect(),
    }))
}

/// Generators used by [`matrix_power`], for fingerprinting.
pub fn matrix_power_generators(g: &FiniteGroup, m: &IntMatrix) -> Vec<Vec<usize>> {
    m.iter_rows()
        .flat_map(|row| {
            (0..g.order()).map(move |a| {
                row.iter()
                    .map(|x| {
                        let r = x.mod_floor(&BigInt::from(g.order() as u64 * 2));
                        g.pow(a, r.to_i64().expect("reduced exponent"))
                    })
                    .collect()
            })
        })
        .collect()
}

/// Serialized oracle result for one `(group, graph)` pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleRecord {
    pub group: String,
    pub graph: String,
    #[serde(rename = "order_G_Gamma")]
    pub order_g_gamma: u64,
    #[serde(rename = "is_G_RA")]
    pub is_g_ra: bool,
    pub intersection_order: u64,
    pub comm_b_order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub derived_order: Option<u64>,
}

pub fn oracle_record(g: &FiniteGroup, graph: &Graph, cap: u64) -> Result<OracleRecord, GroupError> {
    let power = graph_power(g, graph, cap)?;
    let cb = comm_b(g, graph, cap)?;
    let n = graph.n();
    let gens: Vec<Vec<usize>> = (0..n)
        .flat_map(|v| {
            g.generators()
                .iter()
                .map(move |&s| placed(g, n, s, graph.closed_neighborhood(v).iter()))
        })
        .collect();
    let derived = derived_subgroup(g, &power, &gens, cap)?;
    Ok(OracleRecord {
        group: g.name().to_string(),
        graph: graph6_encode(graph),
        order_g_gamma: power.order() as u64,
        is_g_ra: contains_commutator_axes(g, n, &power),
        intersection_order: intersection_order(g, &power) as u64,
        comm_b_order: cb.order() as u64,
        derived_order: derived.map(|d| d.order() as u64),
    })
}

/// Serialized result of a matrix power enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixPowerRecord {
    pub group: String,
    pub rows: Vec<Vec<i64>>,
    pub order: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<Fingerprint>,
}

pub fn matrix_power_record(
    g: &FiniteGroup,
    m: &IntMatrix,
    cap: u64,
) -> Result<MatrixPowerRecord, GroupError> {
    let rows = m
        .iter_rows()
        .map(|r| {
            r.iter()
                .map(|x| {
                    x.to_i64().ok_or_else(|| {
                        GroupError::InvalidParameter(format!("matrix entry {x} out of range"))
                    })
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let s = matrix_power(g, m, cap)?;
    let fingerprint = tuple_fingerprint(g, &s, &matrix_power_generators(g, m), cap)?;
    Ok(MatrixPowerRecord {
        group: g.name().to_string(),
        rows,
        order: s.order() as u64,
        fingerprint,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupRecord {
    pub group: String,
    pub generators: Vec<String>,
    pub commutator_order: u64,
    pub fingerprint: Fingerprint,
}

pub fn group_record(g: &FiniteGroup) -> GroupRecord {
    GroupRecord {
        group: g.name().to_string(),
        generators: g.generators().iter().map(|&x| g.label(x).to_string()).collect(),
        commutator_order: commutator_subgroup(g).len() as u64,
        fingerprint: g.fingerprint(),
    }
}

/// Parses `heisenberg:P`, `dihedral:N` or `cyclic:N`.
pub fn parse_group(spec: &str) -> Result<FiniteGroup, GroupError> {
    let bad = || GroupError::InvalidParameter(format!("group spec {spec:?}, expected NAME:N"));
    let (name, arg) = spec.split_once(':').ok_or_else(bad)?;
    let n: usize = arg.trim().parse().map_err(|_| bad())?;
    match name.trim() {
        "heisenberg" => heisenberg(n),
        "dihedral" => dihedral(n),
        "cyclic" => cyclic(n),
        _ => Err(bad()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{complete, paw, path};

    fn mat(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn small_groups() {
        let h2 = heisenberg(2).unwrap();
        assert_eq!(h2.order(), 8);
        let h3 = heisenberg(3).unwrap();
        assert_eq!(h3.order(), 27);
        assert_eq!(commutator_subgroup(&h3).len(), 3);
        let d8 = dihedral(8).unwrap();
        assert!((0..8).all(|a| d8.pow(a, 4) == d8.identity()));
        assert_eq!(commutator_subgroup(&d8).len(), 2);
        assert_eq!(commutator_subgroup(&cyclic(6).unwrap()), vec![0]);
        assert!(heisenberg(4).is_err());
        assert!(dihedral(6).is_ok());
        assert!(dihedral(7).is_err());
    }

    #[test]
    fn bad_tables_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        let labels = vec!["a".into(), "b".into()];
        assert!(FiniteGroup::from_table("x", t, vec![1], labels).is_err());
    }

    #[test]
    fn graph_powers() {
        let h2 = heisenberg(2).unwrap();
        let k3 = graph_power(&h2, &complete(3).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(k3.order(), 8);
        let p3 = graph_power(&h2, &path(3).unwrap(), DEFAULT_CAP).unwrap();
        assert_eq!(p3.order(), 512);
        assert!(is_g_ra(&h2, &path(3).unwrap(), DEFAULT_CAP).unwrap());
        assert!(!is_g_ra(&h2, &complete(3).unwrap(), DEFAULT_CAP).unwrap());
        assert_eq!(comm_b(&h2, &complete(3).unwrap(), DEFAULT_CAP).unwrap().order(), 2);
        assert_eq!(comm_b(&h2, &path(3).unwrap(), DEFAULT_CAP).unwrap().order(), 8);
        let ab = cyclic(4).unwrap();
        assert_eq!(comm_b(&ab, &paw(), DEFAULT_CAP).unwrap().order(), 1);
    }

    #[test]
    fn dihedral_matrix_powers() {
        let d8 = dihedral(8).unwrap();
        let m1 = mat(&[vec![1, 0], vec![0, 4]]);
        let m2 = mat(&[vec![1, 2], vec![0, 4]]);
        let g1 = matrix_power(&d8, &m1, DEFAULT_CAP).unwrap();
        let g2 = matrix_power(&d8, &m2, DEFAULT_CAP).unwrap();
        assert_eq!(g1.order(), 8);
        assert_eq!(g2.order(), 16);
        let f2 = tuple_fingerprint(&d8, &g2, &matrix_power_generators(&d8, &m2), DEFAULT_CAP)
            .unwrap()
            .unwrap();
        let c2d8 = direct_product(&cyclic(2).unwrap(), &d8).unwrap();
        assert_eq!(f2, c2d8.fingerprint());
        let f1 = tuple_fingerprint(&d8, &g1, &matrix_power_generators(&d8, &m1), DEFAULT_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(f1, d8.fingerprint());
    }

    #[test]
    fn row_equivalent_matrices_agree() {
        let d8 = dihedral(8).unwrap();
        let a = mat(&[vec![1, 2], vec![0, 4]]);
        let b = mat(&[vec![1, 2], vec![1, 6], vec![-1, 2]]);
        let ga = matrix_power(&d8, &a, DEFAULT_CAP).unwrap();
        let gb = matrix_power(&d8, &b, DEFAULT_CAP).unwrap();
        assert!(ga.same_elements(&gb));
    }

    #[test]
    fn budget_is_enforced() {
        let h3 = heisenberg(3).unwrap();
        let err = graph_power(&h3, &path(6).unwrap(), 1000).unwrap_err();
        assert!(matches!(err, GroupError::BudgetExceeded { .. }));
    }

    #[test]
    fn record_fields() {
        let h2 = heisenberg(2).unwrap();
        let r = oracle_record(&h2, &paw(), DEFAULT_CAP).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        for key in ["group", "graph", "order_G_Gamma", "is_G_RA", "intersection_order", "comm_b_order"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
