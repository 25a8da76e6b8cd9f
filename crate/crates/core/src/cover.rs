//! Residual sets and the minimal right-resolving presentation of `X(S)`.
//!
//! The residual `R_a = {s − a : s ∈ S, s ≥ a}` describes what may follow the
//! word `1 0^a`. Distinct nonempty residuals are the states of the cover; the
//! `0`-edges walk `R_a → R_{a+1}` and a `1`-edge `R_a → R_0` exists iff
//! `a ∈ S`.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use num_integer::Integer;
use serde::Serialize;

use crate::gapset::{is_aft, is_mixing, is_sft, Verdict};
use crate::language::{blocks, MAX_ENUM_LEN};
use crate::{Error, Gap, GapSet, Result, Scalar};

/// Iteration cap for [`spectral_radius`].
pub const MAX_POWER_ITERATIONS: usize = 100_000;

/// `R_a`, with `None` for the empty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidualSet {
    pub shift: Gap,
    pub set: Option<GapSet>,
}

impl ResidualSet {
    pub fn is_empty(&self) -> bool {
        self.set.is_none()
    }
}

/// `R_a` in canonical form.
pub fn residual(g: &GapSet, a: Gap) -> Result<ResidualSet> {
    g.validate()?;
    let set = match g {
        GapSet::Finite(s) => {
            let rest: Vec<Gap> = s.iter().filter(|&&x| x >= a).map(|x| x - a).collect();
            (!rest.is_empty()).then_some(GapSet::Finite(rest))
        }
        GapSet::EventuallyPeriodic { pre, period } => {
            // first element ≥ a, at delta index j
            let (j, sj) = g
                .iter()
                .enumerate()
                .find(|&(_, s)| s >= a)
                .expect("infinite set has elements beyond any bound");
            let k = pre.len();
            let l = period.len();
            let t = (j + 1).max(k);
            let mut new_pre = vec![sj - a];
            new_pre.extend_from_slice(&pre[(j + 1).min(k)..]);
            let new_period = (0..l).map(|r| period[(t - k + r) % l]).collect();
            Some(GapSet::eventually_periodic(new_pre, new_period)?)
        }
        GapSet::Sampled { .. } => return Err(Error::NotSofic),
    };
    Ok(ResidualSet { shift: a, set })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub from: usize,
    pub label: u8,
    pub to: usize,
}

/// Where the `0`-spine of a cover folds back, and the data of the delay bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoverMeta {
    /// State the last `0`-edge returns to (0 for finite `S`, which has no fold).
    pub u0: usize,
    /// Number of states on the spine.
    pub spine: usize,
    /// Length of the pre-period (number of elements for finite `S`).
    pub k: usize,
    /// `s_{k−1}`, or `max S` for finite `S`.
    pub last_pre: Gap,
    pub finite: bool,
}

/// A graph with edges labeled `0`/`1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub states: usize,
    pub edges: Vec<Edge>,
    /// Residual set of each state, for covers built by [`fischer_cover`].
    pub residuals: Vec<ResidualSet>,
    pub meta: Option<CoverMeta>,
}

impl LabeledGraph {
    pub fn from_edges(states: usize, edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.from >= states || e.to >= states || e.label > 1) {
            return Err(Error::InvalidArgument(format!("bad edge {e:?}")));
        }
        Ok(LabeledGraph {
            states,
            edges,
            residuals: Vec::new(),
            meta: None,
        })
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.from == v)
    }

    /// Edge-count adjacency matrix.
    pub fn adjacency(&self) -> Vec<Vec<u64>> {
        let mut a = vec![vec![0; self.states]; self.states];
        for e in &self.edges {
            a[e.from][e.to] += 1;
        }
        a
    }

    pub fn is_strongly_connected(&self) -> bool {
        if self.states == 0 {
            return false;
        }
        let reach = |forward: bool| {
            let mut seen = vec![false; self.states];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for e in &self.edges {
                    let (a, b) = if forward { (e.from, e.to) } else { (e.to, e.from) };
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    /// Labels of all paths of length `len`, as bits (first label most
    /// significant).
    pub fn path_labels(&self, len: usize) -> Result<BTreeSet<u64>> {
        if len > MAX_ENUM_LEN {
            return Err(Error::InvalidArgument(format!(
                "length {len} exceeds the enumeration limit {MAX_ENUM_LEN}"
            )));
        }
        let mut frontier: HashSet<(usize, u64)> = (0..self.states).map(|v| (v, 0)).collect();
        for _ in 0..len {
            let mut next = HashSet::with_capacity(frontier.len() * 2);
            for &(v, bits) in &frontier {
                for e in self.outgoing(v) {
                    next.insert((e.to, (bits << 1) | e.label as u64));
                }
            }
            frontier = next;
        }
        Ok(frontier.into_iter().map(|(_, b)| b).collect())
    }

    /// The graph obtained by identifying state `j` with state `i`.
    pub fn merge_states(&self, i: usize, j: usize) -> LabeledGraph {
        let (keep, gone) = (i.min(j), i.max(j));
        let map = |v: usize| {
            if v == gone {
                keep
            } else if v > gone {
                v - 1
            } else {
                v
            }
        };
        let edges: BTreeSet<Edge> = self
            .edges
            .iter()
            .map(|e| Edge { from: map(e.from), label: e.label, to: map(e.to) })
            .collect();
        LabeledGraph {
            states: self.states - 1,
            edges: edges.into_iter().collect(),
            residuals: Vec::new(),
            meta: None,
        }
    }

    /// DOT rendering with states `R0, R1, …`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph cover {\n");
        if let Some(m) = &self.meta {
            let _ = writeln!(out, "  u0={};", m.u0);
        }
        if let Ok((p, _)) = period_and_classes(self) {
            let _ = writeln!(out, "  period={p};");
        }
        for v in 0..self.states {
            let _ = writeln!(out, "  R{v};");
        }
        for e in &self.edges {
            let _ = writeln!(out, "  R{} -> R{} [label=\"{}\"];", e.from, e.to, e.label);
        }
        out.push_str("}\n");
        out
    }
}

/// The minimal right-resolving presentation of a sofic `X(S)`.
pub fn fischer_cover(g: &GapSet) -> Result<LabeledGraph> {
    g.validate()?;
    if g.is_sampled() {
        return Err(Error::NotSofic);
    }
    let mut residuals: Vec<ResidualSet> = Vec::new();
    let mut index: HashMap<GapSet, usize> = HashMap::new();
    let mut fold = None;
    for a in 0.. {
        let r = residual(g, a)?;
        let Some(set) = r.set.clone() else { break };
        if let Some(&u0) = index.get(&set) {
            fold = Some(u0);
            break;
        }
        index.insert(set, residuals.len());
        residuals.push(r);
    }
    let n = residuals.len();
    let mut edges = Vec::new();
    for a in 0..n {
        if a + 1 < n {
            edges.push(Edge { from: a, label: 0, to: a + 1 });
        } else if let Some(u0) = fold {
            edges.push(Edge { from: a, label: 0, to: u0 });
        }
        if g.contains(a as Gap)? {
            edges.push(Edge { from: a, label: 1, to: 0 });
        }
    }
    let (k, last_pre) = match g {
        GapSet::EventuallyPeriodic { pre, .. } => (pre.len(), pre.iter().sum()),
        GapSet::Finite(s) => (s.len(), *s.last().expect("nonempty")),
        GapSet::Sampled { .. } => unreachable!(),
    };
    Ok(LabeledGraph {
        states: n,
        edges,
        residuals,
        meta: Some(CoverMeta {
            u0: fold.unwrap_or(0),
            spine: n,
            k,
            last_pre,
            finite: fold.is_none(),
        }),
    })
}

/// At most one outgoing edge per label at every state.
pub fn is_right_resolving(graph: &LabeledGraph) -> bool {
    let mut seen = HashSet::new();
    graph.edges.iter().all(|e| seen.insert((e.from, e.label)))
}

/// `max{u₀, s_{k−1} + 1}`, the delay guaranteed for AFT covers.
pub fn delay_bound(meta: &CoverMeta) -> usize {
    meta.u0.max(meta.last_pre as usize + 1)
}

/// Search cap `u₀ + s_{k−1} + 2`.
pub fn default_max_delay(meta: &CoverMeta) -> usize {
    meta.u0 + meta.last_pre as usize + 2
}

/// Smallest `D ≤ max_delay` such that two paths of length `D + 1` with the
/// same label and the same terminal state always share their last edge.
pub fn left_closing_delay(graph: &LabeledGraph, max_delay: usize) -> Option<usize> {
    // pairs of start states of equally labeled paths that end together but
    // entered the common end state through different edges
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    for (i, e) in graph.edges.iter().enumerate() {
        for f in &graph.edges[i + 1..] {
            if e.to == f.to && e.label == f.label {
                pairs.insert((e.from, f.from));
                pairs.insert((f.from, e.from));
            }
        }
    }
    for d in 0..=max_delay {
        if pairs.is_empty() {
            return Some(d);
        }
        let mut next = HashSet::new();
        for e in &graph.edges {
            for f in &graph.edges {
                if e.label == f.label && pairs.contains(&(e.to, f.to)) {
                    next.insert((e.from, f.from));
                }
            }
        }
        pairs = next;
    }
    None
}

/// Period `p` and classes `D_0, …, D_{p−1}`, with every edge going from
/// `D_i` to `D_{i+1 mod p}` and state 0 in `D_0`.
pub fn period_and_classes(graph: &LabeledGraph) -> Result<(usize, Vec<Vec<usize>>)> {
    if !graph.is_strongly_connected() {
        return Err(Error::NotStronglyConnected);
    }
    let mut level = vec![usize::MAX; graph.states];
    level[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for e in graph.outgoing(v) {
            if level[e.to] == usize::MAX {
                level[e.to] = level[v] + 1;
                queue.push_back(e.to);
            }
        }
    }
    let p = graph.edges.iter().fold(0usize, |acc, e| {
        let diff = (level[e.from] as i64 + 1 - level[e.to] as i64).unsigned_abs() as usize;
        acc.gcd(&diff)
    });
    let mut classes = vec![Vec::new(); p];
    for (v, &l) in level.iter().enumerate() {
        classes[l % p].push(v);
    }
    Ok((p, classes))
}

/// Certificate that `X(S)` is a proper PFT: the period classes of the cover,
/// rotated so that every `1`-edge leaves `D_{p−1}`, and the offenders
/// `1^(n)` for `n < p − 1` (a `1` cannot be read from class `D_n`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PftCertificate {
    pub period: usize,
    pub classes: Vec<Vec<usize>>,
    pub offenders: Vec<String>,
    pub proper: bool,
}

pub fn pft_certificate(g: &GapSet) -> Result<PftCertificate> {
    let failed = |what: &str, v: Verdict| {
        Error::Precondition(format!("{what} is {v}, the certificate needs a non-SFT, AFT, non-mixing set"))
    };
    match (is_sft(g), is_aft(g), is_mixing(g)) {
        (Verdict::False, Verdict::True, Verdict::False) => {}
        (sft, Verdict::True, Verdict::False) => return Err(failed("sft", sft)),
        (_, Verdict::True, mixing) => return Err(failed("mixing", mixing)),
        (_, aft, _) => return Err(failed("aft", aft)),
    }
    let graph = fischer_cover(g)?;
    let (p, classes) = period_and_classes(&graph)?;
    let class_of = |v: usize| classes.iter().position(|c| c.contains(&v)).expect("partition");
    let sources: BTreeSet<usize> = graph
        .edges
        .iter()
        .filter(|e| e.label == 1)
        .map(|e| class_of(e.from))
        .collect();
    if sources.len() != 1 {
        return Err(Error::Precondition(format!(
            "1-edges leave {} different period classes",
            sources.len()
        )));
    }
    let c = *sources.iter().next().unwrap();
    let rotated: Vec<Vec<usize>> = (0..p).map(|i| classes[(i + c + 1) % p].clone()).collect();
    let mut offenders = Vec::with_capacity(p.saturating_sub(1));
    for (n, class) in rotated.iter().enumerate().take(p - 1) {
        if class.iter().any(|&v| graph.outgoing(v).any(|e| e.label == 1)) {
            return Err(Error::Precondition(format!("class D_{n} can read a 1")));
        }
        offenders.push(format!("1^({n})"));
    }
    Ok(PftCertificate {
        period: p,
        classes: rotated,
        offenders,
        proper: true,
    })
}

/// Perron value of the adjacency matrix by power iteration on `A^p`.
pub fn spectral_radius<T: Scalar>(graph: &LabeledGraph, tol: T) -> Result<T> {
    if !(tol > T::zero()) {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    let (p, _) = period_and_classes(graph)?;
    let step = |v: &[T]| {
        let mut w = vec![T::zero(); v.len()];
        for e in &graph.edges {
            w[e.from] = w[e.from] + v[e.to];
        }
        w
    };
    let norm = |v: &[T]| v.iter().fold(T::zero(), |m, &x| m.max(x));
    // A^p + I is primitive on each cyclic class and shares the Perron
    // vector of A^p, so the ratio settles instead of oscillating.
    let mut v = vec![T::one(); graph.states];
    let mut prev = T::zero();
    for _ in 0..MAX_POWER_ITERATIONS {
        let mut w = v.clone();
        for _ in 0..p {
            w = step(&w);
        }
        for (x, y) in w.iter_mut().zip(&v) {
            *x = *x + *y;
        }
        let mu = norm(&w) / norm(&v);
        let next: Vec<T> = w.iter().map(|&x| x / norm(&w)).collect();
        let moved = next.iter().zip(&v).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()));
        v = next;
        if (mu - prev).abs() <= tol * mu && moved <= tol {
            return Ok((mu - T::one()).powf(T::one() / T::of(p as f64)));
        }
        prev = mu;
    }
    Err(Error::NoConvergence { iterations: MAX_POWER_ITERATIONS })
}

/// Whether the labels of length-`len` paths are exactly the admissible
/// words of that length.
pub fn graph_language_check(graph: &LabeledGraph, g: &GapSet, len: usize) -> Result<bool> {
    let labels = graph.path_labels(len)?;
    let words: BTreeSet<u64> = blocks(g, len)?
        .iter()
        .map(|w| w.to_bits().expect("short word"))
        .collect();
    Ok(labels == words)
}
