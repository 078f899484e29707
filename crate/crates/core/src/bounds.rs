//! Closed-form spectral and edge bounds for graphs without books
//! `B_{k+1}` and complete bipartite subgraphs `K_{s,t}`.
//!
//! Every evaluator checks its hypotheses with exact integer comparisons and
//! refuses to return a number when they fail.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BoundError;
use crate::forbidden::{is_kst_free, pair_profile};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Formula {
    Thm1,
    Cor1,
    Cor2,
    Thm2,
    Lem1Printed,
    Lem1Corrected,
    Lem2,
    Lem3Rho,
    Lem3Edge,
    Lem4Bipartite,
    ZarankiewiczEdge,
    /// Degree bound `max_u d(u) + Σ_{v∈Γ(u)} d(v) / d(u)` on `q`.
    Lem5,
}

/// Quantity a bound controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Subject {
    /// Signless Laplacian spectral radius `q(G)`.
    Q,
    /// Adjacency spectral radius `ρ(G)`.
    Rho,
    /// Edge count `e(G)`.
    Edges,
    /// Edges of a bipartite graph with prescribed parts.
    BipartiteEdges,
}

impl Formula {
    pub const ALL: [Formula; 12] = [
        Formula::Thm1,
        Formula::Cor1,
        Formula::Cor2,
        Formula::Thm2,
        Formula::Lem1Printed,
        Formula::Lem1Corrected,
        Formula::Lem2,
        Formula::Lem3Rho,
        Formula::Lem3Edge,
        Formula::Lem4Bipartite,
        Formula::ZarankiewiczEdge,
        Formula::Lem5,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Formula::Thm1 => "thm1",
            Formula::Cor1 => "cor1",
            Formula::Cor2 => "cor2",
            Formula::Thm2 => "thm2",
            Formula::Lem1Printed => "lem1_printed",
            Formula::Lem1Corrected => "lem1_corrected",
            Formula::Lem2 => "lem2",
            Formula::Lem3Rho => "lem3_rho",
            Formula::Lem3Edge => "lem3_edge",
            Formula::Lem4Bipartite => "lem4_bipartite",
            Formula::ZarankiewiczEdge => "zarankiewicz_edge",
            Formula::Lem5 => "lem5",
        }
    }

    pub fn subject(&self) -> Subject {
        match self {
            Formula::Thm1 | Formula::Cor1 | Formula::Cor2 | Formula::Thm2 | Formula::Lem5 => Subject::Q,
            Formula::Lem1Printed | Formula::Lem1Corrected | Formula::Lem2 | Formula::Lem3Rho => Subject::Rho,
            Formula::Lem3Edge | Formula::ZarankiewiczEdge => Subject::Edges,
            Formula::Lem4Bipartite => Subject::BipartiteEdges,
        }
    }

    /// Whether a violation refutes a proven statement. The printed form of
    /// the Shi–Song bound is known to fail and is reported as a finding.
    pub fn must_hold(&self) -> bool {
        !matches!(self, Formula::Lem1Printed)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl std::str::FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Formula::ALL
            .into_iter()
            .find(|f| f.id() == s)
            .ok_or_else(|| format!("unknown formula '{s}'"))
    }
}

/// Instantiated symbols of a bound. Unused symbols stay `None`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BoundParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_a: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_b: Option<usize>,
}

impl BoundParams {
    pub fn delta_k_l_n(delta: usize, k: usize, l: usize, n: usize) -> Self {
        BoundParams { n: Some(n), delta: Some(delta), k: Some(k), l: Some(l), ..Default::default() }
    }

    pub fn n_s_t(n: usize, s: usize, t: usize) -> Self {
        BoundParams { n: Some(n), s: Some(s), t: Some(t), ..Default::default() }
    }
}

impl fmt::Display for BoundParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fields = [
            ("n", self.n),
            ("delta", self.delta),
            ("k", self.k),
            ("l", self.l),
            ("s", self.s),
            ("t", self.t),
            ("size_a", self.size_a),
            ("size_b", self.size_b),
        ];
        let mut first = true;
        for (name, v) in fields {
            if let Some(v) = v {
                if !first {
                    f.write_str(";")?;
                }
                write!(f, "{name}={v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

/// One evaluated bound instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundResult {
    pub formula: Formula,
    pub params: BoundParams,
    pub value: Option<f64>,
    pub hypothesis_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

fn fail(formula: Formula, reason: impl Into<String>) -> BoundError {
    BoundError { formula: formula.id(), reason: reason.into() }
}

fn require(cond: bool, formula: Formula, reason: &str) -> Result<(), BoundError> {
    if cond {
        Ok(())
    } else {
        Err(fail(formula, reason))
    }
}

fn missing(formula: Formula, name: &str) -> BoundError {
    fail(formula, format!("parameter {name} is required"))
}

/// `(b + √(b² + c)) / 4`, the positive root of `2x² − bx − c/8 = 0`.
fn quarter_root(b: f64, c: f64) -> f64 {
    (b + (b * b + c).sqrt()) / 4.0
}

/// Q-bound for connected `{B_{k+1}, K_{2,l+1}}`-free graphs:
/// `¼[3Δ+k−2l+1 + √((3Δ+k−2l+1)² + 16l(Δ+n−1))]`, for `1 < k ≤ l < Δ < n`.
pub fn thm1_bound(delta: usize, k: usize, l: usize, n: usize) -> Result<f64, BoundError> {
    let f = Formula::Thm1;
    require(1 < k, f, "need 1 < k")?;
    require(k <= l, f, "need k <= l")?;
    require(l < delta, f, "need l < delta")?;
    require(delta < n, f, "need delta < n")?;
    Ok(thm1_expression(delta as f64, k as f64, l as f64, n as f64))
}

/// The `thm1` expression with no hypothesis checks, for comparing the
/// specialisations outside `l < Δ`.
pub fn thm1_expression(delta: f64, k: f64, l: f64, n: f64) -> f64 {
    quarter_root(3.0 * delta + k - 2.0 * l + 1.0, 16.0 * l * (delta + n - 1.0))
}

/// Book-free specialisation: `¼[Δ+k+1 + √((Δ+k+1)² + 32Δ(n−1))]`,
/// for `1 < k < Δ < n`.
pub fn cor1_bound(delta: usize, k: usize, n: usize) -> Result<f64, BoundError> {
    let f = Formula::Cor1;
    require(1 < k, f, "need 1 < k")?;
    require(k < delta, f, "need k < delta")?;
    require(delta < n, f, "need delta < n")?;
    let (d, k, n) = (delta as f64, k as f64, n as f64);
    Ok(quarter_root(d + k + 1.0, 32.0 * d * (n - 1.0)))
}

/// `K_{2,l+1}`-free specialisation: `¼[3Δ−l+1 + √((3Δ−l+1)² + 32l(n−1))]`,
/// for `1 < l < Δ < n`.
pub fn cor2_bound(delta: usize, l: usize, n: usize) -> Result<f64, BoundError> {
    let f = Formula::Cor2;
    require(1 < l, f, "need 1 < l")?;
    require(l < delta, f, "need l < delta")?;
    require(delta < n, f, "need delta < n")?;
    let (d, l, n) = (delta as f64, l as f64, n as f64);
    Ok(quarter_root(3.0 * d - l + 1.0, 32.0 * l * (n - 1.0)))
}

/// Q-bound for connected `K_{s,t}`-free graphs:
/// `n + (s−t+1)^{1/t} n^{1−1/t} + (t−1)(n−1)^{1−3/t} + t − 3`,
/// for `s ≥ t ≥ 3`, `n ≥ s + t`.
pub fn thm2_bound(n: usize, s: usize, t: usize) -> Result<f64, BoundError> {
    let f = Formula::Thm2;
    require(t >= 3, f, "need t >= 3")?;
    require(s >= t, f, "need s >= t")?;
    require(n >= s + t, f, "need n >= s + t")?;
    let (nf, sf, tf) = (n as f64, s as f64, t as f64);
    Ok(nf
        + (sf - tf + 1.0).powf(1.0 / tf) * nf.powf(1.0 - 1.0 / tf)
        + (tf - 1.0) * (nf - 1.0).powf(1.0 - 3.0 / tf)
        + tf
        - 3.0)
}

fn lem1_check(f: Formula, delta: usize, k: usize, l: usize, n: usize) -> Result<(), BoundError> {
    require(k <= l, f, "need k <= l")?;
    require(l <= delta, f, "need l <= delta")?;
    require(delta < n, f, "need delta < n")
}

/// `[k−l + √((k−l)² + 4Δ + 4l(n−l))] / 2`. Exceeded by the 4×4 rook graph at `k = l = 2`.
pub fn lem1_bound_printed(delta: usize, k: usize, l: usize, n: usize) -> Result<f64, BoundError> {
    lem1_check(Formula::Lem1Printed, delta, k, l, n)?;
    let (d, k, l, n) = (delta as f64, k as f64, l as f64, n as f64);
    let b = k - l;
    Ok((b + (b * b + 4.0 * d + 4.0 * l * (n - l)).sqrt()) / 2.0)
}

/// `[k−l + √((k−l)² + 4Δ + 4l(n−1))] / 2`. Attains `Δ` exactly on
/// strongly regular graphs with parameters `(Δ, k, l)`.
pub fn lem1_bound_corrected(delta: usize, k: usize, l: usize, n: usize) -> Result<f64, BoundError> {
    lem1_check(Formula::Lem1Corrected, delta, k, l, n)?;
    let (d, k, l, n) = (delta as f64, k as f64, l as f64, n as f64);
    let b = k - l;
    Ok((b + (b * b + 4.0 * d + 4.0 * l * (n - 1.0)).sqrt()) / 2.0)
}

/// `min{Δ, [k−l+1 + √((k−l+1)² + 4l(n−1))] / 2}` for `l ≥ k ≥ 0`, `n ≥ 2`.
pub fn lem2_bound(delta: usize, k: usize, l: usize, n: usize) -> Result<f64, BoundError> {
    let f = Formula::Lem2;
    require(k <= l, f, "need k <= l")?;
    require(n >= 2, f, "need n >= 2")?;
    let (k, l, nf) = (k as f64, l as f64, n as f64);
    let b = k - l + 1.0;
    let root = (b + (b * b + 4.0 * l * (nf - 1.0)).sqrt()) / 2.0;
    Ok((delta as f64).min(root))
}

/// Which equality condition of the `ρ` bound above governs `(Δ, k, l, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lem2Case {
    /// `Δ² − Δ(k−l+1) ≤ l(n−1)`: equality iff `G` is `Δ`-regular.
    Regular,
    /// Otherwise: equality iff adjacent pairs share exactly `k` and
    /// non-adjacent pairs exactly `l` neighbours.
    CommonNeighbors,
}

pub fn lem2_case(delta: usize, k: usize, l: usize, n: usize) -> Lem2Case {
    let (d, k, l, n) = (delta as i64, k as i64, l as i64, n as i64);
    if d * d - d * (k - l + 1) <= l * (n - 1) {
        Lem2Case::Regular
    } else {
        Lem2Case::CommonNeighbors
    }
}

/// `ρ` bound for `K_{s,t}`-free graphs:
/// `1/2 + √((s−1)(n−1) + 1/4)` when `t = 2`, and
/// `(s−t+1)^{1/t} n^{1−1/t} + (t−1) n^{1−2/t} + t − 2` when `t ≥ 3`.
pub fn lem3_rho_bound(n: usize, s: usize, t: usize) -> Result<f64, BoundError> {
    let f = Formula::Lem3Rho;
    require(t >= 2, f, "need t >= 2")?;
    require(s >= t, f, "need s >= t")?;
    require(n >= 1, f, "need n >= 1")?;
    let (nf, sf, tf) = (n as f64, s as f64, t as f64);
    if t == 2 {
        return Ok(0.5 + ((sf - 1.0) * (nf - 1.0) + 0.25).sqrt());
    }
    Ok((sf - tf + 1.0).powf(1.0 / tf) * nf.powf(1.0 - 1.0 / tf) + (tf - 1.0) * nf.powf(1.0 - 2.0 / tf) + tf - 2.0)
}

fn edge_expression(n: usize, s: usize, t: usize) -> f64 {
    let (nf, sf, tf) = (n as f64, s as f64, t as f64);
    0.5 * (sf - tf + 1.0).powf(1.0 / tf) * nf.powf(2.0 - 1.0 / tf)
        + 0.5 * (tf - 1.0) * nf.powf(2.0 - 2.0 / tf)
        + 0.5 * (tf - 2.0) * nf
}

/// Edge bound for `K_{s,t}`-free graphs of order `n`, `s ≥ t ≥ 2`:
/// `½(s−t+1)^{1/t} n^{2−1/t} + ½(t−1) n^{2−2/t} + ½(t−2) n`.
pub fn zarankiewicz_edge_bound(n: usize, s: usize, t: usize) -> Result<f64, BoundError> {
    let f = Formula::ZarankiewiczEdge;
    require(t >= 2, f, "need t >= 2")?;
    require(s >= t, f, "need s >= t")?;
    require(n >= 1, f, "need n >= 1")?;
    Ok(edge_expression(n, s, t))
}

/// Same expression as [`zarankiewicz_edge_bound`], stated as a strict
/// inequality for `t ≥ 3`.
pub fn lem3_edge_bound(n: usize, s: usize, t: usize) -> Result<f64, BoundError> {
    let f = Formula::Lem3Edge;
    require(t >= 3, f, "need t >= 3")?;
    require(s >= t, f, "need s >= t")?;
    require(n >= 1, f, "need n >= 1")?;
    Ok(edge_expression(n, s, t))
}

/// Edges of a bipartite `G(A, B)` with no `K_{s,t}` having its `s`-class in
/// `A`: `(s−k−1)^{1/t}|B||A|^{1−1/t} + (t−1)|A|^{1+k/t} + k|B|`.
pub fn lem4_bipartite_bound(size_a: usize, size_b: usize, s: usize, t: usize, k: usize) -> Result<f64, BoundError> {
    let f = Formula::Lem4Bipartite;
    require(s >= 2, f, "need s >= 2")?;
    require(t >= 2, f, "need t >= 2")?;
    require(k + 2 <= s, f, "need k <= s - 2")?;
    let (a, b, sf, tf, kf) = (size_a as f64, size_b as f64, s as f64, t as f64, k as f64);
    Ok((sf - kf - 1.0).powf(1.0 / tf) * b * a.powf(1.0 - 1.0 / tf) + (tf - 1.0) * a.powf(1.0 + kf / tf) + kf * b)
}

/// Evaluates `formula` at `params`. `Lem5` depends on the whole graph and
/// cannot be evaluated from parameters alone.
pub fn evaluate(formula: Formula, params: &BoundParams) -> BoundResult {
    let value = evaluate_value(formula, params);
    let (value, hypothesis_ok, reason) = match value {
        Ok(v) => (Some(v), true, None),
        Err(e) => (None, false, Some(e.reason)),
    };
    BoundResult { formula, params: *params, value, hypothesis_ok, reason }
}

pub fn evaluate_value(formula: Formula, p: &BoundParams) -> Result<f64, BoundError> {
    let get = |v: Option<usize>, name: &str| v.ok_or_else(|| missing(formula, name));
    match formula {
        Formula::Thm1 => thm1_bound(get(p.delta, "delta")?, get(p.k, "k")?, get(p.l, "l")?, get(p.n, "n")?),
        Formula::Cor1 => cor1_bound(get(p.delta, "delta")?, get(p.k, "k")?, get(p.n, "n")?),
        Formula::Cor2 => cor2_bound(get(p.delta, "delta")?, get(p.l, "l")?, get(p.n, "n")?),
        Formula::Thm2 => thm2_bound(get(p.n, "n")?, get(p.s, "s")?, get(p.t, "t")?),
        Formula::Lem1Printed => {
            lem1_bound_printed(get(p.delta, "delta")?, get(p.k, "k")?, get(p.l, "l")?, get(p.n, "n")?)
        }
        Formula::Lem1Corrected => {
            lem1_bound_corrected(get(p.delta, "delta")?, get(p.k, "k")?, get(p.l, "l")?, get(p.n, "n")?)
        }
        Formula::Lem2 => lem2_bound(get(p.delta, "delta")?, get(p.k, "k")?, get(p.l, "l")?, get(p.n, "n")?),
        Formula::Lem3Rho => lem3_rho_bound(get(p.n, "n")?, get(p.s, "s")?, get(p.t, "t")?),
        Formula::Lem3Edge => lem3_edge_bound(get(p.n, "n")?, get(p.s, "s")?, get(p.t, "t")?),
        Formula::ZarankiewiczEdge => zarankiewicz_edge_bound(get(p.n, "n")?, get(p.s, "s")?, get(p.t, "t")?),
        Formula::Lem4Bipartite => lem4_bipartite_bound(
            get(p.size_a, "size_a")?,
            get(p.size_b, "size_b")?,
            get(p.s, "s")?,
            get(p.t, "t")?,
            get(p.k, "k")?,
        ),
        Formula::Lem5 => Err(fail(formula, "graph-dependent; use spectra::merris_q_bound")),
    }
}

/// Per-graph facts the hypothesis checkers need, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFacts {
    pub n: usize,
    pub delta: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub max_adjacent_common: Option<usize>,
    pub max_nonadjacent_common: Option<usize>,
}

impl GraphFacts {
    pub fn of(g: &Graph) -> Self {
        let (max_adjacent_common, max_nonadjacent_common) = pair_profile(g);
        GraphFacts {
            n: g.n(),
            delta: g.max_degree(),
            min_degree: g.min_degree(),
            connected: g.is_connected(),
            max_adjacent_common,
            max_nonadjacent_common,
        }
    }

    /// `B_{k+1}`-free; vacuous for edgeless graphs.
    pub fn book_free(&self, k: usize) -> bool {
        self.max_adjacent_common.is_none_or(|a| a <= k)
    }

    /// Non-adjacent pairs share at most `l` neighbours; vacuous for `K_n`.
    pub fn nonadjacent_within(&self, l: usize) -> bool {
        self.max_nonadjacent_common.is_none_or(|c| c <= l)
    }

    /// `K_{2,l+1}`-free: every pair shares at most `l` neighbours.
    pub fn k2_free(&self, l: usize) -> bool {
        self.book_free(l) && self.nonadjacent_within(l)
    }

    pub fn thm1(&self, k: usize, l: usize) -> bool {
        1 < k
            && k <= l
            && l < self.delta
            && self.delta < self.n
            && self.connected
            && self.book_free(k)
            && self.nonadjacent_within(l)
    }

    pub fn cor1(&self, k: usize) -> bool {
        1 < k && k < self.delta && self.delta < self.n && self.connected && self.book_free(k)
    }

    pub fn cor2(&self, l: usize) -> bool {
        1 < l && l < self.delta && self.connected && self.k2_free(l)
    }

    pub fn lem1(&self, k: usize, l: usize) -> bool {
        k <= l && l <= self.delta && self.delta < self.n && self.connected && self.book_free(k) && self.nonadjacent_within(l)
    }

    pub fn lem2(&self, k: usize, l: usize) -> bool {
        k <= l && self.n >= 2 && self.book_free(k) && self.nonadjacent_within(l)
    }
}

pub fn thm1_applies(g: &Graph, k: usize, l: usize) -> bool {
    GraphFacts::of(g).thm1(k, l)
}

pub fn cor1_applies(g: &Graph, k: usize) -> bool {
    GraphFacts::of(g).cor1(k)
}

pub fn cor2_applies(g: &Graph, l: usize) -> bool {
    GraphFacts::of(g).cor2(l)
}

pub fn lem1_applies(g: &Graph, k: usize, l: usize) -> bool {
    GraphFacts::of(g).lem1(k, l)
}

pub fn lem2_applies(g: &Graph, k: usize, l: usize) -> bool {
    GraphFacts::of(g).lem2(k, l)
}

/// Connected, `K_{s,t}`-free, `s ≥ t ≥ 3`, `n ≥ s + t`.
pub fn thm2_applies(g: &Graph, s: usize, t: usize) -> bool {
    t >= 3 && s >= t && g.n() >= s + t && g.is_connected() && is_kst_free(g, s, t).unwrap_or(false)
}

/// `K_{s,t}`-free with `s ≥ t ≥ 2`.
pub fn lem3_applies(g: &Graph, s: usize, t: usize) -> bool {
    t >= 2 && s >= t && is_kst_free(g, s, t).unwrap_or(false)
}
