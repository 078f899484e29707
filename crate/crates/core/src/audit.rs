//! Audits the bounds against computed spectra over exhaustive labelled
//! enumerations and graph6 corpora.
//!
//! Verdicts lean on the Rayleigh certificate: the reported spectral value is
//! a lower bound on the true radius, so `value > bound + tol` is a genuine
//! violation regardless of convergence.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundParams, Formula, GraphFacts, Lem2Case, Subject};
use crate::enumerate::{graph_from_mask, mask_count, pair_order, MAX_ENUM_ORDER};
use crate::error::{AuditError, GraphError};
use crate::family::GraphFamily;
use crate::forbidden::{is_kst_free, srg_params, SrgParams};
use crate::graph::Graph;
use crate::spectra::{self, SpectralEstimate, DEFAULT_TOL};

pub const MAX_EXHAUSTIVE_ORDER: usize = 7;
const CHUNK: u64 = 1 << 12;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub formulas: BTreeSet<Formula>,
    /// `(s, t)` shapes for the `K_{s,t}` bounds.
    pub kst_shapes: Vec<(usize, usize)>,
    pub power_tol: f64,
    pub violation_tol: f64,
    /// Relative equality tolerance, scaled by `max(1, bound)`.
    pub equality_tol: f64,
    /// Exhaustive mode only: skip disconnected graphs.
    pub connected_only: bool,
    /// Keep every record in the report, not only equality, violation and
    /// inconclusive ones.
    pub keep_all_records: bool,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig {
            formulas: Formula::ALL.into_iter().filter(|f| *f != Formula::Lem4Bipartite).collect(),
            kst_shapes: vec![(2, 2), (3, 2), (3, 3), (4, 3)],
            power_tol: DEFAULT_TOL,
            violation_tol: 1e-8,
            equality_tol: 1e-6,
            connected_only: true,
            keep_all_records: false,
        }
    }
}

impl AuditConfig {
    pub fn only(formulas: &[Formula]) -> Self {
        AuditConfig { formulas: formulas.iter().copied().collect(), ..Default::default() }
    }

    fn wants(&self, f: Formula) -> bool {
        self.formulas.contains(&f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Equality,
    Violation,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Equality => "equality",
            Verdict::Violation => "violation",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

pub fn classify(value: f64, residual: f64, bound: f64, cfg: &AuditConfig) -> Verdict {
    if value > bound + cfg.violation_tol {
        Verdict::Violation
    } else if (value - bound).abs() <= cfg.equality_tol * bound.max(1.0) {
        Verdict::Equality
    } else if value + residual <= bound + cfg.violation_tol {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    }
}

/// Cross-check of an equality record against the claimed extremal structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EqualityCheck {
    /// Strongly regular with the expected parameters.
    Srg { expected: SrgParams, found: Option<SrgParams>, confirmed: bool },
    /// `K_n`: regular with `a = n − 2` and no non-adjacent pairs, so the
    /// condition on `c` holds vacuously.
    Complete { n: usize, a: usize, confirmed: bool },
    /// One of the two equality conditions of the `min{Δ, ·}` bound.
    Lem2 { case: Lem2Case, confirmed: bool },
}

impl EqualityCheck {
    pub fn confirmed(&self) -> bool {
        match self {
            EqualityCheck::Srg { confirmed, .. }
            | EqualityCheck::Complete { confirmed, .. }
            | EqualityCheck::Lem2 { confirmed, .. } => *confirmed,
        }
    }

    fn summary(&self) -> String {
        let tag = if self.confirmed() { "confirmed" } else { "mismatch" };
        match self {
            EqualityCheck::Srg { expected, .. } => {
                format!("{tag}:srg({},{},{},{})", expected.n, expected.k_reg, expected.a, expected.c)
            }
            EqualityCheck::Complete { n, .. } => format!("{tag}:complete({n})"),
            EqualityCheck::Lem2 { case: Lem2Case::Regular, .. } => format!("{tag}:regular"),
            EqualityCheck::Lem2 { case: Lem2Case::CommonNeighbors, .. } => format!("{tag}:common_neighbors"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub graph6: String,
    pub formula: Formula,
    pub params: BoundParams,
    pub bound: f64,
    /// `q`, `ρ` or the edge count, per the formula's subject.
    pub estimate: f64,
    pub residual: f64,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equality_check: Option<EqualityCheck>,
}

impl AuditRecord {
    fn sort_key(&self) -> (&str, Formula, BoundParams) {
        (&self.graph6, self.formula, self.params)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub holds: u64,
    pub equality: u64,
    pub violation: u64,
    pub inconclusive: u64,
}

impl VerdictCounts {
    fn bump(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Equality => self.equality += 1,
            Verdict::Violation => self.violation += 1,
            Verdict::Inconclusive => self.inconclusive += 1,
        }
    }

    fn add(&mut self, o: &VerdictCounts) {
        self.holds += o.holds;
        self.equality += o.equality;
        self.violation += o.violation;
        self.inconclusive += o.inconclusive;
    }

    pub fn total(&self) -> u64 {
        self.holds + self.equality + self.violation + self.inconclusive
    }
}

/// Smallest `bound − estimate` seen for a formula.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapStat {
    pub gap: f64,
    pub graph6: String,
    pub params: BoundParams,
}

impl GapStat {
    fn better_than(&self, o: &GapStat) -> bool {
        self.gap
            .total_cmp(&o.gap)
            .then_with(|| self.graph6.cmp(&o.graph6))
            .then_with(|| self.params.cmp(&o.params))
            .is_lt()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkippedLine {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ReportMeta {
    pub source: String,
    pub graph_count: u64,
    pub min_order: Option<usize>,
    pub max_order: Option<usize>,
    pub skipped: Vec<SkippedLine>,
    pub wall_seconds: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct AuditReport {
    pub meta: ReportMeta,
    pub counts: BTreeMap<Formula, VerdictCounts>,
    pub min_gap: BTreeMap<Formula, GapStat>,
    pub records: Vec<AuditRecord>,
}

impl AuditReport {
    /// Associative, commutative merge; call [`AuditReport::finalize`] after.
    pub fn merge(mut self, other: AuditReport) -> AuditReport {
        self.meta.graph_count += other.meta.graph_count;
        self.meta.min_order = min_opt(self.meta.min_order, other.meta.min_order);
        self.meta.max_order = self.meta.max_order.max(other.meta.max_order);
        self.meta.skipped.extend(other.meta.skipped);
        self.meta.wall_seconds += other.meta.wall_seconds;
        if self.meta.source.is_empty() {
            self.meta.source = other.meta.source;
        }
        for (f, c) in &other.counts {
            self.counts.entry(*f).or_default().add(c);
        }
        for (f, g) in other.min_gap {
            match self.min_gap.get(&f) {
                Some(cur) if !g.better_than(cur) => {}
                _ => {
                    self.min_gap.insert(f, g);
                }
            }
        }
        self.records.extend(other.records);
        self
    }

    /// Sorts records and skipped lines into canonical order.
    pub fn finalize(&mut self) {
        self.records.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        self.meta.skipped.sort_by_key(|s| s.line);
    }

    pub fn total_instances(&self) -> u64 {
        self.counts.values().map(VerdictCounts::total).sum()
    }

    pub fn violations(&self, f: Formula) -> u64 {
        self.counts.get(&f).map_or(0, |c| c.violation)
    }

    /// Violations of formulas that are proven to hold.
    pub fn must_hold_violations(&self) -> u64 {
        self.counts.iter().filter(|(f, _)| f.must_hold()).map(|(_, c)| c.violation).sum()
    }

    pub fn records_with(&self, f: Formula, v: Verdict) -> impl Iterator<Item = &AuditRecord> {
        self.records.iter().filter(move |r| r.formula == f && r.verdict == v)
    }

    /// Copy with timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> AuditReport {
        let mut r = self.clone();
        r.meta.wall_seconds = 0.0;
        r
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn write_csv<W: std::io::Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["graph6", "formula", "params", "bound", "q_or_rho", "residual", "verdict", "srg"])?;
        for r in &self.records {
            w.write_record([
                r.graph6.clone(),
                r.formula.id().to_string(),
                r.params.to_string(),
                fmt_sig(r.bound),
                fmt_sig(r.estimate),
                fmt_sig(r.residual),
                r.verdict.as_str().to_string(),
                r.equality_check.as_ref().map(EqualityCheck::summary).unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Twelve significant digits, scientific notation outside `[1e-4, 1e15)`.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..15).contains(&mag) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - mag).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Everything computed about one graph, shared across its instances.
struct GraphContext<'a> {
    g: &'a Graph,
    facts: GraphFacts,
    q: Option<SpectralEstimate>,
    rho: Option<SpectralEstimate>,
    graph6: Option<String>,
    srg: Option<Option<SrgParams>>,
    power_tol: f64,
}

impl<'a> GraphContext<'a> {
    fn new(g: &'a Graph, power_tol: f64) -> Self {
        GraphContext { g, facts: GraphFacts::of(g), q: None, rho: None, graph6: None, srg: None, power_tol }
    }

    fn subject(&mut self, s: Subject) -> (f64, f64) {
        let tol = self.power_tol;
        let g = self.g;
        let est = match s {
            Subject::Q => self.q.get_or_insert_with(|| spectra::q_radius(g, tol).expect("tolerance validated")),
            Subject::Rho => self.rho.get_or_insert_with(|| spectra::adj_radius(g, tol).expect("tolerance validated")),
            Subject::Edges | Subject::BipartiteEdges => return (g.edge_count() as f64, 0.0),
        };
        (est.value, est.residual)
    }

    fn graph6(&mut self) -> String {
        let g = self.g;
        self.graph6
            .get_or_insert_with(|| g.to_graph6().unwrap_or_else(|_| format!("<order {}>", g.n())))
            .clone()
    }

    fn srg(&mut self) -> Option<SrgParams> {
        let g = self.g;
        *self.srg.get_or_insert_with(|| srg_params(g))
    }

    /// Extremal structure claimed by `f` at equality. The characterisations
    /// are stated for connected graphs only.
    fn equality_check(&mut self, f: Formula, p: &BoundParams) -> Option<EqualityCheck> {
        if !self.facts.connected {
            return None;
        }
        let (n, delta) = (self.facts.n, self.facts.delta);
        let srg_expect = |k: usize, l: usize| SrgParams { n, k_reg: delta, a: k, c: l };
        let expected = match f {
            Formula::Thm1 | Formula::Lem1Printed | Formula::Lem1Corrected => srg_expect(p.k?, p.l?),
            Formula::Cor1 => srg_expect(p.k?, delta),
            Formula::Cor2 => srg_expect(p.l?, p.l?),
            Formula::Lem2 => {
                let (k, l) = (p.k?, p.l?);
                let case = bounds::lem2_case(delta, k, l, n);
                let confirmed = match case {
                    Lem2Case::Regular => self.g.regular_degree() == Some(delta),
                    Lem2Case::CommonNeighbors => all_pairs_exact(self.g, k, l),
                };
                return Some(EqualityCheck::Lem2 { case, confirmed });
            }
            _ => return None,
        };
        if self.facts.max_nonadjacent_common.is_none() {
            let a = n.saturating_sub(2);
            return Some(EqualityCheck::Complete { n, a, confirmed: expected.a == a });
        }
        let found = self.srg();
        Some(EqualityCheck::Srg { expected, found, confirmed: found == Some(expected) })
    }
}

fn all_pairs_exact(g: &Graph, k: usize, l: usize) -> bool {
    (0..g.n()).all(|u| {
        (u + 1..g.n()).all(|v| g.common_count(u, v) == if g.has_edge(u, v) { k } else { l })
    })
}

/// Bound instances `(formula, params, bound)` admissible for one graph.
fn instances(ctx: &GraphContext<'_>, cfg: &AuditConfig) -> Vec<(Formula, BoundParams, f64)> {
    let f = &ctx.facts;
    let g = ctx.g;
    let (n, delta) = (f.n, f.delta);
    let a0 = f.max_adjacent_common.unwrap_or(0);
    let c0 = f.max_nonadjacent_common.unwrap_or(0);
    let mut out = Vec::new();
    let mut push = |formula: Formula, p: BoundParams| {
        let v = bounds::evaluate_value(formula, &p).expect("instance satisfies the formula's hypotheses");
        out.push((formula, p, v));
    };

    if f.connected && delta < n {
        if cfg.wants(Formula::Thm1) {
            for k in a0.max(2)..delta {
                for l in k.max(c0)..delta {
                    debug_assert!(f.thm1(k, l));
                    push(Formula::Thm1, BoundParams::delta_k_l_n(delta, k, l, n));
                }
            }
        }
        if cfg.wants(Formula::Cor1) {
            for k in a0.max(2)..delta {
                debug_assert!(f.cor1(k));
                push(Formula::Cor1, BoundParams { n: Some(n), delta: Some(delta), k: Some(k), ..Default::default() });
            }
        }
        if cfg.wants(Formula::Cor2) {
            for l in a0.max(c0).max(2)..delta {
                debug_assert!(f.cor2(l));
                push(Formula::Cor2, BoundParams { n: Some(n), delta: Some(delta), l: Some(l), ..Default::default() });
            }
        }
        for formula in [Formula::Lem1Printed, Formula::Lem1Corrected] {
            if cfg.wants(formula) {
                for k in a0..=delta {
                    for l in k.max(c0)..=delta {
                        debug_assert!(f.lem1(k, l));
                        push(formula, BoundParams::delta_k_l_n(delta, k, l, n));
                    }
                }
            }
        }
    }
    if cfg.wants(Formula::Lem2) && n >= 2 {
        // Common-neighbourhood counts never exceed n − 2.
        let top = n - 2;
        for k in a0..=top {
            for l in k.max(c0)..=top {
                debug_assert!(f.lem2(k, l));
                push(Formula::Lem2, BoundParams::delta_k_l_n(delta, k, l, n));
            }
        }
    }
    for &(s, t) in &cfg.kst_shapes {
        if t < 2 || s < t {
            continue;
        }
        let wants_any = [Formula::Thm2, Formula::Lem3Rho, Formula::Lem3Edge, Formula::ZarankiewiczEdge]
            .into_iter()
            .any(|x| cfg.wants(x));
        if !wants_any || !is_kst_free(g, s, t).unwrap_or(false) {
            continue;
        }
        let p = BoundParams::n_s_t(n, s, t);
        if cfg.wants(Formula::Thm2) && t >= 3 && n >= s + t && f.connected {
            push(Formula::Thm2, p);
        }
        if cfg.wants(Formula::Lem3Rho) {
            push(Formula::Lem3Rho, p);
        }
        if cfg.wants(Formula::Lem3Edge) && t >= 3 {
            push(Formula::Lem3Edge, p);
        }
        if cfg.wants(Formula::ZarankiewiczEdge) {
            push(Formula::ZarankiewiczEdge, p);
        }
    }
    if cfg.wants(Formula::Lem5) && f.min_degree >= 1 {
        let v = spectra::merris_q_bound(g).expect("minimum degree is positive");
        out.push((Formula::Lem5, BoundParams { n: Some(n), ..Default::default() }, v));
    }
    out
}

/// Audits one graph into `report`, keeping records per the config.
fn audit_into(g: &Graph, cfg: &AuditConfig, report: &mut AuditReport) {
    let mut ctx = GraphContext::new(g, cfg.power_tol);
    report.meta.graph_count += 1;
    report.meta.min_order = min_opt(report.meta.min_order, Some(g.n()));
    report.meta.max_order = report.meta.max_order.max(Some(g.n()));
    for (formula, params, bound) in instances(&ctx, cfg) {
        let (estimate, residual) = ctx.subject(formula.subject());
        let verdict = classify(estimate, residual, bound, cfg);
        report.counts.entry(formula).or_default().bump(verdict);

        let gap = bound - estimate;
        let improves = report.min_gap.get(&formula).is_none_or(|cur| gap <= cur.gap);
        if improves {
            let cand = GapStat { gap, graph6: ctx.graph6(), params };
            if report.min_gap.get(&formula).is_none_or(|cur| cand.better_than(cur)) {
                report.min_gap.insert(formula, cand);
            }
        }

        if cfg.keep_all_records || verdict != Verdict::Holds {
            let equality_check = if verdict == Verdict::Equality { ctx.equality_check(formula, &params) } else { None };
            report.records.push(AuditRecord {
                graph6: ctx.graph6(),
                formula,
                params,
                bound,
                estimate,
                residual,
                verdict,
                equality_check,
            });
        }
    }
}

/// Every admissible bound instance for `g`, with verdicts.
pub fn audit_graph(g: &Graph, cfg: &AuditConfig) -> Vec<AuditRecord> {
    let all = AuditConfig { keep_all_records: true, ..cfg.clone() };
    let mut report = AuditReport::default();
    audit_into(g, &all, &mut report);
    report.finalize();
    report.records
}

/// Audits a slice of graphs in parallel on the current rayon pool.
pub fn audit_graphs(graphs: &[Graph], cfg: &AuditConfig, source: &str) -> AuditReport {
    let start = Instant::now();
    let mut report = graphs
        .par_iter()
        .fold(AuditReport::default, |mut acc, g| {
            audit_into(g, cfg, &mut acc);
            acc
        })
        .reduce(AuditReport::default, AuditReport::merge);
    report.meta.source = source.to_string();
    report.finalize();
    report.meta.wall_seconds = start.elapsed().as_secs_f64();
    report
}

/// Parallel fold over all labelled graphs of order `n`, chunked by edge mask.
pub(crate) fn par_fold_labeled<T, Id, Fo, Re>(n: usize, connected_only: bool, identity: Id, fold: Fo, reduce: Re) -> T
where
    T: Send,
    Id: Fn() -> T + Sync + Send,
    Fo: Fn(T, Graph) -> T + Sync + Send,
    Re: Fn(T, T) -> T + Sync + Send,
{
    let pairs = pair_order(n);
    let total = mask_count(n);
    let chunks = total.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .fold(&identity, |mut acc, c| {
            for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let g = graph_from_mask(n, &pairs, mask);
                if !connected_only || g.is_connected() {
                    acc = fold(acc, g);
                }
            }
            acc
        })
        .reduce(&identity, reduce)
}

/// Audits every labelled graph of order `n ≤ 7` (connected only unless the
/// config says otherwise).
pub fn audit_exhaustive(n: usize, cfg: &AuditConfig) -> Result<AuditReport, AuditError> {
    if n == 0 || n > MAX_EXHAUSTIVE_ORDER {
        return Err(AuditError::ExhaustiveCap { n, max: MAX_EXHAUSTIVE_ORDER });
    }
    debug_assert!(n <= MAX_ENUM_ORDER);
    let start = Instant::now();
    let mut report = par_fold_labeled(
        n,
        cfg.connected_only,
        AuditReport::default,
        |mut acc, g| {
            audit_into(&g, cfg, &mut acc);
            acc
        },
        AuditReport::merge,
    );
    let scope = if cfg.connected_only { "connected" } else { "all" };
    report.meta.source = format!("exhaustive:n={n}:{scope}");
    report.meta.min_order.get_or_insert(n);
    report.meta.max_order.get_or_insert(n);
    report.finalize();
    report.meta.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Parses a newline-separated graph6 stream. Blank lines and a leading
/// `>>graph6<<` header are ignored; malformed lines are reported by number.
pub fn parse_corpus<R: BufRead>(reader: R) -> Result<(Vec<Graph>, Vec<SkippedLine>), AuditError> {
    let mut graphs = Vec::new();
    let mut skipped = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| AuditError::Io(e.to_string()))?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        match Graph::from_graph6(text) {
            Ok(g) => graphs.push(g),
            Err(e) => skipped.push(SkippedLine { line: i + 1, error: e.to_string() }),
        }
    }
    Ok((graphs, skipped))
}

/// Audits every graph in a graph6 stream.
pub fn audit_corpus<R: BufRead>(reader: R, cfg: &AuditConfig) -> Result<AuditReport, AuditError> {
    let start = Instant::now();
    let (graphs, skipped) = parse_corpus(reader)?;
    let mut report = audit_graphs(&graphs, cfg, "corpus");
    report.meta.skipped = skipped;
    report.finalize();
    report.meta.wall_seconds = start.elapsed().as_secs_f64();
    Ok(report)
}

/// Outcome of the check that `F_n` is the unique `q`-maximiser among
/// connected `C_4`-free graphs of order `n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FriendshipVerdict {
    pub n: usize,
    pub q_friendship: f64,
    pub c4_free_graphs: u64,
    /// Labelled graphs with `q ≥ q(F_n) − 1e-8`.
    pub maximizers: u64,
    /// Maximisers that are not a relabelling of `F_n`.
    pub impostors: u64,
    /// Largest `q` among graphs not isomorphic to `F_n`.
    pub runner_up_q: f64,
    pub confirmed: bool,
}

const FRIENDSHIP_TOL: f64 = 1e-8;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// All labelled copies of `F_n`.
fn friendship_labelings(n: usize) -> Result<HashSet<Graph>, GraphError> {
    let f = GraphFamily::Friendship { n }.build()?;
    permutations(n).iter().map(|p| f.relabel(p)).collect()
}

pub fn friendship_extremality(n: usize) -> Result<FriendshipVerdict, AuditError> {
    if !(5..=7).contains(&n) {
        return Err(AuditError::FriendshipRange(n));
    }
    let copies = friendship_labelings(n)?;
    let f = GraphFamily::Friendship { n }.build()?;
    let q_friendship = spectra::q_radius(&f, DEFAULT_TOL).expect("valid tolerance").value;

    #[derive(Default)]
    struct Acc {
        c4_free: u64,
        maximizers: u64,
        impostors: u64,
        runner_up: f64,
    }
    let acc = par_fold_labeled(
        n,
        true,
        Acc::default,
        |mut acc, g| {
            if !is_kst_free(&g, 2, 2).expect("n <= 7 is within caps") {
                return acc;
            }
            acc.c4_free += 1;
            let q = spectra::q_radius(&g, DEFAULT_TOL).expect("valid tolerance").value;
            let is_f = copies.contains(&g);
            if q >= q_friendship - FRIENDSHIP_TOL {
                acc.maximizers += 1;
                if !is_f {
                    acc.impostors += 1;
                }
            }
            if !is_f {
                acc.runner_up = acc.runner_up.max(q);
            }
            acc
        },
        |a, b| Acc {
            c4_free: a.c4_free + b.c4_free,
            maximizers: a.maximizers + b.maximizers,
            impostors: a.impostors + b.impostors,
            runner_up: a.runner_up.max(b.runner_up),
        },
    );
    Ok(FriendshipVerdict {
        n,
        q_friendship,
        c4_free_graphs: acc.c4_free,
        maximizers: acc.maximizers,
        impostors: acc.impostors,
        runner_up_q: acc.runner_up,
        confirmed: acc.impostors == 0 && acc.maximizers == copies.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn classify_thresholds() {
        let cfg = AuditConfig::default();
        assert_eq!(classify(6.0, 0.0, 5.830951894845301, &cfg), Verdict::Violation);
        assert_eq!(classify(12.0, 0.0, 12.0 + 1e-6, &cfg), Verdict::Equality);
        assert_eq!(classify(4.0, 1e-10, 11.3, &cfg), Verdict::Holds);
        assert_eq!(classify(4.0, 0.5, 4.1, &cfg), Verdict::Inconclusive);
        // Within violation tolerance but outside equality tolerance is impossible
        // for bounds ≥ 1; below 1 the equality window is absolute.
        assert_eq!(classify(0.5, 0.0, 0.5 - 5e-9, &cfg), Verdict::Equality);
    }

    #[test]
    fn rook_theorem_equality() {
        let rook = fam(GraphFamily::Rook { m: 4 });
        let recs = audit_graph(&rook, &AuditConfig::only(&[Formula::Thm1]));
        let eq: Vec<_> = recs.iter().filter(|r| r.params.k == Some(2) && r.params.l == Some(2)).collect();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].verdict, Verdict::Equality);
        let want = SrgParams { n: 16, k_reg: 6, a: 2, c: 2 };
        assert_eq!(
            eq[0].equality_check,
            Some(EqualityCheck::Srg { expected: want, found: Some(want), confirmed: true })
        );
        assert!(recs.iter().all(|r| r.verdict != Verdict::Violation));
    }

    #[test]
    fn rook_printed_lemma_violation() {
        let rook = fam(GraphFamily::Rook { m: 4 });
        let recs = audit_graph(&rook, &AuditConfig::only(&[Formula::Lem1Printed]));
        let r = recs.iter().find(|r| r.params.k == Some(2) && r.params.l == Some(2)).unwrap();
        assert_eq!(r.verdict, Verdict::Violation);
        assert_eq!(r.estimate, 6.0);
    }

    #[test]
    fn hexagon_theorem2() {
        let c6 = fam(GraphFamily::Cycle { n: 6 });
        let cfg = AuditConfig { kst_shapes: vec![(3, 3)], ..AuditConfig::only(&[Formula::Thm2]) };
        let recs = audit_graph(&c6, &cfg);
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].verdict, Verdict::Holds);
        assert!((recs[0].bound - recs[0].estimate - 7.301927248894627).abs() < 1e-9);
    }

    #[test]
    fn small_exhaustive() {
        let r = audit_exhaustive(4, &AuditConfig::only(&[Formula::Thm1])).unwrap();
        assert_eq!(r.violations(Formula::Thm1), 0);
        assert_eq!(r.meta.graph_count, 38);
        let r = audit_exhaustive(3, &AuditConfig::only(&[Formula::Thm2])).unwrap();
        assert_eq!(r.total_instances(), 0);
        let r = audit_exhaustive(5, &AuditConfig::only(&[Formula::Lem5])).unwrap();
        assert_eq!(r.violations(Formula::Lem5), 0);
        assert!(r.total_instances() > 0);
        assert!(audit_exhaustive(8, &AuditConfig::default()).is_err());
    }

    #[test]
    fn corpus_parsing() {
        let text = ">>graph6<<Dhc\n\nnot-a-graph\nA_\r\n";
        let r = audit_corpus(text.as_bytes(), &AuditConfig::default()).unwrap();
        assert_eq!(r.meta.graph_count, 2);
        assert_eq!(r.meta.skipped.len(), 1);
        assert_eq!(r.meta.skipped[0].line, 3);
        let empty = audit_corpus(&b""[..], &AuditConfig::default()).unwrap();
        assert_eq!(empty.meta.graph_count, 0);
        assert!(empty.records.is_empty());
        assert_eq!(empty.total_instances(), 0);
    }

    #[test]
    fn csv_header() {
        let mut buf = Vec::new();
        AuditReport::default().write_csv(&mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "graph6,formula,params,bound,q_or_rho,residual,verdict,srg\n");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(fmt_sig(12.0), "12.0000000000");
        assert_eq!(fmt_sig(5.830951894845301), "5.83095189485");
        assert_eq!(fmt_sig(1e-11), "1.00000000000e-11");
        assert_eq!(fmt_sig(0.0), "0.00000000000");
        for x in [0.00123456789123, 123456.789012345, 7.0] {
            let s = fmt_sig(x);
            let digits = s.chars().filter(|c| c.is_ascii_digit()).count();
            assert!(digits >= 12, "{s}");
        }
    }

    #[test]
    fn friendship_five() {
        let v = friendship_extremality(5).unwrap();
        assert!(v.confirmed, "{v:?}");
        assert!(v.runner_up_q < v.q_friendship);
        assert!(friendship_extremality(4).is_err());
    }
}
