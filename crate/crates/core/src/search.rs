//! Hill climbing over connected graphs of fixed order, maximising `q(G)`
//! under forbidden-subgraph constraints.
//!
//! Each run starts from a random spanning tree and accepts the first single
//! edge toggle (in a freshly shuffled order per sweep) that keeps the graph
//! connected and feasible and strictly increases `q`. A sweep with no
//! improving toggle restarts the run from a new tree.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{self, BoundParams, Formula, GraphFacts};
use crate::enumerate::pair_order;
use crate::error::SearchError;
use crate::forbidden::{is_kst_free, pair_profile, MAX_SUBSET_N};
use crate::graph::Graph;
use crate::spectra::{self, DEFAULT_TOL};

const START_ATTEMPTS: usize = 100;
const IMPROVEMENT_EPS: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub n: usize,
    /// Adjacent pairs share at most this many neighbours (`B_{k+1}`-free).
    pub book_cap: Option<usize>,
    /// Every pair shares at most this many neighbours (`K_{2,l+1}`-free).
    pub pair_cap: Option<usize>,
    /// Forbid `K_{s,t}`.
    pub kst: Option<(usize, usize)>,
    /// Spectral evaluations allowed per run.
    pub budget: usize,
    /// Independent runs, each with its own generator stream.
    pub restarts: usize,
    pub seed: u64,
}

impl SearchConfig {
    pub fn unconstrained(n: usize, budget: usize, seed: u64) -> Self {
        SearchConfig { n, book_cap: None, pair_cap: None, kst: None, budget, restarts: 1, seed }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.n < 2 || self.n > MAX_SUBSET_N {
            return Err(SearchError::OrderCap { n: self.n, max: MAX_SUBSET_N });
        }
        if self.budget == 0 || self.restarts == 0 {
            return Err(SearchError::EmptyBudget);
        }
        if let (Some(k), Some(l)) = (self.book_cap, self.pair_cap) {
            if k > l {
                return Err(SearchError::Inconsistent(format!("book cap {k} exceeds pair cap {l}")));
            }
        }
        if let Some((s, t)) = self.kst {
            // Surfaces shape errors and caps up front.
            let probe = Graph::empty(self.n).expect("n >= 2");
            is_kst_free(&probe, s, t)?;
        }
        Ok(())
    }

    /// Connected and within every configured cap.
    pub fn admits(&self, g: &Graph) -> bool {
        if !g.is_connected() {
            return false;
        }
        if self.book_cap.is_some() || self.pair_cap.is_some() {
            let (adj, non) = pair_profile(g);
            let (adj, non) = (adj.unwrap_or(0), non.unwrap_or(0));
            if self.book_cap.is_some_and(|k| adj > k) {
                return false;
            }
            if self.pair_cap.is_some_and(|l| adj.max(non) > l) {
                return false;
            }
        }
        match self.kst {
            Some((s, t)) => is_kst_free(g, s, t).unwrap_or(false),
            None => true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundGap {
    pub formula: Formula,
    pub params: BoundParams,
    pub bound: f64,
    /// `bound − q`; negative means the bound is violated.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub best_graph6: String,
    pub best_q: f64,
    pub evaluations: usize,
    pub gaps: Vec<BoundGap>,
    /// Some applicable bound is exceeded by more than `1e-8`.
    pub bound_violation: bool,
}

struct RunBest {
    graph: Graph,
    graph6: String,
    q: f64,
    evaluations: usize,
}

fn q_of(g: &Graph) -> f64 {
    spectra::q_radius(g, DEFAULT_TOL).expect("default tolerance is valid").value
}

fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::empty(n).expect("n >= 2");
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.set(order[i], parent, true);
    }
    g
}

fn run(cfg: &SearchConfig, stream: u64) -> Result<RunBest, SearchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(stream);
    let mut pairs = pair_order(cfg.n);
    let mut evaluations = 0;
    let mut best: Option<(Graph, f64)> = None;

    'restart: while evaluations < cfg.budget {
        let Some(mut g) = (0..START_ATTEMPTS).map(|_| random_tree(cfg.n, &mut rng)).find(|t| cfg.admits(t)) else {
            if best.is_none() {
                return Err(SearchError::NoFeasibleStart);
            }
            break;
        };
        let mut q = q_of(&g);
        evaluations += 1;
        loop {
            if best.as_ref().is_none_or(|(_, bq)| q > *bq) {
                best = Some((g.clone(), q));
            }
            pairs.shuffle(&mut rng);
            let mut improved = false;
            for &(u, v) in &pairs {
                if evaluations >= cfg.budget {
                    break 'restart;
                }
                g.toggle_edge(u, v).expect("pairs are valid");
                if cfg.admits(&g) {
                    let cand = q_of(&g);
                    evaluations += 1;
                    if cand > q + IMPROVEMENT_EPS {
                        q = cand;
                        improved = true;
                        break;
                    }
                }
                g.toggle_edge(u, v).expect("pairs are valid");
            }
            if !improved {
                continue 'restart;
            }
        }
    }
    let (graph, q) = best.ok_or(SearchError::NoFeasibleStart)?;
    let graph6 = graph.to_graph6().expect("n <= 24");
    Ok(RunBest { graph, graph6, q, evaluations })
}

fn gaps(cfg: &SearchConfig, g: &Graph, q: f64) -> Vec<BoundGap> {
    let facts = GraphFacts::of(g);
    let (n, delta) = (facts.n, facts.delta);
    let mut out = Vec::new();
    let mut push = |formula: Formula, params: BoundParams| {
        if let Ok(bound) = bounds::evaluate_value(formula, &params) {
            out.push(BoundGap { formula, params, bound, gap: bound - q });
        }
    };
    if let (Some(k), Some(l)) = (cfg.book_cap, cfg.pair_cap) {
        if facts.thm1(k, l) {
            push(Formula::Thm1, BoundParams::delta_k_l_n(delta, k, l, n));
        }
    }
    if let Some(k) = cfg.book_cap {
        if facts.cor1(k) {
            push(Formula::Cor1, BoundParams { n: Some(n), delta: Some(delta), k: Some(k), ..Default::default() });
        }
    }
    if let Some(l) = cfg.pair_cap {
        if facts.cor2(l) {
            push(Formula::Cor2, BoundParams { n: Some(n), delta: Some(delta), l: Some(l), ..Default::default() });
        }
    }
    if let Some((s, t)) = cfg.kst {
        if bounds::thm2_applies(g, s, t) {
            push(Formula::Thm2, BoundParams::n_s_t(n, s, t));
        }
    }
    if let Ok(bound) = spectra::merris_q_bound(g) {
        out.push(BoundGap { formula: Formula::Lem5, params: BoundParams { n: Some(n), ..Default::default() }, bound, gap: bound - q });
    }
    out
}

/// Runs `cfg.restarts` independent climbs (in parallel on the current rayon
/// pool) and keeps the best graph, ties broken by smaller graph6 string.
pub fn extremal_search(cfg: &SearchConfig) -> Result<SearchResult, SearchError> {
    cfg.validate()?;
    let runs: Vec<RunBest> = (0..cfg.restarts as u64)
        .into_par_iter()
        .map(|i| run(cfg, i))
        .collect::<Result<_, _>>()?;
    let evaluations = runs.iter().map(|r| r.evaluations).sum();
    let best = runs
        .into_iter()
        .reduce(|a, b| match b.q.total_cmp(&a.q).then_with(|| a.graph6.cmp(&b.graph6)) {
            std::cmp::Ordering::Greater => b,
            _ => a,
        })
        .expect("restarts >= 1");
    let gaps = gaps(cfg, &best.graph, best.q);
    let bound_violation = gaps.iter().any(|g| g.gap < -1e-8);
    Ok(SearchResult { best_graph6: best.graph6, best_q: best.q, evaluations, gaps, bound_violation })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unconstrained_reaches_complete_graph() {
        let r = extremal_search(&SearchConfig::unconstrained(5, 500, 7)).unwrap();
        assert_eq!(r.best_q, 8.0);
        assert_eq!(r.best_graph6, "D~{");
        assert!(!r.bound_violation);
    }

    #[test]
    fn seeded_runs_repeat() {
        let cfg = SearchConfig { book_cap: Some(1), pair_cap: Some(1), restarts: 3, ..SearchConfig::unconstrained(8, 300, 42) };
        assert_eq!(extremal_search(&cfg).unwrap(), extremal_search(&cfg).unwrap());
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(matches!(extremal_search(&SearchConfig::unconstrained(25, 10, 0)), Err(SearchError::OrderCap { .. })));
        assert!(matches!(extremal_search(&SearchConfig::unconstrained(5, 0, 0)), Err(SearchError::EmptyBudget)));
        let cfg = SearchConfig { book_cap: Some(3), pair_cap: Some(2), ..SearchConfig::unconstrained(6, 10, 0) };
        assert!(matches!(extremal_search(&cfg), Err(SearchError::Inconsistent(_))));
        let cfg = SearchConfig { pair_cap: Some(0), ..SearchConfig::unconstrained(6, 10, 0) };
        assert!(matches!(extremal_search(&cfg), Err(SearchError::NoFeasibleStart)));
        let cfg = SearchConfig { kst: Some((2, 3)), ..SearchConfig::unconstrained(6, 10, 0) };
        assert!(matches!(extremal_search(&cfg), Err(SearchError::Forbidden(_))));
    }

    #[test]
    fn c4_free_search_stays_c4_free() {
        let cfg = SearchConfig { kst: Some((2, 2)), restarts: 2, ..SearchConfig::unconstrained(7, 400, 3) };
        let r = extremal_search(&cfg).unwrap();
        let g = Graph::from_graph6(&r.best_graph6).unwrap();
        assert!(cfg.admits(&g));
        assert!((q_of(&g) - r.best_q).abs() <= 1e-8);
    }
}
