//! Forbidden-subgraph detection through common-neighbourhood counts.
//!
//! A graph is `B_{k+1}`-free iff no edge has more than `k` common neighbours,
//! `K_{2,l+1}`-free iff no pair has more than `l`, and `K_{s,t}`-free (as a
//! not necessarily induced subgraph) iff no `t`-subset has `s` common
//! neighbours.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::ForbiddenError;
use crate::graph::Graph;

pub const MAX_SUBSET_T: usize = 4;
pub const MAX_SUBSET_N: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenProfile {
    /// Largest `|Γ(u) ∩ Γ(v)|` over edges; `None` for edgeless graphs.
    pub max_adjacent_common: Option<usize>,
    /// Largest `|Γ(u) ∩ Γ(v)|` over non-adjacent pairs; `None` for complete graphs.
    pub max_nonadjacent_common: Option<usize>,
    /// For each requested `t`, the largest common neighbourhood of a `t`-subset.
    pub tsubset_max: BTreeMap<usize, usize>,
}

impl ForbiddenProfile {
    /// Largest common neighbourhood over all pairs, adjacent or not.
    pub fn max_pair_common(&self) -> usize {
        self.max_adjacent_common.unwrap_or(0).max(self.max_nonadjacent_common.unwrap_or(0))
    }

    /// `B_{k+1}`-freeness; vacuous without edges.
    pub fn book_free(&self, k: usize) -> bool {
        self.max_adjacent_common.is_none_or(|a| a <= k)
    }

    /// Non-adjacent pairs share at most `l` neighbours; vacuous for `K_n`.
    pub fn nonadjacent_within(&self, l: usize) -> bool {
        self.max_nonadjacent_common.is_none_or(|c| c <= l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k_reg: usize,
    pub a: usize,
    pub c: usize,
}

impl SrgParams {
    /// `k(k − a − 1) = (n − k − 1)c`.
    pub fn satisfies_identity(&self) -> bool {
        let lhs = self.k_reg as i64 * (self.k_reg as i64 - self.a as i64 - 1);
        let rhs = (self.n as i64 - self.k_reg as i64 - 1) * self.c as i64;
        lhs == rhs
    }
}

pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<usize, ForbiddenError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(ForbiddenError::SameVertex(u));
    }
    Ok(g.common_count(u, v))
}

/// Adjacent and non-adjacent pair maxima in one pass.
pub fn pair_profile(g: &Graph) -> (Option<usize>, Option<usize>) {
    let mut adj: Option<usize> = None;
    let mut non: Option<usize> = None;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let c = g.common_count(u, v);
            let slot = if g.has_edge(u, v) { &mut adj } else { &mut non };
            *slot = Some(slot.map_or(c, |m| m.max(c)));
        }
    }
    (adj, non)
}

fn check_subset_size(g: &Graph, t: usize) -> Result<(), ForbiddenError> {
    let n = g.n();
    if t < 2 || t > n {
        return Err(ForbiddenError::SubsetSize { t, n });
    }
    if t > MAX_SUBSET_T || (t > 2 && n > MAX_SUBSET_N) {
        return Err(ForbiddenError::Unsupported { t, n, max_t: MAX_SUBSET_T, max_n: MAX_SUBSET_N });
    }
    Ok(())
}

/// Largest `|∩_{x∈T} Γ(x)|` over `t`-subsets `T`.
pub fn max_tsubset_common(g: &Graph, t: usize) -> Result<usize, ForbiddenError> {
    check_subset_size(g, t)?;
    let words = g.row(0).len();
    let mut best = 0;
    let mut stack = vec![vec![!0u64; words]; t + 1];
    subset_scan(g, t, 0, 0, &mut stack, &mut |c| {
        best = best.max(c);
        false
    });
    Ok(best)
}

/// Depth-first scan of `t`-subsets with running neighbourhood intersections.
/// `visit` receives each full subset's common count and returns `true` to stop.
fn subset_scan(
    g: &Graph,
    remaining: usize,
    start: usize,
    depth: usize,
    stack: &mut [Vec<u64>],
    visit: &mut impl FnMut(usize) -> bool,
) -> bool {
    if remaining == 0 {
        let c = stack[depth].iter().map(|w| w.count_ones() as usize).sum();
        return visit(c);
    }
    for x in start..=g.n() - remaining {
        let (lo, hi) = stack.split_at_mut(depth + 1);
        let row = g.row(x);
        let mut any = false;
        for ((dst, src), r) in hi[0].iter_mut().zip(&lo[depth]).zip(row) {
            *dst = src & r;
            any |= *dst != 0;
        }
        if !any {
            // Deeper subsets would share nothing either.
            if visit(0) {
                return true;
            }
            continue;
        }
        if subset_scan(g, remaining - 1, x + 1, depth + 1, stack, visit) {
            return true;
        }
    }
    false
}

pub fn profile(g: &Graph, ts: &[usize]) -> Result<ForbiddenProfile, ForbiddenError> {
    let (max_adjacent_common, max_nonadjacent_common) = pair_profile(g);
    let mut tsubset_max = BTreeMap::new();
    for &t in ts {
        if let std::collections::btree_map::Entry::Vacant(e) = tsubset_max.entry(t) {
            e.insert(max_tsubset_common(g, t)?);
        }
    }
    Ok(ForbiddenProfile { max_adjacent_common, max_nonadjacent_common, tsubset_max })
}

/// No `K_{s,t}` subgraph. Requires `s ≥ t ≥ 2`; scanning `t`-subsets covers
/// both orientations because `s ≥ t`.
pub fn is_kst_free(g: &Graph, s: usize, t: usize) -> Result<bool, ForbiddenError> {
    if t < 2 || s < t {
        return Err(ForbiddenError::BadShape { s, t });
    }
    if s + t > g.n() {
        return Ok(true);
    }
    check_subset_size(g, t)?;
    let words = g.row(0).len();
    let mut stack = vec![vec![!0u64; words]; t + 1];
    let mut found = false;
    subset_scan(g, t, 0, 0, &mut stack, &mut |c| {
        found = c >= s;
        found
    });
    Ok(!found)
}

/// `B_{pages}`-freeness: no edge lies in `pages` triangles.
pub fn is_book_free(g: &Graph, pages: usize) -> Result<bool, ForbiddenError> {
    if pages == 0 {
        return Err(ForbiddenError::ZeroPages);
    }
    Ok(pair_profile(g).0.is_none_or(|a| a < pages))
}

/// Exact strongly-regular parameters, or `None`.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let k_reg = g.regular_degree()?;
    let (mut a, mut c) = (None, None);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let cnt = g.common_count(u, v);
            let slot = if g.has_edge(u, v) { &mut a } else { &mut c };
            match *slot {
                None => *slot = Some(cnt),
                Some(x) if x != cnt => return None,
                _ => {}
            }
        }
    }
    let (a, c) = (a?, c?);
    (c >= 1).then_some(SrgParams { n: g.n(), k_reg, a, c })
}
