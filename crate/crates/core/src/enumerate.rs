//! Labelled enumeration of all simple graphs on a small vertex set.
//!
//! Bit `i` of an edge mask is the `i`-th vertex pair in graph6 column order.

use crate::error::GraphError;
use crate::graph::Graph;

pub const MAX_ENUM_ORDER: usize = 8;

/// Vertex pairs in graph6 column order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

pub fn mask_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Builds the graph whose edge set is `mask` over `pairs`.
pub fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    let mut m = mask;
    while m != 0 {
        let b = m.trailing_zeros() as usize;
        let (u, v) = pairs[b];
        g.set(u, v, true);
        m &= m - 1;
    }
    g
}

/// Iterator over labelled graphs on `n` vertices in increasing edge-mask
/// order, optionally restricted to a mask sub-range.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl LabeledGraphs {
    pub fn new(n: usize, connected_only: bool) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_ENUM_ORDER {
            return Err(GraphError::EnumerationCap { n, max: MAX_ENUM_ORDER });
        }
        Ok(LabeledGraphs { n, pairs: pair_order(n), next: 0, end: mask_count(n), connected_only })
    }

    /// Restricts the stream to masks in `start..end` (clamped to the full range).
    pub fn range(mut self, start: u64, end: u64) -> Self {
        let total = mask_count(self.n);
        self.next = start.min(total);
        self.end = end.min(total);
        self
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let g = graph_from_mask(self.n, &self.pairs, mask);
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_labeled_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs, GraphError> {
    LabeledGraphs::new(n, connected_only)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        assert_eq!(enumerate_labeled_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_labeled_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_labeled_graphs(1, true).unwrap().count(), 1);
        // OEIS A001187: connected labelled graphs.
        assert_eq!(enumerate_labeled_graphs(4, true).unwrap().count(), 38);
        assert_eq!(enumerate_labeled_graphs(5, true).unwrap().count(), 728);
    }

    #[test]
    fn distinct_edge_sets() {
        let all: HashSet<Vec<(usize, usize)>> =
            enumerate_labeled_graphs(5, false).unwrap().map(|g| g.edges().collect()).collect();
        assert_eq!(all.len(), 1024);
    }

    #[test]
    fn mask_order_matches_graph6_bits() {
        let pairs = pair_order(4);
        assert_eq!(pairs, vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]);
        let g = graph_from_mask(4, &pairs, 0b100100);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn ranges_partition() {
        let whole: Vec<_> = enumerate_labeled_graphs(4, true).unwrap().collect();
        let mut parts: Vec<_> = enumerate_labeled_graphs(4, true).unwrap().range(0, 20).collect();
        parts.extend(enumerate_labeled_graphs(4, true).unwrap().range(20, 1000));
        assert_eq!(whole, parts);
    }

    #[test]
    fn cap() {
        assert!(enumerate_labeled_graphs(0, false).is_err());
        assert!(enumerate_labeled_graphs(9, false).is_err());
    }
}
