//! Named graph families used as fixtures and CLI inputs.

use std::fmt;

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    /// `K_n`.
    Complete { n: usize },
    /// `K_{s,t}`, first class `0..s`.
    CompleteBipartite { s: usize, t: usize },
    /// `P_n` on `n` vertices.
    Path { n: usize },
    /// `C_n`, `n ≥ 3`.
    Cycle { n: usize },
    /// `B_pages = K_2 + complement(K_pages)`: `pages` triangles sharing the
    /// hub edge `{0, 1}`; order `pages + 2`.
    Book { pages: usize },
    /// `F_n`: `⌊n/2⌋` triangles through vertex 0, plus a pendant edge at
    /// vertex 0 when `n` is even.
    Friendship { n: usize },
    Petersen,
    /// `m × m` rook's graph; cell `(r, c)` is vertex `r·m + c`.
    Rook { m: usize },
    /// Line graph of `K_m`.
    Triangular { m: usize },
}

impl GraphFamily {
    pub fn name(&self) -> &'static str {
        match self {
            GraphFamily::Complete { .. } => "complete",
            GraphFamily::CompleteBipartite { .. } => "complete_bipartite",
            GraphFamily::Path { .. } => "path",
            GraphFamily::Cycle { .. } => "cycle",
            GraphFamily::Book { .. } => "book",
            GraphFamily::Friendship { .. } => "friendship",
            GraphFamily::Petersen => "petersen",
            GraphFamily::Rook { .. } => "rook",
            GraphFamily::Triangular { .. } => "triangular",
        }
    }

    fn invalid(&self, reason: impl Into<String>) -> GraphError {
        GraphError::InvalidFamily { family: self.name(), reason: reason.into() }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        match *self {
            GraphFamily::Complete { n } => {
                if n == 0 {
                    return Err(self.invalid("n must be at least 1"));
                }
                let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
                Graph::from_edges(n, &edges)
            }
            GraphFamily::CompleteBipartite { s, t } => {
                if s == 0 || t == 0 {
                    return Err(self.invalid("both classes must be non-empty"));
                }
                let edges: Vec<_> = (0..s).flat_map(|u| (s..s + t).map(move |v| (u, v))).collect();
                Graph::from_edges(s + t, &edges)
            }
            GraphFamily::Path { n } => {
                if n == 0 {
                    return Err(self.invalid("n must be at least 1"));
                }
                let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
                Graph::from_edges(n, &edges)
            }
            GraphFamily::Cycle { n } => {
                if n < 3 {
                    return Err(self.invalid("n must be at least 3"));
                }
                let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            GraphFamily::Book { pages } => {
                if pages == 0 {
                    return Err(self.invalid("page count must be at least 1"));
                }
                let mut edges = vec![(0, 1)];
                for p in 2..pages + 2 {
                    edges.push((0, p));
                    edges.push((1, p));
                }
                Graph::from_edges(pages + 2, &edges)
            }
            GraphFamily::Friendship { n } => {
                if n < 3 {
                    return Err(self.invalid("n must be at least 3"));
                }
                let mut edges = Vec::new();
                for i in 0..(n - 1) / 2 {
                    let (a, b) = (2 * i + 1, 2 * i + 2);
                    edges.extend([(0, a), (0, b), (a, b)]);
                }
                if n % 2 == 0 {
                    edges.push((0, n - 1));
                }
                Graph::from_edges(n, &edges)
            }
            GraphFamily::Petersen => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((i + 5, (i + 2) % 5 + 5));
                }
                Graph::from_edges(10, &edges)
            }
            GraphFamily::Rook { m } => {
                if m == 0 {
                    return Err(self.invalid("m must be at least 1"));
                }
                let mut edges = Vec::new();
                for a in 0..m * m {
                    for b in a + 1..m * m {
                        if a / m == b / m || a % m == b % m {
                            edges.push((a, b));
                        }
                    }
                }
                Graph::from_edges(m * m, &edges)
            }
            GraphFamily::Triangular { m } => {
                if m < 2 {
                    return Err(self.invalid("m must be at least 2"));
                }
                let pairs: Vec<(usize, usize)> =
                    (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
                let mut edges = Vec::new();
                for (x, &(a, b)) in pairs.iter().enumerate() {
                    for (y, &(c, d)) in pairs.iter().enumerate().skip(x + 1) {
                        if a == c || a == d || b == c || b == d {
                            edges.push((x, y));
                        }
                    }
                }
                Graph::from_edges(pairs.len(), &edges)
            }
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Complete { n } => write!(f, "complete({n})"),
            GraphFamily::CompleteBipartite { s, t } => write!(f, "complete_bipartite({s},{t})"),
            GraphFamily::Path { n } => write!(f, "path({n})"),
            GraphFamily::Cycle { n } => write!(f, "cycle({n})"),
            GraphFamily::Book { pages } => write!(f, "book({pages})"),
            GraphFamily::Friendship { n } => write!(f, "friendship({n})"),
            GraphFamily::Petersen => write!(f, "petersen"),
            GraphFamily::Rook { m } => write!(f, "rook({m})"),
            GraphFamily::Triangular { m } => write!(f, "triangular({m})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(f: GraphFamily) -> Graph {
        f.build().unwrap()
    }

    #[test]
    fn book_one_is_triangle() {
        assert_eq!(build(GraphFamily::Book { pages: 1 }), build(GraphFamily::Complete { n: 3 }));
    }

    #[test]
    fn book_shape() {
        let g = build(GraphFamily::Book { pages: 4 });
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 9);
        assert_eq!(g.common_count(0, 1), 4);
    }

    #[test]
    fn friendship_five() {
        let g = build(GraphFamily::Friendship { n: 5 });
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 4);
        let s = g.degree_stats();
        assert_eq!((s.max, s.min), (4, 2));
    }

    #[test]
    fn friendship_even_has_pendant() {
        let g = build(GraphFamily::Friendship { n: 6 });
        assert_eq!(g.edge_count(), 7);
        assert_eq!(g.degree(5), 1);
        assert_eq!(g.degree(0), 5);
        assert!(GraphFamily::Friendship { n: 2 }.build().is_err());
    }

    #[test]
    fn rook_closed_form() {
        for m in 1..=6 {
            let g = build(GraphFamily::Rook { m });
            assert_eq!(g.n(), m * m);
            assert_eq!(g.regular_degree(), Some(2 * (m - 1)));
            assert_eq!(g.edge_count(), m * m * (m - 1));
        }
    }

    #[test]
    fn triangular_closed_form() {
        for m in 2..=7 {
            let g = build(GraphFamily::Triangular { m });
            assert_eq!(g.n(), m * (m - 1) / 2);
            assert_eq!(g.regular_degree(), Some(2 * (m - 2)));
        }
    }

    #[test]
    fn petersen_is_cubic() {
        let g = build(GraphFamily::Petersen);
        assert_eq!(g.regular_degree(), Some(3));
        assert_eq!(g.edge_count(), 15);
        assert!(g.is_connected());
    }

    #[test]
    fn complete_and_bipartite_counts() {
        let k4 = build(GraphFamily::Complete { n: 4 });
        assert_eq!(k4.regular_degree(), Some(3));
        let k23 = build(GraphFamily::CompleteBipartite { s: 2, t: 3 });
        assert_eq!(k23.edge_count(), 6);
        assert!(GraphFamily::Cycle { n: 2 }.build().is_err());
    }
}
