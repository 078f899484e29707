use proptest::prelude::*;
use qspectral::enumerate::{enumerate_labeled_graphs, mask_count};
use qspectral::spectra::{self, MatrixKind, DEFAULT_TOL};
use qspectral::{Graph, GraphFamily};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(62)) {
        let text = g.to_graph6().unwrap();
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(Graph::from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn rayleigh_never_exceeds_oracle(g in arb_graph(10)) {
        for kind in [MatrixKind::Signless, MatrixKind::Adjacency] {
            let top = spectra::dense_eigen_oracle(&g, kind).unwrap()[0];
            let est = match kind {
                MatrixKind::Signless => spectra::q_radius(&g, DEFAULT_TOL).unwrap(),
                MatrixKind::Adjacency => spectra::adj_radius(&g, DEFAULT_TOL).unwrap(),
            };
            prop_assert!(est.value <= top + 1e-9);
            prop_assert!((est.value - top).abs() <= 1e-8);
        }
    }

    #[test]
    fn merris_bound_dominates_q(g in arb_graph(12)) {
        prop_assume!(g.min_degree() >= 1);
        let q = spectra::q_radius(&g, DEFAULT_TOL).unwrap();
        prop_assert!(q.value <= spectra::merris_q_bound(&g).unwrap() + 1e-8);
    }

    #[test]
    fn degree_sum_is_twice_edges(g in arb_graph(40)) {
        let sum: usize = g.degree_stats().sequence.iter().sum();
        prop_assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn q_at_least_twice_rho(g in arb_graph(10)) {
        // q(G) ≥ 2ρ(G) holds for every graph.
        let q = spectra::q_radius(&g, DEFAULT_TOL).unwrap();
        let rho = spectra::adj_radius(&g, DEFAULT_TOL).unwrap();
        prop_assert!(q.value + 1e-8 >= 2.0 * rho.value);
    }
}

#[test]
fn enumeration_counts() {
    // Labelled graphs 2^(n choose 2); connected labelled graphs (OEIS A001187).
    let connected = [1u64, 1, 1, 4, 38, 728, 26704, 1866256];
    for (n, &want) in connected.iter().enumerate().skip(1) {
        assert_eq!(enumerate_labeled_graphs(n, false).unwrap().count() as u64, mask_count(n));
        if n <= 6 {
            assert_eq!(enumerate_labeled_graphs(n, true).unwrap().count() as u64, want);
        }
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

#[test]
fn family_closed_forms() {
    for n in 2..=12 {
        let k = GraphFamily::Complete { n }.build().unwrap();
        assert_eq!(k.edge_count(), n * (n - 1) / 2);
        assert!(close(spectra::q_radius(&k, DEFAULT_TOL).unwrap().value, 2.0 * n as f64 - 2.0));

        let p = GraphFamily::Path { n }.build().unwrap();
        let theta = std::f64::consts::PI;
        assert!(close(spectra::adj_radius(&p, DEFAULT_TOL).unwrap().value, 2.0 * (theta / (n as f64 + 1.0)).cos()));
        assert!(close(spectra::q_radius(&p, DEFAULT_TOL).unwrap().value, 2.0 + 2.0 * (theta / n as f64).cos()));
    }
    for n in 3..=12 {
        let c = GraphFamily::Cycle { n }.build().unwrap();
        assert!(close(spectra::q_radius(&c, DEFAULT_TOL).unwrap().value, 4.0));
        assert!(close(spectra::adj_radius(&c, DEFAULT_TOL).unwrap().value, 2.0));
    }
    for s in 1..=5 {
        for t in 1..=5 {
            let b = GraphFamily::CompleteBipartite { s, t }.build().unwrap();
            assert!(close(spectra::q_radius(&b, DEFAULT_TOL).unwrap().value, (s + t) as f64));
            assert!(close(spectra::adj_radius(&b, DEFAULT_TOL).unwrap().value, ((s * t) as f64).sqrt()));
        }
    }
    for pages in 1..=6 {
        let b = GraphFamily::Book { pages }.build().unwrap();
        assert_eq!((b.n(), b.edge_count()), (pages + 2, 2 * pages + 1));
    }
    for n in 3..=12 {
        let f = GraphFamily::Friendship { n }.build().unwrap();
        assert_eq!(f.edge_count(), 3 * ((n - 1) / 2) + (n + 1) % 2);
        assert_eq!(f.max_degree(), n - 1);
    }
    for m in 2..=6 {
        let r = GraphFamily::Rook { m }.build().unwrap();
        assert_eq!((r.n(), r.regular_degree()), (m * m, Some(2 * (m - 1))));
    }
    for m in 3..=7 {
        let t = GraphFamily::Triangular { m }.build().unwrap();
        assert_eq!((t.n(), t.regular_degree()), (m * (m - 1) / 2, Some(2 * (m - 2))));
    }
}

#[test]
fn disconnected_graph_takes_component_max() {
    // K_4 plus a disjoint edge.
    let mut edges = vec![(4, 5)];
    for v in 1..4 {
        for u in 0..v {
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(6, &edges).unwrap();
    assert!(close(spectra::q_radius(&g, DEFAULT_TOL).unwrap().value, 6.0));
    assert!(close(spectra::adj_radius(&g, DEFAULT_TOL).unwrap().value, 3.0));
}
