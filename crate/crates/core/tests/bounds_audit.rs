use qspectral::audit::{self, audit_exhaustive, audit_graphs, AuditConfig, Verdict};
use qspectral::bounds::{self, Formula};
use qspectral::enumerate::enumerate_labeled_graphs;
use qspectral::search::{extremal_search, SearchConfig};
use qspectral::spectra::{self, DEFAULT_TOL};
use qspectral::{Graph, GraphFamily};

#[test]
fn thm1_monotone_in_k_and_n() {
    for n in 8..30 {
        for delta in 3..n {
            for l in 2..delta {
                let mut prev = f64::NEG_INFINITY;
                for k in 2..=l {
                    let v = bounds::thm1_bound(delta, k, l, n).unwrap();
                    assert!(v > prev, "k monotonicity at delta={delta} l={l} n={n}");
                    prev = v;
                }
                let a = bounds::thm1_bound(delta, 2, l, n).unwrap();
                let b = bounds::thm1_bound(delta, 2, l, n + 1).unwrap();
                assert!(b >= a - 1e-12, "n monotonicity at delta={delta} l={l} n={n}");
            }
        }
    }
    for n in 7..40 {
        assert!(bounds::thm2_bound(n + 1, 3, 3).unwrap() >= bounds::thm2_bound(n, 3, 3).unwrap());
        assert!(bounds::thm2_bound(n, 4, 3).unwrap() >= bounds::thm2_bound(n, 3, 3).unwrap());
    }
}

#[test]
fn srg_fixtures_meet_bounds() {
    for (family, d) in [(GraphFamily::Rook { m: 4 }, 6.0), (GraphFamily::Triangular { m: 5 }, 6.0)] {
        let g = family.build().unwrap();
        let (n, delta) = (g.n(), g.max_degree());
        let p = qspectral::forbidden::srg_params(&g).unwrap();
        let thm1 = bounds::thm1_bound(delta, p.a, p.c, n).unwrap();
        assert!((thm1 - 2.0 * d).abs() <= 1e-9, "{family}");
        let q = spectra::q_radius(&g, DEFAULT_TOL).unwrap().value;
        assert!((q - thm1).abs() <= 1e-9);
    }
    for family in [GraphFamily::Petersen, GraphFamily::Rook { m: 4 }, GraphFamily::Triangular { m: 5 }] {
        let g = family.build().unwrap();
        let p = qspectral::forbidden::srg_params(&g).unwrap();
        let v = bounds::lem1_bound_corrected(g.max_degree(), p.a, p.c, g.n()).unwrap();
        assert!((v - p.k_reg as f64).abs() <= 1e-9, "{family}");
    }
}

fn strip(mut r: audit::AuditReport) -> audit::AuditReport {
    r.meta.wall_seconds = 0.0;
    r.meta.source = String::new();
    r
}

#[test]
fn audit_partition_invariance() {
    let graphs: Vec<Graph> = enumerate_labeled_graphs(5, true).unwrap().collect();
    let cfg = AuditConfig { keep_all_records: true, ..Default::default() };
    let whole = audit_graphs(&graphs, &cfg, "x");
    for split in [1, 100, 400, 727] {
        let (a, b) = graphs.split_at(split);
        let mut merged = audit_graphs(b, &cfg, "x").merge(audit_graphs(a, &cfg, "x"));
        merged.finalize();
        assert_eq!(strip(merged), strip(whole.clone()), "split at {split}");
    }
}

#[test]
fn audit_is_deterministic() {
    let cfg = AuditConfig::default();
    let a = audit_exhaustive(6, &cfg).unwrap().without_timing();
    let b = audit_exhaustive(6, &cfg).unwrap().without_timing();
    assert_eq!(a.to_json().unwrap(), b.to_json().unwrap());
}

#[test]
fn corpus_equalities_are_confirmed() {
    let text = [GraphFamily::Petersen, GraphFamily::Rook { m: 4 }, GraphFamily::Triangular { m: 5 }]
        .iter()
        .map(|f| f.build().unwrap().to_graph6().unwrap())
        .collect::<Vec<_>>()
        .join("\n");
    let cfg = AuditConfig::only(&[Formula::Thm1, Formula::Lem2]);
    let report = audit::audit_corpus(text.as_bytes(), &cfg).unwrap();
    assert_eq!(report.meta.graph_count, 3);
    assert_eq!(report.must_hold_violations(), 0);
    let eq: Vec<_> = report.records_with(Formula::Thm1, Verdict::Equality).collect();
    assert_eq!(eq.len(), 2);
    assert!(eq.iter().all(|r| r.equality_check.as_ref().is_some_and(|c| c.confirmed())));
    assert!(report.records_with(Formula::Lem2, Verdict::Equality).all(|r| r.equality_check.as_ref().unwrap().confirmed()));
}

#[test]
fn corpus_skips_malformed_lines() {
    let report = audit::audit_corpus("Dhc\n???\n\nA_\n".as_bytes(), &AuditConfig::default()).unwrap();
    assert_eq!(report.meta.graph_count, 2);
    assert_eq!(report.meta.skipped.len(), 1);
    assert_eq!(report.meta.skipped[0].line, 2);
}

#[test]
fn search_respects_thm1_at_n10() {
    let cfg = SearchConfig { book_cap: Some(3), pair_cap: Some(4), restarts: 3, ..SearchConfig::unconstrained(10, 800, 11) };
    let r = extremal_search(&cfg).unwrap();
    assert!(!r.bound_violation);
    let g = Graph::from_graph6(&r.best_graph6).unwrap();
    assert!(cfg.admits(&g));
    if let Ok(bound) = bounds::thm1_bound(g.max_degree(), 3, 4, 10) {
        assert!(r.best_q <= bound + 1e-8);
    }
    assert!(r.gaps.iter().all(|g| g.gap >= -1e-8));
}
