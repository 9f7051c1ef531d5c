use std::collections::HashSet;

use maxclique::community::{build_cooccurrence_graph, detect_communities, threshold_filter, InteractionRecords};
use maxclique::io::Format;
use maxclique::*;
use proptest::prelude::*;

fn small_graph() -> impl Strategy<Value = Graph> {
    (0usize..=20, prop::sample::select(vec![0.1, 0.3, 0.5, 0.7, 0.9]), any::<u64>())
        .prop_map(|(n, p, seed)| families::gnp(n, p, seed))
}

fn medium_graph() -> impl Strategy<Value = Graph> {
    (20usize..=80, 0.05f64..0.5, any::<u64>()).prop_map(|(n, p, seed)| families::gnp(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn exact_and_cp_match_enumeration(g in small_graph()) {
        let omega = brute_force(&g).unwrap();
        let exact = max_clique(&g, &SolverConfig::default());
        let cp = max_clique_cp(&g, None);
        prop_assert_eq!(exact.size, omega);
        prop_assert_eq!(cp.size, omega);
        for r in [&exact, &cp] {
            prop_assert!(r.exact && !r.lb_unverified);
            prop_assert_eq!(r.witness.len(), r.size);
            prop_assert!(verify_clique(&g, &r.witness));
        }
    }

    #[test]
    fn p2_equals_m_without_degree_skips(g in medium_graph()) {
        let r = max_clique(&g, &SolverConfig::default());
        if r.stats.p1 == 0 && r.stats.p3 == 0 {
            prop_assert_eq!(r.stats.p2, g.m() as u64);
        }
        // with the degree prunings off the identity holds unconditionally
        prop_assert_eq!(max_clique_cp(&g, None).stats.p2, g.m() as u64);
    }

    #[test]
    fn size_independent_of_order_threads_and_valid_lb(g in medium_graph(), threads in 2usize..5) {
        let base = max_clique(&g, &SolverConfig::default());
        let by_degree = max_clique(&g, &SolverConfig::default().with_ordering(VertexOrder::DegreeDescending));
        let parallel = max_clique(&g, &SolverConfig::default().with_threads(threads));
        let with_lb = max_clique(&g, &SolverConfig::default().with_lb(base.size.saturating_sub(1)));
        for r in [&by_degree, &parallel, &with_lb] {
            prop_assert_eq!(r.size, base.size);
            prop_assert!(verify_clique(&g, &r.witness));
        }
    }

    #[test]
    fn lb_above_omega_is_flagged(g in small_graph()) {
        let omega = brute_force(&g).unwrap();
        let r = max_clique(&g, &SolverConfig::default().with_lb(omega + 1));
        prop_assert_eq!(r.size, omega + 1);
        prop_assert!(r.lb_unverified && r.exact);
    }

    #[test]
    fn heuristic_is_a_sound_lower_bound(g in medium_graph(), seed in any::<u64>()) {
        let exact = max_clique(&g, &SolverConfig::default());
        for policy in [SelectionPolicy::MaxDegree, SelectionPolicy::UniformRandom { seed }] {
            let h = max_clique_heuristic(&g, policy);
            prop_assert!(h.size <= exact.size);
            prop_assert_eq!(h.witness.len(), h.size);
            prop_assert!(verify_clique(&g, &h.witness));
            prop_assert_eq!((h.stats.p2, h.stats.p4), (0, 0));
            let again = max_clique_heuristic(&g, policy);
            prop_assert_eq!(&again.witness, &h.witness);
        }
    }

    #[test]
    fn per_vertex_cliques_contain_their_vertex(g in medium_graph()) {
        let cliques = largest_clique_per_vertex(&g);
        prop_assert_eq!(cliques.len(), g.n());
        for (v, c) in cliques.iter().enumerate() {
            prop_assert!(c.binary_search(&(v as VertexId)).is_ok());
            prop_assert!(verify_clique(&g, c));
        }
    }

    #[test]
    fn normalize_is_idempotent(n in 1usize..40, raw in prop::collection::vec((0u32..40, 0u32..40), 0..200)) {
        let pairs = raw.into_iter().map(|(u, v)| (u % n as u32, v % n as u32));
        let g = EdgeList::from_pairs(n, pairs).normalize().unwrap();
        prop_assert_eq!(EdgeList::from(&g).normalize().unwrap(), g.clone());
        prop_assert_eq!(g.targets().len(), 2 * g.m());
        for u in g.vertices() {
            let nb = g.neighbors(u);
            prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!nb.contains(&u));
            prop_assert!(nb.iter().all(|&v| g.has_edge(v, u)));
        }
    }

    #[test]
    fn every_writer_reader_pair_round_trips(g in medium_graph()) {
        for format in Format::ALL {
            let mut buf = Vec::new();
            format.write(&g, &mut buf).unwrap();
            let back = format.parse(buf.as_slice()).unwrap().normalize().unwrap();
            prop_assert_eq!(&back, &g, "{}", format);
        }
    }

    #[test]
    fn rmat_edge_count_bounded(scale in 1u32..12, seed in any::<u64>(), fam in prop::sample::select(RmatFamily::ALL.to_vec())) {
        let p = fam.params(scale, seed);
        let g = generate_rmat(&p).unwrap();
        prop_assert_eq!(g.n(), 1 << scale);
        prop_assert!(g.m() <= p.draws());
        prop_assert_eq!(generate_rmat(&p).unwrap(), g);
    }

    #[test]
    fn community_invariants(rows in prop::collection::vec((0u8..12, 0u8..20), 1..80), t1 in 0.0f64..1.0, t2 in 0.0f64..1.0) {
        let mut records = InteractionRecords::new();
        for (w, u) in &rows {
            records.push(&format!("w{w}"), &format!("u{u}"));
        }
        let wg = build_cooccurrence_graph(&records);
        for (u, v, w) in wg.edges() {
            prop_assert!(w > 0.0 && w <= 1.0);
            prop_assert_eq!(wg.weight(v, u), Some(w));
        }
        let (lo, hi) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
        let g_lo = threshold_filter(&wg, lo);
        let g_hi = threshold_filter(&wg, hi);
        let lo_edges: HashSet<_> = g_lo.edges().collect();
        prop_assert!(g_hi.edges().all(|e| lo_edges.contains(&e)));

        let communities = detect_communities(&g_lo);
        let mut covered = vec![false; g_lo.n()];
        for c in &communities {
            prop_assert!(c.len() >= 2);
            prop_assert!(verify_clique(&g_lo, c));
            for &v in c {
                covered[v as usize] = true;
            }
        }
        for v in g_lo.vertices() {
            prop_assert_eq!(covered[v as usize], g_lo.degree(v) > 0);
        }
    }
}
