mod common;

use hyperconn::generators::*;
use hyperconn::*;
use proptest::prelude::*;

use common::arb_hypergraph;

fn lists(g: &Hypergraph) -> Vec<Vec<usize>> {
    g.edges().iter().map(Edge::to_vertex_list).collect()
}

#[test]
fn fixed_instances() {
    let fig1 = fig1_disjoint_cuts();
    assert_eq!((fig1.vertex_count(), fig1.edge_count()), (9, 14));
    assert!(lists(&fig1).contains(&vec![0, 4, 8]));
    assert!(lists(&fig1).contains(&vec![1, 5, 8]));

    let fig2 = fig2_gap(3).unwrap();
    assert_eq!(fig2.vertex_count(), 7);
    assert!(fig2_gap(1).is_err());

    assert_eq!(lists(&fig3_chain()), vec![vec![0, 1, 2, 3], vec![2, 3, 4, 5], vec![4, 5, 6, 7]]);

    let fano = fano_doubled();
    assert_eq!((fano.vertex_count(), fano.edge_count()), (11, 13));
    assert!(fano.edges().iter().all(|e| e.cardinality() == 3 && e.is_set()));

    let books = two_books();
    assert_eq!(books.vertex_count(), 7);
}

#[test]
fn random_generators_are_reproducible() {
    let g = random_hypergraph(8, 10, 3, 42).unwrap();
    assert_eq!(
        lists(&g),
        vec![
            vec![0, 3, 5],
            vec![2, 6],
            vec![4, 7],
            vec![1, 3, 5],
            vec![1, 3],
            vec![0, 2, 7],
            vec![0, 2, 5],
            vec![5, 6],
            vec![5, 7],
            vec![4, 7],
        ]
    );
    assert_eq!(g, random_hypergraph(8, 10, 3, 42).unwrap());
    assert_ne!(g, random_hypergraph(8, 10, 3, 43).unwrap());

    let i = random_interval_hypergraph(8, 4, 7).unwrap();
    assert_eq!(
        lists(&i),
        vec![vec![0, 3, 5, 6, 7], vec![1, 4], vec![0, 1, 2, 3, 5, 6], vec![1, 2, 6]]
    );
    let g = random_graph(6, 0.5, 3).unwrap();
    assert_eq!(g.edges(), &[(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4)]);

    assert!(random_hypergraph(3, 2, 0, 0).is_err());
    assert!(random_graph(3, 1.5, 0).is_err());
}

#[test]
fn nonisomorphic_graph_counts() {
    let counts: Vec<usize> = (1..=5).map(|n| nonisomorphic_graphs(n).unwrap().len()).collect();
    // edgeless graphs are left out
    assert_eq!(counts, vec![0, 1, 3, 10, 33]);
    assert!(nonisomorphic_graphs(7).is_err());
}

#[test]
fn vertex_cover_reduction() {
    let budgets = Budgets::default();
    for n in 2..=6 {
        for g in nonisomorphic_graphs(n).unwrap() {
            if g.edges().is_empty() {
                continue;
            }
            let inst = vc_reduction(&g).unwrap();
            let hg = &inst.hypergraph;
            assert!(hg.max_edge_cardinality() <= 3);
            assert_eq!(alpha(hg).alpha, tau(hg).tau);

            let cover = common::min_vertex_cover(&g);
            let s = kappa_s(hg).unwrap();
            assert_eq!(s.value, cover, "{:?}", g.edges());
            let cuts = minimum_strong_vertex_cuts(hg, &budgets).unwrap();
            assert!(!cuts.is_empty());
            for c in &cuts {
                assert!(c.iter().all(|v| inst.v_g.contains(v)), "{:?}: {c:?}", g.edges());
                let cover: Vec<usize> = c.iter().map(|v| v - 2 * n).collect();
                assert!(g.edges().iter().all(|(a, b)| cover.contains(a) || cover.contains(b)));
            }
        }
    }
    assert!(vc_reduction(&Graph::new(3, vec![]).unwrap()).is_err());
}

#[test]
fn umlaut_adds_a_cut_vertex() {
    let fano = fano_doubled();
    let u = umlaut(&fano).unwrap();
    assert_eq!(kappa_s(&u).unwrap().value, 1);
    assert!(common::disconnected_after_strong(&u, &[11]));
    assert_eq!(tau(&u).tau, tau(&fano).tau + 1);
    assert!(umlaut(&Hypergraph::empty(0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn umlaut_properties(g in arb_hypergraph(8, 8, 4)) {
        let u = umlaut(&g).unwrap();
        let s = kappa_s(&u).unwrap();
        prop_assert_eq!(s.value, 1);
        prop_assert!(common::disconnected_after_strong(&u, &s.witness));
        prop_assert!(common::disconnected_after_strong(&u, &[g.vertex_count()]));
        prop_assert_eq!(tau(&u).tau, common::tau(&g) + 1);
    }

    #[test]
    fn random_hypergraphs_respect_parameters(
        n in 2usize..12, m in 0usize..15, size in 2usize..6, seed in any::<u64>()
    ) {
        let g = random_hypergraph(n, m, size, seed).unwrap();
        prop_assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
        for e in g.edges() {
            prop_assert!(e.is_set());
            prop_assert!(e.cardinality() >= 2 && e.cardinality() <= size.min(n));
        }
    }

    #[test]
    fn random_interval_hypergraphs_are_interval(n in 2usize..7, m in 0usize..6, seed in any::<u64>()) {
        let g = random_interval_hypergraph(n, m, seed).unwrap();
        prop_assert!(common::is_interval(&g));
    }
}
