mod common;

use hyperconn::connectivity::components;
use hyperconn::deletion::*;
use hyperconn::generators;
use hyperconn::transversal::tau;
use hyperconn::*;
use proptest::prelude::*;

use common::arb_hypergraph;

fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_edge_lists(n, edges).unwrap()
}

#[test]
fn degree_examples() {
    assert_eq!(h(3, &[&[0, 1], &[1, 2]]).degree(1).unwrap(), 2);
    assert_eq!(h(2, &[&[0, 0, 1]]).degree(0).unwrap(), 2);
    assert_eq!(generators::fig2_gap(2).unwrap().degree(4).unwrap(), 2);
    assert!(h(2, &[&[0, 1]]).degree(2).is_err());
}

#[test]
fn min_degree_examples() {
    assert_eq!(h(3, &[&[0, 1], &[1, 2]]).min_degree().unwrap(), 1);
    // z (vertex 8) lies in the two triangles only
    let fig1 = generators::fig1_disjoint_cuts();
    let counted: Vec<usize> = (0..9)
        .map(|v| fig1.edges().iter().filter(|e| e.contains(v)).count())
        .collect();
    assert_eq!(counted[8], 2);
    assert_eq!(fig1.min_degree().unwrap(), *counted.iter().min().unwrap());
    assert_eq!(fig1.min_degree().unwrap(), 2);
    assert_eq!(h(3, &[&[0, 1]]).min_degree().unwrap(), 0);
    assert_eq!(Hypergraph::empty(0).min_degree(), Err(Error::NullHypergraph));
}

#[test]
fn normalize_examples() {
    let g = h(3, &[&[0, 0, 1], &[0, 1], &[2]]);
    assert_eq!(g.normalize(), h(3, &[&[0, 1]]));
    let p = h(3, &[&[0, 1], &[1, 2]]);
    assert_eq!(p.normalize(), p);
    assert_eq!(Hypergraph::empty(0).normalize(), Hypergraph::empty(0));
}

#[test]
fn simplicity() {
    assert!(h(3, &[&[0, 1], &[1, 2]]).is_simple());
    assert!(!h(2, &[&[0, 0, 1]]).is_simple());
    assert!(!h(2, &[&[0, 1], &[0, 1]]).is_simple());
}

#[test]
fn incidence_matrix_examples() {
    assert_eq!(h(2, &[&[0, 1]]).incidence_matrix().to_rows(), vec![vec![1], vec![1]]);
    assert_eq!(h(2, &[&[0, 0, 1]]).incidence_matrix().to_rows(), vec![vec![2], vec![1]]);
    let empty = Hypergraph::empty(2).incidence_matrix();
    assert_eq!((empty.rows(), empty.cols()), (2, 0));
}

#[test]
fn fig1_two_section() {
    let g = two_section(&generators::fig1_disjoint_cuts());
    let mut expected: Vec<(usize, usize)> = Vec::new();
    for base in [0, 4] {
        for a in base..base + 4 {
            for b in a + 1..base + 4 {
                expected.push((a, b));
            }
        }
    }
    expected.extend([(0, 4), (0, 8), (4, 8), (1, 5), (1, 8), (5, 8)]);
    expected.sort();
    assert_eq!(g.edges(), expected.as_slice());
    assert!(g.is_simple());
}

#[test]
fn incidence_graph_shapes() {
    let ig = incidence_graph(&h(3, &[&[0, 1], &[1, 2]]));
    // a–e0–b–e1–c
    let adj = ig.adjacency();
    assert_eq!(adj[3], vec![0, 1]);
    assert_eq!(adj[4], vec![1, 2]);
    let double = incidence_graph(&h(1, &[&[0, 0]]));
    assert_eq!(double.multiplicity(0, 0), 2);
}

#[test]
fn deletion_examples() {
    let r = weak_delete_vertices(&h(3, &[&[0, 1, 2]]), &[1]).unwrap();
    assert_eq!(r.hypergraph, h(2, &[&[0, 1]]));

    let fig1 = generators::fig1_disjoint_cuts();
    let r = weak_delete_vertices(&fig1, &[0, 1]).unwrap();
    let groups: Vec<Vec<usize>> = components(&r.hypergraph)
        .groups()
        .into_iter()
        .map(|g| g.into_iter().map(|v| r.surviving_vertices()[v]).collect())
        .collect();
    assert_eq!(groups, vec![vec![2, 3], vec![4, 5, 6, 7, 8]]);

    let r = strong_delete_edges(&h(3, &[&[0, 1], &[1, 2]]), &[0]).unwrap();
    assert_eq!(r.surviving_vertices(), vec![2]);
    assert_eq!(r.hypergraph.edges()[0].to_vertex_list(), vec![0]);
}

#[test]
fn path_and_component_examples() {
    assert_eq!(components(&h(4, &[&[0, 1], &[2, 3]])).count, 2);
    assert!(is_connected(&generators::fano_doubled()));
    assert_eq!(find_path(&h(3, &[&[0, 1]]), 0, 2).unwrap(), None);
}

fn two_section_components(g: &Graph) -> usize {
    g.component_labels().1
}

/// Articulation points of the 2-section by removing each vertex in turn.
fn two_section_cut_vertices(h: &Hypergraph) -> Vec<usize> {
    let g = two_section(h);
    let before = two_section_components(&g);
    (0..h.vertex_count())
        .filter(|&v| {
            let alive: Vec<bool> = (0..h.vertex_count()).map(|w| w != v).collect();
            let edges: Vec<Vec<usize>> = g
                .edges()
                .iter()
                .filter(|(a, b)| a != b)
                .map(|&(a, b)| vec![a, b])
                .collect();
            common::component_count(&alive, &edges) > before
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn degree_sum_equals_size_sum(g in arb_hypergraph(8, 8, 5)) {
        let degrees: usize = g.degrees().iter().sum();
        let sizes: usize = g.edges().iter().map(Edge::size).sum();
        prop_assert_eq!(degrees, sizes);
        prop_assert_eq!(incidence_graph(&g).total_multiplicity(), sizes);
    }

    #[test]
    fn normalize_is_idempotent(g in arb_hypergraph(8, 8, 5)) {
        let once = g.normalize();
        prop_assert_eq!(once.normalize(), once.clone());
        prop_assert_eq!(once.vertex_count(), g.vertex_count());
        prop_assert!(once.is_simple());
    }

    #[test]
    fn dual_transposes_the_incidence_matrix(g in arb_hypergraph(7, 7, 5)) {
        prop_assert_eq!(dual(&g).incidence_matrix(), g.incidence_matrix().transpose());
    }

    #[test]
    fn two_section_ignores_normalization(g in arb_hypergraph(7, 8, 5)) {
        let strip = |x: Graph| -> Vec<(usize, usize)> {
            x.edges().iter().copied().filter(|(a, b)| a != b).collect()
        };
        prop_assert_eq!(strip(two_section(&g)), strip(two_section(&g.normalize())));
    }

    #[test]
    fn connectivity_matches_two_section(g in arb_hypergraph(8, 8, 4)) {
        let labels = components(&g);
        let section = two_section(&g);
        let (glabels, gcount) = section.component_labels();
        prop_assert_eq!(labels.count, gcount);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                prop_assert_eq!(labels.same_component(u, v), glabels[u] == glabels[v]);
            }
        }
    }

    #[test]
    fn paths_are_valid_and_shortest_paths_exist_iff_connected(g in arb_hypergraph(7, 7, 4)) {
        let labels = components(&g);
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                let p = find_path(&g, u, v).unwrap();
                prop_assert_eq!(p.is_some(), labels.same_component(u, v));
                if let Some(p) = p {
                    prop_assert!(p.is_valid_in(&g));
                    prop_assert_eq!((p.vertices[0], *p.vertices.last().unwrap()), (u, v));
                }
            }
        }
    }

    #[test]
    fn weak_cut_vertices_are_two_section_articulation_points(g in arb_hypergraph(8, 8, 4)) {
        prop_assert_eq!(weak_cut_vertices(&g), two_section_cut_vertices(&g));
    }

    #[test]
    fn strong_cut_vertices_follow_the_definition(g in arb_hypergraph(7, 7, 4)) {
        let before = common::component_count(&vec![true; g.vertex_count()], &common::supports(&g));
        let expected: Vec<usize> = (0..g.vertex_count())
            .filter(|&v| {
                let alive: Vec<bool> = (0..g.vertex_count()).map(|w| w != v).collect();
                let rest: Vec<Vec<usize>> = common::supports(&g)
                    .into_iter()
                    .filter(|e| !e.contains(&v))
                    .collect();
                common::component_count(&alive, &rest) > before
            })
            .collect();
        prop_assert_eq!(strong_cut_vertices(&g), expected);
    }

    #[test]
    fn strong_deletion_keeps_only_untouched_edges(
        g in arb_hypergraph(7, 7, 4),
        xs in proptest::collection::btree_set(0usize..7, 0..4),
    ) {
        let xs: Vec<usize> = xs.into_iter().filter(|&x| x < g.vertex_count()).collect();
        let strong = strong_delete_vertices(&g, &xs).unwrap();
        let weak = weak_delete_vertices(&g, &xs).unwrap();
        prop_assert_eq!(strong.hypergraph.vertex_count(), weak.hypergraph.vertex_count());
        for (old, new) in strong.edge_map.iter().enumerate() {
            if let Some(new) = new {
                prop_assert!(xs.iter().all(|x| !g.edges()[old].contains(*x)));
                let in_weak = weak.edge_map[old].unwrap();
                prop_assert_eq!(&strong.hypergraph.edges()[*new], &weak.hypergraph.edges()[in_weak]);
            } else {
                prop_assert!(xs.iter().any(|x| g.edges()[old].contains(*x)));
            }
        }
    }

    #[test]
    fn deletion_is_order_independent(
        g in arb_hypergraph(7, 7, 4),
        xs in proptest::collection::btree_set(0usize..7, 0..4),
    ) {
        let xs: Vec<usize> = xs.into_iter().filter(|&x| x < g.vertex_count()).collect();
        for op in [weak_delete_vertices, strong_delete_vertices] {
            let all_at_once = op(&g, &xs).unwrap();
            let mut stepwise: Option<DeletionResult> = None;
            for &x in xs.iter().rev() {
                let current = stepwise.as_ref().map_or(g.clone(), |r| r.hypergraph.clone());
                let local = stepwise.as_ref().map_or(Some(x), |r| r.vertex_map[x]).unwrap();
                let step = op(&current, &[local]).unwrap();
                stepwise = Some(match stepwise {
                    None => step,
                    Some(prev) => prev.then(step),
                });
            }
            if let Some(s) = stepwise {
                prop_assert_eq!(s.hypergraph, all_at_once.hypergraph);
                prop_assert_eq!(s.vertex_map, all_at_once.vertex_map);
                prop_assert_eq!(s.edge_map, all_at_once.edge_map);
            }
        }
    }

    #[test]
    fn deleting_a_transversal_strongly_leaves_no_nonempty_edges(g in arb_hypergraph(8, 8, 4)) {
        let t = tau(&g);
        let r = strong_delete_vertices(&g, &t.witness).unwrap();
        prop_assert!(r.hypergraph.edges().iter().all(Edge::is_empty));
    }

    #[test]
    fn vertex_connectivity_ignores_normalization(g in arb_hypergraph(7, 7, 4)) {
        let norm = g.normalize();
        prop_assert_eq!(kappa_w(&g).unwrap().value, kappa_w(&norm).unwrap().value);
        prop_assert_eq!(kappa_s(&g).unwrap().value, kappa_s(&norm).unwrap().value);
        prop_assert_eq!(common::kappa_s(&g), common::kappa_s(&norm));
        prop_assert_eq!(common::kappa_w(&g), common::kappa_w(&norm));
        prop_assert_eq!(weak_cut_vertices(&g), weak_cut_vertices(&norm));
        prop_assert_eq!(strong_cut_vertices(&g), strong_cut_vertices(&norm));
    }

    #[test]
    fn edge_connectivity_ignores_normalization_without_parallel_edges(g in arb_hypergraph(7, 7, 4)) {
        let supports: Vec<Vec<usize>> = common::supports(&g)
            .into_iter()
            .filter(|s| s.len() >= 2)
            .collect();
        let mut dedup = supports.clone();
        dedup.sort();
        dedup.dedup();
        prop_assume!(dedup.len() == supports.len());
        prop_assert_eq!(kappa_w_edge(&g).unwrap().value, kappa_w_edge(&g.normalize()).unwrap().value);
    }
}
