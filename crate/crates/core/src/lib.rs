//! Weak and strong connectivity of hypergraphs.
//!
//! Hypergraphs here allow repeated vertices inside an edge, parallel edges,
//! empty edges and single-vertex edges. Vertices can be deleted *weakly*
//! (the vertex is removed from the edges that contain it) or *strongly*
//! (the edges containing it go too), and likewise for edges. Each kind of
//! deletion gives its own connectivity number:
//!
//! | value | computed by |
//! |-------|-------------|
//! | `κ_W` | [`kappa_w`], max-flow on a vertex-split network |
//! | `κ'_W` | [`kappa_w_edge`], max-flow on an edge-split network |
//! | `κ_S` | [`kappa_s`], fast paths or subset enumeration |
//! | `κ'_S` | [`kappa_s_edge`], subset enumeration |
//!
//! ```
//! use hyperconn::{generators, kappa_s, kappa_w};
//!
//! let h = generators::fig1_disjoint_cuts();
//! assert_eq!(kappa_s(&h)?.witness, vec![8]);
//! assert_eq!(kappa_w(&h)?.value, 2);
//! # Ok::<(), hyperconn::Error>(())
//! ```

mod bits;
pub mod budget;
pub mod classes;
pub mod connectivity;
pub mod deletion;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod strongcut;
pub mod transforms;
pub mod transversal;
pub mod weakflow;

pub use budget::Budgets;
pub use classes::{
    classify, find_representative_tree, is_bicolourable, is_helly, is_interval,
    is_totally_balanced, verify_representative_tree, ClassReport, ClassVerdict, ClassWitness,
    RepresentativeTree, Verdict,
};
pub use connectivity::{
    components, find_path, is_connected, strong_cut_vertices, weak_cut_vertices,
    ComponentLabeling, HyperPath,
};
pub use deletion::{
    induced_strong_subhypergraph, strong_delete_edges, strong_delete_vertices,
    weak_delete_edges, weak_delete_vertices, DeletionResult,
};
pub use error::{Error, Result};
pub use hypergraph::{Edge, EdgeId, Hypergraph, IncidenceMatrix, VertexId};
pub use strongcut::{
    kappa_s, kappa_s_edge, kappa_s_edge_pair, kappa_s_pair, kappa_s_with,
    minimum_strong_vertex_cuts, path_support_hypergraph, KappaSOptions, Method, StrongCutResult,
};
pub use transforms::{dual, incidence_graph, two_section, BipartiteIncidenceGraph, Graph};
pub use transversal::{alpha, greedy_transversal, has_konig, tau, MatchingResult, TransversalResult};
pub use weakflow::{
    boundary, kappa_w, kappa_w_edge, kappa_w_edge_pair, kappa_w_pair, CutResult, PairStrategy,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/model.md")]
    struct Model;
    #[doc = include_str!("../../../book/src/weak.md")]
    struct Weak;
    #[doc = include_str!("../../../book/src/strong.md")]
    struct Strong;
    #[doc = include_str!("../../../book/src/classes.md")]
    struct Classes;
    #[doc = include_str!("../../../book/src/generators.md")]
    struct Generators;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}
