//! Weak vertex and edge connectivity through max-flow.
//!
//! A minimum weak `(u, v)`-vertex cut is read off a minimum cut of the
//! vertex-split network ([`build_vertex_split_network`]); a minimum weak
//! `(u, v)`-disconnecting edge set is read off the edge-split network
//! ([`build_edge_split_network`]). The global values are minima over pairs.

mod network;

pub use network::{
    build_edge_split_network, build_vertex_split_network, max_flow_min_cut, Arc, FlowNetwork,
    MaxFlow, NodeKind,
};

use crate::connectivity::{components, is_connected};
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::transforms::two_section;

/// Optimal cut size plus a witness.
///
/// `attained` is false when `value` is a convention value rather than the
/// size of an actual cut (null/trivial inputs, or pairs that no cut can
/// separate); the witness is then empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub attained: bool,
}

impl CutResult {
    pub(crate) fn convention(value: usize) -> Self {
        CutResult {
            value,
            witness: Vec::new(),
            attained: false,
        }
    }

    pub(crate) fn cut(mut witness: Vec<usize>) -> Self {
        witness.sort_unstable();
        CutResult {
            value: witness.len(),
            witness,
            attained: true,
        }
    }
}

/// Which vertex pairs the global minimum ranges over.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairStrategy {
    /// Reduced pair set: a fixed vertex against every other vertex, plus
    /// the pairs needed when the fixed vertex belongs to every minimum cut.
    #[default]
    Reduced,
    /// Every unordered pair.
    AllPairs,
}

/// `κ_W(H, u, v)`: minimum number of vertices (other than `u`, `v`) whose
/// weak deletion separates `u` from `v`. When `u` and `v` share an edge no
/// such set exists and the value is `|V| − 1` with `attained = false`.
pub fn kappa_w_pair(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<CutResult> {
    let norm = h.normalize();
    let net = build_vertex_split_network(&norm, u, v)?;
    let flow = max_flow_min_cut(&net);
    if flow.is_infinite() {
        return Ok(CutResult::convention(h.vertex_count() - 1));
    }
    let witness: Vec<VertexId> = norm
        .vertices()
        .filter(|&w| w != u && w != v)
        .filter(|&w| {
            let a = net.node_index(NodeKind::VertexIn(w)).expect("split vertex");
            let b = net.node_index(NodeKind::VertexOut(w)).expect("split vertex");
            flow.source_side[a] && !flow.source_side[b]
        })
        .collect();
    debug_assert_eq!(witness.len() as u64, flow.value);
    Ok(CutResult::cut(witness))
}

/// `κ_W(H)` with the default pair strategy.
pub fn kappa_w(h: &Hypergraph) -> Result<CutResult> {
    kappa_w_with(h, PairStrategy::Reduced)
}

/// `κ_W(H)`: 1 for null or trivial inputs, 0 (empty witness) when
/// disconnected, otherwise the smallest pairwise value, or `|V| − 1` when
/// every pair shares an edge.
pub fn kappa_w_with(h: &Hypergraph, strategy: PairStrategy) -> Result<CutResult> {
    let n = h.vertex_count();
    if n <= 1 {
        return Ok(CutResult::convention(1));
    }
    if !is_connected(h) {
        return Ok(CutResult::cut(Vec::new()));
    }
    let norm = h.normalize();
    let section = two_section(&norm);
    let adj = section.neighbors();
    let pairs: Vec<(VertexId, VertexId)> = match strategy {
        PairStrategy::AllPairs => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect(),
        PairStrategy::Reduced => {
            // A minimum cut either misses the lowest-degree vertex `u`, and
            // then separates it from someone, or contains it, and then it
            // separates two neighbours of `u`.
            let u = (0..n).min_by_key(|&w| (adj[w].len(), w)).expect("n >= 2");
            let mut pairs: Vec<_> = (0..n).filter(|&w| w != u).map(|w| (u, w)).collect();
            let nbrs = &adj[u];
            for (i, &a) in nbrs.iter().enumerate() {
                for &b in &nbrs[i + 1..] {
                    pairs.push((a, b));
                }
            }
            pairs
        }
    };
    let mut best: Option<CutResult> = None;
    for (a, b) in pairs {
        if section.has_edge(a, b) {
            continue;
        }
        let r = kappa_w_pair(&norm, a, b)?;
        if r.attained && best.as_ref().is_none_or(|cur| r.value < cur.value) {
            best = Some(r);
        }
    }
    let result = best.unwrap_or_else(|| CutResult::convention(n - 1));
    #[cfg(debug_assertions)]
    if n <= 12 {
        debug_assert_eq!(
            Ok(result.value),
            section.vertex_connectivity(),
            "flow route disagrees with the 2-section on {h}"
        );
    }
    Ok(result)
}

/// `∂(X)`: ids of the edges meeting both `X` and `V ∖ X`.
pub fn boundary(h: &Hypergraph, xs: &[VertexId]) -> Result<Vec<EdgeId>> {
    let mut inside = vec![false; h.vertex_count()];
    for &x in xs {
        h.check_vertex(x)?;
        inside[x] = true;
    }
    let count = inside.iter().filter(|&&b| b).count();
    if count == 0 || count == h.vertex_count() {
        return Err(Error::InvalidVertexSet(
            "boundary needs a nonempty proper vertex subset".into(),
        ));
    }
    Ok(h.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.support().any(|v| inside[v]) && e.support().any(|v| !inside[v]))
        .map(|(i, _)| i)
        .collect())
}

/// `κ'_W(H, u, v)`: minimum number of edges whose weak deletion separates
/// `u` from `v`. Always attained; parallel edges count separately.
pub fn kappa_w_edge_pair(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<CutResult> {
    let net = build_edge_split_network(h, u, v)?;
    let flow = max_flow_min_cut(&net);
    debug_assert!(!flow.is_infinite(), "every path crosses a unit arc");
    let n = h.vertex_count();
    let witness: Vec<EdgeId> = (0..h.edge_count())
        .filter(|&e| flow.source_side[n + 2 * e] && !flow.source_side[n + 2 * e + 1])
        .collect();
    debug_assert_eq!(witness.len() as u64, flow.value);
    Ok(CutResult::cut(witness))
}

/// `κ'_W(H)` with the default pair strategy.
pub fn kappa_w_edge(h: &Hypergraph) -> Result<CutResult> {
    kappa_w_edge_with(h, PairStrategy::Reduced)
}

/// `κ'_W(H)`: 1 for null or trivial inputs, 0 when disconnected, otherwise
/// the minimum over pairs. Any disconnecting edge set separates vertex 0
/// from some other vertex, so the reduced strategy only pairs vertex 0.
pub fn kappa_w_edge_with(h: &Hypergraph, strategy: PairStrategy) -> Result<CutResult> {
    let n = h.vertex_count();
    if n <= 1 {
        return Ok(CutResult::convention(1));
    }
    if components(h).count > 1 {
        return Ok(CutResult::cut(Vec::new()));
    }
    let pairs: Vec<(VertexId, VertexId)> = match strategy {
        PairStrategy::Reduced => (1..n).map(|b| (0, b)).collect(),
        PairStrategy::AllPairs => (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect(),
    };
    let mut best: Option<CutResult> = None;
    for (a, b) in pairs {
        let r = kappa_w_edge_pair(h, a, b)?;
        if best.as_ref().is_none_or(|cur| r.value < cur.value) {
            best = Some(r);
        }
    }
    Ok(best.expect("at least one pair"))
}
