//! Weak and strong deletion of vertices and edges.
//!
//! Every operator returns a [`DeletionResult`] holding the new hypergraph
//! together with maps from old ids to new ids, so witnesses computed on the
//! result can be reported in the caller's numbering.

use crate::error::Result;
use crate::hypergraph::{Edge, EdgeId, Hypergraph, VertexId};

/// A hypergraph obtained by deletion, with id bookkeeping.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionResult {
    pub hypergraph: Hypergraph,
    /// `vertex_map[old]` is the new id, or `None` when deleted.
    pub vertex_map: Vec<Option<VertexId>>,
    /// `edge_map[old]` is the new id, or `None` when deleted.
    pub edge_map: Vec<Option<EdgeId>>,
}

impl DeletionResult {
    fn identity(h: &Hypergraph) -> Self {
        DeletionResult {
            hypergraph: h.clone(),
            vertex_map: (0..h.vertex_count()).map(Some).collect(),
            edge_map: (0..h.edge_count()).map(Some).collect(),
        }
    }

    /// Applies `next` (a deletion performed on `self.hypergraph`) after
    /// `self`, composing the id maps.
    pub fn then(self, next: DeletionResult) -> DeletionResult {
        let vertex_map = self
            .vertex_map
            .iter()
            .map(|m| m.and_then(|v| next.vertex_map[v]))
            .collect();
        let edge_map = self
            .edge_map
            .iter()
            .map(|m| m.and_then(|e| next.edge_map[e]))
            .collect();
        DeletionResult {
            hypergraph: next.hypergraph,
            vertex_map,
            edge_map,
        }
    }

    /// Old vertex ids indexed by new id.
    pub fn surviving_vertices(&self) -> Vec<VertexId> {
        invert(&self.vertex_map, self.hypergraph.vertex_count())
    }

    /// Old edge ids indexed by new id.
    pub fn surviving_edges(&self) -> Vec<EdgeId> {
        invert(&self.edge_map, self.hypergraph.edge_count())
    }
}

fn invert(map: &[Option<usize>], len: usize) -> Vec<usize> {
    let mut out = vec![usize::MAX; len];
    for (old, new) in map.iter().enumerate() {
        if let Some(new) = new {
            out[*new] = old;
        }
    }
    out
}

fn vertex_flags(h: &Hypergraph, xs: &[VertexId]) -> Result<Vec<bool>> {
    let mut flags = vec![false; h.vertex_count()];
    for &x in xs {
        h.check_vertex(x)?;
        flags[x] = true;
    }
    Ok(flags)
}

fn edge_flags(h: &Hypergraph, fs: &[EdgeId]) -> Result<Vec<bool>> {
    let mut flags = vec![false; h.edge_count()];
    for &f in fs {
        h.check_edge(f)?;
        flags[f] = true;
    }
    Ok(flags)
}

/// Renumbers the surviving vertices densely and keeps the selected edges,
/// stripping deleted vertices out of them.
fn rebuild(h: &Hypergraph, deleted_vertex: &[bool], keep_edge: &[bool]) -> DeletionResult {
    let mut vertex_map = vec![None; h.vertex_count()];
    let mut next = 0;
    for v in h.vertices() {
        if !deleted_vertex[v] {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }
    let mut edge_map = vec![None; h.edge_count()];
    let mut edges = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if keep_edge[i] {
            edge_map[i] = Some(edges.len());
            edges.push(
                e.retain_vertices(|v| !deleted_vertex[v])
                    .map_vertices(|v| vertex_map[v].expect("kept vertex")),
            );
        }
    }
    DeletionResult {
        hypergraph: Hypergraph::new(next, edges).expect("renumbered ids are dense"),
        vertex_map,
        edge_map,
    }
}

/// `H ∖_W X`: removes the vertices of `X` and every occurrence of them from
/// the edges. Edges are kept even when they become empty.
pub fn weak_delete_vertices(h: &Hypergraph, xs: &[VertexId]) -> Result<DeletionResult> {
    let deleted = vertex_flags(h, xs)?;
    Ok(rebuild(h, &deleted, &vec![true; h.edge_count()]))
}

/// `H ∖_S X`: removes the vertices of `X` and every edge incident to one of
/// them.
pub fn strong_delete_vertices(h: &Hypergraph, xs: &[VertexId]) -> Result<DeletionResult> {
    let deleted = vertex_flags(h, xs)?;
    let keep: Vec<bool> = h
        .edges()
        .iter()
        .map(|e| !e.support().any(|v| deleted[v]))
        .collect();
    Ok(rebuild(h, &deleted, &keep))
}

/// `H ∖_W F`: removes the edges of `F`; the vertex set is untouched.
pub fn weak_delete_edges(h: &Hypergraph, fs: &[EdgeId]) -> Result<DeletionResult> {
    let gone = edge_flags(h, fs)?;
    if !gone.contains(&true) {
        return Ok(DeletionResult::identity(h));
    }
    let keep: Vec<bool> = gone.iter().map(|g| !g).collect();
    Ok(rebuild(h, &vec![false; h.vertex_count()], &keep))
}

/// `H ∖_S F`: removes the edges of `F`, then weakly deletes every vertex in
/// the support of a removed edge.
pub fn strong_delete_edges(h: &Hypergraph, fs: &[EdgeId]) -> Result<DeletionResult> {
    let gone = edge_flags(h, fs)?;
    let mut deleted = vec![false; h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        if gone[i] {
            for v in e.support() {
                deleted[v] = true;
            }
        }
    }
    let keep: Vec<bool> = gone.iter().map(|g| !g).collect();
    Ok(rebuild(h, &deleted, &keep))
}

/// The strong subhypergraph induced by a vertex set: keeps exactly the
/// edges whose support lies inside `keep`.
pub fn induced_strong_subhypergraph(h: &Hypergraph, keep: &[VertexId]) -> Result<DeletionResult> {
    let inside = vertex_flags(h, keep)?;
    let deleted: Vec<bool> = inside.iter().map(|b| !b).collect();
    let keep_edge: Vec<bool> = h
        .edges()
        .iter()
        .map(|e: &Edge| e.support().all(|v| inside[v]))
        .collect();
    Ok(rebuild(h, &deleted, &keep_edge))
}
