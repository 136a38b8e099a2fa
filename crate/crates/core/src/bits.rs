//! Bitmask views of small hypergraphs for the exhaustive searches.
//!
//! Vertex sets are `u128` masks, so these helpers only apply to hypergraphs
//! with at most 128 vertices.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, VertexId};

pub(crate) type Mask = u128;

pub(crate) const MAX_VERTICES: usize = 128;

#[inline]
pub(crate) fn bit(v: VertexId) -> Mask {
    1u128 << v
}

pub(crate) fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub(crate) fn mask_of(vertices: &[VertexId]) -> Mask {
    vertices.iter().fold(0, |m, &v| m | bit(v))
}

pub(crate) fn members(mut mask: Mask) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        out.push(v);
        mask &= mask - 1;
    }
    out
}

/// Support masks of every edge, in edge order.
#[derive(Clone, Debug)]
pub(crate) struct MaskedHypergraph {
    pub n: usize,
    pub supports: Vec<Mask>,
}

impl MaskedHypergraph {
    pub(crate) fn new(h: &Hypergraph) -> Result<Self> {
        if h.vertex_count() > MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertices",
                limit: MAX_VERTICES,
                got: h.vertex_count(),
            });
        }
        Ok(MaskedHypergraph {
            n: h.vertex_count(),
            supports: h
                .edges()
                .iter()
                .map(|e| e.support().fold(0, |m, v| m | bit(v)))
                .collect(),
        })
    }

    pub(crate) fn all(&self) -> Mask {
        full(self.n)
    }

    /// Surviving vertices and edge supports after strongly deleting `x`.
    pub(crate) fn strong_vertex_deletion(&self, x: Mask) -> (Mask, Vec<Mask>) {
        let alive = self.all() & !x;
        let edges = self
            .supports
            .iter()
            .copied()
            .filter(|s| s & x == 0)
            .collect();
        (alive, edges)
    }

    /// Surviving vertices and edge supports after strongly deleting the edges
    /// listed in `removed`.
    pub(crate) fn strong_edge_deletion(&self, removed: &[usize]) -> (Mask, Vec<Mask>) {
        let gone = removed.iter().fold(0, |m, &e| m | self.supports[e]);
        let alive = self.all() & !gone;
        let edges = self
            .supports
            .iter()
            .enumerate()
            .filter(|(i, _)| !removed.contains(i))
            .map(|(_, s)| s & alive)
            .collect();
        (alive, edges)
    }
}

/// Vertices of `alive` reachable from `start` through `edges` (each given as
/// a support mask contained in `alive`).
pub(crate) fn reach(start: VertexId, edges: &[Mask]) -> Mask {
    let mut reached = bit(start);
    loop {
        let mut grown = reached;
        for &s in edges {
            if s & grown != 0 {
                grown |= s;
            }
        }
        if grown == reached {
            return reached;
        }
        reached = grown;
    }
}

/// Connectivity of the vertex set `alive`; sets with at most one vertex are
/// connected.
pub(crate) fn is_connected(alive: Mask, edges: &[Mask]) -> bool {
    if alive.count_ones() <= 1 {
        return true;
    }
    let start = alive.trailing_zeros() as usize;
    reach(start, edges) & alive == alive
}
