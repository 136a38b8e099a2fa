//! Structures derived from a hypergraph: the dual, the 2-section and the
//! incidence graph.

use std::collections::BTreeSet;

use crate::bits::{self, Mask};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgeId, Hypergraph, VertexId};

/// An undirected graph on `0..n`. Loops are allowed and flagged.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Graph {
    /// Stores each pair as `(min, max)`; endpoints must be below `n`.
    pub fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let mut stored = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            stored.push((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: stored })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_loop(&self, i: usize) -> bool {
        let (a, b) = self.edges[i];
        a == b
    }

    /// No loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(a, b)| a != b && seen.insert((a, b)))
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Sorted neighbour lists, loops and repeats removed.
    pub fn neighbors(&self) -> Vec<Vec<VertexId>> {
        let mut adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); self.n];
        for &(a, b) in &self.edges {
            if a != b {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj.into_iter().map(|s| s.into_iter().collect()).collect()
    }

    /// The graph viewed as a 2-uniform hypergraph (loops become `[v, v]`).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|&(a, b)| Edge::from_vertices([a, b]))
            .collect();
        Hypergraph::new(self.n, edges).expect("graph endpoints are in range")
    }

    /// Component label per vertex, labels numbered in order of first vertex.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let adj = self.neighbors();
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.component_labels().1 <= 1
    }

    /// Vertex connectivity `κ(G)` by exhaustive search over vertex subsets in
    /// increasing size, ignoring loops: 1 for null or trivial graphs, 0 when
    /// disconnected, `n − 1` when no vertex cut exists.
    pub fn vertex_connectivity(&self) -> Result<usize> {
        if self.n <= 1 {
            return Ok(1);
        }
        if self.n > bits::MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertices",
                limit: bits::MAX_VERTICES,
                got: self.n,
            });
        }
        let adj: Vec<Mask> = self
            .neighbors()
            .iter()
            .map(|ns| bits::mask_of(ns))
            .collect();
        let connected_after = |removed: Mask| -> bool {
            let alive = bits::full(self.n) & !removed;
            if alive.count_ones() <= 1 {
                return true;
            }
            let start = alive.trailing_zeros() as usize;
            let mut seen = bits::bit(start);
            let mut frontier = seen;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = adj[v] & alive & !seen;
                seen |= fresh;
                frontier |= fresh;
            }
            seen == alive
        };
        if !connected_after(0) {
            return Ok(0);
        }
        use itertools::Itertools;
        for k in 1..self.n.saturating_sub(1) {
            for subset in (0..self.n).combinations(k) {
                if !connected_after(bits::mask_of(&subset)) {
                    return Ok(k);
                }
            }
        }
        Ok(self.n - 1)
    }
}

/// The bipartite vertex–edge incidence graph. Left nodes are the hypergraph
/// vertices, right nodes the edge ids; each link carries `m_e(v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteIncidenceGraph {
    vertex_count: usize,
    edge_count: usize,
    links: Vec<(VertexId, EdgeId, usize)>,
}

impl BipartiteIncidenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// `(vertex, edge, multiplicity)` triples.
    pub fn links(&self) -> &[(VertexId, EdgeId, usize)] {
        &self.links
    }

    pub fn multiplicity(&self, v: VertexId, e: EdgeId) -> usize {
        self.links
            .iter()
            .find(|&&(a, b, _)| a == v && b == e)
            .map_or(0, |&(_, _, m)| m)
    }

    /// Sum of all link multiplicities.
    pub fn total_multiplicity(&self) -> usize {
        self.links.iter().map(|&(_, _, m)| m).sum()
    }

    /// Adjacency over `vertex_count + edge_count` nodes: vertex `v` is node
    /// `v`, edge `e` is node `vertex_count + e`. Multiplicities collapse.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count + self.edge_count];
        for &(v, e, _) in &self.links {
            adj[v].push(self.vertex_count + e);
            adj[self.vertex_count + e].push(v);
        }
        adj
    }
}

/// Hypergraph whose incidence matrix is the transpose of `h`'s: one vertex
/// per edge of `h`, one edge per vertex of `h`. Empty edges of `h` become
/// isolated vertices.
pub fn dual(h: &Hypergraph) -> Hypergraph {
    let mut edges = vec![Vec::new(); h.vertex_count()];
    for (i, e) in h.edges().iter().enumerate() {
        for (v, m) in e.iter() {
            edges[v].push((i, m));
        }
    }
    let edges = edges.into_iter().map(Edge::from_multiplicities).collect();
    Hypergraph::new(h.edge_count(), edges).expect("edge ids are in range")
}

/// `[H]₂`: `{v, w}` is an edge when some hyperedge contains both, and a loop
/// sits at `v` when some hyperedge has `m_e(v) ≥ 2`. No parallel edges.
pub fn two_section(h: &Hypergraph) -> Graph {
    let mut pairs = BTreeSet::new();
    for e in h.edges() {
        let support: Vec<_> = e.iter().collect();
        for (i, &(a, ma)) in support.iter().enumerate() {
            if ma >= 2 {
                pairs.insert((a, a));
            }
            for &(b, _) in &support[i + 1..] {
                pairs.insert((a, b));
            }
        }
    }
    Graph {
        n: h.vertex_count(),
        edges: pairs.into_iter().collect(),
    }
}

pub fn incidence_graph(h: &Hypergraph) -> BipartiteIncidenceGraph {
    let links = h
        .edges()
        .iter()
        .enumerate()
        .flat_map(|(i, e)| e.iter().map(move |(v, m)| (v, i, m)))
        .collect();
    BipartiteIncidenceGraph {
        vertex_count: h.vertex_count(),
        edge_count: h.edge_count(),
        links,
    }
}
