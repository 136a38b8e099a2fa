//! Paths, connected components and cut vertices.

use std::collections::VecDeque;

use crate::deletion::strong_delete_vertices;
use crate::error::Result;
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::transforms::incidence_graph;

/// Component id per vertex plus the component count `c(H)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ComponentLabeling {
    /// Vertices of each component, components ordered by smallest vertex.
    pub fn groups(&self) -> Vec<Vec<VertexId>> {
        let mut groups = vec![Vec::new(); self.count];
        for (v, &l) in self.labels.iter().enumerate() {
            groups[l].push(v);
        }
        groups
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.groups().iter().map(Vec::len).collect();
        sizes.sort_unstable();
        sizes
    }

    pub fn same_component(&self, u: VertexId, v: VertexId) -> bool {
        self.labels[u] == self.labels[v]
    }
}

/// Labels components by breadth-first search over the incidence structure
/// (vertex → incident edges → their members). Empty edges are ignored and
/// every isolated vertex is its own component.
pub fn components(h: &Hypergraph) -> ComponentLabeling {
    let incident = h.incidence_lists();
    let mut labels = vec![usize::MAX; h.vertex_count()];
    let mut edge_done = vec![false; h.edge_count()];
    let mut count = 0;
    for s in h.vertices() {
        if labels[s] != usize::MAX {
            continue;
        }
        labels[s] = count;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &e in &incident[x] {
                if edge_done[e] {
                    continue;
                }
                edge_done[e] = true;
                for y in h.edges()[e].support() {
                    if labels[y] == usize::MAX {
                        labels[y] = count;
                        queue.push_back(y);
                    }
                }
            }
        }
        count += 1;
    }
    ComponentLabeling { labels, count }
}

/// Null and trivial hypergraphs count as connected.
pub fn is_connected(h: &Hypergraph) -> bool {
    components(h).count <= 1
}

/// An alternating vertex/edge sequence `v_1, e_1, …, e_s, v_{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl HyperPath {
    /// Number of edges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Checks the path conditions against `h`: consecutive vertices lie in
    /// the connecting edge (as a multiset), vertices are pairwise distinct
    /// and edges are pairwise distinct.
    pub fn is_valid_in(&self, h: &Hypergraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= h.vertex_count())
            || self.edges.iter().any(|&e| e >= h.edge_count())
        {
            return false;
        }
        let distinct = |xs: &[usize]| {
            let mut s = xs.to_vec();
            s.sort_unstable();
            s.windows(2).all(|w| w[0] != w[1])
        };
        if !distinct(&self.vertices) || !distinct(&self.edges) {
            return false;
        }
        self.edges.iter().enumerate().all(|(j, &e)| {
            let edge = &h.edges()[e];
            let (a, b) = (self.vertices[j], self.vertices[j + 1]);
            if a == b {
                edge.multiplicity(a) >= 2
            } else {
                edge.contains(a) && edge.contains(b)
            }
        })
    }
}

/// A shortest `(u, v)`-path, or `None` when `u` and `v` are separated.
/// `find_path(h, u, u)` is the zero-length path.
pub fn find_path(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<Option<HyperPath>> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if u == v {
        return Ok(Some(HyperPath {
            vertices: vec![u],
            edges: vec![],
        }));
    }
    let incident = h.incidence_lists();
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; h.vertex_count()];
    let mut seen = vec![false; h.vertex_count()];
    let mut edge_done = vec![false; h.edge_count()];
    seen[u] = true;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &e in &incident[x] {
            if edge_done[e] {
                continue;
            }
            edge_done[e] = true;
            for y in h.edges()[e].support() {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, e));
                    if y == v {
                        let mut vertices = vec![v];
                        let mut edges = vec![];
                        let mut cur = v;
                        while let Some((p, pe)) = parent[cur] {
                            edges.push(pe);
                            vertices.push(p);
                            cur = p;
                        }
                        vertices.reverse();
                        edges.reverse();
                        return Ok(Some(HyperPath { vertices, edges }));
                    }
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(None)
}

/// Articulation points of an undirected graph given by adjacency lists
/// (iterative Tarjan low-link).
pub(crate) fn articulation_points(adj: &[Vec<usize>]) -> Vec<bool> {
    let n = adj.len();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut clock = 0;
    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = clock;
        low[root] = clock;
        clock += 1;
        let mut root_children = 0;
        // (node, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(top) = stack.last_mut() {
            let (x, parent, idx) = *top;
            if idx < adj[x].len() {
                top.2 += 1;
                let y = adj[x][idx];
                if y == parent {
                    continue;
                }
                if order[y] == usize::MAX {
                    order[y] = clock;
                    low[y] = clock;
                    clock += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, x, 0));
                } else {
                    low[x] = low[x].min(order[y]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[x]);
                    if parent != root && low[x] >= order[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        is_cut[root] = root_children >= 2;
    }
    is_cut
}

/// Vertices whose weak deletion increases the number of components.
///
/// Computed as the articulation points of the incidence graph that lie on
/// the vertex side. The input is normalized first, since edges with fewer
/// than two distinct vertices would otherwise create spurious articulation
/// points.
pub fn weak_cut_vertices(h: &Hypergraph) -> Vec<VertexId> {
    let norm = h.normalize();
    let adj = incidence_graph(&norm).adjacency();
    let cut = articulation_points(&adj);
    norm.vertices().filter(|&v| cut[v]).collect()
}

/// Vertices `v` with `c(H ∖_S v) > c(H)`, tested one vertex at a time.
pub fn strong_cut_vertices(h: &Hypergraph) -> Vec<VertexId> {
    let before = components(h).count;
    h.vertices()
        .filter(|&v| {
            let after = strong_delete_vertices(h, &[v]).expect("vertex in range");
            components(&after.hypergraph).count > before
        })
        .collect()
}
