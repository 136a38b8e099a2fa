//! The hypergraph data model.
//!
//! A [`Hypergraph`] has a dense vertex range `0..n` and an ordered list of
//! edges. Each [`Edge`] is a multiset of vertices stored as a
//! vertex → multiplicity map, so repeated vertices inside an edge, parallel
//! edges, empty edges and single-vertex edges are all representable.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Dense 0-based vertex identifier.
pub type VertexId = usize;
/// Position of an edge in [`Hypergraph::edges`].
pub type EdgeId = usize;

/// A multiset of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    multiplicities: BTreeMap<VertexId, usize>,
}

impl Edge {
    /// The empty edge.
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds an edge from a list of vertices; repeated entries raise the
    /// multiplicity.
    pub fn from_vertices<I: IntoIterator<Item = VertexId>>(vertices: I) -> Self {
        let mut multiplicities = BTreeMap::new();
        for v in vertices {
            *multiplicities.entry(v).or_insert(0) += 1;
        }
        Edge { multiplicities }
    }

    /// Builds an edge from explicit multiplicities. Zero multiplicities are
    /// dropped.
    pub fn from_multiplicities<I: IntoIterator<Item = (VertexId, usize)>>(pairs: I) -> Self {
        let mut multiplicities = BTreeMap::new();
        for (v, m) in pairs {
            if m > 0 {
                *multiplicities.entry(v).or_insert(0) += m;
            }
        }
        Edge { multiplicities }
    }

    /// `m_e(v)`, zero when `v` is not in the edge.
    pub fn multiplicity(&self, v: VertexId) -> usize {
        self.multiplicities.get(&v).copied().unwrap_or(0)
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.multiplicities.contains_key(&v)
    }

    /// Number of elements counted with multiplicity.
    pub fn size(&self) -> usize {
        self.multiplicities.values().sum()
    }

    /// Number of distinct vertices.
    pub fn cardinality(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// Distinct vertices in increasing order.
    pub fn support(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.multiplicities.keys().copied()
    }

    /// `(vertex, multiplicity)` pairs in increasing vertex order.
    pub fn iter(&self) -> impl Iterator<Item = (VertexId, usize)> + '_ {
        self.multiplicities.iter().map(|(&v, &m)| (v, m))
    }

    /// All elements with repetition, sorted.
    pub fn to_vertex_list(&self) -> Vec<VertexId> {
        self.iter()
            .flat_map(|(v, m)| std::iter::repeat(v).take(m))
            .collect()
    }

    /// True when every multiplicity is 1.
    pub fn is_set(&self) -> bool {
        self.multiplicities.values().all(|&m| m == 1)
    }

    /// The support as a set-edge.
    pub fn support_edge(&self) -> Edge {
        Edge::from_vertices(self.support())
    }

    pub(crate) fn retain_vertices(&self, mut keep: impl FnMut(VertexId) -> bool) -> Edge {
        Edge {
            multiplicities: self
                .multiplicities
                .iter()
                .filter(|(v, _)| keep(**v))
                .map(|(&v, &m)| (v, m))
                .collect(),
        }
    }

    pub(crate) fn map_vertices(&self, map: impl Fn(VertexId) -> VertexId) -> Edge {
        Edge::from_multiplicities(self.iter().map(|(v, m)| (map(v), m)))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.to_vertex_list().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// A finite hypergraph `(V, E)` with `V = 0..n` and an indexed multiset of
/// edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Validates that every edge only references vertices below `n`.
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self> {
        for e in &edges {
            if let Some(v) = e.support().find(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(Hypergraph { n, edges })
    }

    /// Convenience constructor from vertex lists (repetition = multiplicity).
    pub fn from_edge_lists<E: AsRef<[VertexId]>>(n: usize, edges: &[E]) -> Result<Self> {
        Self::new(
            n,
            edges
                .iter()
                .map(|e| Edge::from_vertices(e.as_ref().iter().copied()))
                .collect(),
        )
    }

    /// `n` isolated vertices, no edges.
    pub fn empty(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::EdgeOutOfRange {
            edge: e,
            m: self.edges.len(),
        })
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n
    }

    /// No vertices.
    pub fn is_null(&self) -> bool {
        self.n == 0
    }

    /// Exactly one vertex.
    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    pub(crate) fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn check_edge(&self, e: EdgeId) -> Result<()> {
        self.edge(e).map(|_| ())
    }

    /// `deg(v) = Σ_e m_e(v)`.
    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().map(|e| e.multiplicity(v)).sum())
    }

    /// Degrees of all vertices in one pass.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for (v, m) in e.iter() {
                deg[v] += m;
            }
        }
        deg
    }

    /// `δ(H)`.
    pub fn min_degree(&self) -> Result<usize> {
        self.degrees()
            .into_iter()
            .min()
            .ok_or(Error::NullHypergraph)
    }

    /// Largest edge size counted with multiplicity; 0 for edgeless input.
    pub fn max_edge_size(&self) -> usize {
        self.edges.iter().map(Edge::size).max().unwrap_or(0)
    }

    /// Largest number of distinct vertices in an edge.
    pub fn max_edge_cardinality(&self) -> usize {
        self.edges.iter().map(Edge::cardinality).max().unwrap_or(0)
    }

    /// Removes everything that cannot affect vertex connectivity: parallel
    /// edges collapse to one, multiplicities clamp to 1 and edges with fewer
    /// than two distinct vertices are dropped. The vertex set is unchanged
    /// and surviving edges keep their relative order.
    pub fn normalize(&self) -> Hypergraph {
        let mut seen = BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.cardinality() >= 2)
            .map(Edge::support_edge)
            .filter(|e| seen.insert(e.clone()))
            .collect();
        Hypergraph { n: self.n, edges }
    }

    /// No parallel edges and every edge is a set.
    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|e| e.is_set() && seen.insert(e))
    }

    /// True when some edge has support exactly `{u, v}`.
    pub fn has_pair_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges
            .iter()
            .any(|e| e.cardinality() == 2 && e.contains(u) && e.contains(v))
    }

    /// True when some edge contains both `u` and `v`.
    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.iter().any(|e| {
            if u == v {
                e.multiplicity(u) >= 2
            } else {
                e.contains(u) && e.contains(v)
            }
        })
    }

    /// For every vertex, the ids of the edges whose support contains it.
    pub fn incidence_lists(&self) -> Vec<Vec<EdgeId>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.support() {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn incidence_matrix(&self) -> IncidenceMatrix {
        let rows = self.n;
        let cols = self.edges.len();
        let mut entries = vec![0; rows * cols];
        for (j, e) in self.edges.iter().enumerate() {
            for (v, m) in e.iter() {
                entries[v * cols + j] = m;
            }
        }
        IncidenceMatrix { rows, cols, entries }
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(n={}; ", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// `|V| × |E|` matrix with `entry(i, j) = m_{e_j}(v_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> usize {
        assert!(row < self.rows && col < self.cols, "index out of bounds");
        self.entries[row * self.cols + col]
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut entries = vec![0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.entries[i * self.cols + j];
            }
        }
        IncidenceMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Row-major nested vectors.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }
}
