//! Strong vertex and edge connectivity.
//!
//! Strong deletion has no flow formulation, so the general case is an
//! exhaustive search over vertex (or edge) subsets in increasing size. Two
//! fast paths avoid it: inputs whose edges all have at most two vertices
//! reduce to weak connectivity, and hypergraphs with a representative tree
//! have a strong cut vertex.

use itertools::Itertools;

use crate::bits::{self, Mask, MaskedHypergraph};
use crate::budget::{Budgets, Meter};
use crate::classes::find_representative_tree;
use crate::connectivity::{components, is_connected};
use crate::error::{Error, Result};
use crate::hypergraph::{Edge, EdgeId, Hypergraph, VertexId};
use crate::transversal::tau;
use crate::weakflow::{kappa_w, kappa_w_edge};

/// How a strong connectivity value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Null, trivial, disconnected or adjacent-pair conventions.
    Convention,
    /// All edges have at most two vertices; computed as `κ_W`.
    EdgeSize2,
    /// A representative tree was found; a non-leaf is a strong cut vertex.
    Arboreal,
    /// Subset enumeration.
    Enumeration,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Convention => "convention",
            Method::EdgeSize2 => "edge_size_2",
            Method::Arboreal => "arboreal",
            Method::Enumeration => "enumeration",
        }
    }
}

/// Result of a strong connectivity computation. Witnesses are vertex ids
/// for vertex cuts and edge ids for disconnecting sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongCutResult {
    pub value: usize,
    pub witness: Vec<usize>,
    pub attained: bool,
    pub method: Method,
}

impl StrongCutResult {
    fn convention(value: usize) -> Self {
        StrongCutResult {
            value,
            witness: Vec::new(),
            attained: false,
            method: Method::Convention,
        }
    }

    fn disconnected() -> Self {
        StrongCutResult {
            value: 0,
            witness: Vec::new(),
            attained: true,
            method: Method::Convention,
        }
    }

    fn cut(witness: Vec<usize>, method: Method) -> Self {
        StrongCutResult {
            value: witness.len(),
            witness,
            attained: true,
            method,
        }
    }
}

/// Controls for [`kappa_s_with`].
#[derive(Clone, Debug)]
pub struct KappaSOptions {
    pub budgets: Budgets,
    /// Skip both fast paths.
    pub force_enumeration: bool,
    /// Spanning trees tried by the arboreal fast path before giving up on
    /// it. Running out only disables the fast path.
    pub tree_attempts: u64,
}

impl Default for KappaSOptions {
    fn default() -> Self {
        KappaSOptions {
            budgets: Budgets::default(),
            force_enumeration: false,
            tree_attempts: 64,
        }
    }
}

/// True when strongly deleting the vertex set `x` leaves at least two
/// vertices in at least two components.
fn strongly_disconnects(mh: &MaskedHypergraph, x: Mask) -> bool {
    let (alive, edges) = mh.strong_vertex_deletion(x);
    !bits::is_connected(alive, &edges)
}

/// `κ_S(H)` with default options.
pub fn kappa_s(h: &Hypergraph) -> Result<StrongCutResult> {
    kappa_s_with(h, &KappaSOptions::default())
}

/// `κ_S(H)`: 1 for null or trivial inputs, 0 when disconnected, `|V| − 1`
/// (not attained) when no strong vertex cut exists. Otherwise the size of a
/// smallest strong vertex cut, with the lexicographically first one of that
/// size as witness when enumeration is used.
pub fn kappa_s_with(h: &Hypergraph, opts: &KappaSOptions) -> Result<StrongCutResult> {
    let n = h.vertex_count();
    if n <= 1 {
        return Ok(StrongCutResult::convention(1));
    }
    if !is_connected(h) {
        return Ok(StrongCutResult::disconnected());
    }
    if n == 2 {
        return Ok(StrongCutResult::convention(1));
    }
    let norm = h.normalize();
    if !opts.force_enumeration {
        if norm.max_edge_cardinality() <= 2 {
            let r = kappa_w(&norm)?;
            return Ok(StrongCutResult {
                value: r.value,
                witness: r.witness,
                attained: r.attained,
                method: if r.attained { Method::EdgeSize2 } else { Method::Convention },
            });
        }
        if let Ok(Some(tree)) = find_representative_tree(&norm, opts.tree_attempts) {
            let w = tree.non_leaves()[0];
            return Ok(StrongCutResult::cut(vec![w], Method::Arboreal));
        }
    }
    let bound = [
        norm.min_degree()?,
        kappa_w_edge(&norm)?.value,
        tau(&norm).tau,
        n - 1,
    ]
    .into_iter()
    .min()
    .expect("nonempty");
    let mh = MaskedHypergraph::new(&norm)?;
    let mut meter = Meter::new("subsets", opts.budgets.subsets);
    for k in 1..=bound.min(n - 2) {
        for subset in (0..n).combinations(k) {
            meter.tick()?;
            if strongly_disconnects(&mh, bits::mask_of(&subset)) {
                return Ok(StrongCutResult::cut(subset, Method::Enumeration));
            }
        }
    }
    debug_assert!(bound >= n - 1, "a cut of size {bound} should exist");
    Ok(StrongCutResult::convention(n - 1))
}

/// Every strong vertex cut of minimum size, in lexicographic order. Empty
/// when `h` is null, trivial, disconnected or has no strong vertex cut.
pub fn minimum_strong_vertex_cuts(h: &Hypergraph, budgets: &Budgets) -> Result<Vec<Vec<VertexId>>> {
    let n = h.vertex_count();
    if n <= 2 || !is_connected(h) {
        return Ok(Vec::new());
    }
    let mh = MaskedHypergraph::new(&h.normalize())?;
    let mut meter = Meter::new("subsets", budgets.subsets);
    for k in 1..=n - 2 {
        let mut found = Vec::new();
        for subset in (0..n).combinations(k) {
            meter.tick()?;
            if strongly_disconnects(&mh, bits::mask_of(&subset)) {
                found.push(subset);
            }
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    Ok(Vec::new())
}

fn check_pair(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<()> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

/// `κ_S(H, u, v)`: the fewest vertices other than `u`, `v` whose strong
/// deletion separates them. When some edge is exactly `{u, v}` nothing can
/// separate them and the value is `|V| − 1`, not attained. Pairs that are
/// already separated give 0.
pub fn kappa_s_pair(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<StrongCutResult> {
    kappa_s_pair_with(h, u, v, &Budgets::default())
}

pub fn kappa_s_pair_with(
    h: &Hypergraph,
    u: VertexId,
    v: VertexId,
    budgets: &Budgets,
) -> Result<StrongCutResult> {
    check_pair(h, u, v)?;
    let n = h.vertex_count();
    let norm = h.normalize();
    if norm.has_pair_edge(u, v) {
        return Ok(StrongCutResult::convention(n - 1));
    }
    let mh = MaskedHypergraph::new(&norm)?;
    let others: Vec<VertexId> = (0..n).filter(|&w| w != u && w != v).collect();
    let mut meter = Meter::new("subsets", budgets.subsets);
    for k in 0..=others.len() {
        for subset in others.iter().copied().combinations(k) {
            meter.tick()?;
            let (_, edges) = mh.strong_vertex_deletion(bits::mask_of(&subset));
            if bits::reach(u, &edges) & bits::bit(v) == 0 {
                return Ok(StrongCutResult::cut(subset, Method::Enumeration));
            }
        }
    }
    // Unreachable: deleting every other vertex leaves only edges inside
    // {u, v}, and none of those has support exactly {u, v}.
    Ok(StrongCutResult::convention(n - 1))
}

/// `H'_{u,v}`: one edge per `(u, v)`-path `P`, equal to the support of the
/// union of `P`'s edges minus `u` and `v`; identical edges are merged.
///
/// The result keeps the vertex numbering of `h` (so `u` and `v` are
/// isolated in it). Every path is enumerated, which is exponential in
/// general; `path_budget` caps the number of paths.
pub fn path_support_hypergraph(
    h: &Hypergraph,
    u: VertexId,
    v: VertexId,
    path_budget: u64,
) -> Result<Hypergraph> {
    check_pair(h, u, v)?;
    let mh = MaskedHypergraph::new(h)?;
    let incident = h.incidence_lists();
    let mut meter = Meter::new("paths", path_budget);
    let mut found: Vec<Mask> = Vec::new();

    struct Walk<'a> {
        supports: &'a [Mask],
        incident: &'a [Vec<EdgeId>],
        target: VertexId,
        visited: Mask,
        used: Vec<bool>,
        covered: Mask,
    }

    fn extend(w: &mut Walk, x: VertexId, meter: &mut Meter, found: &mut Vec<Mask>) -> Result<()> {
        for &e in &w.incident[x] {
            if w.used[e] {
                continue;
            }
            let s = w.supports[e];
            let mut next = s & !w.visited;
            w.used[e] = true;
            let before = w.covered;
            w.covered |= s;
            while next != 0 {
                let y = next.trailing_zeros() as usize;
                next &= next - 1;
                if y == w.target {
                    meter.tick()?;
                    found.push(w.covered);
                    continue;
                }
                w.visited |= bits::bit(y);
                extend(w, y, meter, found)?;
                w.visited &= !bits::bit(y);
            }
            w.covered = before;
            w.used[e] = false;
        }
        Ok(())
    }

    let mut walk = Walk {
        supports: &mh.supports,
        incident: &incident,
        target: v,
        visited: bits::bit(u),
        used: vec![false; h.edge_count()],
        covered: 0,
    };
    extend(&mut walk, u, &mut meter, &mut found)?;
    let ends = bits::bit(u) | bits::bit(v);
    let mut inner: Vec<Mask> = found.into_iter().map(|m| m & !ends).collect();
    inner.sort_unstable();
    inner.dedup();
    let edges: Vec<Edge> = inner
        .into_iter()
        .map(|m| Edge::from_vertices(bits::members(m)))
        .collect();
    Ok(Hypergraph::new(h.vertex_count(), edges).expect("ids come from h"))
}

/// True when strongly deleting the edges in `fs` leaves at least two
/// vertices in at least two components.
fn strong_edge_disconnects(mh: &MaskedHypergraph, fs: &[EdgeId]) -> bool {
    let (alive, edges) = mh.strong_edge_deletion(fs);
    !bits::is_connected(alive, &edges)
}

/// `κ'_S(H)` with default budgets.
pub fn kappa_s_edge(h: &Hypergraph) -> Result<StrongCutResult> {
    kappa_s_edge_with(h, &Budgets::default())
}

/// `κ'_S(H)`: 1 for null or trivial inputs, 0 when disconnected, `|E|` (not
/// attained) when no strong disconnecting set exists, otherwise the size of
/// the first smallest edge set found in lexicographic order.
pub fn kappa_s_edge_with(h: &Hypergraph, budgets: &Budgets) -> Result<StrongCutResult> {
    let n = h.vertex_count();
    if n <= 1 {
        return Ok(StrongCutResult::convention(1));
    }
    if components(h).count > 1 {
        return Ok(StrongCutResult::disconnected());
    }
    let mh = MaskedHypergraph::new(h)?;
    let m = h.edge_count();
    let mut meter = Meter::new("subsets", budgets.subsets);
    for k in 1..=m {
        for subset in (0..m).combinations(k) {
            meter.tick()?;
            if strong_edge_disconnects(&mh, &subset) {
                return Ok(StrongCutResult::cut(subset, Method::Enumeration));
            }
        }
    }
    Ok(StrongCutResult::convention(m))
}

/// `κ'_S(H, u, v)`: the fewest edges, none containing `u` or `v`, whose
/// strong deletion separates `u` from `v`; `|E|` (not attained) when no such
/// set exists.
pub fn kappa_s_edge_pair(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<StrongCutResult> {
    kappa_s_edge_pair_with(h, u, v, &Budgets::default())
}

pub fn kappa_s_edge_pair_with(
    h: &Hypergraph,
    u: VertexId,
    v: VertexId,
    budgets: &Budgets,
) -> Result<StrongCutResult> {
    check_pair(h, u, v)?;
    let mh = MaskedHypergraph::new(h)?;
    let ends = bits::bit(u) | bits::bit(v);
    let allowed: Vec<EdgeId> = (0..h.edge_count())
        .filter(|&e| mh.supports[e] & ends == 0)
        .collect();
    let mut meter = Meter::new("subsets", budgets.subsets);
    for k in 0..=allowed.len() {
        for subset in allowed.iter().copied().combinations(k) {
            meter.tick()?;
            let (_, edges) = mh.strong_edge_deletion(&subset);
            if bits::reach(u, &edges) & bits::bit(v) == 0 {
                return Ok(StrongCutResult::cut(subset, Method::Enumeration));
            }
        }
    }
    Ok(StrongCutResult::convention(h.edge_count()))
}
