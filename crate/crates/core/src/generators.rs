//! Named instance families, the vertex-cover reduction, the two-vertex
//! extension `Ḧ`, and seeded random instances.
//!
//! Random generation uses ChaCha8 seeded with the 64-bit seed through
//! `SeedableRng::seed_from_u64`, which produces the same stream on every
//! platform.

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Edge, Hypergraph, VertexId};
use crate::transforms::Graph;

fn build(n: usize, edges: Vec<Vec<VertexId>>) -> Hypergraph {
    Hypergraph::new(n, edges.into_iter().map(Edge::from_vertices).collect())
        .expect("generator ids are in range")
}

/// Two copies of `K_4` joined through `z`.
///
/// Vertices: `x_1..x_4 = 0..=3`, `y_1..y_4 = 4..=7`, `z = 8`. Edges: the six
/// pairs of each `K_4` (x side first), then `{x_1, y_1, z}` and
/// `{x_2, y_2, z}`.
pub fn fig1_disjoint_cuts() -> Hypergraph {
    let mut edges: Vec<Vec<VertexId>> = Vec::new();
    for base in [0, 4] {
        for (a, b) in (base..base + 4).tuple_combinations() {
            edges.push(vec![a, b]);
        }
    }
    edges.push(vec![0, 4, 8]);
    edges.push(vec![1, 5, 8]);
    build(9, edges)
}

/// Edges `{x_1..x_n}`, `{y_1..y_n}` and `{x_i, y_i, z}` for each `i`.
///
/// Vertices: `x_i = i − 1`, `y_i = n + i − 1`, `z = 2n`.
pub fn fig2_gap(n: usize) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("fig2 needs n >= 2, got {n}")));
    }
    let mut edges = vec![(0..n).collect::<Vec<_>>(), (n..2 * n).collect()];
    for i in 0..n {
        edges.push(vec![i, n + i, 2 * n]);
    }
    Ok(build(2 * n + 1, edges))
}

/// Eight vertices in four columns of two (column `c` holds `2c` and
/// `2c + 1`); each edge covers two neighbouring columns.
pub fn fig3_chain() -> Hypergraph {
    let edges = (0..3)
        .map(|c| (2 * c..2 * c + 4).collect())
        .collect();
    build(8, edges)
}

/// Two "books" of three triangles sharing the spine vertex `z`:
/// `{x_i, x_j, z}` and `{y_i, y_j, z}` for `i < j`.
///
/// Vertices: `x_1..x_3 = 0..=2`, `y_1..y_3 = 3..=5`, `z = 6`.
pub fn two_books() -> Hypergraph {
    let mut edges = Vec::new();
    for base in [0, 3] {
        for (a, b) in (base..base + 3).tuple_combinations() {
            edges.push(vec![a, b, 6]);
        }
    }
    build(7, edges)
}

/// A Fano plane on `0..=6` together with a second copy of the lines through
/// `0`, `1`, `2` whose other points are replaced by `3'..6'`.
///
/// Vertices `3'..6'` are `7..=10`. Edge 0 is `{0, 1, 2}`.
pub fn fano_doubled() -> Hypergraph {
    let p = |v: usize| v + 4; // v' for v in 3..=6
    let edges = vec![
        vec![0, 1, 2],
        vec![0, 3, 6],
        vec![0, 4, 5],
        vec![1, 3, 4],
        vec![1, 5, 6],
        vec![2, 3, 5],
        vec![2, 4, 6],
        vec![0, p(3), p(6)],
        vec![0, p(4), p(5)],
        vec![1, p(3), p(4)],
        vec![1, p(5), p(6)],
        vec![2, p(3), p(5)],
        vec![2, p(4), p(6)],
    ];
    build(11, edges)
}

/// The hypergraph built from a graph `G` on `n` vertices, together with its
/// three vertex classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionInstance {
    pub hypergraph: Hypergraph,
    pub a_u: Vec<VertexId>,
    pub a_v: Vec<VertexId>,
    pub v_g: Vec<VertexId>,
    pub source_graph: Graph,
}

/// Builds the instance whose minimum strong vertex cuts correspond to the
/// minimum vertex covers of `g`.
///
/// Vertices: `u_i = i`, `v_i = n + i`, `x_i = 2n + i`. Edges: `{u_i, x_j}`
/// for all `i`, `j` (by `i`, then `j`), then `e ∪ {v_i}` for every edge `e`
/// of `g` and every `i`.
pub fn vc_reduction(g: &Graph) -> Result<ReductionInstance> {
    if g.edges().is_empty() {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    if !g.is_simple() {
        return Err(Error::InvalidParameter("graph is not simple".into()));
    }
    let n = g.vertex_count();
    let x = |i: usize| 2 * n + i;
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            edges.push(vec![i, x(j)]);
        }
    }
    for &(a, b) in g.edges() {
        for i in 0..n {
            edges.push(vec![x(a), x(b), n + i]);
        }
    }
    Ok(ReductionInstance {
        hypergraph: build(3 * n, edges),
        a_u: (0..n).collect(),
        a_v: (n..2 * n).collect(),
        v_g: (2 * n..3 * n).collect(),
        source_graph: g.clone(),
    })
}

/// `Ḧ`: adds vertices `u_1 = n`, `u_2 = n + 1` and the edges `{u_1, u_2}`
/// and `{u_1, u_2} ∪ V`.
pub fn umlaut(h: &Hypergraph) -> Result<Hypergraph> {
    if h.is_null() {
        return Err(Error::NullHypergraph);
    }
    let n = h.vertex_count();
    let mut edges = h.edges().to_vec();
    edges.push(Edge::from_vertices([n, n + 1]));
    edges.push(Edge::from_vertices(0..n + 2));
    Hypergraph::new(n + 2, edges)
}

/// Uniform `k`-subset of `0..n` by a partial Fisher–Yates shuffle.
fn sample_subset(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<VertexId> {
    let mut pool: Vec<VertexId> = (0..n).collect();
    for i in 0..k {
        let j = rng.gen_range(i..n);
        pool.swap(i, j);
    }
    let mut out = pool[..k].to_vec();
    out.sort_unstable();
    out
}

/// `m` random edges on `n` vertices. Each edge first draws its size
/// uniformly from `2..=max_edge_size` (capped at `n`), then a uniform vertex
/// subset of that size. Deterministic in `seed`.
pub fn random_hypergraph(n: usize, m: usize, max_edge_size: usize, seed: u64) -> Result<Hypergraph> {
    if max_edge_size < 1 {
        return Err(Error::InvalidParameter("max_edge_size must be at least 1".into()));
    }
    if m > 0 && n == 0 {
        return Err(Error::InvalidParameter("edges need at least one vertex".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hi = max_edge_size.min(n);
    let lo = 2.min(hi);
    let edges = (0..m)
        .map(|_| {
            let k = rng.gen_range(lo..=hi);
            sample_subset(&mut rng, n, k)
        })
        .collect();
    Ok(build(n, edges))
}

/// A connected interval hypergraph on `n ≥ 2` vertices: `m` random intervals
/// of length at least 2 over a hidden random ordering, plus the consecutive
/// pairs needed to join uncovered gaps. Vertex ids are shuffled so the
/// ordering is not the identity.
pub fn random_interval_hypergraph(n: usize, m: usize, seed: u64) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("need n >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = sample_subset(&mut rng, n, n);
    let mut order = order;
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    let mut intervals: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let a = rng.gen_range(0..n - 1);
            let b = rng.gen_range(a + 1..n);
            (a, b)
        })
        .collect();
    // Position p and p + 1 are joined when some interval spans both.
    for p in 0..n - 1 {
        if !intervals.iter().any(|&(a, b)| a <= p && p < b) {
            intervals.push((p, p + 1));
        }
    }
    let edges = intervals
        .into_iter()
        .map(|(a, b)| (a..=b).map(|p| order[p]).collect())
        .collect();
    Ok(build(n, edges))
}

/// Random simple graph with each pair present with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!("probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges = (0..n)
        .tuple_combinations()
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges)
}

/// One representative of every isomorphism class of simple graphs on `n`
/// vertices with at least one edge, for `n ≤ 6`.
///
/// Edge sets are bitmasks over the pairs of `0..n` in lexicographic order.
/// Masks are scanned in increasing order; each unseen mask is emitted and
/// its whole orbit under the `n!` relabellings is marked, so the emitted
/// mask is the smallest of its class.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > 6 {
        return Err(Error::TooLarge {
            what: "vertices",
            limit: 6,
            got: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |a: usize, b: usize| {
        pairs
            .iter()
            .position(|&p| p == (a.min(b), a.max(b)))
            .expect("pair of distinct vertices")
    };
    // image[k][i]: where relabelling k sends pair i
    let image: Vec<Vec<usize>> = (0..n)
        .permutations(n)
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut seen = vec![false; 1 << pairs.len()];
    let mut out = Vec::new();
    for mask in 1usize..(1 << pairs.len()) {
        if seen[mask] {
            continue;
        }
        for map in &image {
            let moved = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0usize, |acc, i| acc | 1 << map[i]);
            seen[moved] = true;
        }
        let edges = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        out.push(Graph::new(n, edges)?);
    }
    Ok(out)
}
