//! Brute-force reference implementations used as test oracles.
//!
//! Everything here works straight from the definitions on plain vertex
//! lists, without touching the library's search or flow code.

#![allow(dead_code)]

use hyperconn::generators::random_hypergraph;
use hyperconn::{Graph, Hypergraph};

/// Supports as sorted vertex lists.
pub fn supports(h: &Hypergraph) -> Vec<Vec<usize>> {
    h.edges().iter().map(|e| e.support().collect()).collect()
}

/// Components among `alive` vertices, joined by the given vertex lists
/// (members outside `alive` are ignored). Union-find.
pub fn component_count(alive: &[bool], edges: &[Vec<usize>]) -> usize {
    let n = alive.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = root(p, p[x]);
            p[x] = r;
            r
        }
    }
    for e in edges {
        let live: Vec<usize> = e.iter().copied().filter(|&v| alive[v]).collect();
        for w in live.windows(2) {
            let (a, b) = (root(&mut parent, w[0]), root(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..n)
        .filter(|&v| alive[v])
        .filter(|&v| root(&mut parent, v) == v)
        .count()
}

pub fn same_component(alive: &[bool], edges: &[Vec<usize>], u: usize, v: usize) -> bool {
    let mut reached = vec![false; alive.len()];
    reached[u] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for e in edges {
            let live: Vec<usize> = e.iter().copied().filter(|&x| alive[x]).collect();
            if live.iter().any(|&x| reached[x]) {
                for &x in &live {
                    if !reached[x] {
                        reached[x] = true;
                        changed = true;
                    }
                }
            }
        }
    }
    reached[v]
}

/// All subsets of `items` of size `k`, lexicographic.
pub fn subsets_of_size(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(items: &[usize], k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

fn alive_without(n: usize, xs: &[usize]) -> Vec<bool> {
    let mut alive = vec![true; n];
    for &x in xs {
        alive[x] = false;
    }
    alive
}

/// Edges left after strongly deleting `xs`.
fn strong_remainder(edges: &[Vec<usize>], xs: &[usize]) -> Vec<Vec<usize>> {
    edges
        .iter()
        .filter(|e| !e.iter().any(|v| xs.contains(v)))
        .cloned()
        .collect()
}

pub fn disconnected_after_weak(h: &Hypergraph, xs: &[usize]) -> bool {
    let alive = alive_without(h.vertex_count(), xs);
    component_count(&alive, &supports(h)) >= 2
}

pub fn disconnected_after_strong(h: &Hypergraph, xs: &[usize]) -> bool {
    let alive = alive_without(h.vertex_count(), xs);
    component_count(&alive, &strong_remainder(&supports(h), xs)) >= 2
}

pub fn disconnected_after_weak_edges(h: &Hypergraph, fs: &[usize]) -> bool {
    let es: Vec<Vec<usize>> = supports(h)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !fs.contains(i))
        .map(|(_, e)| e)
        .collect();
    component_count(&vec![true; h.vertex_count()], &es) >= 2
}

pub fn disconnected_after_strong_edges(h: &Hypergraph, fs: &[usize]) -> bool {
    let all = supports(h);
    let mut alive = vec![true; h.vertex_count()];
    for &f in fs {
        for &v in &all[f] {
            alive[v] = false;
        }
    }
    let es: Vec<Vec<usize>> = all
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !fs.contains(i))
        .map(|(_, e)| e)
        .collect();
    component_count(&alive, &es) >= 2
}

fn vertex_connectivity_by(h: &Hypergraph, cut: impl Fn(&Hypergraph, &[usize]) -> bool) -> usize {
    let n = h.vertex_count();
    if n <= 1 {
        return 1;
    }
    if cut(h, &[]) {
        return 0;
    }
    let all: Vec<usize> = (0..n).collect();
    for k in 1..=n.saturating_sub(2) {
        if subsets_of_size(&all, k).iter().any(|x| cut(h, x)) {
            return k;
        }
    }
    n - 1
}

/// `κ_W` from the definition.
pub fn kappa_w(h: &Hypergraph) -> usize {
    vertex_connectivity_by(h, disconnected_after_weak)
}

/// `κ_S` from the definition.
pub fn kappa_s(h: &Hypergraph) -> usize {
    vertex_connectivity_by(h, disconnected_after_strong)
}

/// All minimum strong vertex cuts of a connected hypergraph.
pub fn min_strong_cuts(h: &Hypergraph) -> Vec<Vec<usize>> {
    let n = h.vertex_count();
    let all: Vec<usize> = (0..n).collect();
    for k in 1..=n.saturating_sub(2) {
        let found: Vec<Vec<usize>> = subsets_of_size(&all, k)
            .into_iter()
            .filter(|x| disconnected_after_strong(h, x))
            .collect();
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

/// `κ'_W` from the definition: smallest edge set whose removal disconnects.
pub fn kappa_w_edge(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    if n <= 1 {
        return 1;
    }
    let ids: Vec<usize> = (0..h.edge_count()).collect();
    for k in 0..=ids.len() {
        if subsets_of_size(&ids, k)
            .iter()
            .any(|f| disconnected_after_weak_edges(h, f))
        {
            return k;
        }
    }
    unreachable!("removing every edge of a hypergraph on 2+ vertices disconnects it")
}

/// `κ'_S` from the definition, `|E|` when no strong disconnecting set
/// exists.
pub fn kappa_s_edge(h: &Hypergraph) -> usize {
    let n = h.vertex_count();
    if n <= 1 {
        return 1;
    }
    let ids: Vec<usize> = (0..h.edge_count()).collect();
    for k in 0..=ids.len() {
        if subsets_of_size(&ids, k)
            .iter()
            .any(|f| disconnected_after_strong_edges(h, f))
        {
            return k;
        }
    }
    h.edge_count()
}

/// `κ_W(H, u, v)` from the definition; `None` when no separating set exists.
pub fn kappa_w_pair(h: &Hypergraph, u: usize, v: usize) -> Option<usize> {
    let n = h.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
    let es = supports(h);
    (0..=others.len()).find(|&k| {
        subsets_of_size(&others, k)
            .iter()
            .any(|x| !same_component(&alive_without(n, x), &es, u, v))
    })
}

/// `κ_S(H, u, v)` from the definition; `None` when no separating set exists.
pub fn kappa_s_pair(h: &Hypergraph, u: usize, v: usize) -> Option<usize> {
    let n = h.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&w| w != u && w != v).collect();
    let es = supports(h);
    (0..=others.len()).find(|&k| {
        subsets_of_size(&others, k).iter().any(|x| {
            !same_component(&alive_without(n, x), &strong_remainder(&es, x), u, v)
        })
    })
}

/// Smallest vertex set meeting every nonempty edge.
pub fn tau(h: &Hypergraph) -> usize {
    let es: Vec<Vec<usize>> = supports(h).into_iter().filter(|e| !e.is_empty()).collect();
    let all: Vec<usize> = (0..h.vertex_count()).collect();
    (0..=all.len())
        .find(|&k| {
            subsets_of_size(&all, k)
                .iter()
                .any(|t| es.iter().all(|e| e.iter().any(|v| t.contains(v))))
        })
        .expect("the full vertex set is a transversal")
}

/// Largest set of pairwise disjoint nonempty edges.
pub fn alpha(h: &Hypergraph) -> usize {
    let es: Vec<Vec<usize>> = supports(h).into_iter().filter(|e| !e.is_empty()).collect();
    let ids: Vec<usize> = (0..es.len()).collect();
    (0..=es.len())
        .rev()
        .find(|&k| {
            subsets_of_size(&ids, k).iter().any(|m| {
                m.iter().enumerate().all(|(i, &a)| {
                    m[i + 1..]
                        .iter()
                        .all(|&b| !es[a].iter().any(|v| es[b].contains(v)))
                })
            })
        })
        .unwrap_or(0)
}

/// Smallest vertex cover of a graph.
pub fn min_vertex_cover(g: &Graph) -> usize {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    (0..=all.len())
        .find(|&k| {
            subsets_of_size(&all, k)
                .iter()
                .any(|c| g.edges().iter().all(|(a, b)| c.contains(a) || c.contains(b)))
        })
        .expect("all vertices cover")
}

/// Every labelled tree on `0..n` as an edge list, decoded from all Prüfer
/// sequences.
pub fn all_labelled_trees(n: usize) -> Vec<Vec<(usize, usize)>> {
    if n <= 1 {
        return vec![Vec::new()];
    }
    if n == 2 {
        return vec![vec![(0, 1)]];
    }
    let mut out = Vec::new();
    let len = n - 2;
    let total = n.pow(len as u32);
    for code in 0..total {
        let mut seq = Vec::with_capacity(len);
        let mut c = code;
        for _ in 0..len {
            seq.push(c % n);
            c /= n;
        }
        let mut degree = vec![1; n];
        for &s in &seq {
            degree[s] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf, s));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
        out.push(edges);
    }
    out
}

/// True when every edge support spans `|S| − 1` tree edges (connected in
/// the tree).
pub fn tree_represents(h: &Hypergraph, tree: &[(usize, usize)]) -> bool {
    supports(h).iter().filter(|s| !s.is_empty()).all(|s| {
        let alive: Vec<bool> = (0..h.vertex_count()).map(|v| s.contains(&v)).collect();
        let tree_edges: Vec<Vec<usize>> = tree.iter().map(|&(a, b)| vec![a, b]).collect();
        component_count(&alive, &tree_edges) == 1
    })
}

/// Arboreal by trying every labelled tree on the vertex set (n ≤ 7).
pub fn is_arboreal(h: &Hypergraph) -> bool {
    all_labelled_trees(h.vertex_count())
        .iter()
        .any(|t| tree_represents(h, t))
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Interval by trying every ordering.
pub fn is_interval(h: &Hypergraph) -> bool {
    let es = supports(h);
    permutations(h.vertex_count()).iter().any(|order| {
        let mut pos = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        es.iter().filter(|e| !e.is_empty()).all(|e| {
            let ps: Vec<usize> = e.iter().map(|&v| pos[v]).collect();
            ps.iter().max().unwrap() - ps.iter().min().unwrap() + 1 == ps.len()
        })
    })
}

/// Bicolourable by trying every colouring.
pub fn is_bicolourable(h: &Hypergraph) -> bool {
    let es: Vec<Vec<usize>> = supports(h).into_iter().filter(|e| e.len() >= 2).collect();
    let n = h.vertex_count();
    (0u64..1 << n).any(|mask| {
        es.iter().all(|e| {
            let first = mask >> e[0] & 1;
            e.iter().any(|&v| mask >> v & 1 != first)
        })
    })
}

/// Totally balanced by listing every cycle `v_1 e_1 … v_s e_s` with `s ≥ 3`
/// (distinct vertices, distinct edges, `v_i, v_{i+1} ∈ e_i`).
pub fn is_totally_balanced(h: &Hypergraph) -> bool {
    let es = supports(h);
    let n = h.vertex_count();
    fn edge_choices(
        es: &[Vec<usize>],
        cycle: &[usize],
        i: usize,
        used: &mut Vec<usize>,
    ) -> bool {
        // true when some edge assignment yields a cycle with no edge
        // containing three cycle vertices
        let s = cycle.len();
        if i == s {
            return true;
        }
        let (a, b) = (cycle[i], cycle[(i + 1) % s]);
        for (j, e) in es.iter().enumerate() {
            if used.contains(&j) || !e.contains(&a) || !e.contains(&b) {
                continue;
            }
            if cycle.iter().filter(|v| e.contains(v)).count() >= 3 {
                continue;
            }
            used.push(j);
            if edge_choices(es, cycle, i + 1, used) {
                return true;
            }
            used.pop();
        }
        false
    }
    let all: Vec<usize> = (0..n).collect();
    for s in 3..=n {
        for set in subsets_of_size(&all, s) {
            for p in permutations(s) {
                let cycle: Vec<usize> = p.iter().map(|&i| set[i]).collect();
                if edge_choices(&es, &cycle, 0, &mut Vec::new()) {
                    return false;
                }
            }
        }
    }
    true
}

/// Helly from the definition over all subfamilies.
pub fn is_helly(h: &Hypergraph) -> bool {
    let es: Vec<Vec<usize>> = supports(h).into_iter().filter(|e| !e.is_empty()).collect();
    let ids: Vec<usize> = (0..es.len()).collect();
    (1..=es.len()).all(|k| {
        subsets_of_size(&ids, k).iter().all(|fam| {
            let pairwise = fam.iter().enumerate().all(|(i, &a)| {
                fam[i + 1..]
                    .iter()
                    .all(|&b| es[a].iter().any(|v| es[b].contains(v)))
            });
            !pairwise || es[fam[0]].iter().any(|v| fam.iter().all(|&f| es[f].contains(v)))
        })
    })
}

/// Seeded random hypergraph with parameters drawn from the seed itself.
pub fn seeded(seed: u64, max_n: usize, max_m: usize, max_size: usize) -> Hypergraph {
    let n = 2 + (seed as usize * 7 + 3) % (max_n - 1);
    let m = 1 + (seed as usize * 13 + 5) % max_m;
    let size = 2 + (seed as usize * 5) % (max_size - 1);
    random_hypergraph(n, m, size, seed).unwrap()
}

/// Hypergraphs on up to `max_n` vertices with up to `max_m` edges, each a
/// vertex list of length `0..=max_len` (repeats give multiplicities).
pub fn arb_hypergraph(
    max_n: usize,
    max_m: usize,
    max_len: usize,
) -> impl proptest::strategy::Strategy<Value = Hypergraph> {
    use proptest::prelude::*;
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(0..n, 0..=max_len), 0..=max_m)
            .prop_map(move |edges| Hypergraph::from_edge_lists(n, &edges).unwrap())
    })
}

/// Like [`arb_hypergraph`] but every edge is a set of at least two vertices.
pub fn arb_simple_edges(
    max_n: usize,
    max_m: usize,
    max_len: usize,
) -> impl proptest::strategy::Strategy<Value = Hypergraph> {
    use proptest::prelude::*;
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(
            proptest::collection::btree_set(0..n, 2..=max_len.min(n)),
            1..=max_m,
        )
        .prop_map(move |edges| {
            let lists: Vec<Vec<usize>> = edges.into_iter().map(|s| s.into_iter().collect()).collect();
            Hypergraph::from_edge_lists(n, &lists).unwrap()
        })
    })
}
