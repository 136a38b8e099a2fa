//! Minimum transversals, maximum matchings and the König property.

use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// A minimum transversal: `witness` meets every nonempty edge and
/// `witness.len() == tau`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransversalResult {
    pub tau: usize,
    pub witness: Vec<VertexId>,
}

/// A maximum matching: pairwise disjoint nonempty edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingResult {
    pub alpha: usize,
    pub witness: Vec<EdgeId>,
}

/// Distinct supports of the nonempty edges with supersets removed; a set
/// hitting these hits every nonempty edge.
fn minimal_supports(h: &Hypergraph) -> Vec<Vec<VertexId>> {
    let mut supports: Vec<Vec<VertexId>> = h
        .edges()
        .iter()
        .filter(|e| !e.is_empty())
        .map(|e| e.support().collect())
        .collect();
    supports.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    supports.dedup();
    let mut kept: Vec<Vec<VertexId>> = Vec::new();
    for s in supports {
        if !kept.iter().any(|k| k.iter().all(|v| s.binary_search(v).is_ok())) {
            kept.push(s);
        }
    }
    kept
}

/// Vertex set meeting every nonempty edge, built by repeatedly taking the
/// vertex in the most unhit edges (lowest id on ties). Not minimum in
/// general.
pub fn greedy_transversal(h: &Hypergraph) -> Vec<VertexId> {
    let supports = minimal_supports(h);
    let mut hit = vec![false; supports.len()];
    let mut chosen = Vec::new();
    loop {
        let mut count = vec![0usize; h.vertex_count()];
        for (s, _) in supports.iter().zip(&hit).filter(|(_, &done)| !done) {
            for &v in s {
                count[v] += 1;
            }
        }
        let Some((best, &c)) = count.iter().enumerate().max_by_key(|&(v, c)| (*c, usize::MAX - v))
        else {
            break;
        };
        if c == 0 {
            break;
        }
        chosen.push(best);
        for (s, done) in supports.iter().zip(hit.iter_mut()) {
            if s.contains(&best) {
                *done = true;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

struct TauSearch<'a> {
    supports: &'a [Vec<VertexId>],
    chosen: Vec<bool>,
    current: Vec<VertexId>,
    best: Vec<VertexId>,
}

impl TauSearch<'_> {
    fn hit(&self, s: &[VertexId]) -> bool {
        s.iter().any(|&v| self.chosen[v])
    }

    /// Size of a greedy packing of pairwise disjoint unhit edges; every
    /// completion needs at least this many more vertices.
    fn packing_bound(&self) -> usize {
        let mut used = vec![false; self.chosen.len()];
        let mut count = 0;
        for s in self.supports {
            if !self.hit(s) && s.iter().all(|&v| !used[v]) {
                for &v in s {
                    used[v] = true;
                }
                count += 1;
            }
        }
        count
    }

    fn run(&mut self) {
        if self.current.len() + self.packing_bound() >= self.best.len() {
            return;
        }
        // Branch on the smallest unhit edge; its first vertex comes first.
        let Some(edge) = self
            .supports
            .iter()
            .filter(|s| !self.hit(s))
            .min_by_key(|s| s.len())
        else {
            self.best = self.current.clone();
            return;
        };
        for &v in edge {
            self.chosen[v] = true;
            self.current.push(v);
            self.run();
            self.current.pop();
            self.chosen[v] = false;
        }
    }
}

/// `τ(H)` by branch and bound. Vertices of single-vertex edges are forced
/// first; the search then branches on the smallest unhit edge, pruning with
/// a disjoint-edge packing bound. `τ = 0` for edgeless input.
pub fn tau(h: &Hypergraph) -> TransversalResult {
    let supports = minimal_supports(h);
    let mut chosen = vec![false; h.vertex_count()];
    let mut forced = Vec::new();
    for s in &supports {
        if s.len() == 1 && !chosen[s[0]] {
            chosen[s[0]] = true;
            forced.push(s[0]);
        }
    }
    let rest: Vec<Vec<VertexId>> = supports
        .into_iter()
        .filter(|s| s.iter().all(|&v| !chosen[v]))
        .collect();
    let mut upper = greedy_transversal(h);
    // One more than the greedy size so the search itself produces the
    // witness and ties resolve by search order.
    upper.push(usize::MAX);
    let mut search = TauSearch {
        supports: &rest,
        chosen,
        current: forced,
        best: upper,
    };
    search.run();
    let mut witness = search.best;
    witness.sort_unstable();
    TransversalResult {
        tau: witness.len(),
        witness,
    }
}

struct AlphaSearch<'a> {
    supports: &'a [Vec<VertexId>],
    used: Vec<bool>,
    current: Vec<EdgeId>,
    best: Vec<EdgeId>,
}

impl AlphaSearch<'_> {
    fn run(&mut self, from: usize) {
        if self.current.len() > self.best.len() {
            self.best = self.current.clone();
        }
        let open = self.supports[from..]
            .iter()
            .filter(|s| s.iter().all(|&v| !self.used[v]))
            .count();
        if self.current.len() + open <= self.best.len() {
            return;
        }
        for i in from..self.supports.len() {
            if self.supports[i].iter().any(|&v| self.used[v]) {
                continue;
            }
            for &v in &self.supports[i] {
                self.used[v] = true;
            }
            self.current.push(i);
            self.run(i + 1);
            self.current.pop();
            for &v in &self.supports[i] {
                self.used[v] = false;
            }
        }
    }
}

/// `α(H)`: the largest number of pairwise disjoint nonempty edges, found by
/// branch and bound over edges in id order.
pub fn alpha(h: &Hypergraph) -> MatchingResult {
    let ids: Vec<EdgeId> = (0..h.edge_count())
        .filter(|&i| !h.edges()[i].is_empty())
        .collect();
    let supports: Vec<Vec<VertexId>> = ids.iter().map(|&i| h.edges()[i].support().collect()).collect();
    let mut search = AlphaSearch {
        supports: &supports,
        used: vec![false; h.vertex_count()],
        current: Vec::new(),
        best: Vec::new(),
    };
    search.run(0);
    let witness: Vec<EdgeId> = search.best.iter().map(|&i| ids[i]).collect();
    MatchingResult {
        alpha: witness.len(),
        witness,
    }
}

/// `α(H) = τ(H)`.
pub fn has_konig(h: &Hypergraph) -> bool {
    alpha(h).alpha == tau(h).tau
}

/// True when `xs` meets every nonempty edge of `h`.
pub fn is_transversal(h: &Hypergraph, xs: &[VertexId]) -> bool {
    h.edges()
        .iter()
        .filter(|e| !e.is_empty())
        .all(|e| xs.iter().any(|&v| e.contains(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges).unwrap()
    }

    fn fano() -> Hypergraph {
        h(
            7,
            &[
                &[0, 1, 2],
                &[0, 3, 4],
                &[0, 5, 6],
                &[1, 3, 5],
                &[1, 4, 6],
                &[2, 3, 6],
                &[2, 4, 5],
            ],
        )
    }

    #[test]
    fn path() {
        let p = h(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(tau(&p), TransversalResult { tau: 1, witness: vec![1] });
        assert_eq!(greedy_transversal(&p), vec![1]);
        assert_eq!(alpha(&p).alpha, 1);
        assert!(has_konig(&p));
    }

    #[test]
    fn fano_plane() {
        let f = fano();
        let t = tau(&f);
        assert_eq!(t.tau, 3);
        assert!(is_transversal(&f, &t.witness));
        assert_eq!(alpha(&f).alpha, 1);
        assert!(!has_konig(&f));
        assert!(greedy_transversal(&f).len() >= 3);
    }

    #[test]
    fn edgeless_and_forced() {
        assert_eq!(tau(&Hypergraph::empty(3)).tau, 0);
        assert!(greedy_transversal(&Hypergraph::empty(3)).is_empty());
        let g = h(3, &[&[0], &[0, 1], &[1, 2]]);
        assert_eq!(tau(&g).witness, vec![0, 1]);
    }

    #[test]
    fn disjoint_pair_matching() {
        let g = h(4, &[&[0, 1], &[2, 3]]);
        assert_eq!(alpha(&g), MatchingResult { alpha: 2, witness: vec![0, 1] });
        let parallel = h(2, &[&[0, 1], &[0, 1]]);
        assert_eq!(alpha(&parallel).alpha, 1);
    }
}
