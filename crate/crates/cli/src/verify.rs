//! Deletion-based checks run on every result before it is printed.

use hyperconn::classes::{verify_colouring, verify_interval_ordering, verify_unbalanced_cycle};
use hyperconn::transversal::is_transversal;
use hyperconn::{
    components, strong_delete_edges, strong_delete_vertices, verify_representative_tree,
    weak_delete_edges, weak_delete_vertices, ClassReport, ClassWitness, DeletionResult, Hypergraph,
    Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deletion {
    WeakVertices,
    StrongVertices,
    WeakEdges,
    StrongEdges,
}

fn apply(h: &Hypergraph, kind: Deletion, ids: &[usize]) -> Option<DeletionResult> {
    let r = match kind {
        Deletion::WeakVertices => weak_delete_vertices(h, ids),
        Deletion::StrongVertices => strong_delete_vertices(h, ids),
        Deletion::WeakEdges => weak_delete_edges(h, ids),
        Deletion::StrongEdges => strong_delete_edges(h, ids),
    };
    r.ok()
}

/// A connectivity result is consistent when an attained witness of the
/// reported size disconnects `h` (or separates the pair), a value of 0
/// comes with a disconnected input, and convention values carry no witness.
pub fn cut(
    h: &Hypergraph,
    kind: Deletion,
    value: usize,
    witness: &[usize],
    attained: bool,
    pair: Option<(usize, usize)>,
) -> bool {
    if !attained {
        return witness.is_empty();
    }
    if witness.len() != value {
        return false;
    }
    let Some(r) = apply(h, kind, witness) else {
        return false;
    };
    let labels = components(&r.hypergraph);
    match pair {
        Some((u, v)) => match (r.vertex_map[u], r.vertex_map[v]) {
            (Some(a), Some(b)) => !labels.same_component(a, b),
            _ => false,
        },
        None => labels.count >= 2,
    }
}

pub fn transversal(h: &Hypergraph, value: usize, witness: &[usize]) -> bool {
    witness.len() == value && is_transversal(h, witness)
}

pub fn matching(h: &Hypergraph, value: usize, witness: &[usize]) -> bool {
    let disjoint = witness.iter().enumerate().all(|(i, &a)| {
        witness[i + 1..].iter().all(|&b| {
            let (ea, eb) = (&h.edges()[a], &h.edges()[b]);
            ea.support().all(|v| !eb.contains(v))
        })
    });
    witness.len() == value && witness.iter().all(|&e| !h.edges()[e].is_empty()) && disjoint
}

/// Groups partition the vertex set and no edge crosses between groups.
pub fn partition(h: &Hypergraph, groups: &[Vec<usize>]) -> bool {
    let mut group_of = vec![usize::MAX; h.vertex_count()];
    for (g, members) in groups.iter().enumerate() {
        for &v in members {
            if group_of[v] != usize::MAX {
                return false;
            }
            group_of[v] = g;
        }
    }
    group_of.iter().all(|&g| g != usize::MAX)
        && h.edges().iter().all(|e| {
            let mut s = e.support();
            match s.next() {
                Some(first) => s.all(|v| group_of[v] == group_of[first]),
                None => true,
            }
        })
}

fn triple(h: &Hypergraph, t: [usize; 3]) -> bool {
    let family: Vec<_> = h
        .edges()
        .iter()
        .filter(|e| t.iter().filter(|&&v| e.contains(v)).count() >= 2)
        .collect();
    !family.is_empty() && h.vertices().all(|v| family.iter().any(|e| !e.contains(v)))
}

/// Every decided verdict is backed by a witness that checks out.
pub fn classes(h: &Hypergraph, report: &ClassReport) -> bool {
    report.entries().iter().all(|(_, c)| match (&c.verdict, &c.witness) {
        (Verdict::Unknown(_), _) => true,
        (Verdict::Yes, ClassWitness::Tree(t)) => verify_representative_tree(h, t).unwrap_or(false),
        (Verdict::Yes, ClassWitness::Colouring(col)) => verify_colouring(h, col),
        (Verdict::Yes, ClassWitness::Ordering(o)) => verify_interval_ordering(h, o),
        (Verdict::No, ClassWitness::Triple(t)) => triple(h, *t),
        (Verdict::No, ClassWitness::Cycle { vertices, edges }) => {
            verify_unbalanced_cycle(h, vertices, edges)
        }
        (
            verdict,
            ClassWitness::MatchingAndTransversal {
                matching: m,
                transversal: t,
            },
        ) => {
            matching(h, m.len(), m)
                && transversal(h, t.len(), t)
                && (m.len() == t.len()) == (*verdict == Verdict::Yes)
        }
        (_, ClassWitness::None) => true,
        _ => false,
    })
}
