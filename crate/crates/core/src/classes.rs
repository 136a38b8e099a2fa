//! Recognition of arboreal, Helly, bicolourable, totally balanced and
//! interval hypergraphs, plus the König property.
//!
//! Each recognizer returns a [`ClassVerdict`]: a yes/no/unknown answer and,
//! where one exists, a witness that can be checked independently.

use crate::bits::{self, Mask};
use crate::budget::{Budgets, Meter};
use crate::connectivity::components;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};
use crate::transversal::{alpha, tau};

/// A spanning forest on `0..n` stored as a parent array; roots have no
/// parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentativeTree {
    parent: Vec<Option<VertexId>>,
}

impl RepresentativeTree {
    /// Checks ids and acyclicity.
    pub fn new(parent: Vec<Option<VertexId>>) -> Result<Self> {
        let n = parent.len();
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(Error::MalformedTree(format!("parent {p} of {v} out of range")));
                }
            }
        }
        for start in 0..n {
            let mut cur = start;
            let mut steps = 0;
            while let Some(p) = parent[cur] {
                cur = p;
                steps += 1;
                if steps > n {
                    return Err(Error::MalformedTree(format!("cycle through vertex {start}")));
                }
            }
        }
        Ok(RepresentativeTree { parent })
    }

    /// Roots each component of the forest given by `edges` at its smallest
    /// vertex.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::MalformedTree(format!("edge ({a}, {b}) out of range")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        let mut tree_edges = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = Some(x);
                        tree_edges += 1;
                        stack.push(y);
                    }
                }
            }
        }
        if tree_edges != edges.len() {
            return Err(Error::MalformedTree("edge list contains a cycle".into()));
        }
        Ok(RepresentativeTree { parent })
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self) -> &[Option<VertexId>] {
        &self.parent
    }

    /// Tree edges as `(child, parent)`.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(v, p)| p.map(|p| (v, p)))
            .collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.parent.len()];
        for (a, b) in self.edges() {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Vertices of degree at least 2, in increasing order.
    pub fn non_leaves(&self) -> Vec<VertexId> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d >= 2)
            .map(|(v, _)| v)
            .collect()
    }
}

/// True when every edge's support induces a connected subgraph of `t`.
pub fn verify_representative_tree(h: &Hypergraph, t: &RepresentativeTree) -> Result<bool> {
    if t.vertex_count() != h.vertex_count() {
        return Err(Error::MalformedTree(format!(
            "tree has {} vertices, hypergraph has {}",
            t.vertex_count(),
            h.vertex_count()
        )));
    }
    let tree_edges = t.edges();
    Ok(h.edges().iter().all(|e| {
        // In a forest, a vertex set induces a subtree iff it spans
        // exactly |S| − 1 forest edges.
        let inside = tree_edges
            .iter()
            .filter(|&&(a, b)| e.contains(a) && e.contains(b))
            .count();
        e.is_empty() || inside + 1 == e.cardinality()
    }))
}

fn edge_supports(h: &Hypergraph) -> Vec<Vec<VertexId>> {
    h.edges().iter().map(|e| e.support().collect()).collect()
}

/// Number of edges containing both endpoints, for every pair that shares
/// an edge.
fn weighted_pairs(h: &Hypergraph) -> Vec<(usize, VertexId, VertexId)> {
    let mut weight = std::collections::BTreeMap::new();
    for s in edge_supports(h) {
        for (i, &a) in s.iter().enumerate() {
            for &b in &s[i + 1..] {
                *weight.entry((a, b)).or_insert(0usize) += 1;
            }
        }
    }
    weight.into_iter().map(|((a, b), w)| (w, a, b)).collect()
}

fn find(label: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while label[r] != r {
        r = label[r];
    }
    let mut c = x;
    while label[c] != r {
        let next = label[c];
        label[c] = r;
        c = next;
    }
    r
}

/// Maximum-weight spanning forest of the 2-section, weights counting shared
/// edges (Kruskal, ties by lowest pair).
fn heaviest_spanning_forest(h: &Hypergraph) -> Vec<(VertexId, VertexId)> {
    let mut pairs = weighted_pairs(h);
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let mut label: Vec<usize> = (0..h.vertex_count()).collect();
    let mut chosen = Vec::new();
    for (_, a, b) in pairs {
        let (ra, rb) = (find(&mut label, a), find(&mut label, b));
        if ra != rb {
            label[ra] = rb;
            chosen.push((a, b));
        }
    }
    chosen
}

/// Depth-first enumeration of the spanning trees of one component, edges
/// included in list order. Calls `accept` on each complete tree and stops
/// as soon as it returns true.
struct TreeSearch<'a> {
    pairs: &'a [(VertexId, VertexId)],
    needed: usize,
    chosen: Vec<(VertexId, VertexId)>,
    meter: &'a mut Meter,
}

impl TreeSearch<'_> {
    fn run(
        &mut self,
        from: usize,
        label: &[usize],
        accept: &mut dyn FnMut(&[(VertexId, VertexId)]) -> bool,
    ) -> Result<bool> {
        if self.chosen.len() == self.needed {
            self.meter.tick()?;
            return Ok(accept(&self.chosen));
        }
        if self.pairs.len() - from < self.needed - self.chosen.len() {
            return Ok(false);
        }
        for i in from..self.pairs.len() {
            let (a, b) = self.pairs[i];
            if label[a] == label[b] {
                continue;
            }
            let (keep, drop) = (label[a], label[b]);
            let merged: Vec<usize> = label
                .iter()
                .map(|&l| if l == drop { keep } else { l })
                .collect();
            self.chosen.push((a, b));
            let found = self.run(i + 1, &merged, accept)?;
            self.chosen.pop();
            if found {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Searches for a representative tree.
///
/// Every representative tree of a connected hypergraph is a spanning tree of
/// its 2-section, and the edges of `h` split along components, so each
/// component is searched on its own. The heaviest spanning forest of the
/// weighted 2-section is tried first; after that spanning trees are
/// enumerated exhaustively, with `tree_budget` bounding the number tested.
pub fn find_representative_tree(
    h: &Hypergraph,
    tree_budget: u64,
) -> Result<Option<RepresentativeTree>> {
    let n = h.vertex_count();
    let quick = RepresentativeTree::from_edges(n, &heaviest_spanning_forest(h))?;
    if verify_representative_tree(h, &quick)? {
        return Ok(Some(quick));
    }
    let mut meter = Meter::new("trees", tree_budget);
    let labeling = components(h);
    let supports = edge_supports(h);
    let all_pairs: Vec<(VertexId, VertexId)> =
        weighted_pairs(h).into_iter().map(|(_, a, b)| (a, b)).collect();
    let mut forest = Vec::new();
    for group in labeling.groups() {
        if group.len() == 1 {
            continue;
        }
        let comp = labeling.labels[group[0]];
        let pairs: Vec<_> = all_pairs
            .iter()
            .copied()
            .filter(|&(a, _)| labeling.labels[a] == comp)
            .collect();
        let local: Vec<&Vec<VertexId>> = supports
            .iter()
            .filter(|s| s.len() >= 2 && labeling.labels[s[0]] == comp)
            .collect();
        let mut found = None;
        let mut accept = |tree: &[(VertexId, VertexId)]| {
            let ok = local.iter().all(|s| {
                tree.iter()
                    .filter(|(a, b)| s.binary_search(a).is_ok() && s.binary_search(b).is_ok())
                    .count()
                    + 1
                    == s.len()
            });
            if ok {
                found = Some(tree.to_vec());
            }
            ok
        };
        let label: Vec<usize> = (0..n).collect();
        let mut search = TreeSearch {
            pairs: &pairs,
            needed: group.len() - 1,
            chosen: Vec::new(),
            meter: &mut meter,
        };
        search.run(0, &label, &mut accept)?;
        match found {
            Some(tree) => forest.extend(tree),
            None => return Ok(None),
        }
    }
    let tree = RepresentativeTree::from_edges(n, &forest)?;
    debug_assert!(verify_representative_tree(h, &tree)?);
    Ok(Some(tree))
}

/// Answer of a recognizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    /// Undecided, with the reason (usually an exhausted budget).
    Unknown(String),
}

/// Evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassWitness {
    None,
    Tree(RepresentativeTree),
    /// Colour per vertex.
    Colouring(Vec<bool>),
    /// Three vertices whose pairwise-covering edges share no vertex.
    Triple([VertexId; 3]),
    /// Cycle `v_1, e_1, …, v_s, e_s` closing back at `v_1`.
    Cycle {
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
    },
    Ordering(Vec<VertexId>),
    /// A maximum matching and a minimum transversal.
    MatchingAndTransversal {
        matching: Vec<EdgeId>,
        transversal: Vec<VertexId>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassVerdict {
    pub verdict: Verdict,
    pub witness: ClassWitness,
}

impl ClassVerdict {
    fn yes(witness: ClassWitness) -> Self {
        ClassVerdict {
            verdict: Verdict::Yes,
            witness,
        }
    }

    fn no(witness: ClassWitness) -> Self {
        ClassVerdict {
            verdict: Verdict::No,
            witness,
        }
    }

    fn unknown(reason: impl Into<String>) -> Self {
        ClassVerdict {
            verdict: Verdict::Unknown(reason.into()),
            witness: ClassWitness::None,
        }
    }

    /// Maps budget and size errors to an unknown verdict.
    fn from_result(r: Result<ClassVerdict>) -> Self {
        r.unwrap_or_else(|e| ClassVerdict::unknown(e.to_string()))
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Verdict::Yes
    }

    pub fn is_no(&self) -> bool {
        self.verdict == Verdict::No
    }
}

/// Backtracking 2-colouring in which no edge of cardinality at least two is
/// monochromatic. `budget` bounds the number of partial colourings visited.
pub fn is_bicolourable(h: &Hypergraph, budget: u64) -> ClassVerdict {
    let n = h.vertex_count();
    // Each edge is checked once its largest vertex has a colour.
    let mut closing: Vec<Vec<Vec<VertexId>>> = vec![Vec::new(); n];
    for s in edge_supports(h) {
        if s.len() >= 2 {
            closing[*s.last().expect("nonempty")].push(s);
        }
    }
    fn extend(
        v: usize,
        colour: &mut Vec<bool>,
        closing: &[Vec<Vec<VertexId>>],
        meter: &mut Meter,
    ) -> Result<bool> {
        if v == closing.len() {
            return Ok(true);
        }
        for c in [false, true] {
            meter.tick()?;
            colour.push(c);
            let ok = closing[v]
                .iter()
                .all(|s| s.iter().any(|&w| colour[w] != colour[s[0]]));
            if ok && extend(v + 1, colour, closing, meter)? {
                return Ok(true);
            }
            colour.pop();
        }
        Ok(false)
    }
    let mut meter = Meter::new("colourings", budget);
    let mut colour = Vec::with_capacity(n);
    match extend(0, &mut colour, &closing, &mut meter) {
        Ok(true) => ClassVerdict::yes(ClassWitness::Colouring(colour)),
        Ok(false) => ClassVerdict::no(ClassWitness::None),
        Err(e) => ClassVerdict::unknown(e.to_string()),
    }
}

/// True when no edge of cardinality at least two is monochromatic.
pub fn verify_colouring(h: &Hypergraph, colour: &[bool]) -> bool {
    colour.len() == h.vertex_count()
        && h.edges().iter().filter(|e| e.cardinality() >= 2).all(|e| {
            let first = colour[e.support().next().expect("nonempty")];
            e.support().any(|v| colour[v] != first)
        })
}

/// Helly test through triples: the property holds iff, for every three
/// vertices, the edges containing at least two of them share a vertex.
pub fn is_helly(h: &Hypergraph) -> ClassVerdict {
    let supports: Vec<Vec<VertexId>> = edge_supports(h)
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect();
    let n = h.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let mut common: Option<Vec<VertexId>> = None;
                for s in &supports {
                    let hits = [a, b, c]
                        .iter()
                        .filter(|x| s.binary_search(x).is_ok())
                        .count();
                    if hits < 2 {
                        continue;
                    }
                    common = Some(match common {
                        None => s.clone(),
                        Some(cur) => cur
                            .into_iter()
                            .filter(|x| s.binary_search(x).is_ok())
                            .collect(),
                    });
                }
                if common.is_some_and(|c| c.is_empty()) {
                    return ClassVerdict::no(ClassWitness::Triple([a, b, c]));
                }
            }
        }
    }
    ClassVerdict::yes(ClassWitness::None)
}

/// Helly test straight from the definition: every subfamily of pairwise
/// intersecting nonempty edges has a common vertex. Limited to 12 nonempty
/// edges.
pub fn helly_by_subfamilies(h: &Hypergraph) -> Result<bool> {
    let mh = bits::MaskedHypergraph::new(h)?;
    let edges: Vec<Mask> = mh.supports.into_iter().filter(|&s| s != 0).collect();
    if edges.len() > 12 {
        return Err(Error::TooLarge {
            what: "nonempty edges",
            limit: 12,
            got: edges.len(),
        });
    }
    for family in 1u32..(1 << edges.len()) {
        let members: Vec<Mask> = (0..edges.len())
            .filter(|i| family & (1 << i) != 0)
            .map(|i| edges[i])
            .collect();
        let pairwise = members
            .iter()
            .enumerate()
            .all(|(i, a)| members[i + 1..].iter().all(|b| a & b != 0));
        if pairwise && members.iter().fold(Mask::MAX, |acc, m| acc & m) == 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Searches for a cycle of length at least 3 in which no edge of the cycle
/// contains three of its vertices.
///
/// A partial cycle whose edges already meet a third cycle vertex can never
/// become a violation, so such branches are cut immediately. `budget`
/// bounds the number of search steps.
pub fn is_totally_balanced(h: &Hypergraph, budget: u64) -> ClassVerdict {
    ClassVerdict::from_result(totally_balanced_search(h, budget))
}

fn totally_balanced_search(h: &Hypergraph, budget: u64) -> Result<ClassVerdict> {
    let mh = bits::MaskedHypergraph::new(h)?;
    let supports = mh.supports;
    let incident = h.incidence_lists();
    let mut meter = Meter::new("cycles", budget);

    struct State<'a> {
        supports: &'a [Mask],
        incident: &'a [Vec<EdgeId>],
        start: VertexId,
        vertices: Vec<VertexId>,
        edges: Vec<EdgeId>,
        on_path: Mask,
    }

    fn grow(st: &mut State, meter: &mut Meter) -> Result<bool> {
        meter.tick()?;
        let x = *st.vertices.last().expect("path has a start");
        for &e in &st.incident[x] {
            if st.edges.contains(&e) {
                continue;
            }
            let s = st.supports[e];
            // The new edge may meet the path only in `x` (and the start when
            // it closes the cycle).
            let others = s & st.on_path & !bits::bit(x) & !bits::bit(st.start);
            if others != 0 {
                continue;
            }
            if st.vertices.len() >= 3 && s & bits::bit(st.start) != 0 && x != st.start {
                st.edges.push(e);
                return Ok(true);
            }
            if st.vertices.len() > 1 && s & bits::bit(st.start) != 0 {
                // Closing too early; continuing through this edge would put
                // the start inside it as a third vertex later.
                continue;
            }
            let mut next = s & !st.on_path;
            while next != 0 {
                let y = next.trailing_zeros() as usize;
                next &= next - 1;
                if y < st.start {
                    continue;
                }
                // Earlier edges must not contain the new vertex.
                if st.edges.iter().any(|&f| st.supports[f] & bits::bit(y) != 0) {
                    continue;
                }
                st.vertices.push(y);
                st.edges.push(e);
                st.on_path |= bits::bit(y);
                if grow(st, meter)? {
                    return Ok(true);
                }
                st.on_path &= !bits::bit(y);
                st.edges.pop();
                st.vertices.pop();
            }
        }
        Ok(false)
    }

    for start in h.vertices() {
        let mut st = State {
            supports: &supports,
            incident: &incident,
            start,
            vertices: vec![start],
            edges: Vec::new(),
            on_path: bits::bit(start),
        };
        if grow(&mut st, &mut meter)? {
            return Ok(ClassVerdict::no(ClassWitness::Cycle {
                vertices: st.vertices,
                edges: st.edges,
            }));
        }
    }
    Ok(ClassVerdict::yes(ClassWitness::None))
}

/// Checks that `vertices`/`edges` form a cycle of length at least 3 in `h`
/// in which no cycle edge holds three cycle vertices.
pub fn verify_unbalanced_cycle(h: &Hypergraph, vertices: &[VertexId], edges: &[EdgeId]) -> bool {
    let s = vertices.len();
    if s < 3 || edges.len() != s {
        return false;
    }
    let mut vs = vertices.to_vec();
    vs.sort_unstable();
    vs.dedup();
    let mut es = edges.to_vec();
    es.sort_unstable();
    es.dedup();
    if vs.len() != s || es.len() != s || es.iter().any(|&e| e >= h.edge_count()) {
        return false;
    }
    (0..s).all(|i| {
        let e = &h.edges()[edges[i]];
        e.contains(vertices[i])
            && e.contains(vertices[(i + 1) % s])
            && vertices.iter().filter(|&&v| e.contains(v)).count() < 3
    })
}

/// Searches for a vertex ordering in which every edge is an interval.
///
/// Vertices are placed left to right; an edge that has been started but
/// not finished must contain the next vertex. `budget` bounds the number
/// of placements tried.
pub fn is_interval(h: &Hypergraph, budget: u64) -> ClassVerdict {
    ClassVerdict::from_result(interval_search(h, budget))
}

fn interval_search(h: &Hypergraph, budget: u64) -> Result<ClassVerdict> {
    let mh = bits::MaskedHypergraph::new(h)?;
    let edges: Vec<Mask> = mh.supports.into_iter().filter(|s| s.count_ones() >= 2).collect();
    let n = h.vertex_count();
    let mut meter = Meter::new("orderings", budget);

    fn place(
        order: &mut Vec<VertexId>,
        placed: Mask,
        n: usize,
        edges: &[Mask],
        meter: &mut Meter,
    ) -> Result<bool> {
        if order.len() == n {
            return Ok(true);
        }
        let open: Vec<Mask> = edges
            .iter()
            .copied()
            .filter(|&e| e & placed != 0 && e & !placed != 0)
            .collect();
        for y in 0..n {
            if placed & bits::bit(y) != 0 {
                continue;
            }
            if open.iter().any(|&e| e & bits::bit(y) == 0) {
                continue;
            }
            meter.tick()?;
            order.push(y);
            if place(order, placed | bits::bit(y), n, edges, meter)? {
                return Ok(true);
            }
            order.pop();
        }
        Ok(false)
    }

    let mut order = Vec::with_capacity(n);
    if place(&mut order, 0, n, &edges, &mut meter)? {
        Ok(ClassVerdict::yes(ClassWitness::Ordering(order)))
    } else {
        Ok(ClassVerdict::no(ClassWitness::None))
    }
}

/// True when `order` is a permutation of the vertices in which every edge
/// occupies consecutive positions.
pub fn verify_interval_ordering(h: &Hypergraph, order: &[VertexId]) -> bool {
    let n = h.vertex_count();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.len() == n
        && h.edges().iter().filter(|e| !e.is_empty()).all(|e| {
            let ps: Vec<usize> = e.support().map(|v| pos[v]).collect();
            let (lo, hi) = (ps.iter().min().unwrap(), ps.iter().max().unwrap());
            hi - lo + 1 == ps.len()
        })
}

/// Verdicts for every class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub interval: ClassVerdict,
    pub totally_balanced: ClassVerdict,
    pub arboreal: ClassVerdict,
    pub helly: ClassVerdict,
    pub konig: ClassVerdict,
    pub bicolourable: ClassVerdict,
    /// Never decided.
    pub normal: ClassVerdict,
}

impl ClassReport {
    /// `(name, verdict)` pairs in hierarchy order.
    pub fn entries(&self) -> [(&'static str, &ClassVerdict); 7] {
        [
            ("interval", &self.interval),
            ("totally_balanced", &self.totally_balanced),
            ("arboreal", &self.arboreal),
            ("helly", &self.helly),
            ("konig", &self.konig),
            ("bicolourable", &self.bicolourable),
            ("normal", &self.normal),
        ]
    }

    /// Implications among decided verdicts that fail:
    /// interval ⇒ totally balanced ⇒ arboreal ⇒ Helly, König, bicolourable.
    pub fn hierarchy_violations(&self) -> Vec<(&'static str, &'static str)> {
        let rules = [
            ("interval", &self.interval, "totally_balanced", &self.totally_balanced),
            ("totally_balanced", &self.totally_balanced, "arboreal", &self.arboreal),
            ("arboreal", &self.arboreal, "helly", &self.helly),
            ("arboreal", &self.arboreal, "konig", &self.konig),
            ("arboreal", &self.arboreal, "bicolourable", &self.bicolourable),
        ];
        rules
            .into_iter()
            .filter(|(_, a, _, b)| a.is_yes() && b.is_no())
            .map(|(a, _, b, _)| (a, b))
            .collect()
    }
}

/// Runs every recognizer under `budgets`.
pub fn classify(h: &Hypergraph, budgets: &Budgets) -> ClassReport {
    let arboreal = match find_representative_tree(h, budgets.trees) {
        Ok(Some(t)) => ClassVerdict::yes(ClassWitness::Tree(t)),
        Ok(None) => ClassVerdict::no(ClassWitness::None),
        Err(e) => ClassVerdict::unknown(e.to_string()),
    };
    let t = tau(h);
    let a = alpha(h);
    let witness = ClassWitness::MatchingAndTransversal {
        matching: a.witness,
        transversal: t.witness,
    };
    let konig = if a.alpha == t.tau {
        ClassVerdict::yes(witness)
    } else {
        ClassVerdict::no(witness)
    };
    ClassReport {
        interval: is_interval(h, budgets.orderings),
        totally_balanced: is_totally_balanced(h, budgets.cycles),
        arboreal,
        helly: is_helly(h),
        konig,
        bicolourable: is_bicolourable(h, budgets.colourings),
        normal: ClassVerdict::unknown("normality is not tested"),
    }
}
