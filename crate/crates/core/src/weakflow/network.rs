//! Directed unit/infinite capacity networks and an Edmonds–Karp max-flow.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, VertexId};

/// What a network node stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    /// `v_in` of a split vertex.
    VertexIn(VertexId),
    /// `v_out` of a split vertex.
    VertexOut(VertexId),
    /// An unsplit hypergraph vertex (edge-split networks).
    Vertex(VertexId),
    /// An unsplit hyperedge (vertex-split networks).
    Edge(EdgeId),
    /// `e_in` of a split edge.
    EdgeIn(EdgeId),
    /// `e_out` of a split edge.
    EdgeOut(EdgeId),
    /// A node of a hand-built network.
    Plain(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: u64,
}

/// A single-source single-sink network whose capacities are either 1 or
/// the "infinite" value `infinity`, which is one more than the number of
/// unit arcs so that any cut using only unit arcs stays below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: Vec<NodeKind>,
    arcs: Vec<Arc>,
    source: usize,
    sink: usize,
    infinity: u64,
}

impl FlowNetwork {
    /// Assembles a network from explicit parts.
    pub fn from_parts(
        nodes: Vec<NodeKind>,
        arcs: Vec<Arc>,
        source: usize,
        sink: usize,
        infinity: u64,
    ) -> Result<Self> {
        let count = nodes.len();
        if source >= count || sink >= count || source == sink {
            return Err(Error::InvalidParameter(format!(
                "source {source} / sink {sink} invalid for {count} nodes"
            )));
        }
        if let Some(a) = arcs.iter().find(|a| a.from >= count || a.to >= count) {
            return Err(Error::InvalidParameter(format!(
                "arc {}→{} leaves the node range",
                a.from, a.to
            )));
        }
        Ok(FlowNetwork {
            nodes,
            arcs,
            source,
            sink,
            infinity,
        })
    }

    pub fn nodes(&self) -> &[NodeKind] {
        &self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn infinity(&self) -> u64 {
        self.infinity
    }

    pub fn unit_arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter().filter(|a| a.capacity == 1)
    }

    pub fn node_index(&self, kind: NodeKind) -> Option<usize> {
        self.nodes.iter().position(|&k| k == kind)
    }
}

/// Vertex-split network for separating `u` from `v` by weak vertex
/// deletion.
///
/// Every vertex `w` other than `u`, `v` becomes `w_in → w_out` with
/// capacity 1; `u` keeps only `u_out` (the source) and `v` only `v_in`
/// (the sink). Each edge `e` becomes a node with arcs `w_out → e` and
/// `e → w_in` of infinite capacity for its members.
pub fn build_vertex_split_network(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<FlowNetwork> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    let n = h.vertex_count();
    let mut nodes = Vec::new();
    let mut in_node = vec![usize::MAX; n];
    let mut out_node = vec![usize::MAX; n];
    for w in h.vertices() {
        if w != u {
            in_node[w] = nodes.len();
            nodes.push(NodeKind::VertexIn(w));
        }
        if w != v {
            out_node[w] = nodes.len();
            nodes.push(NodeKind::VertexOut(w));
        }
    }
    let first_edge = nodes.len();
    nodes.extend((0..h.edge_count()).map(NodeKind::Edge));

    let infinity = n as u64 - 1; // (n - 2) unit arcs, plus one
    let mut arcs = Vec::new();
    for w in h.vertices() {
        if w != u && w != v {
            arcs.push(Arc {
                from: in_node[w],
                to: out_node[w],
                capacity: 1,
            });
        }
    }
    for (i, e) in h.edges().iter().enumerate() {
        for w in e.support() {
            if w != v {
                arcs.push(Arc {
                    from: out_node[w],
                    to: first_edge + i,
                    capacity: infinity,
                });
            }
            if w != u {
                arcs.push(Arc {
                    from: first_edge + i,
                    to: in_node[w],
                    capacity: infinity,
                });
            }
        }
    }
    FlowNetwork::from_parts(nodes, arcs, out_node[u], in_node[v], infinity)
}

/// Edge-split network for separating `u` from `v` by weak edge deletion:
/// every edge becomes `e_in → e_out` with capacity 1, vertices stay whole
/// and link to their edges with infinite arcs.
pub fn build_edge_split_network(h: &Hypergraph, u: VertexId, v: VertexId) -> Result<FlowNetwork> {
    h.check_vertex(u)?;
    h.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    let n = h.vertex_count();
    let m = h.edge_count();
    let mut nodes: Vec<NodeKind> = h.vertices().map(NodeKind::Vertex).collect();
    for e in 0..m {
        nodes.push(NodeKind::EdgeIn(e));
        nodes.push(NodeKind::EdgeOut(e));
    }
    let infinity = m as u64 + 1;
    let mut arcs = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        let (e_in, e_out) = (n + 2 * i, n + 2 * i + 1);
        arcs.push(Arc {
            from: e_in,
            to: e_out,
            capacity: 1,
        });
        for w in e.support() {
            arcs.push(Arc {
                from: w,
                to: e_in,
                capacity: infinity,
            });
            arcs.push(Arc {
                from: e_out,
                to: w,
                capacity: infinity,
            });
        }
    }
    FlowNetwork::from_parts(nodes, arcs, u, v, infinity)
}

/// Result of a max-flow computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    /// Flow value; at least `infinity` when an infinite-capacity path exists
    /// (augmentation stops as soon as that threshold is reached).
    pub value: u64,
    /// Nodes reachable from the source in the final residual network. The
    /// arcs leaving this set form a minimum cut when the value is finite.
    pub source_side: Vec<bool>,
    /// Flow on each arc of the network, in arc order.
    pub arc_flow: Vec<u64>,
    infinity: u64,
}

impl MaxFlow {
    pub fn is_infinite(&self) -> bool {
        self.value >= self.infinity
    }

    /// Splits a finite flow into `value` source–sink node paths.
    pub fn decompose(&self, net: &FlowNetwork) -> Vec<Vec<usize>> {
        let mut remaining = self.arc_flow.clone();
        let mut out_arcs = vec![Vec::new(); net.nodes.len()];
        for (i, a) in net.arcs.iter().enumerate() {
            out_arcs[a.from].push(i);
        }
        let mut paths = Vec::new();
        if self.is_infinite() {
            return paths;
        }
        for _ in 0..self.value {
            let mut path = vec![net.source];
            let mut x = net.source;
            while x != net.sink {
                let Some(&a) = out_arcs[x].iter().find(|&&a| remaining[a] > 0) else {
                    break;
                };
                remaining[a] -= 1;
                x = net.arcs[a].to;
                path.push(x);
            }
            if x == net.sink {
                paths.push(path);
            }
        }
        paths
    }
}

/// Shortest-augmenting-path max flow (Edmonds–Karp).
pub fn max_flow_min_cut(net: &FlowNetwork) -> MaxFlow {
    let count = net.nodes.len();
    // Residual arcs: 2i forward, 2i + 1 backward.
    let mut head = Vec::with_capacity(net.arcs.len() * 2);
    let mut residual = Vec::with_capacity(net.arcs.len() * 2);
    let mut adj = vec![Vec::new(); count];
    for (i, a) in net.arcs.iter().enumerate() {
        head.push(a.to);
        residual.push(a.capacity);
        adj[a.from].push(2 * i);
        head.push(a.from);
        residual.push(0);
        adj[a.to].push(2 * i + 1);
    }

    let mut value = 0u64;
    loop {
        if value >= net.infinity {
            break;
        }
        let mut via = vec![usize::MAX; count];
        let mut seen = vec![false; count];
        seen[net.source] = true;
        let mut queue = VecDeque::from([net.source]);
        while let Some(x) = queue.pop_front() {
            if x == net.sink {
                break;
            }
            for &r in &adj[x] {
                let y = head[r];
                if residual[r] > 0 && !seen[y] {
                    seen[y] = true;
                    via[y] = r;
                    queue.push_back(y);
                }
            }
        }
        if !seen[net.sink] {
            break;
        }
        let mut bottleneck = u64::MAX;
        let mut y = net.sink;
        while y != net.source {
            let r = via[y];
            bottleneck = bottleneck.min(residual[r]);
            y = head[r ^ 1];
        }
        let mut y = net.sink;
        while y != net.source {
            let r = via[y];
            residual[r] -= bottleneck;
            residual[r ^ 1] += bottleneck;
            y = head[r ^ 1];
        }
        value += bottleneck;
    }

    let mut source_side = vec![false; count];
    source_side[net.source] = true;
    let mut stack = vec![net.source];
    while let Some(x) = stack.pop() {
        for &r in &adj[x] {
            let y = head[r];
            if residual[r] > 0 && !source_side[y] {
                source_side[y] = true;
                stack.push(y);
            }
        }
    }
    let arc_flow = (0..net.arcs.len()).map(|i| residual[2 * i + 1]).collect();
    MaxFlow {
        value,
        source_side,
        arc_flow,
        infinity: net.infinity,
    }
}
