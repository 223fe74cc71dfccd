//! Vertex-capacitated max flow via vertex splitting and Edmonds-Karp.

use std::collections::{BTreeMap, VecDeque};

use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::SeparatorError;

pub(crate) const INF: i64 = 1 << 40;

/// Capacity of a vertex in a flow query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Capacity {
    One,
    Two,
    Infinite,
}

impl Capacity {
    fn value(self) -> i64 {
        match self {
            Capacity::One => 1,
            Capacity::Two => 2,
            Capacity::Infinite => INF,
        }
    }
}

/// Size of a maximum flow, or `Infinite` when no finite separator exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum FlowValue {
    Finite(usize),
    Infinite,
}

impl FlowValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            FlowValue::Finite(v) => Some(v),
            FlowValue::Infinite => None,
        }
    }
}

/// Sources X, sinks Y and undeletable vertices for separator computations.
///
/// Members of X, Y and the undeletable set have infinite capacity, every
/// other vertex has capacity one unless overridden.
#[derive(Debug, Clone)]
pub struct SeparatorQuery<'a> {
    pub graph: &'a Graph,
    pub sources: VertexSet,
    pub sinks: VertexSet,
    pub undeletable: VertexSet,
    pub capacities: BTreeMap<Vertex, Capacity>,
}

impl<'a> SeparatorQuery<'a> {
    pub fn new(graph: &'a Graph, sources: VertexSet, sinks: VertexSet) -> Self {
        let sources = sources.into_iter().filter(|v| graph.contains(*v)).collect();
        let sinks = sinks.into_iter().filter(|v| graph.contains(*v)).collect();
        SeparatorQuery {
            graph,
            sources,
            sinks,
            undeletable: VertexSet::new(),
            capacities: BTreeMap::new(),
        }
    }

    pub fn with_undeletable(mut self, undeletable: VertexSet) -> Self {
        self.undeletable = undeletable;
        self
    }

    pub fn with_capacity(mut self, v: Vertex, cap: Capacity) -> Self {
        self.capacities.insert(v, cap);
        self
    }

    pub fn capacity(&self, v: Vertex) -> Capacity {
        if self.sources.contains(&v) || self.sinks.contains(&v) || self.undeletable.contains(&v) {
            Capacity::Infinite
        } else {
            self.capacities.get(&v).copied().unwrap_or(Capacity::One)
        }
    }

    /// Vertices a separator may use.
    pub fn deletable(&self) -> VertexSet {
        self.graph
            .vertices()
            .filter(|v| self.capacity(*v) != Capacity::Infinite)
            .collect()
    }
}

/// A maximum flow together with a path decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flow {
    pub value: FlowValue,
    /// X-Y paths carrying the flow; empty when the value is infinite.
    pub paths: Vec<Vec<Vertex>>,
}

pub(crate) struct Network {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i64>,
}

impl Network {
    pub(crate) fn new(nodes: usize) -> Self {
        Network {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize, c: i64) {
        self.adj[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.adj[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
    }

    /// Edmonds-Karp; stops once the flow reaches `limit`.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        while total < limit {
            let mut pred = vec![usize::MAX; self.adj.len()];
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !seen[v] {
                        seen[v] = true;
                        pred[v] = e;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut bottleneck = limit - total;
            let mut v = t;
            while v != s {
                let e = pred[v];
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while v != s {
                let e = pred[v];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            total += bottleneck;
        }
        total
    }

    pub(crate) fn reach_from(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Nodes that can still reach `t` in the residual network.
    pub(crate) fn reach_to(&self, t: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[t] = true;
        let mut queue = VecDeque::from([t]);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v] {
                // e goes v -> u; its partner u -> v has residual cap[e ^ 1]
                let u = self.to[e];
                if self.cap[e ^ 1] > 0 && !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }

    /// Splits the current flow into s-t node paths, discarding circulations.
    pub(crate) fn decompose(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        // Forward edges are the even ones; flow on e is the residual of e ^ 1.
        let mut flow: Vec<i64> = (0..self.to.len())
            .map(|e| if e % 2 == 0 { self.cap[e ^ 1] } else { 0 })
            .collect();
        let mut paths = Vec::new();
        loop {
            let mut stack = vec![s];
            let mut on_stack = vec![usize::MAX; self.adj.len()];
            on_stack[s] = 0;
            let mut u = s;
            while u != t {
                let Some(&e) = self.adj[u].iter().find(|&&e| e % 2 == 0 && flow[e] > 0) else {
                    break;
                };
                flow[e] -= 1;
                let v = self.to[e];
                if on_stack[v] != usize::MAX {
                    let keep = on_stack[v] + 1;
                    for w in stack.drain(keep..) {
                        on_stack[w] = usize::MAX;
                    }
                } else {
                    on_stack[v] = stack.len();
                    stack.push(v);
                }
                u = v;
            }
            if u != t {
                break;
            }
            paths.push(stack);
        }
        paths
    }
}

/// Split network for a query: vertex i has in-node 2i and out-node 2i+1.
pub(crate) struct SplitNetwork {
    pub(crate) net: Network,
    pub(crate) index: BTreeMap<Vertex, usize>,
    pub(crate) order: Vec<Vertex>,
    pub(crate) source: usize,
    pub(crate) sink: usize,
}

impl SplitNetwork {
    pub(crate) fn build(q: &SeparatorQuery<'_>, extra_nodes: usize) -> Self {
        let order: Vec<Vertex> = q.graph.vertices().collect();
        let index: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = order.len();
        let source = 2 * n;
        let sink = 2 * n + 1;
        let mut net = Network::new(2 * n + 2 + extra_nodes);
        for (i, &v) in order.iter().enumerate() {
            net.add_edge(2 * i, 2 * i + 1, q.capacity(v).value());
        }
        for (u, v) in q.graph.edges() {
            let (iu, iv) = (index[&u], index[&v]);
            net.add_edge(2 * iu + 1, 2 * iv, INF);
            net.add_edge(2 * iv + 1, 2 * iu, INF);
        }
        for x in &q.sources {
            net.add_edge(source, 2 * index[x], INF);
        }
        for y in &q.sinks {
            net.add_edge(2 * index[y] + 1, sink, INF);
        }
        SplitNetwork { net, index, order, source, sink }
    }

    pub(crate) fn vertex_path(&self, nodes: &[usize]) -> Vec<Vertex> {
        let mut path: Vec<Vertex> = Vec::new();
        for &node in nodes {
            if node >= 2 * self.order.len() {
                continue;
            }
            let v = self.order[node / 2];
            if path.last() != Some(&v) {
                path.push(v);
            }
        }
        path
    }
}

/// Maximum number of X-Y paths respecting vertex capacities.
pub fn max_vertex_flow(q: &SeparatorQuery<'_>) -> Flow {
    if !q.sources.is_disjoint(&q.sinks) {
        return Flow { value: FlowValue::Infinite, paths: Vec::new() };
    }
    let mut sn = SplitNetwork::build(q, 0);
    let value = sn.net.max_flow(sn.source, sn.sink, INF);
    if value >= INF {
        return Flow { value: FlowValue::Infinite, paths: Vec::new() };
    }
    let paths = sn
        .net
        .decompose(sn.source, sn.sink)
        .iter()
        .map(|p| sn.vertex_path(p))
        .collect();
    Flow { value: FlowValue::Finite(value as usize), paths }
}

/// Runs the flow and returns the network, or `None` if the value is infinite.
fn saturated(q: &SeparatorQuery<'_>) -> Option<SplitNetwork> {
    if !q.sources.is_disjoint(&q.sinks) {
        return None;
    }
    let mut sn = SplitNetwork::build(q, 0);
    let value = sn.net.max_flow(sn.source, sn.sink, INF);
    (value < INF).then_some(sn)
}

/// The minimum separator closest to X.
pub fn min_separator(q: &SeparatorQuery<'_>) -> Result<VertexSet, SeparatorError> {
    let sn = saturated(q).ok_or(SeparatorError::NoFiniteSeparator)?;
    let reach = sn.net.reach_from(sn.source);
    Ok(sn
        .order
        .iter()
        .enumerate()
        .filter(|(i, _)| reach[2 * i] && !reach[2 * i + 1])
        .map(|(_, &v)| v)
        .collect())
}

/// The minimum separator furthest from X, with the X-side reachable set R.
pub(crate) fn furthest_min_separator(q: &SeparatorQuery<'_>) -> Option<(VertexSet, VertexSet)> {
    let sn = saturated(q)?;
    let to_sink = sn.net.reach_to(sn.sink);
    let cut: VertexSet = sn
        .order
        .iter()
        .enumerate()
        .filter(|(i, _)| !to_sink[2 * i] && to_sink[2 * i + 1])
        .map(|(_, &v)| v)
        .collect();
    let r = q.graph.reachable_avoiding(&q.sources, &cut);
    Some((cut, r))
}

/// True if every X-Y path in `g` meets `s`.
pub fn is_separator(g: &Graph, sources: &VertexSet, sinks: &VertexSet, s: &VertexSet) -> bool {
    g.reachable_avoiding(sources, s).is_disjoint(sinks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn path_has_unit_flow() {
        let g = Graph::from_edges([(1, 2), (2, 3)]).unwrap();
        let f = max_vertex_flow(&SeparatorQuery::new(&g, set(&[1]), set(&[3])));
        assert_eq!(f.value, FlowValue::Finite(1));
        assert_eq!(f.paths, vec![vec![1, 2, 3]]);
    }

    #[test]
    fn parallel_routes() {
        let g = Graph::from_edges([(1, 2), (2, 4), (1, 3), (3, 4)]).unwrap();
        let q = SeparatorQuery::new(&g, set(&[1]), set(&[4]));
        assert_eq!(max_vertex_flow(&q).value, FlowValue::Finite(2));
        let q = q.with_undeletable(set(&[2, 3]));
        assert_eq!(max_vertex_flow(&q).value, FlowValue::Infinite);
    }

    #[test]
    fn leftmost_and_rightmost_cuts() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4)]).unwrap();
        let q = SeparatorQuery::new(&g, set(&[1]), set(&[4]));
        assert_eq!(min_separator(&q).unwrap(), set(&[2]));
        let (cut, r) = furthest_min_separator(&q).unwrap();
        assert_eq!(cut, set(&[3]));
        assert_eq!(r, set(&[1, 2]));
    }

    #[test]
    fn disconnected_sides_need_nothing() {
        let g = Graph::with_vertices([1, 2]);
        let q = SeparatorQuery::new(&g, set(&[1]), set(&[2]));
        assert_eq!(min_separator(&q).unwrap(), VertexSet::new());
    }

    #[test]
    fn adjacent_sides_have_no_separator() {
        let g = Graph::from_edges([(1, 2)]).unwrap();
        let q = SeparatorQuery::new(&g, set(&[1]), set(&[2]));
        assert_eq!(min_separator(&q), Err(SeparatorError::NoFiniteSeparator));
    }
}
