//! Undirected simple graphs with stable vertex ids.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

/// Vertex identifier. Ids are positive and stable under deletions.
pub type Vertex = usize;

/// Ordered vertex set used throughout the crate.
pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("unknown vertex {0}")]
    UnknownVertex(Vertex),
    #[error("vertex id must be at least 1")]
    ZeroVertex,
}

/// An undirected simple graph.
///
/// Adjacency is kept symmetric; removing a vertex drops its incident edges.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Vertex, VertexSet>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph on the given vertices with no edges.
    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        let mut g = Self::new();
        for v in vertices {
            g.adj.entry(v).or_default();
        }
        g
    }

    /// Builds a graph from an edge list; endpoints are added as needed.
    pub fn from_edges<I: IntoIterator<Item = (Vertex, Vertex)>>(edges: I) -> Result<Self, GraphError> {
        let mut g = Self::new();
        for (u, v) in edges {
            g.add_vertex(u)?;
            g.add_vertex(v)?;
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: Vertex) -> Result<(), GraphError> {
        if v == 0 {
            return Err(GraphError::ZeroVertex);
        }
        self.adj.entry(v).or_default();
        Ok(())
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for w in [u, v] {
            if !self.adj.contains_key(&w) {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if !self.adj.get_mut(&u).expect("checked above").insert(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj.get_mut(&v).expect("checked above").insert(u);
        Ok(())
    }

    /// Removes `v` and its incident edges. Returns whether it was present.
    pub fn remove_vertex(&mut self, v: Vertex) -> bool {
        match self.adj.remove(&v) {
            Some(nbrs) => {
                for w in nbrs {
                    if let Some(s) = self.adj.get_mut(&w) {
                        s.remove(&v);
                    }
                }
                true
            }
            None => false,
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let found = self.adj.get_mut(&u).is_some_and(|s| s.remove(&v));
        if found {
            self.adj.get_mut(&v).expect("symmetric").remove(&u);
        }
        found
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Neighbours of `v`. Panics if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        self.adj.get(&v).unwrap_or_else(|| panic!("vertex {v} not in graph"))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    /// Open neighbourhood of a set: N(S) without S.
    pub fn neighborhood(&self, set: &VertexSet) -> VertexSet {
        set.iter()
            .filter(|v| self.contains(**v))
            .flat_map(|v| self.neighbors(*v).iter().copied())
            .filter(|w| !set.contains(w))
            .collect()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nbrs)| nbrs.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn num_vertices(&self) -> usize {
        self.adj.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adj.values().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// G - S.
    pub fn without(&self, removed: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| !removed.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.iter().copied().filter(|w| !removed.contains(w)).collect()))
            .collect();
        Graph { adj }
    }

    pub fn without_vertex(&self, v: Vertex) -> Graph {
        let mut g = self.clone();
        g.remove_vertex(v);
        g
    }

    /// G[S]; vertices of `keep` missing from the graph are ignored.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| keep.contains(v))
            .map(|(&v, nbrs)| (v, nbrs.iter().copied().filter(|w| keep.contains(w)).collect()))
            .collect();
        Graph { adj }
    }

    /// True if no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter()
            .filter(|v| self.contains(**v))
            .all(|v| self.neighbors(*v).is_disjoint(set))
    }

    /// Vertices reachable from `start` while never entering `blocked`.
    pub fn reachable_avoiding(&self, start: &VertexSet, blocked: &VertexSet) -> VertexSet {
        let mut seen: VertexSet = start
            .iter()
            .copied()
            .filter(|v| self.contains(*v) && !blocked.contains(v))
            .collect();
        let mut queue: VecDeque<Vertex> = seen.iter().copied().collect();
        while let Some(v) = queue.pop_front() {
            for &w in self.neighbors(v) {
                if !blocked.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Shortest path from `s` to `t` inside the graph, by BFS with smallest-id
    /// tie-breaking.
    pub fn shortest_path(&self, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
        if !self.contains(s) || !self.contains(t) {
            return None;
        }
        let mut pred: BTreeMap<Vertex, Vertex> = BTreeMap::new();
        let mut queue = VecDeque::from([s]);
        pred.insert(s, s);
        while let Some(v) = queue.pop_front() {
            if v == t {
                let mut path = vec![t];
                let mut cur = t;
                while cur != s {
                    cur = pred[&cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for &w in self.neighbors(v) {
                if let std::collections::btree_map::Entry::Vacant(e) = pred.entry(w) {
                    e.insert(v);
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Connected components, each sorted, listed by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        if seen.contains(&v) {
            continue;
        }
        let comp = g.reachable_avoiding(&VertexSet::from([v]), &VertexSet::new());
        seen.extend(comp.iter().copied());
        out.push(comp);
    }
    out
}

/// Checks that `path` is a simple path in `g`.
pub fn is_simple_path(g: &Graph, path: &[Vertex]) -> bool {
    let distinct: VertexSet = path.iter().copied().collect();
    !path.is_empty()
        && distinct.len() == path.len()
        && path.iter().all(|v| g.contains(*v))
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}
