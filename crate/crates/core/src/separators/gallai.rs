//! Maximum packings of vertex-disjoint Q-paths and matching covers.
//!
//! Every vertex outside Q is replaced by two adjacent twins; a maximum
//! matching of the resulting graph H then encodes a maximum packing, and the
//! Gallai-Edmonds decomposition of H yields a cover of at most twice its size.

use std::collections::BTreeMap;

use petgraph::algo::maximum_matching;
use petgraph::graph::{NodeIndex, UnGraph};

use crate::graph::{Graph, Vertex, VertexSet};

/// A maximum Q-path packing with a hitting set for all Q-paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPaths {
    pub packing: Vec<Vec<Vertex>>,
    pub cover: VertexSet,
}

struct Aux {
    owner: Vec<Vertex>,
    copies: BTreeMap<Vertex, Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Aux {
    fn new(g: &Graph, q: &VertexSet) -> Self {
        let mut owner = Vec::new();
        let mut copies: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        let mut edges = Vec::new();
        for v in g.vertices() {
            let n = if q.contains(&v) { 1 } else { 2 };
            let ids: Vec<usize> = (owner.len()..owner.len() + n).collect();
            owner.extend(std::iter::repeat_n(v, n));
            if n == 2 {
                edges.push((ids[0], ids[1]));
            }
            copies.insert(v, ids);
        }
        for (u, v) in g.edges() {
            for &a in &copies[&u] {
                for &b in &copies[&v] {
                    edges.push((a, b));
                }
            }
        }
        Aux { owner, copies, edges }
    }

    fn is_twin_edge(&self, a: usize, b: usize) -> bool {
        self.owner[a] == self.owner[b]
    }

    /// Mate of every node in a maximum matching of H minus `excluded`.
    fn matching(&self, excluded: Option<usize>) -> Vec<Option<usize>> {
        let mut h: UnGraph<(), ()> = UnGraph::with_capacity(self.owner.len(), self.edges.len());
        for _ in &self.owner {
            h.add_node(());
        }
        for &(a, b) in &self.edges {
            if excluded != Some(a) && excluded != Some(b) {
                h.add_edge(NodeIndex::new(a), NodeIndex::new(b), ());
            }
        }
        let m = maximum_matching(&h);
        (0..self.owner.len())
            .map(|i| m.mate(NodeIndex::new(i)).map(|n| n.index()))
            .collect()
    }
}

fn size(mate: &[Option<usize>]) -> usize {
    mate.iter().filter(|m| m.is_some()).count() / 2
}

/// Maximum family of vertex-disjoint Q-paths and a set meeting every Q-path.
pub fn gallai_q_paths(d: &Graph, q: &VertexSet) -> QPaths {
    let q: VertexSet = q.iter().copied().filter(|v| d.contains(*v)).collect();
    if q.len() < 2 {
        return QPaths { packing: Vec::new(), cover: VertexSet::new() };
    }
    let aux = Aux::new(d, &q);
    let mate = aux.matching(None);
    let nu = size(&mate);

    // Components of M xor M0 that join two Q vertices.
    let partner = |i: usize| -> Vec<usize> {
        let mut out = Vec::new();
        if let Some(m) = mate[i] {
            if !aux.is_twin_edge(i, m) {
                out.push(m);
            }
        }
        if let [a, b] = aux.copies[&aux.owner[i]][..] {
            let twin = if a == i { b } else { a };
            if mate[i] != Some(twin) {
                out.push(twin);
            }
        }
        out
    };
    let mut packing = Vec::new();
    for &s in &q {
        let start = aux.copies[&s][0];
        if mate[start].is_none() {
            continue;
        }
        let mut walk = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        loop {
            let next = partner(cur).into_iter().find(|&n| n != prev);
            match next {
                Some(n) => {
                    walk.push(n);
                    prev = cur;
                    cur = n;
                }
                None => break,
            }
        }
        let end = aux.owner[cur];
        if cur != start && q.contains(&end) && s < end {
            let mut path: Vec<Vertex> = Vec::new();
            for i in walk {
                if path.last() != Some(&aux.owner[i]) {
                    path.push(aux.owner[i]);
                }
            }
            packing.push(path);
        }
    }
    debug_assert_eq!(packing.len(), nu - (aux.owner.len() - q.len()) / 2);

    // Gallai-Edmonds: D = nodes missed by some maximum matching.
    let mut in_d = vec![false; aux.owner.len()];
    for ids in aux.copies.values() {
        let missed = size(&aux.matching(Some(ids[0]))) == nu;
        for &i in ids {
            in_d[i] = missed;
        }
    }
    let mut adj = vec![Vec::new(); aux.owner.len()];
    for &(a, b) in &aux.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let in_a: Vec<bool> = (0..aux.owner.len())
        .map(|i| !in_d[i] && adj[i].iter().any(|&j| in_d[j]))
        .collect();

    let mut cover = VertexSet::new();
    for i in 0..aux.owner.len() {
        let v = aux.owner[i];
        if in_a[i] || (!in_d[i] && q.contains(&v)) {
            cover.insert(v);
        }
    }
    let mut seen = vec![false; aux.owner.len()];
    for root in 0..aux.owner.len() {
        if !in_d[root] || seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let mut comp_q = VertexSet::new();
        while let Some(i) = stack.pop() {
            if q.contains(&aux.owner[i]) {
                comp_q.insert(aux.owner[i]);
            }
            for &j in &adj[i] {
                if in_d[j] && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        cover.extend(comp_q.into_iter().skip(1));
    }
    debug_assert!(cover.len() <= 2 * packing.len());
    QPaths { packing, cover }
}
