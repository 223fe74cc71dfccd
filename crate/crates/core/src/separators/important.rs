//! Enumeration of important separators by branching on the furthest min cut.

use crate::graph::{Graph, VertexSet};
use crate::separators::flow::{furthest_min_separator, is_separator, max_vertex_flow, Capacity, FlowValue, SeparatorQuery};

/// All important (X,Y)-separators of size at most `k`, sorted by size and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImportantSeparatorSet {
    pub separators: Vec<VertexSet>,
    pub k: usize,
}

fn blocked(q: &SeparatorQuery<'_>) -> VertexSet {
    q.graph
        .vertices()
        .filter(|v| q.capacity(*v) == Capacity::Infinite)
        .collect()
}

fn candidates(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    undeletable: &VertexSet,
    k: usize,
    taken: &VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let q = SeparatorQuery::new(g, x.clone(), y.clone()).with_undeletable(undeletable.clone());
    let Some((cut, r)) = furthest_min_separator(&q) else {
        return;
    };
    if cut.len() > k {
        return;
    }
    if cut.is_empty() {
        out.push(taken.clone());
        return;
    }
    let v = *cut.first().expect("non-empty cut");

    let mut with_v = taken.clone();
    with_v.insert(v);
    let mut fixed = undeletable.clone();
    fixed.extend(r.iter().copied());
    candidates(&g.without_vertex(v), &r, y, &fixed, k - 1, &with_v, out);

    let mut grown = r;
    grown.insert(v);
    fixed.insert(v);
    candidates(g, &grown, y, &fixed, k, taken, out);
}

/// Whether `s` is an important separator for the query.
pub fn is_important(q: &SeparatorQuery<'_>, s: &VertexSet) -> bool {
    let g = q.graph;
    let fixed = blocked(q);
    if !s.is_disjoint(&fixed) || !s.iter().all(|v| g.contains(*v)) {
        return false;
    }
    if !is_separator(g, &q.sources, &q.sinks, s) {
        return false;
    }
    for v in s {
        let mut smaller = s.clone();
        smaller.remove(v);
        if is_separator(g, &q.sources, &q.sinks, &smaller) {
            return false;
        }
    }
    let r = g.reachable_avoiding(&q.sources, s);
    s.iter().all(|&v| {
        let mut grown = r.clone();
        grown.insert(v);
        let mut undeletable = fixed.clone();
        undeletable.extend(grown.iter().copied());
        let dominated = SeparatorQuery::new(g, grown, q.sinks.clone()).with_undeletable(undeletable);
        match max_vertex_flow(&dominated).value {
            FlowValue::Finite(l) => l > s.len(),
            FlowValue::Infinite => true,
        }
    })
}

/// Enumerates every important (X,Y)-separator of size at most `k` that avoids
/// X, Y and the undeletable vertices.
pub fn enumerate_important_separators(q: &SeparatorQuery<'_>, k: usize) -> ImportantSeparatorSet {
    let mut found = Vec::new();
    candidates(q.graph, &q.sources, &q.sinks, &blocked(q), k, &VertexSet::new(), &mut found);
    let mut separators: Vec<VertexSet> = found.into_iter().filter(|s| is_important(q, s)).collect();
    separators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    separators.dedup();
    debug_assert!(separators.len() as u128 <= 4u128.saturating_pow(k as u32));
    ImportantSeparatorSet { separators, k }
}
