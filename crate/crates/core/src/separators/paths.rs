//! Path queries answered with small flow networks and block-cut trees.

use crate::blockcut::block_cut_forest;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::separators::flow::{Capacity, SeparatorQuery, SplitNetwork, INF};
use crate::separators::SeparatorError;

/// A simple path from some vertex of `a_side` to some vertex of `b_side`
/// through `t`, or `None` if there is none.
///
/// The path is returned starting on the A side.
pub fn path_through_forced_vertex(
    g: &Graph,
    a_side: &VertexSet,
    b_side: &VertexSet,
    t: Vertex,
) -> Option<Vec<Vertex>> {
    if !g.contains(t) || a_side.contains(&t) || b_side.contains(&t) {
        return None;
    }
    let q = SeparatorQuery::new(g, VertexSet::new(), VertexSet::new()).with_capacity(t, Capacity::Two);
    let mut sn = SplitNetwork::build(&q, 2);
    let alpha = sn.sink + 1;
    let beta = sn.sink + 2;
    let ti = sn.index[&t];
    sn.net.add_edge(sn.source, 2 * ti, INF);
    for (side, hub) in [(a_side, alpha), (b_side, beta)] {
        for v in side.iter().filter(|v| g.contains(**v)) {
            sn.net.add_edge(2 * sn.index[v] + 1, hub, 1);
        }
        sn.net.add_edge(hub, sn.sink, 1);
    }
    if sn.net.max_flow(sn.source, sn.sink, 2) < 2 {
        return None;
    }
    let mut to_a = Vec::new();
    let mut to_b = Vec::new();
    for nodes in sn.net.decompose(sn.source, sn.sink) {
        let hub = nodes[nodes.len() - 2];
        let path = sn.vertex_path(&nodes);
        if hub == alpha {
            to_a = path;
        } else {
            to_b = path;
        }
    }
    to_a.reverse();
    to_a.extend(to_b.into_iter().skip(1));
    Some(to_a)
}

/// Largest number of terminals on a simple `a`-`b` path.
///
/// Requires that every block of size at least three on the block-cut tree
/// path between `a` and `b` holds at most one terminal.
pub fn max_terminals_on_path(
    g: &Graph,
    terminals: &VertexSet,
    a: Vertex,
    b: Vertex,
) -> Result<usize, SeparatorError> {
    if a == b {
        return Ok(usize::from(terminals.contains(&a)));
    }
    let f = block_cut_forest(g);
    let path = f
        .node_of(a)
        .zip(f.node_of(b))
        .and_then(|(na, nb)| f.tree_path(na, nb))
        .ok_or(SeparatorError::Disconnected(a, b))?;
    let mut counted: VertexSet = [a, b].into_iter().filter(|v| terminals.contains(v)).collect();
    counted.extend(
        path.iter()
            .filter_map(|&id| f.cut_vertex(id))
            .filter(|v| terminals.contains(v)),
    );
    let mut extra = 0;
    for block in path.iter().filter_map(|&id| f.block(id)) {
        let inside: VertexSet = block.intersection(terminals).copied().collect();
        if block.len() >= 3 && inside.len() >= 2 {
            return Err(SeparatorError::BlockWithTwoTerminals(block.clone()));
        }
        if !inside.is_subset(&counted) {
            extra += 1;
        }
    }
    Ok(counted.len() + extra)
}
