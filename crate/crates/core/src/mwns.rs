//! Instances, the near-separator predicate and related structural queries.

use thiserror::Error;

use crate::blockcut::{block_cut_forest, blocks};
use crate::graph::{connected_components, Graph, Vertex, VertexSet};
use crate::separators::{is_separator, max_vertex_flow, FlowValue, SeparatorQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MwnsError {
    #[error("deletion set contains terminals {0:?}")]
    SolutionHitsTerminals(VertexSet),
    #[error("terminal {0} is not a vertex of the graph")]
    UnknownTerminal(Vertex),
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(Vertex),
    #[error("the two terminals must differ")]
    EqualVertices,
    #[error("the given set is not a multiway near-separator")]
    NotAMwns,
    #[error("the instance is trivial")]
    Trivial,
    #[error("no non-terminal vertex is available")]
    NoNonTerminal,
}

/// A problem instance (G, T, k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub terminals: VertexSet,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, terminals: VertexSet, k: usize) -> Result<Self, MwnsError> {
        if let Some(&t) = terminals.iter().find(|t| !graph.contains(**t)) {
            return Err(MwnsError::UnknownTerminal(t));
        }
        Ok(Instance { graph, terminals, k })
    }

    /// True when the empty set already solves the instance.
    pub fn is_trivial(&self) -> bool {
        is_mwns(&self.graph, &self.terminals, &VertexSet::new()).expect("empty set avoids terminals")
    }

    pub fn non_terminals(&self) -> VertexSet {
        self.graph.vertices().filter(|v| !self.terminals.contains(v)).collect()
    }

    /// Checks that `s` avoids T, has size at most k and is a near-separator.
    pub fn verify(&self, s: &VertexSet) -> Result<bool, MwnsError> {
        if let Some(&v) = s.iter().find(|v| !self.graph.contains(**v)) {
            return Err(MwnsError::UnknownVertex(v));
        }
        Ok(s.len() <= self.k && is_mwns(&self.graph, &self.terminals, s)?)
    }
}

/// Outcome of a decision procedure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveResult {
    Yes(VertexSet),
    No,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveResult::Yes(_))
    }

    pub fn solution(&self) -> Option<&VertexSet> {
        match self {
            SolveResult::Yes(s) => Some(s),
            SolveResult::No => None,
        }
    }
}

fn check_disjoint(terminals: &VertexSet, s: &VertexSet) -> Result<(), MwnsError> {
    let hit: VertexSet = s.intersection(terminals).copied().collect();
    if hit.is_empty() {
        Ok(())
    } else {
        Err(MwnsError::SolutionHitsTerminals(hit))
    }
}

/// Whether G - S keeps T independent with at most one terminal per block.
pub fn is_mwns(g: &Graph, terminals: &VertexSet, s: &VertexSet) -> Result<bool, MwnsError> {
    check_disjoint(terminals, s)?;
    let h = g.without(s);
    Ok(blocks(&h)
        .iter()
        .all(|b| b.intersection(terminals).nth(1).is_none()))
}

/// Whether some cycle of `g` passes through two terminals.
pub fn has_t_cycle(g: &Graph, terminals: &VertexSet) -> bool {
    blocks(g)
        .iter()
        .any(|b| b.len() >= 3 && b.intersection(terminals).nth(1).is_some())
}

/// A cycle through at least two terminals.
///
/// An edge between two terminals is returned as the two-vertex sequence of its
/// endpoints.
pub fn find_t_cycle(g: &Graph, terminals: &VertexSet) -> Option<Vec<Vertex>> {
    for &t in terminals.iter().filter(|t| g.contains(**t)) {
        if let Some(&u) = g.neighbors(t).iter().find(|u| terminals.contains(u)) {
            return Some(vec![t.min(u), t.max(u)]);
        }
    }
    let block = blocks(g)
        .into_iter()
        .find(|b| b.len() >= 3 && b.intersection(terminals).nth(1).is_some())?;
    let mut ts = block.intersection(terminals).copied();
    let (t1, t2) = (ts.next()?, ts.next()?);
    let h = g.induced(&block);
    let flow = max_vertex_flow(&SeparatorQuery::new(&h, VertexSet::from([t1]), VertexSet::from([t2])));
    let [p, q, ..] = flow.paths.as_slice() else {
        unreachable!("two non-adjacent vertices of a 2-connected block have two disjoint paths");
    };
    let mut cycle = p.clone();
    cycle.extend(q.iter().rev().skip(1).take(q.len() - 2));
    Some(cycle)
}

/// Whether `t1` and `t2` are joined by two internally vertex-disjoint paths.
/// An edge counts as two such paths.
pub fn has_two_ivd_paths(g: &Graph, t1: Vertex, t2: Vertex) -> Result<bool, MwnsError> {
    if t1 == t2 {
        return Err(MwnsError::EqualVertices);
    }
    for v in [t1, t2] {
        if !g.contains(v) {
            return Err(MwnsError::UnknownVertex(v));
        }
    }
    if g.has_edge(t1, t2) {
        return Ok(true);
    }
    let flow = max_vertex_flow(&SeparatorQuery::new(g, VertexSet::from([t1]), VertexSet::from([t2])));
    Ok(flow.value >= FlowValue::Finite(2))
}

/// Terminals that share no block with another terminal.
pub fn nearly_separated_terminals(g: &Graph, terminals: &VertexSet) -> VertexSet {
    let mut paired = VertexSet::new();
    for b in blocks(g) {
        let inside: Vec<Vertex> = b.intersection(terminals).copied().collect();
        if inside.len() >= 2 {
            paired.extend(inside);
        }
    }
    terminals
        .iter()
        .copied()
        .filter(|t| g.contains(*t) && !paired.contains(t))
        .collect()
}

/// Drops vertices of `s` in ascending order while the rest stays a solution.
pub fn minimalize(g: &Graph, terminals: &VertexSet, s: &VertexSet) -> Result<VertexSet, MwnsError> {
    if !is_mwns(g, terminals, s)? {
        return Err(MwnsError::NotAMwns);
    }
    let mut out = s.clone();
    for &v in s {
        out.remove(&v);
        if !is_mwns(g, terminals, &out)? {
            out.insert(v);
        }
    }
    Ok(out)
}

/// A terminal `t` and a non-terminal `v` such that S plus `v` separates `t`
/// from every other terminal.
pub fn find_separable_leaf_terminal(
    g: &Graph,
    terminals: &VertexSet,
    s: &VertexSet,
) -> Result<(Vertex, Vertex), MwnsError> {
    if !is_mwns(g, terminals, s)? {
        return Err(MwnsError::NotAMwns);
    }
    let h = g.without(s);
    let comps = connected_components(&h);
    let lonely = comps
        .iter()
        .filter_map(|c| {
            let mut ts = c.intersection(terminals);
            match (ts.next(), ts.next()) {
                (Some(&t), None) => Some(t),
                _ => None,
            }
        })
        .min();
    if let Some(t) = lonely {
        let v = match s.first() {
            Some(&v) => v,
            None => g
                .vertices()
                .find(|v| !terminals.contains(v))
                .ok_or(MwnsError::NoNonTerminal)?,
        };
        return Ok((t, v));
    }
    let comp = comps
        .iter()
        .find(|c| c.intersection(terminals).nth(1).is_some())
        .ok_or(MwnsError::Trivial)?;
    let f = block_cut_forest(&h);
    let (t, block) = comp
        .intersection(terminals)
        .map(|&t| {
            let b = *f
                .blocks_containing(t)
                .iter()
                .min_by_key(|b| f.depth(**b))
                .expect("every vertex lies in a block");
            (t, b)
        })
        .max_by(|(t1, b1), (t2, b2)| f.depth(*b1).cmp(&f.depth(*b2)).then(t2.cmp(t1)))
        .expect("component has terminals");
    let v = f
        .parent(block)
        .and_then(|p| f.cut_vertex(p))
        .ok_or(MwnsError::NotAMwns)?;
    let mut cut = s.clone();
    cut.insert(v);
    let others: VertexSet = terminals.iter().copied().filter(|&u| u != t).collect();
    debug_assert!(!terminals.contains(&v));
    debug_assert!(is_separator(g, &VertexSet::from([t]), &others, &cut));
    Ok((t, v))
}
