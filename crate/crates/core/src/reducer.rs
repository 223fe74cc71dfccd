//! Terminal-bounding preprocessing and lifting of solutions.
//!
//! Starting from any near-separator Ŝ, the reducer builds a 1-redundant
//! near-separator S* with the blocker, removes vertices that every small
//! solution must contain, and then exhaustively applies three rules that only
//! shrink the terminal set:
//!
//! * RR1 drops a terminal that shares no block with another terminal.
//! * RR2 drops a terminal from a component D of G - {x, y} with at least three
//!   terminals, no T-cycle in G[D + x + y], and an x-y path through two of them.
//! * RR3 keeps only the terminals of components of G - S* marked for some pair
//!   of S*.

use std::fmt;

use thiserror::Error;

use crate::blockcut::{block_cut_forest, threaded_path};
use crate::blocker::{blocker, fmt_set, BlockerError};
use crate::graph::{connected_components, Graph, Vertex, VertexSet};
use crate::mwns::{is_mwns, minimalize, nearly_separated_terminals, Instance, MwnsError};
use crate::separators::{max_terminals_on_path, path_through_forced_vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error("the starting set is not a near-separator avoiding the terminals")]
    NotAMwns,
    #[error("the solution does not solve the reduced instance")]
    InvalidSolution,
    #[error("the lifted set fails on the original instance")]
    LiftFailed,
    #[error(transparent)]
    Blocker(#[from] BlockerError),
    #[error(transparent)]
    Mwns(#[from] MwnsError),
}

/// One recorded change of the instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionStep {
    /// RR1 removed a nearly separated terminal.
    DropNearlySeparated(Vertex),
    /// RR2 removed `dropped` from component `component` of G - {x, y}.
    DropComponentTerminal {
        x: Vertex,
        y: Vertex,
        dropped: Vertex,
        component: VertexSet,
        kept: (Vertex, Vertex),
    },
    /// RR3 removed every terminal outside the marked components.
    DropUnmarked(VertexSet),
    /// `x` lies in every solution; it was deleted and k lowered by one.
    EssentialVertex(Vertex),
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::DropNearlySeparated(t) => write!(f, "rr1 t={t}"),
            ReductionStep::DropComponentTerminal { x, y, dropped, component, kept } => write!(
                f,
                "rr2 x={x} y={y} drop={dropped} D={} keep={{{},{}}}",
                fmt_set(component),
                kept.0,
                kept.1
            ),
            ReductionStep::DropUnmarked(ts) => write!(f, "rr3 drop={}", fmt_set(ts)),
            ReductionStep::EssentialVertex(x) => write!(f, "essential x={x}"),
        }
    }
}

/// The original instance and every step taken, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLog {
    pub original: Instance,
    pub steps: Vec<ReductionStep>,
}

impl ReductionLog {
    /// Replays the steps; `None` if the budget runs out.
    pub fn replay(&self) -> Option<Instance> {
        let mut inst = self.original.clone();
        for step in &self.steps {
            apply_step(&mut inst, step)?;
        }
        Some(inst)
    }
}

fn apply_step(inst: &mut Instance, step: &ReductionStep) -> Option<()> {
    match step {
        ReductionStep::DropNearlySeparated(t) => {
            inst.terminals.remove(t);
        }
        ReductionStep::DropComponentTerminal { dropped, .. } => {
            inst.terminals.remove(dropped);
        }
        ReductionStep::DropUnmarked(ts) => {
            inst.terminals.retain(|t| !ts.contains(t));
        }
        ReductionStep::EssentialVertex(x) => {
            inst.graph.remove_vertex(*x);
            inst.k = inst.k.checked_sub(1)?;
        }
    }
    Some(())
}

/// Reduced instance (or `None` when the budget was exceeded) plus its log.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub instance: Option<Instance>,
    pub log: ReductionLog,
    pub redundant: VertexSet,
}

/// Output of the 1-redundant construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RedundantSetResult {
    /// G - X.
    pub graph: Graph,
    pub terminals: VertexSet,
    /// k - |X|, negative when the instance is infeasible.
    pub k: i64,
    pub redundant: VertexSet,
    pub essential: VertexSet,
}

fn check_start(inst: &Instance, s_hat: &VertexSet) -> Result<(), ReduceError> {
    let inside = s_hat.iter().all(|v| inst.graph.contains(*v));
    if !inside || !s_hat.is_disjoint(&inst.terminals) || !is_mwns(&inst.graph, &inst.terminals, s_hat)? {
        return Err(ReduceError::NotAMwns);
    }
    Ok(())
}

/// Grows Ŝ into a 1-redundant near-separator, setting aside every x whose
/// x-avoiding blocker output exceeds 14k.
pub fn build_1_redundant(inst: &Instance, s_hat: &VertexSet) -> Result<RedundantSetResult, ReduceError> {
    check_start(inst, s_hat)?;
    let mut redundant = VertexSet::new();
    let mut essential = VertexSet::new();
    for &x in s_hat {
        let mut others = s_hat.clone();
        others.remove(&x);
        let sx = blocker(&inst.graph.without(&others), &inst.terminals, x)?;
        if sx.len() > 14 * inst.k {
            essential.insert(x);
        } else {
            redundant.extend(sx);
            redundant.insert(x);
        }
    }
    Ok(RedundantSetResult {
        graph: inst.graph.without(&essential),
        terminals: inst.terminals.clone(),
        k: inst.k as i64 - essential.len() as i64,
        redundant,
        essential,
    })
}

/// RR1 on the smallest nearly separated terminal.
pub fn apply_rr1(inst: &Instance) -> Option<(Instance, ReductionStep)> {
    let t = *nearly_separated_terminals(&inst.graph, &inst.terminals).first()?;
    let mut next = inst.clone();
    next.terminals.remove(&t);
    Some((next, ReductionStep::DropNearlySeparated(t)))
}

/// The two smallest terminals on some x-y path of `h` with the most terminals.
fn realising_pair(h: &Graph, terminals: &VertexSet, x: Vertex, y: Vertex) -> Option<(Vertex, Vertex)> {
    let f = block_cut_forest(h);
    let nodes = f.tree_path(f.node_of(x)?, f.node_of(y)?)?;
    let on_tree: VertexSet = nodes
        .iter()
        .filter_map(|&n| f.cut_vertex(n))
        .chain([x, y])
        .collect();
    let forced: Vec<_> = nodes
        .iter()
        .filter_map(|&n| {
            let t = *f.block(n)?.intersection(terminals).find(|t| !on_tree.contains(t))?;
            Some((n, t))
        })
        .collect();
    let path = threaded_path(h, &f, x, y, &forced).ok()?;
    let mut on_path = path.iter().copied().filter(|v| terminals.contains(v));
    let (a, b) = (on_path.next()?, on_path.next()?);
    Some((a.min(b), a.max(b)))
}

/// RR2, searching all pairs of non-terminals in ascending order.
pub fn apply_rr2(inst: &Instance) -> Option<(Instance, ReductionStep)> {
    let g = &inst.graph;
    let ts = &inst.terminals;
    if ts.len() < 3 {
        return None;
    }
    let candidates: Vec<Vertex> = g.vertices().filter(|v| !ts.contains(v)).collect();
    for (i, &x) in candidates.iter().enumerate() {
        for &y in &candidates[i + 1..] {
            let pair = VertexSet::from([x, y]);
            for comp in connected_components(&g.without(&pair)) {
                let inside: VertexSet = comp.intersection(ts).copied().collect();
                if inside.len() < 3 || comp.is_disjoint(g.neighbors(x)) || comp.is_disjoint(g.neighbors(y)) {
                    continue;
                }
                let mut keep = comp.clone();
                keep.extend([x, y]);
                let h = g.induced(&keep);
                if !is_mwns(&h, ts, &VertexSet::new()).expect("no deletions") {
                    continue;
                }
                if max_terminals_on_path(&h, ts, x, y).is_ok_and(|m| m >= 2) {
                    let kept = realising_pair(&h, ts, x, y).expect("count of two is realised by a path");
                    let dropped = *inside
                        .iter()
                        .find(|t| **t != kept.0 && **t != kept.1)
                        .expect("at least three terminals in D");
                    let mut next = inst.clone();
                    next.terminals.remove(&dropped);
                    let step = ReductionStep::DropComponentTerminal { x, y, dropped, component: comp, kept };
                    return Some((next, step));
                }
            }
        }
    }
    None
}

/// Whether component `c` has a path from N(x) to N(y) through a terminal.
fn certified(g: &Graph, terminals: &VertexSet, c: &VertexSet, x: Vertex, y: Vertex) -> bool {
    let a: VertexSet = g.neighbors(x).intersection(c).copied().collect();
    let b: VertexSet = g.neighbors(y).intersection(c).copied().collect();
    if a.is_empty() || b.is_empty() {
        return false;
    }
    let h = g.induced(c);
    c.intersection(terminals).any(|&t| {
        a.contains(&t) || b.contains(&t) || path_through_forced_vertex(&h, &a, &b, t).is_some()
    })
}

/// Components of G - S* marked for some pair of S*, at most k+2 per pair,
/// in order of smallest vertex.
pub fn mark_components(inst: &Instance, redundant: &VertexSet) -> Vec<VertexSet> {
    let g = &inst.graph;
    let comps = connected_components(&g.without(redundant));
    let mut marked = vec![false; comps.len()];
    let pivots: Vec<Vertex> = redundant.iter().copied().filter(|v| g.contains(*v)).collect();
    for (i, &x) in pivots.iter().enumerate() {
        for &y in &pivots[i + 1..] {
            let mut count = 0;
            for (ci, c) in comps.iter().enumerate() {
                if count == inst.k + 2 {
                    break;
                }
                if certified(g, &inst.terminals, c, x, y) {
                    marked[ci] = true;
                    count += 1;
                }
            }
        }
    }
    comps
        .into_iter()
        .zip(marked)
        .filter_map(|(c, m)| m.then_some(c))
        .collect()
}

/// RR3: drop every terminal outside the marked components.
pub fn apply_rr3(inst: &Instance, redundant: &VertexSet) -> Option<(Instance, ReductionStep)> {
    let keep: VertexSet = mark_components(inst, redundant).into_iter().flatten().collect();
    let dropped: VertexSet = inst.terminals.difference(&keep).copied().collect();
    if dropped.is_empty() {
        return None;
    }
    let mut next = inst.clone();
    next.terminals.retain(|t| keep.contains(t));
    Some((next, ReductionStep::DropUnmarked(dropped)))
}

/// Builds S*, removes essential vertices and applies RR1, RR2 and RR3 until
/// none applies, always restarting from RR1.
pub fn reduce_terminals(inst: &Instance, s_hat: &VertexSet) -> Result<Reduction, ReduceError> {
    let built = build_1_redundant(inst, s_hat)?;
    let mut log = ReductionLog { original: inst.clone(), steps: Vec::new() };
    log.steps.extend(built.essential.iter().map(|&x| ReductionStep::EssentialVertex(x)));
    if built.k < 0 {
        return Ok(Reduction { instance: None, log, redundant: built.redundant });
    }
    let mut current = Instance {
        graph: built.graph,
        terminals: built.terminals,
        k: built.k as usize,
    };
    loop {
        let next = apply_rr1(&current)
            .or_else(|| apply_rr2(&current))
            .or_else(|| apply_rr3(&current, &built.redundant));
        match next {
            Some((inst, step)) => {
                current = inst;
                log.steps.push(step);
            }
            None => break,
        }
    }
    debug_assert_eq!(log.replay().as_ref(), Some(&current));
    Ok(Reduction { instance: Some(current), log, redundant: built.redundant })
}

/// Turns a solution of the reduced instance into one of the original.
pub fn lift_solution(log: &ReductionLog, solution: &VertexSet) -> Result<VertexSet, ReduceError> {
    let mut states = vec![log.original.clone()];
    for step in &log.steps {
        let mut next = states.last().expect("non-empty").clone();
        apply_step(&mut next, step).ok_or(ReduceError::InvalidSolution)?;
        states.push(next);
    }
    let last = states.last().expect("non-empty");
    if !last.verify(solution).unwrap_or(false) {
        return Err(ReduceError::InvalidSolution);
    }
    let mut s = solution.clone();
    let mut essential = VertexSet::new();
    for (i, step) in log.steps.iter().enumerate().rev() {
        if let ReductionStep::EssentialVertex(x) = step {
            essential.insert(*x);
            continue;
        }
        let after = &states[i + 1];
        s = minimalize(&after.graph, &after.terminals, &s)?;
        if let ReductionStep::DropComponentTerminal { x, component, .. } = step {
            if !s.is_disjoint(component) {
                s.retain(|v| !component.contains(v));
                s.insert(*x);
            }
        }
    }
    let base = &states[essential.len()];
    s = minimalize(&base.graph, &base.terminals, &s).map_err(|_| ReduceError::LiftFailed)?;
    s.extend(essential);
    if !log.original.verify(&s).unwrap_or(false) {
        return Err(ReduceError::LiftFailed);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn rr1_drops_isolated_terminal() {
        let mut g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        g.add_vertex(5).unwrap();
        let inst = Instance::new(g, set(&[1, 3, 5]), 1).unwrap();
        let (next, step) = apply_rr1(&inst).unwrap();
        assert_eq!(step, ReductionStep::DropNearlySeparated(5));
        assert_eq!(next.terminals, set(&[1, 3]));
        assert!(apply_rr1(&next).is_none());
    }

    #[test]
    fn rr2_on_chain() {
        // x=1 - t2 - 3 - t4 - 5 - t6 - y=7, plus a route 1-8-7 outside D
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 8), (7, 8)]).unwrap();
        let inst = Instance::new(g, set(&[2, 4, 6]), 1).unwrap();
        let (next, step) = apply_rr2(&inst).unwrap();
        assert_eq!(next.terminals.len(), 2);
        assert!(matches!(step, ReductionStep::DropComponentTerminal { .. }));
    }

    #[test]
    fn marking_limits_per_pair() {
        // S* = {1, 2}; five components each a path 1 - a - t - b - 2.
        let mut edges = Vec::new();
        for i in 0..5 {
            let base = 10 + 3 * i;
            edges.extend([(1, base), (base, base + 1), (base + 1, base + 2), (base + 2, 2)]);
        }
        let g = Graph::from_edges(edges).unwrap();
        let ts: VertexSet = (0..5).map(|i| 11 + 3 * i).collect();
        let inst = Instance::new(g, ts, 1).unwrap();
        let marked = mark_components(&inst, &set(&[1, 2]));
        assert_eq!(marked.len(), 3);
        let (next, _) = apply_rr3(&inst, &set(&[1, 2])).unwrap();
        assert_eq!(next.terminals, set(&[11, 14, 17]));
    }

    #[test]
    fn empty_start_set() {
        let g = Graph::from_edges([(1, 2)]).unwrap();
        let inst = Instance::new(g, set(&[1]), 0).unwrap();
        let r = build_1_redundant(&inst, &set(&[])).unwrap();
        assert!(r.redundant.is_empty() && r.essential.is_empty());
    }

    #[test]
    fn flower_makes_pivot_essential() {
        // k+1 = 2 cycles through x=1 sharing only x, each with two terminals;
        // blocker must spend two vertices, over 14k only when k = 0.
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)]).unwrap();
        let inst = Instance::new(g, set(&[2, 4, 5, 7]), 0).unwrap();
        let r = build_1_redundant(&inst, &set(&[1])).unwrap();
        assert_eq!(r.essential, set(&[1]));
        assert_eq!(r.k, -1);
    }
}
