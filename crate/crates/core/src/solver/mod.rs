//! Exact solver: iterative compression with branching on important separators.

mod oracle;
mod witness;

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::blocker::fmt_set;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::mwns::{is_mwns, minimalize, nearly_separated_terminals, Instance, MwnsError, SolveResult};
use crate::reducer::{lift_solution, reduce_terminals, ReduceError};
use crate::separators::{enumerate_important_separators, SeparatorQuery};

pub use oracle::{oracle_all_solutions, oracle_opt_x, oracle_solve, OracleError, ORACLE_LIMIT};
pub use witness::{pushing_lemma_witness, PushingWitness, WitnessError, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Reduce(#[from] ReduceError),
    #[error(transparent)]
    Mwns(#[from] MwnsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    /// The whole separator joins the solution.
    Full,
    /// All of the separator except this vertex joins the solution.
    MinusVertex(Vertex),
}

/// One child created while branching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchNode {
    pub depth: usize,
    /// Budget at the parent.
    pub k: usize,
    pub terminals: VertexSet,
    pub terminal: Vertex,
    pub separator: VertexSet,
    pub kind: BranchKind,
    /// Vertices deleted on the way to the parent.
    pub partial: VertexSet,
}

impl fmt::Display for BranchNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "depth={} k={} |T|={} t={} I={}",
            self.depth,
            self.k,
            self.terminals.len(),
            self.terminal,
            fmt_set(&self.separator)
        )?;
        match self.kind {
            BranchKind::Full => write!(f, " kind=full")?,
            BranchKind::MinusVertex(v) => write!(f, " kind=minus v={v}")?,
        }
        write!(f, " partial={}", fmt_set(&self.partial))
    }
}

/// Size of one compression's search tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompressionRecord {
    pub terminals: usize,
    pub budget: usize,
    pub leaves: u64,
}

impl CompressionRecord {
    /// (32 |T'|)^k'.
    pub fn leaf_bound(&self) -> u128 {
        (32 * self.terminals as u128).saturating_pow(self.budget as u32)
    }
}

/// Counters collected by the exact solver.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub leaves: u64,
    pub enumerations: u64,
    pub max_depth: usize,
    pub wall_time: Duration,
    pub compressions: Vec<CompressionRecord>,
    /// Filled only when tracing is on.
    pub trace: Vec<BranchNode>,
}

impl SearchStats {
    pub fn within_leaf_bound(&self) -> bool {
        self.compressions.iter().all(|c| c.leaves as u128 <= c.leaf_bound())
    }
}

impl fmt::Display for SearchStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nodes={}", self.nodes)?;
        writeln!(f, "leaves={}", self.leaves)?;
        writeln!(f, "enumerations={}", self.enumerations)?;
        writeln!(f, "max_depth={}", self.max_depth)?;
        writeln!(f, "compressions={}", self.compressions.len())?;
        writeln!(f, "leaf_bound_ok={}", self.within_leaf_bound())?;
        write!(f, "wall_ms={}", self.wall_time.as_millis())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    pub trace: bool,
}

struct Search<'a> {
    stats: &'a mut SearchStats,
    options: SolveOptions,
}

impl Search<'_> {
    fn leaf(&mut self) {
        self.stats.leaves += 1;
    }

    fn branch(&mut self, g: &Graph, terminals: &VertexSet, k: usize, depth: usize, partial: &VertexSet) -> Option<VertexSet> {
        self.stats.nodes += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let mut ts = terminals.clone();
        loop {
            let lonely = nearly_separated_terminals(g, &ts);
            if lonely.is_empty() {
                break;
            }
            ts.retain(|t| !lonely.contains(t));
        }
        if is_mwns(g, &ts, &VertexSet::new()).expect("no deletions") {
            self.leaf();
            return Some(VertexSet::new());
        }
        if k == 0 {
            self.leaf();
            return None;
        }
        let mut children = 0;
        for &t in &ts {
            let others: VertexSet = ts.iter().copied().filter(|&u| u != t).collect();
            let q = SeparatorQuery::new(g, VertexSet::from([t]), others).with_undeletable(ts.clone());
            let found = enumerate_important_separators(&q, k + 1);
            self.stats.enumerations += 1;
            for sep in found.separators.into_iter().filter(|s| !s.is_empty()) {
                let mut kinds = Vec::new();
                if sep.len() <= k {
                    kinds.push(BranchKind::Full);
                }
                if sep.len() >= 2 {
                    kinds.extend(sep.iter().map(|&v| BranchKind::MinusVertex(v)));
                }
                for kind in kinds {
                    let mut taken = sep.clone();
                    if let BranchKind::MinusVertex(v) = kind {
                        taken.remove(&v);
                    }
                    if self.options.trace {
                        self.stats.trace.push(BranchNode {
                            depth,
                            k,
                            terminals: ts.clone(),
                            terminal: t,
                            separator: sep.clone(),
                            kind,
                            partial: partial.clone(),
                        });
                    }
                    children += 1;
                    let mut deeper = partial.clone();
                    deeper.extend(taken.iter().copied());
                    if let Some(mut sub) = self.branch(&g.without(&taken), &ts, k - taken.len(), depth + 1, &deeper) {
                        sub.extend(taken);
                        return Some(minimalize(g, &ts, &sub).expect("branch result is a solution"));
                    }
                }
            }
        }
        if children == 0 {
            self.leaf();
        }
        None
    }
}

/// Turns a near-separator `s_hat` of (G, T) into a solution of size at most k,
/// or reports that none exists.
pub fn compression_step(inst: &Instance, s_hat: &VertexSet) -> Result<SolveResult, SolveError> {
    compression_step_with_stats(inst, s_hat, &mut SearchStats::default(), SolveOptions::default())
}

pub fn compression_step_with_stats(
    inst: &Instance,
    s_hat: &VertexSet,
    stats: &mut SearchStats,
    options: SolveOptions,
) -> Result<SolveResult, SolveError> {
    if !inst.graph.is_independent(&inst.terminals) {
        return Ok(SolveResult::No);
    }
    let reduction = reduce_terminals(inst, s_hat)?;
    let Some(reduced) = reduction.instance else {
        return Ok(SolveResult::No);
    };
    if reduced.is_trivial() {
        return Ok(SolveResult::Yes(lift_solution(&reduction.log, &VertexSet::new())?));
    }
    if reduced.k == 0 {
        return Ok(SolveResult::No);
    }
    let before = stats.leaves;
    let found = Search { stats, options }.branch(&reduced.graph, &reduced.terminals, reduced.k, 0, &VertexSet::new());
    stats.compressions.push(CompressionRecord {
        terminals: reduced.terminals.len(),
        budget: reduced.k,
        leaves: stats.leaves - before,
    });
    match found {
        Some(s) => Ok(SolveResult::Yes(lift_solution(&reduction.log, &s)?)),
        None => Ok(SolveResult::No),
    }
}

/// Decides the instance exactly.
pub fn solve(inst: &Instance) -> Result<SolveResult, SolveError> {
    Ok(solve_with_stats(inst, SolveOptions::default())?.0)
}

/// Iterative compression over the non-terminals in ascending order.
pub fn solve_with_stats(inst: &Instance, options: SolveOptions) -> Result<(SolveResult, SearchStats), SolveError> {
    let start = Instant::now();
    let mut stats = SearchStats::default();
    let result = iterate(inst, &mut stats, options)?;
    stats.wall_time = start.elapsed();
    Ok((result, stats))
}

fn iterate(inst: &Instance, stats: &mut SearchStats, options: SolveOptions) -> Result<SolveResult, SolveError> {
    let (g, ts, k) = (&inst.graph, &inst.terminals, inst.k);
    if !g.is_independent(ts) {
        return Ok(SolveResult::No);
    }
    if inst.is_trivial() {
        return Ok(SolveResult::Yes(VertexSet::new()));
    }
    let order: Vec<Vertex> = inst.non_terminals().into_iter().collect();
    if order.len() <= k {
        return Ok(SolveResult::Yes(minimalize(g, ts, &inst.non_terminals())?));
    }
    let mut kept = ts.clone();
    kept.extend(order[..=k].iter().copied());
    let mut s: VertexSet = order[..=k].iter().copied().collect();
    for i in k + 1..=order.len() {
        if s.len() > k {
            let step = Instance { graph: g.induced(&kept), terminals: ts.clone(), k };
            match compression_step_with_stats(&step, &s, stats, options)? {
                SolveResult::Yes(smaller) => s = smaller,
                SolveResult::No => return Ok(SolveResult::No),
            }
        }
        if let Some(&v) = order.get(i) {
            kept.insert(v);
            s.insert(v);
        }
    }
    debug_assert!(inst.verify(&s).unwrap_or(false));
    Ok(SolveResult::Yes(s))
}
