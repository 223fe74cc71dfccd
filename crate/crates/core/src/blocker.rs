//! Approximation of a smallest near-separator that avoids a pivot vertex x,
//! given that {x} alone is a near-separator.
//!
//! Each round finds a deepest node d of the block-cut forest of G - x whose
//! subtree plus x still holds a T-cycle, deletes a set Z built around d, and
//! repeats on G - Z. The output is within a factor 14 of the optimum.

use std::fmt;

use thiserror::Error;

use crate::blockcut::{block_cut_forest, BlockCutForest, NodeId};
use crate::graph::{connected_components, Graph, Vertex, VertexSet};
use crate::mwns::{find_t_cycle, has_t_cycle, is_mwns};
use crate::separators::{gallai_q_paths, max_terminals_on_path, min_separator, SeparatorError, SeparatorQuery};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockerError {
    #[error("pivot {0} is not a vertex of the graph")]
    UnknownPivot(Vertex),
    #[error("pivot {0} is a terminal")]
    PivotIsTerminal(Vertex),
    #[error("{{pivot}} is not a near-separator; T-cycle {0:?} avoids it")]
    PivotNotMwns(Vec<Vertex>),
    #[error("round {0} produced an empty set")]
    NoProgress(usize),
    #[error(transparent)]
    Separator(#[from] SeparatorError),
}

/// Which kind of node the round was built around.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RoundCase {
    /// A non-terminal cut vertex.
    Cut,
    /// A terminal cut vertex.
    TerminalCut,
    /// A block.
    Block,
}

impl RoundCase {
    fn tag(self) -> char {
        match self {
            RoundCase::Cut => 'a',
            RoundCase::TerminalCut => 'b',
            RoundCase::Block => 'c',
        }
    }
}

/// One round of the blocker.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round {
    pub d: NodeId,
    pub case: RoundCase,
    /// Z1 through Z5; only the block case fills all five.
    pub parts: [VertexSet; 5],
    pub z: VertexSet,
}

impl Round {
    /// One trace line with the given round number.
    pub fn trace_line(&self, iter: usize) -> String {
        let sizes: Vec<String> = self.parts.iter().map(|p| p.len().to_string()).collect();
        format!(
            "iter={iter} d={} case={} |Z1..Z5|={} Z={}",
            self.d,
            self.case.tag(),
            sizes.join(","),
            fmt_set(&self.z)
        )
    }
}

pub(crate) fn fmt_set(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Result of a full run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockerRun {
    pub solution: VertexSet,
    pub rounds: Vec<Round>,
}

impl fmt::Display for BlockerRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rounds.iter().enumerate() {
            writeln!(f, "{}", r.trace_line(i))?;
        }
        Ok(())
    }
}

/// Grandchildren C(v) of a cut vertex and the subset C>=1(v) that reach a
/// neighbour of x along a path with a terminal.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GrandchildClassification {
    pub all: VertexSet,
    pub at_least_one: VertexSet,
}

/// Partition of the non-terminal cut vertices below a block by the best
/// terminal count on a path down to a neighbour of x.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BlockChildren {
    pub at_least_two: VertexSet,
    pub one: VertexSet,
    pub zero: VertexSet,
    pub unreached: VertexSet,
}

/// Shared view of G - x for one round.
struct Frame<'a> {
    g: &'a Graph,
    terminals: &'a VertexSet,
    nx: &'a VertexSet,
    f: &'a BlockCutForest,
}

impl Frame<'_> {
    /// Most terminals on a path inside G_c from cut vertex c to some
    /// neighbour of x, or `None` if G_c has no such neighbour.
    fn best_count(&self, c: NodeId) -> Result<Option<usize>, SeparatorError> {
        let below = self.f.subtree_vertices(c).expect("node of the forest");
        let v = self.f.cut_vertex(c).expect("cut node");
        let gc = self.g.induced(below);
        let mut best = None;
        for &p in below.intersection(self.nx) {
            let m = max_terminals_on_path(&gc, self.terminals, v, p)?;
            best = best.max(Some(m));
        }
        Ok(best)
    }

    fn grandchildren(&self, v: NodeId) -> Result<GrandchildClassification, SeparatorError> {
        let mut out = GrandchildClassification::default();
        for c in self.f.grandchildren(v) {
            let cv = self.f.cut_vertex(c).expect("grandchildren are cut vertices");
            out.all.insert(cv);
            if self.best_count(c)?.is_some_and(|m| m >= 1) {
                out.at_least_one.insert(cv);
            }
        }
        Ok(out)
    }

    fn block_children(&self, d: NodeId) -> Result<BlockChildren, SeparatorError> {
        let mut out = BlockChildren::default();
        for &c in self.f.children(d) {
            let cv = self.f.cut_vertex(c).expect("children of blocks are cut vertices");
            if self.terminals.contains(&cv) {
                continue;
            }
            match self.best_count(c)? {
                Some(m) if m >= 2 => out.at_least_two.insert(cv),
                Some(1) => out.one.insert(cv),
                Some(_) => out.zero.insert(cv),
                None => out.unreached.insert(cv),
            };
        }
        Ok(out)
    }
}

fn check_pivot(g: &Graph, terminals: &VertexSet, x: Vertex) -> Result<(), BlockerError> {
    if !g.contains(x) {
        return Err(BlockerError::UnknownPivot(x));
    }
    if terminals.contains(&x) {
        return Err(BlockerError::PivotIsTerminal(x));
    }
    let pivot = VertexSet::from([x]);
    if !is_mwns(g, terminals, &pivot).expect("pivot is not a terminal") {
        let cycle = find_t_cycle(&g.without(&pivot), terminals).expect("a violation has a witness");
        return Err(BlockerError::PivotNotMwns(cycle));
    }
    Ok(())
}

/// C(v) and C>=1(v) for a cut node `v` of the forest `f` of G - x.
pub fn classify_grandchildren(
    g: &Graph,
    terminals: &VertexSet,
    x: Vertex,
    f: &BlockCutForest,
    v: NodeId,
) -> Result<GrandchildClassification, SeparatorError> {
    let nx = g.neighbors(x).clone();
    Frame { g, terminals, nx: &nx, f }.grandchildren(v)
}

/// Classification of the non-terminal children of block node `d`.
pub fn classify_block_children(
    g: &Graph,
    terminals: &VertexSet,
    x: Vertex,
    f: &BlockCutForest,
    d: NodeId,
) -> Result<BlockChildren, SeparatorError> {
    let nx = g.neighbors(x).clone();
    Frame { g, terminals, nx: &nx, f }.block_children(d)
}

/// Deepest node whose subtree plus x holds a T-cycle; ties go to the smaller id.
fn deepest_node(g: &Graph, terminals: &VertexSet, x: Vertex, f: &BlockCutForest) -> Option<NodeId> {
    (0..f.len())
        .filter(|&n| {
            let mut keep = f.subtree_vertices(n).expect("node of the forest").clone();
            keep.insert(x);
            has_t_cycle(&g.induced(&keep), terminals)
        })
        .max_by(|&a, &b| f.depth(a).cmp(&f.depth(b)).then(b.cmp(&a)))
}

/// A minimum set of vertices of `h` meeting every path from `a` to `b`;
/// members of `a` and `b` may be chosen.
fn min_ab_separator(h: &Graph, a: &VertexSet, b: &VertexSet) -> VertexSet {
    if a.is_empty() || b.is_empty() {
        return VertexSet::new();
    }
    let top = h.max_vertex().unwrap_or(0);
    let (s, t) = (top + 1, top + 2);
    let mut aux = h.clone();
    aux.add_vertex(s).expect("fresh id");
    aux.add_vertex(t).expect("fresh id");
    for &v in a {
        aux.add_edge(s, v).expect("fresh edge");
    }
    for &v in b {
        aux.add_edge(v, t).expect("fresh edge");
    }
    let q = SeparatorQuery::new(&aux, VertexSet::from([s]), VertexSet::from([t]));
    min_separator(&q).expect("the super terminals are not adjacent")
}

/// One round: the set Z, or `None` when no T-cycle is left.
pub fn blocker_step(g: &Graph, terminals: &VertexSet, x: Vertex) -> Result<Option<Round>, BlockerError> {
    check_pivot(g, terminals, x)?;
    if !has_t_cycle(g, terminals) {
        return Ok(None);
    }
    let h = g.without_vertex(x);
    let f = block_cut_forest(&h);
    let d = deepest_node(g, terminals, x, &f).expect("a T-cycle through x lives in one tree");
    let nx = g.neighbors(x).clone();
    let frame = Frame { g: &h, terminals, nx: &nx, f: &f };
    let empty = || std::array::from_fn(|_| VertexSet::new());

    if let Some(cv) = f.cut_vertex(d) {
        if !terminals.contains(&cv) {
            let z = VertexSet::from([cv]);
            return Ok(Some(Round { d, case: RoundCase::Cut, parts: empty(), z }));
        }
        let z = frame.grandchildren(d)?.at_least_one;
        debug_assert!(z.is_disjoint(terminals));
        return Ok(Some(Round { d, case: RoundCase::TerminalCut, parts: empty(), z }));
    }

    let block = f.block(d).expect("block node");
    let dt_vertices: VertexSet = block.difference(terminals).copied().collect();
    let dt = h.induced(&dt_vertices);
    let kids = frame.block_children(d)?;
    let q: VertexSet = kids.at_least_two.union(&kids.one).copied().collect();

    let z1 = gallai_q_paths(&dt, &q).cover;

    let mut b_side = kids.zero.clone();
    b_side.extend(nx.intersection(&dt_vertices).copied());
    let z2 = min_ab_separator(&dt, &kids.at_least_two, &b_side);

    let mut z3 = VertexSet::new();
    let mut z4 = VertexSet::new();
    if let Some(&t) = block.intersection(terminals).next() {
        let hit: VertexSet = z1.union(&z2).copied().collect();
        let rest = dt.without(&hit);
        for comp in connected_components(&rest) {
            if comp.is_disjoint(h.neighbors(t)) {
                continue;
            }
            let inside: VertexSet = comp.intersection(&q).copied().collect();
            debug_assert!(inside.len() <= 1);
            z3.extend(inside);
        }
        if let Some(tn) = f.cut_node(t).filter(|&tn| f.parent(tn) == Some(d)) {
            if frame.best_count(tn)?.is_some_and(|m| m >= 2) {
                z4 = frame.grandchildren(tn)?.at_least_one;
                debug_assert!(z4.len() <= 1);
            }
        }
    }

    let z5: VertexSet = f
        .parent(d)
        .and_then(|p| f.cut_vertex(p))
        .filter(|p| !terminals.contains(p))
        .into_iter()
        .collect();

    let parts = [z1, z2, z3, z4, z5];
    let z: VertexSet = parts.iter().flatten().copied().collect();
    debug_assert!(z.is_disjoint(terminals) && !z.contains(&x));
    Ok(Some(Round { d, case: RoundCase::Block, parts, z }))
}

/// Runs rounds until no T-cycle remains and returns the union of all Z.
pub fn blocker_with_trace(g: &Graph, terminals: &VertexSet, x: Vertex) -> Result<BlockerRun, BlockerError> {
    let mut current = g.clone();
    let mut solution = VertexSet::new();
    let mut rounds = Vec::new();
    while let Some(round) = blocker_step(&current, terminals, x)? {
        if round.z.is_empty() {
            return Err(BlockerError::NoProgress(rounds.len()));
        }
        current = current.without(&round.z);
        solution.extend(round.z.iter().copied());
        rounds.push(round);
    }
    Ok(BlockerRun { solution, rounds })
}

/// An x-avoiding near-separator of size at most 14 times the optimum.
pub fn blocker(g: &Graph, terminals: &VertexSet, x: Vertex) -> Result<VertexSet, BlockerError> {
    blocker_with_trace(g, terminals, x).map(|r| r.solution)
}
