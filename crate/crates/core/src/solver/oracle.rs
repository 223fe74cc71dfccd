//! Exhaustive reference solver for small instances.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::mwns::{is_mwns, Instance, SolveResult};

/// Largest number of candidate sets the oracle will test.
pub const ORACLE_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} candidate sets exceed the enumeration limit")]
    TooLarge(u128),
}

fn binomial(n: usize, r: usize) -> u128 {
    (0..r as u128).fold(1u128, |acc, i| acc.saturating_mul(n as u128 - i) / (i + 1))
}

fn guard(n: usize, max_size: usize) -> Result<(), OracleError> {
    let total = (0..=max_size.min(n)).fold(0u128, |acc, r| acc.saturating_add(binomial(n, r)));
    if total > ORACLE_LIMIT {
        Err(OracleError::TooLarge(total))
    } else {
        Ok(())
    }
}

/// Near-separators drawn from `pool`, smallest size first and
/// lexicographically within a size, stopping after `max_size`.
fn solutions<'a>(
    g: &'a Graph,
    terminals: &'a VertexSet,
    pool: Vec<Vertex>,
    max_size: usize,
) -> impl Iterator<Item = VertexSet> + 'a {
    (0..=max_size.min(pool.len())).flat_map(move |r| {
        pool.clone()
            .into_iter()
            .combinations(r)
            .map(VertexSet::from_iter)
            .filter(move |s| is_mwns(g, terminals, s).expect("pool avoids terminals"))
    })
}

/// The lexicographically first minimum solution of size at most k, or NO.
pub fn oracle_solve(inst: &Instance) -> Result<SolveResult, OracleError> {
    let pool: Vec<Vertex> = inst.non_terminals().into_iter().collect();
    guard(pool.len(), inst.k)?;
    if !inst.graph.is_independent(&inst.terminals) {
        return Ok(SolveResult::No);
    }
    Ok(solutions(&inst.graph, &inst.terminals, pool, inst.k)
        .next()
        .map_or(SolveResult::No, SolveResult::Yes))
}

/// Every solution of size at most `max_size`.
pub fn oracle_all_solutions(inst: &Instance, max_size: usize) -> Result<Vec<VertexSet>, OracleError> {
    let pool: Vec<Vertex> = inst.non_terminals().into_iter().collect();
    guard(pool.len(), max_size)?;
    Ok(solutions(&inst.graph, &inst.terminals, pool, max_size).collect())
}

/// Size of a smallest near-separator avoiding `x`, or `None` if there is none.
pub fn oracle_opt_x(g: &Graph, terminals: &VertexSet, x: Vertex) -> Result<Option<usize>, OracleError> {
    let pool: Vec<Vertex> = g.vertices().filter(|v| *v != x && !terminals.contains(v)).collect();
    guard(pool.len(), pool.len())?;
    if !g.is_independent(terminals) {
        return Ok(None);
    }
    Ok(solutions(g, terminals, pool.clone(), pool.len()).next().map(|s| s.len()))
}
