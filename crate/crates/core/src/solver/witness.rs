//! Search for the important-separator witness that justifies branching.

use thiserror::Error;

use crate::graph::{Vertex, VertexSet};
use crate::mwns::Instance;
use crate::separators::{enumerate_important_separators, SeparatorQuery};
use crate::solver::oracle::{oracle_all_solutions, OracleError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    /// The separator has size at most k and lies inside the solution.
    Contained,
    /// All of the separator but `v` lies inside the solution.
    AllButOne { v: Vertex },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushingWitness {
    pub terminal: Vertex,
    pub separator: VertexSet,
    pub solution: VertexSet,
    pub kind: WitnessKind,
}

impl PushingWitness {
    /// True for an all-but-one witness whose separator is a single vertex.
    pub fn is_vacuous(&self) -> bool {
        matches!(self.kind, WitnessKind::AllButOne { .. }) && self.separator.len() == 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("the empty set already solves the instance")]
    Trivial,
    #[error("the given set is not a solution")]
    NotASolution,
    #[error("no witness exists")]
    NotFound,
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Finds a terminal t, an important (t, T - t)-separator I and a solution S*
/// no larger than `s` with I inside S* (|I| <= k) or all but one vertex of I
/// inside S* (|I| <= k+1).
///
/// Contained witnesses are preferred, then all-but-one witnesses with |I| >= 2.
pub fn pushing_lemma_witness(inst: &Instance, s: &VertexSet) -> Result<PushingWitness, WitnessError> {
    if inst.is_trivial() {
        return Err(WitnessError::Trivial);
    }
    if !inst.verify(s).unwrap_or(false) || !s.is_disjoint(&inst.terminals) {
        return Err(WitnessError::NotASolution);
    }
    let solutions = oracle_all_solutions(inst, s.len())?;
    let k = inst.k;
    let per_terminal: Vec<(Vertex, Vec<VertexSet>)> = inst
        .terminals
        .iter()
        .map(|&t| {
            let others: VertexSet = inst.terminals.iter().copied().filter(|&u| u != t).collect();
            let q = SeparatorQuery::new(&inst.graph, VertexSet::from([t]), others)
                .with_undeletable(inst.terminals.clone());
            (t, enumerate_important_separators(&q, k + 1).separators)
        })
        .collect();

    let contained = per_terminal.iter().find_map(|(t, seps)| {
        seps.iter().filter(|i| i.len() <= k).find_map(|i| {
            let star = solutions.iter().find(|sol| i.is_subset(sol))?;
            Some(PushingWitness { terminal: *t, separator: i.clone(), solution: star.clone(), kind: WitnessKind::Contained })
        })
    });
    if let Some(w) = contained {
        return Ok(w);
    }
    for min_len in [2, 1] {
        for (t, seps) in &per_terminal {
            for i in seps.iter().filter(|i| i.len() >= min_len) {
                for &v in i {
                    let rest: VertexSet = i.iter().copied().filter(|&u| u != v).collect();
                    if let Some(star) = solutions.iter().find(|sol| rest.is_subset(sol)) {
                        return Ok(PushingWitness {
                            terminal: *t,
                            separator: i.clone(),
                            solution: star.clone(),
                            kind: WitnessKind::AllButOne { v },
                        });
                    }
                }
            }
        }
    }
    Err(WitnessError::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn set(v: &[Vertex]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn six_cycle_has_a_witness() {
        let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6)]).unwrap();
        let inst = Instance::new(g, set(&[3, 5]), 1).unwrap();
        let w = pushing_lemma_witness(&inst, &set(&[1])).unwrap();
        assert!(w.separator.len() <= 2);
        assert!(inst.verify(&w.solution).unwrap());
    }

    #[test]
    fn separating_solution_is_contained() {
        // t=1 sees a=2 and b=3, which also carry the 4-cycles 2-5-6-7 and 3-8-9-10;
        // {2, 3} is optimal and cuts 1 off.
        let g = Graph::from_edges([
            (1, 2), (1, 3), (2, 4), (3, 4), (2, 5), (5, 6), (6, 7), (7, 2), (3, 8), (8, 9), (9, 10), (10, 3),
        ])
        .unwrap();
        let inst = Instance::new(g, set(&[1, 4, 5, 7, 8, 10]), 2).unwrap();
        let w = pushing_lemma_witness(&inst, &set(&[2, 3])).unwrap();
        assert_eq!(w.kind, WitnessKind::Contained);
    }

    #[test]
    fn trivial_is_rejected() {
        let g = Graph::from_edges([(1, 2)]).unwrap();
        let inst = Instance::new(g, set(&[1]), 0).unwrap();
        assert_eq!(pushing_lemma_witness(&inst, &set(&[])), Err(WitnessError::Trivial));
    }
}
