//! Enumerates all optimal solutions of an instance and, for each, a terminal
//! and important separator that some optimal solution uses.

use mwns::solver::{oracle_all_solutions, oracle_solve, pushing_lemma_witness};
use mwns::{Graph, Instance, VertexSet};

fn main() {
    let g = Graph::from_edges([
        (1, 2), (1, 3), (2, 4), (3, 4),
        (2, 5), (5, 6), (6, 7), (7, 2),
        (3, 8), (8, 9), (9, 10), (10, 3),
    ])
    .unwrap();
    let inst = Instance::new(g, VertexSet::from([1, 4, 5, 7, 8, 10]), 2).unwrap();
    let best = oracle_solve(&inst).unwrap();
    println!("optimum: {best:?}");
    let k = best.solution().map_or(0, |s| s.len());
    for s in oracle_all_solutions(&inst, k).unwrap().into_iter().filter(|s| s.len() == k) {
        let w = pushing_lemma_witness(&inst, &s).unwrap();
        println!("S={s:?}: t={} I={:?} {:?} -> {:?}", w.terminal, w.separator, w.kind, w.solution);
    }
}
