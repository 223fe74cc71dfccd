//! Decides a small instance and prints the search counters.

use mwns::solver::{solve_with_stats, SolveOptions};
use mwns::{Graph, Instance, SolveResult, VertexSet};

fn main() {
    // Two 4-cycles sharing vertex 1, each with two terminals.
    let g = Graph::from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (5, 6), (6, 7), (7, 1)]).unwrap();
    let terminals = VertexSet::from([2, 4, 5, 7]);

    for k in 0..=2 {
        let inst = Instance::new(g.clone(), terminals.clone(), k).unwrap();
        let (result, stats) = solve_with_stats(&inst, SolveOptions::default()).unwrap();
        match result {
            SolveResult::Yes(s) => println!("k={k}: YES {s:?}"),
            SolveResult::No => println!("k={k}: NO"),
        }
        println!("  nodes={} leaves={} within bound: {}", stats.nodes, stats.leaves, stats.within_leaf_bound());
    }
}
