//! Runs the pivot-avoiding approximation and compares it with the optimum.

use mwns::blocker::blocker_with_trace;
use mwns::generate::{random_instance, RandomParams};
use mwns::mwns::{find_t_cycle, is_mwns};
use mwns::solver::oracle_opt_x;

fn main() {
    let mut shown = 0;
    for seed in 0.. {
        let mut inst = random_instance(&RandomParams { n: 11, p: 0.35, terminals: 4, k: 0, seed, independent: true });
        let x = 1;
        if inst.terminals.contains(&x) {
            continue;
        }
        // Break every T-cycle that avoids x so that {x} is a near-separator.
        while let Some(c) = find_t_cycle(&inst.graph.without_vertex(x), &inst.terminals) {
            inst.graph.remove_edge(c[0], c[1]);
        }
        let run = blocker_with_trace(&inst.graph, &inst.terminals, x).unwrap();
        if run.rounds.is_empty() {
            continue;
        }
        assert!(is_mwns(&inst.graph, &inst.terminals, &run.solution).unwrap());
        let opt = oracle_opt_x(&inst.graph, &inst.terminals, x).unwrap().unwrap();
        println!("seed {seed}: |Z|={} opt={opt} solution={:?}", run.solution.len(), run.solution);
        print!("{run}");
        shown += 1;
        if shown == 3 {
            break;
        }
    }
}
