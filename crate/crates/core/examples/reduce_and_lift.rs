//! Shrinks the terminal set of random instances, solves the reduced
//! instance and maps the answer back. Prints CSV on stdout.

use mwns::generate::{random_instance, RandomParams};
use mwns::mwns::minimalize;
use mwns::reducer::{lift_solution, reduce_terminals};
use mwns::solver::oracle_solve;

fn main() {
    println!("seed,n,k,s_hat,terminals,reduced_terminals,reduced_k,steps,answer");
    for seed in 0..20 {
        let inst = random_instance(&RandomParams {
            n: 12,
            p: 0.25,
            terminals: 6,
            k: (seed % 3) as usize + 1,
            seed,
            independent: true,
        });
        let s_hat = minimalize(&inst.graph, &inst.terminals, &inst.non_terminals()).unwrap();
        let red = reduce_terminals(&inst, &s_hat).unwrap();
        let (reduced_t, reduced_k, answer) = match &red.instance {
            None => (0, -1, "NO".to_string()),
            Some(r) => {
                let answer = match oracle_solve(r).unwrap().solution() {
                    Some(s) => {
                        let lifted = lift_solution(&red.log, s).unwrap();
                        assert!(inst.verify(&lifted).unwrap());
                        format!("YES {lifted:?}").replace(',', "")
                    }
                    None => "NO".to_string(),
                };
                (r.terminals.len(), r.k as i64, answer)
            }
        };
        println!(
            "{seed},{},{},{},{},{reduced_t},{reduced_k},{},{answer}",
            inst.graph.num_vertices(),
            inst.k,
            s_hat.len(),
            inst.terminals.len(),
            red.log.steps.len()
        );
    }
}
