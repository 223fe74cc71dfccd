//! Seeded instance generators.

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::mwns::Instance;

/// Parameters of [`random_instance`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RandomParams {
    pub n: usize,
    pub p: f64,
    pub terminals: usize,
    pub k: usize,
    pub seed: u64,
    /// Resample until the terminals are pairwise non-adjacent.
    pub independent: bool,
}

/// Builds G(n, p) on `1..=n` and draws the terminals uniformly.
pub fn random_instance(params: &RandomParams) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let t = params.terminals.min(params.n);
    loop {
        let mut g = Graph::with_vertices(1..=params.n);
        for u in 1..=params.n {
            for v in u + 1..=params.n {
                if rng.random_bool(params.p) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        let terminals: VertexSet = (1..=params.n).choose_multiple(&mut rng, t).into_iter().collect();
        if !params.independent || g.is_independent(&terminals) {
            return Instance::new(g, terminals, params.k).expect("terminals drawn from the graph");
        }
    }
}

/// Node Multiway Cut to near-separator: for the terminals t1 < ... < tr add
/// fresh non-terminals w1..w(r-1) with N(wi) = {ti, t(i+1)}.
pub fn from_multiway_cut(inst: &Instance) -> Instance {
    let mut g = inst.graph.clone();
    let ts: Vec<Vertex> = inst.terminals.iter().copied().collect();
    let mut next = g.max_vertex().unwrap_or(0);
    for pair in ts.windows(2) {
        next += 1;
        g.add_vertex(next).expect("fresh vertex");
        g.add_edge(next, pair[0]).expect("fresh edge");
        g.add_edge(next, pair[1]).expect("fresh edge");
    }
    Instance::new(g, inst.terminals.clone(), inst.k).expect("terminals kept")
}
