#![allow(dead_code)]

//! Brute-force reference implementations and instance generators shared by
//! the integration tests. Nothing here calls into the algorithms under test;
//! only the graph container is reused.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use mwns::generate::{random_instance, RandomParams};
use mwns::mwns::find_t_cycle;
use mwns::{Graph, Instance, Vertex, VertexSet};
use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn set(v: &[Vertex]) -> VertexSet {
    v.iter().copied().collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::with_vertices(1..=n);
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.random_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Graph on `1..=n` whose edges are the set bits of `mask` over pairs in
/// lexicographic order.
pub fn graph_from_mask(n: usize, mask: u32) -> Graph {
    let mut g = Graph::with_vertices(1..=n);
    for (i, (u, v)) in (1..=n).tuple_combinations().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// One edge mask per isomorphism class of graphs on `n` vertices.
pub fn isomorphism_classes(n: usize) -> Vec<u32> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let index = |a: usize, b: usize| {
        let (a, b) = (a.min(b), a.max(b));
        pairs.iter().position(|&p| p == (a, b)).unwrap()
    };
    let perms: Vec<Vec<usize>> = (0..n).permutations(n).collect();
    let images: Vec<Vec<usize>> = perms
        .iter()
        .map(|pi| pairs.iter().map(|&(a, b)| index(pi[a], pi[b])).collect())
        .collect();
    let mut reps = BTreeSet::new();
    for mask in 0u32..1 << pairs.len() {
        let canon = images
            .iter()
            .map(|img| {
                img.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, j)| acc | 1 << j)
            })
            .min()
            .unwrap();
        reps.insert(canon);
    }
    reps.into_iter().collect()
}

pub fn reachable(g: &Graph, from: &VertexSet, removed: &VertexSet) -> VertexSet {
    let mut seen: VertexSet = from.iter().copied().filter(|v| g.contains(*v) && !removed.contains(v)).collect();
    let mut queue: VecDeque<Vertex> = seen.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !removed.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for v in g.vertices() {
        if !seen.contains(&v) {
            let c = reachable(g, &set(&[v]), &VertexSet::new());
            seen.extend(c.iter().copied());
            out.push(c);
        }
    }
    out
}

/// Every simple path from `s` to `t`.
pub fn simple_paths(g: &Graph, s: Vertex, t: Vertex) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, t: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let u = *path.last().unwrap();
        if u == t {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbors(u) {
            if !path.contains(&w) {
                path.push(w);
                go(g, t, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    if g.contains(s) && g.contains(t) {
        go(g, t, &mut vec![s], &mut out);
    }
    out
}

/// Every simple cycle (at least three vertices), each reported once.
pub fn simple_cycles(g: &Graph) -> Vec<Vec<Vertex>> {
    fn go(g: &Graph, start: Vertex, path: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let u = *path.last().unwrap();
        for &w in g.neighbors(u) {
            if w == start && path.len() >= 3 && path[1] < u {
                out.push(path.clone());
            } else if w > start && !path.contains(&w) {
                path.push(w);
                go(g, start, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in g.vertices() {
        go(g, s, &mut vec![s], &mut out);
    }
    out
}

pub fn two_ivd_paths(g: &Graph, a: Vertex, b: Vertex) -> bool {
    let interiors: Vec<VertexSet> = simple_paths(g, a, b)
        .into_iter()
        .map(|p| p[1..p.len() - 1].iter().copied().collect())
        .collect();
    if interiors.iter().any(|i| i.is_empty()) {
        return true;
    }
    interiors
        .iter()
        .tuple_combinations()
        .any(|(p, q)| p.is_disjoint(q))
}

/// No terminal pair has two internally disjoint paths in G - S.
pub fn condition_paths(g: &Graph, ts: &VertexSet, s: &VertexSet) -> bool {
    let h = g.without(s);
    ts.iter().tuple_combinations().all(|(&a, &b)| !two_ivd_paths(&h, a, b))
}

/// Every terminal pair is separated by S plus one non-terminal.
pub fn condition_one_more(g: &Graph, ts: &VertexSet, s: &VertexSet) -> bool {
    let candidates: Vec<Vertex> = g.vertices().filter(|v| !ts.contains(v)).collect();
    ts.iter().tuple_combinations().all(|(&a, &b)| {
        candidates.iter().any(|&v| {
            let mut removed = s.clone();
            removed.insert(v);
            !reachable(g, &set(&[a]), &removed).contains(&b)
        })
    })
}

/// T independent in G - S and no cycle of G - S meets two terminals.
pub fn condition_cycles(g: &Graph, ts: &VertexSet, s: &VertexSet) -> bool {
    let h = g.without(s);
    let independent = ts.iter().tuple_combinations().all(|(&a, &b)| !h.has_edge(a, b));
    independent
        && simple_cycles(&h)
            .iter()
            .all(|c| c.iter().filter(|v| ts.contains(v)).count() < 2)
}

pub fn brute_mwns(g: &Graph, ts: &VertexSet, s: &VertexSet) -> bool {
    s.is_disjoint(ts) && condition_cycles(g, ts, s)
}

pub fn subsets_up_to(pool: &[Vertex], max: usize) -> Vec<VertexSet> {
    (0..=max.min(pool.len()))
        .flat_map(|r| pool.iter().copied().combinations(r).map(VertexSet::from_iter))
        .collect()
}

/// Smallest near-separator by definition, if at most `k`.
pub fn brute_solve(inst: &Instance) -> Option<VertexSet> {
    let pool: Vec<Vertex> = inst.graph.vertices().filter(|v| !inst.terminals.contains(v)).collect();
    subsets_up_to(&pool, inst.k)
        .into_iter()
        .find(|s| brute_mwns(&inst.graph, &inst.terminals, s))
}

pub fn brute_opt_x(g: &Graph, ts: &VertexSet, x: Vertex) -> Option<usize> {
    let pool: Vec<Vertex> = g.vertices().filter(|v| *v != x && !ts.contains(v)).collect();
    subsets_up_to(&pool, pool.len())
        .into_iter()
        .find(|s| brute_mwns(g, ts, s))
        .map(|s| s.len())
}

pub fn separates(g: &Graph, x: &VertexSet, y: &VertexSet, s: &VertexSet) -> bool {
    reachable(g, x, s).is_disjoint(y)
}

/// Minimum number of deletable vertices separating X from Y, if any.
pub fn brute_min_separator(g: &Graph, x: &VertexSet, y: &VertexSet, fixed: &VertexSet) -> Option<usize> {
    let pool: Vec<Vertex> = g
        .vertices()
        .filter(|v| !x.contains(v) && !y.contains(v) && !fixed.contains(v))
        .collect();
    subsets_up_to(&pool, pool.len())
        .into_iter()
        .find(|s| separates(g, x, y, s))
        .map(|s| s.len())
}

/// Important (X,Y)-separators of size at most k, by definition.
pub fn brute_important(g: &Graph, x: &VertexSet, y: &VertexSet, fixed: &VertexSet, k: usize) -> Vec<VertexSet> {
    let pool: Vec<Vertex> = g
        .vertices()
        .filter(|v| !x.contains(v) && !y.contains(v) && !fixed.contains(v))
        .collect();
    let seps: Vec<(VertexSet, VertexSet)> = subsets_up_to(&pool, k)
        .into_iter()
        .filter(|s| separates(g, x, y, s))
        .map(|s| {
            let r = reachable(g, x, &s);
            (s, r)
        })
        .collect();
    let mut out: Vec<VertexSet> = seps
        .iter()
        .filter(|(s, _)| {
            s.iter().all(|v| {
                let mut smaller = s.clone();
                smaller.remove(v);
                !separates(g, x, y, &smaller)
            })
        })
        .filter(|(s, r)| {
            !seps
                .iter()
                .any(|(s2, r2)| s2.len() <= s.len() && r.is_subset(r2) && r != r2)
        })
        .map(|(s, _)| s.clone())
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// Q-paths whose interior avoids Q.
fn minimal_q_paths(g: &Graph, q: &VertexSet) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    for (&a, &b) in q.iter().tuple_combinations() {
        for p in simple_paths(g, a, b) {
            if p[1..p.len() - 1].iter().all(|v| !q.contains(v)) {
                out.push(p);
            }
        }
    }
    out
}

/// Largest number of vertex-disjoint Q-paths.
pub fn brute_q_packing(g: &Graph, q: &VertexSet) -> usize {
    fn go(paths: &[VertexSet], from: usize, used: &VertexSet) -> usize {
        let mut best = 0;
        for i in from..paths.len() {
            if paths[i].is_disjoint(used) {
                let mut next = used.clone();
                next.extend(paths[i].iter().copied());
                best = best.max(1 + go(paths, i + 1, &next));
            }
        }
        best
    }
    let paths: Vec<VertexSet> = minimal_q_paths(g, q)
        .into_iter()
        .map(VertexSet::from_iter)
        .collect();
    go(&paths, 0, &VertexSet::new())
}

pub fn has_q_path(g: &Graph, q: &VertexSet, removed: &VertexSet) -> bool {
    let h = g.without(removed);
    components(&h)
        .iter()
        .any(|c| c.intersection(q).nth(1).is_some())
}

/// Node Multiway Cut of size at most k exists.
pub fn brute_multiway_cut(inst: &Instance) -> bool {
    let pool: Vec<Vertex> = inst.graph.vertices().filter(|v| !inst.terminals.contains(v)).collect();
    subsets_up_to(&pool, inst.k).into_iter().any(|s| {
        components(&inst.graph.without(&s))
            .iter()
            .all(|c| c.intersection(&inst.terminals).nth(1).is_none())
    })
}

pub fn max_terminals_brute(g: &Graph, ts: &VertexSet, a: Vertex, b: Vertex) -> Option<usize> {
    simple_paths(g, a, b)
        .iter()
        .map(|p| p.iter().filter(|v| ts.contains(v)).count())
        .max()
}

/// A simple path from A to B through t with distinct ends.
pub fn forced_path_exists(g: &Graph, a: &VertexSet, b: &VertexSet, t: Vertex) -> bool {
    a.iter().any(|&p| {
        b.iter()
            .filter(|&&q| q != p)
            .any(|&q| simple_paths(g, p, q).iter().any(|path| path.contains(&t)))
    })
}

/// Parameters of the randomized solver suite.
pub fn suite_params(i: u64) -> RandomParams {
    RandomParams {
        n: 6 + (i % 7) as usize,
        p: if i.is_multiple_of(2) { 0.2 } else { 0.35 },
        terminals: 2 + (i / 2 % 4) as usize,
        k: (i / 7 % 4) as usize,
        seed: i,
        independent: !i.is_multiple_of(10),
    }
}

pub fn suite_instance(i: u64) -> Instance {
    random_instance(&suite_params(i))
}

/// Random graph, terminals and pivot x, with edges of G - x removed until
/// {x} is a near-separator, then extra edges at x.
pub fn blocker_instance(seed: u64) -> (Graph, VertexSet, Vertex) {
    let mut rng = rng(seed);
    let n = rng.random_range(6..=14);
    let p = [0.25, 0.35, 0.5][rng.random_range(0..3)];
    let mut g = random_graph(&mut rng, n, p);
    let x = rng.random_range(1..=n);
    let count = rng.random_range(2..=(n / 2).max(2));
    let ts: VertexSet = (1..=n)
        .filter(|v| *v != x)
        .choose_multiple(&mut rng, count)
        .into_iter()
        .collect();
    while let Some(c) = find_t_cycle(&g.without_vertex(x), &ts) {
        let i = rng.random_range(0..c.len());
        g.remove_edge(c[i], c[(i + 1) % c.len()]);
    }
    for v in 1..=n {
        if v != x && !g.has_edge(x, v) && rng.random_bool(0.3) {
            g.add_edge(x, v).unwrap();
        }
    }
    (g, ts, x)
}
