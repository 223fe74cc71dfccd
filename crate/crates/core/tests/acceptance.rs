//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use common::*;
use itertools::Itertools;
use mwns::blocker::blocker_with_trace;
use mwns::generate::{random_instance, RandomParams};
use mwns::mwns::{is_mwns, minimalize};
use mwns::reducer::{lift_solution, reduce_terminals};
use mwns::separators::{enumerate_important_separators, gallai_q_paths, SeparatorQuery};
use mwns::solver::{oracle_all_solutions, oracle_opt_x, oracle_solve, pushing_lemma_witness, solve_with_stats, SearchStats, SolveOptions};
use mwns::{Instance, SolveResult, VertexSet};
use rand::seq::IteratorRandom;
use rand::Rng;

type Outcome = Result<String, String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct SuiteRun {
    inst: Instance,
    result: SolveResult,
    oracle: SolveResult,
    stats: SearchStats,
}

fn solver_suite() -> Vec<SuiteRun> {
    (0..500)
        .map(|i| {
            let inst = suite_instance(i);
            let (result, stats) = solve_with_stats(&inst, SolveOptions::default()).expect("solver error");
            let oracle = oracle_solve(&inst).expect("oracle error");
            SuiteRun { inst, result, oracle, stats }
        })
        .collect()
}

fn agreement(runs: &[SuiteRun], secs: f64) -> Outcome {
    let mut yes = 0;
    for (i, r) in runs.iter().enumerate() {
        check(r.result.is_yes() == r.oracle.is_yes(), || format!("instance {i}: solver and oracle disagree"))?;
        if let Some(s) = r.result.solution() {
            yes += 1;
            check(
                s.len() <= r.inst.k && s.is_disjoint(&r.inst.terminals) && brute_mwns(&r.inst.graph, &r.inst.terminals, s),
                || format!("instance {i}: returned set fails verification"),
            )?;
        }
    }
    check(secs <= 300.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} instances, {yes} YES, {:.2}s", runs.len(), secs))
}

fn blocker_contract() -> Outcome {
    let mut worst = 0.0f64;
    let mut drops = 0;
    for seed in 0..300 {
        let (g, ts, x) = blocker_instance(seed);
        check(brute_mwns(&g, &ts, &set(&[x])), || format!("seed {seed}: generator broke the pivot"))?;
        let run = blocker_with_trace(&g, &ts, x).map_err(|e| format!("seed {seed}: {e}"))?;
        check(
            !run.solution.contains(&x) && brute_mwns(&g, &ts, &run.solution),
            || format!("seed {seed}: output is not an x-avoiding near-separator"),
        )?;
        let opt = oracle_opt_x(&g, &ts, x).map_err(|e| e.to_string())?.ok_or("no x-avoiding solution")?;
        check(run.solution.len() <= 14 * opt, || format!("seed {seed}: {} > 14 * {opt}", run.solution.len()))?;
        if opt > 0 {
            worst = worst.max(run.solution.len() as f64 / opt as f64);
        }
        drops += run.rounds.len();
    }
    Ok(format!("300 instances, max ratio {worst:.2}, {drops} rounds"))
}

fn per_round_drop() -> Outcome {
    let mut rounds = 0;
    for seed in 0..300 {
        let (g, ts, x) = blocker_instance(seed);
        let run = blocker_with_trace(&g, &ts, x).map_err(|e| format!("seed {seed}: {e}"))?;
        let mut cur = g;
        let mut before = oracle_opt_x(&cur, &ts, x).map_err(|e| e.to_string())?.expect("pivot instance");
        for (i, round) in run.rounds.iter().enumerate() {
            cur = cur.without(&round.z);
            let after = oracle_opt_x(&cur, &ts, x).map_err(|e| e.to_string())?.expect("pivot instance");
            let need = round.z.len().div_ceil(14);
            check(before >= after + need, || {
                format!("seed {seed} round {i}: OPT {before} -> {after} with |Z| = {}", round.z.len())
            })?;
            before = after;
            rounds += 1;
        }
    }
    Ok(format!("{rounds} rounds checked"))
}

fn important_separators() -> Outcome {
    let mut total = 0;
    for seed in 0..200 {
        let mut rng = rng(1000 + seed);
        let n = rng.random_range(5..=10);
        let p = [0.3, 0.45][rng.random_range(0..2)];
        let mut g = random_graph(&mut rng, n, p);
        let picks = rng.random_range(2..=4);
        let chosen = (1..=n).choose_multiple(&mut rng, picks);
        let split = rng.random_range(1..chosen.len());
        let x: VertexSet = chosen[..split].iter().copied().collect();
        let y: VertexSet = chosen[split..].iter().copied().collect();
        for (&a, &b) in x.iter().cartesian_product(&y) {
            g.remove_edge(a, b);
        }
        let k = if seed % 10 == 0 { 0 } else { rng.random_range(1..=4) };
        let q = SeparatorQuery::new(&g, x.clone(), y.clone());
        let got = enumerate_important_separators(&q, k).separators;
        let want = brute_important(&g, &x, &y, &VertexSet::new(), k);
        check(got == want, || format!("query {seed}: got {got:?}, want {want:?}"))?;
        check(got.len() as u64 <= 4u64.pow(k as u32), || format!("query {seed}: {} > 4^{k}", got.len()))?;
        total += got.len();
    }
    Ok(format!("200 queries, {total} separators"))
}

fn reduction_equivalence() -> Outcome {
    let mut steps = 0;
    for i in 0..300u64 {
        let inst = random_instance(&RandomParams {
            n: 7 + (i % 6) as usize,
            p: [0.2, 0.3, 0.4][(i % 3) as usize],
            terminals: 3 + (i % 3) as usize,
            k: (i / 3 % 4) as usize,
            seed: 50_000 + i,
            independent: true,
        });
        let all = inst.non_terminals();
        let s_hat = if i % 2 == 0 { all } else { minimalize(&inst.graph, &inst.terminals, &all).unwrap() };
        let red = reduce_terminals(&inst, &s_hat).map_err(|e| format!("instance {i}: {e}"))?;
        steps += red.log.steps.len();
        let original = oracle_solve(&inst).map_err(|e| e.to_string())?;
        let Some(reduced) = red.instance else {
            check(!original.is_yes(), || format!("instance {i}: essential set exceeds k on a YES instance"))?;
            continue;
        };
        check(reduced.terminals.is_subset(&inst.terminals), || format!("instance {i}: T' not inside T"))?;
        check(reduced.k <= inst.k, || format!("instance {i}: k grew"))?;
        let induced = inst.graph.induced(&reduced.graph.vertex_set());
        check(induced == reduced.graph, || format!("instance {i}: G' not induced"))?;
        let answer = oracle_solve(&reduced).map_err(|e| e.to_string())?;
        check(answer.is_yes() == original.is_yes(), || format!("instance {i}: answers differ"))?;
        if let Some(s) = answer.solution() {
            let lifted = lift_solution(&red.log, s).map_err(|e| format!("instance {i}: {e}"))?;
            check(
                lifted.len() <= inst.k && brute_mwns(&inst.graph, &inst.terminals, &lifted),
                || format!("instance {i}: lifted set fails"),
            )?;
        }
    }
    Ok(format!("300 instances, {steps} logged steps"))
}

fn gallai() -> Outcome {
    let mut packed = 0;
    for seed in 0..200 {
        let mut rng = rng(2000 + seed);
        let n = rng.random_range(2..=9);
        let p = [0.2, 0.35, 0.5][rng.random_range(0..3)];
        let g = random_graph(&mut rng, n, p);
        let q: VertexSet = (1..=n).filter(|_| rng.random_bool(0.5)).collect();
        let r = gallai_q_paths(&g, &q);
        let best = brute_q_packing(&g, &q);
        check(r.packing.len() == best, || format!("case {seed}: packing {} vs optimum {best}", r.packing.len()))?;
        for p in &r.packing {
            let ok = p.len() >= 2
                && q.contains(&p[0])
                && q.contains(p.last().unwrap())
                && p.windows(2).all(|w| g.has_edge(w[0], w[1]))
                && p.iter().all_unique();
            check(ok, || format!("case {seed}: {p:?} is not a Q-path"))?;
        }
        let used: Vec<_> = r.packing.iter().flatten().collect();
        check(used.iter().all_unique(), || format!("case {seed}: packing paths overlap"))?;
        check(r.cover.len() <= 2 * r.packing.len(), || format!("case {seed}: cover too large"))?;
        check(!has_q_path(&g, &q, &r.cover), || format!("case {seed}: a Q-path survives the cover"))?;
        packed += best;
    }
    Ok(format!("200 cases, {packed} packed paths"))
}

fn leaf_bound(runs: &[SuiteRun]) -> Outcome {
    let mut compressions = 0;
    for (i, r) in runs.iter().enumerate() {
        for c in &r.stats.compressions {
            check((c.leaves as u128) <= c.leaf_bound(), || {
                format!("instance {i}: {} leaves with |T'| = {}, k' = {}", c.leaves, c.terminals, c.budget)
            })?;
            compressions += 1;
        }
    }
    Ok(format!("{compressions} branching runs within bound"))
}

fn characterizations() -> Outcome {
    let mut checked = 0u64;
    let mut graphs: Vec<(usize, u32)> = Vec::new();
    for n in 1..=5 {
        graphs.extend((0..1u32 << (n * (n - 1) / 2)).map(|m| (n, m)));
    }
    graphs.extend(isomorphism_classes(6).into_iter().map(|m| (6, m)));
    for &(n, mask) in &graphs {
        let g = graph_from_mask(n, mask);
        for ts in (1..=n).powerset().map(VertexSet::from_iter) {
            let pool: Vec<usize> = (1..=n).filter(|v| !ts.contains(v)).collect();
            for s in subsets_up_to(&pool, 2) {
                let lib = is_mwns(&g, &ts, &s).unwrap();
                let c1 = condition_paths(&g, &ts, &s);
                let c3 = condition_cycles(&g, &ts, &s);
                // the separator-plus-one condition is only claimed for non-empty S
                let c2 = if s.is_empty() { c1 } else { condition_one_more(&g, &ts, &s) };
                check(lib == c1 && c1 == c2 && c2 == c3, || {
                    format!("n={n} mask={mask} T={ts:?} S={s:?}: {lib} {c1} {c2} {c3}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} graphs, {checked} (T, S) pairs", graphs.len()))
}

fn pushing_witness(runs: &[SuiteRun]) -> Outcome {
    let (mut contained, mut all_but_one, mut vacuous) = (0, 0, 0);
    for (i, r) in runs.iter().enumerate() {
        let Some(opt) = r.oracle.solution() else { continue };
        if r.inst.is_trivial() {
            continue;
        }
        let w = pushing_lemma_witness(&r.inst, opt).map_err(|e| format!("instance {i}: {e}"))?;
        let sols = oracle_all_solutions(&r.inst, opt.len()).map_err(|e| e.to_string())?;
        check(sols.contains(&w.solution), || format!("instance {i}: witness solution is not optimal"))?;
        match w.kind {
            mwns::solver::WitnessKind::Contained => contained += 1,
            _ if w.is_vacuous() => vacuous += 1,
            _ => all_but_one += 1,
        }
    }
    Ok(format!("{contained} contained, {all_but_one} all-but-one, {vacuous} single-vertex"))
}

type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() -> ExitCode {
    let start = Instant::now();
    let runs = solver_suite();
    let secs = start.elapsed().as_secs_f64();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("exact solver agrees with the oracle", Box::new(|| agreement(&runs, secs))),
        ("blocker output within 14 times OPT_x", Box::new(blocker_contract)),
        ("OPT_x drops by ceil(|Z|/14) per blocker round", Box::new(per_round_drop)),
        ("important separators match brute force", Box::new(important_separators)),
        ("reduced instances are equivalent", Box::new(reduction_equivalence)),
        ("Q-path packing and cover", Box::new(gallai)),
        ("branching leaves within (32|T'|)^k'", Box::new(|| leaf_bound(&runs))),
        ("three near-separator characterizations agree", Box::new(characterizations)),
        ("pushing witness on every non-trivial YES instance", Box::new(|| pushing_witness(&runs))),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
