//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use altham::cycle::validate_factor;
use altham::merge::{good_pairs, merge_good_pair};
use altham::oracle::{alternating_path_table, oracle_alt_path, oracle_factor, oracle_hamiltonian};
use altham::predicates::{exists_alternating_path, is_2m_closed};
use altham::{
    closure_2m, find_alternating_cycle_factor, gen_complete, gen_counterexample, gen_dominated,
    gen_random, is_2nm_closed, is_color_connected, solve_hamiltonian, validate_cycle, Color,
    ColoredMultigraph, SolveResult,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: &[String], detail: String) -> Self {
        let detail = match failures.first() {
            None => detail,
            Some(first) => format!("{detail}; {} failure(s), first: {first}", failures.len()),
        };
        Outcome {
            pass: failures.is_empty(),
            detail,
        }
    }
}

/// 2-M-closed graphs with 4 <= n <= 10: random complete colorings, closures
/// of random sparse graphs, and planted domination instances.
fn closed_corpus() -> Vec<(String, ColoredMultigraph)> {
    let mut out = Vec::new();
    for n in 4..=10 {
        for seed in 0..40 {
            out.push((format!("complete n={n} seed={seed}"), gen_complete(n, seed)));
            let density = 0.15 + 0.5 * (seed % 5) as f64 / 4.0;
            let base = gen_random(n, density, 0.2, seed).expect("valid probabilities");
            out.push((
                format!("closure n={n} density={density} seed={seed}"),
                closure_2m(&base, seed),
            ));
        }
    }
    let shapes: [&[usize]; 6] = [
        &[2, 2],
        &[4, 2],
        &[4, 4],
        &[2, 2, 2],
        &[4, 2, 2],
        &[2, 4, 4],
    ];
    for (k, lengths) in shapes.iter().enumerate() {
        for seed in 0..5 {
            let color = if seed % 2 == 0 {
                Color::Blue
            } else {
                Color::Red
            };
            let g = gen_dominated(lengths, color, seed + 10 * k as u64).expect("valid lengths");
            out.push((format!("dominated {lengths:?} seed={seed}"), g));
        }
    }
    out
}

struct Solved {
    name: String,
    graph: ColoredMultigraph,
    result: Result<SolveResult, altham::EngineError>,
}

fn criterion_1(solved: &[Solved]) -> Outcome {
    let mut failures = Vec::new();
    let mut hamiltonian = 0;
    for s in solved {
        let g = &s.graph;
        if !is_2m_closed(g) {
            failures.push(format!("{}: corpus graph not 2-M-closed", s.name));
            continue;
        }
        let result = match &s.result {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: engine error {e}", s.name));
                continue;
            }
        };
        let solved_yes = match result {
            SolveResult::HamiltonianCycle(c) => {
                if c.len() != g.vertex_count() || !validate_cycle(g, c) {
                    failures.push(format!("{}: returned cycle invalid", s.name));
                }
                true
            }
            SolveResult::NotTwoMClosed(_) => {
                failures.push(format!("{}: reported not 2-M-closed", s.name));
                continue;
            }
            _ => false,
        };
        let predicted = is_color_connected(g) && find_alternating_cycle_factor(g).is_some();
        let oracle = oracle_hamiltonian(g).is_some();
        if solved_yes != predicted || solved_yes != oracle {
            failures.push(format!(
                "{}: solver {solved_yes}, conditions {predicted}, oracle {oracle}",
                s.name
            ));
        }
        hamiltonian += usize::from(solved_yes);
    }
    Outcome::new(
        &failures,
        format!("{} graphs, {hamiltonian} Hamiltonian", solved.len()),
    )
}

fn criterion_2() -> Outcome {
    let mut failures = Vec::new();
    for k1 in 2..=4 {
        for k2 in 2..=4 {
            let g = match gen_counterexample(k1, k2) {
                Ok(g) => g,
                Err(e) => {
                    failures.push(format!("({k1},{k2}): {e}"));
                    continue;
                }
            };
            let ok = is_2nm_closed(&g)
                && is_color_connected(&g)
                && find_alternating_cycle_factor(&g).is_some()
                && oracle_hamiltonian(&g).is_none();
            if !ok {
                failures.push(format!("({k1},{k2}): property check failed"));
            }
        }
    }
    Outcome::new(&failures, "9 parameter pairs".into())
}

/// All colorings of the pairs of an `n`-vertex graph, four states per pair.
fn graph_from_code(n: usize, mut code: u64) -> ColoredMultigraph {
    let mut g = ColoredMultigraph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let state = code % 4;
            code /= 4;
            if state & 1 != 0 {
                g.add_edge(u, v, Color::Blue).unwrap();
            }
            if state & 2 != 0 {
                g.add_edge(u, v, Color::Red).unwrap();
            }
        }
    }
    g
}

fn criterion_3() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut check = |name: String, g: &ColoredMultigraph| {
        count += 1;
        let fast = find_alternating_cycle_factor(g);
        let slow = oracle_factor(g);
        if fast.is_some() != slow.is_some() {
            failures.push(format!(
                "{name}: matching {}, oracle {}",
                fast.is_some(),
                slow.is_some()
            ));
        }
        if let Some(f) = fast {
            if !validate_factor(g, &f) {
                failures.push(format!("{name}: invalid factor"));
            }
        }
    };
    for n in 1..=4 {
        let pairs = n * (n - 1) / 2;
        for code in 0..4u64.pow(pairs as u32) {
            check(
                format!("exhaustive n={n} code={code}"),
                &graph_from_code(n, code),
            );
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..10_000 {
        let n = if k % 2 == 0 { 5 } else { 6 };
        let code = rng.random::<u64>() & ((1u64 << (n * (n - 1))) - 1);
        check(
            format!("sample n={n} code={code}"),
            &graph_from_code(n, code),
        );
    }
    for seed in 0..600 {
        let n = 7 + (seed % 3) as usize;
        let density = [0.3, 0.5, 0.8][(seed / 3 % 3) as usize];
        let g = gen_random(n, density, 0.25, seed).unwrap();
        check(format!("random n={n} seed={seed}"), &g);
    }
    Outcome::new(&failures, format!("{count} graphs"))
}

fn criterion_4(solved: &[Solved]) -> Outcome {
    let mut failures = Vec::new();
    let mut pairs = 0;
    for s in solved {
        let g = &s.graph;
        let Some(factor) = find_alternating_cycle_factor(g) else {
            continue;
        };
        for (i, c1) in factor.cycles.iter().enumerate() {
            for c2 in &factor.cycles[i + 1..] {
                for p in good_pairs(g, c1, c2) {
                    pairs += 1;
                    match merge_good_pair(g, c1, c2, &p) {
                        Ok(m) if m.len() == c1.len() + c2.len() && validate_cycle(g, &m) => {}
                        Ok(_) => failures.push(format!("{}: {p:?} gave a bad cycle", s.name)),
                        Err(e) => failures.push(format!("{}: {e}", s.name)),
                    }
                }
            }
        }
    }
    Outcome::new(&failures, format!("{pairs} good pairs"))
}

fn criterion_5(solved: &[Solved]) -> Outcome {
    let mut failures = Vec::new();
    let mut certs = 0;
    for s in solved {
        if let Ok(SolveResult::NotColorConnected(cert)) = &s.result {
            certs += 1;
            let confirmed = Color::BOTH.into_iter().all(|last| {
                exists_alternating_path(&s.graph, cert.vertex, cert.target, cert.missing, last)
                    .is_none()
            });
            if !confirmed || !cert.check(&s.graph) {
                failures.push(format!("{}: {cert} refuted", s.name));
            }
        }
    }
    if certs == 0 {
        failures.push("no certificate in the corpus".into());
    }
    Outcome::new(&failures, format!("{certs} certificates"))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    let mut queries = 0;
    for seed in 0..240u64 {
        let n = 3 + (seed % 7) as usize;
        let density = [0.25, 0.45, 0.7][(seed % 3) as usize];
        let g = gen_random(n, density, 0.2, seed).unwrap();
        for x in 0..n {
            for first in Color::BOTH {
                let table = alternating_path_table(&g, x, first);
                for y in 0..n {
                    for last in Color::BOTH {
                        queries += 1;
                        let fast = exists_alternating_path(&g, x, y, first, last);
                        let slow = oracle_alt_path(&g, x, y, first, last).is_some();
                        let tabled = table[y][last as usize];
                        if fast.is_some() != slow || slow != tabled {
                            failures.push(format!("seed={seed} {x}->{y} {first}{last}"));
                        }
                        if let Some(p) = fast {
                            if !p.is_valid_in(&g) {
                                failures.push(format!("seed={seed} {x}->{y}: invalid path"));
                            }
                        }
                    }
                }
            }
        }
    }
    Outcome::new(&failures, format!("240 graphs, {queries} queries"))
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..240u64 {
        let n = 3 + (seed % 8) as usize;
        let g = gen_random(n, 0.1 + (seed % 4) as f64 * 0.15, 0.1, seed).unwrap();
        let h = closure_2m(&g, seed);
        if !is_2m_closed(&h) || !g.is_subgraph_of(&h) || closure_2m(&h, seed ^ 0xff) != h {
            failures.push(format!("seed={seed}"));
        }
    }
    Outcome::new(&failures, "240 inputs".into())
}

fn main() -> ExitCode {
    let start = Instant::now();
    let solved: Vec<Solved> = closed_corpus()
        .into_iter()
        .map(|(name, graph)| {
            let result = solve_hamiltonian(&graph);
            Solved {
                name,
                graph,
                result,
            }
        })
        .collect();

    type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);
    let criteria: [Criterion; 7] = [
        ("theorem equivalence", Box::new(|| criterion_1(&solved))),
        ("counterexample family", Box::new(criterion_2)),
        ("factor reduction", Box::new(criterion_3)),
        ("good-pair merges", Box::new(|| criterion_4(&solved))),
        ("certificates", Box::new(|| criterion_5(&solved))),
        ("path search", Box::new(criterion_6)),
        ("closure operator", Box::new(criterion_7)),
    ];
    let mut all = true;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "criterion {} ({name}): {} ({}, {:.1}s)",
            k + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail,
            t.elapsed().as_secs_f64()
        );
    }
    println!("total {:.1}s", start.elapsed().as_secs_f64());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
