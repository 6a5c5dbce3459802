//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
//! if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gbei_algebra::oracle;
use gbei_algebra::OrderKind;
use gbei_cli::commands::{self, Ctx};
use gbei_core::bounds::{exact_depth, lower_bound, report, upper_bound};
use gbei_core::classes::{is_block_graph, is_in_h1, is_strongly_unmixed};
use gbei_core::completion::complete_in_order;
use gbei_core::fixtures::{fig1, fig4, fig5, glued_cliques, triangle_chain};
use gbei_core::generate::{all_connected_graphs, random_connected_graph};
use gbei_core::{Caps, ExactSource, SimpleGraph};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle_depth(m: usize, g: &SimpleGraph) -> Result<usize, String> {
    oracle::depth(m, g, &Caps::default()).map_err(|e| format!("oracle failed on m={m}, {g:?}: {e}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cycles() -> Outcome {
    for (m, n) in [(2, 4), (2, 5), (2, 6), (3, 4)] {
        let d = oracle_depth(m, &SimpleGraph::cycle(n).map_err(err)?)?;
        ensure(d == m + n - 2, || format!("C_{n}, m={m}: oracle {d}, expected {}", m + n - 2))?;
    }
    Ok("4 cycles match m+n-2".into())
}

fn block_graphs() -> Outcome {
    let caps = Caps::default();
    let mut checked = 0;
    for n in 1..=4 {
        for g in all_connected_graphs(n) {
            if !is_block_graph(&g, &caps).map_err(err)? {
                continue;
            }
            for m in [2, 3] {
                if m * n > 12 {
                    continue;
                }
                let d = oracle_depth(m, &g)?;
                ensure(d == m + n - 1, || format!("m={m}, {g:?}: oracle {d}, expected {}", m + n - 1))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, m) pairs equal m+n-1"))
}

fn h1_family() -> Outcome {
    let caps = Caps::default();
    let mut graphs = Vec::new();
    'outer: for s in 1..=4 {
        for groups in 2..=4 {
            for first in 1..=3 {
                let mut extra = vec![1; groups];
                extra[0] = first;
                if s + extra.iter().sum::<usize>() > 10 {
                    continue;
                }
                graphs.push(glued_cliques(s, &extra));
                if graphs.len() == 20 {
                    break 'outer;
                }
            }
        }
    }
    ensure(graphs.len() == 20, || format!("only {} graphs constructed", graphs.len()))?;
    for g in &graphs {
        ensure(is_in_h1(g, &caps).map_err(err)?.is_some(), || format!("{g:?} not recognized as H1"))?;
        for m in 2..=4 {
            let lo = lower_bound(m, g).map_err(err)?;
            let up = upper_bound(m, g).map_err(err)?;
            ensure(lo == up, || format!("m={m}, {g:?}: lower {lo} != upper {up}"))?;
        }
    }
    let d = oracle_depth(2, &fig1())?;
    ensure(d == 4, || format!("fig1 oracle {d}, expected 4"))?;
    Ok("20 graphs with lower = upper; fig1 oracle = 4".into())
}

fn even_cycles() -> Outcome {
    let caps = Caps::default();
    for k in 2..=4 {
        let g = SimpleGraph::cycle(2 * k).map_err(err)?;
        for m in [2, 3] {
            let r = report(m, &g, &caps).map_err(err)?;
            let up = r.upper.ok_or("missing upper bound")?;
            ensure(up - r.lower == k, || format!("C_{}, m={m}: gap {}", 2 * k, up - r.lower))?;
            ensure(r.exact_source == ExactSource::H2 && r.exact == Some(up), || {
                format!("C_{}, m={m}: exact {:?} from {:?}", 2 * k, r.exact, r.exact_source)
            })?;
        }
    }
    Ok("gap equals k and exact = upper via H2".into())
}

fn triangle_chains() -> Outcome {
    let caps = Caps::default();
    for k in 2..=4 {
        let g = triangle_chain(k);
        for m in 2..=4 {
            let r = report(m, &g, &caps).map_err(err)?;
            let up = r.upper.ok_or("missing upper bound")?;
            let ex = r.exact.ok_or_else(|| format!("k={k}, m={m}: no exact value"))?;
            ensure(ex == r.lower && ex == 2 * k + m, || format!("k={k}, m={m}: exact {ex}, lower {}", r.lower))?;
            ensure(up - ex == k, || format!("k={k}, m={m}: upper {up}, exact {ex}"))?;
        }
    }
    for m in 2..=4 {
        let r = report(m, &fig4(), &caps).map_err(err)?;
        ensure(r.exact == Some(m + 3) && r.lower == m + 3 && r.upper == Some(m + 4), || {
            format!("fig4, m={m}: {r:?}")
        })?;
    }
    Ok("chains k=2..4 and fig4 as expected".into())
}

fn strict_gap() -> Outcome {
    let r = report(2, &fig5(), &Caps::default()).map_err(err)?;
    ensure(r.lower == 6 && r.upper == Some(8), || format!("fig5 bounds {} / {:?}", r.lower, r.upper))?;
    let d = oracle_depth(2, &fig5())?;
    ensure(d == 7, || format!("fig5 oracle {d}, expected 7"))?;
    Ok("lower 6, upper 8, oracle 7".into())
}

fn decomposition() -> Outcome {
    let ctx = Ctx::default();
    let mut checked = 0;
    for n in 1..=4 {
        for g in all_connected_graphs(n) {
            let out = commands::decompose(&g, 2, OrderKind::Lex, &ctx).map_err(err)?;
            ensure(out.verified, || format!("{g:?}: intersection differs from J"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} connected graphs verified"))
}

fn bound_soundness() -> Outcome {
    let caps = Caps::default();
    let (mut pairs, mut exact) = (0, 0);
    for n in 2..=7 {
        for g in all_connected_graphs(n) {
            if g.is_complete() {
                continue;
            }
            for m in 2..=4 {
                let lo = lower_bound(m, &g).map_err(err)?;
                let up = upper_bound(m, &g).map_err(err)?;
                ensure(lo <= up, || format!("m={m}, {g:?}: lower {lo} > upper {up}"))?;
                if let Some(e) = exact_depth(m, &g, &caps).map_err(err)? {
                    ensure(lo <= e.value && e.value <= up, || {
                        format!("m={m}, {g:?}: exact {} outside [{lo}, {up}]", e.value)
                    })?;
                    exact += 1;
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (graph, m) pairs ordered, {exact} exact values inside"))
}

fn completion_order() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..500 {
        let n = rng.gen_range(2..=7);
        let g = random_connected_graph(n, 0.4, &mut |b| rng.gen_range(0..b));
        let size = rng.gen_range(1..=3.min(n));
        let mut vs: Vec<usize> = (1..=n).collect();
        vs.shuffle(&mut rng);
        let mut w = vs[..size].to_vec();
        w.sort_unstable();
        let reference = complete_in_order(&g, &w);
        w.shuffle(&mut rng);
        let shuffled = complete_in_order(&g, &w);
        ensure(reference.edges() == shuffled.edges(), || {
            format!("trial {trial}: {g:?} with order {w:?} differs")
        })?;
    }
    Ok("500 triples agree".into())
}

fn strongly_unmixed() -> Outcome {
    let caps = Caps::default();
    let mut checked = 0;
    for n in 1..=4 {
        for g in all_connected_graphs(n) {
            if is_strongly_unmixed(&g, &caps).map_err(err)?.is_none() {
                continue;
            }
            for m in [2, 3] {
                let d = oracle_depth(m, &g)?;
                ensure(d == m + n - 1, || format!("m={m}, {g:?}: oracle {d}, expected {}", m + n - 1))?;
                checked += 1;
            }
        }
    }
    let k2 = SimpleGraph::complete(2).map_err(err)?;
    let g = k2.disjoint_union(&SimpleGraph::path(3).map_err(err)?).map_err(err)?;
    ensure(is_strongly_unmixed(&g, &caps).map_err(err)?.is_some(), || "K2+P3 not strongly unmixed".into())?;
    let d = oracle_depth(2, &g)?;
    ensure(d == 7, || format!("K2+P3 oracle {d}, expected 7"))?;
    Ok(format!("{checked} connected pairs equal m+n-1; K2+P3 = 7"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cycle depth", cycles),
        ("block graph depth", block_graphs),
        ("H1 equality", h1_family),
        ("gap growth upward", even_cycles),
        ("gap growth downward", triangle_chains),
        ("strict gap instance", strict_gap),
        ("prime decomposition", decomposition),
        ("bound soundness", bound_soundness),
        ("completion order independence", completion_order),
        ("strongly unmixed depth", strongly_unmixed),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
