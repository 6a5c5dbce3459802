//! Corpus harness: seeded random or exhaustive graph families, one record per
//! `(graph, m)`, persisted as JSON with a CSV summary alongside.

use std::path::{Path, PathBuf};
use std::time::{Instant, SystemTime};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use gbei_algebra::oracle::depth_oracle;
use gbei_algebra::MonomialOrder;
use gbei_core::bounds::{report_memo, ExactSource};
use gbei_core::classes::{classify_memo, ClassReport, SuMemo};
use gbei_core::generate::{all_connected_graphs, random_connected_graph};
use gbei_core::{invariants, GraphInvariants, SimpleGraph};

use crate::commands::Ctx;
use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum CorpusMode {
    Random {
        n_min: usize,
        n_max: usize,
        count: usize,
        seed: u64,
        edge_probability: f64,
    },
    Exhaustive {
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusConfig {
    pub mode: CorpusMode,
    pub m: Vec<usize>,
    pub oracle: bool,
    pub timings: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WallTimes {
    pub combinatorics_ms: f64,
    pub oracle_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusRecord {
    pub graph_id: String,
    pub n: usize,
    pub edge_count: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub invariants: GraphInvariants,
    pub class_flags: ClassReport,
    pub lower: usize,
    pub upper: Option<usize>,
    pub exact: Option<usize>,
    pub exact_source: ExactSource,
    pub oracle_depth: Option<usize>,
    pub notes: Vec<String>,
    pub violations: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wall_times: Option<WallTimes>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Summary {
    pub graphs: usize,
    pub records: usize,
    pub exact_known: usize,
    pub oracle_runs: usize,
    pub violations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusReport {
    pub schema_version: u32,
    pub generated_at: String,
    pub config: CorpusConfig,
    pub summary: Summary,
    pub records: Vec<CorpusRecord>,
}

/// Graphs with stable, sortable identifiers.
pub fn corpus_graphs(mode: &CorpusMode) -> CliResult<Vec<(String, SimpleGraph)>> {
    match *mode {
        CorpusMode::Random {
            n_min,
            n_max,
            count,
            seed,
            edge_probability,
        } => {
            if n_min == 0 || n_min > n_max {
                return Err(CliError::Usage(format!("empty vertex range {n_min}..{n_max}")));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..count)
                .map(|i| {
                    let n = rng.gen_range(n_min..=n_max);
                    let g = random_connected_graph(n, edge_probability, &mut |k| rng.gen_range(0..k));
                    (format!("s{seed}-{i:06}"), g)
                })
                .collect())
        }
        CorpusMode::Exhaustive { n } => {
            if n == 0 || n > 9 {
                return Err(CliError::Usage(format!("exhaustive enumeration supports 1..=9 vertices, got {n}")));
            }
            Ok(all_connected_graphs(n)
                .into_iter()
                .enumerate()
                .map(|(i, g)| (format!("n{n}-{i:06}"), g))
                .collect())
        }
    }
}

fn record(id: &str, g: &SimpleGraph, m: usize, config: &CorpusConfig, ctx: &Ctx, memo: &SuMemo) -> CliResult<CorpusRecord> {
    let start = Instant::now();
    let class_flags = classify_memo(g, &ctx.caps, memo)?;
    let report = report_memo(m, g, &ctx.caps, memo)?;
    let combinatorics_ms = start.elapsed().as_secs_f64() * 1e3;
    let mut violations = report.violations();
    let mut notes = Vec::new();
    let mut oracle_depth = None;
    let mut oracle_ms = None;
    if config.oracle {
        if m * g.n() > ctx.caps.subset_scan {
            notes.push(format!("oracle skipped: mn = {} exceeds the subset cap", m * g.n()));
        } else {
            let start = Instant::now();
            match depth_oracle(m, g, &MonomialOrder::default_for(m * g.n()), &ctx.caps, ctx.exec) {
                Ok(cert) => {
                    oracle_depth = Some(cert.depth);
                    if let Some(e) = report.exact {
                        if e != cert.depth {
                            violations.push(format!("oracle {} != exact {e} ({})", cert.depth, report.exact_source));
                        }
                    }
                    if cert.depth < report.lower {
                        violations.push(format!("oracle {} < lower {}", cert.depth, report.lower));
                    }
                    if let Some(u) = report.upper {
                        if cert.depth > u {
                            violations.push(format!("oracle {} > upper {u}", cert.depth));
                        }
                    }
                }
                Err(e) if e.is_limit() || e == gbei_algebra::Error::NotSquarefree => {
                    notes.push(format!("oracle skipped: {e}"));
                }
                Err(e) => return Err(e.into()),
            }
            oracle_ms = Some(start.elapsed().as_secs_f64() * 1e3);
        }
    }
    Ok(CorpusRecord {
        graph_id: id.to_string(),
        n: g.n(),
        edge_count: g.edge_count(),
        m,
        edges: g.edges().to_vec(),
        invariants: invariants(g),
        class_flags,
        lower: report.lower,
        upper: report.upper,
        exact: report.exact,
        exact_source: report.exact_source,
        oracle_depth,
        notes,
        violations,
        wall_times: config.timings.then_some(WallTimes {
            combinatorics_ms,
            oracle_ms,
        }),
    })
}

pub fn run_corpus(config: &CorpusConfig, ctx: &Ctx) -> CliResult<CorpusReport> {
    if let Some(&bad) = config.m.iter().find(|&&m| m < 2) {
        return Err(CliError::Usage(format!("m must be at least 2, got {bad}")));
    }
    let graphs = corpus_graphs(&config.mode)?;
    let jobs: Vec<(&str, &SimpleGraph, usize)> = graphs
        .iter()
        .flat_map(|(id, g)| config.m.iter().map(move |&m| (id.as_str(), g, m)))
        .collect();
    let memo = SuMemo::new();
    let mut records = ctx
        .exec
        .map(&jobs, |&(id, g, m)| record(id, g, m, config, ctx, &memo))
        .into_iter()
        .collect::<CliResult<Vec<_>>>()?;
    records.sort_by(|a, b| a.graph_id.cmp(&b.graph_id).then(a.m.cmp(&b.m)));
    let summary = Summary {
        graphs: graphs.len(),
        records: records.len(),
        exact_known: records.iter().filter(|r| r.exact.is_some()).count(),
        oracle_runs: records.iter().filter(|r| r.oracle_depth.is_some()).count(),
        violations: records.iter().map(|r| r.violations.len()).sum(),
    };
    Ok(CorpusReport {
        schema_version: SCHEMA_VERSION,
        generated_at: humantime::format_rfc3339_seconds(SystemTime::now()).to_string(),
        config: config.clone(),
        summary,
        records,
    })
}

/// Writes `path` (JSON) and the CSV summary next to it; returns the CSV path.
pub fn write_report(report: &CorpusReport, path: &Path) -> CliResult<PathBuf> {
    std::fs::write(path, serde_json::to_string_pretty(report)? + "\n")?;
    let csv_path = path.with_extension("csv");
    let mut w = csv::Writer::from_path(&csv_path).map_err(|e| CliError::Other(e.into()))?;
    w.write_record([
        "graphId",
        "n",
        "edgeCount",
        "m",
        "lower",
        "upper",
        "exact",
        "exactSource",
        "oracleDepth",
        "violations",
    ])
    .map_err(|e| CliError::Other(e.into()))?;
    let opt = |v: Option<usize>| v.map_or(String::new(), |x| x.to_string());
    for r in &report.records {
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.edge_count.to_string(),
            r.m.to_string(),
            r.lower.to_string(),
            opt(r.upper),
            opt(r.exact),
            r.exact_source.to_string(),
            opt(r.oracle_depth),
            r.violations.join("; "),
        ])
        .map_err(|e| CliError::Other(e.into()))?;
    }
    w.flush()?;
    Ok(csv_path)
}

/// `A..B` or `A..=B`, both inclusive.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
    let a = a.trim().parse().map_err(|_| format!("bad lower end in {s:?}"))?;
    let b = b.trim().parse().map_err(|_| format!("bad upper end in {s:?}"))?;
    Ok((a, b))
}
