//! One function per subcommand; each returns a serializable report.

use serde::Serialize;

use gbei_algebra::groebner::GbLimits;
use gbei_algebra::ideal::{build_ideal, build_prime_component, intersect, BinomialIdeal};
use gbei_algebra::oracle::{depth_oracle, DepthCertificate};
use gbei_algebra::{export_cas, Dialect, MonomialOrder, OrderKind};
use gbei_core::bounds::{report_memo, DepthReport, ExactSource};
use gbei_core::classes::{classify_memo, ClassReport, SuMemo};
use gbei_core::connectivity::vertex_connectivity;
use gbei_core::cutsets::{enumerate_cutsets_with, CutsetFamily};
use gbei_core::{invariants, Caps, Exec, GraphInvariants, SimpleGraph, VertexSet};

use crate::error::CliResult;

#[derive(Clone, Debug, Default)]
pub struct Ctx {
    pub caps: Caps,
    pub exec: Exec,
}

pub fn order_for(kind: OrderKind, m: usize, g: &SimpleGraph) -> MonomialOrder {
    MonomialOrder::row_major(kind, m * g.n())
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StatsOutput {
    pub graph: SimpleGraph,
    pub invariants: GraphInvariants,
    pub free_vertices: VertexSet,
    pub connectivity_witness: Option<VertexSet>,
}

pub fn stats(g: &SimpleGraph) -> CliResult<StatsOutput> {
    let witness = if g.is_connected() {
        vertex_connectivity(g)?.witness_separator
    } else {
        None
    };
    Ok(StatsOutput {
        graph: g.clone(),
        invariants: invariants(g),
        free_vertices: g.free_vertices(),
        connectivity_witness: witness,
    })
}

pub fn classify(g: &SimpleGraph, ctx: &Ctx) -> CliResult<ClassReport> {
    Ok(classify_memo(g, &ctx.caps, &SuMemo::new())?)
}

pub fn bounds(g: &SimpleGraph, m: usize, ctx: &Ctx) -> CliResult<DepthReport> {
    Ok(report_memo(m, g, &ctx.caps, &SuMemo::new())?)
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DepthOutput {
    pub depth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pd: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub maximizing_subset: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub assumption_flags: Vec<String>,
    pub report: DepthReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<DepthCertificate>,
    pub violations: Vec<String>,
}

/// Bounds and closed forms, plus the symbolic oracle when requested. The oracle
/// value must match every closed form and lie within the bounds.
pub fn depth(g: &SimpleGraph, m: usize, oracle: bool, kind: OrderKind, ctx: &Ctx) -> CliResult<DepthOutput> {
    let mut report = bounds(g, m, ctx)?;
    let mut violations = report.violations();
    if !oracle {
        return Ok(DepthOutput {
            depth: report.exact,
            pd: None,
            order: None,
            maximizing_subset: None,
            assumption_flags: Vec::new(),
            report,
            certificate: None,
            violations,
        });
    }
    let cert = depth_oracle(m, g, &order_for(kind, m, g), &ctx.caps, ctx.exec)?;
    match report.exact {
        Some(e) if e != cert.depth => violations.push(format!(
            "oracle depth {} differs from {} = {e}",
            cert.depth, report.exact_source
        )),
        Some(_) => {}
        None => {
            report.set_exact(cert.depth, ExactSource::Oracle);
            violations.extend(report.violations());
        }
    }
    Ok(DepthOutput {
        depth: Some(cert.depth),
        pd: Some(cert.pd),
        order: Some(cert.order_label.clone()),
        maximizing_subset: Some(cert.maximizing_subset.clone()),
        assumption_flags: cert.assumption_flags.clone(),
        report,
        certificate: Some(cert),
        violations,
    })
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CutsetsOutput {
    #[serde(flatten)]
    pub family: CutsetFamily,
    pub unmixed: bool,
    pub accessible: bool,
}

pub fn cutsets(g: &SimpleGraph, ctx: &Ctx) -> CliResult<CutsetsOutput> {
    let family = enumerate_cutsets_with(g, &ctx.caps, ctx.exec)?;
    Ok(CutsetsOutput {
        unmixed: family.is_unmixed(),
        accessible: family.is_accessible(),
        family,
    })
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentOutput {
    #[serde(rename = "T")]
    pub t: VertexSet,
    pub generator_count: usize,
    pub generators: Vec<String>,
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DecomposeOutput {
    pub m: usize,
    pub n: usize,
    pub order: String,
    pub ideal: Vec<String>,
    pub components: Vec<ComponentOutput>,
    /// The reduced bases of `J` and of the intersection of all `P_T` coincide.
    pub verified: bool,
}

fn lines(ideal: &BinomialIdeal) -> Vec<String> {
    ideal.to_text().lines().map(str::to_string).collect()
}

pub fn decompose(g: &SimpleGraph, m: usize, kind: OrderKind, ctx: &Ctx) -> CliResult<DecomposeOutput> {
    let order = order_for(kind, m, g);
    let limits = GbLimits::from_caps(&ctx.caps);
    let j = build_ideal(m, g, &order)?;
    let family = enumerate_cutsets_with(g, &ctx.caps, ctx.exec)?;
    let primes = family
        .cutsets
        .iter()
        .map(|cs| build_prime_component(m, g, cs.t, &order))
        .collect::<Result<Vec<_>, _>>()?;
    let ideals: Vec<BinomialIdeal> = primes.iter().map(|p| p.to_ideal()).collect();
    let bases = ctx
        .exec
        .map(&ideals, |p| p.groebner_basis(&limits))
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut meet = bases[0].clone();
    for b in &bases[1..] {
        meet = intersect(&meet, b, &limits)?;
    }
    let verified = meet.same_ideal(&j, &limits)?;
    Ok(DecomposeOutput {
        m,
        n: g.n(),
        order: order.describe(),
        ideal: lines(&j),
        components: primes
            .iter()
            .zip(&ideals)
            .map(|(p, ideal)| ComponentOutput {
                t: p.t,
                generator_count: p.generator_count(),
                generators: lines(ideal),
            })
            .collect(),
        verified,
    })
}

pub fn export(g: &SimpleGraph, m: usize, dialect: Dialect) -> CliResult<String> {
    let j = build_ideal(m, g, &order_for(OrderKind::Lex, m, g))?;
    Ok(export_cas(&j, dialect))
}

#[cfg(test)]
mod tests {
    use super::*;
    use gbei_core::fixtures;

    #[test]
    fn depth_with_oracle_on_cycle() {
        let out = depth(&SimpleGraph::cycle(6).unwrap(), 2, true, OrderKind::Lex, &Ctx::default()).unwrap();
        assert_eq!(out.depth, Some(6));
        assert_eq!(out.pd, Some(6));
        assert!(out.violations.is_empty());
        assert_eq!(out.report.exact_source, ExactSource::H2);
    }

    #[test]
    fn oracle_fills_missing_exact() {
        // C_4 plus a chord-free pendant: no closed form, oracle supplies the value
        let g = SimpleGraph::new(5, [(1, 2), (2, 3), (3, 4), (1, 4), (4, 5)]).unwrap();
        let out = depth(&g, 2, true, OrderKind::Lex, &Ctx::default()).unwrap();
        assert!(out.violations.is_empty());
        if out.report.exact_source == ExactSource::Oracle {
            assert_eq!(out.report.exact, out.depth);
        }
    }

    #[test]
    fn decompose_path() {
        let out = decompose(&SimpleGraph::path(3).unwrap(), 2, OrderKind::Lex, &Ctx::default()).unwrap();
        assert!(out.verified);
        assert_eq!(out.components.len(), 2);
        assert_eq!(out.components[1].generators, vec!["+1*x[1,2]", "+1*x[2,2]"]);
    }

    #[test]
    fn stats_fig1() {
        let s = stats(&fixtures::fig1()).unwrap();
        assert_eq!(s.connectivity_witness, Some(VertexSet::from_vertices([1, 3, 4])));
        assert_eq!((s.invariants.f, s.invariants.d), (2, 2));
    }
}
