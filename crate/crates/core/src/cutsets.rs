//! Cut sets (vertex sets with the cut point property), component counts,
//! unmixedness and accessibility.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::par::Exec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cutset {
    #[serde(rename = "T")]
    pub t: VertexSet,
    /// Number of components of `G - T`.
    pub c: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CutsetFamily {
    pub graph: SimpleGraph,
    /// Ordered by size, then lexicographically.
    pub cutsets: Vec<Cutset>,
    pub includes_empty: bool,
}

impl CutsetFamily {
    pub fn contains(&self, t: VertexSet) -> bool {
        self.cutsets.binary_search_by(|c| order(c.t, t)).is_ok()
    }

    /// `c_G(T) = |T| + c` for every cut set, `c` the component count of `G`.
    pub fn is_unmixed(&self) -> bool {
        let c = self.graph.components().len();
        self.cutsets.iter().all(|cs| cs.c == cs.t.len() + c)
    }

    /// Unmixed, and every non-empty cut set drops to a cut set by removing one vertex.
    pub fn is_accessible(&self) -> bool {
        self.is_unmixed()
            && self
                .cutsets
                .iter()
                .filter(|cs| !cs.t.is_empty())
                .all(|cs| cs.t.iter().any(|v| self.contains(cs.t.without(v))))
    }
}

fn order(a: VertexSet, b: VertexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b))
}

/// Literal definition: every `v` in `T` is a cut vertex of `G - (T \ {v})`.
pub fn has_cut_point_property(g: &SimpleGraph, t: VertexSet) -> bool {
    let all = g.vertices();
    t.iter()
        .all(|v| g.is_cut_vertex_within(v, all.difference(t.without(v))))
}

/// Equivalent fast test: each `v` in `T` touches at least two components of `G - T`.
fn touches_two_components(g: &SimpleGraph, t: VertexSet, comps: &[VertexSet]) -> bool {
    t.iter().all(|v| {
        let nv = g.neighbors(v);
        comps.iter().filter(|c| !c.intersection(nv).is_empty()).take(2).count() == 2
    })
}

pub fn enumerate_cutsets(g: &SimpleGraph, caps: &Caps) -> Result<CutsetFamily> {
    enumerate_cutsets_with(g, caps, Exec::default())
}

/// Scans subsets of the non-free vertices only: a free vertex has its remaining
/// neighbours inside one component, so it never belongs to a cut set.
pub fn enumerate_cutsets_with(g: &SimpleGraph, caps: &Caps, exec: Exec) -> Result<CutsetFamily> {
    Caps::check("vertex count (cut sets)", g.n(), caps.cutsets)?;
    let candidates: Vec<usize> = g.non_free_vertices().to_vec();
    let all = g.vertices();
    let mut cutsets = exec.filter_map_range(0..1u64 << candidates.len(), |bits| {
        let t = VertexSet::from_vertices(
            candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        let comps = g.components_within(all.difference(t));
        touches_two_components(g, t, &comps).then_some(Cutset { t, c: comps.len() })
    });
    cutsets.sort_by(|a, b| order(a.t, b.t));
    Ok(CutsetFamily {
        graph: g.clone(),
        cutsets,
        includes_empty: true,
    })
}

/// Oracle path: all `2^n` subsets against the literal definition.
pub fn enumerate_cutsets_exhaustive(g: &SimpleGraph, caps: &Caps) -> Result<CutsetFamily> {
    Caps::check("vertex count (cut sets)", g.n(), caps.cutsets)?;
    let all = g.vertices();
    let mut cutsets: Vec<Cutset> = (0..1u64 << g.n())
        .map(VertexSet)
        .filter(|&t| has_cut_point_property(g, t))
        .map(|t| Cutset {
            t,
            c: g.count_components_within(all.difference(t)),
        })
        .collect();
    cutsets.sort_by(|a, b| order(a.t, b.t));
    Ok(CutsetFamily {
        graph: g.clone(),
        cutsets,
        includes_empty: true,
    })
}

pub fn is_unmixed(g: &SimpleGraph, caps: &Caps) -> Result<bool> {
    Ok(enumerate_cutsets(g, caps)?.is_unmixed())
}

pub fn is_accessible(g: &SimpleGraph, caps: &Caps) -> Result<bool> {
    Ok(enumerate_cutsets(g, caps)?.is_accessible())
}

/// Components of `G - T` (original labels) for a cut set `T`.
pub fn prime_component_support(g: &SimpleGraph, t: VertexSet) -> Result<Vec<VertexSet>> {
    if !t.is_subset(g.vertices()) || !has_cut_point_property(g, t) {
        return Err(Error::NotACutset(t));
    }
    Ok(g.components_within(g.vertices().difference(t)))
}
