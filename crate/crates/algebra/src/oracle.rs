//! Exact depth of `S / J_{K_m,G}` on small instances: squarefree initial ideal,
//! Stanley-Reisner complex, Hochster scan for the projective dimension, then
//! `depth = mn - pd`.

use serde::{Deserialize, Serialize};

use gbei_core::{Caps, Exec, SimpleGraph};

use crate::complex::{reduced_betti, SimplicialComplex};
use crate::error::{check_cap, Error, Result};
use crate::groebner::GbLimits;
use crate::ideal::build_ideal;
use crate::initial::initial_ideal;
use crate::monomial::MonomialOrder;
use crate::poly::Variables;

/// A pair `(W, j)` with nonzero reduced homology in dimension `j` of the
/// induced subcomplex on `W`, attaining `pd = |W| - 1 - j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdResult {
    pub pd: usize,
    pub subset: u32,
    pub dimension: i32,
}

/// `max (|W| - 1 - j)` over subsets `W` and dimensions `j` with nonzero reduced
/// homology of the induced subcomplex.
///
/// Passes run over `j = 0, 1, ..`; pass `j` only visits `W` that could beat the
/// current maximum. Skipped outright: `W` that are not unions of minimal
/// non-faces (the subcomplex is a cone), and `j` below `q - 2` where `q` is the
/// smallest non-face inside `W` (the `(q - 2)`-skeleton is full). Among maximizers
/// the smallest `j` wins, then the smallest bitmask.
pub fn projective_dimension(c: &SimplicialComplex, caps: &Caps, exec: Exec) -> Result<PdResult> {
    let nv = c.vertices;
    check_cap("ground set size (subset scan)", nv, caps.subset_scan)?;
    let mut best = PdResult {
        pd: 0,
        subset: 0,
        dimension: -1,
    };
    // (mask, smallest non-face size) for every W that is a union of non-faces
    let eligible: Vec<(u32, u32)> = exec.filter_map_range(1..1u64 << nv, |w| {
        let w = w as u32;
        let mut union = 0u32;
        let mut q = u32::MAX;
        for k in c.nonfaces_within(w) {
            union |= k;
            q = q.min(k.count_ones());
        }
        (union == w).then_some((w, q))
    });
    for j in 0..nv as i32 {
        if nv as i64 - 1 - j as i64 <= best.pd as i64 {
            break;
        }
        let floor = best.pd as i64;
        let todo: Vec<u32> = eligible
            .iter()
            .filter(|&&(w, q)| w.count_ones() as i64 - 1 - j as i64 > floor && q as i32 - 2 <= j)
            .map(|&(w, _)| w)
            .collect();
        let hits: Vec<Option<u32>> = exec.map(&todo, |&w| (reduced_betti(c, w, j) > 0).then_some(w));
        let found = hits
            .into_iter()
            .flatten()
            .map(|w| (w.count_ones() as usize - 1 - j as usize, w))
            .min_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        if let Some((pd, subset)) = found {
            best = PdResult {
                pd,
                subset,
                dimension: j,
            };
        }
    }
    Ok(best)
}

pub const ASSUMPTION_SQUAREFREE_BRIDGE: &str =
    "depth(S/J) = depth(S/in(J)) when in(J) is squarefree (external result)";
pub const ASSUMPTION_CHARACTERISTIC: &str = "computed over the rationals (characteristic 0)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DepthCertificate {
    pub m: usize,
    pub n: usize,
    pub depth: usize,
    pub pd: usize,
    pub order: MonomialOrder,
    pub order_label: String,
    /// Leading monomials of the reduced Gröbner basis.
    pub leading_terms: Vec<String>,
    pub maximizing_subset: Vec<String>,
    pub maximizing_dimension: i32,
    pub assumption_flags: Vec<String>,
}

/// `depth(S / J_{K_m,G})` with a certificate. Refuses instances whose initial
/// ideal is not squarefree.
pub fn depth_oracle(
    m: usize,
    g: &SimpleGraph,
    order: &MonomialOrder,
    caps: &Caps,
    exec: Exec,
) -> Result<DepthCertificate> {
    if m < 2 {
        return Err(gbei_core::Error::InvalidM(m).into());
    }
    let vars = Variables::new(m, g.n());
    check_cap("ground set size (subset scan)", vars.count(), caps.subset_scan)?;
    let ideal = build_ideal(m, g, order)?;
    let init = initial_ideal(&ideal, &GbLimits::from_caps(caps))?;
    if !init.squarefree {
        return Err(Error::NotSquarefree);
    }
    let complex = SimplicialComplex::stanley_reisner(&init)?;
    let pd = projective_dimension(&complex, caps, exec)?;
    Ok(DepthCertificate {
        m,
        n: g.n(),
        depth: vars.count() - pd.pd,
        pd: pd.pd,
        order: order.clone(),
        order_label: order.describe(),
        leading_terms: init.to_text(),
        maximizing_subset: (0..vars.count())
            .filter(|&v| pd.subset >> v & 1 == 1)
            .map(|v| vars.name(v))
            .collect(),
        maximizing_dimension: pd.dimension,
        assumption_flags: vec![ASSUMPTION_SQUAREFREE_BRIDGE.to_string(), ASSUMPTION_CHARACTERISTIC.to_string()],
    })
}

/// Oracle under the default order.
pub fn depth(m: usize, g: &SimpleGraph, caps: &Caps) -> Result<usize> {
    Ok(depth_oracle(m, g, &MonomialOrder::default_for(m * g.n()), caps, Exec::default())?.depth)
}
