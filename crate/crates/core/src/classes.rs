//! Recognizers for the graph classes with known depth: complete and
//! disjoint-union-of-complete graphs, block and generalized block graphs, the
//! families H1, H2 and H3, and strongly unmixed graphs.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalForm};
use crate::caps::Caps;
use crate::completion::{complete_at, is_in_h2, H2Witness};
use crate::cutsets::enumerate_cutsets;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};

/// Maximal cliques, sorted by size (descending) then lexicographically.
pub fn maximal_cliques(g: &SimpleGraph, caps: &Caps) -> Result<Vec<VertexSet>> {
    Caps::check("vertex count (maximal cliques)", g.n(), caps.cliques)?;
    let mut out = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(*b)));
    Ok(out)
}

fn bron_kerbosch(g: &SimpleGraph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| g.neighbors(u).intersection(p).len())
        .unwrap();
    let mut p = p;
    let mut x = x;
    for v in p.difference(g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// Maximum cardinality search order (first visited first).
pub fn mcs_order(g: &SimpleGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n + 1];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .unwrap();
        order.push(v);
        visited = visited.with(v);
        for w in g.neighbors(v).difference(visited).iter() {
            weight[w] += 1;
        }
    }
    order
}

/// Chordal iff the reverse MCS order is a perfect elimination ordering.
pub fn is_chordal(g: &SimpleGraph) -> bool {
    let mut before = VertexSet::EMPTY;
    for v in mcs_order(g) {
        if !g.is_clique(g.neighbors(v).intersection(before)) {
            return false;
        }
        before = before.with(v);
    }
    true
}

fn generalized_block_condition(cliques: &[VertexSet]) -> bool {
    for i in 0..cliques.len() {
        for j in i + 1..cliques.len() {
            let ij = cliques[i].intersection(cliques[j]);
            for k in j + 1..cliques.len() {
                let jk = cliques[j].intersection(cliques[k]);
                let ik = cliques[i].intersection(cliques[k]);
                if !ij.intersection(cliques[k]).is_empty() && !(ij == jk && jk == ik) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_generalized_block_graph(g: &SimpleGraph, caps: &Caps) -> Result<bool> {
    if !is_chordal(g) {
        return Ok(false);
    }
    Ok(generalized_block_condition(&maximal_cliques(g, caps)?))
}

pub fn is_block_graph(g: &SimpleGraph, caps: &Caps) -> Result<bool> {
    if !is_chordal(g) {
        return Ok(false);
    }
    let cliques = maximal_cliques(g, caps)?;
    let pairwise_small = cliques.iter().enumerate().all(|(i, a)| {
        cliques[i + 1..]
            .iter()
            .all(|b| a.intersection(*b).len() <= 1)
    });
    Ok(pairwise_small && generalized_block_condition(&cliques))
}

/// For a connected non-complete graph: the vertex set `S` in which every two
/// maximal cliques meet, if there is one.
pub fn is_in_h1(g: &SimpleGraph, caps: &Caps) -> Result<Option<VertexSet>> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.is_complete() {
        return Err(Error::CompleteInput);
    }
    let cliques = maximal_cliques(g, caps)?;
    let s = cliques[0].intersection(cliques[1]);
    if s.is_empty() {
        return Ok(None);
    }
    let all_meet_in_s = cliques.iter().enumerate().all(|(i, a)| {
        cliques[i + 1..].iter().all(|b| a.intersection(*b) == s)
    });
    Ok((all_meet_in_s && g.is_clique(s)).then_some(s))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct H3Witness {
    /// Triangles in chain order; consecutive ones meet in an edge, a vertex, an edge, ...
    pub cliques: Vec<VertexSet>,
    pub chain_length: usize,
    /// `chain_length / 2` when the chain has even length.
    pub k: Option<usize>,
}

impl H3Witness {
    pub fn is_even(&self) -> bool {
        self.k.is_some()
    }
}

/// Alternating chains of triangles. Returns a witness for any consistent chain of
/// at least two triangles; only even chains belong to H3 proper (see [`H3Witness::k`]).
pub fn is_in_h3(g: &SimpleGraph, caps: &Caps) -> Result<Option<H3Witness>> {
    if !is_chordal(g) {
        return Ok(None);
    }
    let cliques = maximal_cliques(g, caps)?;
    let r = cliques.len();
    if r < 2 || cliques.iter().any(|c| c.len() != 3) || !generalized_block_condition(&cliques) {
        return Ok(None);
    }
    let mut meets = vec![Vec::new(); r];
    for i in 0..r {
        for j in i + 1..r {
            let x = cliques[i].intersection(cliques[j]);
            if !x.is_empty() {
                if (0..r).any(|k| k != i && k != j && !x.intersection(cliques[k]).is_empty()) {
                    return Ok(None);
                }
                meets[i].push(j);
                meets[j].push(i);
            }
        }
    }
    // the clique intersection graph must be a path
    if meets.iter().any(|m| m.len() > 2) {
        return Ok(None);
    }
    let ends: Vec<usize> = (0..r).filter(|&i| meets[i].len() == 1).collect();
    if ends.len() != 2 {
        return Ok(None);
    }
    let walk = |start: usize| -> Vec<usize> {
        let mut path = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = meets[cur].iter().find(|&&x| x != prev) {
            path.push(next);
            prev = cur;
            cur = next;
        }
        path
    };
    let alternates = |path: &[usize]| {
        path.windows(2).enumerate().all(|(i, w)| {
            let size = cliques[w[0]].intersection(cliques[w[1]]).len();
            size == if i % 2 == 0 { 2 } else { 1 }
        })
    };
    let mut candidates: Vec<Vec<VertexSet>> = ends
        .iter()
        .map(|&e| walk(e))
        .filter(|p| p.len() == r && alternates(p))
        .map(|p| p.iter().map(|&i| cliques[i]).collect())
        .collect();
    candidates.sort_by(|a: &Vec<VertexSet>, b| {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x.lex_cmp(*y))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    });
    Ok(candidates.into_iter().next().map(|chain| H3Witness {
        chain_length: r,
        k: (r % 2 == 0).then_some(r / 2),
        cliques: chain,
    }))
}

/// Recursion certificate: the cut vertex chosen at each level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum SuCertificate {
    /// Every component is complete.
    Complete,
    Split {
        vertex: usize,
        minus_v: Box<SuCertificate>,
        completed: Box<SuCertificate>,
        completed_minus_v: Box<SuCertificate>,
    },
}

impl SuCertificate {
    pub fn root_vertex(&self) -> Option<usize> {
        match self {
            SuCertificate::Complete => None,
            SuCertificate::Split { vertex, .. } => Some(*vertex),
        }
    }
}

/// Memo table shared across calls (and threads); keyed by canonical form.
#[derive(Default)]
pub struct SuMemo {
    table: Mutex<HashMap<CanonicalForm, bool>>,
}

impl SuMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.table.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn all_components_complete(g: &SimpleGraph) -> bool {
    g.components().iter().all(|&c| g.is_clique(c))
}

/// The three graphs of the splitting step at `v`: `G - v`, `G_v`, `G_v - v`.
pub fn split_graphs(g: &SimpleGraph, v: usize) -> [SimpleGraph; 3] {
    let rest = g.vertices().without(v);
    let gv = complete_at(g, v);
    [
        g.induced_subgraph(rest).graph,
        gv.clone(),
        gv.induced_subgraph(rest).graph,
    ]
}

fn strongly_unmixed_bool(g: &SimpleGraph, caps: &Caps, memo: &SuMemo) -> Result<bool> {
    if all_components_complete(g) {
        return Ok(true);
    }
    let key = canonical_form(g)?;
    if let Some(&hit) = memo.table.lock().unwrap().get(&key) {
        return Ok(hit);
    }
    let mut answer = false;
    if enumerate_cutsets(g, caps)?.is_unmixed() {
        let iv = g.iv();
        for v in (1..=g.n()).filter(|&v| g.is_cut_vertex(v)) {
            let parts = split_graphs(g, v);
            assert!(
                parts.iter().all(|h| h.iv() < iv),
                "non-free vertex {v} failed to decrease iv"
            );
            let mut ok = true;
            for h in &parts {
                if !strongly_unmixed_bool(h, caps, memo)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                answer = true;
                break;
            }
        }
    }
    memo.table.lock().unwrap().insert(key, answer);
    Ok(answer)
}

fn certificate(g: &SimpleGraph, caps: &Caps, memo: &SuMemo) -> Result<SuCertificate> {
    if all_components_complete(g) {
        return Ok(SuCertificate::Complete);
    }
    for v in (1..=g.n()).filter(|&v| g.is_cut_vertex(v)) {
        let [a, b, c] = split_graphs(g, v);
        if strongly_unmixed_bool(&a, caps, memo)?
            && strongly_unmixed_bool(&b, caps, memo)?
            && strongly_unmixed_bool(&c, caps, memo)?
        {
            return Ok(SuCertificate::Split {
                vertex: v,
                minus_v: Box::new(certificate(&a, caps, memo)?),
                completed: Box::new(certificate(&b, caps, memo)?),
                completed_minus_v: Box::new(certificate(&c, caps, memo)?),
            });
        }
    }
    unreachable!("certificate requested for a graph that is not strongly unmixed")
}

/// Strong unmixedness: every component complete, or unmixed with a cut vertex `v`
/// making `G - v`, `G_v` and `G_v - v` strongly unmixed. Cut vertices are tried in
/// ascending order.
pub fn is_strongly_unmixed(g: &SimpleGraph, caps: &Caps) -> Result<Option<SuCertificate>> {
    is_strongly_unmixed_memo(g, caps, &SuMemo::new())
}

pub fn is_strongly_unmixed_memo(g: &SimpleGraph, caps: &Caps, memo: &SuMemo) -> Result<Option<SuCertificate>> {
    Caps::check("vertex count (strongly unmixed)", g.n(), caps.strongly_unmixed)?;
    if strongly_unmixed_bool(g, caps, memo)? {
        Ok(Some(certificate(g, caps, memo)?))
    } else {
        Ok(None)
    }
}

/// Flags and witnesses for every recognizer. `None` means the recognizer was
/// skipped because the graph exceeds its cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClassReport {
    pub complete: bool,
    pub disjoint_complete: bool,
    pub connected: bool,
    pub chordal: bool,
    pub block: bool,
    pub generalized_block: bool,
    pub h1: bool,
    pub h1_witness: Option<VertexSet>,
    pub h2: Option<bool>,
    pub h2_witness: Option<H2Witness>,
    pub h3: bool,
    pub h3_witness: Option<H3Witness>,
    /// A consistent alternating chain of odd length was found.
    pub h3_odd_chain: bool,
    pub unmixed: Option<bool>,
    pub accessible: Option<bool>,
    pub strongly_unmixed: Option<bool>,
    pub strongly_unmixed_root: Option<usize>,
}

pub fn classify(g: &SimpleGraph, caps: &Caps) -> Result<ClassReport> {
    classify_memo(g, caps, &SuMemo::new())
}

pub fn classify_memo(g: &SimpleGraph, caps: &Caps, memo: &SuMemo) -> Result<ClassReport> {
    let connected = g.is_connected();
    let complete = g.is_complete();
    let chordal = is_chordal(g);
    let block = is_block_graph(g, caps)?;
    let generalized_block = is_generalized_block_graph(g, caps)?;
    let h1_witness = if connected && !complete {
        is_in_h1(g, caps)?
    } else {
        None
    };
    let (h2, h2_witness) = match is_in_h2(g, caps) {
        Ok(w) => (Some(w.is_some()), w),
        Err(Error::CapExceeded { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    let h3_any = is_in_h3(g, caps)?;
    let h3 = h3_any.as_ref().is_some_and(|w| w.is_even());
    let family = match enumerate_cutsets(g, caps) {
        Ok(f) => Some(f),
        Err(Error::CapExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    let (su, su_root) = match is_strongly_unmixed_memo(g, caps, memo) {
        Ok(c) => (Some(c.is_some()), c.and_then(|c| c.root_vertex())),
        Err(Error::CapExceeded { .. }) => (None, None),
        Err(e) => return Err(e),
    };
    Ok(ClassReport {
        complete,
        disjoint_complete: all_components_complete(g),
        connected,
        chordal,
        block,
        generalized_block,
        h1: h1_witness.is_some(),
        h1_witness,
        h2,
        h2_witness,
        h3,
        h3_odd_chain: h3_any.as_ref().is_some_and(|w| !w.is_even()),
        h3_witness: h3_any,
        unmixed: family.as_ref().map(|f| f.is_unmixed()),
        accessible: family.as_ref().map(|f| f.is_accessible()),
        strongly_unmixed: su,
        strongly_unmixed_root: su_root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vs(v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn clique_examples() {
        let caps = Caps::default();
        assert_eq!(
            maximal_cliques(&fixtures::fig1(), &caps).unwrap(),
            vec![vs(&[1, 2, 3, 4]), vs(&[1, 3, 4, 5])]
        );
        assert_eq!(maximal_cliques(&SimpleGraph::complete(5).unwrap(), &caps).unwrap(), vec![vs(&[1, 2, 3, 4, 5])]);
        assert_eq!(
            maximal_cliques(&SimpleGraph::cycle(5).unwrap(), &caps).unwrap(),
            vec![vs(&[1, 2]), vs(&[1, 5]), vs(&[2, 3]), vs(&[3, 4]), vs(&[4, 5])]
        );
    }

    #[test]
    fn block_graph_examples() {
        let caps = Caps::default();
        for n in 1..=7 {
            assert!(is_block_graph(&SimpleGraph::path(n).unwrap(), &caps).unwrap());
        }
        assert!(is_generalized_block_graph(&fixtures::fig4(), &caps).unwrap());
        assert!(!is_block_graph(&fixtures::fig4(), &caps).unwrap());
        assert!(is_generalized_block_graph(&fixtures::fig5(), &caps).unwrap());
        let c6 = SimpleGraph::cycle(6).unwrap();
        assert!(!is_chordal(&c6));
        assert!(!is_block_graph(&c6, &caps).unwrap());
        assert!(!is_generalized_block_graph(&c6, &caps).unwrap());
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&fixtures::fig3()));
        assert!(is_chordal(&SimpleGraph::complete(6).unwrap()));
        assert!(!is_chordal(&SimpleGraph::cycle(4).unwrap()));
    }

    #[test]
    fn h1_examples() {
        let caps = Caps::default();
        assert_eq!(is_in_h1(&fixtures::fig1(), &caps).unwrap(), Some(vs(&[1, 3, 4])));
        assert_eq!(is_in_h1(&SimpleGraph::path(4).unwrap(), &caps).unwrap(), None);
        let bowtie = SimpleGraph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(is_in_h1(&bowtie, &caps).unwrap(), Some(vs(&[3])));
        assert_eq!(is_in_h1(&SimpleGraph::complete(3).unwrap(), &caps), Err(Error::CompleteInput));
        assert_eq!(is_in_h1(&SimpleGraph::empty(2).unwrap(), &caps), Err(Error::DisconnectedInput));
    }

    #[test]
    fn h3_examples() {
        let caps = Caps::default();
        let w = is_in_h3(&fixtures::fig3(), &caps).unwrap().unwrap();
        assert_eq!(w.chain_length, 6);
        assert_eq!(w.k, Some(3));
        assert_eq!(w.cliques[0], vs(&[1, 2, 3]));
        assert_eq!(is_in_h3(&SimpleGraph::complete(3).unwrap(), &caps).unwrap(), None);
        assert_eq!(is_in_h3(&SimpleGraph::cycle(4).unwrap(), &caps).unwrap(), None);
        // three triangles: edge, vertex
        let odd = SimpleGraph::new(6, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5), (4, 6), (5, 6)]).unwrap();
        let w = is_in_h3(&odd, &caps).unwrap().unwrap();
        assert_eq!((w.chain_length, w.k), (3, None));
        // a bowtie starts with a vertex intersection
        let bowtie = SimpleGraph::new(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        assert_eq!(is_in_h3(&bowtie, &caps).unwrap(), None);
    }

    #[test]
    fn strongly_unmixed_examples() {
        let caps = Caps::default();
        let cert = is_strongly_unmixed(&SimpleGraph::path(3).unwrap(), &caps).unwrap().unwrap();
        assert_eq!(
            cert,
            SuCertificate::Split {
                vertex: 2,
                minus_v: Box::new(SuCertificate::Complete),
                completed: Box::new(SuCertificate::Complete),
                completed_minus_v: Box::new(SuCertificate::Complete),
            }
        );
        assert_eq!(is_strongly_unmixed(&SimpleGraph::cycle(4).unwrap(), &caps).unwrap(), None);
        let cliques = SimpleGraph::complete(3).unwrap().disjoint_union(&SimpleGraph::complete(1).unwrap()).unwrap();
        assert_eq!(is_strongly_unmixed(&cliques, &caps).unwrap(), Some(SuCertificate::Complete));
        assert!(is_strongly_unmixed(&SimpleGraph::path(13).unwrap(), &caps).is_err());
    }

    #[test]
    fn classify_fig1() {
        let r = classify(&fixtures::fig1(), &Caps::default()).unwrap();
        assert!(r.h1);
        assert_eq!(r.h1_witness, Some(vs(&[1, 3, 4])));
        assert!(r.chordal && r.generalized_block && !r.block);
    }
}
