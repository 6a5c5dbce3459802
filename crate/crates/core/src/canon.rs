//! Canonical forms for small graphs (n <= 16) by colour refinement and
//! individualization, with twin pruning.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const MAX_CANON_VERTICES: usize = 16;

/// Isomorphism invariant: equal iff the graphs are isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    /// Upper-triangle adjacency bits in canonical order, first pair most significant.
    pub code: u128,
}

/// Canonical form plus a labeling achieving it: vertex `v` goes to position `perm[v - 1]` (1-based).
pub fn canonical_labeling(g: &SimpleGraph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANON_VERTICES {
        return Err(Error::CapExceeded {
            what: "vertex count (canonical form)",
            value: n,
            cap: MAX_CANON_VERTICES,
        });
    }
    let colours = refine(g, vec![0; n]);
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, colours, &mut best);
    let (code, pos) = best.expect("search reaches a leaf");
    Ok((CanonicalForm { n, code }, pos.iter().map(|p| p + 1).collect()))
}

pub fn canonical_form(g: &SimpleGraph) -> Result<CanonicalForm> {
    canonical_labeling(g).map(|(c, _)| c)
}

/// The graph relabeled into canonical position order.
pub fn canonical_graph(g: &SimpleGraph) -> Result<SimpleGraph> {
    let (_, perm) = canonical_labeling(g)?;
    Ok(g.relabel(&perm))
}

pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> Result<bool> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn search(g: &SimpleGraph, colours: Vec<usize>, best: &mut Option<(u128, Vec<usize>)>) {
    let n = g.n();
    let distinct = colours.iter().copied().max().map_or(0, |m| m + 1);
    if distinct == n {
        let code = leaf_code(g, &colours);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, colours));
        }
        return;
    }
    // first non-singleton cell
    let mut sizes = vec![0usize; distinct];
    for &c in &colours {
        sizes[c] += 1;
    }
    let target = (0..distinct).find(|&c| sizes[c] > 1).unwrap();
    let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &u in &cell {
        // swapping twins is an automorphism fixing the partition, so one branch per twin class
        if tried.iter().any(|&t| are_twins(g, t, u)) {
            continue;
        }
        tried.push(u);
        let mut c: Vec<usize> = colours.iter().map(|&x| 2 * x + 1).collect();
        c[u] = 2 * colours[u];
        search(g, refine(g, c), best);
    }
}

fn are_twins(g: &SimpleGraph, a: usize, b: usize) -> bool {
    let (va, vb) = (a + 1, b + 1);
    g.neighbors(va).without(vb) == g.neighbors(vb).without(va)
}

fn leaf_code(g: &SimpleGraph, pos: &[usize]) -> u128 {
    let n = g.n();
    let mut at = vec![0usize; n];
    for (v, &p) in pos.iter().enumerate() {
        at[p] = v + 1;
    }
    let mut code = 0u128;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.has_edge(at[i], at[j]) as u128;
        }
    }
    code
}

/// Iterated colour refinement; colours are renumbered `0..k` by sorted signature.
fn refine(g: &SimpleGraph, mut colours: Vec<usize>) -> Vec<usize> {
    let n = g.n();
    let mut count = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v + 1).iter().map(|w| colours[w - 1]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut uniq = sigs.clone();
        uniq.sort();
        uniq.dedup();
        colours = sigs
            .iter()
            .map(|s| uniq.binary_search(s).unwrap())
            .collect();
        if uniq.len() == count {
            return colours;
        }
        count = uniq.len();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use proptest::prelude::*;

    #[test]
    fn isomorphic_relabelings_agree() {
        let g = fixtures::fig5();
        let h = g.relabel(&[7, 1, 2, 6, 3, 5, 4]);
        assert!(is_isomorphic(&g, &h).unwrap());
        assert!(!is_isomorphic(&fixtures::fig4(), &SimpleGraph::path(5).unwrap()).unwrap());
    }

    #[test]
    fn regular_graphs_are_quick() {
        let k = SimpleGraph::complete(16).unwrap();
        assert_eq!(canonical_form(&k).unwrap().code.count_ones(), 120);
        let c = SimpleGraph::cycle(16).unwrap();
        let c2 = c.relabel(&[3, 5, 7, 9, 11, 13, 15, 1, 2, 4, 6, 8, 10, 12, 14, 16]);
        assert!(is_isomorphic(&c, &c2).unwrap());
    }

    #[test]
    fn cycle_vs_two_triangles() {
        let c6 = SimpleGraph::cycle(6).unwrap();
        let tt = SimpleGraph::cycle(3).unwrap().disjoint_union(&SimpleGraph::cycle(3).unwrap()).unwrap();
        assert!(!is_isomorphic(&c6, &tt).unwrap());
    }

    proptest! {
        #[test]
        fn invariant_under_permutation(n in 1usize..9, bits in any::<u64>(), seed in any::<u64>()) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n { for v in u + 1..=n {
                if bits >> (k % 64) & 1 == 1 { edges.push((u, v)); }
                k += 1;
            }}
            let g = SimpleGraph::new(n, edges).unwrap();
            let mut perm: Vec<usize> = (1..=n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            prop_assert_eq!(canonical_graph(&g).unwrap(), canonical_graph(&h).unwrap());
        }
    }
}
