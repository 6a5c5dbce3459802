//! Neighbourhood completion `G_v`, iterated completion `G_W`, completion sets and
//! recognition of the cycle-completion family H2.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::Result;
use crate::graph::{SimpleGraph, VertexSet};

/// `G_v`: the neighbourhood of `v` becomes a clique.
pub fn complete_at(g: &SimpleGraph, v: usize) -> SimpleGraph {
    let nv = g.neighbors(v);
    if g.is_clique(nv) {
        return g.clone();
    }
    let adj = g
        .adjacency()
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if nv.contains(i + 1) {
                a.union(nv.without(i + 1))
            } else {
                a
            }
        })
        .collect();
    SimpleGraph::from_adjacency(adj)
}

/// Applies [`complete_at`] in the given order.
pub fn complete_in_order(g: &SimpleGraph, order: &[usize]) -> SimpleGraph {
    order.iter().fold(g.clone(), |acc, &v| complete_at(&acc, v))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionTrace {
    pub base: SimpleGraph,
    pub applied: Vec<usize>,
    pub result: SimpleGraph,
}

/// `G_W`, applied in ascending label order.
pub fn complete_at_set(g: &SimpleGraph, w: VertexSet) -> CompletionTrace {
    let applied = w.to_vec();
    CompletionTrace {
        base: g.clone(),
        result: complete_in_order(g, &applied),
        applied,
    }
}

/// `G_W` is a disjoint union of complete graphs.
pub fn is_completion_set(g: &SimpleGraph, w: VertexSet) -> bool {
    complete_at_set(g, w).result.iv() == 0
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct H2Witness {
    /// Hamiltonian cycle of `g`, starting at vertex 1.
    pub cycle: Vec<usize>,
    /// Completion set with `(cycle)_W = g`.
    pub w: VertexSet,
}

/// Decides whether `g` is a cycle or a completion `(C_n)_W` of one, up to
/// relabeling: searches Hamiltonian cycles of `g` in lexicographic order and,
/// for the first that admits one, returns the smallest `W` by size then label.
pub fn is_in_h2(g: &SimpleGraph, caps: &Caps) -> Result<Option<H2Witness>> {
    Caps::check("vertex count (H2 recognizer)", g.n(), caps.h2)?;
    let n = g.n();
    if n < 3 || !g.is_connected() || g.min_degree() < 2 {
        return Ok(None);
    }
    let mut found = None;
    for_each_hamiltonian_cycle(g, &mut |cycle| {
        let h = cycle_graph(n, cycle);
        if let Some(w) = smallest_completion_onto(&h, g) {
            found = Some(H2Witness {
                cycle: cycle.to_vec(),
                w,
            });
            true
        } else {
            false
        }
    });
    Ok(found)
}

fn cycle_graph(n: usize, cycle: &[usize]) -> SimpleGraph {
    SimpleGraph::new(
        n,
        (0..n).map(|i| (cycle[i], cycle[(i + 1) % n])),
    )
    .expect("hamiltonian cycle is simple")
}

/// Visits Hamiltonian cycles `1, a, .., b` with `a < b` in lexicographic order;
/// stops when the visitor returns true.
fn for_each_hamiltonian_cycle(g: &SimpleGraph, visit: &mut dyn FnMut(&[usize]) -> bool) {
    fn extend(
        g: &SimpleGraph,
        path: &mut Vec<usize>,
        used: VertexSet,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let n = g.n();
        let last = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(last, 1) && path[1] < path[n - 1] && visit(path);
        }
        for next in g.neighbors(last).difference(used).iter() {
            path.push(next);
            if extend(g, path, used.with(next), visit) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![1];
    extend(g, &mut path, VertexSet::singleton(1), visit);
}

/// Smallest `W` (by size, then lexicographically) with `h_W = target`.
fn smallest_completion_onto(h: &SimpleGraph, target: &SimpleGraph) -> Option<VertexSet> {
    fn within(a: &SimpleGraph, b: &SimpleGraph) -> bool {
        a.adjacency().iter().zip(b.adjacency()).all(|(x, y)| x.is_subset(*y))
    }
    fn search(
        cur: &SimpleGraph,
        target: &SimpleGraph,
        next: usize,
        w: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        let n = target.n();
        if !within(cur, target) {
            return;
        }
        if next > n {
            if cur == target {
                out.push(w);
            }
            return;
        }
        // completing at every undecided vertex gives the largest reachable graph
        let rest: Vec<usize> = (next..=n).collect();
        if !within(target, &complete_in_order(cur, &rest)) {
            return;
        }
        search(cur, target, next + 1, w, out);
        search(&complete_at(cur, next), target, next + 1, w.with(next), out);
    }
    let mut out = Vec::new();
    search(h, target, 1, VertexSet::EMPTY, &mut out);
    out.into_iter()
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(*b)))
}
