//! Graph generators: exhaustive enumeration up to isomorphism and random connected graphs.

use std::collections::BTreeMap;

use crate::canon::{canonical_labeling, CanonicalForm};
use crate::graph::{SimpleGraph, VertexSet};
use crate::par::Exec;

/// One canonical representative per isomorphism class on `n` vertices,
/// ordered by canonical code.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    all_graphs_with(n, Exec::default())
}

pub fn all_graphs_with(n: usize, exec: Exec) -> Vec<SimpleGraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![SimpleGraph::empty(1).expect("single vertex")];
    for k in 2..=n {
        let extended: Vec<Vec<(CanonicalForm, SimpleGraph)>> = exec.map(&level, |g| {
            (0..1u64 << (k - 1))
                .map(|bits| {
                    let mut edges = g.edges().to_vec();
                    edges.extend(VertexSet(bits).iter().map(|u| (u, k)));
                    let h = SimpleGraph::new(k, edges).expect("valid extension");
                    let (form, perm) = canonical_labeling(&h).expect("within canonical cap");
                    (form, h.relabel(&perm))
                })
                .collect()
        });
        let unique: BTreeMap<CanonicalForm, SimpleGraph> = extended.into_iter().flatten().collect();
        level = unique.into_values().collect();
    }
    level
}

pub fn all_connected_graphs(n: usize) -> Vec<SimpleGraph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected()).collect()
}

/// Random connected graph: a random spanning tree plus each remaining pair with
/// probability `p`. `below(k)` must return a uniform value in `0..k`.
pub fn random_connected_graph(n: usize, p: f64, below: &mut dyn FnMut(u64) -> u64) -> SimpleGraph {
    let mut order: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        order.swap(i, below(i as u64 + 1) as usize);
    }
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[below(i as u64) as usize];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    let threshold = (p.clamp(0.0, 1.0) * 1_000_000.0) as u64;
    for u in 1..=n {
        for v in u + 1..=n {
            if !edges.contains(&(u, v)) && below(1_000_000) < threshold {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("valid random graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| all_connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn sequential_matches_parallel() {
        assert_eq!(all_graphs_with(5, Exec::Sequential), all_graphs_with(5, Exec::default()));
    }

    #[test]
    fn random_graphs_are_connected() {
        let mut s = 7u64;
        let mut below = |k: u64| {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (s >> 33) % k
        };
        for n in 1..12 {
            assert!(random_connected_graph(n, 0.3, &mut below).is_connected());
        }
    }
}
