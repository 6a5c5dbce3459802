//! Vertex connectivity via unit-capacity max flow on the split graph, plus a
//! brute-force subset oracle.
//!
//! Complete graphs get `kappa = n - 1` and no separator.

use serde::{Deserialize, Serialize};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{SimpleGraph, VertexSet};
use crate::par::Exec;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConnectivityResult {
    pub kappa: usize,
    /// Lexicographically smallest minimum separator; absent for complete graphs.
    pub witness_separator: Option<VertexSet>,
}

/// Exact vertex connectivity of a connected graph.
pub fn vertex_connectivity(g: &SimpleGraph) -> Result<ConnectivityResult> {
    vertex_connectivity_with(g, Exec::default())
}

pub fn vertex_connectivity_with(g: &SimpleGraph, exec: Exec) -> Result<ConnectivityResult> {
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if g.is_complete() {
        return Ok(ConnectivityResult {
            kappa: g.n() - 1,
            witness_separator: None,
        });
    }
    let kappa = kappa_of_connected(g, exec);
    let witness = smallest_separator(g, kappa, exec);
    Ok(ConnectivityResult {
        kappa,
        witness_separator: Some(witness),
    })
}

/// kappa of a connected graph (complete graphs: n - 1).
fn kappa_of_connected(g: &SimpleGraph, exec: Exec) -> usize {
    if g.is_complete() {
        return g.n() - 1;
    }
    let pairs: Vec<(usize, usize)> = (1..=g.n())
        .flat_map(|u| {
            let nu = g.neighbors(u);
            (u + 1..=g.n())
                .filter(move |&v| !nu.contains(v))
                .map(move |v| (u, v))
        })
        .collect();
    let bound = g.min_degree();
    exec.map(&pairs, |&(s, t)| local_connectivity(g, s, t, bound))
        .into_iter()
        .min()
        .expect("non-complete graph has a non-adjacent pair")
}

/// Number of internally vertex-disjoint `s`-`t` paths (s, t non-adjacent), capped at `limit`.
pub fn local_connectivity(g: &SimpleGraph, s: usize, t: usize, limit: usize) -> usize {
    let mut net = SplitNetwork::new(g, s, t);
    let mut flow = 0;
    while flow < limit && net.augment() {
        flow += 1;
    }
    flow
}

/// Residual network of the vertex-split digraph: vertex `v` becomes `in(v) -> out(v)`
/// with capacity 1 (unbounded for the terminals), each edge `{a, b}` becomes
/// `out(a) -> in(b)` and `out(b) -> in(a)` with unbounded capacity.
struct SplitNetwork {
    nodes: usize,
    // adjacency lists of arc indices
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    source: usize,
    sink: usize,
}

impl SplitNetwork {
    fn new(g: &SimpleGraph, s: usize, t: usize) -> Self {
        let n = g.n();
        let inf = n as i32 + 1;
        let mut net = SplitNetwork {
            nodes: 2 * n,
            head: vec![Vec::new(); 2 * n],
            to: Vec::new(),
            cap: Vec::new(),
            source: 2 * (s - 1) + 1,
            sink: 2 * (t - 1),
        };
        for v in 1..=n {
            let c = if v == s || v == t { inf } else { 1 };
            net.arc(2 * (v - 1), 2 * (v - 1) + 1, c);
        }
        for &(a, b) in g.edges() {
            net.arc(2 * (a - 1) + 1, 2 * (b - 1), inf);
            net.arc(2 * (b - 1) + 1, 2 * (a - 1), inf);
        }
        net
    }

    fn arc(&mut self, from: usize, to: usize, cap: i32) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// One BFS augmentation by a unit of flow.
    fn augment(&mut self) -> bool {
        let mut pred = vec![usize::MAX; self.nodes];
        let mut queue = std::collections::VecDeque::from([self.source]);
        let mut seen = vec![false; self.nodes];
        seen[self.source] = true;
        while let Some(u) = queue.pop_front() {
            if u == self.sink {
                break;
            }
            for &a in &self.head[u] {
                let w = self.to[a];
                if self.cap[a] > 0 && !seen[w] {
                    seen[w] = true;
                    pred[w] = a;
                    queue.push_back(w);
                }
            }
        }
        if !seen[self.sink] {
            return false;
        }
        let mut v = self.sink;
        while v != self.source {
            let a = pred[v];
            self.cap[a] -= 1;
            self.cap[a ^ 1] += 1;
            v = self.to[a ^ 1];
        }
        true
    }
}

/// Greedy construction of the lexicographically smallest separator of size `kappa`:
/// a prefix `P` extends to a minimum separator iff `G - P` has connectivity
/// `kappa - |P|` (and is disconnected once `|P| = kappa`).
fn smallest_separator(g: &SimpleGraph, kappa: usize, exec: Exec) -> VertexSet {
    let all = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    let mut last = 0;
    for slot in 0..kappa {
        let remaining = kappa - slot - 1;
        let next = (last + 1..=g.n()).find(|&c| {
            let p = chosen.with(c);
            let rest = all.difference(p);
            if remaining == 0 {
                g.count_components_within(rest) >= 2
            } else {
                let sub = g.induced_subgraph(rest).graph;
                !sub.is_complete() && kappa_of_connected(&sub, exec) == remaining
            }
        });
        let c = next.expect("a minimum separator extends the chosen prefix");
        chosen = chosen.with(c);
        last = c;
    }
    chosen
}

/// Exhaustive oracle: the first subset, by size and then lexicographically, whose
/// removal disconnects `g`.
pub fn brute_force_connectivity(g: &SimpleGraph, caps: &Caps) -> Result<ConnectivityResult> {
    Caps::check("vertex count (brute-force connectivity)", g.n(), caps.brute_connectivity)?;
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    let n = g.n();
    let all = g.vertices();
    for size in 0..n.saturating_sub(1) {
        for combo in combinations(n, size) {
            let s = VertexSet::from_vertices(combo.iter().copied());
            if g.count_components_within(all.difference(s)) >= 2 {
                return Ok(ConnectivityResult {
                    kappa: size,
                    witness_separator: Some(s),
                });
            }
        }
    }
    Ok(ConnectivityResult {
        kappa: n - 1,
        witness_separator: None,
    })
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut cur: Option<Vec<usize>> = (k <= n).then(|| (1..=k).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        // advance
        let c = cur.as_mut().unwrap();
        let mut i = k;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - (k - 1 - i) {
                c[i] += 1;
                for j in i + 1..k {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}
