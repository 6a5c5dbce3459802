//! Labeled simple graphs on `1..=n` and the elementary invariants every
//! bound is assembled from.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count representable by the bitset adjacency.
pub const MAX_VERTICES: usize = 64;

/// A set of 1-based vertex labels packed into a `u64` (bit `v - 1` is vertex `v`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << (v - 1))
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares two sets as ascending label sequences.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        self.iter().cmp(other.iter())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = vs.iter().find(|&&v| v == 0 || v > MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(VertexSet::from_vertices(vs))
    }
}

/// Undirected simple graph on the vertex labels `1..=n`.
///
/// Adjacency is kept twice: as the sorted edge list (canonical equality and
/// output) and as one neighbourhood bitset per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertexSet>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting loops, duplicate edges and labels outside `1..=n`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::CapExceeded {
                what: "vertex count",
                value: n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(Error::InvalidGraph(format!("edge {{{a},{b}}} outside 1..={n}")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adj[u - 1].contains(v) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{v}}}")));
            }
            adj[u - 1] = adj[u - 1].with(v);
            adj[v - 1] = adj[v - 1].with(u);
            list.push((u, v));
        }
        list.sort_unstable();
        Ok(SimpleGraph { n, edges: list, adj })
    }

    /// Builds from neighbourhood bitsets; the caller guarantees symmetry and no loops.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for u in 1..=n {
            for v in adj[u - 1].iter().filter(|&v| v > u) {
                edges.push((u, v));
            }
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, [])
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i, i + 1)))
    }

    /// The cycle `1 - 2 - .. - n - 1`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Self::new(n, (1..n).map(|i| (i, i + 1)).chain(std::iter::once((1, n))))
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<Self> {
        let shift = self.n;
        Self::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u - 1].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn min_degree(&self) -> usize {
        (1..=self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Returns a copy with the edge `{u, v}` added (no-op if present).
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut adj = self.adj.clone();
        adj[u - 1] = adj[u - 1].with(v);
        adj[v - 1] = adj[v - 1].with(u);
        Self::from_adjacency(adj)
    }

    /// True iff every pair of distinct vertices of `set` is adjacent.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.adj[v - 1]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Vertices of `within` reachable from `start` without leaving `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v - 1]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, ordered by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// Number of components of the subgraph induced on `within`.
    pub fn count_components_within(&self, within: VertexSet) -> usize {
        let mut rest = within;
        let mut count = 0;
        while let Some(v) = rest.first() {
            rest = rest.difference(self.reach(v, within));
            count += 1;
        }
        count
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.reach(1, self.vertices()) == self.vertices()
    }

    /// BFS distances from `source` inside `within`; `None` for unreachable vertices.
    pub fn distances_within(&self, source: usize, within: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n + 1];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u - 1].intersection(within).iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Longest shortest path inside `component`; 0 for a single vertex.
    pub fn diameter(&self, component: VertexSet) -> Result<usize> {
        let Some(start) = component.first() else {
            return Ok(0);
        };
        if self.reach(start, component) != component {
            return Err(Error::DisconnectedInput);
        }
        let mut best = 0;
        for u in component.iter() {
            let dist = self.distances_within(u, component);
            for v in component.iter() {
                best = best.max(dist[v].unwrap());
            }
        }
        Ok(best)
    }

    /// A vertex is free when its neighbourhood induces a complete graph.
    pub fn is_free_vertex(&self, v: usize) -> bool {
        self.is_clique(self.adj[v - 1])
    }

    pub fn free_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((1..=self.n).filter(|&v| self.is_free_vertex(v)))
    }

    pub fn non_free_vertices(&self) -> VertexSet {
        self.vertices().difference(self.free_vertices())
    }

    /// Number of non-free vertices.
    pub fn iv(&self) -> usize {
        self.non_free_vertices().len()
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        VertexSet::from_vertices((1..=self.n).filter(|&v| self.adj[v - 1].is_empty()))
    }

    /// `v` is a cut vertex when deleting it increases the number of components.
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.is_cut_vertex_within(v, self.vertices())
    }

    /// Cut-vertex test in the subgraph induced on `within` (which must contain `v`).
    pub fn is_cut_vertex_within(&self, v: usize, within: VertexSet) -> bool {
        self.count_components_within(within.without(v)) > self.count_components_within(within)
    }

    /// Induced subgraph on `keep`, relabeled `1..=|keep|` in ascending order.
    /// The returned map sends new label `i` to `map[i - 1]`.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Induced {
        let map: Vec<usize> = keep.intersection(self.vertices()).to_vec();
        let mut new_label = vec![0usize; self.n + 1];
        for (i, &v) in map.iter().enumerate() {
            new_label[v] = i + 1;
        }
        let adj = map
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(self.adj[v - 1].intersection(keep).iter().map(|w| new_label[w]))
            })
            .collect();
        Induced {
            graph: SimpleGraph::from_adjacency(adj),
            labels: map,
        }
    }

    /// `G - T` with original labels kept: the vertices of `remove` become isolated
    /// and callers restrict attention to the complement via `*_within`.
    pub fn delete_vertices_in_place(&self, remove: VertexSet) -> SimpleGraph {
        let adj = (1..=self.n)
            .map(|v| {
                if remove.contains(v) {
                    VertexSet::EMPTY
                } else {
                    self.adj[v - 1].difference(remove)
                }
            })
            .collect();
        SimpleGraph::from_adjacency(adj)
    }

    /// Applies a relabeling `v -> perm[v - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> SimpleGraph {
        assert_eq!(perm.len(), self.n);
        SimpleGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
        .expect("permutation of a valid graph")
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges)
    }
}

/// Result of [`SimpleGraph::induced_subgraph`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Induced {
    pub graph: SimpleGraph,
    /// `labels[i - 1]` is the original label of new vertex `i`.
    pub labels: Vec<usize>,
}

impl Induced {
    pub fn original(&self, v: usize) -> usize {
        self.labels[v - 1]
    }

    pub fn original_set(&self, s: VertexSet) -> VertexSet {
        VertexSet::from_vertices(s.iter().map(|v| self.labels[v - 1]))
    }
}

/// Every symbol appearing in the lower and upper depth bounds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphInvariants {
    pub n: usize,
    /// Number of connected components.
    pub t: usize,
    /// Diameter of each component, in component order (by minimum vertex).
    pub component_diameters: Vec<usize>,
    /// Isolated vertices.
    pub i: usize,
    /// `i + sum(component_diameters)`.
    pub d: usize,
    /// Free vertices.
    pub f: usize,
    /// Non-free vertices.
    pub iv: usize,
    /// Vertex connectivity; `None` for disconnected graphs.
    pub kappa: Option<usize>,
}

impl GraphInvariants {
    pub fn compute(g: &SimpleGraph) -> Self {
        let comps = g.components();
        let component_diameters: Vec<usize> = comps
            .iter()
            .map(|&c| g.diameter(c).expect("components are connected"))
            .collect();
        let i = g.isolated_vertices().len();
        let f = g.free_vertices().len();
        let kappa = if comps.len() == 1 {
            Some(
                crate::connectivity::vertex_connectivity(g)
                    .expect("connected input")
                    .kappa,
            )
        } else {
            None
        };
        GraphInvariants {
            n: g.n(),
            t: comps.len(),
            d: i + component_diameters.iter().sum::<usize>(),
            component_diameters,
            i,
            f,
            iv: g.n() - f,
            kappa,
        }
    }
}

/// Convenience wrapper for [`GraphInvariants::compute`].
pub fn invariants(g: &SimpleGraph) -> GraphInvariants {
    GraphInvariants::compute(g)
}
