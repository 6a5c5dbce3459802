//! Named graphs: `fig1` to `fig5` plus the parametric families
//! `cycleN`, `pathN` and `completeN`.

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// Triangle {1,3,4} with vertices 2 and 5 each joined to all three.
pub fn fig1() -> SimpleGraph {
    SimpleGraph::new(
        5,
        [(1, 3), (1, 4), (3, 4), (1, 2), (2, 3), (2, 4), (1, 5), (3, 5), (4, 5)],
    )
    .unwrap()
}

/// The hexagon completed at 1, 2 and 4.
pub fn fig2() -> SimpleGraph {
    SimpleGraph::new(
        6,
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 6), (1, 3), (3, 6), (3, 5)],
    )
    .unwrap()
}

/// Chain of six triangles on ten vertices.
pub fn fig3() -> SimpleGraph {
    triangle_chain(3)
}

/// Triangle {1,2,3}, vertex 4 joined to 2 and 3, pendant 5 on 4.
pub fn fig4() -> SimpleGraph {
    SimpleGraph::new(5, [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)]).unwrap()
}

/// Triangle {1,2,3}, K4 on {2,3,4,5}, pendants 6 on 4 and 7 on 5.
pub fn fig5() -> SimpleGraph {
    SimpleGraph::new(
        7,
        [
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 5),
            (2, 4),
            (3, 5),
            (3, 4),
            (4, 5),
            (5, 7),
            (4, 6),
        ],
    )
    .unwrap()
}

/// Alternating chain of `2k` triangles on `3k + 1` vertices: consecutive triangles
/// share an edge, then a vertex, then an edge, and so on.
pub fn triangle_chain(k: usize) -> SimpleGraph {
    assert!(k >= 1);
    let n = 3 * k + 1;
    let mut edges = Vec::new();
    for b in 0..k {
        // block b occupies a = 3b+1, the pair (a+1, a+2) and a+3
        let a = 3 * b + 1;
        edges.extend([(a, a + 1), (a, a + 2), (a + 1, a + 2), (a + 1, a + 3), (a + 2, a + 3)]);
    }
    SimpleGraph::new(n, edges).unwrap()
}

/// Graph made of `cliques` groups of vertices glued along a common clique of size
/// `s`: group `i` contributes `extra[i]` private vertices joined to the whole core.
pub fn glued_cliques(s: usize, extra: &[usize]) -> SimpleGraph {
    let n = s + extra.iter().sum::<usize>();
    let mut edges = Vec::new();
    for u in 1..=s {
        for v in u + 1..=s {
            edges.push((u, v));
        }
    }
    let mut next = s + 1;
    for &e in extra {
        let group: Vec<usize> = (next..next + e).collect();
        next += e;
        for (i, &u) in group.iter().enumerate() {
            for &v in &group[i + 1..] {
                edges.push((u, v));
            }
            for c in 1..=s {
                edges.push((c, u));
            }
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

pub const NAMED: &[&str] = &["fig1", "fig2", "fig3", "fig4", "fig5", "cycleN", "pathN", "completeN"];

/// Resolves a fixture name such as `fig3`, `cycle6`, `path4` or `complete5`.
pub fn by_name(name: &str) -> Result<SimpleGraph> {
    let parametric = |prefix: &str| -> Option<Result<usize>> {
        name.strip_prefix(prefix).map(|rest| {
            rest.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size in fixture name {name:?}")))
        })
    };
    match name {
        "fig1" => Ok(fig1()),
        "fig2" => Ok(fig2()),
        "fig3" => Ok(fig3()),
        "fig4" => Ok(fig4()),
        "fig5" => Ok(fig5()),
        _ => {
            if let Some(n) = parametric("cycle") {
                SimpleGraph::cycle(n?)
            } else if let Some(n) = parametric("path") {
                SimpleGraph::path(n?)
            } else if let Some(n) = parametric("complete") {
                SimpleGraph::complete(n?)
            } else {
                Err(Error::Parse(format!("unknown fixture {name:?}")))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_names() {
        assert_eq!(by_name("cycle5").unwrap(), SimpleGraph::cycle(5).unwrap());
        assert_eq!(by_name("path2").unwrap().edges(), &[(1, 2)]);
        assert_eq!(by_name("complete4").unwrap().edge_count(), 6);
        assert!(by_name("cycle").is_err());
        assert!(by_name("fig9").is_err());
    }

    #[test]
    fn chain_matches_fig3_labels() {
        let g = fig3();
        assert_eq!(g.n(), 10);
        assert_eq!(g.edge_count(), 15);
        for e in [(1, 3), (1, 2), (2, 4), (4, 6), (5, 7), (7, 9), (8, 10), (9, 10)] {
            assert!(g.has_edge(e.0, e.1), "{e:?}");
        }
    }

    #[test]
    fn glued_cliques_shape() {
        let g = glued_cliques(3, &[1, 1]);
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 9);
    }
}
