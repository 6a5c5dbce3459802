//! Graph ingestion (JSON or plain text) and export (canonical JSON, DOT).
//!
//! JSON: `{"n": 4, "edges": [[1,2],[2,3]]}`. Text: the vertex count on the first
//! line, then one `u v` pair per line. Blank lines and `#` comments are ignored.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for SimpleGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphJson {
            n: self.n(),
            edges: self.edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for SimpleGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GraphJson::deserialize(d)?;
        SimpleGraph::new(raw.n, raw.edges.into_iter().map(|[u, v]| (u, v)))
            .map_err(serde::de::Error::custom)
    }
}

pub fn from_json(text: &str) -> Result<SimpleGraph> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn from_text(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap().trim())
        .filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?
        .parse()
        .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
    let mut edges = Vec::new();
    for line in lines {
        let mut parts = line.split_whitespace();
        let parse = |p: Option<&str>| -> Result<usize> {
            p.ok_or_else(|| Error::Parse(format!("expected `u v`, got {line:?}")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex in {line:?}")))
        };
        let u = parse(parts.next())?;
        let v = parse(parts.next())?;
        if parts.next().is_some() {
            return Err(Error::Parse(format!("trailing tokens in {line:?}")));
        }
        edges.push((u, v));
    }
    SimpleGraph::new(n, edges)
}

/// Parses JSON when the text starts with `{`, the line format otherwise.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    if text.trim_start().starts_with('{') {
        from_json(text)
    } else {
        from_text(text)
    }
}

/// Compact JSON with edges sorted lexicographically; byte-identical for equal graphs.
pub fn to_canonical_json(g: &SimpleGraph) -> String {
    serde_json::to_string(g).expect("graph serializes")
}

pub fn to_text(g: &SimpleGraph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_dot(g: &SimpleGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 1..=g.n() {
        out.push_str(&format!("  {v};\n"));
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_json_sorts_edges() {
        let g = from_json(r#"{"n": 4, "edges": [[3,4],[2,1],[1,3]]}"#).unwrap();
        assert_eq!(to_canonical_json(&g), r#"{"n":4,"edges":[[1,2],[1,3],[3,4]]}"#);
    }

    #[test]
    fn text_format() {
        let g = parse_graph("3\n1 2\n\n2 3 # tail\n").unwrap();
        assert_eq!(g, SimpleGraph::path(3).unwrap());
        assert!(parse_graph("3\n1\n").is_err());
        assert!(parse_graph("x\n").is_err());
        assert!(parse_graph(r#"{"n":2,"edges":[[1,1]]}"#).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&SimpleGraph::path(2).unwrap(), "p2");
        assert_eq!(dot, "graph p2 {\n  1;\n  2;\n  1 -- 2;\n}\n");
    }

    proptest! {
        #[test]
        fn round_trips(n in 1usize..9, bits in any::<u64>()) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits >> (k % 64) & 1 == 1 { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = SimpleGraph::new(n, edges).unwrap();
            prop_assert_eq!(&parse_graph(&to_canonical_json(&g)).unwrap(), &g);
            prop_assert_eq!(&parse_graph(&to_text(&g)).unwrap(), &g);
        }
    }
}
