use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{InducedGraph, VertexSet};
use crate::bitstrings::{BitWord, CubeFamily};
use crate::error::Result;

/// JSON adjacency dump. Field order is the serialized key order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: u32,
    pub family: CubeFamily,
    pub vertices: Vec<BitWord>,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub highlight: Option<Vec<BitWord>>,
}

impl InducedGraph {
    pub fn to_json_record(&self, highlight: Option<&VertexSet>) -> Result<GraphJson> {
        if let Some(h) = highlight {
            h.check_graph(self)?;
        }
        Ok(GraphJson {
            n: self.n(),
            family: self.family(),
            vertices: self.vertices().to_vec(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            highlight: highlight.map(|h| h.words(self).collect()),
        })
    }

    pub fn to_json(&self, highlight: Option<&VertexSet>) -> Result<String> {
        let record = self.to_json_record(highlight)?;
        Ok(serde_json::to_string(&record).expect("graph record serializes"))
    }

    /// Undirected DOT, one node line per vertex and one line per edge.
    pub fn to_dot(&self, highlight: Option<&VertexSet>) -> Result<String> {
        if let Some(h) = highlight {
            h.check_graph(self)?;
        }
        let name = self.family().to_string().replace(':', "_");
        let mut out = String::new();
        writeln!(out, "graph \"{name}_{}\" {{", self.n()).unwrap();
        for (id, w) in self.vertices().iter().enumerate() {
            let marked = highlight.is_some_and(|h| h.contains(id as u32));
            if marked {
                writeln!(out, "  {id} [label=\"{w}\", style=filled, fillcolor=gray];").unwrap();
            } else {
                writeln!(out, "  {id} [label=\"{w}\"];").unwrap();
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn dot_counts_for_lucas_four() {
        let g = build_graph(CubeFamily::Lucas, 4).unwrap();
        let dot = g.to_dot(None).unwrap();
        assert_eq!(dot.lines().filter(|l| l.contains("--")).count(), 8);
        assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 7);
        assert!(dot.contains("[label=\"0101\"]"));
        assert_eq!(dot, g.to_dot(None).unwrap());
    }

    #[test]
    fn json_shape() {
        let g = build_graph(CubeFamily::Lucas, 2).unwrap();
        let json = g.to_json(None).unwrap();
        assert_eq!(
            json,
            r#"{"n":2,"family":"lucas","vertices":["00","01","10"],"edges":[[0,1],[0,2]]}"#
        );
        let back: GraphJson = serde_json::from_str(&json).unwrap();
        assert_eq!(back.vertices.len(), 3);

        let g0 = build_graph(CubeFamily::Fibonacci, 0).unwrap();
        assert_eq!(
            g0.to_json(None).unwrap(),
            r#"{"n":0,"family":"fib","vertices":[""],"edges":[]}"#
        );
    }

    #[test]
    fn highlight_must_match_graph() {
        let g = build_graph(CubeFamily::Lucas, 3).unwrap();
        let other = build_graph(CubeFamily::Lucas, 4).unwrap();
        let s = VertexSet::empty(&other);
        assert!(g.to_dot(Some(&s)).is_err());
        let mut mine = VertexSet::empty(&g);
        mine.insert(0);
        let json = g.to_json(Some(&mine)).unwrap();
        assert!(json.ends_with(r#""highlight":["000"]}"#));
    }
}
