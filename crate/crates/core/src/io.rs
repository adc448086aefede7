//! Edge-list graph files.
//!
//! ```text
//! # comment
//! n m
//! u v        (m lines; labels are arbitrary tokens)
//! c label color
//! ```
//!
//! Labels are numbered in order of first appearance. Vertices never named
//! get their index as label when that token is free.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{ColoredGraph, Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(String, String),
    #[error("self-loop at {0}")]
    SelfLoop(String),
}

#[derive(Clone, Debug)]
pub struct ParsedGraph {
    pub graph: ColoredGraph,
    /// `labels[v]` is the file token of vertex `v`.
    pub labels: Vec<String>,
    /// Color token per vertex, `None` when uncolored.
    pub color_tokens: Vec<Option<String>>,
}

struct Labels {
    n: usize,
    index: HashMap<String, usize>,
    names: Vec<String>,
}

impl Labels {
    fn get(&mut self, token: &str, line: usize) -> Result<usize, ParseError> {
        if let Some(&i) = self.index.get(token) {
            return Ok(i);
        }
        if self.names.len() == self.n {
            return Err(ParseError::Syntax {
                line,
                reason: format!("more than {} distinct vertex labels", self.n),
            });
        }
        self.index.insert(token.to_string(), self.names.len());
        self.names.push(token.to_string());
        Ok(self.names.len() - 1)
    }
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let syntax = |line: usize, reason: &str| ParseError::Syntax {
        line,
        reason: reason.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header \"n m\""))?;
    let nums: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| syntax(hline, "header must be two integers \"n m\""))?;
    let [n, m] = nums[..] else {
        return Err(syntax(hline, "header must be two integers \"n m\""));
    };
    let mut labels = Labels {
        n,
        index: HashMap::new(),
        names: Vec::new(),
    };
    let mut edges = Vec::new();
    let mut colors: Vec<(usize, String)> = Vec::new();
    for (line, content) in lines {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[..] {
            ["c", label, color] => {
                let v = labels.get(label, line)?;
                colors.push((v, color.to_string()));
            }
            [u, v] => {
                let a = labels.get(u, line)?;
                let b = labels.get(v, line)?;
                edges.push((a, b, line));
            }
            _ => return Err(syntax(line, "expected \"u v\" or \"c label color\"")),
        }
    }
    if edges.len() != m {
        return Err(syntax(hline, &format!("header announces {m} edges, found {}", edges.len())));
    }
    for v in labels.names.len()..n {
        let own = v.to_string();
        let name = if labels.index.contains_key(&own) {
            format!("_{v}")
        } else {
            own
        };
        labels.index.insert(name.clone(), v);
        labels.names.push(name);
    }
    let names = labels.names;
    let graph = Graph::new(n, edges.iter().map(|&(a, b, _)| (a, b))).map_err(|e| match e {
        GraphError::SelfLoop(v) => ParseError::SelfLoop(names[v].clone()),
        GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge(names[u].clone(), names[v].clone()),
        other => syntax(hline, &other.to_string()),
    })?;
    let mut color_tokens: Vec<Option<String>> = vec![None; n];
    for (v, c) in colors {
        color_tokens[v] = Some(c);
    }
    Ok(ParsedGraph {
        graph: ColoredGraph::from_keys(graph, &color_tokens),
        labels: names,
        color_tokens,
    })
}

/// Writes `g` in the edge-list format with vertex indices as labels.
pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.graph.m());
    for &(u, v) in g.graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    if g.num_colors() > 1 {
        for v in 0..g.n() {
            out.push_str(&format!("c {v} {}\n", g.color(v)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::path;

    #[test]
    fn path_and_single_vertex() {
        let p = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p.graph.graph, path(3).unwrap());
        assert_eq!(p.graph.num_colors(), 1);
        let k1 = parse_graph("1 0\n").unwrap();
        assert_eq!((k1.graph.n(), k1.graph.graph.m()), (1, 0));
        assert_eq!(k1.labels, ["0"]);
    }

    #[test]
    fn labels_and_colors() {
        let p = parse_graph("# a path\n4 3\na b\nb c\nc d e f\n").unwrap_err();
        assert!(matches!(p, ParseError::Syntax { line: 5, .. }));
        let p = parse_graph("4 3\na b\nb c  # inline\nc d\nc a red\n").unwrap();
        assert_eq!(p.labels, ["a", "b", "c", "d"]);
        assert_eq!(p.graph.color(0), 1);
        assert_eq!(p.graph.color(1), 0);
        assert_eq!(p.color_tokens[0].as_deref(), Some("red"));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_graph("2 1\n0 0\n"), Err(ParseError::SelfLoop(_))));
        assert!(matches!(parse_graph("2 2\n0 1\n1 0\n"), Err(ParseError::DuplicateEdge(_, _))));
        assert!(matches!(parse_graph("2 2\n0 1\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_graph("2 1\n0 5\n5 7\n"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_graph(""), Err(ParseError::Syntax { line: 1, .. })));
    }

    #[test]
    fn write_then_parse() {
        let g = ColoredGraph::new(path(4).unwrap(), vec![0, 1, 1, 0]).unwrap();
        let back = parse_graph(&write_graph(&g)).unwrap().graph;
        assert_eq!(back.graph, g.graph);
        assert_eq!(back.colors(), g.colors());
    }
}
