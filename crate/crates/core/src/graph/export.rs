//! Deterministic text formats: DOT, edge lists and 0/1 adjacency matrices.

use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

impl Graph {
    pub fn to_dot(&self) -> String {
        let (kind, arrow) = if self.is_directed() { ("digraph", "->") } else { ("graph", "--") };
        let mut s = format!("{kind} {{\n");
        for u in 0..self.vertex_count() {
            writeln!(s, "  {u};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(s, "  {u} {arrow} {v};").unwrap();
        }
        s.push_str("}\n");
        s
    }

    /// One `u v` pair per line, ascending.
    pub fn to_edge_list(&self) -> String {
        self.edges().into_iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }

    /// Rows of `0`/`1` characters.
    pub fn to_matrix(&self) -> String {
        let n = self.vertex_count();
        let mut s = String::with_capacity(n * (n + 1));
        for u in 0..n {
            for v in 0..n {
                s.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Reads an adjacency matrix (directed when asymmetric) or an undirected
    /// edge list. The format is chosen from the first non-blank line: a run of
    /// `0`/`1` characters is a matrix row, two integers are an edge.
    pub fn parse(text: &str) -> Result<Graph> {
        let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        match lines.first() {
            None => Ok(Graph::empty(0, false)),
            Some(first) if !first.contains(char::is_whitespace) => parse_matrix(&lines),
            Some(_) => parse_edges(&lines),
        }
    }
}

fn parse_matrix(lines: &[&str]) -> Result<Graph> {
    let n = lines.len();
    let mut bits = vec![vec![false; n]; n];
    for (u, line) in lines.iter().enumerate() {
        if line.len() != n {
            return Err(Error::Parse(format!("row {u} has {} entries, expected {n}", line.len())));
        }
        for (v, c) in line.chars().enumerate() {
            bits[u][v] = match c {
                '0' => false,
                '1' => true,
                other => return Err(Error::Parse(format!("unexpected character {other:?} in row {u}"))),
            };
        }
    }
    let symmetric = (0..n).all(|u| (0..n).all(|v| bits[u][v] == bits[v][u]));
    Graph::from_fn(n, !symmetric, |u, v| bits[u][v])
}

fn parse_edges(lines: &[&str]) -> Result<Graph> {
    let mut edges = Vec::new();
    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let parsed: Vec<usize> = parts
            .iter()
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
            .collect::<Result<_>>()?;
        match parsed[..] {
            [u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("expected `u v`, got {line:?}"))),
        }
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edges(n, false, &edges)
}
