//! The text edge-list format: `graph <n>` or `digraph <n>` on the first
//! line, one `<u> <v>` pair per subsequent line, `#` comments and blank
//! lines ignored. Writers emit edges in canonical order.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Digraph, SimpleGraph};

#[derive(Debug, Clone)]
pub enum ParsedGraph {
    Undirected(SimpleGraph),
    Directed(Digraph),
}

pub fn parse(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let kind = parts.next().unwrap_or("");
    let n: usize = parts
        .next()
        .ok_or_else(|| Error::Format("header needs a vertex count".into()))?
        .parse()
        .map_err(|_| Error::Format("vertex count is not a number".into()))?;
    if parts.next().is_some() {
        return Err(Error::Format("trailing tokens in header".into()));
    }
    let mut pairs = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Format(format!("expected `<u> <v>`, got `{line}`")));
        };
        let u: usize = a.parse().map_err(|_| Error::Format(format!("bad vertex `{a}`")))?;
        let v: usize = b.parse().map_err(|_| Error::Format(format!("bad vertex `{b}`")))?;
        pairs.push((u, v));
    }
    match kind {
        "graph" => Ok(ParsedGraph::Undirected(SimpleGraph::new(n, &pairs)?)),
        "digraph" => Ok(ParsedGraph::Directed(Digraph::new(n, &pairs)?)),
        other => Err(Error::Format(format!(
            "header must start with `graph` or `digraph`, got `{other}`"
        ))),
    }
}

pub fn write_graph(g: &SimpleGraph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {}\n", d.n());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn roundtrip_graph() {
        let g = generate(Family::Cycle, &[5]).unwrap();
        let text = write_graph(&g);
        match parse(&text).unwrap() {
            ParsedGraph::Undirected(h) => assert_eq!(h, g),
            _ => panic!("expected an undirected graph"),
        }
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# a comment\n\ngraph 3\n0 1 # inline\n\n1 2\n";
        match parse(text).unwrap() {
            ParsedGraph::Undirected(g) => assert_eq!(g.edge_count(), 2),
            _ => panic!(),
        }
    }

    #[test]
    fn digraph_roundtrip() {
        let d = Digraph::new(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        match parse(&write_digraph(&d)).unwrap() {
            ParsedGraph::Directed(e) => assert_eq!(e, d),
            _ => panic!(),
        }
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("").is_err());
        assert!(parse("graph x\n").is_err());
        assert!(parse("graph 3\n0\n").is_err());
        assert!(parse("tree 3\n").is_err());
        assert!(parse("graph 2\n0 2\n").is_err());
    }
}
