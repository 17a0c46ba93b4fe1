use std::str::FromStr;

use crate::error::{Error, Result};

use super::SimpleGraph;

/// The named graph families the toolkit can generate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    /// `P_n [] P_m`, vertex `(i, j)` numbered `i * m + j`.
    Grid,
    /// `C_n [] C_m`.
    ToroidalGrid,
    /// Strong product of two cycles.
    KingToroidal,
    /// `K_n [] K_m` (one argument gives the square rook's graph).
    Rook,
    /// Cartesian product of cycles, one argument per dimension.
    Hypergrid,
    /// The 10-vertex 2-vertex-connected graph made of two 5-cycles joined by
    /// two edges; its oriented m-eternal domination number is 6, above the
    /// ceil(n/2) that holds for undirected connected graphs.
    TwinPentagons,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Grid => "grid",
            Family::ToroidalGrid => "toroidal-grid",
            Family::KingToroidal => "king-toroidal",
            Family::Rook => "rook",
            Family::Hypergrid => "hypergrid",
            Family::TwinPentagons => "twin-pentagons",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            "complete-bipartite" | "biclique" => Ok(Family::CompleteBipartite),
            "grid" => Ok(Family::Grid),
            "toroidal-grid" | "torus" => Ok(Family::ToroidalGrid),
            "king-toroidal" | "king" => Ok(Family::KingToroidal),
            "rook" => Ok(Family::Rook),
            "hypergrid" => Ok(Family::Hypergrid),
            "twin-pentagons" => Ok(Family::TwinPentagons),
            other => Err(Error::Parameter(format!("unknown graph family `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Strong,
}

/// `g1 x g2` with vertex `(a, b)` numbered `a * g2.n() + b`.
pub fn product(g1: &SimpleGraph, g2: &SimpleGraph, kind: ProductKind) -> SimpleGraph {
    let n2 = g2.n();
    let n = g1.n() * n2;
    let id = |a: usize, b: usize| a * n2 + b;
    let mut edges = Vec::new();
    for a in 0..g1.n() {
        for &(x, y) in g2.edges() {
            edges.push((id(a, x), id(a, y)));
        }
    }
    for &(a, a2) in g1.edges() {
        for b in 0..n2 {
            edges.push((id(a, b), id(a2, b)));
        }
    }
    if kind == ProductKind::Strong {
        for &(a, a2) in g1.edges() {
            for &(b, b2) in g2.edges() {
                edges.push((id(a, b), id(a2, b2)));
                edges.push((id(a, b2), id(a2, b)));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::new(n, &edges).expect("product construction is valid")
}

fn path(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::Parameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    SimpleGraph::new(n, &edges)
}

fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::Parameter("cycle needs n >= 3".into()));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    SimpleGraph::new(n, &edges)
}

fn complete(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::Parameter("complete graph needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    SimpleGraph::new(n, &edges)
}

/// Parts `A = 0..a` and `B = a..a+b`.
fn complete_bipartite(a: usize, b: usize) -> Result<SimpleGraph> {
    if a < 1 || b < 1 {
        return Err(Error::Parameter("complete bipartite needs both parts nonempty".into()));
    }
    let mut edges = Vec::new();
    for u in 0..a {
        for v in 0..b {
            edges.push((u, a + v));
        }
    }
    SimpleGraph::new(a + b, &edges)
}

fn twin_pentagons() -> SimpleGraph {
    // Two 5-cycles 0-1-2-3-4-0 and 5-6-7-8-9-5, plus the cross edges 4-5
    // and 3-7.
    let edges = [
        (0, 1),
        (1, 2),
        (2, 3),
        (3, 4),
        (0, 4),
        (5, 6),
        (6, 7),
        (7, 8),
        (8, 9),
        (5, 9),
        (4, 5),
        (3, 7),
    ];
    SimpleGraph::new(10, &edges).unwrap()
}

pub fn generate(family: Family, params: &[usize]) -> Result<SimpleGraph> {
    let need = |k: usize| -> Result<()> {
        if params.len() != k {
            Err(Error::Parameter(format!(
                "family `{}` takes {k} parameter(s), got {}",
                family.name(),
                params.len()
            )))
        } else {
            Ok(())
        }
    };
    match family {
        Family::Path => {
            need(1)?;
            path(params[0])
        }
        Family::Cycle => {
            need(1)?;
            cycle(params[0])
        }
        Family::Complete => {
            need(1)?;
            complete(params[0])
        }
        Family::CompleteBipartite => {
            need(2)?;
            complete_bipartite(params[0], params[1])
        }
        Family::Grid => {
            need(2)?;
            Ok(product(&path(params[0])?, &path(params[1])?, ProductKind::Cartesian))
        }
        Family::ToroidalGrid => {
            need(2)?;
            Ok(product(&cycle(params[0])?, &cycle(params[1])?, ProductKind::Cartesian))
        }
        Family::KingToroidal => {
            need(2)?;
            Ok(product(&cycle(params[0])?, &cycle(params[1])?, ProductKind::Strong))
        }
        Family::Rook => match params {
            [n] => Ok(product(&complete(*n)?, &complete(*n)?, ProductKind::Cartesian)),
            [n, m] => Ok(product(&complete(*n)?, &complete(*m)?, ProductKind::Cartesian)),
            _ => Err(Error::Parameter("rook takes 1 or 2 parameters".into())),
        },
        Family::Hypergrid => {
            if params.is_empty() {
                return Err(Error::Parameter("hypergrid needs at least one dimension".into()));
            }
            let mut g = cycle(params[0])?;
            for &d in &params[1..] {
                g = product(&g, &cycle(d)?, ProductKind::Cartesian);
            }
            Ok(g)
        }
        Family::TwinPentagons => {
            need(0)?;
            Ok(twin_pentagons())
        }
    }
}

/// Adds one vertex per edge of `g`, joined to the edge's endpoints. The
/// original vertices keep ids `0..n`; the vertex for edge `e` is `n + e`.
pub fn triangulation_gadget(g: &SimpleGraph) -> SimpleGraph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        edges.push((u, n + e));
        edges.push((v, n + e));
    }
    SimpleGraph::new(n + g.edge_count(), &edges).expect("gadget construction is valid")
}
