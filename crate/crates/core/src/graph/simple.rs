use crate::bits::{bit, contains, full_set, iter_set, VertSet, MAX_VERTICES};
use crate::error::{Error, Result};

use super::Digraph;

/// An undirected simple graph on vertices `0..n`.
///
/// Edges are kept as unordered pairs `(u, v)` with `u < v` in lexicographic
/// order; that order is the canonical edge order every orientation bitstring
/// and file format refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<VertSet>,
}

impl SimpleGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "graphs are capped at {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a == b {
                return Err(Error::Parameter(format!("loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::Parameter(format!(
                    "edge ({a}, {b}) out of range for n={n}"
                )));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if norm.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parameter("duplicate edge".into()));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in &norm {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
        Ok(SimpleGraph {
            n,
            edges: norm,
            adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && contains(self.adj[u], v)
    }

    pub fn neighbors(&self, v: usize) -> VertSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_set(&self) -> VertSet {
        full_set(self.n)
    }

    pub fn complement(&self) -> SimpleGraph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.adjacent(u, v) {
                    edges.push((u, v));
                }
            }
        }
        SimpleGraph::new(self.n, &edges).unwrap()
    }

    /// Induced subgraph on `mask`. Returns the subgraph (vertices renumbered
    /// by increasing original id) and the original id of each new vertex.
    pub fn induced(&self, mask: VertSet) -> (SimpleGraph, Vec<usize>) {
        let verts: Vec<usize> = iter_set(mask).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_id[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if contains(mask, u) && contains(mask, v) {
                edges.push((new_id[u], new_id[v]));
            }
        }
        (SimpleGraph::new(verts.len(), &edges).unwrap(), verts)
    }

    pub fn connected_components(&self) -> Vec<VertSet> {
        let mut seen: VertSet = 0;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if contains(seen, s) {
                continue;
            }
            let mut comp = bit(s);
            let mut frontier = bit(s);
            while frontier != 0 {
                let mut next: VertSet = 0;
                for v in iter_set(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= frontier;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// The digraph with both arcs for every edge.
    pub fn symmetric_digraph(&self) -> Digraph {
        let mut arcs = Vec::with_capacity(2 * self.edges.len());
        for &(u, v) in &self.edges {
            arcs.push((u, v));
            arcs.push((v, u));
        }
        Digraph::new(self.n, &arcs).unwrap()
    }

    /// Vertices adjacent to every other vertex.
    pub fn universal_vertices(&self) -> Vec<usize> {
        let all = self.vertex_set();
        (0..self.n)
            .filter(|&v| self.adj[v] | bit(v) == all)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(SimpleGraph::new(3, &[(1, 1)]).is_err());
        assert!(SimpleGraph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(SimpleGraph::new(2, &[(0, 5)]).is_err());
    }

    #[test]
    fn canonical_edge_order() {
        let g = SimpleGraph::new(4, &[(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (2, 3)]);
        assert_eq!(g.edge_index(3, 0), Some(1));
        assert_eq!(g.edge_index(1, 2), None);
    }

    #[test]
    fn induced_keeps_relative_order() {
        let g = SimpleGraph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let (h, ids) = g.induced(0b11010); // {1, 3, 4}
        assert_eq!(ids, vec![1, 3, 4]);
        assert_eq!(h.edges(), &[(1, 2)]); // only 3-4 survives
    }

    #[test]
    fn components() {
        let g = SimpleGraph::new(5, &[(0, 1), (3, 4)]).unwrap();
        let comps = g.connected_components();
        assert_eq!(comps, vec![0b00011, 0b00100, 0b11000]);
    }
}
