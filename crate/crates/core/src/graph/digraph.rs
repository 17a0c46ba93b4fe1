use crate::bits::{bit, contains, full_set, iter_set, VertSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A directed graph on vertices `0..n`, no loops. Both arcs `(u, v)` and
/// `(v, u)` may be present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<VertSet>,
    inn: Vec<VertSet>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Capability(format!(
                "digraphs are capped at {MAX_VERTICES} vertices, got {n}"
            )));
        }
        let mut out = vec![0u64; n];
        let mut inn = vec![0u64; n];
        for &(u, v) in arcs {
            if u == v {
                return Err(Error::Parameter(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Parameter(format!(
                    "arc ({u}, {v}) out of range for n={n}"
                )));
            }
            out[u] |= bit(v);
            inn[v] |= bit(u);
        }
        Ok(Digraph { n, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc(&self, u: usize, v: usize) -> bool {
        contains(self.out[u], v)
    }

    pub fn out_neighbors(&self, v: usize) -> VertSet {
        self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> VertSet {
        self.inn[v]
    }

    /// `N+[v]`: the closed out-neighborhood.
    pub fn out_closed(&self, v: usize) -> VertSet {
        self.out[v] | bit(v)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|m| m.count_ones() as usize).sum()
    }

    /// Arcs sorted by (source, target).
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut all = Vec::with_capacity(self.arc_count());
        for u in 0..self.n {
            for v in iter_set(self.out[u]) {
                all.push((u, v));
            }
        }
        all
    }

    pub fn vertex_set(&self) -> VertSet {
        full_set(self.n)
    }

    /// Whether `S` out-dominates the whole vertex set.
    pub fn dominates_all(&self, s: VertSet) -> bool {
        let mut covered = s;
        for v in iter_set(s) {
            covered |= self.out[v];
        }
        covered == self.vertex_set()
    }

    pub fn induced(&self, mask: VertSet) -> (Digraph, Vec<usize>) {
        let verts: Vec<usize> = iter_set(mask).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            new_id[v] = i;
        }
        let mut arcs = Vec::new();
        for &u in &verts {
            for v in iter_set(self.out[u] & mask) {
                arcs.push((new_id[u], new_id[v]));
            }
        }
        (Digraph::new(verts.len(), &arcs).unwrap(), verts)
    }

    pub fn without_arc(&self, u: usize, v: usize) -> Digraph {
        let mut d = self.clone();
        d.out[u] &= !bit(v);
        d.inn[v] &= !bit(u);
        d
    }

    pub fn reverse(&self) -> Digraph {
        Digraph {
            n: self.n,
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Whether the subgraph induced by `mask` is acyclic (Kahn elimination).
    pub fn is_acyclic_induced(&self, mask: VertSet) -> bool {
        let mut rest = mask;
        loop {
            if rest == 0 {
                return true;
            }
            let mut removed = false;
            for v in iter_set(rest) {
                if self.out[v] & rest == 0 {
                    rest &= !bit(v);
                    removed = true;
                }
            }
            if !removed {
                return false;
            }
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.is_acyclic_induced(self.vertex_set())
    }

    /// BFS distances from `v` along arcs; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[v] = Some(0);
        let mut frontier = bit(v);
        let mut seen = bit(v);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next: VertSet = 0;
            for u in iter_set(frontier) {
                next |= self.out[u];
            }
            next &= !seen;
            for u in iter_set(next) {
                dist[u] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Shortest directed distance from `v` into the set `s` (0 if `v` is in `s`).
    pub fn distance_to_set(&self, v: usize, s: VertSet) -> Option<usize> {
        if contains(s, v) {
            return Some(0);
        }
        let mut frontier = bit(v);
        let mut seen = bit(v);
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let mut next: VertSet = 0;
            for u in iter_set(frontier) {
                next |= self.out[u];
            }
            next &= !seen;
            if next & s != 0 {
                return Some(d);
            }
            seen |= next;
            frontier = next;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    #[test]
    fn acyclicity() {
        assert!(!cycle(4).is_acyclic());
        let dag = Digraph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert!(dag.is_acyclic());
        // removing one cycle vertex breaks the cycle
        assert!(cycle(4).is_acyclic_induced(0b0111));
    }

    #[test]
    fn distances() {
        let d = cycle(5);
        let dist = d.distances_from(0);
        assert_eq!(dist[4], Some(4));
        assert_eq!(d.distance_to_set(3, 0b00011), Some(2)); // 3 -> 4 -> 0
    }

    #[test]
    fn both_arcs_allowed() {
        let d = Digraph::new(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(d.arc(0, 1) && d.arc(1, 0));
        assert!(!d.is_acyclic());
    }
}
