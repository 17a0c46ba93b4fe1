use crate::bits::{bit, contains, iter_set, set_to_vec, VertSet};
use crate::error::{Error, Result};

use super::{Digraph, SimpleGraph};

/// Strongly connected components in topological order of the condensation
/// (sources first). Tarjan's algorithm emits reverse topological order, so
/// the result is reversed before returning.
pub fn scc(d: &Digraph) -> Vec<VertSet> {
    struct State<'a> {
        d: &'a Digraph,
        index: Vec<usize>,
        low: Vec<usize>,
        on_stack: VertSet,
        stack: Vec<usize>,
        next: usize,
        comps: Vec<VertSet>,
    }
    const UNSET: usize = usize::MAX;

    fn visit(st: &mut State, v: usize) {
        st.index[v] = st.next;
        st.low[v] = st.next;
        st.next += 1;
        st.stack.push(v);
        st.on_stack |= bit(v);
        for w in iter_set(st.d.out_neighbors(v)) {
            if st.index[w] == UNSET {
                visit(st, w);
                st.low[v] = st.low[v].min(st.low[w]);
            } else if contains(st.on_stack, w) {
                st.low[v] = st.low[v].min(st.index[w]);
            }
        }
        if st.low[v] == st.index[v] {
            let mut comp: VertSet = 0;
            loop {
                let w = st.stack.pop().unwrap();
                st.on_stack &= !bit(w);
                comp |= bit(w);
                if w == v {
                    break;
                }
            }
            st.comps.push(comp);
        }
    }

    let n = d.n();
    let mut st = State {
        d,
        index: vec![UNSET; n],
        low: vec![0; n],
        on_stack: 0,
        stack: Vec::new(),
        next: 0,
        comps: Vec::new(),
    };
    for v in 0..n {
        if st.index[v] == UNSET {
            visit(&mut st, v);
        }
    }
    st.comps.reverse();
    st.comps
}

pub fn is_strongly_connected(d: &Digraph) -> bool {
    d.n() <= 1 || scc(d).len() == 1
}

/// Whether the subgraph induced by `mask` is strongly connected. The empty
/// set and singletons count as strongly connected.
pub fn is_strongly_connected_induced(d: &Digraph, mask: VertSet) -> bool {
    if mask.count_ones() <= 1 {
        return true;
    }
    let root = mask.trailing_zeros() as usize;
    let reach = |fwd: bool| -> VertSet {
        let mut seen = bit(root);
        let mut frontier = seen;
        while frontier != 0 {
            let mut next: VertSet = 0;
            for v in iter_set(frontier) {
                next |= if fwd {
                    d.out_neighbors(v)
                } else {
                    d.in_neighbors(v)
                };
            }
            frontier = next & mask & !seen;
            seen |= frontier;
        }
        seen
    };
    reach(true) == mask && reach(false) == mask
}

/// Bridges of an undirected graph, by DFS low-link.
pub fn bridges(g: &SimpleGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut timer = 0usize;
    // iterative DFS to keep the stack shallow
    for start in 0..n {
        if disc[start] != UNSET {
            continue;
        }
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(start, UNSET, set_to_vec(g.neighbors(start)))];
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        while let Some((v, parent, nbrs)) = stack.last_mut() {
            if let Some(w) = nbrs.pop() {
                let (v, parent) = (*v, *parent);
                if disc[w] == UNSET {
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, set_to_vec(g.neighbors(w))));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                let (v, parent) = (*v, *parent);
                stack.pop();
                if parent != UNSET {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        out.push((parent.min(v), parent.max(v)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Vertex sets of the 2-edge-connected components: remove every bridge, then
/// take connected components. Endpoints isolated by bridge removal become
/// singleton components.
pub fn two_edge_connected_components(g: &SimpleGraph) -> Vec<VertSet> {
    let br = bridges(g);
    let keep: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| br.binary_search(e).is_err())
        .collect();
    let stripped = SimpleGraph::new(g.n(), &keep).unwrap();
    stripped.connected_components()
}

/// A strongly connected orientation of a connected bridgeless graph: DFS tree
/// edges point root-to-leaf, every other edge points descendant-to-ancestor.
pub fn robbins_orientation(g: &SimpleGraph) -> Result<Digraph> {
    if g.n() == 0 {
        return Err(Error::Structure("empty graph".into()));
    }
    if !g.is_connected() {
        return Err(Error::Structure("graph is not connected".into()));
    }
    if let Some(&(u, v)) = bridges(g).first() {
        return Err(Error::Structure(format!(
            "graph has a bridge ({u}, {v}); no strongly connected orientation exists"
        )));
    }
    let n = g.n();
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut arcs = Vec::with_capacity(g.edge_count());
    let mut timer = 0usize;
    let mut stack: Vec<(usize, usize, Vec<usize>)> =
        vec![(0, UNSET, set_to_vec(g.neighbors(0)))];
    disc[0] = timer;
    timer += 1;
    while let Some((v, parent, nbrs)) = stack.last_mut() {
        if let Some(w) = nbrs.pop() {
            let (v, parent) = (*v, *parent);
            if w == parent {
                continue; // the tree edge was already oriented from above
            }
            if disc[w] == UNSET {
                disc[w] = timer;
                timer += 1;
                arcs.push((v, w)); // tree arc, toward the leaf
                stack.push((w, v, set_to_vec(g.neighbors(w))));
            } else if disc[w] < disc[v] {
                arcs.push((v, w)); // back arc, toward the ancestor
            }
        } else {
            stack.pop();
        }
    }
    debug_assert_eq!(arcs.len(), g.edge_count());
    Digraph::new(n, &arcs)
}
