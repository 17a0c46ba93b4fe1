//! Neighborhood-equitable colorings: verification, builders for the families
//! that admit them, and the eulerian orientations plus class-shift strategies
//! they induce.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bits::{bit, full_set, iter_set, VertSet};
use crate::error::{Error, Result};
use crate::graph::{generate, product, Digraph, Family, ProductKind, SimpleGraph};

use super::{MoveMode, StrategyCertificate};

/// A proper `k`-coloring of a `(k-1)l`-regular graph in which every vertex
/// sees exactly `l` neighbors in each class it does not belong to.
#[derive(Debug, Clone)]
pub struct NEColoring {
    pub graph: SimpleGraph,
    pub k: usize,
    pub l: usize,
    /// Class of each vertex, values in `0..k`.
    pub classes: Vec<usize>,
}

impl NEColoring {
    pub fn class_mask(&self, i: usize) -> VertSet {
        self.classes
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == i)
            .fold(0, |acc, (v, _)| acc | bit(v))
    }

    pub fn to_json(&self) -> String {
        let dto = NeColoringJson {
            n: self.graph.n(),
            k: self.k,
            l: self.l,
            classes: self.classes.clone(),
            edges: self.graph.edges().to_vec(),
        };
        serde_json::to_string_pretty(&dto).expect("coloring serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let dto: NeColoringJson =
            serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
        Ok(NEColoring {
            graph: SimpleGraph::new(dto.n, &dto.edges)?,
            k: dto.k,
            l: dto.l,
            classes: dto.classes,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct NeColoringJson {
    n: usize,
    k: usize,
    l: usize,
    classes: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// Checks all three invariants; a failed check reports the violation.
pub fn ne_verify(c: &NEColoring) -> std::result::Result<(), String> {
    let g = &c.graph;
    let n = g.n();
    if c.classes.len() != n {
        return Err(format!("{} class entries for {n} vertices", c.classes.len()));
    }
    if c.k == 0 || c.classes.iter().any(|&x| x >= c.k) {
        return Err("class ids must lie in 0..k".into());
    }
    let expected = (c.k - 1) * c.l;
    for v in 0..n {
        if g.degree(v) != expected {
            return Err(format!(
                "vertex {v} has degree {}, but a ({},{})-coloring needs {expected}-regularity",
                g.degree(v),
                c.k,
                c.l
            ));
        }
    }
    for &(u, v) in g.edges() {
        if c.classes[u] == c.classes[v] {
            return Err(format!("edge ({u}, {v}) joins two vertices of class {}", c.classes[u]));
        }
    }
    let masks: Vec<VertSet> = (0..c.k).map(|i| c.class_mask(i)).collect();
    for v in 0..n {
        for (i, &mask) in masks.iter().enumerate() {
            if i == c.classes[v] {
                continue;
            }
            let seen = (g.neighbors(v) & mask).count_ones() as usize;
            if seen != c.l {
                return Err(format!(
                    "vertex {v} sees {seen} neighbors of class {i}, expected {}",
                    c.l
                ));
            }
        }
    }
    Ok(())
}

/// Families with known neighborhood-equitable colorings.
#[derive(Debug, Clone)]
pub enum NeFamily {
    /// `C_n` with `3 | n`: a (3, 1)-coloring.
    Cycle3 { n: usize },
    /// `K_n`: the rainbow (n, 1)-coloring.
    Complete { n: usize },
    /// Cartesian product of two colorings with the same class count:
    /// class sums mod k, giving (k, l1 + l2).
    Product(Box<NeFamily>, Box<NeFamily>),
    /// Toroidal king grid `C_n x C_m` (strong product), `5 | n`, `5 | m`:
    /// class `i + 2j mod 5`, giving (5, 2).
    King { n: usize, m: usize },
    /// Cartesian product of cycles `C_{d_1} [] ... [] C_{d_k}`, each
    /// dimension divisible by `k + 1`: class `sum j * i_j mod (k+1)`,
    /// giving (k + 1, 2).
    Hypergrid { dims: Vec<usize> },
}

pub fn ne_build(family: &NeFamily) -> Result<NEColoring> {
    let coloring = match family {
        NeFamily::Cycle3 { n } => {
            if n % 3 != 0 {
                return Err(Error::Parameter(format!(
                    "a (3,1)-coloring of C_n needs 3 | n, got {n}"
                )));
            }
            NEColoring {
                graph: generate(Family::Cycle, &[*n])?,
                k: 3,
                l: 1,
                classes: (0..*n).map(|i| i % 3).collect(),
            }
        }
        NeFamily::Complete { n } => NEColoring {
            graph: generate(Family::Complete, &[*n])?,
            k: *n,
            l: 1,
            classes: (0..*n).collect(),
        },
        NeFamily::Product(f1, f2) => {
            let c1 = ne_build(f1)?;
            let c2 = ne_build(f2)?;
            if c1.k != c2.k {
                return Err(Error::Parameter(format!(
                    "product factors need equal class counts, got {} and {}",
                    c1.k, c2.k
                )));
            }
            let n2 = c2.graph.n();
            let graph = product(&c1.graph, &c2.graph, ProductKind::Cartesian);
            let classes = (0..graph.n())
                .map(|w| (c1.classes[w / n2] + c2.classes[w % n2]) % c1.k)
                .collect();
            NEColoring { graph, k: c1.k, l: c1.l + c2.l, classes }
        }
        NeFamily::King { n, m } => {
            if n % 5 != 0 || m % 5 != 0 {
                return Err(Error::Parameter(
                    "the king-grid coloring needs both sides divisible by 5".into(),
                ));
            }
            let graph = generate(Family::KingToroidal, &[*n, *m])?;
            let classes = (0..graph.n()).map(|w| (w / m + 2 * (w % m)) % 5).collect();
            NEColoring { graph, k: 5, l: 2, classes }
        }
        NeFamily::Hypergrid { dims } => {
            let k = dims.len();
            if k == 0 {
                return Err(Error::Parameter("hypergrid needs at least one dimension".into()));
            }
            if dims.iter().any(|&d| d % (k + 1) != 0 || d < 3) {
                return Err(Error::Parameter(format!(
                    "every dimension must be a multiple of {} (and at least 3)",
                    k + 1
                )));
            }
            let graph = generate(Family::Hypergrid, dims)?;
            let classes = (0..graph.n())
                .map(|mut w| {
                    let mut color = 0;
                    for (j, &d) in dims.iter().enumerate().rev() {
                        color += (j + 1) * (w % d);
                        w /= d;
                    }
                    color % (k + 1)
                })
                .collect();
            NEColoring { graph, k: k + 1, l: 2, classes }
        }
    };
    ne_verify(&coloring).map_err(Error::Integrity)?;
    Ok(coloring)
}

/// Partitions an even-degree graph's edges into closed trails and orients
/// each along its traversal, so in-degree equals out-degree everywhere.
fn orient_even_graph(n: usize, edges: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (eid, &(u, v)) in edges.iter().enumerate() {
        adj[u].push((v, eid));
        adj[v].push((u, eid));
    }
    let mut used = vec![false; edges.len()];
    let mut ptr = vec![0usize; n];
    let mut arcs = Vec::with_capacity(edges.len());
    for start in 0..n {
        loop {
            while ptr[start] < adj[start].len() && used[adj[start][ptr[start]].1] {
                ptr[start] += 1;
            }
            if ptr[start] == adj[start].len() {
                break;
            }
            // walk a closed trail; even degrees guarantee it returns to start
            let mut v = start;
            loop {
                while ptr[v] < adj[v].len() && used[adj[v][ptr[v]].1] {
                    ptr[v] += 1;
                }
                if ptr[v] == adj[v].len() {
                    debug_assert_eq!(v, start);
                    break;
                }
                let (w, eid) = adj[v][ptr[v]];
                used[eid] = true;
                arcs.push((v, w));
                v = w;
            }
        }
    }
    debug_assert!(used.iter().all(|&u| u));
    arcs
}

/// Orients every class-pair subgraph of an even-`l` coloring eulerianly and
/// returns the orientation together with the class-shift strategy: the
/// configurations are the `k` color classes and every attack is answered by
/// relocating all `n/k` guards onto the attacked vertex's class.
pub fn orientation_from_ne(c: &NEColoring) -> Result<(Digraph, StrategyCertificate)> {
    if c.l % 2 != 0 {
        return Err(Error::Parameter(format!(
            "the induced orientation needs an even per-class count, got l = {}",
            c.l
        )));
    }
    ne_verify(c).map_err(Error::Integrity)?;
    let g = &c.graph;
    let n = g.n();
    let mut arcs = Vec::with_capacity(g.edge_count());
    for i in 0..c.k {
        for j in (i + 1)..c.k {
            let pair_edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .copied()
                .filter(|&(u, v)| {
                    (c.classes[u] == i && c.classes[v] == j)
                        || (c.classes[u] == j && c.classes[v] == i)
                })
                .collect();
            arcs.extend(orient_even_graph(n, &pair_edges));
        }
    }
    let digraph = Digraph::new(n, &arcs)?;

    let mut configs: Vec<VertSet> = (0..c.k).map(|i| c.class_mask(i)).collect();
    configs.sort_unstable();
    let class_pos: Vec<usize> = (0..c.k)
        .map(|i| configs.binary_search(&c.class_mask(i)).unwrap())
        .collect();
    let mut responses = BTreeMap::new();
    for (ci, &s) in configs.iter().enumerate() {
        for r in iter_set(full_set(n) & !s) {
            responses.insert((ci, r), class_pos[c.classes[r]]);
        }
    }
    let cert = StrategyCertificate {
        digraph: digraph.clone(),
        k: n / c.k,
        configs,
        responses,
        mode: MoveMode::Multimove,
    };
    Ok((digraph, cert))
}

/// Orientation and certificate for an arbitrary toroidal grid `C_n [] C_m`
/// (`n, m >= 3`): the largest `3a x 3b` core torus keeps its class-shift
/// strategy (wraparound arcs become oriented paths through the padding) and
/// every padding vertex is permanently guarded. The certified bound is
/// `3ab + (nm - 9ab)`.
pub fn toroidal_padding_orientation(
    n: usize,
    m: usize,
) -> Result<(Digraph, StrategyCertificate)> {
    if n < 3 || m < 3 {
        return Err(Error::Parameter("toroidal grids need both sides >= 3".into()));
    }
    let (a, b) = (n / 3, m / 3);
    let (core_rows, core_cols) = (3 * a, 3 * b);
    let core_coloring = ne_build(&NeFamily::Product(
        Box::new(NeFamily::Cycle3 { n: core_rows }),
        Box::new(NeFamily::Cycle3 { n: core_cols }),
    ))?;
    let (core_digraph, _) = orientation_from_ne(&core_coloring)?;

    let full_graph = generate(Family::ToroidalGrid, &[n, m])?;
    let fid = |i: usize, j: usize| i * m + j;
    let mut arcs: Vec<(usize, usize)> = Vec::with_capacity(full_graph.edge_count());
    let mut covered = vec![false; full_graph.edge_count()];
    let push = |arcs: &mut Vec<(usize, usize)>, covered: &mut Vec<bool>, u: usize, v: usize| {
        covered[full_graph.edge_index(u, v).expect("construction follows grid edges")] = true;
        arcs.push((u, v));
    };
    for (cu, cv) in core_digraph.arcs() {
        let (i1, j1) = (cu / core_cols, cu % core_cols);
        let (i2, j2) = (cv / core_cols, cv % core_cols);
        if i1 == i2 && j1.abs_diff(j2) == core_cols - 1 && m > core_cols {
            // horizontal wraparound becomes a path through padding columns
            let i = i1;
            if j1 > j2 {
                // (i, 3b-1) -> (i, 3b) -> ... -> (i, m-1) -> (i, 0)
                push(&mut arcs, &mut covered, fid(i, core_cols - 1), fid(i, core_cols));
                for j in core_cols..m - 1 {
                    push(&mut arcs, &mut covered, fid(i, j), fid(i, j + 1));
                }
                push(&mut arcs, &mut covered, fid(i, m - 1), fid(i, 0));
            } else {
                push(&mut arcs, &mut covered, fid(i, 0), fid(i, m - 1));
                for j in (core_cols..m - 1).rev() {
                    push(&mut arcs, &mut covered, fid(i, j + 1), fid(i, j));
                }
                push(&mut arcs, &mut covered, fid(i, core_cols), fid(i, core_cols - 1));
            }
        } else if j1 == j2 && i1.abs_diff(i2) == core_rows - 1 && n > core_rows {
            let j = j1;
            if i1 > i2 {
                push(&mut arcs, &mut covered, fid(core_rows - 1, j), fid(core_rows, j));
                for i in core_rows..n - 1 {
                    push(&mut arcs, &mut covered, fid(i, j), fid(i + 1, j));
                }
                push(&mut arcs, &mut covered, fid(n - 1, j), fid(0, j));
            } else {
                push(&mut arcs, &mut covered, fid(0, j), fid(n - 1, j));
                for i in (core_rows..n - 1).rev() {
                    push(&mut arcs, &mut covered, fid(i + 1, j), fid(i, j));
                }
                push(&mut arcs, &mut covered, fid(core_rows, j), fid(core_rows - 1, j));
            }
        } else {
            push(&mut arcs, &mut covered, fid(i1, j1), fid(i2, j2));
        }
    }
    for (e, &(u, v)) in full_graph.edges().iter().enumerate() {
        if !covered[e] {
            arcs.push((u, v));
        }
    }
    let digraph = Digraph::new(full_graph.n(), &arcs)?;

    let padding: VertSet = (0..n)
        .flat_map(|i| (0..m).map(move |j| (i, j)))
        .filter(|&(i, j)| i >= core_rows || j >= core_cols)
        .fold(0, |acc, (i, j)| acc | bit(fid(i, j)));
    let core_class = |color: usize| -> VertSet {
        (0..core_rows)
            .flat_map(|i| (0..core_cols).map(move |j| (i, j)))
            .filter(|&(i, j)| (i + j) % 3 == color)
            .fold(0, |acc, (i, j)| acc | bit(fid(i, j)))
    };
    let mut configs: Vec<VertSet> = (0..3).map(|c| core_class(c) | padding).collect();
    configs.sort_unstable();
    let class_pos: Vec<usize> = (0..3)
        .map(|c| configs.binary_search(&(core_class(c) | padding)).unwrap())
        .collect();
    let mut responses = BTreeMap::new();
    for (ci, &s) in configs.iter().enumerate() {
        for r in iter_set(full_set(full_graph.n()) & !s) {
            let (i, j) = (r / m, r % m);
            debug_assert!(i < core_rows && j < core_cols);
            responses.insert((ci, r), class_pos[(i + j) % 3]);
        }
    }
    let cert = StrategyCertificate {
        digraph: digraph.clone(),
        k: 3 * a * b + (n * m - 9 * a * b),
        configs,
        responses,
        mode: MoveMode::Multimove,
    };
    Ok((digraph, cert))
}
