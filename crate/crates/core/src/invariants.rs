//! Exact graph and digraph parameters computed by subset enumeration.
//!
//! Every minimization walks subsets ascending by cardinality (maximizations
//! descend), so the first witness found is optimal. Caps keep the
//! exponential scans at desk scale; the `_uncapped` variants exist for
//! internal callers that already control instance size.

use crate::bits::{binomial, full_set, iter_set, subsets_of_size, VertSet};
use crate::error::{Error, Result};
use crate::graph::{is_strongly_connected, is_strongly_connected_induced, SimpleGraph};
use crate::graph::{bridges, Digraph};

/// Default vertex cap for the subset-enumeration parameters.
pub const SUBSET_CAP: usize = 20;
/// Cap for the clique-cover dynamic program (3^n subset-of-subset scan).
pub const CLIQUE_COVER_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantResult {
    pub value: usize,
    pub witness: VertSet,
}

fn check_cap(n: usize, cap: usize, what: &str) -> Result<()> {
    if n > cap {
        Err(Error::Capability(format!(
            "{what} is capped at n <= {cap}, got {n}"
        )))
    } else {
        Ok(())
    }
}

/// Maximum independent set of an undirected graph.
pub fn alpha_graph(g: &SimpleGraph) -> Result<InvariantResult> {
    check_cap(g.n(), SUBSET_CAP, "alpha")?;
    Ok(alpha_graph_uncapped(g))
}

pub fn alpha_graph_uncapped(g: &SimpleGraph) -> InvariantResult {
    let n = g.n();
    for size in (0..=n).rev() {
        for s in subsets_of_size(n, size) {
            if iter_set(s).all(|v| g.neighbors(v) & s == 0) {
                return InvariantResult { value: size, witness: s };
            }
        }
    }
    InvariantResult { value: 0, witness: 0 }
}

/// Order of the largest induced acyclic subgraph of a digraph.
pub fn alpha_digraph(d: &Digraph) -> Result<InvariantResult> {
    check_cap(d.n(), SUBSET_CAP, "alpha")?;
    Ok(alpha_digraph_uncapped(d))
}

pub fn alpha_digraph_uncapped(d: &Digraph) -> InvariantResult {
    let n = d.n();
    for size in (0..=n).rev() {
        for s in subsets_of_size(n, size) {
            if d.is_acyclic_induced(s) {
                return InvariantResult { value: size, witness: s };
            }
        }
    }
    InvariantResult { value: 0, witness: 0 }
}

/// Minimum out-dominating set of a digraph. For an undirected graph pass its
/// symmetric digraph.
pub fn domination_number(d: &Digraph) -> Result<InvariantResult> {
    check_cap(d.n(), SUBSET_CAP, "domination number")?;
    Ok(domination_number_uncapped(d))
}

pub fn domination_number_uncapped(d: &Digraph) -> InvariantResult {
    let n = d.n();
    for size in 0..=n {
        for s in subsets_of_size(n, size) {
            if d.dominates_all(s) {
                return InvariantResult { value: size, witness: s };
            }
        }
    }
    unreachable!("the whole vertex set dominates")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    pub value: usize,
    /// The covering cliques, as vertex masks.
    pub cliques: Vec<VertSet>,
}

/// Minimum number of cliques covering all vertices, by subset DP; the
/// witness cover is recovered by backtracking.
pub fn clique_cover(g: &SimpleGraph) -> Result<CliqueCover> {
    check_cap(g.n(), CLIQUE_COVER_CAP, "clique cover")?;
    let n = g.n();
    if n == 0 {
        return Ok(CliqueCover { value: 0, cliques: Vec::new() });
    }
    let full = full_set(n) as usize;
    // is_clique[m]: every pair inside m adjacent
    let mut is_clique = vec![false; full + 1];
    is_clique[0] = true;
    for m in 1..=full {
        let v = m.trailing_zeros() as usize;
        let rest = m & (m - 1);
        is_clique[m] = is_clique[rest] && (rest as u64 & !g.neighbors(v)) == 0;
    }
    let mut dp = vec![u32::MAX; full + 1];
    let mut chosen = vec![0usize; full + 1];
    dp[0] = 0;
    for m in 1..=full {
        let v = m.trailing_zeros() as usize;
        // iterate subsets of m containing v
        let pool = m & !(1usize << v);
        let mut sub = pool;
        let mut best = u32::MAX;
        let mut best_clique = 0usize;
        loop {
            let cand = sub | (1usize << v);
            if is_clique[cand] && dp[m & !cand] != u32::MAX && dp[m & !cand] + 1 < best {
                best = dp[m & !cand] + 1;
                best_clique = cand;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool;
        }
        dp[m] = best;
        chosen[m] = best_clique;
    }
    let mut cliques = Vec::with_capacity(dp[full] as usize);
    let mut m = full;
    while m != 0 {
        cliques.push(chosen[m] as VertSet);
        m &= !chosen[m];
    }
    Ok(CliqueCover { value: dp[full] as usize, cliques })
}

pub fn clique_cover_number(g: &SimpleGraph) -> Result<usize> {
    Ok(clique_cover(g)?.value)
}

/// Smallest set `S` inducing a strongly connected subgraph such that every
/// outside vertex has an arc into `S` and an arc from `S`. `None` when no
/// such set exists (for example on acyclic digraphs of order at least 2).
pub fn gamma_dd(d: &Digraph) -> Result<Option<InvariantResult>> {
    check_cap(d.n(), CLIQUE_COVER_CAP, "dominating-dominated set")?;
    let n = d.n();
    let full = full_set(n);
    for size in 1..=n {
        for s in subsets_of_size(n, size) {
            if !is_strongly_connected_induced(d, s) {
                continue;
            }
            let ok = iter_set(full & !s)
                .all(|v| d.out_neighbors(v) & s != 0 && d.in_neighbors(v) & s != 0);
            if ok {
                return Ok(Some(InvariantResult { value: size, witness: s }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScddResult {
    /// `k + |S| - 1`.
    pub value: usize,
    pub set: VertSet,
    pub k: usize,
}

/// Minimum of `k + |S| - 1` over strongly connected sets `S` where every
/// outside vertex is dominated by `S` and can reach `S` within `k` steps.
/// `S = V` is admissible with `k = 0`, so the value is at most `n - 1`.
pub fn scdd_prime(d: &Digraph) -> Result<ScddResult> {
    check_cap(d.n(), CLIQUE_COVER_CAP, "k-dominating-dominated search")?;
    if !is_strongly_connected(d) {
        return Err(Error::Structure(
            "k-dominating-dominated sets need a strongly connected digraph".into(),
        ));
    }
    let n = d.n();
    let full = full_set(n);
    let mut best = ScddResult { value: n - 1, set: full, k: 0 };
    for size in 1..n {
        if size > best.value {
            break; // value >= |S| - 1 + 1 for proper subsets
        }
        for s in subsets_of_size(n, size) {
            if !is_strongly_connected_induced(d, s) {
                continue;
            }
            let mut needed_k = 0usize;
            let mut ok = true;
            for v in iter_set(full & !s) {
                if d.in_neighbors(v) & s == 0 {
                    ok = false;
                    break;
                }
                match d.distance_to_set(v, s) {
                    Some(dist) => needed_k = needed_k.max(dist),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let value = needed_k + size - 1;
                if value < best.value {
                    best = ScddResult { value, set: s, k: needed_k };
                }
            }
        }
    }
    Ok(best)
}

/// Smallest dominating set inducing a strongly connected subgraph.
pub fn gamma_c_digraph(d: &Digraph) -> Result<InvariantResult> {
    check_cap(d.n(), CLIQUE_COVER_CAP, "connected domination")?;
    if !is_strongly_connected(d) {
        return Err(Error::Structure(
            "connected domination needs a strongly connected digraph".into(),
        ));
    }
    let n = d.n();
    for size in 1..=n {
        for s in subsets_of_size(n, size) {
            if d.dominates_all(s) && is_strongly_connected_induced(d, s) {
                return Ok(InvariantResult { value: size, witness: s });
            }
        }
    }
    unreachable!("V itself qualifies on a strongly connected digraph")
}

/// Maximum directed distance over ordered vertex pairs.
pub fn diameter(d: &Digraph) -> Result<usize> {
    if !is_strongly_connected(d) {
        return Err(Error::Structure(
            "diameter needs a strongly connected digraph".into(),
        ));
    }
    let mut diam = 0;
    for v in 0..d.n() {
        for dist in d.distances_from(v) {
            diam = diam.max(dist.expect("strongly connected"));
        }
    }
    Ok(diam)
}

/// Smallest 2-dominating set inducing a 2-edge-connected subgraph (sets of
/// size below 3 cannot be 2-edge-connected). `None` when absent.
pub fn gamma_22(g: &SimpleGraph) -> Result<Option<InvariantResult>> {
    check_cap(g.n(), CLIQUE_COVER_CAP, "2-dominating 2-edge-connected search")?;
    let n = g.n();
    let full = full_set(n);
    for size in 3..=n {
        for s in subsets_of_size(n, size) {
            let two_dominated =
                iter_set(full & !s).all(|v| (g.neighbors(v) & s).count_ones() >= 2);
            if !two_dominated {
                continue;
            }
            let (h, _) = g.induced(s);
            if h.is_connected() && bridges(&h).is_empty() {
                return Ok(Some(InvariantResult { value: size, witness: s }));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone)]
pub struct ChainCheck {
    pub name: &'static str,
    pub lhs: usize,
    pub rhs: usize,
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

#[derive(Debug, Clone)]
pub struct ChainReport {
    pub checks: Vec<ChainCheck>,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(ChainCheck::holds)
    }
}

/// Verifies the inequality chains relating the game values to the
/// non-game parameters on one digraph:
/// gamma <= gamma_inf_m <= alpha <= gamma_inf <= C(alpha+1, 2), plus the
/// dominating-dominated bound and, on strongly connected digraphs,
/// gamma_inf_m <= scdd' + 1 <= gamma_c + diam <= (gamma + 1) * diam.
pub fn check_inequality_chain(
    d: &Digraph,
    gamma_inf: usize,
    gamma_inf_m: usize,
) -> Result<ChainReport> {
    let gamma = domination_number(d)?.value;
    let alpha = alpha_digraph(d)?.value;
    let mut checks = vec![
        ChainCheck { name: "gamma <= gamma_inf_m", lhs: gamma, rhs: gamma_inf_m },
        ChainCheck { name: "gamma_inf_m <= alpha", lhs: gamma_inf_m, rhs: alpha },
        ChainCheck { name: "alpha <= gamma_inf", lhs: alpha, rhs: gamma_inf },
        ChainCheck {
            name: "gamma_inf <= binom(alpha+1, 2)",
            lhs: gamma_inf,
            rhs: binomial(alpha + 1, 2).min(usize::MAX as u128) as usize,
        },
    ];
    if let Some(dd) = gamma_dd(d)? {
        checks.push(ChainCheck {
            name: "gamma_inf_m <= gamma_dd + 1",
            lhs: gamma_inf_m,
            rhs: dd.value + 1,
        });
    }
    if is_strongly_connected(d) && d.n() >= 2 {
        let sp = scdd_prime(d)?;
        let gc = gamma_c_digraph(d)?.value;
        let diam = diameter(d)?;
        checks.push(ChainCheck {
            name: "gamma_inf_m <= scdd' + 1",
            lhs: gamma_inf_m,
            rhs: sp.value + 1,
        });
        checks.push(ChainCheck {
            name: "scdd' + 1 <= gamma_c + diam",
            lhs: sp.value + 1,
            rhs: gc + diam,
        });
        checks.push(ChainCheck {
            name: "gamma_c + diam <= (gamma + 1) * diam",
            lhs: gc + diam,
            rhs: (gamma + 1) * diam,
        });
    }
    Ok(ChainReport { checks })
}
