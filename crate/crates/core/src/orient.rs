//! Minimization of digraph parameters over all orientations of an
//! undirected graph.
//!
//! Each minimizable parameter sits behind the [`OrientedParameter`] trait
//! and is registered by name; the search core is shared. The search
//! decomposes along 2-edge-connected components when the parameter is
//! additive over them, restricts bridgeless components to strongly connected
//! orientations when that provably preserves the minimum, deduplicates
//! orientations by automorphism orbit, and prunes with a cheap per-digraph
//! lower bound against a shared incumbent.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

use crate::bits::VertSet;
use crate::error::{Error, Result};
use crate::graph::{
    automorphisms, edge_action, is_strongly_connected, orient, two_edge_connected_components,
    Digraph, EdgeAction, Orientation, SimpleGraph,
};
use crate::invariants;
use crate::solver;

pub const DEFAULT_EDGE_CAP: usize = 24;
const DEDUP_GROUP_CAP: usize = 1024;

/// How a parameter's minimum splits across parts of the input graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decomposition {
    /// Additive over 2-edge-connected components.
    TwoEdgeConnected,
    /// Additive over connected components only.
    Connected,
    /// Not additive; the graph is searched whole.
    Whole,
}

/// A digraph parameter that can be minimized over orientations. The
/// strategies are interchangeable: the search core consults only this
/// interface.
pub trait OrientedParameter: Sync {
    /// Registry key, also used by the command line.
    fn name(&self) -> &'static str;

    /// Exact value when it is below `cutoff`, `None` otherwise (or when the
    /// parameter is undefined on `d`).
    fn solve_below(&self, d: &Digraph, cutoff: usize) -> Option<usize>;

    /// A cheap lower bound on the value; used to skip exact solves.
    fn prune_bound(&self, d: &Digraph) -> usize;

    /// A value no orientation of `g` can beat; reaching it stops the search.
    fn floor(&self, g: &SimpleGraph) -> usize;

    /// How the minimum splits across parts of the graph.
    fn decomposition(&self) -> Decomposition;

    /// Whether bridgeless components may restrict to strongly connected
    /// orientations without changing the minimum.
    fn strongly_connected_suffices(&self) -> bool;

    /// Value on the one-vertex digraph.
    fn singleton_value(&self) -> usize;

    /// Hard vertex cap of the underlying exact computation, if any.
    fn vertex_cap(&self) -> Option<usize> {
        None
    }
}

struct GammaInfParam;
struct GammaInfMParam;
struct AlphaParam;
struct GammaDdParam;

impl OrientedParameter for GammaInfParam {
    fn name(&self) -> &'static str {
        "gamma-inf"
    }
    fn solve_below(&self, d: &Digraph, cutoff: usize) -> Option<usize> {
        solver::gamma_inf_below(d, cutoff).map(|r| r.value)
    }
    fn prune_bound(&self, d: &Digraph) -> usize {
        invariants::alpha_digraph_uncapped(d).value
    }
    fn floor(&self, g: &SimpleGraph) -> usize {
        // alpha(g) < oriented alpha <= oriented gamma_inf on any graph with
        // an edge
        if g.edge_count() == 0 {
            g.n()
        } else {
            invariants::alpha_graph_uncapped(g).value + 1
        }
    }
    fn decomposition(&self) -> Decomposition {
        Decomposition::TwoEdgeConnected
    }
    fn strongly_connected_suffices(&self) -> bool {
        true
    }
    fn singleton_value(&self) -> usize {
        1
    }
}

impl OrientedParameter for GammaInfMParam {
    fn name(&self) -> &'static str {
        "gamma-inf-m"
    }
    fn solve_below(&self, d: &Digraph, cutoff: usize) -> Option<usize> {
        solver::gamma_inf_m_below(d, cutoff).map(|r| r.value)
    }
    fn prune_bound(&self, d: &Digraph) -> usize {
        invariants::domination_number_uncapped(d).value
    }
    fn floor(&self, g: &SimpleGraph) -> usize {
        let gamma = invariants::domination_number_uncapped(&g.symmetric_digraph()).value;
        gamma.max(if g.n() >= 2 { 2 } else { 1 })
    }
    fn decomposition(&self) -> Decomposition {
        Decomposition::TwoEdgeConnected
    }
    fn strongly_connected_suffices(&self) -> bool {
        true
    }
    fn singleton_value(&self) -> usize {
        1
    }
}

impl OrientedParameter for AlphaParam {
    fn name(&self) -> &'static str {
        "alpha"
    }
    fn solve_below(&self, d: &Digraph, cutoff: usize) -> Option<usize> {
        let v = invariants::alpha_digraph_uncapped(d).value;
        (v < cutoff).then_some(v)
    }
    fn prune_bound(&self, d: &Digraph) -> usize {
        invariants::alpha_digraph_uncapped(d).value
    }
    fn floor(&self, g: &SimpleGraph) -> usize {
        if g.edge_count() == 0 {
            g.n()
        } else {
            invariants::alpha_graph_uncapped(g).value + 1
        }
    }
    fn decomposition(&self) -> Decomposition {
        Decomposition::Connected
    }
    fn strongly_connected_suffices(&self) -> bool {
        false
    }
    fn singleton_value(&self) -> usize {
        1
    }
}

impl OrientedParameter for GammaDdParam {
    fn name(&self) -> &'static str {
        "gamma-dd"
    }
    fn solve_below(&self, d: &Digraph, cutoff: usize) -> Option<usize> {
        let v = invariants::gamma_dd(d).expect("vertex cap checked upfront")?.value;
        (v < cutoff).then_some(v)
    }
    fn prune_bound(&self, _d: &Digraph) -> usize {
        1
    }
    fn floor(&self, g: &SimpleGraph) -> usize {
        // a dominating-dominated pair needs arcs both ways; an orientation
        // has no 2-cycles, so a defined value is at least min(n, 3)
        g.n().min(3)
    }
    fn decomposition(&self) -> Decomposition {
        Decomposition::Whole
    }
    fn strongly_connected_suffices(&self) -> bool {
        false
    }
    fn singleton_value(&self) -> usize {
        1
    }
    fn vertex_cap(&self) -> Option<usize> {
        Some(invariants::CLIQUE_COVER_CAP)
    }
}

static GAMMA_INF: GammaInfParam = GammaInfParam;
static GAMMA_INF_M: GammaInfMParam = GammaInfMParam;
static ALPHA: AlphaParam = AlphaParam;
static GAMMA_DD: GammaDdParam = GammaDdParam;

/// All registered minimizable parameters.
pub fn registry() -> [&'static dyn OrientedParameter; 4] {
    [&GAMMA_INF, &GAMMA_INF_M, &ALPHA, &GAMMA_DD]
}

/// Looks a strategy up by its registry key or by the oriented alias used on
/// the command line (`oedn`, `oednm`, `oalpha`, `oscdd`).
pub fn lookup(name: &str) -> Option<&'static dyn OrientedParameter> {
    let key = match name {
        "oedn" => "gamma-inf",
        "oednm" => "gamma-inf-m",
        "oalpha" => "alpha",
        "oscdd" => "gamma-dd",
        other => other,
    };
    registry().iter().copied().find(|p| p.name() == key)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DedupMode {
    /// Deduplicate when the automorphism group is small enough to pay off.
    Auto,
    On,
    Off,
}

#[derive(Debug, Clone)]
pub struct SearchOptions {
    pub dedup: DedupMode,
    pub workers: usize,
    pub edge_cap: usize,
    /// Collect every optimal orientation (disables the floor early-exit and
    /// weakens pruning to keep ties).
    pub collect_ties: bool,
    /// Overrides the parameter's default strong-connectivity restriction.
    pub sc_restrict: Option<bool>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            dedup: DedupMode::Auto,
            workers: std::thread::available_parallelism().map_or(1, |c| c.get()),
            edge_cap: DEFAULT_EDGE_CAP,
            collect_ties: false,
            sc_restrict: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OrientedResult {
    /// `None` when the parameter is undefined on every orientation.
    pub value: Option<usize>,
    /// A best orientation of the full input graph (bridge and cross edges
    /// oriented low-to-high); `None` when `value` is.
    pub best_orientation: Option<Orientation>,
    pub orientations_examined: u64,
    pub orientations_pruned: u64,
}

/// Result of one bridgeless component's search.
struct ComponentOutcome {
    value: Option<usize>,
    best_bits: Option<u64>,
    ties: Vec<u64>,
    examined: u64,
    pruned: u64,
}

fn search_component(
    param: &dyn OrientedParameter,
    g: &SimpleGraph,
    opts: &SearchOptions,
) -> Result<ComponentOutcome> {
    let m = g.edge_count();
    if m > opts.edge_cap || m > 48 {
        return Err(Error::Capability(format!(
            "{} edges exceed the orientation cap of {}; raise --cap or use certificates",
            m,
            opts.edge_cap.min(48)
        )));
    }
    if let Some(cap) = param.vertex_cap() {
        if g.n() > cap {
            return Err(Error::Capability(format!(
                "{} minimization is capped at {cap} vertices, got {}",
                param.name(),
                g.n()
            )));
        }
    }
    let actions: Option<Vec<EdgeAction>> = match opts.dedup {
        DedupMode::Off => None,
        DedupMode::On | DedupMode::Auto => match automorphisms(g) {
            Ok(auts) if auts.len() > 1 => {
                if opts.dedup == DedupMode::On || auts.len() <= DEDUP_GROUP_CAP {
                    Some(auts.iter().skip(1).map(|p| edge_action(g, p)).collect())
                } else {
                    None
                }
            }
            Ok(_) => None,
            Err(_) if opts.dedup == DedupMode::Auto => None,
            Err(e) => return Err(e),
        },
    };
    let sc_only = opts
        .sc_restrict
        .unwrap_or_else(|| param.strongly_connected_suffices());
    let floor = param.floor(g);
    let total: u64 = 1u64 << m;
    let workers = opts.workers.clamp(1, 64);

    let incumbent = AtomicUsize::new(usize::MAX);
    let stop = AtomicBool::new(false);
    let next_block = AtomicUsize::new(0);
    let block_size: u64 = ((total / (workers as u64 * 8)).max(256)).min(total.max(1));
    let blocks = total.div_ceil(block_size);

    struct WorkerOut {
        hist: Vec<u64>,
        filtered: u64,
        best: Option<(usize, u64)>,
        ties: Vec<(u64, usize)>,
    }

    let run_worker = || -> WorkerOut {
        let mut out = WorkerOut {
            hist: vec![0u64; g.n() + 2],
            filtered: 0,
            best: None,
            ties: Vec::new(),
        };
        loop {
            if stop.load(Ordering::Relaxed) {
                break;
            }
            let blk = next_block.fetch_add(1, Ordering::Relaxed) as u64;
            if blk >= blocks {
                break;
            }
            let lo = blk * block_size;
            let hi = ((blk + 1) * block_size).min(total);
            for bits in lo..hi {
                if let Some(actions) = &actions {
                    let canonical = actions
                        .iter()
                        .all(|a| crate::graph::apply_edge_action(a, bits) >= bits);
                    if !canonical {
                        continue;
                    }
                }
                let flags: Vec<bool> = (0..m).map(|i| bits >> i & 1 != 0).collect();
                let d = orient(g, &flags).expect("bit count matches");
                if sc_only && !is_strongly_connected(&d) {
                    continue;
                }
                out.filtered += 1;
                let bound = param.prune_bound(&d).min(g.n() + 1);
                out.hist[bound] += 1;
                let inc = incumbent.load(Ordering::Relaxed);
                // prune only above the incumbent: candidates matching it are
                // still solved, so the reported best orientation (the least
                // optimal bitstring) does not depend on scheduling
                if bound > inc {
                    continue;
                }
                let cutoff = inc.saturating_add(1).min(g.n() + 1);
                if let Some(v) = param.solve_below(&d, cutoff) {
                    incumbent.fetch_min(v, Ordering::Relaxed);
                    match out.best {
                        Some((bv, bb)) if (bv, bb) <= (v, bits) => {}
                        _ => out.best = Some((v, bits)),
                    }
                    if opts.collect_ties {
                        out.ties.push((bits, v));
                    } else if v <= floor {
                        stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
            }
        }
        out
    };

    let mut outs: Vec<WorkerOut> = Vec::new();
    if workers == 1 {
        outs.push(run_worker());
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers).map(|_| scope.spawn(run_worker)).collect();
            for h in handles {
                outs.push(h.join().expect("search worker panicked"));
            }
        });
    }

    let final_value = {
        let v = incumbent.load(Ordering::Relaxed);
        (v != usize::MAX).then_some(v)
    };
    let mut best_bits: Option<u64> = None;
    let mut ties: Vec<u64> = Vec::new();
    let mut hist = vec![0u64; g.n() + 2];
    let mut filtered = 0u64;
    for o in &outs {
        filtered += o.filtered;
        for (i, c) in o.hist.iter().enumerate() {
            hist[i] += c;
        }
        if let (Some(v), Some((bv, bb))) = (final_value, o.best) {
            if bv == v {
                best_bits = Some(best_bits.map_or(bb, |cur| cur.min(bb)));
            }
        }
        if let Some(v) = final_value {
            ties.extend(o.ties.iter().filter(|&&(_, tv)| tv == v).map(|&(b, _)| b));
        }
    }
    ties.sort_unstable();
    // examined/pruned derived from the bound histogram against the final
    // value, so the counts do not depend on scheduling: a candidate whose
    // cheap bound already exceeds the minimum never needs an exact solve
    let (examined, pruned) = if stop.load(Ordering::Relaxed) {
        (filtered, 0) // early floor exit: counts reflect work actually done
    } else if let Some(v) = final_value {
        let pruned: u64 = hist.iter().skip(v + 1).sum();
        (filtered - pruned, pruned)
    } else {
        (filtered, 0)
    };
    Ok(ComponentOutcome { value: final_value, best_bits, ties, examined, pruned })
}

/// Minimizes `param` over all orientations of `g`.
pub fn minimize(
    param: &dyn OrientedParameter,
    g: &SimpleGraph,
    opts: &SearchOptions,
) -> Result<OrientedResult> {
    let (outcome, _) = minimize_inner(param, g, opts)?;
    Ok(outcome)
}

/// As [`minimize`], also returning every optimal orientation bitstring of a
/// bridgeless input (orbit representatives when dedup is active).
pub fn minimize_collecting(
    param: &dyn OrientedParameter,
    g: &SimpleGraph,
    opts: &SearchOptions,
) -> Result<(OrientedResult, Vec<u64>)> {
    let mut opts = opts.clone();
    opts.collect_ties = true;
    minimize_inner(param, g, &opts)
}

fn minimize_inner(
    param: &dyn OrientedParameter,
    g: &SimpleGraph,
    opts: &SearchOptions,
) -> Result<(OrientedResult, Vec<u64>)> {
    let comps: Vec<VertSet> = match param.decomposition() {
        Decomposition::TwoEdgeConnected => two_edge_connected_components(g),
        Decomposition::Connected => g.connected_components(),
        Decomposition::Whole => vec![g.vertex_set()],
    };
    let mut total_value: usize = 0;
    let mut defined = true;
    let mut global_bits: u64 = 0;
    let mut examined = 0u64;
    let mut pruned = 0u64;
    let mut ties: Vec<u64> = Vec::new();
    let single_component = comps.len() == 1;

    for comp in &comps {
        if comp.count_ones() == 1 {
            total_value += param.singleton_value();
            continue;
        }
        let (sub, ids) = g.induced(*comp);
        let outcome = search_component(param, &sub, opts)?;
        examined += outcome.examined;
        pruned += outcome.pruned;
        match outcome.value {
            Some(v) => total_value += v,
            None => {
                defined = false;
                continue;
            }
        }
        if let Some(bits) = outcome.best_bits {
            for (local_e, &(u, v)) in sub.edges().iter().enumerate() {
                let (gu, gv) = (ids[u], ids[v]);
                let global_e = g.edge_index(gu, gv).expect("induced edges exist");
                // flip the bit when the induced renumbering reversed the pair
                let flipped = (bits >> local_e & 1 != 0) ^ (gu > gv);
                if flipped {
                    global_bits |= 1 << global_e;
                }
            }
        }
        if single_component {
            ties = outcome.ties;
        }
    }
    let result = if defined {
        OrientedResult {
            value: Some(total_value),
            best_orientation: Some(Orientation::new(g.clone(), global_bits)?),
            orientations_examined: examined,
            orientations_pruned: pruned,
        }
    } else {
        OrientedResult {
            value: None,
            best_orientation: None,
            orientations_examined: examined,
            orientations_pruned: pruned,
        }
    };
    Ok((result, ties))
}

pub fn oedn(g: &SimpleGraph, opts: &SearchOptions) -> Result<OrientedResult> {
    minimize(&GAMMA_INF, g, opts)
}

pub fn oednm(g: &SimpleGraph, opts: &SearchOptions) -> Result<OrientedResult> {
    minimize(&GAMMA_INF_M, g, opts)
}

pub fn oalpha(g: &SimpleGraph, opts: &SearchOptions) -> Result<OrientedResult> {
    minimize(&ALPHA, g, opts)
}

pub fn oscdd(g: &SimpleGraph, opts: &SearchOptions) -> Result<OrientedResult> {
    minimize(&GAMMA_DD, g, opts)
}

/// Streams orientations in ascending bitstring order, optionally restricted
/// to strongly connected ones and deduplicated to the least representative
/// of each automorphism orbit.
pub fn enumerate_orientations(
    g: &SimpleGraph,
    dedup: bool,
    strongly_connected_only: bool,
    edge_cap: usize,
) -> Result<impl Iterator<Item = Orientation> + '_> {
    let m = g.edge_count();
    if m > edge_cap || m > 48 {
        return Err(Error::Capability(format!(
            "{m} edges exceed the orientation cap of {}",
            edge_cap.min(48)
        )));
    }
    let actions: Option<Vec<EdgeAction>> = if dedup {
        let auts = automorphisms(g)?;
        Some(auts.iter().skip(1).map(|p| edge_action(g, p)).collect())
    } else {
        None
    };
    Ok((0..(1u64 << m)).filter_map(move |bits| {
        if let Some(actions) = &actions {
            if !actions
                .iter()
                .all(|a| crate::graph::apply_edge_action(a, bits) >= bits)
            {
                return None;
            }
        }
        let orientation = Orientation::new(g.clone(), bits).expect("bits fit the edge count");
        if strongly_connected_only && !is_strongly_connected(&orientation.materialize()) {
            return None;
        }
        Some(orientation)
    }))
}

/// Counts automorphism orbits among a set of orientation bitstrings.
pub fn orbit_count(g: &SimpleGraph, bitstrings: &[u64]) -> Result<usize> {
    let auts = automorphisms(g)?;
    let actions: Vec<EdgeAction> = auts.iter().map(|p| edge_action(g, p)).collect();
    let mut reps = std::collections::BTreeSet::new();
    for &b in bitstrings {
        let rep = actions
            .iter()
            .map(|a| crate::graph::apply_edge_action(a, b))
            .min()
            .unwrap_or(b);
        reps.insert(rep);
    }
    Ok(reps.len())
}

/// Checks the gadget identities on a small base graph: adding one vertex per
/// edge raises the oriented eternal domination number and the oriented
/// induced-acyclicity number by exactly the edge count, while the multimove
/// variant may fall below that.
#[derive(Debug, Clone)]
pub struct GadgetReport {
    pub base_gamma_inf: usize,
    pub base_gamma_inf_m: usize,
    pub base_alpha: usize,
    pub oedn_of_gadget: usize,
    pub oalpha_of_gadget: usize,
    pub oednm_of_gadget: usize,
    pub oedn_identity: bool,
    pub oalpha_identity: bool,
    pub oednm_strict_drop: bool,
}

pub fn gadget_equalities(g: &SimpleGraph, opts: &SearchOptions) -> Result<GadgetReport> {
    let m = g.edge_count();
    let gadget = crate::graph::triangulation_gadget(g);
    let sym = g.symmetric_digraph();
    let base_gamma_inf = solver::gamma_inf(&sym).value;
    let base_gamma_inf_m = solver::gamma_inf_m(&sym).value;
    let base_alpha = invariants::alpha_graph(g)?.value;
    let oedn_of_gadget = oedn(&gadget, opts)?.value.unwrap();
    let oalpha_of_gadget = oalpha(&gadget, opts)?.value.unwrap();
    let oednm_of_gadget = oednm(&gadget, opts)?.value.unwrap();
    Ok(GadgetReport {
        base_gamma_inf,
        base_gamma_inf_m,
        base_alpha,
        oedn_of_gadget,
        oalpha_of_gadget,
        oednm_of_gadget,
        oedn_identity: oedn_of_gadget == base_gamma_inf + m,
        oalpha_identity: oalpha_of_gadget == base_alpha + m,
        oednm_strict_drop: oednm_of_gadget < base_gamma_inf_m + m,
    })
}
