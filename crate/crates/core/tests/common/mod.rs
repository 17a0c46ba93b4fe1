//! Definition-faithful brute-force oracles, kept independent of the library
//! implementation paths they check: no domination pre-filtering, no
//! worklists, no matching algorithms, no pruning.

#![allow(dead_code)]

use eterdom::bits::{bit, full_set, iter_set, VertSet};
use eterdom::graph::{orient, Digraph, SimpleGraph};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn all_subsets_of_size(n: usize, k: usize) -> Vec<VertSet> {
    (0..1u64 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect()
}

/// Single-move defense exists: some guard adjacent to `r` moves there and
/// the result stays in `family`.
fn single_defense_exists(d: &Digraph, family: &[VertSet], s: VertSet, r: usize) -> bool {
    iter_set(s).any(|v| d.arc(v, r) && family.contains(&(s & !bit(v) | bit(r))))
}

/// Multimove by explicit bijection search: assign each guard of `s` a
/// distinct target in `t`, staying or crossing one arc.
pub fn naive_multimove(d: &Digraph, s: VertSet, t: VertSet) -> bool {
    fn assign(d: &Digraph, guards: &[usize], idx: usize, remaining: VertSet) -> bool {
        if idx == guards.len() {
            return remaining == 0;
        }
        let u = guards[idx];
        for w in iter_set(remaining) {
            if w == u || d.arc(u, w) {
                if assign(d, guards, idx + 1, remaining & !bit(w)) {
                    return true;
                }
            }
        }
        false
    }
    let guards: Vec<usize> = iter_set(s).collect();
    assign(d, &guards, 0, t)
}

fn multi_defense_exists(d: &Digraph, family: &[VertSet], s: VertSet, r: usize) -> bool {
    family
        .iter()
        .any(|&t| t & bit(r) != 0 && naive_multimove(d, s, t))
}

fn greatest_family(
    d: &Digraph,
    k: usize,
    defense: impl Fn(&Digraph, &[VertSet], VertSet, usize) -> bool,
) -> Vec<VertSet> {
    let full = full_set(d.n());
    let mut family = all_subsets_of_size(d.n(), k);
    loop {
        let survivors: Vec<VertSet> = family
            .iter()
            .copied()
            .filter(|&s| iter_set(full & !s).all(|r| defense(d, &family, s, r)))
            .collect();
        if survivors.len() == family.len() {
            return survivors;
        }
        family = survivors;
    }
}

pub fn naive_eternal_family(d: &Digraph, k: usize) -> Vec<VertSet> {
    greatest_family(d, k, single_defense_exists)
}

pub fn naive_meternal_family(d: &Digraph, k: usize) -> Vec<VertSet> {
    greatest_family(d, k, multi_defense_exists)
}

pub fn naive_gamma_inf(d: &Digraph) -> usize {
    (1..=d.n())
        .find(|&k| !naive_eternal_family(d, k).is_empty())
        .expect("n guards always win")
}

pub fn naive_gamma_inf_m(d: &Digraph) -> usize {
    (1..=d.n())
        .find(|&k| !naive_meternal_family(d, k).is_empty())
        .expect("n guards always win")
}

pub fn naive_alpha_digraph(d: &Digraph) -> usize {
    (0..1u64 << d.n())
        .filter(|&s| d.is_acyclic_induced(s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn naive_domination(d: &Digraph) -> usize {
    (0..1u64 << d.n())
        .filter(|&s| d.dominates_all(s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

fn strongly_connected_set(d: &Digraph, s: VertSet) -> bool {
    // reachability closure inside s, from every vertex
    let verts: Vec<usize> = iter_set(s).collect();
    verts.iter().all(|&v| {
        let mut seen = bit(v);
        loop {
            let mut grew = false;
            for u in iter_set(seen) {
                let add = d.out_neighbors(u) & s & !seen;
                if add != 0 {
                    seen |= add;
                    grew = true;
                }
            }
            if !grew {
                break;
            }
        }
        seen == s
    })
}

pub fn naive_gamma_dd(d: &Digraph) -> Option<usize> {
    let full = full_set(d.n());
    (1u64..1 << d.n())
        .filter(|&s| {
            strongly_connected_set(d, s)
                && iter_set(full & !s)
                    .all(|v| d.out_neighbors(v) & s != 0 && d.in_neighbors(v) & s != 0)
        })
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn naive_gamma_c(d: &Digraph) -> Option<usize> {
    (1u64..1 << d.n())
        .filter(|&s| strongly_connected_set(d, s) && d.dominates_all(s))
        .map(|s| s.count_ones() as usize)
        .min()
}

pub fn naive_scdd_prime(d: &Digraph) -> Option<usize> {
    let full = full_set(d.n());
    let mut best: Option<usize> = None;
    for s in 1u64..=full {
        if s & !full != 0 || !strongly_connected_set(d, s) {
            continue;
        }
        let mut k = 0usize;
        let mut ok = true;
        for v in iter_set(full & !s) {
            if d.in_neighbors(v) & s == 0 {
                ok = false;
                break;
            }
            match d.distance_to_set(v, s) {
                Some(dist) => k = k.max(dist),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            let val = k + s.count_ones() as usize - 1;
            best = Some(best.map_or(val, |b| b.min(val)));
        }
    }
    best
}

pub fn all_orientations(g: &SimpleGraph) -> Vec<Digraph> {
    let m = g.edge_count();
    (0..1u64 << m)
        .map(|bits| {
            let flags: Vec<bool> = (0..m).map(|i| bits >> i & 1 != 0).collect();
            orient(g, &flags).unwrap()
        })
        .collect()
}

pub fn naive_oedn(g: &SimpleGraph) -> usize {
    all_orientations(g).iter().map(naive_gamma_inf).min().unwrap()
}

pub fn naive_oednm(g: &SimpleGraph) -> usize {
    all_orientations(g).iter().map(naive_gamma_inf_m).min().unwrap()
}

pub fn naive_oalpha(g: &SimpleGraph) -> usize {
    all_orientations(g).iter().map(naive_alpha_digraph).min().unwrap()
}

pub fn naive_oscdd(g: &SimpleGraph) -> Option<usize> {
    all_orientations(g).iter().filter_map(naive_gamma_dd).min()
}

/// Uniform random digraph with the given arc probability.
pub fn random_digraph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && r.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, &arcs).unwrap()
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if r.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, &edges).unwrap()
}

/// Random strongly connected digraph, by rejection.
pub fn random_strongly_connected(r: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    loop {
        let d = random_digraph(r, n, p);
        if eterdom::graph::is_strongly_connected(&d) {
            return d;
        }
    }
}

/// Random connected bridgeless graph, by rejection.
pub fn random_bridgeless(r: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    loop {
        let g = random_graph(r, n, p);
        if g.is_connected() && eterdom::graph::bridges(&g).is_empty() {
            return g;
        }
    }
}

/// Canonical form of a small graph: the lexicographically least adjacency
/// encoding over all vertex permutations.
pub fn canonical_code(g: &SimpleGraph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        let mut next_bit = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if g.adjacent(perm[u], perm[v]) {
                    code |= 1 << next_bit;
                }
                next_bit += 1;
            }
        }
        best = best.min(code);
        // next permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best
}

/// All non-isomorphic graphs on `n` vertices, one representative each.
pub fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for code in 0..1u64 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| code >> i & 1 != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = SimpleGraph::new(n, &edges).unwrap();
        if seen.insert(canonical_code(&g)) {
            out.push(g);
        }
    }
    out
}
