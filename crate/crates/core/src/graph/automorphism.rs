use crate::error::{Error, Result};

use super::SimpleGraph;

pub const AUTOMORPHISM_VERTEX_CAP: usize = 12;
const GROUP_SIZE_CAP: usize = 1 << 20;

/// The full automorphism group of `g` as explicit vertex permutations,
/// identity first. Brute-force backtracking with degree pruning; capped at
/// [`AUTOMORPHISM_VERTEX_CAP`] vertices so callers can fall back to working
/// without symmetry reduction.
pub fn automorphisms(g: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if n > AUTOMORPHISM_VERTEX_CAP {
        return Err(Error::Capability(format!(
            "automorphism computation capped at n <= {AUTOMORPHISM_VERTEX_CAP}, got {n}"
        )));
    }
    let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        g: &SimpleGraph,
        deg: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let n = g.n();
        if depth == n {
            out.push(perm.clone());
            if out.len() > GROUP_SIZE_CAP {
                return Err(Error::Capability(format!(
                    "automorphism group larger than {GROUP_SIZE_CAP}"
                )));
            }
            return Ok(());
        }
        'cand: for c in 0..n {
            if used[c] || deg[c] != deg[depth] {
                continue;
            }
            for prev in 0..depth {
                if g.adjacent(depth, prev) != g.adjacent(c, perm[prev]) {
                    continue 'cand;
                }
            }
            perm[depth] = c;
            used[c] = true;
            extend(g, deg, perm, used, depth + 1, out)?;
            used[c] = false;
            perm[depth] = usize::MAX;
        }
        Ok(())
    }

    extend(g, &deg, &mut perm, &mut used, 0, &mut out)?;
    debug_assert_eq!(out[0], (0..n).collect::<Vec<_>>());
    Ok(out)
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Vec<usize> {
    inner.iter().map(|&v| outer[v]).collect()
}

pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v] = i;
    }
    inv
}

/// How a vertex permutation acts on orientation bitstrings: edge `e` maps to
/// `action[e].0`, and the bit is negated when `action[e].1` (endpoint order
/// reverses under the permutation).
pub type EdgeAction = Vec<(usize, bool)>;

pub fn edge_action(g: &SimpleGraph, perm: &[usize]) -> EdgeAction {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            let idx = g
                .edge_index(a, b)
                .expect("automorphism must map edges to edges");
            (idx, a > b)
        })
        .collect()
}

pub fn apply_edge_action(action: &EdgeAction, bits: u64) -> u64 {
    let mut out = 0u64;
    for (e, &(img, flip)) in action.iter().enumerate() {
        let b = (bits >> e & 1 != 0) ^ flip;
        out |= (b as u64) << img;
    }
    out
}
