//! Exact eternal and m-eternal domination on digraphs.
//!
//! Both parameters are computed as greatest fixed points over families of
//! guard configurations of a fixed size `k`: start from every dominating
//! `k`-subset and delete configurations with an undefendable attack until the
//! family is stable. The surviving family is exactly the set of winning
//! initial configurations with `k` guards, so the parameter is the smallest
//! `k` with a nonempty family. The upward scan starts from a proven lower
//! bound but tests every `k`, so no monotonicity assumption is load-bearing.

use std::collections::HashMap;

use crate::bits::{bit, contains, full_set, iter_set, subsets_of_size, VertSet};
use crate::certs::{MoveMode, StrategyCertificate};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::invariants;

/// A family of guard configurations of uniform size, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigFamily {
    pub k: usize,
    pub members: Vec<VertSet>,
}

impl ConfigFamily {
    pub fn new(k: usize, mut members: Vec<VertSet>) -> Self {
        members.sort_unstable();
        members.dedup();
        debug_assert!(members.iter().all(|s| s.count_ones() as usize == k));
        ConfigFamily { k, members }
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, s: VertSet) -> bool {
        self.members.binary_search(&s).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct GameResult {
    pub value: usize,
    pub winning_family: ConfigFamily,
    pub lower_bound_used: usize,
}

/// Whether all guards of `s` can relocate to `t` in one round: each guard
/// stays or crosses one arc, injectively. Decided by bipartite matching.
pub fn multimove_exists(d: &Digraph, s: VertSet, t: VertSet) -> Result<bool> {
    if s.count_ones() != t.count_ones() {
        return Err(Error::Parameter(format!(
            "multimove endpoints differ in size ({} vs {})",
            s.count_ones(),
            t.count_ones()
        )));
    }
    Ok(multimove_feasible(d, s, t))
}

pub(crate) fn multimove_feasible(d: &Digraph, s: VertSet, t: VertSet) -> bool {
    debug_assert_eq!(s.count_ones(), t.count_ones());
    if s == t {
        return true;
    }
    let guards: Vec<usize> = iter_set(s).collect();
    let mut targets: Vec<VertSet> = Vec::with_capacity(guards.len());
    let mut union: VertSet = 0;
    for &u in &guards {
        let m = (d.out_neighbors(u) | bit(u)) & t;
        if m == 0 {
            return false;
        }
        union |= m;
        targets.push(m);
    }
    if union != t {
        return false;
    }
    // Kuhn's augmenting paths; target vertices keyed by vertex id.
    let n = d.n();
    let mut matched_to: Vec<usize> = vec![usize::MAX; n];

    fn try_assign(
        g: usize,
        targets: &[VertSet],
        matched_to: &mut [usize],
        visited: &mut VertSet,
    ) -> bool {
        let mut opts = targets[g] & !*visited;
        while opts != 0 {
            let v = opts.trailing_zeros() as usize;
            opts &= opts - 1;
            *visited |= bit(v);
            if matched_to[v] == usize::MAX
                || try_assign(matched_to[v], targets, matched_to, visited)
            {
                matched_to[v] = g;
                return true;
            }
        }
        false
    }

    for g in 0..guards.len() {
        let mut visited: VertSet = 0;
        if !try_assign(g, &targets, &mut matched_to, &mut visited) {
            return false;
        }
    }
    true
}

fn dominating_subsets(d: &Digraph, k: usize) -> Vec<VertSet> {
    subsets_of_size(d.n(), k)
        .filter(|&s| d.dominates_all(s))
        .collect()
}

/// The greatest family of `k`-subsets closed under single-guard defenses:
/// every member defends every attack on an unoccupied vertex by moving one
/// guard along an arc, landing inside the family.
///
/// Deletion is driven by a worklist keyed by reverse dependencies: when a
/// configuration dies, only the (config, attack) pairs that counted it as a
/// defense are re-examined.
pub fn eternal_fixed_point(d: &Digraph, k: usize) -> ConfigFamily {
    let n = d.n();
    let full = full_set(n);
    let configs = dominating_subsets(d, k);
    if configs.is_empty() {
        return ConfigFamily::new(k, Vec::new());
    }
    let index: HashMap<VertSet, u32> = configs
        .iter()
        .enumerate()
        .map(|(i, &s)| (s, i as u32))
        .collect();

    // support[c] holds, per unoccupied vertex slot, how many live defenses
    // remain; rev[t] lists the (config, slot) pairs defended through t.
    let mut support: Vec<Vec<u32>> = Vec::with_capacity(configs.len());
    let mut rev: Vec<Vec<(u32, u8)>> = vec![Vec::new(); configs.len()];
    let mut alive = vec![true; configs.len()];
    let mut dead_queue: Vec<u32> = Vec::new();

    for (ci, &s) in configs.iter().enumerate() {
        let mut per_attack = Vec::new();
        let mut doomed = false;
        for (slot, r) in iter_set(full & !s).enumerate() {
            let mut count = 0u32;
            // guards that dominate r
            for v in iter_set(d.in_neighbors(r) & s) {
                let succ = s & !bit(v) | bit(r);
                if let Some(&ti) = index.get(&succ) {
                    count += 1;
                    rev[ti as usize].push((ci as u32, slot as u8));
                }
            }
            if count == 0 {
                doomed = true;
            }
            per_attack.push(count);
        }
        support.push(per_attack);
        if doomed {
            alive[ci] = false;
            dead_queue.push(ci as u32);
        }
    }

    while let Some(t) = dead_queue.pop() {
        // take ownership to appease the borrow checker; dead entries stay dead
        let users = std::mem::take(&mut rev[t as usize]);
        for (c, slot) in users {
            if !alive[c as usize] {
                continue;
            }
            let cnt = &mut support[c as usize][slot as usize];
            *cnt -= 1;
            if *cnt == 0 {
                alive[c as usize] = false;
                dead_queue.push(c);
            }
        }
    }

    ConfigFamily::new(
        k,
        configs
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&s, _)| s)
            .collect(),
    )
}

/// The greatest family of `k`-subsets closed under multimove defenses: every
/// member answers every attack with a full-family relocation onto a member
/// containing the attacked vertex.
///
/// Each (config, attack) pair keeps one witness defense; when the witness
/// dies, only that pair searches again.
pub fn meternal_fixed_point(d: &Digraph, k: usize) -> ConfigFamily {
    let n = d.n();
    let full = full_set(n);
    let configs = dominating_subsets(d, k);
    if configs.is_empty() {
        return ConfigFamily::new(k, Vec::new());
    }
    let m = configs.len();
    let mut by_vertex: Vec<Vec<u32>> = vec![Vec::new(); n];
    for (i, &s) in configs.iter().enumerate() {
        for v in iter_set(s) {
            by_vertex[v].push(i as u32);
        }
    }
    let mut alive = vec![true; m];
    let mut witness: Vec<Vec<u32>> = Vec::with_capacity(m);
    let mut rev: Vec<Vec<(u32, u8)>> = vec![Vec::new(); m];
    let mut dead_queue: Vec<u32> = Vec::new();
    const NONE: u32 = u32::MAX;

    let find_defense = |alive: &[bool], s: VertSet, r: usize| -> Option<u32> {
        by_vertex[r]
            .iter()
            .copied()
            .find(|&ti| alive[ti as usize] && multimove_feasible(d, s, configs[ti as usize]))
    };

    for (ci, &s) in configs.iter().enumerate() {
        let mut slots = Vec::new();
        let mut doomed = false;
        for r in iter_set(full & !s) {
            match find_defense(&alive, s, r) {
                Some(ti) => {
                    rev[ti as usize].push((ci as u32, slots.len() as u8));
                    slots.push(ti);
                }
                None => {
                    slots.push(NONE);
                    doomed = true;
                }
            }
        }
        witness.push(slots);
        if doomed {
            alive[ci] = false;
            dead_queue.push(ci as u32);
        }
    }

    while let Some(t) = dead_queue.pop() {
        let users = std::mem::take(&mut rev[t as usize]);
        for (c, slot) in users {
            let ci = c as usize;
            if !alive[ci] || witness[ci][slot as usize] != t {
                continue;
            }
            let s = configs[ci];
            let r = iter_set(full & !s).nth(slot as usize).unwrap();
            match find_defense(&alive, s, r) {
                Some(ti) => {
                    witness[ci][slot as usize] = ti;
                    rev[ti as usize].push((c, slot));
                }
                None => {
                    alive[ci] = false;
                    dead_queue.push(c);
                }
            }
        }
    }

    ConfigFamily::new(
        k,
        configs
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(&s, _)| s)
            .collect(),
    )
}

fn scan(
    d: &Digraph,
    lower: usize,
    cutoff: usize,
    fixed_point: impl Fn(&Digraph, usize) -> ConfigFamily,
) -> Option<GameResult> {
    let n = d.n();
    for k in lower..=n.min(cutoff.saturating_sub(1)) {
        let fam = fixed_point(d, k);
        if !fam.is_empty() {
            return Some(GameResult {
                value: k,
                winning_family: fam,
                lower_bound_used: lower,
            });
        }
    }
    None
}

/// Exact eternal domination number. Scans `k` upward from the induced-acyclic
/// order, which is a lower bound.
pub fn gamma_inf(d: &Digraph) -> GameResult {
    gamma_inf_below(d, d.n() + 1).expect("k = n always wins")
}

/// As [`gamma_inf`] but abandons the scan at `cutoff`: returns `None` when
/// the value is `>= cutoff`.
pub fn gamma_inf_below(d: &Digraph, cutoff: usize) -> Option<GameResult> {
    let lower = invariants::alpha_digraph_uncapped(d).value;
    scan(d, lower, cutoff, eternal_fixed_point)
}

/// Exact m-eternal domination number, scanning upward from the domination
/// number.
pub fn gamma_inf_m(d: &Digraph) -> GameResult {
    gamma_inf_m_below(d, d.n() + 1).expect("k = n always wins")
}

pub fn gamma_inf_m_below(d: &Digraph, cutoff: usize) -> Option<GameResult> {
    let lower = invariants::domination_number_uncapped(d).value;
    scan(d, lower, cutoff, meternal_fixed_point)
}

pub fn is_eds(d: &Digraph, s: VertSet) -> bool {
    eternal_fixed_point(d, s.count_ones() as usize).contains(s)
}

pub fn is_meds(d: &Digraph, s: VertSet) -> bool {
    meternal_fixed_point(d, s.count_ones() as usize).contains(s)
}

/// Materializes a fixed point as a deterministic response table: for every
/// (configuration, attack) the lexicographically smallest valid successor
/// (smallest as a bitmask integer). The family is re-verified; a missing
/// defense is an integrity error.
pub fn extract_strategy(
    d: &Digraph,
    family: &ConfigFamily,
    mode: MoveMode,
) -> Result<StrategyCertificate> {
    let full = full_set(d.n());
    let mut responses = std::collections::BTreeMap::new();
    for (ci, &s) in family.members.iter().enumerate() {
        for r in iter_set(full & !s) {
            let succ: Option<usize> = match mode {
                MoveMode::SingleMove => iter_set(d.in_neighbors(r) & s)
                    .map(|v| s & !bit(v) | bit(r))
                    .filter(|t| family.contains(*t))
                    .min()
                    .map(|t| family.members.binary_search(&t).unwrap()),
                MoveMode::Multimove => family
                    .members
                    .iter()
                    .position(|&t| contains(t, r) && multimove_feasible(d, s, t)),
            };
            match succ {
                Some(ti) => {
                    responses.insert((ci, r), ti);
                }
                None => {
                    return Err(Error::Integrity(format!(
                        "family is not closed: configuration {:?} has no defense against {r}",
                        crate::bits::set_to_vec(s)
                    )));
                }
            }
        }
    }
    Ok(StrategyCertificate {
        digraph: d.clone(),
        k: family.k,
        configs: family.members.clone(),
        responses,
        mode,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, orient, Family};

    fn directed_cycle(n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Digraph::new(n, &arcs).unwrap()
    }

    #[test]
    fn multimove_basics() {
        let c3 = directed_cycle(3);
        assert!(multimove_exists(&c3, 0b011, 0b011).unwrap()); // identity
        assert!(multimove_exists(&c3, 0b011, 0b110).unwrap()); // 0->1, 1->2
        let single = Digraph::new(2, &[(0, 1)]).unwrap();
        assert!(!multimove_exists(&single, 0b10, 0b01).unwrap());
        assert!(multimove_exists(&single, 0b01, 0b11).is_err());
    }

    #[test]
    fn eternal_fixed_point_on_directed_c3() {
        let fam = eternal_fixed_point(&directed_cycle(3), 2);
        assert_eq!(fam.members, vec![0b011, 0b101, 0b110]);
    }

    #[test]
    fn acyclic_fixed_points() {
        let p4 = generate(Family::Path, &[4]).unwrap();
        let d = orient(&p4, &[false, false, false]).unwrap();
        assert!(eternal_fixed_point(&d, 3).is_empty());
        assert_eq!(eternal_fixed_point(&d, 4).members, vec![0b1111]);
        assert!(meternal_fixed_point(&d, 3).is_empty());
        assert_eq!(gamma_inf(&d).value, 4);
        assert_eq!(gamma_inf_m(&d).value, 4);
    }

    #[test]
    fn meternal_fixed_point_on_directed_c4() {
        let fam = meternal_fixed_point(&directed_cycle(4), 2);
        assert_eq!(fam.members, vec![0b0101, 0b1010]);
        assert!(meternal_fixed_point(&directed_cycle(3), 1).is_empty());
    }

    #[test]
    fn empty_digraph_needs_no_guards() {
        let d = Digraph::new(0, &[]).unwrap();
        assert_eq!(gamma_inf(&d).value, 0);
        assert_eq!(gamma_inf_m(&d).value, 0);
    }

    #[test]
    fn whole_vertex_set_always_wins() {
        let d = Digraph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(eternal_fixed_point(&d, 3).members, vec![0b111]);
        assert!(is_eds(&d, 0b111));
        assert!(is_meds(&d, 0b111));
    }

    #[test]
    fn directed_cycle_values() {
        for n in 3..=6 {
            let d = directed_cycle(n);
            assert_eq!(gamma_inf(&d).value, n - 1, "gamma_inf C{n}");
            assert_eq!(gamma_inf_m(&d).value, n.div_ceil(2), "gamma_inf_m C{n}");
        }
    }

    #[test]
    fn extract_strategy_cycle() {
        let d = directed_cycle(3);
        let fam = eternal_fixed_point(&d, 2);
        let cert = extract_strategy(&d, &fam, MoveMode::SingleMove).unwrap();
        assert_eq!(cert.configs.len(), 3);
        assert_eq!(crate::certs::verify_strategy(&cert).unwrap(), 2);

        // full-set family: empty response table
        let fam_v = eternal_fixed_point(&d, 3);
        let cert_v = extract_strategy(&d, &fam_v, MoveMode::SingleMove).unwrap();
        assert!(cert_v.responses.is_empty());
    }

    #[test]
    fn extract_rejects_non_closed_family() {
        let d = directed_cycle(4);
        // {0,1} is dominating-free nonsense here: build a family by hand
        let fam = ConfigFamily::new(2, vec![0b0011]);
        assert!(extract_strategy(&d, &fam, MoveMode::SingleMove).is_err());
    }
}
