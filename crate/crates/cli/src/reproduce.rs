//! The reproduction suite: every tabulated value re-computed and compared,
//! one CSV row per instance.

use std::fmt::Write as _;
use std::time::Instant;

use eterdom::certs::{self, NeFamily};
use eterdom::forms::{self, PredictInstance};
use eterdom::graph::{generate, scc, Digraph, Family, SimpleGraph};
use eterdom::invariants;
use eterdom::orient::{self, SearchOptions};
use eterdom::solver;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Pinned seeds for the randomized rows; `--seed` shifts them all.
const SEED_CHAIN: u64 = 0x5EED_0001;
const SEED_ADDITIVITY: u64 = 0x5EED_0002;
const SEED_MONOTONE: u64 = 0x5EED_0003;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Info,
    Skipped,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Info => "INFO",
            Status::Skipped => "SKIPPED",
        }
    }
}

pub struct Row {
    pub instance: String,
    pub parameter: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub rule: &'static str,
    pub seconds: f64,
}

pub struct Suite {
    rows: Vec<Row>,
    opts: SearchOptions,
    seed_offset: u64,
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl Suite {
    pub fn new(opts: SearchOptions, seed_offset: u64) -> Self {
        Suite { rows: Vec::new(), opts, seed_offset }
    }

    fn rng(&self, base: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(base.wrapping_add(self.seed_offset))
    }

    fn push(
        &mut self,
        instance: impl Into<String>,
        parameter: &str,
        expected: impl Into<String>,
        rule: &'static str,
        run: impl FnOnce() -> (String, Status),
    ) {
        let start = Instant::now();
        let (computed, status) = run();
        let row = Row {
            instance: instance.into(),
            parameter: parameter.to_string(),
            expected: expected.into(),
            computed,
            status,
            rule,
            seconds: start.elapsed().as_secs_f64(),
        };
        println!(
            "{:7} {:28} {:12} expected={:14} computed={:14} [{}] {:.2}s",
            row.status.as_str(),
            row.instance,
            row.parameter,
            row.expected,
            row.computed,
            row.rule,
            row.seconds
        );
        self.rows.push(row);
    }

    fn check_exact(
        &mut self,
        instance: impl Into<String>,
        parameter: &str,
        expected: usize,
        rule: &'static str,
        compute: impl FnOnce() -> eterdom::error::Result<usize>,
    ) {
        self.push(instance, parameter, expected.to_string(), rule, || match compute() {
            Ok(v) => (
                v.to_string(),
                if v == expected { Status::Pass } else { Status::Fail },
            ),
            Err(e) => (format!("error: {e}"), Status::Fail),
        });
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("instance,parameter,expected,computed,status,rule,seconds\n");
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{:.3}",
                csv_field(&r.instance),
                csv_field(&r.parameter),
                csv_field(&r.expected),
                csv_field(&r.computed),
                r.status.as_str(),
                r.rule,
                r.seconds
            );
        }
        out
    }

    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }


    pub fn run_quick(&mut self) {
        self.cycles();
        self.gadget();
        self.grid33();
        self.complete_bipartite_small();
        self.ne_certificates();
        self.open_cells();
        self.two_guard_characterization(4);
        self.trivially_perfect_examples();
        self.chain_rows(40, 5);
        self.conjecture_probes();
    }

    pub fn run_full(&mut self) {
        self.run_quick();
        self.twin_pentagons();
        self.complete_bipartite_four();
        self.grid_oednm_window();
        self.grids_2xn();
        self.two_guard_characterization(5);
        self.trivially_perfect_sweep();
        self.chain_rows(200, 6);
        self.additivity_rows(100);
        self.monotonicity_rows(50);
    }

    fn cycles(&mut self) {
        let o = self.opts.clone();
        for n in 3..=7usize {
            let g = generate(Family::Cycle, &[n]).unwrap();
            self.check_exact(format!("C{n}"), "oedn", n - 1, "cycle", || oedn_of(&o, &g));
            self.check_exact(format!("C{n}"), "oednm", n.div_ceil(2), "cycle", || {
                oednm_of(&o, &g)
            });
        }
    }

    fn gadget(&mut self) {
        let o = self.opts.clone();
        let p3 = generate(Family::Path, &[3]).unwrap();
        let c = eterdom::graph::triangulation_gadget(&p3);
        let gi = solver::gamma_inf(&p3.symmetric_digraph()).value;
        let alpha = invariants::alpha_graph(&p3).unwrap().value;
        self.check_exact("C(P3)", "oedn", gi + 2, "gadget-identity", || oedn_of(&o, &c));
        self.check_exact("C(P3)", "oalpha", alpha + 2, "gadget-identity", || {
            Ok(orient::oalpha(&c, &o)?.value.expect("defined"))
        });
        self.check_exact("C(P3)", "oednm", 3, "gadget-strict", || oednm_of(&o, &c));
    }

    fn grid33(&mut self) {
        let o = self.opts.clone();
        let g = generate(Family::Grid, &[3, 3]).unwrap();
        self.check_exact("P3xP3", "oedn", 7, "grid-verified", || oedn_of(&o, &g));
    }

    fn complete_bipartite_small(&mut self) {
        let o = self.opts.clone();
        for a in 1..=3usize {
            for b in a..=3usize {
                let g = generate(Family::CompleteBipartite, &[a, b]).unwrap();
                self.check_exact(
                    format!("K{a},{b}"),
                    "oedn",
                    a.max(b) + 1,
                    "complete-bipartite",
                    || oedn_of(&o, &g),
                );
            }
        }
        for (a, b, want) in [(2, 2, 2), (2, 3, 3), (3, 3, 3)] {
            let g = generate(Family::CompleteBipartite, &[a, b]).unwrap();
            self.check_exact(format!("K{a},{b}"), "oednm", want, "complete-bipartite", || {
                oednm_of(&o, &g)
            });
        }
    }

    fn ne_certificates(&mut self) {
        self.push("K3[]K3", "oednm", "3", "rook", || {
            let coloring = certs::ne_build(&NeFamily::Product(
                Box::new(NeFamily::Complete { n: 3 }),
                Box::new(NeFamily::Complete { n: 3 }),
            ))
            .unwrap();
            let (_, cert) = certs::orientation_from_ne(&coloring).unwrap();
            let certified = certs::verify_strategy(&cert).unwrap();
            let rook = generate(Family::Rook, &[3]).unwrap();
            let gamma = invariants::domination_number(&rook.symmetric_digraph())
                .unwrap()
                .value;
            let ok = certified == 3 && gamma == 3;
            (
                format!("cert<={certified}, gamma={gamma}"),
                if ok { Status::Pass } else { Status::Fail },
            )
        });
        self.push("C6[]C6", "oednm", "<=12", "toroidal-shift", || {
            match certs::toroidal_padding_orientation(6, 6)
                .and_then(|(_, c)| certs::verify_strategy(&c))
            {
                Ok(12) => ("cert<=12".into(), Status::Pass),
                Ok(k) => (format!("cert<={k}"), Status::Fail),
                Err(e) => (format!("error: {e}"), Status::Fail),
            }
        });
        self.push("C5xC5 king", "oednm", "<=5", "king-shift", || {
            match certs::ne_build(&NeFamily::King { n: 5, m: 5 })
                .and_then(|c| certs::orientation_from_ne(&c))
                .and_then(|(_, c)| certs::verify_strategy(&c))
            {
                Ok(5) => ("cert<=5".into(), Status::Pass),
                Ok(k) => (format!("cert<={k}"), Status::Fail),
                Err(e) => (format!("error: {e}"), Status::Fail),
            }
        });
        self.push("C4[]C4[]C4", "oednm", "<=16", "hypergrid-shift", || {
            match certs::ne_build(&NeFamily::Hypergrid { dims: vec![4, 4, 4] })
                .and_then(|c| certs::orientation_from_ne(&c))
                .and_then(|(_, c)| certs::verify_strategy(&c))
            {
                Ok(16) => ("cert<=16".into(), Status::Pass),
                Ok(k) => (format!("cert<={k}"), Status::Fail),
                Err(e) => (format!("error: {e}"), Status::Fail),
            }
        });
    }

    fn open_cells(&mut self) {
        self.push("P5xP5", "oedn", "[19, 20]", "grid-open", || {
            let p = forms::predict(&PredictInstance::GridOedn { rows: 5, cols: 5 }).unwrap();
            (
                format!("[{}, {}]", p.lower, p.upper),
                if (p.lower, p.upper) == (19, 20) { Status::Info } else { Status::Fail },
            )
        });
    }

    fn two_guard_characterization(&mut self, n: usize) {
        let opts = self.opts.clone();
        self.push(
            format!("all graphs n={n}"),
            "oednm=2",
            "characterization agrees",
            "two-guard",
            || {
                let mut mismatches = 0usize;
                let mut count = 0usize;
                for g in nonisomorphic_graphs(n) {
                    let predicted = forms::oednm2_characterization(&g).unwrap();
                    let solved = orient::oednm(&g, &opts).unwrap().value.unwrap();
                    if predicted != (solved == 2) {
                        mismatches += 1;
                    }
                    count += 1;
                }
                (
                    format!("{count} graphs, {mismatches} mismatches"),
                    if mismatches == 0 { Status::Pass } else { Status::Fail },
                )
            },
        );
    }

    fn trivially_perfect_examples(&mut self) {
        let cases: Vec<(&str, SimpleGraph, usize)> = vec![
            (
                "two glued triangles",
                SimpleGraph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap(),
                3,
            ),
            ("K4", generate(Family::Complete, &[4]).unwrap(), 2),
            ("K1,3", generate(Family::CompleteBipartite, &[1, 3]).unwrap(), 4),
        ];
        for (name, g, want) in cases {
            self.check_exact(name, "oednm", want, "trivially-perfect", || {
                let formula = forms::trivially_perfect_oednm(&g)?;
                let cert = certs::build_trivially_perfect_cert(&g)?;
                let certified = certs::verify_strategy(&cert)?;
                if formula != certified {
                    return Err(eterdom::Error::Integrity(format!(
                        "formula {formula} != certificate {certified}"
                    )));
                }
                Ok(formula)
            });
        }
    }

    fn chain_rows(&mut self, trials: usize, max_n: usize) {
        let mut r = self.rng(SEED_CHAIN);
        self.push(
            format!("{trials} random digraphs n<={max_n}"),
            "chain",
            "all inequalities hold",
            "chain",
            || {
                let mut violations = 0usize;
                for trial in 0..trials {
                    let n = 2 + trial % (max_n - 1);
                    let d = random_digraph(&mut r, n, 0.45);
                    let gi = solver::gamma_inf(&d).value;
                    let gim = solver::gamma_inf_m(&d).value;
                    if !invariants::check_inequality_chain(&d, gi, gim)
                        .unwrap()
                        .all_hold()
                    {
                        violations += 1;
                    }
                }
                (
                    format!("{violations} violations"),
                    if violations == 0 { Status::Pass } else { Status::Fail },
                )
            },
        );
    }

    fn additivity_rows(&mut self, trials: usize) {
        let mut r = self.rng(SEED_ADDITIVITY);
        self.push(
            format!("{trials} two-component digraphs n<=7"),
            "component-sum",
            "gamma_inf and gamma_inf_m add up",
            "component-additivity",
            || {
                let mut violations = 0usize;
                for trial in 0..trials {
                    let n1 = 2 + trial % 3;
                    let n2 = 2 + (trial / 3) % 3;
                    let d1 = random_strongly_connected(&mut r, n1, 0.5);
                    let d2 = random_strongly_connected(&mut r, n2, 0.5);
                    let mut arcs = d1.arcs();
                    arcs.extend(d2.arcs().into_iter().map(|(u, v)| (n1 + u, n1 + v)));
                    arcs.push((0, n1));
                    let d = Digraph::new(n1 + n2, &arcs).unwrap();
                    let ok = scc(&d).len() == 2
                        && solver::gamma_inf(&d).value
                            == solver::gamma_inf(&d1).value + solver::gamma_inf(&d2).value
                        && solver::gamma_inf_m(&d).value
                            == solver::gamma_inf_m(&d1).value + solver::gamma_inf_m(&d2).value;
                    if !ok {
                        violations += 1;
                    }
                }
                (
                    format!("{violations} violations"),
                    if violations == 0 { Status::Pass } else { Status::Fail },
                )
            },
        );
    }

    fn monotonicity_rows(&mut self, trials: usize) {
        let mut r = self.rng(SEED_MONOTONE);
        self.push(
            format!("{trials} random digraphs n<=5"),
            "monotonicity",
            "induced and arc-deletion laws hold",
            "monotonicity",
            || {
                let mut violations = 0usize;
                for _ in 0..trials {
                    let d = random_digraph(&mut r, 5, 0.45);
                    let gi = solver::gamma_inf(&d).value;
                    let mask = r.gen_range(1..(1u64 << 5));
                    let (sub, _) = d.induced(mask);
                    if solver::gamma_inf(&sub).value > gi {
                        violations += 1;
                    }
                    if let Some(&(u, v)) = d.arcs().first() {
                        let smaller = d.without_arc(u, v);
                        if solver::gamma_inf(&smaller).value < gi
                            || solver::gamma_inf_m(&smaller).value < solver::gamma_inf_m(&d).value
                        {
                            violations += 1;
                        }
                    }
                }
                (
                    format!("{violations} violations"),
                    if violations == 0 { Status::Pass } else { Status::Fail },
                )
            },
        );
    }

    fn conjecture_probes(&mut self) {
        // clique cover vs oriented induced-acyclicity: reported, not gated
        let probes: Vec<(&str, SimpleGraph)> = vec![
            ("C5", generate(Family::Cycle, &[5]).unwrap()),
            ("K4", generate(Family::Complete, &[4]).unwrap()),
            ("K2,3", generate(Family::CompleteBipartite, &[2, 3]).unwrap()),
            ("P4", generate(Family::Path, &[4]).unwrap()),
        ];
        for (name, g) in probes {
            let opts = self.opts.clone();
            self.push(name, "theta<oalpha", "probe", "conjecture-clique-cover", || {
                let theta = invariants::clique_cover_number(&g).unwrap();
                let oa = orient::oalpha(&g, &opts).unwrap().value.unwrap();
                (
                    format!("theta={theta}, oalpha={oa}, {}", if theta < oa { "holds" } else { "counterexample" }),
                    Status::Info,
                )
            });
        }
        // even cycles carry a (2,2)-coloring; the class-shift value is exact
        for n in [4usize, 6] {
            let opts = self.opts.clone();
            self.push(format!("C{n}"), "ne-exactness", "probe", "conjecture-ne", || {
                let g = generate(Family::Cycle, &[n]).unwrap();
                let solved = orient::oednm(&g, &opts).unwrap().value.unwrap();
                (
                    format!("oednm={solved}, n/k={}, {}", n / 2, if solved == n / 2 { "matches" } else { "differs" }),
                    Status::Info,
                )
            });
        }
    }

    fn twin_pentagons(&mut self) {
        let o = self.opts.clone();
        let g = generate(Family::TwinPentagons, &[]).unwrap();
        self.check_exact("twin pentagons", "oednm", 6, "counterexample", || {
            oednm_of(&o, &g)
        });
    }

    fn complete_bipartite_four(&mut self) {
        let o = self.opts.clone();
        for (a, b) in [(2, 4), (3, 4)] {
            let g = generate(Family::CompleteBipartite, &[a, b]).unwrap();
            self.check_exact(format!("K{a},{b}"), "oednm", 4, "complete-bipartite", || {
                oednm_of(&o, &g)
            });
        }
    }

    fn grid_oednm_window(&mut self) {
        let o = self.opts.clone();
        for (rows, cols) in [(2usize, 2usize), (2, 3), (2, 4), (3, 3), (3, 4)] {
            let g = generate(Family::Grid, &[rows, cols]).unwrap();
            self.check_exact(
                format!("P{rows}xP{cols}"),
                "oednm",
                (rows * cols).div_ceil(2),
                "grid-half",
                || oednm_of(&o, &g),
            );
        }
        for (rows, cols) in [(2usize, 5usize), (3, 5), (4, 4), (4, 5), (5, 5)] {
            self.push(
                format!("P{rows}xP{cols}"),
                "oednm",
                format!("{}", (rows * cols).div_ceil(2)),
                "grid-half",
                || ("beyond exact-search caps".into(), Status::Skipped),
            );
        }
    }

    fn grids_2xn(&mut self) {
        let o = self.opts.clone();
        for n in 2..=5usize {
            let g = generate(Family::Grid, &[2, n]).unwrap();
            self.check_exact(format!("P2xP{n}"), "oedn", (3 * n).div_ceil(2), "grid-tiling", || {
                oedn_of(&o, &g)
            });
        }
        // the wider exact-width formulas, confirmed by exhaustive search
        let g34 = generate(Family::Grid, &[3, 4]).unwrap();
        self.check_exact("P3xP4", "oedn", (7 * 4usize).div_ceil(3), "grid-tiling", || {
            oedn_of(&o, &g34)
        });
        let g44 = generate(Family::Grid, &[4, 4]).unwrap();
        self.check_exact("P4xP4", "oedn", 2 * (3 * 4usize).div_ceil(2), "grid-tiling", || {
            oedn_of(&o, &g44)
        });
    }

    fn trivially_perfect_sweep(&mut self) {
        let opts = self.opts.clone();
        self.push(
            "connected TP graphs n<=7",
            "oednm",
            "formula agrees with search",
            "trivially-perfect",
            || {
                let mut mismatches = 0usize;
                let mut count = 0usize;
                for n in 2..=7usize {
                    for g in connected_tp_graphs(n) {
                        let formula = forms::trivially_perfect_oednm(&g).unwrap();
                        let solved = orient::oednm(&g, &opts).unwrap().value.unwrap();
                        if formula != solved {
                            mismatches += 1;
                        }
                        count += 1;
                    }
                }
                (
                    format!("{count} graphs, {mismatches} mismatches"),
                    if mismatches == 0 { Status::Pass } else { Status::Fail },
                )
            },
        );
    }
}

fn oedn_of(opts: &SearchOptions, g: &SimpleGraph) -> eterdom::error::Result<usize> {
    Ok(orient::oedn(g, opts)?.value.expect("defined"))
}

fn oednm_of(opts: &SearchOptions, g: &SimpleGraph) -> eterdom::error::Result<usize> {
    Ok(orient::oednm(g, opts)?.value.expect("defined"))
}

fn random_digraph(r: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
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

fn random_strongly_connected(r: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
    loop {
        let d = random_digraph(r, n, p);
        if eterdom::graph::is_strongly_connected(&d) {
            return d;
        }
    }
}

/// Canonical form by minimum adjacency code over all permutations.
fn canonical_code(g: &SimpleGraph) -> u64 {
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

fn nonisomorphic_graphs(n: usize) -> Vec<SimpleGraph> {
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

fn connected_tp_graphs(n: usize) -> Vec<SimpleGraph> {
    fn forests(
        s: usize,
        max_part: usize,
        memo: &mut Vec<Option<Vec<SimpleGraph>>>,
    ) -> Vec<SimpleGraph> {
        if s == 0 {
            return vec![SimpleGraph::new(0, &[]).unwrap()];
        }
        let mut out = Vec::new();
        for part in (1..=max_part.min(s)).rev() {
            for comp in connected(part, memo) {
                for rest in forests(s - part, part, memo) {
                    let mut edges: Vec<(usize, usize)> = comp.edges().to_vec();
                    for &(u, v) in rest.edges() {
                        edges.push((part + u, part + v));
                    }
                    out.push(SimpleGraph::new(part + rest.n(), &edges).unwrap());
                }
            }
        }
        out
    }
    fn connected(n: usize, memo: &mut Vec<Option<Vec<SimpleGraph>>>) -> Vec<SimpleGraph> {
        if let Some(cached) = &memo[n] {
            return cached.clone();
        }
        let result = if n == 1 {
            vec![SimpleGraph::new(1, &[]).unwrap()]
        } else {
            let mut seen = std::collections::BTreeSet::new();
            let mut out = Vec::new();
            for forest in forests(n - 1, n - 1, memo) {
                let mut edges: Vec<(usize, usize)> =
                    forest.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
                for v in 1..n {
                    edges.push((0, v));
                }
                let g = SimpleGraph::new(n, &edges).unwrap();
                if seen.insert(canonical_code(&g)) {
                    out.push(g);
                }
            }
            out
        };
        memo[n] = Some(result.clone());
        result
    }
    let mut memo = vec![None; n + 1];
    connected(n, &mut memo)
}
