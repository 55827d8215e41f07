//! Seeded generators and the end-to-end reduction suite.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cliquegraph::{cross_color_pairs, write_graph, ColoredGraph, VertexSelection};
use crate::error::{Error, Result};
use crate::exec::map_tasks;
use crate::reduction::{
    cost_decomposition_holds, lemma1_oracle, lemma2_oracle, reduce_with, theorem_check, CheckConfig,
};
use crate::stringcore::{Alphabet, PatternInstance, Sequence, Symbol, WeightedString};

/// Selections are enumerated exhaustively up to this many, sampled above.
pub const EXHAUSTIVE_SELECTIONS: u128 = 256;
const SAMPLED_SELECTIONS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenConfig {
    pub seed: u64,
    pub k: usize,
    pub n: usize,
    pub p: f64,
    pub count: usize,
}

impl GenConfig {
    pub fn new(seed: u64, k: usize, n: usize, p: f64) -> Self {
        GenConfig { seed, k, n, p, count: 1 }
    }
}

fn check_config(cfg: &GenConfig) -> Result<()> {
    if !(0.0..=1.0).contains(&cfg.p) {
        return Err(Error::InvalidProbability(cfg.p));
    }
    if cfg.k == 0 || cfg.n == 0 {
        return Err(Error::InvalidInstance("k and n must be >= 1".into()));
    }
    Ok(())
}

fn draw_graph(rng: &mut ChaCha8Rng, k: usize, n: usize, p: f64) -> Result<ColoredGraph> {
    let edges: Vec<_> = cross_color_pairs(k, n)
        .into_iter()
        .filter(|_| rng.gen_bool(p))
        .collect();
    ColoredGraph::with_default_names(k, n, &edges)
}

/// One graph: every cross-color pair is kept independently with probability `p`.
pub fn gen_colored_graph(cfg: &GenConfig) -> Result<ColoredGraph> {
    check_config(cfg)?;
    draw_graph(&mut ChaCha8Rng::seed_from_u64(cfg.seed), cfg.k, cfg.n, cfg.p)
}

/// `cfg.count` graphs drawn from one stream seeded by `cfg.seed`.
pub fn gen_colored_graphs(cfg: &GenConfig) -> Result<Vec<ColoredGraph>> {
    check_config(cfg)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|_| draw_graph(&mut rng, cfg.k, cfg.n, cfg.p))
        .collect()
}

/// Small random instance: at most 4 symbols, 4 strings of length at most 6,
/// weights at most 5, pattern length at most 3.
pub fn gen_random_instance(seed: u64) -> PatternInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tokens = ["a", "b", "c", "d"];
    loop {
        let sigma = rng.gen_range(1..=tokens.len());
        let len = rng.gen_range(1..=3);
        let count = rng.gen_range(1..=4);
        let raw: Vec<(Vec<u32>, u64)> = (0..count)
            .map(|_| {
                let l = rng.gen_range(1..=6);
                let s = (0..l).map(|_| rng.gen_range(0..sigma as u32)).collect();
                (s, rng.gen_range(1..=5))
            })
            .collect();
        if raw.iter().any(|(s, _)| s.len() < len) {
            continue;
        }
        let alphabet = Alphabet::from_tokens(tokens[..sigma].iter().copied()).expect("distinct tokens");
        let strings = raw
            .into_iter()
            .map(|(s, w)| {
                let seq = Sequence::new(s.into_iter().map(Symbol).collect());
                WeightedString::new(seq, w).expect("weight >= 1")
            })
            .collect();
        return PatternInstance::new(alphabet, strings, len, None).expect("lengths checked");
    }
}

/// `count` instances with seeds derived from `seed`.
pub fn gen_random_instances(seed: u64, count: usize) -> Vec<PatternInstance> {
    (0..count as u64)
        .map(|i| gen_random_instance(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i)))
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteCase {
    pub id: String,
    pub seed: Option<u64>,
    pub graph: ColoredGraph,
}

/// Every graph on `k` colors of `n` vertices that has at least one edge.
pub fn exhaustive_family(k: usize, n: usize) -> Result<Vec<SuiteCase>> {
    let pairs = cross_color_pairs(k, n);
    if pairs.len() > 20 {
        return Err(Error::StateBoundExceeded {
            needed: 1u128 << pairs.len(),
            bound: 1 << 20,
        });
    }
    (1u64..1 << pairs.len())
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Ok(SuiteCase {
                id: format!("exh-k{k}n{n}-{mask:06}"),
                seed: None,
                graph: ColoredGraph::with_default_names(k, n, &edges)?,
            })
        })
        .collect()
}

/// Random graphs with k ∈ {2, 3}, n ∈ {1, 2, 3}, p cycling through
/// {0.2, 0.5, 0.8}. Edgeless draws are redrawn.
pub fn random_family(seed: u64, count: usize) -> Result<Vec<SuiteCase>> {
    const PS: [f64; 3] = [0.2, 0.5, 0.8];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let p = PS[i % PS.len()];
        loop {
            let k = *[2usize, 3].choose(&mut rng).expect("non-empty");
            let n = rng.gen_range(1..=3);
            let case_seed: u64 = rng.gen();
            let g = gen_colored_graph(&GenConfig::new(case_seed, k, n, p))?;
            if g.edge_count() > 0 {
                out.push(SuiteCase {
                    id: format!("rand-{seed}-{i:04}"),
                    seed: Some(case_seed),
                    graph: g,
                });
                break;
            }
        }
    }
    Ok(out)
}

/// Cases drawn from a fixed-shape [`GenConfig`]; edgeless draws are skipped.
pub fn config_family(cfg: &GenConfig) -> Result<Vec<SuiteCase>> {
    Ok(gen_colored_graphs(cfg)?
        .into_iter()
        .enumerate()
        .filter(|(_, g)| g.edge_count() > 0 || g.k() == 1)
        .map(|(i, graph)| SuiteCase {
            id: format!("gen-{}-{i:04}", cfg.seed),
            seed: Some(cfg.seed),
            graph,
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub id: String,
    pub seed: Option<u64>,
    pub failures: Vec<String>,
    /// Source graph in graph-file format, for replay.
    pub graph_text: String,
}

impl CaseResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    /// Sorted by case id.
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> usize {
        self.cases.iter().filter(|c| c.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.cases.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    /// `case <id> pass|fail` lines, failure details as `#` comments, then `summary <pass> <fail>`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.cases {
            writeln!(s, "case {} {}", c.id, if c.passed() { "pass" } else { "fail" }).unwrap();
            if c.passed() {
                continue;
            }
            for f in &c.failures {
                writeln!(s, "# {f}").unwrap();
            }
            if let Some(seed) = c.seed {
                writeln!(s, "# seed {seed}").unwrap();
            }
            for line in c.graph_text.lines() {
                writeln!(s, "#   {line}").unwrap();
            }
        }
        writeln!(s, "summary {} {}", self.passed(), self.failed()).unwrap();
        s
    }
}

fn case_selections(g: &ColoredGraph, seed: u64) -> Vec<VertexSelection> {
    if g.selection_count() <= EXHAUSTIVE_SELECTIONS {
        return g.selections().collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..SAMPLED_SELECTIONS)
        .map(|_| VertexSelection((0..g.k()).map(|_| rng.gen_range(0..g.n())).collect()))
        .collect()
}

/// All checks for one graph: theorem (equivalence, cost formula, threshold,
/// well-formed optima), vertex-string optima, gadget distances, and the
/// per-selection cost decomposition.
pub fn run_case(case: &SuiteCase, cfg: &CheckConfig) -> CaseResult {
    let g = &case.graph;
    let mut failures = Vec::new();
    match theorem_check(g, cfg) {
        Ok(report) => failures.extend(report.failures()),
        Err(e) => failures.push(format!("theorem check: {e}")),
    }
    if let Err(e) = lemma1_oracle(g, cfg) {
        failures.push(e.to_string());
    }
    match reduce_with(g, cfg.mutation) {
        Ok(out) => {
            for sel in case_selections(g, case.seed.unwrap_or(0)) {
                if let Err(e) = lemma2_oracle(&out, &sel) {
                    failures.push(format!("selection {:?}: {e}", sel.ranks()));
                    break;
                }
                match cost_decomposition_holds(g, &out, &sel) {
                    Ok(true) => {}
                    Ok(false) => {
                        failures.push(format!(
                            "selection {:?}: cost differs from N(n-1)k+mk-|E(K)|",
                            sel.ranks()
                        ));
                        break;
                    }
                    Err(e) => {
                        failures.push(e.to_string());
                        break;
                    }
                }
            }
        }
        Err(e) => failures.push(format!("reduce: {e}")),
    }
    CaseResult {
        id: case.id.clone(),
        seed: case.seed,
        failures,
        graph_text: write_graph(g),
    }
}

/// Runs every case (in parallel when `cfg.exec` allows) and sorts by id.
pub fn run_suite(cases: Vec<SuiteCase>, cfg: &CheckConfig) -> SuiteReport {
    let mut results = map_tasks(cfg.exec, cases, |c| run_case(&c, cfg));
    results.sort_by(|a, b| a.id.cmp(&b.id));
    SuiteReport { cases: results }
}

/// Generates graphs from `gen` and runs the full suite on them.
pub fn run_roundtrip_suite(gen: &GenConfig, cfg: &CheckConfig) -> Result<SuiteReport> {
    Ok(run_suite(config_family(gen)?, cfg))
}
