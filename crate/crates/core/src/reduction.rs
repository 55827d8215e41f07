//! Multi-Colored Clique → Consensus Patterns.
//!
//! For a graph with `k` colors of `n` vertices and `m` edges the instance has
//! pattern length `k + 1` and contains
//!
//! * `n` vertex strings `$ v(1,i) … v(k,i)`, each with multiplicity
//!   `N = m(k + 2) + 1`;
//! * `m` edge gadgets of length `k + 2`: `$ ∘` followed by `∘` everywhere
//!   except the endpoint of color `h` (1-based), which sits at 0-based slot
//!   `h + 1`.
//!
//! A clique exists iff the optimum is at most
//! `N(n − 1)k + mk − k(k − 1)/2`. Any well-formed pattern picking the vertex
//! set `K` costs exactly `N(n − 1)k + mk − |E(K)|`.
//!
//! `∘` is spelled `o` in files.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::cliquegraph::{
    count_edges_within, find_multicolored_clique, max_edges_within, ColoredGraph, Edge, VertexId,
    VertexSelection,
};
use crate::error::{parse_err, Error, Result};
use crate::exec::Exec;
use crate::solvers::{solve_by_pattern_enum, SolverChoice, SolverKind, DEFAULT_STATE_BOUND};
use crate::stringcore::{
    best_offset, parse_instance, total_cost, write_instance, Alphabet, PatternInstance,
    Sequence, Symbol, WeightedString,
};

pub const DOLLAR: &str = "$";
pub const CIRC: &str = "o";

const DOLLAR_ID: Symbol = Symbol(0);
const CIRC_ID: Symbol = Symbol(1);

/// Deliberate defects for checking that the verification suite has teeth.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Mutation {
    #[default]
    None,
    /// `N := m(k + 2)`.
    MultiplicityMinusOne,
    /// Threshold one too large.
    ThresholdPlusOne,
    /// Gadget endpoints one slot to the left (aligned with vertex strings).
    GadgetSlotShift,
}

impl Mutation {
    pub const DEFECTS: [Mutation; 3] = [
        Mutation::MultiplicityMinusOne,
        Mutation::ThresholdPlusOne,
        Mutation::GadgetSlotShift,
    ];
}

/// `N = m(k + 2) + 1`.
pub fn multiplicity(k: usize, m: usize) -> u64 {
    (m * (k + 2) + 1) as u64
}

/// `N(n − 1)k + mk − k(k − 1)/2`.
pub fn threshold(k: usize, n: usize, m: usize) -> u64 {
    let (k, n, m) = (k as u64, n as u64, m as u64);
    multiplicity(k as usize, m as usize) * (n - 1) * k + m * k - k * (k - 1) / 2
}

/// `N(n − 1)k + mk − |E(K)|`: cost of any well-formed pattern selecting `K`.
pub fn selection_cost(k: usize, n: usize, m: usize, edges_within: usize) -> u64 {
    let (k64, n64, m64) = (k as u64, n as u64, m as u64);
    multiplicity(k, m) * (n64 - 1) * k64 + m64 * k64 - edges_within as u64
}

fn vertex_symbol(n: usize, v: VertexId) -> Symbol {
    Symbol((2 + v.color * n + v.rank) as u32)
}

/// `$`, `o`, then every vertex name in (color, rank) order.
pub fn reduction_alphabet(g: &ColoredGraph) -> Result<Alphabet> {
    let mut a = Alphabet::from_tokens([DOLLAR, CIRC])?;
    for v in g.vertices() {
        let name = g.name(v);
        if name == DOLLAR || name == CIRC {
            return Err(Error::ReservedName(name.to_string()));
        }
        a.insert(name)?;
    }
    Ok(a)
}

/// `$ v(1,rank) … v(k,rank)`.
pub fn build_vertex_string(g: &ColoredGraph, rank: usize) -> Result<Sequence> {
    if rank >= g.n() {
        return Err(Error::RankOutOfRange { rank, n: g.n() });
    }
    let mut s = vec![DOLLAR_ID];
    s.extend((0..g.k()).map(|c| vertex_symbol(g.n(), VertexId::new(c, rank))));
    Ok(s.into())
}

fn gadget(g: &ColoredGraph, e: &Edge, shift: usize) -> Sequence {
    let mut s = vec![CIRC_ID; g.k() + 2];
    s[0] = DOLLAR_ID;
    for v in [e.lo, e.hi] {
        s[v.color + 2 - shift] = vertex_symbol(g.n(), v);
    }
    s.into()
}

/// Gadget for the `index`-th edge (0-based, file order).
pub fn build_edge_gadget(g: &ColoredGraph, index: usize) -> Result<Sequence> {
    let e = g.edges().get(index).ok_or(Error::EdgeOutOfRange {
        index,
        count: g.edge_count(),
    })?;
    Ok(gadget(g, e, 0))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    /// Budget is set to the threshold.
    pub instance: PatternInstance,
    pub threshold: u64,
    pub multiplicity: u64,
    pub k: usize,
    pub n: usize,
    /// Source edges; gadget `j` encodes `edges[j]`.
    pub edges: Vec<Edge>,
    pub dollar: Symbol,
    pub circ: Symbol,
}

impl ReductionOutput {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pattern_length(&self) -> usize {
        self.k + 1
    }

    pub fn vertex_symbol(&self, v: VertexId) -> Symbol {
        vertex_symbol(self.n, v)
    }

    /// Inverse of [`vertex_symbol`](Self::vertex_symbol); `None` for `$`, `o` and out-of-range ids.
    pub fn vertex_of(&self, s: Symbol) -> Option<VertexId> {
        let i = s.index().checked_sub(2)?;
        (i < self.k * self.n).then(|| VertexId::new(i / self.n, i % self.n))
    }

    /// `$ v(1,i₁) … v(k,i_k)`.
    pub fn pattern_of(&self, sel: &VertexSelection) -> Sequence {
        let mut p = vec![self.dollar];
        p.extend(
            sel.ranks()
                .iter()
                .enumerate()
                .map(|(c, &r)| self.vertex_symbol(VertexId::new(c, r))),
        );
        p.into()
    }

    /// Sub-instance holding only the vertex strings.
    pub fn vertex_strings(&self) -> Result<PatternInstance> {
        let strings = self.instance.strings()[..self.n].to_vec();
        PatternInstance::new(self.instance.alphabet().clone(), strings, self.k + 1, None)
    }
}

pub fn reduce(g: &ColoredGraph) -> Result<ReductionOutput> {
    reduce_with(g, Mutation::None)
}

pub fn reduce_with(g: &ColoredGraph, mutation: Mutation) -> Result<ReductionOutput> {
    let (k, n, m) = (g.k(), g.n(), g.edge_count());
    if m == 0 && k >= 2 {
        return Err(Error::EdgelessGraph { k });
    }
    let alphabet = reduction_alphabet(g)?;
    let mut big_n = multiplicity(k, m);
    let mut limit = threshold(k, n, m);
    let mut shift = 0;
    match mutation {
        Mutation::None => {}
        Mutation::MultiplicityMinusOne => big_n -= 1,
        Mutation::ThresholdPlusOne => limit += 1,
        Mutation::GadgetSlotShift => shift = 1,
    }
    let mut strings = Vec::with_capacity(n + m);
    for rank in 0..n {
        strings.push(WeightedString::new(build_vertex_string(g, rank)?, big_n)?);
    }
    for e in g.edges() {
        strings.push(WeightedString::new(gadget(g, e, shift), 1)?);
    }
    let instance = PatternInstance::new(alphabet, strings, k + 1, Some(limit))?;
    Ok(ReductionOutput {
        instance,
        threshold: limit,
        multiplicity: big_n,
        k,
        n,
        edges: g.edges().to_vec(),
        dollar: DOLLAR_ID,
        circ: CIRC_ID,
    })
}

/// Vertex strings only, each with weight 1.
pub fn vertex_string_instance(g: &ColoredGraph) -> Result<PatternInstance> {
    let strings = (0..g.n())
        .map(|r| WeightedString::new(build_vertex_string(g, r)?, 1))
        .collect::<Result<Vec<_>>>()?;
    PatternInstance::new(reduction_alphabet(g)?, strings, g.k() + 1, None)
}

/// Result of reading a pattern back as a vertex selection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodedSelection {
    /// `Some` iff the pattern is `$` followed by one vertex of each color, in color order.
    pub selection: Option<VertexSelection>,
}

impl DecodedSelection {
    pub fn well_formed(&self) -> bool {
        self.selection.is_some()
    }
}

pub fn decode_pattern(out: &ReductionOutput, pattern: &[Symbol]) -> DecodedSelection {
    let selection = (|| {
        if pattern.len() != out.k + 1 || pattern[0] != out.dollar {
            return None;
        }
        pattern[1..]
            .iter()
            .enumerate()
            .map(|(c, &s)| out.vertex_of(s).filter(|v| v.color == c).map(|v| v.rank))
            .collect::<Option<Vec<_>>>()
            .map(VertexSelection)
    })();
    DecodedSelection { selection }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    pub mutation: Mutation,
    pub exec: Exec,
    pub state_bound: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            mutation: Mutation::None,
            exec: Exec::default(),
            state_bound: DEFAULT_STATE_BOUND,
        }
    }
}

impl CheckConfig {
    fn solver(&self) -> SolverChoice {
        SolverChoice::new(SolverKind::PatternEnum)
            .all_optima(true)
            .exec(self.exec)
            .bound(self.state_bound)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOptima {
    pub optimal_patterns: Vec<Sequence>,
    pub optimal_value: u64,
}

/// Solves the vertex-strings-only instance exhaustively and checks that its
/// optima are exactly the `n^k` patterns `$ v(1,i₁) … v(k,i_k)` at value `(n − 1)k`.
pub fn lemma1_oracle(g: &ColoredGraph, cfg: &CheckConfig) -> Result<VertexOptima> {
    let inst = vertex_string_instance(g)?;
    let res = solve_by_pattern_enum(&inst, &cfg.solver())?;
    let expected_value = ((g.n() - 1) * g.k()) as u64;
    let found: Vec<Sequence> = res.solutions.into_iter().map(|s| s.pattern).collect();

    let probe = ReductionOutput {
        instance: inst.clone(),
        threshold: 0,
        multiplicity: 1,
        k: g.k(),
        n: g.n(),
        edges: Vec::new(),
        dollar: DOLLAR_ID,
        circ: CIRC_ID,
    };
    // selections() and the solver both run in lexicographic order
    let expected: Vec<Sequence> = g.selections().map(|s| probe.pattern_of(&s)).collect();

    if res.optimum != expected_value {
        return Err(Error::VertexOptimaViolation(format!(
            "optimum {} differs from (n-1)k = {expected_value}",
            res.optimum
        )));
    }
    if found != expected {
        let render = |p: &Sequence| inst.alphabet().render(p);
        let extra = found.iter().find(|p| !expected.contains(p)).map(render);
        let missing = expected.iter().find(|p| !found.contains(p)).map(render);
        return Err(Error::VertexOptimaViolation(format!(
            "optimal set has {} patterns, expected {}; unexpected {extra:?}, missing {missing:?}",
            found.len(),
            expected.len()
        )));
    }
    Ok(VertexOptima {
        optimal_patterns: found,
        optimal_value: res.optimum,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetAlignment {
    pub edge: usize,
    pub offset: usize,
    pub distance: u64,
    pub both_selected: bool,
}

/// Best alignment of the selection's pattern with every gadget; each must be
/// at distance `k − 1` when both endpoints are selected and `k` otherwise.
pub fn lemma2_oracle(out: &ReductionOutput, sel: &VertexSelection) -> Result<Vec<GadgetAlignment>> {
    if sel.ranks().len() != out.k {
        return Err(Error::SelectionSize { got: sel.ranks().len(), k: out.k });
    }
    if let Some(&rank) = sel.ranks().iter().find(|&&r| r >= out.n) {
        return Err(Error::RankOutOfRange { rank, n: out.n });
    }
    let pattern = out.pattern_of(sel);
    let k = out.k as u64;
    let gadgets = &out.instance.strings()[out.n..];
    out.edges
        .iter()
        .zip(gadgets)
        .enumerate()
        .map(|(j, (e, ws))| {
            let (offset, distance) = best_offset(&pattern, ws.seq())?;
            let both_selected = sel.contains(e.lo) && sel.contains(e.hi);
            let expected = if both_selected { k - 1 } else { k };
            if distance != expected {
                return Err(Error::GadgetDistanceViolation {
                    edge: j,
                    msg: format!(
                        "distance {distance}, expected {expected} (both endpoints selected: {both_selected})"
                    ),
                });
            }
            Ok(GadgetAlignment {
                edge: j,
                offset,
                distance,
                both_selected,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub clique_exists: bool,
    pub optimum: u64,
    /// Threshold carried by the reduced instance.
    pub threshold: u64,
    /// Threshold recomputed from `(k, n, m)` of the source graph.
    pub expected_threshold: u64,
    pub max_edges_within: usize,
    /// `N(n − 1)k + mk − max|E(K)|`, recomputed from the source graph.
    pub expected_optimum: u64,
    pub optimal_patterns: Vec<Sequence>,
    pub all_optima_well_formed: bool,
    /// `optimum ≤ threshold ⟺ clique_exists`.
    pub equivalence_holds: bool,
}

impl TheoremReport {
    pub fn formula_holds(&self) -> bool {
        self.optimum == self.expected_optimum
    }

    pub fn threshold_matches(&self) -> bool {
        self.threshold == self.expected_threshold
    }

    pub fn holds(&self) -> bool {
        self.equivalence_holds
            && self.formula_holds()
            && self.threshold_matches()
            && self.all_optima_well_formed
    }

    /// Human-readable list of the checks that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.equivalence_holds {
            out.push(format!(
                "equivalence: optimum {} vs threshold {}, clique exists: {}",
                self.optimum, self.threshold, self.clique_exists
            ));
        }
        if !self.formula_holds() {
            out.push(format!(
                "optimum {} differs from N(n-1)k+mk-max|E(K)| = {}",
                self.optimum, self.expected_optimum
            ));
        }
        if !self.threshold_matches() {
            out.push(format!(
                "threshold {} differs from N(n-1)k+mk-k(k-1)/2 = {}",
                self.threshold, self.expected_threshold
            ));
        }
        if !self.all_optima_well_formed {
            out.push("an optimal pattern does not decode to a vertex selection".into());
        }
        out
    }
}

/// Reduces `g`, solves the result exactly, and compares against brute-force clique search.
pub fn theorem_check(g: &ColoredGraph, cfg: &CheckConfig) -> Result<TheoremReport> {
    let out = reduce_with(g, cfg.mutation)?;
    let res = solve_by_pattern_enum(&out.instance, &cfg.solver())?;
    let clique = find_multicolored_clique(g, cfg.state_bound)?;
    let (best_edges, _) = max_edges_within(g, cfg.state_bound)?;
    let (k, n, m) = (g.k(), g.n(), g.edge_count());
    let optimal_patterns: Vec<Sequence> = res.solutions.into_iter().map(|s| s.pattern).collect();
    let all_optima_well_formed = optimal_patterns
        .iter()
        .all(|p| decode_pattern(&out, p).well_formed());
    Ok(TheoremReport {
        clique_exists: clique.is_some(),
        optimum: res.optimum,
        threshold: out.threshold,
        expected_threshold: threshold(k, n, m),
        max_edges_within: best_edges,
        expected_optimum: selection_cost(k, n, m, best_edges),
        optimal_patterns,
        all_optima_well_formed,
        equivalence_holds: (res.optimum <= out.threshold) == clique.is_some(),
    })
}

/// Checks that the selection's pattern costs exactly `N(n − 1)k + mk − |E(K)|`
/// on the reduced instance, with `N` taken from the source graph.
pub fn cost_decomposition_holds(g: &ColoredGraph, out: &ReductionOutput, sel: &VertexSelection) -> Result<bool> {
    let cost = total_cost(&out.instance, &out.pattern_of(sel))?;
    let within = count_edges_within(g, sel)?;
    Ok(cost == selection_cost(g.k(), g.n(), g.edge_count(), within))
}

/// Instance file with a `# meta` comment block for decoding.
pub fn write_reduced_instance(g: &ColoredGraph, out: &ReductionOutput) -> String {
    let mut s = String::new();
    writeln!(s, "# meta k={}", out.k).unwrap();
    writeln!(s, "# meta n={}", out.n).unwrap();
    writeln!(s, "# meta m={}", out.edge_count()).unwrap();
    writeln!(s, "# meta N={}", out.multiplicity).unwrap();
    writeln!(s, "# meta threshold={}", out.threshold).unwrap();
    writeln!(s, "# meta dollar={DOLLAR}").unwrap();
    writeln!(s, "# meta circ={CIRC}").unwrap();
    for v in g.vertices() {
        writeln!(s, "# meta vertex={}:{}:{}", g.name(v), v.color + 1, v.rank + 1).unwrap();
    }
    s.push_str(&write_instance(&out.instance));
    s
}

/// Reads a file produced by [`write_reduced_instance`] back into a [`ReductionOutput`].
pub fn parse_reduced_instance(text: &str) -> Result<ReductionOutput> {
    let instance = parse_instance(text)?;
    let mut meta: HashMap<&str, (usize, &str)> = HashMap::new();
    let mut vertices = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let Some(rest) = raw.trim().strip_prefix("# meta ") else {
            continue;
        };
        let (key, value) = rest
            .split_once('=')
            .ok_or_else(|| parse_err(i + 1, "meta line without `=`"))?;
        if key == "vertex" {
            vertices.push((i + 1, value));
        } else {
            meta.insert(key, (i + 1, value));
        }
    }
    let get = |key: &str| -> Result<usize> {
        let (line, v) = meta
            .get(key)
            .ok_or_else(|| parse_err(0, format!("missing meta key `{key}`")))?;
        v.parse().map_err(|_| parse_err(*line, format!("bad meta value for `{key}`")))
    };
    let (k, n, m) = (get("k")?, get("n")?, get("m")?);
    let big_n = get("N")? as u64;
    let limit = get("threshold")? as u64;

    let a = instance.alphabet();
    let expect_token = |s: Symbol, tok: &str| a.token(s) == Some(tok);
    if !expect_token(DOLLAR_ID, DOLLAR) || !expect_token(CIRC_ID, CIRC) {
        return Err(parse_err(0, "alphabet must start with `$ o`"));
    }
    if vertices.len() != k * n {
        return Err(parse_err(0, format!("expected {} vertex meta lines", k * n)));
    }
    for (line, v) in &vertices {
        let parts: Vec<&str> = v.split(':').collect();
        let [name, color, rank] = parts[..] else {
            return Err(parse_err(*line, "vertex meta must be name:color:rank"));
        };
        let color: usize = color.parse().map_err(|_| parse_err(*line, "bad color"))?;
        let rank: usize = rank.parse().map_err(|_| parse_err(*line, "bad rank"))?;
        if color == 0 || rank == 0 || color > k || rank > n {
            return Err(parse_err(*line, "vertex coordinates out of range"));
        }
        let id = vertex_symbol(n, VertexId::new(color - 1, rank - 1));
        if a.symbol(name) != Some(id) {
            return Err(parse_err(*line, format!("vertex {name} does not match alphabet order")));
        }
    }
    if instance.strings().len() != n + m || instance.pattern_length() != k + 1 {
        return Err(parse_err(0, "instance shape does not match meta block"));
    }
    let mut out = ReductionOutput {
        instance,
        threshold: limit,
        multiplicity: big_n,
        k,
        n,
        edges: Vec::new(),
        dollar: DOLLAR_ID,
        circ: CIRC_ID,
    };
    let mut edges = Vec::with_capacity(m);
    for (j, ws) in out.instance.strings()[n..].iter().enumerate() {
        let ends: Vec<VertexId> = ws.seq().iter().filter_map(|&s| out.vertex_of(s)).collect();
        let edge = match ends[..] {
            [a, b] => Edge::new(a, b),
            _ => None,
        };
        edges.push(edge.ok_or_else(|| parse_err(0, format!("gadget {j} does not encode an edge")))?);
    }
    out.edges = edges;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example_graph;

    fn render(out: &ReductionOutput, s: &[Symbol]) -> String {
        out.instance.alphabet().render(s)
    }

    #[test]
    fn vertex_strings() {
        let g = example_graph();
        let a = reduction_alphabet(&g).unwrap();
        assert_eq!(a.render(&build_vertex_string(&g, 0).unwrap()), "$ a c e");
        assert_eq!(a.render(&build_vertex_string(&g, 1).unwrap()), "$ b d f");
        assert!(matches!(build_vertex_string(&g, 2), Err(Error::RankOutOfRange { .. })));

        let single = ColoredGraph::new(1, 1, vec!["x".into()], &[]).unwrap();
        let a = reduction_alphabet(&single).unwrap();
        assert_eq!(a.render(&build_vertex_string(&single, 0).unwrap()), "$ x");
    }

    #[test]
    fn edge_gadgets() {
        let g = example_graph();
        let a = reduction_alphabet(&g).unwrap();
        let row = |j| a.render(&build_edge_gadget(&g, j).unwrap());
        assert_eq!(row(0), "$ o a c o");
        assert_eq!(row(1), "$ o a d o");
        assert_eq!(row(5), "$ o o c f");
        assert_eq!(row(6), "$ o o d e");
        assert!(matches!(build_edge_gadget(&g, 7), Err(Error::EdgeOutOfRange { index: 7, count: 7 })));
    }

    #[test]
    fn example_reduction_shape() {
        let g = example_graph();
        let out = reduce(&g).unwrap();
        assert_eq!(out.multiplicity, 36);
        assert_eq!(out.pattern_length(), 4);
        assert_eq!(out.instance.alphabet().len(), 8);
        assert_eq!(out.threshold, 126);
        assert_eq!(out.instance.budget(), Some(126));
        let weights: Vec<u64> = out.instance.strings().iter().map(|w| w.weight()).collect();
        assert_eq!(weights, [36, 36, 1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn smallest_edge_case() {
        let g = ColoredGraph::with_default_names(2, 1, &[(VertexId::new(0, 0), VertexId::new(1, 0))]).unwrap();
        let out = reduce(&g).unwrap();
        assert_eq!(out.multiplicity, 5);
        assert_eq!(out.threshold, 1);
    }

    #[test]
    fn rejects_edgeless_and_reserved() {
        let g = ColoredGraph::with_default_names(3, 2, &[]).unwrap();
        assert_eq!(reduce(&g), Err(Error::EdgelessGraph { k: 3 }));
        let one = ColoredGraph::with_default_names(1, 3, &[]).unwrap();
        let out = reduce(&one).unwrap();
        assert_eq!((out.multiplicity, out.threshold), (1, 2));
        let bad = ColoredGraph::new(2, 1, vec!["o".into(), "b".into()], &[(VertexId::new(0, 0), VertexId::new(1, 0))]).unwrap();
        assert_eq!(reduce(&bad), Err(Error::ReservedName("o".into())));
    }

    #[test]
    fn decoding() {
        let g = example_graph();
        let out = reduce(&g).unwrap();
        let a = out.instance.alphabet();
        let d = decode_pattern(&out, &a.parse_seq("$ a d e").unwrap());
        assert_eq!(g.selection_names(d.selection.as_ref().unwrap()), ["a", "d", "e"]);
        let d = decode_pattern(&out, &a.parse_seq("$ a c e").unwrap());
        assert_eq!(d.selection, Some(VertexSelection(vec![0, 0, 0])));
        for bad in ["$ o d e", "$ c a e", "a a d e", "$ a d", "$ a d e f"] {
            assert!(!decode_pattern(&out, &a.parse_seq(bad).unwrap()).well_formed(), "{bad}");
        }
    }

    #[test]
    fn lemma2_on_example() {
        let g = example_graph();
        let out = reduce(&g).unwrap();
        let ade = VertexSelection(vec![0, 1, 0]);
        let rows = lemma2_oracle(&out, &ade).unwrap();
        assert_eq!(rows.len(), 7);
        // d–e
        assert_eq!((rows[6].distance, rows[6].both_selected), (2, true));
        // b–c
        assert_eq!((rows[3].distance, rows[3].both_selected), (3, false));
        // a–c
        assert_eq!((rows[0].distance, rows[0].both_selected), (3, false));
        assert_eq!(render(&out, &out.pattern_of(&ade)), "$ a d e");
        assert!(lemma2_oracle(&out, &VertexSelection(vec![0, 0])).is_err());
    }

    #[test]
    fn reduced_file_roundtrip() {
        let g = example_graph();
        let out = reduce(&g).unwrap();
        let text = write_reduced_instance(&g, &out);
        assert!(text.contains("# meta N=36\n"));
        assert!(text.contains("# meta vertex=d:2:2\n"));
        assert_eq!(parse_reduced_instance(&text).unwrap(), out);
        assert_eq!(parse_instance(&text).unwrap(), out.instance);
        let broken = text.replace("# meta k=3\n", "");
        assert!(parse_reduced_instance(&broken).is_err());
    }
}
