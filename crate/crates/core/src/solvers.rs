//! Two independent exact solvers for Consensus Patterns.
//!
//! * [`solve_by_pattern_enum`] walks every length-L pattern in lexicographic
//!   order (depth-first over columns), scoring each with per-string best
//!   offsets. Optional pruning cuts a prefix whose partial cost already
//!   exceeds the incumbent.
//! * [`solve_by_offset_enum`] walks every tuple of window offsets and takes
//!   the column-majority pattern for each tuple.
//!
//! Both report the lexicographically smallest optimal pattern (or every
//! optimal pattern), with offsets set to each string's best offset.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exec::{chunk_ranges, map_tasks, Exec};
use crate::stringcore::{solution_for, PatternInstance, Solution, Symbol};

pub const DEFAULT_STATE_BOUND: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolverKind {
    PatternEnum,
    OffsetEnum,
}

impl SolverKind {
    pub fn name(self) -> &'static str {
        match self {
            SolverKind::PatternEnum => "pattern-enum",
            SolverKind::OffsetEnum => "offset-enum",
        }
    }
}

impl std::str::FromStr for SolverKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pattern-enum" => Ok(SolverKind::PatternEnum),
            "offset-enum" => Ok(SolverKind::OffsetEnum),
            other => Err(format!("unknown solver {other:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverChoice {
    pub kind: SolverKind,
    pub enumerate_all_optima: bool,
    /// Branch-and-bound in the pattern enumeration. Never changes the optimum.
    pub prune: bool,
    /// Upper limit on patterns (pattern-enum) or offset tuples (offset-enum).
    pub state_bound: u64,
    pub exec: Exec,
}

impl Default for SolverChoice {
    fn default() -> Self {
        SolverChoice {
            kind: SolverKind::PatternEnum,
            enumerate_all_optima: false,
            prune: true,
            state_bound: DEFAULT_STATE_BOUND,
            exec: Exec::default(),
        }
    }
}

impl SolverChoice {
    pub fn new(kind: SolverKind) -> Self {
        SolverChoice {
            kind,
            ..Self::default()
        }
    }

    pub fn all_optima(mut self, on: bool) -> Self {
        self.enumerate_all_optima = on;
        self
    }

    pub fn pruning(mut self, on: bool) -> Self {
        self.prune = on;
        self
    }

    pub fn exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn bound(mut self, state_bound: u64) -> Self {
        self.state_bound = state_bound;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub optimum: u64,
    /// Lexicographic by pattern. One entry unless all optima were requested.
    pub solutions: Vec<Solution>,
    pub states_explored: u64,
}

pub fn solve(instance: &PatternInstance, choice: &SolverChoice) -> Result<SolveResult> {
    match choice.kind {
        SolverKind::PatternEnum => solve_by_pattern_enum(instance, choice),
        SolverKind::OffsetEnum => solve_by_offset_enum(instance, choice),
    }
}

fn check_bound(needed: u128, bound: u64) -> Result<()> {
    if needed > bound as u128 {
        return Err(Error::StateBoundExceeded { needed, bound });
    }
    Ok(())
}

fn finish(
    instance: &PatternInstance,
    optimum: u64,
    patterns: Vec<Vec<Symbol>>,
    states_explored: u64,
) -> Result<SolveResult> {
    let solutions = patterns
        .into_iter()
        .map(|p| solution_for(instance, p.into()))
        .collect::<Result<Vec<_>>>()?;
    debug_assert!(solutions.iter().all(|s| s.total_cost == optimum));
    Ok(SolveResult {
        optimum,
        solutions,
        states_explored,
    })
}

// ---------------------------------------------------------------------------
// pattern enumeration

struct PatternSearch {
    sigma: u32,
    len: usize,
    weights: Vec<u64>,
    /// Slot range (one slot per admissible offset) of each string.
    ranges: Vec<std::ops::Range<usize>>,
    /// `column[t][slot]`: symbol under pattern column `t` for that slot's window.
    column: Vec<Vec<Symbol>>,
    prune: bool,
    all: bool,
    upper: u64,
}

#[derive(Default)]
struct TaskOutcome {
    best: Option<u64>,
    patterns: Vec<Vec<Symbol>>,
    states: u64,
}

impl PatternSearch {
    fn new(instance: &PatternInstance, choice: &SolverChoice) -> Self {
        let len = instance.pattern_length();
        let mut ranges = Vec::new();
        let mut column = vec![Vec::new(); len];
        let mut slots = 0;
        for ws in instance.strings() {
            let count = ws.offset_count(len);
            ranges.push(slots..slots + count);
            slots += count;
            for o in 0..count {
                for (t, col) in column.iter_mut().enumerate() {
                    col.push(ws.seq()[o + t]);
                }
            }
        }
        // Any achievable cost is a valid initial incumbent: majority at offsets 0.
        let upper = if choice.prune {
            crate::stringcore::column_majority(instance, &vec![0; instance.strings().len()])
                .map(|cm| cm.cost)
                .unwrap_or(u64::MAX)
        } else {
            u64::MAX
        };
        PatternSearch {
            sigma: instance.alphabet().len() as u32,
            len,
            weights: instance.strings().iter().map(|w| w.weight()).collect(),
            ranges,
            column,
            prune: choice.prune,
            all: choice.enumerate_all_optima,
            upper,
        }
    }

    fn lower_bound(&self, dist: &[u32]) -> u64 {
        self.ranges
            .iter()
            .zip(&self.weights)
            .map(|(r, &w)| w * u64::from(*dist[r.clone()].iter().min().expect("offset")))
            .sum()
    }

    fn extend(&self, depth: usize, sym: Symbol, from: &[u32], into: &mut [u32]) {
        for ((d, &prev), &c) in into.iter_mut().zip(from).zip(&self.column[depth]) {
            *d = prev + u32::from(c != sym);
        }
    }

    fn should_prune(&self, lb: u64, out: &TaskOutcome) -> bool {
        if !self.prune {
            return false;
        }
        match out.best {
            Some(b) if !self.all => lb >= b,
            Some(b) => lb > b,
            None => lb > self.upper,
        }
    }

    fn run_task(&self, prefix: &[Symbol]) -> TaskOutcome {
        let slots = self.column.first().map_or(0, Vec::len);
        let mut dist = vec![vec![0u32; slots]; self.len + 1];
        for (t, &s) in prefix.iter().enumerate() {
            let (head, tail) = dist.split_at_mut(t + 1);
            self.extend(t, s, &head[t], &mut tail[0]);
        }
        let mut out = TaskOutcome::default();
        let mut pattern = prefix.to_vec();
        self.dfs(prefix.len(), &mut dist, &mut pattern, &mut out);
        out
    }

    fn dfs(&self, depth: usize, dist: &mut [Vec<u32>], pattern: &mut Vec<Symbol>, out: &mut TaskOutcome) {
        out.states += 1;
        let lb = self.lower_bound(&dist[depth]);
        if self.should_prune(lb, out) {
            return;
        }
        if depth == self.len {
            match out.best {
                Some(b) if lb > b => {}
                Some(b) if lb == b => {
                    if self.all {
                        out.patterns.push(pattern.clone());
                    }
                }
                _ => {
                    out.best = Some(lb);
                    out.patterns.clear();
                    out.patterns.push(pattern.clone());
                }
            }
            return;
        }
        for s in 0..self.sigma {
            let sym = Symbol(s);
            {
                let (head, tail) = dist.split_at_mut(depth + 1);
                self.extend(depth, sym, &head[depth], &mut tail[0]);
            }
            pattern.push(sym);
            self.dfs(depth + 1, dist, pattern, out);
            pattern.pop();
        }
    }
}

/// Exhaustive search over all `|Σ|^L` patterns.
pub fn solve_by_pattern_enum(instance: &PatternInstance, choice: &SolverChoice) -> Result<SolveResult> {
    if instance.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let sigma = instance.alphabet().len() as u128;
    let len = instance.pattern_length() as u32;
    let needed = sigma.checked_pow(len).unwrap_or(u128::MAX);
    check_bound(needed, choice.state_bound)?;

    let search = PatternSearch::new(instance, choice);
    let split = search.len.min(2);
    let prefixes: Vec<Vec<Symbol>> = (0..(sigma as u64).pow(split as u32))
        .map(|mut idx| {
            let mut p = vec![Symbol(0); split];
            for slot in p.iter_mut().rev() {
                *slot = Symbol((idx % sigma as u64) as u32);
                idx /= sigma as u64;
            }
            p
        })
        .collect();
    let outcomes = map_tasks(choice.exec, prefixes, |p| search.run_task(&p));

    let states = outcomes.iter().map(|o| o.states).sum();
    let optimum = outcomes
        .iter()
        .filter_map(|o| o.best)
        .min()
        .expect("the incumbent bound is achievable, so some task records it");
    let mut patterns = Vec::new();
    for o in outcomes.into_iter().filter(|o| o.best == Some(optimum)) {
        patterns.extend(o.patterns);
        if !choice.enumerate_all_optima {
            patterns.truncate(1);
            break;
        }
    }
    finish(instance, optimum, patterns, states)
}

// ---------------------------------------------------------------------------
// offset-tuple enumeration

#[derive(Default)]
struct ChunkOutcome {
    best: Option<u64>,
    patterns: BTreeSet<Vec<Symbol>>,
    states: u64,
}

/// Exhaustive search over all offset tuples, one offset per weighted string.
pub fn solve_by_offset_enum(instance: &PatternInstance, choice: &SolverChoice) -> Result<SolveResult> {
    if instance.is_empty() {
        return Err(Error::EmptyInstance);
    }
    let len = instance.pattern_length();
    let radices: Vec<u64> = instance
        .strings()
        .iter()
        .map(|w| w.offset_count(len) as u64)
        .collect();
    let needed = radices
        .iter()
        .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
        .unwrap_or(u128::MAX);
    check_bound(needed, choice.state_bound)?;
    let total = needed as u64;

    let sigma = instance.alphabet().len();
    let grand = instance.total_weight();
    let all = choice.enumerate_all_optima;

    let run_chunk = |range: std::ops::Range<u64>| {
        let mut out = ChunkOutcome::default();
        let mut offsets = decode_tuple(range.start, &radices);
        let mut counts = vec![0u64; sigma];
        let mut columns: Vec<Vec<Symbol>> = vec![Vec::new(); len];
        for _ in range {
            out.states += 1;
            let mut cost = 0;
            for (c, col) in columns.iter_mut().enumerate() {
                counts.iter_mut().for_each(|x| *x = 0);
                for (ws, &o) in instance.strings().iter().zip(&offsets) {
                    counts[ws.seq()[o + c].index()] += ws.weight();
                }
                let max = *counts.iter().max().expect("alphabet");
                cost += grand - max;
                col.clear();
                col.extend(
                    counts
                        .iter()
                        .enumerate()
                        .filter(|&(_, &w)| w == max)
                        .map(|(i, _)| Symbol(i as u32)),
                );
            }
            let keep = match out.best {
                Some(b) if cost > b => false,
                Some(b) if cost == b => true,
                _ => {
                    out.best = Some(cost);
                    out.patterns.clear();
                    true
                }
            };
            if keep {
                if all {
                    out.patterns.extend(cartesian(&columns));
                } else {
                    out.patterns.insert(columns.iter().map(|c| c[0]).collect());
                    // only the smallest canonical pattern matters
                    while out.patterns.len() > 1 {
                        out.patterns.pop_last();
                    }
                }
            }
            advance_tuple(&mut offsets, &radices);
        }
        out
    };
    let outcomes = map_tasks(choice.exec, chunk_ranges(total, 256), run_chunk);

    let states = outcomes.iter().map(|o| o.states).sum();
    let optimum = outcomes
        .iter()
        .filter_map(|o| o.best)
        .min()
        .expect("at least one offset tuple");
    let mut patterns: BTreeSet<Vec<Symbol>> = BTreeSet::new();
    for o in outcomes.into_iter().filter(|o| o.best == Some(optimum)) {
        patterns.extend(o.patterns);
    }
    let mut patterns: Vec<_> = patterns.into_iter().collect();
    if !all {
        patterns.truncate(1);
    }
    finish(instance, optimum, patterns, states)
}

fn decode_tuple(mut idx: u64, radices: &[u64]) -> Vec<usize> {
    let mut out = vec![0; radices.len()];
    for (slot, &r) in out.iter_mut().zip(radices).rev() {
        *slot = (idx % r) as usize;
        idx /= r;
    }
    out
}

fn advance_tuple(offsets: &mut [usize], radices: &[u64]) {
    for (o, &r) in offsets.iter_mut().zip(radices).rev() {
        *o += 1;
        if (*o as u64) < r {
            return;
        }
        *o = 0;
    }
}

fn cartesian(columns: &[Vec<Symbol>]) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::with_capacity(columns.len())];
    for col in columns {
        out = out
            .into_iter()
            .flat_map(|p| {
                col.iter().map(move |&s| {
                    let mut q = p.clone();
                    q.push(s);
                    q
                })
            })
            .collect();
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossCheck {
    pub agree: bool,
    pub pattern_enum: u64,
    pub offset_enum: u64,
}

/// Runs both solvers and compares their optima. Witnesses may legitimately differ.
pub fn cross_check(instance: &PatternInstance, exec: Exec) -> Result<CrossCheck> {
    let a = solve_by_pattern_enum(instance, &SolverChoice::new(SolverKind::PatternEnum).exec(exec))?;
    let b = solve_by_offset_enum(instance, &SolverChoice::new(SolverKind::OffsetEnum).exec(exec))?;
    Ok(CrossCheck {
        agree: a.optimum == b.optimum,
        pattern_enum: a.optimum,
        offset_enum: b.optimum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stringcore::{parse_instance, verify_solution, Alphabet, WeightedString};

    fn inst(text: &str) -> PatternInstance {
        parse_instance(text).unwrap()
    }

    fn both(i: &PatternInstance, all: bool) -> [SolveResult; 2] {
        [SolverKind::PatternEnum, SolverKind::OffsetEnum]
            .map(|k| solve(i, &SolverChoice::new(k).all_optima(all)).unwrap())
    }

    #[test]
    fn single_string_is_its_own_optimum() {
        let i = inst("pattern_length 2\nstring 1 a b\n");
        for r in both(&i, false) {
            assert_eq!(r.optimum, 0);
            assert_eq!(i.alphabet().render(&r.solutions[0].pattern), "a b");
        }
    }

    #[test]
    fn symmetric_tie_lists_both_optima() {
        let i = inst("pattern_length 1\nstring 1 a\nstring 1 b\n");
        for r in both(&i, true) {
            assert_eq!(r.optimum, 1);
            let pats: Vec<_> = r
                .solutions
                .iter()
                .map(|s| i.alphabet().render(&s.pattern))
                .collect();
            assert_eq!(pats, ["a", "b"]);
        }
        for r in both(&i, false) {
            assert_eq!(r.solutions.len(), 1);
            assert_eq!(i.alphabet().render(&r.solutions[0].pattern), "a");
        }
    }

    #[test]
    fn degenerate_offset_ranges() {
        let i = inst("pattern_length 3\nstring 2 a b c\nstring 1 a c c\nstring 1 b b c\n");
        let r = solve_by_offset_enum(&i, &SolverChoice::new(SolverKind::OffsetEnum)).unwrap();
        assert_eq!(r.states_explored, 1);
        let cm = crate::stringcore::column_majority(&i, &[0, 0, 0]).unwrap();
        assert_eq!(r.optimum, cm.cost);
        assert_eq!(r.optimum, 2);
    }

    #[test]
    fn either_window_of_a_single_string() {
        let i = inst("pattern_length 1\nstring 1 a b\n");
        let r = solve_by_offset_enum(&i, &SolverChoice::new(SolverKind::OffsetEnum).all_optima(true)).unwrap();
        assert_eq!(r.optimum, 0);
        assert_eq!(r.solutions.len(), 2);
        assert_eq!(r.solutions[0].offsets, vec![0]);
        assert_eq!(r.solutions[1].offsets, vec![1]);
    }

    #[test]
    fn empty_instance_is_an_error() {
        let i = PatternInstance::new(Alphabet::from_tokens(["a"]).unwrap(), vec![], 1, None).unwrap();
        for k in [SolverKind::PatternEnum, SolverKind::OffsetEnum] {
            assert_eq!(solve(&i, &SolverChoice::new(k)), Err(Error::EmptyInstance));
        }
        assert_eq!(cross_check(&i, Exec::Sequential), Err(Error::EmptyInstance));
    }

    #[test]
    fn state_bounds_are_enforced() {
        let i = inst("pattern_length 3\nstring 1 a b c d\nstring 1 d c b a\n");
        let tight = SolverChoice::new(SolverKind::PatternEnum).bound(63);
        assert_eq!(
            solve(&i, &tight),
            Err(Error::StateBoundExceeded { needed: 64, bound: 63 })
        );
        assert!(solve(&i, &tight.bound(64)).is_ok());
        let tight = SolverChoice::new(SolverKind::OffsetEnum).bound(3);
        assert!(matches!(solve(&i, &tight), Err(Error::StateBoundExceeded { needed: 4, .. })));
    }

    #[test]
    fn pruning_and_exec_do_not_change_results() {
        let i = inst(
            "pattern_length 3\nstring 3 a b c a b\nstring 2 b b a c\nstring 1 c a b c a\nstring 4 a c c b\n",
        );
        let base = solve(&i, &SolverChoice::default().pruning(false).all_optima(true).exec(Exec::Sequential)).unwrap();
        // 9 prefix tasks, each a depth-2 node plus 3 leaves
        assert_eq!(base.states_explored, 36);
        for prune in [false, true] {
            for exec in [Exec::Sequential, Exec::Parallel] {
                let r = solve(&i, &SolverChoice::default().pruning(prune).all_optima(true).exec(exec)).unwrap();
                assert_eq!(r.optimum, base.optimum);
                assert_eq!(r.solutions, base.solutions);
                for s in &r.solutions {
                    assert!(verify_solution(&i, s).valid);
                }
            }
        }
        let a = solve(&i, &SolverChoice::default().exec(Exec::Sequential)).unwrap();
        let b = solve(&i, &SolverChoice::default().exec(Exec::Parallel)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn weights_matter() {
        let a = Alphabet::from_tokens(["x", "y"]).unwrap();
        let strings = vec![
            WeightedString::new(a.parse_seq("x x").unwrap(), 1).unwrap(),
            WeightedString::new(a.parse_seq("y y").unwrap(), 2).unwrap(),
        ];
        let i = PatternInstance::new(a, strings, 2, None).unwrap();
        for r in both(&i, true) {
            assert_eq!(r.optimum, 2);
            assert_eq!(r.solutions.len(), 1);
            assert_eq!(i.alphabet().render(&r.solutions[0].pattern), "y y");
        }
    }
}
