//! The Consensus Patterns objective and its building blocks.
//!
//! For a fixed pattern the per-string offsets decouple: each string simply
//! takes its own best window. For fixed offsets the pattern decouples by
//! column: each column takes a maximum-weight symbol among the aligned
//! windows. The two solvers exploit one decoupling each.

use crate::error::{Error, Result};

use super::types::{PatternInstance, Sequence, Solution, Symbol};

/// Number of positions where `a` and `b` differ.
pub fn hamming(a: &[Symbol], b: &[Symbol]) -> Result<u64> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(mismatches(a, b))
}

#[inline]
pub(crate) fn mismatches(a: &[Symbol], b: &[Symbol]) -> u64 {
    a.iter().zip(b).filter(|(x, y)| x != y).count() as u64
}

/// The length-`len` slice of `s` starting at `offset`.
pub fn window(s: &[Symbol], offset: usize, len: usize) -> Result<&[Symbol]> {
    match offset.checked_add(len) {
        Some(end) if end <= s.len() => Ok(&s[offset..end]),
        _ => Err(Error::OffsetOutOfRange {
            offset,
            len,
            seq_len: s.len(),
        }),
    }
}

/// Offset of the window of `s` closest to `pattern`, smallest offset on ties.
pub fn best_offset(pattern: &[Symbol], s: &[Symbol]) -> Result<(usize, u64)> {
    if pattern.len() > s.len() {
        return Err(Error::PatternTooLong {
            pattern: pattern.len(),
            seq: s.len(),
        });
    }
    if pattern.is_empty() {
        return Ok((0, 0));
    }
    let mut best = (0, u64::MAX);
    for (offset, w) in s.windows(pattern.len()).enumerate() {
        let cost = mismatches(pattern, w);
        if cost < best.1 {
            best = (offset, cost);
            if cost == 0 {
                break;
            }
        }
    }
    Ok(best)
}

fn check_pattern(instance: &PatternInstance, pattern: &[Symbol]) -> Result<()> {
    if pattern.len() != instance.pattern_length() {
        return Err(Error::LengthMismatch {
            left: pattern.len(),
            right: instance.pattern_length(),
        });
    }
    Ok(())
}

/// Per-string best offsets for `pattern`, plus the resulting weighted cost.
pub fn best_offsets(instance: &PatternInstance, pattern: &[Symbol]) -> Result<(Vec<usize>, u64)> {
    check_pattern(instance, pattern)?;
    let mut offsets = Vec::with_capacity(instance.strings().len());
    let mut total = 0u64;
    for ws in instance.strings() {
        let (o, c) = best_offset(pattern, ws.seq())?;
        offsets.push(o);
        total += ws.weight() * c;
    }
    Ok((offsets, total))
}

/// Optimal objective value for a fixed pattern (offsets chosen freely).
pub fn total_cost(instance: &PatternInstance, pattern: &[Symbol]) -> Result<u64> {
    best_offsets(instance, pattern).map(|(_, c)| c)
}

/// Objective value for a fixed pattern and fixed offsets.
pub fn cost_at(instance: &PatternInstance, pattern: &[Symbol], offsets: &[usize]) -> Result<u64> {
    check_pattern(instance, pattern)?;
    check_offsets(instance, offsets)?;
    let l = instance.pattern_length();
    instance
        .strings()
        .iter()
        .zip(offsets)
        .map(|(ws, &o)| Ok(ws.weight() * mismatches(pattern, window(ws.seq(), o, l)?)))
        .sum()
}

/// Builds a [`Solution`] whose offsets are the per-string best offsets.
pub fn solution_for(instance: &PatternInstance, pattern: Sequence) -> Result<Solution> {
    let (offsets, total_cost) = best_offsets(instance, &pattern)?;
    Ok(Solution {
        pattern,
        offsets,
        total_cost,
    })
}

fn check_offsets(instance: &PatternInstance, offsets: &[usize]) -> Result<()> {
    if offsets.len() != instance.strings().len() {
        return Err(Error::OffsetCount {
            expected: instance.strings().len(),
            got: offsets.len(),
        });
    }
    let l = instance.pattern_length();
    for (ws, &o) in instance.strings().iter().zip(offsets) {
        window(ws.seq(), o, l)?;
    }
    Ok(())
}

/// Maximum-weight symbols of every column for a fixed set of windows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnMajority {
    /// Tied maximum-weight symbols per column, ascending by id.
    pub columns: Vec<Vec<Symbol>>,
    /// Objective value reached by every pattern in the Cartesian product of `columns`.
    pub cost: u64,
}

impl ColumnMajority {
    /// Lexicographically smallest majority pattern.
    pub fn canonical(&self) -> Sequence {
        Sequence::new(self.columns.iter().map(|c| c[0]).collect())
    }

    pub fn pattern_count(&self) -> u128 {
        self.columns.iter().map(|c| c.len() as u128).product()
    }

    /// Every majority pattern, in lexicographic order.
    pub fn patterns(&self) -> Vec<Sequence> {
        let mut out = vec![Vec::with_capacity(self.columns.len())];
        for col in &self.columns {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    col.iter().map(move |&s| {
                        let mut p = prefix.clone();
                        p.push(s);
                        p
                    })
                })
                .collect();
        }
        out.into_iter().map(Sequence::new).collect()
    }
}

/// Column-majority patterns for the windows selected by `offsets`.
pub fn column_majority(instance: &PatternInstance, offsets: &[usize]) -> Result<ColumnMajority> {
    if instance.is_empty() {
        return Err(Error::EmptyInstance);
    }
    check_offsets(instance, offsets)?;
    let l = instance.pattern_length();
    let sigma = instance.alphabet().len();
    let total = instance.total_weight();
    let mut counts = vec![0u64; sigma];
    let mut columns = Vec::with_capacity(l);
    let mut cost = 0;
    for c in 0..l {
        counts.iter_mut().for_each(|x| *x = 0);
        for (ws, &o) in instance.strings().iter().zip(offsets) {
            counts[ws.seq()[o + c].index()] += ws.weight();
        }
        let max = *counts.iter().max().expect("non-empty alphabet");
        columns.push(
            counts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| w == max)
                .map(|(i, _)| Symbol(i as u32))
                .collect(),
        );
        cost += total - max;
    }
    Ok(ColumnMajority { columns, cost })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    /// Cost recomputed from the pattern and offsets; `None` when they are unusable.
    pub recomputed_cost: Option<u64>,
    /// Present only when the instance carries a budget.
    pub within_budget: Option<bool>,
    pub problems: Vec<String>,
}

/// Checks `sol` against `instance`. Never fails: every defect lands in the report.
pub fn verify_solution(instance: &PatternInstance, sol: &Solution) -> VerifyReport {
    verify_parts(instance, &sol.pattern, &sol.offsets, Some(sol.total_cost))
}

/// Like [`verify_solution`], but the claimed cost is optional.
pub fn verify_parts(
    instance: &PatternInstance,
    pattern: &[Symbol],
    offsets: &[usize],
    claimed: Option<u64>,
) -> VerifyReport {
    let mut problems = Vec::new();
    if pattern.len() != instance.pattern_length() {
        problems.push(format!(
            "pattern length {} differs from required {}",
            pattern.len(),
            instance.pattern_length()
        ));
    }
    if let Some(s) = pattern.iter().find(|&&s| !instance.alphabet().contains(s)) {
        problems.push(format!("pattern symbol id {} outside alphabet", s.0));
    }
    if let Err(e) = check_offsets(instance, offsets) {
        problems.push(e.to_string());
    }
    let recomputed_cost = if problems.is_empty() {
        cost_at(instance, pattern, offsets).ok()
    } else {
        None
    };
    if let (Some(r), Some(c)) = (recomputed_cost, claimed) {
        if r != c {
            problems.push(format!("claimed cost {c} but recomputed {r}"));
        }
    }
    let within_budget = match (instance.budget(), recomputed_cost) {
        (Some(d), Some(r)) => Some(r <= d),
        (Some(_), None) => Some(false),
        (None, _) => None,
    };
    VerifyReport {
        valid: problems.is_empty(),
        recomputed_cost,
        within_budget,
        problems,
    }
}
