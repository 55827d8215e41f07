//! Brute-force oracles, deliberately written without the library's objective code.

#![allow(dead_code)]

use cpat_core::stringcore::{PatternInstance, Symbol};

pub fn ham(a: &[Symbol], b: &[Symbol]) -> u64 {
    assert_eq!(a.len(), b.len());
    let mut d = 0;
    for i in 0..a.len() {
        if a[i] != b[i] {
            d += 1;
        }
    }
    d
}

/// Every offset tuple, one offset per weighted string.
pub fn all_offset_tuples(inst: &PatternInstance) -> Vec<Vec<usize>> {
    let l = inst.pattern_length();
    let mut tuples = vec![vec![]];
    for ws in inst.strings() {
        let mut next = Vec::new();
        for t in &tuples {
            for o in 0..=ws.seq().len() - l {
                let mut t2 = t.clone();
                t2.push(o);
                next.push(t2);
            }
        }
        tuples = next;
    }
    tuples
}

pub fn cost_with_offsets(inst: &PatternInstance, pattern: &[Symbol], offsets: &[usize]) -> u64 {
    let l = inst.pattern_length();
    inst.strings()
        .iter()
        .zip(offsets)
        .map(|(ws, &o)| ws.weight() * ham(pattern, &ws.seq()[o..o + l]))
        .sum()
}

/// Minimum over all offset tuples (no decoupling shortcut).
pub fn brute_total_cost(inst: &PatternInstance, pattern: &[Symbol]) -> u64 {
    all_offset_tuples(inst)
        .iter()
        .map(|t| cost_with_offsets(inst, pattern, t))
        .min()
        .unwrap()
}

pub fn all_patterns(sigma: usize, len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|p: Vec<Symbol>| {
                (0..sigma as u32).map(move |s| {
                    let mut q = p.clone();
                    q.push(Symbol(s));
                    q
                })
            })
            .collect();
    }
    out
}

/// Optimum and every optimal pattern, by full enumeration of patterns × offset tuples.
pub fn brute_optima(inst: &PatternInstance) -> (u64, Vec<Vec<Symbol>>) {
    let tuples = all_offset_tuples(inst);
    let mut best = u64::MAX;
    let mut arg = Vec::new();
    for p in all_patterns(inst.alphabet().len(), inst.pattern_length()) {
        let c = tuples.iter().map(|t| cost_with_offsets(inst, &p, t)).min().unwrap();
        if c < best {
            best = c;
            arg.clear();
        }
        if c == best {
            arg.push(p);
        }
    }
    (best, arg)
}
