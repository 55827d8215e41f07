//! Execution policy for the data-parallel loops.
//!
//! Every enumeration in this crate is split into a fixed list of tasks whose
//! boundaries depend only on the input, never on the number of workers. The
//! per-task results are then folded in task order, so `Sequential` and
//! `Parallel` produce identical values (including explored-state counters).
//!
//! Without the `parallel` feature, `Exec::Parallel` silently runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when this policy will actually fan out to worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Runs `task` on every input and returns the outputs in input order.
pub fn map_tasks<I, T, F>(exec: Exec, inputs: Vec<I>, task: F) -> Vec<T>
where
    I: Send,
    T: Send,
    F: Fn(I) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return inputs.into_par_iter().map(task).collect();
    }
    let _ = exec;
    inputs.into_iter().map(task).collect()
}

/// Splits `0..total` into at most `max_chunks` contiguous ranges of near-equal size.
pub fn chunk_ranges(total: u64, max_chunks: u64) -> Vec<std::ops::Range<u64>> {
    if total == 0 {
        return Vec::new();
    }
    let chunks = max_chunks.clamp(1, total);
    let base = total / chunks;
    let extra = total % chunks;
    let mut out = Vec::with_capacity(chunks as usize);
    let mut start = 0;
    for c in 0..chunks {
        let len = base + u64::from(c < extra);
        out.push(start..start + len);
        start += len;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range_exactly() {
        for total in [0u64, 1, 7, 64, 1000] {
            for max in [1u64, 3, 64, 5000] {
                let ranges = chunk_ranges(total, max);
                let mut next = 0;
                for r in &ranges {
                    assert_eq!(r.start, next);
                    assert!(r.end > r.start);
                    next = r.end;
                }
                assert_eq!(next, total);
            }
        }
    }

    #[test]
    fn map_tasks_preserves_order() {
        let seq = map_tasks(Exec::Sequential, (0..100).collect(), |x: u32| x * x);
        let par = map_tasks(Exec::Parallel, (0..100).collect(), |x: u32| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[7], 49);
    }
}
