//! Execution policy for the data-parallel sweeps.
//!
//! With the `parallel` feature the parallel branch runs on rayon's global pool;
//! without it every policy degrades to the sequential loop. Results are always
//! returned in input order, so output never depends on the thread count.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// Order-preserving map over a slice.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// Order-preserving map over an index range.
pub fn map_range<R, F>(exec: Exec, range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return range.into_par_iter().map(f).collect();
    }
    let _ = exec;
    range.map(f).collect()
}

/// Splits `0..len` into roughly `pieces` contiguous chunks.
pub fn chunks(len: usize, pieces: usize) -> Vec<Range<usize>> {
    let pieces = pieces.max(1).min(len.max(1));
    let step = len.div_ceil(pieces).max(1);
    (0..len).step_by(step).map(|s| s..(s + step).min(len)).collect()
}

/// Number of chunks worth creating for the current pool.
pub fn suggested_chunks(exec: Exec) -> usize {
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        return rayon::current_num_threads() * 4;
    }
    let _ = exec;
    1
}

/// Configures the global pool size. A no-op without the `parallel` feature or
/// when the pool was already initialised.
pub fn set_jobs(jobs: usize) {
    #[cfg(feature = "parallel")]
    {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let _ = jobs;
}
