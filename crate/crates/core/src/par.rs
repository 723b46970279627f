//! Sharded scans over an integer index space.
//!
//! With the `parallel` feature (default) scans run on a rayon pool; without
//! it, or with one thread, they run sequentially. Either way the merged
//! result depends only on the index space: a failing scan reports the
//! minimum failing index.

use std::ops::Range;

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicU64, Ordering};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Indices per shard.
const SHARD: u64 = 1 << 12;

/// How a scan is executed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Exec {
    /// Worker cap; `None` uses the machine parallelism, `Some(1)` is sequential.
    pub threads: Option<usize>,
}

impl Exec {
    pub const SEQUENTIAL: Exec = Exec { threads: Some(1) };

    pub fn with_threads(threads: usize) -> Self {
        Exec {
            threads: Some(threads.max(1)),
        }
    }

    pub fn is_sequential(&self) -> bool {
        !cfg!(feature = "parallel") || self.threads == Some(1)
    }

    /// Runs `f` inside a pool sized for this executor.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        #[cfg(feature = "parallel")]
        if let Some(t) = self.threads.filter(|&t| t > 1) {
            return rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(f);
        }
        f()
    }
}

/// Result of checking `value(i) >= target` for every index of a range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// Every index met the target; `min_value` is the smallest value seen.
    Pass { scanned: u64, min_value: u64 },
    /// The least index whose value fell short, and that value.
    Fail { index: u64, value: u64 },
}

impl ScanOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, ScanOutcome::Pass { .. })
    }
}

fn scan_sequential<F>(range: Range<u64>, target: u64, value: &F) -> ScanOutcome
where
    F: Fn(u64) -> u64,
{
    let scanned = range.end - range.start;
    let mut min_value = u64::MAX;
    for i in range {
        let v = value(i);
        if v < target {
            return ScanOutcome::Fail { index: i, value: v };
        }
        min_value = min_value.min(v);
    }
    ScanOutcome::Pass { scanned, min_value }
}

/// Checks `value(i) >= target` over `0..count`.
pub fn scan<F>(count: u64, target: u64, exec: Exec, value: F) -> ScanOutcome
where
    F: Fn(u64) -> u64 + Sync,
{
    if exec.is_sequential() || count <= SHARD {
        return scan_sequential(0..count, target, &value);
    }
    #[cfg(feature = "parallel")]
    {
        exec.install(|| scan_parallel(count, target, &value))
    }
    #[cfg(not(feature = "parallel"))]
    unreachable!()
}

#[cfg(feature = "parallel")]
fn scan_parallel<F>(count: u64, target: u64, value: &F) -> ScanOutcome
where
    F: Fn(u64) -> u64 + Sync,
{
    let first_fail = AtomicU64::new(u64::MAX);
    let shards = count.div_ceil(SHARD);
    let (min_value, fail) = (0..shards)
        .into_par_iter()
        .map(|s| {
            let start = s * SHARD;
            // a failure below this shard already decides the scan
            if start > first_fail.load(Ordering::Relaxed) {
                return (u64::MAX, None);
            }
            match scan_sequential(start..(start + SHARD).min(count), target, value) {
                ScanOutcome::Pass { min_value, .. } => (min_value, None),
                ScanOutcome::Fail { index, value } => {
                    first_fail.fetch_min(index, Ordering::Relaxed);
                    (u64::MAX, Some((index, value)))
                }
            }
        })
        .reduce(
            || (u64::MAX, None),
            |(ma, fa), (mb, fb)| {
                let fail = match (fa, fb) {
                    (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                    (a, b) => a.or(b),
                };
                (ma.min(mb), fail)
            },
        );
    match fail {
        Some((index, value)) => ScanOutcome::Fail { index, value },
        None => ScanOutcome::Pass {
            scanned: count,
            min_value,
        },
    }
}

/// Applies `f` to every index of `0..count` and folds the results with an
/// associative, commutative `merge`.
pub fn map_reduce<T, F, M>(count: u64, exec: Exec, identity: T, f: F, merge: M) -> T
where
    T: Send + Sync + Clone,
    F: Fn(u64) -> T + Sync,
    M: Fn(T, T) -> T + Sync,
{
    if exec.is_sequential() || count <= SHARD {
        return (0..count).map(&f).fold(identity, &merge);
    }
    #[cfg(feature = "parallel")]
    {
        exec.install(|| {
            (0..count.div_ceil(SHARD))
                .into_par_iter()
                .map(|s| {
                    let start = s * SHARD;
                    (start..(start + SHARD).min(count))
                        .map(&f)
                        .fold(identity.clone(), &merge)
                })
                .reduce(|| identity.clone(), &merge)
        })
    }
    #[cfg(not(feature = "parallel"))]
    unreachable!()
}
