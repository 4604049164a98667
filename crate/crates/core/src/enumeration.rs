//! Lexicographic enumeration of S_n and the parallel tally engine built on it.
//!
//! The index space `0..n!` is split into contiguous blocks; each block is
//! walked with the in-place successor step, so a sweep never materializes
//! S_n. Tallies are merged by addition and do not depend on the block count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const DEFAULT_MAX_RANK: usize = 10;
/// 20! is the largest factorial that fits in a u64 index.
pub const HARD_MAX_RANK: usize = 20;
pub const MAX_RANK_ENV: &str = "PERMSTAT_MAX_RANK";

/// Limits and parallelism for exhaustive sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sweep {
    pub max_rank: usize,
    /// Number of index blocks processed in parallel; 1 means sequential.
    pub jobs: usize,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            max_rank: DEFAULT_MAX_RANK,
            jobs: 1,
        }
    }
}

impl Sweep {
    pub fn with_max_rank(max_rank: usize) -> Self {
        Sweep {
            max_rank,
            ..Sweep::default()
        }
    }

    pub fn jobs(self, jobs: usize) -> Self {
        Sweep {
            jobs: jobs.max(1),
            ..self
        }
    }

    /// Default sweep with the cap taken from `PERMSTAT_MAX_RANK` when set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(MAX_RANK_ENV) {
            Ok(raw) => {
                let max_rank = raw.trim().parse::<usize>().map_err(|_| {
                    Error::BadParams(format!("{MAX_RANK_ENV}={raw:?} is not a rank"))
                })?;
                Ok(Sweep::with_max_rank(max_rank))
            }
            Err(_) => Ok(Sweep::default()),
        }
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let cap = self.max_rank.min(HARD_MAX_RANK);
        if n > cap {
            return Err(Error::RankCapExceeded { n, cap });
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The `index`-th permutation of S_n in lexicographic order (factorial base).
pub fn unrank(n: usize, mut index: u64) -> Permutation {
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut values = Vec::with_capacity(n);
    for i in (0..n).rev() {
        let f = factorial(i);
        let d = (index / f) as usize;
        index %= f;
        values.push(pool.remove(d));
    }
    Permutation::from_vec_unchecked(values)
}

/// A contiguous block of S_n in lexicographic order.
#[derive(Debug, Clone)]
pub struct Lexicographic {
    current: Permutation,
    remaining: u64,
    started: bool,
}

impl Lexicographic {
    pub fn range(n: usize, start: u64, end: u64, sweep: &Sweep) -> Result<Self> {
        sweep.check(n)?;
        let total = factorial(n);
        let end = end.min(total);
        let start = start.min(end);
        Ok(Lexicographic {
            current: unrank(n, start.min(total - 1)),
            remaining: end - start,
            started: false,
        })
    }

    /// Lending step: yields a borrow of the internal buffer, no allocation.
    pub fn advance(&mut self) -> Option<&Permutation> {
        if self.remaining == 0 {
            return None;
        }
        if self.started {
            self.current.next_lexicographic();
        }
        self.started = true;
        self.remaining -= 1;
        Some(&self.current)
    }
}

impl Iterator for Lexicographic {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        self.advance().cloned()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for Lexicographic {}

/// All of S_n in lexicographic order.
pub fn enumerate(n: usize, sweep: &Sweep) -> Result<Lexicographic> {
    Lexicographic::range(n, 0, u64::MAX, sweep)
}

/// Splits `0..n!` into `parts` contiguous, disjoint, covering blocks.
pub fn partition(n: usize, parts: usize) -> Vec<(u64, u64)> {
    let total = factorial(n);
    let parts = (parts.max(1) as u64).min(total);
    (0..parts)
        .map(|i| (total * i / parts, total * (i + 1) / parts))
        .collect()
}

/// Calls `f` on every permutation of S_n, sequentially.
pub fn for_each(n: usize, sweep: &Sweep, mut f: impl FnMut(&Permutation)) -> Result<()> {
    let mut it = enumerate(n, sweep)?;
    while let Some(p) = it.advance() {
        f(p);
    }
    Ok(())
}

/// Histogram of `stat` over S_n: entry `v` counts permutations with value `v`.
pub fn tally<F>(n: usize, sweep: &Sweep, stat: F) -> Result<Vec<u64>>
where
    F: Fn(&Permutation) -> u64 + Sync,
{
    sweep.check(n)?;
    let block = |(start, end): (u64, u64)| -> Vec<u64> {
        let mut hist = Vec::new();
        let mut it = Lexicographic::range(n, start, end, sweep).expect("rank checked");
        while let Some(p) = it.advance() {
            let v = stat(p) as usize;
            if v >= hist.len() {
                hist.resize(v + 1, 0);
            }
            hist[v] += 1;
        }
        hist
    };
    let blocks = partition(n, sweep.jobs);
    let hist = if blocks.len() <= 1 {
        blocks.into_iter().map(block).next().unwrap_or_default()
    } else {
        blocks
            .into_par_iter()
            .map(block)
            .reduce(Vec::new, merge_histograms)
    };
    Ok(hist)
}

fn merge_histograms(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    if a.len() < b.len() {
        a.resize(b.len(), 0);
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// First permutation of S_n on which `pred` fails, searched in parallel blocks.
pub fn find_counterexample<F>(n: usize, sweep: &Sweep, pred: F) -> Result<Option<Permutation>>
where
    F: Fn(&Permutation) -> bool + Sync,
{
    sweep.check(n)?;
    let found = partition(n, sweep.jobs)
        .into_par_iter()
        .map(|(start, end)| {
            let mut it = Lexicographic::range(n, start, end, sweep).expect("rank checked");
            while let Some(p) = it.advance() {
                if !pred(p) {
                    return Some(p.clone());
                }
            }
            None
        })
        .find_first(Option::is_some)
        .flatten();
    Ok(found)
}
