//! Per-permutation statistics built on inversions and non-inversions.
//!
//! A pair `(a, b)` always means positions `1 <= a < b <= n`. It is an
//! inversion when π(a) > π(b) and a non-inversion otherwise. The counting
//! functions here never materialize pair sets; `pairs` does so on request.

mod boundary;
mod descriptor;
mod zone;

pub use boundary::{lb_vector, lbsum, LbVariant};
pub use descriptor::{StatParams, Statistic, TAGS as STATISTIC_TAGS};
pub use zone::{from_augmented_ninv_zone_vector, zone_vector};

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairKind {
    Inversions,
    NonInversions,
}

impl PairKind {
    fn holds(self, left: usize, right: usize) -> bool {
        match self {
            PairKind::Inversions => left > right,
            PairKind::NonInversions => left < right,
        }
    }
}

impl FromStr for PairKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "inv" | "inversions" => Ok(PairKind::Inversions),
            "ninv" | "non_inversions" => Ok(PairKind::NonInversions),
            other => Err(Error::BadParams(format!("unknown pair kind {other:?}"))),
        }
    }
}

/// Position pairs `(a, b)`, `a < b`, in lexicographic order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PairSet {
    pairs: Vec<(usize, usize)>,
}

impl PairSet {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (usize, usize)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn as_slice(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

pub fn pairs(pi: &Permutation, kind: PairKind) -> PairSet {
    let v = pi.values();
    let n = v.len();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if kind.holds(v[a], v[b]) {
                pairs.push((a + 1, b + 1));
            }
        }
    }
    PairSet { pairs }
}

/// Σ f(b - a) over pairs of the given kind.
fn pair_fold(pi: &Permutation, kind: PairKind, f: impl Fn(usize) -> u64) -> u64 {
    let v = pi.values();
    let mut acc = 0;
    for a in 0..v.len() {
        for b in a + 1..v.len() {
            if kind.holds(v[a], v[b]) {
                acc += f(b - a);
            }
        }
    }
    acc
}

/// |INV(π)|
pub fn inversions(pi: &Permutation) -> u64 {
    pair_fold(pi, PairKind::Inversions, |_| 1)
}

pub fn descents(pi: &Permutation) -> u64 {
    pi.values().windows(2).filter(|w| w[0] > w[1]).count() as u64
}

pub fn invsum(pi: &Permutation) -> u64 {
    pair_fold(pi, PairKind::Inversions, |gap| gap as u64)
}

pub fn ninvsum(pi: &Permutation) -> u64 {
    pair_fold(pi, PairKind::NonInversions, |gap| gap as u64)
}

/// 1·π, the dot product with the identity of the same rank.
pub fn cosine(pi: &Permutation) -> u64 {
    pi.values()
        .iter()
        .enumerate()
        .map(|(i, &v)| (i as u64 + 1) * v as u64)
        .sum()
}

fn step_count(pi: &Permutation, k: usize, kind: PairKind) -> u64 {
    let v = pi.values();
    if k == 0 || k >= v.len() {
        return 0;
    }
    v.iter()
        .zip(&v[k..])
        .filter(|&(&a, &b)| kind.holds(a, b))
        .count() as u64
}

/// Inversions with position gap exactly `k`.
pub fn inv_k(pi: &Permutation, k: usize) -> u64 {
    step_count(pi, k, PairKind::Inversions)
}

/// Non-inversions with position gap exactly `k`.
pub fn ninv_k(pi: &Permutation, k: usize) -> u64 {
    step_count(pi, k, PairKind::NonInversions)
}

/// Pairs with position gap `k1` and value drop π(a) - π(b) = `k2`.
pub fn inv_k1k2(pi: &Permutation, k1: usize, k2: usize) -> u64 {
    let v = pi.values();
    if k1 == 0 || k1 >= v.len() {
        return 0;
    }
    v.iter()
        .zip(&v[k1..])
        .filter(|&(&a, &b)| a > b && a - b == k2)
        .count() as u64
}

/// Inversions with position gap at most `k`.
pub fn inv_le_k(pi: &Permutation, k: usize) -> u64 {
    pair_fold(pi, PairKind::Inversions, |gap| u64::from(gap <= k))
}

/// `k`-step inversions whose top value π(a) is divisible by `d`.
///
/// Panics if `d` is zero.
pub fn modinv(pi: &Permutation, d: usize, k: usize) -> u64 {
    let v = pi.values();
    if k == 0 || k >= v.len() {
        return 0;
    }
    v.iter()
        .zip(&v[k..])
        .filter(|&(&a, &b)| a > b && a % d == 0)
        .count() as u64
}

/// Is the non-inversion `(a, b)` (1-based) certified: does the interior
/// maximum exceed π(b)?
fn is_certified(v: &[usize], a: usize, b: usize) -> bool {
    v[a - 1] < v[b - 1] && v[a..b - 1].iter().any(|&c| c > v[b - 1])
}

/// Certified non-inversions `(a, a+k)`, counted once per endpoint pair.
/// Always 0 for `k < 2`.
pub fn certified_ninv_k(pi: &Permutation, k: usize) -> u64 {
    let v = pi.values();
    let n = v.len();
    if k < 2 || k >= n {
        return 0;
    }
    (1..=n - k).filter(|&a| is_certified(v, a, a + k)).count() as u64
}

/// All certified non-inversions, any gap.
pub fn certified_ninv(pi: &Permutation) -> u64 {
    let v = pi.values();
    let n = v.len();
    let mut count = 0;
    for a in 0..n {
        let mut interior_max = 0;
        for b in a + 1..n {
            if v[a] < v[b] && interior_max > v[b] {
                count += 1;
            }
            interior_max = interior_max.max(v[b]);
        }
    }
    count
}

/// k-step inversions plus certified k-step non-inversions.
pub fn ipcni_k(pi: &Permutation, k: usize) -> u64 {
    inv_k(pi, k) + certified_ninv_k(pi, k)
}

/// The `k` interleaved k-step runs: run `i` (1-based) reads positions
/// `i, i+k, i+2k, ...` and is flattened to a permutation of its own length.
pub fn k_step_runs(pi: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    let n = pi.rank();
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let v = pi.values();
    (0..k)
        .map(|i| {
            let run: Vec<usize> = v[i..].iter().step_by(k).copied().collect();
            Permutation::flatten(&run)
        })
        .collect()
}
