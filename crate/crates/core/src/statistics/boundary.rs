//! Left boundary vectors and their sums.
//!
//! Base coordinate `j` is the largest `i < j` with π(i) > π(j), or 0 when no
//! such `i` exists. Its sum counts inversions plus certified non-inversions.

use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LbVariant {
    Base,
    /// largest `i <= j - k` with π(i) > π(j)
    AtLeast(usize),
    /// windowed to the last `k` positions before `j`
    AtMost(usize),
    /// 1 iff `j > k` and π(j-k) > π(j)
    Exactly(usize),
}

impl LbVariant {
    /// From the names `base`, `ge_k`, `le_k`, `eq_k` plus an optional step.
    pub fn new(name: &str, k: Option<usize>) -> Result<Self> {
        let need_k = || match k {
            None => Err(Error::MissingParameterK),
            Some(0) => Err(Error::BadParams("k must be at least 1".into())),
            Some(k) => Ok(k),
        };
        match name {
            "base" => Ok(LbVariant::Base),
            "ge_k" => Ok(LbVariant::AtLeast(need_k()?)),
            "le_k" => Ok(LbVariant::AtMost(need_k()?)),
            "eq_k" => Ok(LbVariant::Exactly(need_k()?)),
            other => Err(Error::BadParams(format!("unknown lb variant {other:?}"))),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LbVariant::Base => "base",
            LbVariant::AtLeast(_) => "ge_k",
            LbVariant::AtMost(_) => "le_k",
            LbVariant::Exactly(_) => "eq_k",
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            LbVariant::Base => None,
            LbVariant::AtLeast(k) | LbVariant::AtMost(k) | LbVariant::Exactly(k) => Some(k),
        }
    }
}

impl fmt::Display for LbVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k() {
            Some(k) => write!(f, "{}(k={k})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

pub fn lb_vector(pi: &Permutation, variant: LbVariant) -> Vec<u64> {
    let n = pi.rank();
    (1..=n).map(|j| coordinate(pi, variant, j)).collect()
}

pub fn lbsum(pi: &Permutation, variant: LbVariant) -> u64 {
    let n = pi.rank();
    (1..=n).map(|j| coordinate(pi, variant, j)).sum()
}

/// Largest `i` in `lo..hi` (1-based, `lo >= 1`) with π(i) > π(j).
fn last_greater(pi: &Permutation, lo: usize, hi: usize, j: usize) -> Option<usize> {
    let target = pi.at(j);
    (lo..hi).rev().find(|&i| pi.at(i) > target)
}

fn coordinate(pi: &Permutation, variant: LbVariant, j: usize) -> u64 {
    match variant {
        LbVariant::Base => last_greater(pi, 1, j, j).unwrap_or(0) as u64,
        LbVariant::AtLeast(k) => {
            if j <= k {
                return 0;
            }
            last_greater(pi, 1, j - k + 1, j).unwrap_or(0) as u64
        }
        LbVariant::AtMost(k) => {
            // Sentinel lo sits just left of the window j-k..j-1; the
            // coordinate counts window positions up to the last larger entry.
            let lo = j.saturating_sub(k + 1);
            match last_greater(pi, lo.max(1), j, j) {
                Some(i) if i > lo => (i - lo) as u64,
                _ => 0,
            }
        }
        LbVariant::Exactly(k) => u64::from(j > k && pi.at(j - k) > pi.at(j)),
    }
}
