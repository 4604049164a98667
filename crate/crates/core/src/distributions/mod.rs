//! Distribution polynomials Σ_{π ∈ S_n} x^{stat(π)}.
//!
//! Every statistic has a brute-force path. Where a closed form or recurrence
//! exists it lives in [`closed`] and can be cross-checked against brute force.

pub mod closed;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::enumeration::{self, Lexicographic, Sweep};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::poly::special::{eulerian, q_factorial};
use crate::poly::IntPoly;
use crate::statistics::{ninvsum, zone_vector, PairKind, Statistic};

pub use closed::{
    ipcni_constant_term, ipcni_special, k1k2_extremal, kstep_closed, kstep_zero_count, le_k_degree,
    le_k_special, modinv_last_step, modinv_leading, zone_coordinate_dist, IpcniCase, LeKCase,
};

/// Exact distribution of `stat` over S_n by exhaustive enumeration.
pub fn brute(stat: &Statistic, n: usize, sweep: &Sweep) -> Result<IntPoly> {
    brute_by(n, sweep, |p| stat.evaluate(p))
}

/// Exact distribution of an arbitrary statistic over S_n.
pub fn brute_by<F>(n: usize, sweep: &Sweep, stat: F) -> Result<IntPoly>
where
    F: Fn(&Permutation) -> u64 + Sync,
{
    Ok(IntPoly::from_counts(&enumeration::tally(n, sweep, stat)?))
}

/// Σ_π q^{z_k(π)} for one coordinate of the zone-crossing vector, by brute force.
pub fn zone_coordinate_brute(n: usize, k: usize, kind: PairKind, sweep: &Sweep) -> Result<IntPoly> {
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    brute_by(n, sweep, |p| zone_vector(p, kind, false)[k - 1])
}

/// N_n by inserting the maximum into every slot of every π ∈ S_{n-1}:
/// slot `k` adds C(k+1, 2) new non-inversions' worth of gap plus one unit
/// per non-inversion straddling the slot.
pub fn ninvsum_recurrence(n: usize, sweep: &Sweep) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if n == 1 {
        return Ok(IntPoly::one());
    }
    let m = n - 1;
    sweep.check(m)?;
    let block = |(start, end): (u64, u64)| -> Vec<u64> {
        let mut hist = vec![0u64; binom3(n + 1) + 1];
        let mut it = Lexicographic::range(m, start, end, sweep).expect("rank checked");
        while let Some(p) = it.advance() {
            let base = ninvsum(p) as usize;
            let zone = zone_vector(p, PairKind::NonInversions, true);
            for (k, &z) in zone.iter().enumerate() {
                hist[k * (k + 1) / 2 + z as usize + base] += 1;
            }
        }
        hist
    };
    let blocks = enumeration::partition(m, sweep.jobs);
    let hist = blocks
        .into_par_iter()
        .map(block)
        .reduce(Vec::new, |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        });
    Ok(IntPoly::from_counts(&hist))
}

fn binom3(m: usize) -> usize {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Method {
    Brute,
    Closed,
    Recurrence,
    #[default]
    Auto,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Brute => "brute",
            Method::Closed => "closed",
            Method::Recurrence => "recurrence",
            Method::Auto => "auto",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(Method::Brute),
            "closed" => Ok(Method::Closed),
            "recurrence" => Ok(Method::Recurrence),
            "auto" => Ok(Method::Auto),
            other => Err(Error::BadParams(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionRequest {
    pub stat: Statistic,
    pub n: usize,
    pub method: Method,
    /// Also run brute force and fail on any coefficient difference.
    pub cross_check: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    pub poly: IntPoly,
    /// The method that produced `poly`; never `Auto`.
    pub method: Method,
    pub cross_checked: bool,
}

impl DistributionRequest {
    pub fn new(stat: Statistic, n: usize) -> Self {
        DistributionRequest {
            stat,
            n,
            method: Method::Auto,
            cross_check: false,
        }
    }

    pub fn method(mut self, method: Method) -> Self {
        self.method = method;
        self
    }

    pub fn cross_check(mut self, on: bool) -> Self {
        self.cross_check = on;
        self
    }

    pub fn compute(&self, sweep: &Sweep) -> Result<Distribution> {
        if self.n == 0 {
            return Err(Error::ZeroRank);
        }
        let (poly, method) = match self.method {
            Method::Brute => (brute(&self.stat, self.n, sweep)?, Method::Brute),
            Method::Closed => (self.closed_form()?.ok_or_else(|| self.unavailable(Method::Closed))?, Method::Closed),
            Method::Recurrence => (
                self.recurrence(sweep)?.ok_or_else(|| self.unavailable(Method::Recurrence))?,
                Method::Recurrence,
            ),
            Method::Auto => {
                if let Some(p) = self.closed_form()? {
                    (p, Method::Closed)
                } else if let Some(p) = self.recurrence(sweep)? {
                    (p, Method::Recurrence)
                } else {
                    (brute(&self.stat, self.n, sweep)?, Method::Brute)
                }
            }
        };
        let cross_checked = self.cross_check && method != Method::Brute;
        if cross_checked {
            let reference = brute(&self.stat, self.n, sweep)?;
            if reference != poly {
                return Err(Error::Mismatch(format!(
                    "{} at n={}: {method} gives {poly}, brute force gives {reference}",
                    self.stat, self.n
                )));
            }
        }
        Ok(Distribution {
            poly,
            method,
            cross_checked,
        })
    }

    fn unavailable(&self, method: Method) -> Error {
        Error::MethodUnavailable {
            method: method.name(),
            what: format!("{} at n={}", self.stat, self.n),
        }
    }

    /// The closed form covering this request, if any.
    fn closed_form(&self) -> Result<Option<IntPoly>> {
        let n = self.n;
        let out = match self.stat {
            Statistic::InvK { k } | Statistic::NinvK { k } => Some(kstep_closed(n, k)?),
            Statistic::InvLeK { k } => {
                if k == 1 {
                    Some(eulerian(n))
                } else if k + 1 >= n {
                    Some(q_factorial(n))
                } else if k + 2 == n {
                    Some(le_k_special(n, LeKCase::RankMinusTwo)?)
                } else {
                    None
                }
            }
            Statistic::ModInv { d: 2, k } if n >= 2 && k + 1 == n => Some(modinv_last_step(n)?),
            Statistic::Ipcni { k } if n >= 2 && k + 1 == n => {
                Some(ipcni_special(n, IpcniCase::RankMinusOne)?)
            }
            Statistic::Ipcni { k } if n >= 4 && k + 2 == n => {
                Some(ipcni_special(n, IpcniCase::RankMinusTwo)?)
            }
            Statistic::Ipcni { k } if k >= n => Some(IntPoly::constant(crate::combinat::factorial(n))),
            _ => None,
        };
        Ok(out)
    }

    fn recurrence(&self, sweep: &Sweep) -> Result<Option<IntPoly>> {
        match self.stat {
            Statistic::NinvSum => Ok(Some(ninvsum_recurrence(self.n, sweep)?)),
            _ => Ok(None),
        }
    }
}

/// n! as a big integer, the mass of every distribution over S_n.
pub fn total_mass(n: usize) -> BigInt {
    crate::combinat::factorial(n)
}
