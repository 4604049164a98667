//! Invariant suites, run exhaustively over S_n for every n up to a bound.
//!
//! Per-permutation suites are also exposed through [`check_permutation`] so
//! callers can sample larger ranks.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{binomial, binomial_u64, factorial};
use crate::cosine;
use crate::distributions::{self as dist, closed::*};
use crate::enumeration::{self, Sweep};
use crate::error::{Error, Result};
use crate::mesh::{builtin, modinv_top_total, PatternParams};
use crate::permutation::Permutation;
use crate::poly::special::{eulerian, nabla, q_binomial, q_factorial};
use crate::poly::IntPoly;
use crate::statistics::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Permutation,
    Sums,
    Zone,
    Steps,
    Boundary,
    Patterns,
    Polynomials,
    Distributions,
    Cosine,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Permutation,
        Suite::Sums,
        Suite::Zone,
        Suite::Steps,
        Suite::Boundary,
        Suite::Patterns,
        Suite::Polynomials,
        Suite::Distributions,
        Suite::Cosine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Permutation => "permutation",
            Suite::Sums => "sums",
            Suite::Zone => "zone",
            Suite::Steps => "steps",
            Suite::Boundary => "boundary",
            Suite::Patterns => "patterns",
            Suite::Polynomials => "polynomials",
            Suite::Distributions => "distributions",
            Suite::Cosine => "cosine",
        }
    }

    /// Whether the suite is a conjunction of per-permutation checks.
    pub fn is_pointwise(self) -> bool {
        matches!(
            self,
            Suite::Permutation | Suite::Sums | Suite::Zone | Suite::Steps | Suite::Boundary | Suite::Patterns
        )
    }

    /// A single suite name, or `all`.
    pub fn select(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            Ok(vec![name.parse()?])
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadParams(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Absent for checks that are not about a single permutation.
    pub permutation: Option<String>,
    pub check: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub range: String,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    fn new(suite: Suite, range: String, counterexample: Option<Counterexample>) -> Self {
        VerificationReport {
            suite: suite.name().to_owned(),
            range,
            status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
            counterexample,
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({})", self.suite, self.range)?;
        if let Some(c) = &self.counterexample {
            if let Some(p) = &c.permutation {
                write!(f, ": at [{p}]")?;
            }
            write!(f, " {}: expected {}, got {}", c.check, c.expected, c.actual)?;
        }
        Ok(())
    }
}

fn failure(check: impl Into<String>, expected: impl fmt::Display, actual: impl fmt::Display) -> Counterexample {
    Counterexample {
        permutation: None,
        check: check.into(),
        expected: expected.to_string(),
        actual: actual.to_string(),
    }
}

macro_rules! ensure_eq {
    ($check:expr, $expected:expr, $actual:expr) => {{
        let (expected, actual) = ($expected, $actual);
        if expected != actual {
            return Some(failure($check, format!("{expected:?}"), format!("{actual:?}")));
        }
    }};
}

/// Like `ensure_eq` but reports with `Display`, for polynomials.
macro_rules! ensure_show {
    ($check:expr, $expected:expr, $actual:expr) => {{
        let (expected, actual) = ($expected, $actual);
        if expected != actual {
            return Some(failure($check, &expected, &actual));
        }
    }};
}

macro_rules! ensure {
    ($check:expr, $cond:expr) => {{
        if !$cond {
            return Some(failure($check, true, false));
        }
    }};
}

/// Runs one suite for every rank `1..=max_n`.
pub fn run(suite: Suite, max_n: usize, sweep: &Sweep) -> Result<VerificationReport> {
    if max_n == 0 {
        return Err(Error::ZeroRank);
    }
    sweep.check(max_n)?;
    let range = format!("n=1..={max_n}");
    let found = if suite.is_pointwise() {
        pointwise(suite, max_n, sweep)?
    } else {
        match suite {
            Suite::Polynomials => polynomials(max_n, sweep)?,
            Suite::Distributions => distributions(max_n, sweep)?,
            _ => cosine_suite(max_n, sweep)?,
        }
    };
    Ok(VerificationReport::new(suite, range, found))
}

pub fn run_all(suites: &[Suite], max_n: usize, sweep: &Sweep) -> Result<Vec<VerificationReport>> {
    suites.iter().map(|&s| run(s, max_n, sweep)).collect()
}

fn pointwise(suite: Suite, max_n: usize, sweep: &Sweep) -> Result<Option<Counterexample>> {
    for n in 1..=max_n {
        let bad = enumeration::find_counterexample(n, sweep, |p| check_permutation(suite, p).is_none())?;
        if let Some(p) = bad {
            return Ok(check_permutation(suite, &p));
        }
        if suite == Suite::Sums && n <= 6 {
            for pi in enumeration::enumerate(n, sweep)? {
                let bad = enumeration::find_counterexample(n, sweep, |rho| check_pair(&pi, rho).is_none())?;
                if let Some(rho) = bad {
                    return Ok(check_pair(&pi, &rho));
                }
            }
        }
    }
    Ok(None)
}

/// The first failed invariant of a pointwise suite at `pi`, if any.
/// Suites that are not pointwise always return `None`.
pub fn check_permutation(suite: Suite, pi: &Permutation) -> Option<Counterexample> {
    let found = match suite {
        Suite::Permutation => permutation_checks(pi),
        Suite::Sums => sum_checks(pi),
        Suite::Zone => zone_checks(pi),
        Suite::Steps => step_checks(pi),
        Suite::Boundary => boundary_checks(pi),
        Suite::Patterns => pattern_checks(pi),
        _ => None,
    };
    found.map(|c| Counterexample {
        permutation: Some(pi.to_string()),
        ..c
    })
}

/// ninvsum(π∘ρ) = π·ρ⁻¹ − C(n+2, 3).
pub fn check_pair(pi: &Permutation, rho: &Permutation) -> Option<Counterexample> {
    let composed = pi.compose(rho).ok()?;
    let dot = pi.dot(&rho.inverse()).ok()?;
    let floor = binomial_u64(pi.rank() as u64 + 2, 3);
    if ninvsum(&composed) + floor != dot {
        return Some(Counterexample {
            permutation: Some(format!("{pi} ; {rho}")),
            check: "ninvsum(pi o rho) + C(n+2,3) = pi . rho^-1".into(),
            expected: dot.to_string(),
            actual: (ninvsum(&composed) + floor).to_string(),
        });
    }
    None
}

fn permutation_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank();
    let id = Permutation::identity(n).ok()?;
    ensure_eq!("reverse is an involution", pi, &pi.reverse().reverse());
    ensure_eq!("complement is an involution", pi, &pi.complement().complement());
    ensure_eq!("inverse is an involution", pi, &pi.inverse().inverse());
    ensure_eq!("pi o pi^-1 = id", &id, &pi.compose(&pi.inverse()).ok()?);
    ensure_eq!("pi^-1 o pi = id", &id, &pi.inverse().compose(pi).ok()?);
    ensure_eq!("id o pi = pi", pi, &id.compose(pi).ok()?);
    ensure_eq!("flatten fixes pi", pi, &Permutation::flatten(pi.values()).ok()?);
    let r = pi.reverse();
    ensure_eq!("dot is symmetric", pi.dot(&r).ok()?, r.dot(pi).ok()?);
    ensure_eq!("direct sum rank", 2 * n, pi.direct_sum(&r).rank());
    ensure_eq!("skew sum rank", 2 * n, pi.skew_sum(&r).rank());
    ensure_eq!("text round trip", Some(pi.clone()), pi.to_string().parse::<Permutation>().ok());
    let one = Permutation::identity(1).ok()?;
    ensure_eq!("insert at 0 is 1 skew pi", one.skew_sum(pi), pi.insert_max(0).ok()?);
    None
}

fn sum_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank() as u64;
    let tetra = binomial_u64(n + 1, 3);
    ensure_eq!("invsum + ninvsum = C(n+1,3)", tetra, invsum(pi) + ninvsum(pi));
    ensure_eq!("ninvsum(pi^i) = ninvsum(pi)", ninvsum(pi), ninvsum(&pi.inverse()));
    ensure_eq!("ninvsum(pi^r) = invsum(pi)", invsum(pi), ninvsum(&pi.reverse()));
    ensure_eq!("ninvsum(pi^c) = invsum(pi)", invsum(pi), ninvsum(&pi.complement()));
    ensure_eq!("cosine = C(n+2,3) + ninvsum", binomial_u64(n + 2, 3) + ninvsum(pi), cosine(pi));
    let ninv = pairs(pi, PairKind::NonInversions).len() as u64;
    ensure_eq!("|INV| + |NINV| = C(n,2)", binomial_u64(n, 2), inversions(pi) + ninv);
    let by_pairs: u64 = pairs(pi, PairKind::NonInversions).iter().map(|(a, b)| (b - a) as u64).sum();
    ensure_eq!("ninvsum over materialized pairs", by_pairs, ninvsum(pi));
    None
}

fn zone_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank();
    let inv = zone_vector(pi, PairKind::Inversions, false);
    let ninv = zone_vector(pi, PairKind::NonInversions, false);
    ensure_eq!("sum of ninv zone vector = ninvsum", ninvsum(pi), ninv.iter().sum::<u64>());
    for k in 1..n {
        ensure_eq!(
            format!("zone coordinates {k} sum to k(n-k)"),
            (k * (n - k)) as u64,
            inv[k - 1] + ninv[k - 1]
        );
    }
    ensure_eq!(
        "ninv zone vector of complement = inv zone vector",
        &inv,
        &zone_vector(&pi.complement(), PairKind::NonInversions, false)
    );
    let mut reversed = inv.clone();
    reversed.reverse();
    ensure_eq!(
        "ninv zone vector of reverse = reversed inv zone vector",
        reversed,
        zone_vector(&pi.reverse(), PairKind::NonInversions, false)
    );
    let aug = zone_vector(pi, PairKind::NonInversions, true);
    let signed: Vec<i64> = aug.iter().map(|&v| v as i64).collect();
    ensure_eq!("reconstruction round trip", Ok(pi.clone()), from_augmented_ninv_zone_vector(&signed));
    for k in 0..=n {
        let grown = pi.insert_max(k).ok()?;
        let mut expected: Vec<u64> = (0..=k).map(|i| aug[i] + i as u64).collect();
        expected.extend_from_slice(&aug[k..]);
        ensure_eq!(
            format!("insertion at {k} shifts the zone vector"),
            expected,
            zone_vector(&grown, PairKind::NonInversions, true)
        );
        ensure_eq!(
            format!("insertion at {k} adds C(k+1,2) + a_k"),
            ninvsum(pi) + (k * (k + 1) / 2) as u64 + aug[k],
            ninvsum(&grown)
        );
    }
    None
}

/// Pairs of values (v, v+k) with v+k placed before v, i.e. inv_k read on π⁻¹.
fn value_gap_inversions(sigma: &Permutation, k: usize) -> u64 {
    let pos = sigma.inverse();
    (1..=sigma.rank().saturating_sub(k))
        .filter(|&v| pos.at(v + k) < pos.at(v))
        .count() as u64
}

fn certified_pairs_by_triples(pi: &Permutation, k: usize) -> u64 {
    let v = pi.values();
    let n = v.len();
    let mut count = 0;
    for a in 0..n.saturating_sub(k) {
        let b = a + k;
        if (a + 1..b).any(|c| v[a] < v[b] && v[b] < v[c]) {
            count += 1;
        }
    }
    count
}

fn step_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank();
    let total = inversions(pi);
    let by_k: Vec<u64> = (1..n).map(|k| inv_k(pi, k)).collect();
    ensure_eq!("sum of inv_k = |INV|", total, by_k.iter().sum::<u64>());
    ensure_eq!(
        "sum of k inv_k = invsum",
        invsum(pi),
        by_k.iter().enumerate().map(|(i, c)| (i as u64 + 1) * c).sum::<u64>()
    );
    ensure_eq!("inv_le_1 = descents", descents(pi), inv_le_k(pi, 1));
    if n >= 2 {
        ensure_eq!("inv_le_(n-1) = |INV|", total, inv_le_k(pi, n - 1));
    }
    let mut k1k2 = 0;
    for k1 in 1..n {
        for k2 in 1..n {
            k1k2 += inv_k1k2(pi, k1, k2);
        }
    }
    ensure_eq!("sum of inv_(k1,k2) = |INV|", total, k1k2);
    for k in 1..=n {
        let c = inv_k(pi, k);
        ensure_eq!(format!("inv_{k}(pi) = ninv_{k}(pi^c)"), c, ninv_k(&pi.complement(), k));
        ensure_eq!(format!("inv_{k} as value gaps on pi^i"), c, value_gap_inversions(&pi.inverse(), k));
        let runs: u64 = k_step_runs(pi, k).ok()?.iter().map(descents).sum();
        ensure_eq!(format!("inv_{k} = descents of the {k}-step runs"), c, runs);
        ensure_eq!(format!("inv_le_{k} cumulative"), (1..=k).map(|j| inv_k(pi, j)).sum::<u64>(), inv_le_k(pi, k));
        ensure_eq!(
            format!("certified_{k} by triples"),
            if k >= 2 { certified_pairs_by_triples(pi, k) } else { 0 },
            certified_ninv_k(pi, k)
        );
        ensure_eq!(format!("ipcni_{k}"), c + certified_ninv_k(pi, k), ipcni_k(pi, k));
    }
    for d in 2..=3 {
        let tops = pairs(pi, PairKind::Inversions)
            .iter()
            .filter(|&(a, _)| pi.at(a) % d == 0)
            .count() as u64;
        ensure_eq!(format!("sum over k of modinv d={d}"), tops, (1..n).map(|k| modinv(pi, d, k)).sum::<u64>());
    }
    None
}

/// Non-inversions (i, j), j - i ≥ k, with some c in (i, j-k] above π(j).
fn ge_k_certified(pi: &Permutation, k: usize) -> u64 {
    let n = pi.rank();
    let mut count = 0;
    for j in 1..=n {
        for i in 1..j {
            if j - i >= k && pi.at(i) < pi.at(j) && (i + 1..=j - k).any(|c| pi.at(c) > pi.at(j)) {
                count += 1;
            }
        }
    }
    count
}

fn ge_k_inversions(pi: &Permutation, k: usize) -> u64 {
    let n = pi.rank();
    (k..n).map(|gap| inv_k(pi, gap)).sum()
}

fn boundary_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank();
    let total = inversions(pi);
    let certified: u64 = (2..n).map(|k| certified_ninv_k(pi, k)).sum();
    ensure_eq!("lbsum = |INV| + certified", total + certified_ninv(pi), lbsum(pi, LbVariant::Base));
    ensure_eq!("lbsum = |INV| + sum of certified_k", total + certified, lbsum(pi, LbVariant::Base));
    for k in 1..=n {
        ensure_eq!(format!("lbsum eq_{k} = inv_{k}"), inv_k(pi, k), lbsum(pi, LbVariant::Exactly(k)));
        ensure_eq!(
            format!("lbsum ge_{k}"),
            ge_k_inversions(pi, k) + ge_k_certified(pi, k),
            lbsum(pi, LbVariant::AtLeast(k))
        );
        let le_certified: u64 = (2..=k.min(n - 1)).map(|j| certified_ninv_k(pi, j)).sum();
        ensure_eq!(
            format!("lbsum le_{k}"),
            inv_le_k(pi, k) + le_certified,
            lbsum(pi, LbVariant::AtMost(k))
        );
        let tail_fixed = (k + 1..=n).all(|i| pi.at(i) == i);
        ensure_eq!(format!("ipcni_{k} = 0 iff pi = sigma (k+1)...n"), tail_fixed, ipcni_k(pi, k) == 0);
    }
    ensure_eq!("lb vector length", n, lb_vector(pi, LbVariant::Base).len());
    None
}

fn pattern_checks(pi: &Permutation) -> Option<Counterexample> {
    let n = pi.rank();
    let with = |k: usize| PatternParams {
        k: Some(k),
        ..PatternParams::default()
    };
    let mut sum = 0;
    let mut weighted = 0;
    for k in 1..n {
        let occ = builtin("kstep_inv", &with(k)).ok()?.occurrences(pi);
        ensure_eq!(format!("kstep_inv pattern k={k}"), inv_k(pi, k), occ);
        sum += occ;
        weighted += k as u64 * occ;
        ensure_eq!(
            format!("le_kstep_inv pattern k={k}"),
            inv_le_k(pi, k),
            builtin("le_kstep_inv", &with(k)).ok()?.occurrences(pi)
        );
        for k2 in 1..n {
            let params = PatternParams {
                k2: Some(k2),
                ..with(k)
            };
            ensure_eq!(
                format!("k1k2_inv pattern ({k},{k2})"),
                inv_k1k2(pi, k, k2),
                builtin("k1k2_inv", &params).ok()?.occurrences(pi)
            );
        }
        let params = PatternParams {
            n: Some(n),
            ..with(k)
        };
        ensure_eq!(
            format!("zcv_coord pattern k={k}"),
            zone_vector(pi, PairKind::Inversions, false)[k - 1],
            builtin("zcv_coord", &params).ok()?.occurrences(pi)
        );
        for d in 2..=3 {
            ensure_eq!(format!("modinv_top patterns d={d} k={k}"), modinv(pi, d, k), modinv_top_total(pi, d, k).ok()?);
        }
        if k >= 2 {
            let matches = builtin("certified_kstep", &with(k)).ok()?.matches(pi);
            let mut ends: Vec<(usize, usize)> = matches.iter().map(|m| (m[0], m[2])).collect();
            ends.dedup();
            ensure_eq!(format!("certified_kstep matches are one per pair k={k}"), matches.len(), ends.len());
            ensure_eq!(format!("certified_kstep pattern k={k}"), certified_ninv_k(pi, k), ends.len() as u64);
        }
    }
    ensure_eq!("kstep patterns sum to |INV|", inversions(pi), sum);
    ensure_eq!("weighted kstep patterns give invsum", invsum(pi), weighted);
    None
}

fn polynomials(max_n: usize, sweep: &Sweep) -> Result<Option<Counterexample>> {
    for k in 0..=8 {
        let lhs = nabla(k, &IntPoly::monomial(1, k))?.shift(k);
        let rhs: IntPoly = (0..=k).map(|j| IntPoly::monomial(j as i64 + 1, 2 * k - j)).sum();
        if lhs != rhs {
            return Ok(Some(failure(format!("x^{k} nabla_{k}(x^{k})"), rhs, lhs)));
        }
    }
    for n in 1..=max_n {
        if let Some(c) = polynomial_rank(n, sweep)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn polynomial_rank(n: usize, sweep: &Sweep) -> Result<Option<Counterexample>> {
    let descent_dist = dist::brute_by(n, sweep, descents)?;
    let inversion_dist = dist::brute_by(n, sweep, inversions)?;
    let q_binoms = (0..=n).map(|k| q_binomial(n, k)).collect::<Result<Vec<_>>>()?;
    let check = || -> Option<Counterexample> {
        ensure_show!(format!("eulerian({n}) = descent distribution"), &descent_dist, &eulerian(n));
        ensure_show!(format!("[{n}]! = inversion distribution"), &inversion_dist, &q_factorial(n));
        for (k, qb) in q_binoms.iter().enumerate() {
            ensure_show!(format!("[{n},{k}] symmetric"), qb, &q_binoms[n - k]);
            ensure!(format!("[{n},{k}] palindromic"), qb.is_palindromic());
            ensure_eq!(format!("[{n},{k}] at 1"), binomial(n, k), qb.mass());
        }
        for p in [&descent_dist, &inversion_dist] {
            ensure_eq!("mass n!", factorial(n), p.mass());
            ensure_eq!("json round trip", Ok(p.clone()), IntPoly::from_json(&p.to_json()));
            ensure_eq!("text round trip", Ok(p.clone()), p.to_string().parse::<IntPoly>());
        }
        None
    };
    Ok(check())
}

fn distributions(max_n: usize, sweep: &Sweep) -> Result<Option<Counterexample>> {
    for n in 1..=max_n {
        if let Some(c) = distribution_rank(n, sweep)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

fn distribution_rank(n: usize, sweep: &Sweep) -> Result<Option<Counterexample>> {
    let brute = |s: Statistic| dist::brute(&s, n, sweep);
    let nfact = factorial(n);

    let n_dist = brute(Statistic::NinvSum)?;
    if let Some(c) = (|| {
        ensure_show!(format!("N_{n} recurrence"), &n_dist, &dist::ninvsum_recurrence(n, sweep).ok()?);
        ensure!(format!("N_{n} palindromic"), n_dist.is_palindromic());
        ensure_eq!(format!("N_{n} degree"), binomial_u64(n as u64 + 1, 3) as usize, n_dist.degree());
        ensure_eq!(format!("N_{n} mass"), &nfact, &n_dist.mass());
        None
    })() {
        return Ok(Some(c));
    }

    for k in 1..=n {
        let h = brute(Statistic::InvK { k })?;
        let value_gap = dist::brute_by(n, sweep, |p| value_gap_inversions(p, k))?;
        let ninv = brute(Statistic::NinvK { k })?;
        let j = brute(Statistic::InvLeK { k })?;
        let kd = brute(Statistic::Ipcni { k })?;
        let found = (|| {
            ensure_show!(format!("H_({n},{k}) closed"), &h, &kstep_closed(n, k).ok()?);
            ensure_eq!(format!("I({n},{k},0) = constant term"), h.coeff(0), kstep_zero_count(n, k).ok()?);
            ensure_show!(format!("H_({n},{k}) by value gaps"), &h, &value_gap);
            ensure_show!(format!("inv_{k} and ninv_{k} equidistributed at n={n}"), &h, &ninv);
            ensure_eq!(format!("K_({n},{k}) constant term"), ipcni_constant_term(k), kd.coeff(0));
            for p in [&h, &j, &kd] {
                ensure_eq!(format!("mass at n={n} k={k}"), &nfact, &p.mass());
            }
            if k == 1 {
                ensure_show!(format!("J_({n},<=1)"), &j, &le_k_special(n, LeKCase::One).ok()?);
            }
            if k + 1 == n {
                ensure_show!(format!("J_({n},<={k})"), &j, &le_k_special(n, LeKCase::RankMinusOne).ok()?);
                ensure_show!(format!("K_({n},{k})"), &kd, &ipcni_special(n, IpcniCase::RankMinusOne).ok()?);
            }
            if k + 2 == n {
                ensure_show!(format!("J_({n},<={k})"), &j, &le_k_special(n, LeKCase::RankMinusTwo).ok()?);
                if n >= 4 {
                    ensure_show!(format!("K_({n},{k})"), &kd, &ipcni_special(n, IpcniCase::RankMinusTwo).ok()?);
                }
            }
            if k < n && n >= 2 {
                let next = n - 1;
                if k <= next {
                    // degree of J_{next+1, <=k} = J_{n, <=k}
                    ensure_eq!(format!("deg J_({n},<={k})"), le_k_degree(next, k).ok()?, j.degree());
                }
            }
            None
        })();
        if found.is_some() {
            return Ok(found);
        }
        if k < n {
            for kind in [PairKind::Inversions, PairKind::NonInversions] {
                let z = dist::zone_coordinate_brute(n, k, kind, sweep)?;
                let closed = zone_coordinate_dist(n, k)?;
                if z != closed {
                    return Ok(Some(failure(format!("zone coordinate {k} ({kind:?}) at n={n}"), closed, z)));
                }
            }
        }
    }

    if n >= 2 {
        let l = brute(Statistic::ModInv { d: 2, k: n - 1 })?;
        let closed = modinv_last_step(n)?;
        if l != closed {
            return Ok(Some(failure(format!("L_({n},2,{})", n - 1), closed, l)));
        }
    }
    for k1 in 1..n {
        for k2 in 1..n {
            if let Ok((deg, lead)) = k1k2_extremal(n, k1, k2) {
                let h = brute(Statistic::InvK1K2 { k1, k2 })?;
                if (h.degree(), h.leading().clone()) != (deg, lead.clone()) {
                    return Ok(Some(failure(
                        format!("H_({n},({k1},{k2})) degree and leading"),
                        format!("({deg}, {lead})"),
                        format!("({}, {})", h.degree(), h.leading()),
                    )));
                }
            }
        }
    }
    for d in 2..=3 {
        for k in 1..n {
            if let Ok((deg, lead)) = modinv_leading(n, d, k) {
                let l = brute(Statistic::ModInv { d, k })?;
                if (l.degree(), l.leading().clone()) != (deg, lead.clone()) {
                    return Ok(Some(failure(
                        format!("L_({n},{d},{k}) degree and leading"),
                        format!("({deg}, {lead})"),
                        format!("({}, {})", l.degree(), l.leading()),
                    )));
                }
            }
        }
    }
    let masses: Vec<BigInt> = [
        Statistic::InvSum,
        Statistic::Cosine,
        Statistic::LbSum(LbVariant::Base),
    ]
    .into_iter()
    .map(|s| brute(s).map(|p| p.mass()))
    .collect::<Result<_>>()?;
    if let Some(m) = masses.iter().find(|&m| m != &nfact) {
        return Ok(Some(failure(format!("mass at n={n}"), &nfact, m)));
    }
    Ok(None)
}

/// Upper end of the construction sweep.
pub const CONSTRUCT_LIMIT: u64 = 100_000;

fn cosine_suite(max_n: usize, _sweep: &Sweep) -> Result<Option<Counterexample>> {
    for k in 1..=CONSTRUCT_LIMIT {
        match cosine::construct(k) {
            Ok(pi) => {
                let dot = Permutation::identity(pi.rank())?.dot(&pi)?;
                if dot != k || cosine::is_excluded(k) {
                    return Ok(Some(failure(format!("construct({k})"), k, dot)));
                }
            }
            Err(Error::NotAchievable(_)) if cosine::is_excluded(k) => {}
            Err(e) => return Ok(Some(failure(format!("construct({k})"), "a permutation", e))),
        }
    }
    for n in 4..=max_n.clamp(4, 9) {
        for m in 0..=binomial_u64(n as u64 + 1, 3) {
            let z = cosine::zeta(m, n)?;
            if (z.rank(), ninvsum(&z)) != (n, m) {
                return Ok(Some(failure(format!("zeta({m},{n})"), m, ninvsum(&z))));
            }
        }
    }
    for n in 6..=40u64 {
        if binomial_u64(n + 1, 3) + binomial_u64(n, 3) + 1 < binomial_u64(n + 2, 3) {
            return Ok(Some(failure(format!("C(n+1,3) + C(n,3) >= C(n+2,3) - 1 at n={n}"), true, false)));
        }
    }
    for k in 1..=1_000_000u64 {
        let n = cosine::rank_for(k) as u64;
        if !(binomial_u64(n + 2, 3) <= k && k < binomial_u64(n + 3, 3)) {
            return Ok(Some(failure(format!("rank_for({k})"), "C(n+2,3) <= k < C(n+3,3)", n)));
        }
    }
    let small = Sweep::with_max_rank(6);
    for k in 1..=60u64 {
        let count = cosine::count_with_cosine(k, &small)?;
        if (count == 0) != cosine::is_excluded(k) {
            return Ok(Some(failure(format!("count_with_cosine({k}) zero iff excluded"), cosine::is_excluded(k), count == 0)));
        }
    }
    Ok(None)
}
