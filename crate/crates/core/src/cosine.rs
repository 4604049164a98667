//! Permutations with a prescribed dot product against the identity.
//!
//! Over S_n, 1·π = C(n+2, 3) + ninvsum(π), and ninvsum takes every value in
//! 0..=C(n+1, 3). Every k ≥ 1 outside [`EXCLUDED`] is reached by a recursion
//! on skew and direct sums that bottoms out in a fixed table for S_4.

use crate::combinat::binomial_u64;
use crate::enumeration::{self, Sweep};
use crate::error::{Error, Result};
use crate::permutation::Permutation;
use crate::statistics::ninvsum;

/// The values k ≥ 1 that are not 1·π for any π.
pub const EXCLUDED: [u64; 16] = [2, 3, 6, 7, 8, 9, 12, 15, 16, 17, 18, 19, 31, 32, 33, 34];

pub fn is_excluded(k: u64) -> bool {
    EXCLUDED.binary_search(&k).is_ok()
}

/// ν(m) for m = 0..=10, a member of S_4 with ninvsum m.
const NU: [[usize; 4]; 11] = [
    [4, 3, 2, 1],
    [3, 4, 2, 1],
    [3, 4, 1, 2],
    [4, 2, 1, 3],
    [4, 1, 2, 3],
    [2, 4, 1, 3],
    [3, 2, 1, 4],
    [1, 4, 2, 3],
    [2, 1, 4, 3],
    [1, 2, 4, 3],
    [1, 2, 3, 4],
];

/// 1·π for π ∈ S_n lies in [C(n+2,3), C(n+2,3) + C(n+1,3)].
fn floor_of(n: usize) -> u128 {
    tetrahedral(n as u128 + 2)
}

/// C(m, 3) without overflow for any `m` reachable from a u64 target.
fn tetrahedral(m: u128) -> u128 {
    if m < 3 {
        0
    } else {
        m * (m - 1) * (m - 2) / 6
    }
}

/// Largest n with C(n+2, 3) ≤ k, by exact integer search.
///
/// Panics if `k` is 0.
pub fn rank_for(k: u64) -> usize {
    assert!(k >= 1, "rank_for needs k >= 1");
    // C(n+2,3) > n^3/6, so n < (6k)^(1/3) + 1 bounds the search
    let (mut lo, mut hi) = (1usize, 2usize);
    let k = k as u128;
    while floor_of(hi) <= k {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if floor_of(mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

pub fn nu(m: u64) -> Result<Permutation> {
    let row = NU.get(m as usize).ok_or(Error::OutOfTable(m))?;
    Ok(Permutation::from_vec_unchecked(row.to_vec()))
}

/// A permutation of rank at most 4 with 1·π = k, for achievable k < 35.
pub fn eta(k: u64) -> Result<Permutation> {
    let small: &[usize] = match k {
        1 => &[1],
        4 => &[2, 1],
        5 => &[1, 2],
        10 => &[3, 2, 1],
        11 => &[3, 1, 2],
        13 => &[1, 3, 2],
        14 => &[1, 2, 3],
        20..=30 => return nu(k - 20),
        _ => return Err(Error::NotAchievable(k)),
    };
    Ok(Permutation::from_vec_unchecked(small.to_vec()))
}

/// A member of S_n with ninvsum `m`, for n ≥ 4 and 0 ≤ m ≤ C(n+1, 3).
pub fn zeta(m: u64, n: usize) -> Result<Permutation> {
    if n < 4 || m > binomial_u64(n as u64 + 1, 3) {
        return Err(Error::MOutOfRange { m, n });
    }
    Ok(zeta_unchecked(m, n))
}

fn zeta_unchecked(m: u64, n: usize) -> Permutation {
    if n == 4 {
        return nu(m).expect("m <= 10 at rank 4");
    }
    let one = Permutation::from_vec_unchecked(vec![1]);
    let nn = n as u64;
    if m <= binomial_u64(nn, 3) {
        zeta_unchecked(m, n - 1).skew_sum(&one)
    } else {
        one.direct_sum(&zeta_unchecked(m - binomial_u64(nn, 2), n - 1))
    }
}

/// A permutation π with 1·π = k. The dot product is checked before returning.
pub fn construct(k: u64) -> Result<Permutation> {
    if k == 0 {
        return Err(Error::NotAchievable(0));
    }
    let pi = if k < 35 {
        eta(k)?
    } else {
        let n = rank_for(k);
        zeta_unchecked((k as u128 - floor_of(n)) as u64, n)
    };
    let id = Permutation::identity(pi.rank())?;
    let got = id.dot(&pi)?;
    if got != k {
        return Err(Error::Mismatch(format!("constructed {pi} has dot product {got}, not {k}")));
    }
    Ok(pi)
}

/// Ranks n whose dot-product range contains k.
fn candidate_ranks(k: u64) -> impl Iterator<Item = usize> {
    let k = k as u128;
    (1..)
        .take_while(move |&n| floor_of(n) <= k)
        .filter(move |&n| k <= floor_of(n) + tetrahedral(n as u128 + 1))
}

/// Number of permutations of any rank with 1·π = k.
pub fn count_with_cosine(k: u64, sweep: &Sweep) -> Result<u64> {
    let mut total = 0;
    for n in candidate_ranks(k) {
        sweep.check(n)?;
        let target = (k as u128 - floor_of(n)) as usize;
        let hist = enumeration::tally(n, sweep, ninvsum)?;
        total += hist.get(target).copied().unwrap_or(0);
    }
    Ok(total)
}

/// How many odd values sit at odd positions.
pub fn odd_values_at_odd_positions(pi: &Permutation) -> usize {
    pi.values().iter().step_by(2).filter(|&&v| v % 2 == 1).count()
}

/// Whether some π with 1·π = k has an even number of odd values at odd
/// positions. Exploratory: searches every candidate rank within the cap.
pub fn has_even_odd_parity(k: u64, sweep: &Sweep) -> Result<bool> {
    for n in candidate_ranks(k) {
        let target = (k as u128 - floor_of(n)) as u64;
        // a "counterexample" to the negation is a witness
        let witness = enumeration::find_counterexample(n, sweep, |p| {
            !(ninvsum(p) == target && odd_values_at_odd_positions(p) % 2 == 0)
        })?;
        if witness.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}
