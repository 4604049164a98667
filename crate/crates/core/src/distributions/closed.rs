//! Closed forms for particular statistics and parameter ranges.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::poly::special::{eulerian, q_binomial, q_factorial};
use crate::poly::IntPoly;

/// Number of permutations with no `k`-step inversion: the multinomial
/// n! / Π λ_j! over the `k` run lengths λ_j.
pub fn kstep_zero_count(n: usize, k: usize) -> Result<BigInt> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let (q, t) = (n / k, n % k);
    let long = factorial(q + 1);
    let short = factorial(q);
    let denom = num_traits::pow(long, t) * num_traits::pow(short, k - t);
    Ok(factorial(n) / denom)
}

/// H_{n,k} = I(n,k,0) · A_s^t · A_{s-1}^{k-t} with s = ⌊n/k⌋ + 1, t = n mod k.
/// For `k > n` there are no k-step pairs and the result is the constant n!.
pub fn kstep_closed(n: usize, k: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if k == 0 {
        return Err(Error::KOutOfRange { k, n });
    }
    if k > n {
        return Ok(IntPoly::constant(factorial(n)));
    }
    let (s, t) = (n / k + 1, n % k);
    let long = eulerian(s).pow(t as u32);
    let short = eulerian(s - 1).pow((k - t) as u32);
    Ok((&long * &short).scale(&kstep_zero_count(n, k)?))
}

/// Degree and leading coefficient of H_{n,(k1,k2)} when n/2 < k1, k2 < n:
/// ℓ = min(n-k1, n-k2) and (n-2ℓ)! ℓ! C(n-k1, ℓ) C(n-k2, ℓ).
pub fn k1k2_extremal(n: usize, k1: usize, k2: usize) -> Result<(usize, BigInt)> {
    let inside = |k: usize| 2 * k > n && k < n;
    if !inside(k1) || !inside(k2) {
        return Err(Error::OutOfRegime(format!(
            "need n/2 < k1, k2 < n, got n={n} k1={k1} k2={k2}"
        )));
    }
    let l = (n - k1).min(n - k2);
    let lead = factorial(n - 2 * l) * factorial(l) * binomial(n - k1, l) * binomial(n - k2, l);
    Ok((l, lead))
}

/// The step sizes with a known J_{n,≤k}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LeKCase {
    /// k = 1: descents, the Eulerian polynomial
    One,
    /// k = n - 2
    RankMinusTwo,
    /// k = n - 1: all inversions, [n]_x!
    RankMinusOne,
}

/// J_{n,≤k} for the three covered step sizes.
///
/// The k = n-2 case is [n-2]_x! · Σ_{j=0}^{n-2} (j+1)(x^j + x^{2(n-2)-j}).
pub fn le_k_special(n: usize, case: LeKCase) -> Result<IntPoly> {
    let min = match case {
        LeKCase::RankMinusTwo => 3,
        _ => 1,
    };
    if n < min {
        return Err(Error::RankTooSmall { n, min });
    }
    let out = match case {
        LeKCase::One => eulerian(n),
        LeKCase::RankMinusOne => q_factorial(n),
        LeKCase::RankMinusTwo => {
            let m = n - 2;
            let tail: IntPoly = (0..=m)
                .map(|j| {
                    let w = BigInt::from(j + 1);
                    &IntPoly::monomial(w.clone(), j) + &IntPoly::monomial(w, 2 * m - j)
                })
                .sum();
            &q_factorial(m) * &tail
        }
    };
    Ok(out)
}

/// Degree of J_{n+1,≤k}: k(2n - k + 1)/2.
pub fn le_k_degree(n: usize, k: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(k * (2 * n - k + 1) / 2)
}

/// Degree and leading coefficient of L_{n,d,k} for n/2 < k < n, 2 ≤ d ≤ n:
/// ℓ = min(n-k, ⌊n/d⌋) and
/// (n-2ℓ)! ℓ! C(n-k, ℓ) Σ_{i_1<...<i_ℓ≤⌊n/d⌋} Π_j (d·i_j - 2j + 1).
pub fn modinv_leading(n: usize, d: usize, k: usize) -> Result<(usize, BigInt)> {
    if !(2 * k > n && k < n) || d < 2 || d > n {
        return Err(Error::OutOfRegime(format!(
            "need n/2 < k < n and 2 <= d <= n, got n={n} d={d} k={k}"
        )));
    }
    let tops = n / d;
    let l = (n - k).min(tops);
    // sums[j] = Σ over increasing i_1 < ... < i_j drawn so far of Π (d·i - 2j + 1)
    let mut sums = vec![BigInt::zero(); l + 1];
    sums[0] = BigInt::one();
    for i in 1..=tops {
        for j in (1..=l.min(i)).rev() {
            let factor = BigInt::from(d * i + 1) - BigInt::from(2 * j);
            let add = &sums[j - 1] * factor;
            sums[j] += add;
        }
    }
    let lead = factorial(n - 2 * l) * factorial(l) * binomial(n - k, l) * &sums[l];
    Ok((l, lead))
}

/// L_{n,2,n-1} = (n-2)! (⌊n/2⌋² x + n(n-1) - ⌊n/2⌋²).
pub fn modinv_last_step(n: usize) -> Result<IntPoly> {
    if n < 2 {
        return Err(Error::RankTooSmall { n, min: 2 });
    }
    let h = (n / 2) * (n / 2);
    Ok(IntPoly::from_coeffs(vec![BigInt::from(n * (n - 1) - h), BigInt::from(h)])
        .scale(&factorial(n - 2)))
}

/// The step sizes with a known K_{n,k}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IpcniCase {
    /// k = n - 1: (n-1)! ((n-1)x + 1)
    RankMinusOne,
    /// k = n - 2: (n-2)! ((n²-3n+1)x² + 2(n-1)x + 1)
    RankMinusTwo,
}

pub fn ipcni_special(n: usize, case: IpcniCase) -> Result<IntPoly> {
    match case {
        IpcniCase::RankMinusOne => {
            if n < 2 {
                return Err(Error::RankTooSmall { n, min: 2 });
            }
            Ok(IntPoly::from_coeffs(vec![BigInt::one(), BigInt::from(n - 1)]).scale(&factorial(n - 1)))
        }
        IpcniCase::RankMinusTwo => {
            if n < 4 {
                return Err(Error::RankTooSmall { n, min: 4 });
            }
            let coeffs = vec![BigInt::one(), BigInt::from(2 * (n - 1)), BigInt::from(n * n - 3 * n + 1)];
            Ok(IntPoly::from_coeffs(coeffs).scale(&factorial(n - 2)))
        }
    }
}

/// The constant term of K_{n,k}, k! for every 1 ≤ k ≤ n.
pub fn ipcni_constant_term(k: usize) -> BigInt {
    factorial(k)
}

/// Σ_π q^{z_k(π)} = k! (n-k)! [n, k]_q for 1 ≤ k ≤ n-1.
pub fn zone_coordinate_dist(n: usize, k: usize) -> Result<IntPoly> {
    if k == 0 || k >= n {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(q_binomial(n, k)?.scale(&(factorial(k) * factorial(n - k))))
}
