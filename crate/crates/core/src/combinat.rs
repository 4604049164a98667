//! Exact binomials and factorials.

use num_bigint::BigInt;
use num_traits::One;

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// C(n, k); zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// C(n, k) in u64, for the small index arithmetic of the cosine module.
pub fn binomial_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// (k)_j = k(k-1)...(k-j+1)
pub fn falling_factorial(k: u64, j: u64) -> u64 {
    (0..j).map(|i| k.saturating_sub(i)).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(10), BigInt::from(3_628_800));
        assert_eq!(binomial(11, 3), BigInt::from(165));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial_u64(8, 3), 56);
        assert_eq!(falling_factorial(5, 0), 1);
        assert_eq!(falling_factorial(5, 3), 60);
        assert_eq!(falling_factorial(3, 4), 0);
    }

    #[test]
    fn pascal_row_sums() {
        for n in 0..30 {
            let s: BigInt = (0..=n).map(|k| binomial(n, k)).sum();
            assert_eq!(s, BigInt::from(2).pow(n as u32));
        }
    }
}
