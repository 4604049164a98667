//! Eulerian polynomials, Gaussian binomials, q-factorials and the ∇_k operator.

use num_bigint::BigInt;
use num_traits::Zero;

use super::IntPoly;
use crate::combinat::falling_factorial;
use crate::error::{Error, Result};

/// A_n(x), the descent distribution over S_n, via
/// A(n, m) = (m+1)·A(n-1, m) + (n-m)·A(n-1, m-1) on the descent count m.
/// A_0 = A_1 = 1.
pub fn eulerian(n: usize) -> IntPoly {
    let mut row = vec![BigInt::from(1)];
    for size in 2..=n {
        let mut next = vec![BigInt::zero(); size];
        for (m, slot) in next.iter_mut().enumerate() {
            if m < row.len() {
                *slot += &row[m] * (m + 1);
            }
            if m >= 1 && m - 1 < row.len() {
                *slot += &row[m - 1] * (size - m);
            }
        }
        row = next;
    }
    IntPoly::from_coeffs(row)
}

/// 1 + x + ... + x^(j-1)
pub fn q_integer(j: usize) -> IntPoly {
    IntPoly::from_coeffs(vec![BigInt::from(1); j])
}

/// [n]_x! = Π_{j=1}^{n} (1 + x + ... + x^(j-1)).
pub fn q_factorial(n: usize) -> IntPoly {
    (1..=n).map(q_integer).product()
}

/// Gaussian binomial [n, k]_q by [n,k] = [n-1,k-1] + q^k [n-1,k].
pub fn q_binomial(n: usize, k: usize) -> Result<IntPoly> {
    if k > n {
        return Err(Error::KExceedsN { k, n });
    }
    // row[j] holds [m, j] for the current m
    let mut row: Vec<IntPoly> = vec![IntPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        for j in 0..=m {
            let p = if j == 0 || j == m {
                IntPoly::one()
            } else {
                &row[j - 1] + &row[j].shift(j)
            };
            next.push(p);
        }
        row = next;
    }
    Ok(row.swap_remove(k))
}

/// ∇_k p = Σ_{j=0}^{k} (j+1)/(k)_j · p^{(j)}, with every division required to be exact.
pub fn nabla(k: usize, p: &IntPoly) -> Result<IntPoly> {
    let mut acc = IntPoly::zero();
    let mut deriv = p.clone();
    for j in 0..=k {
        let divisor = falling_factorial(k as u64, j as u64);
        let d = BigInt::from(divisor);
        let weight = BigInt::from(j + 1);
        let mut coeffs = Vec::with_capacity(deriv.coeffs().len());
        for c in deriv.coeffs() {
            let scaled = c * &weight;
            if !(&scaled % &d).is_zero() {
                return Err(Error::InexactDivision { divisor });
            }
            coeffs.push(scaled / &d);
        }
        acc += &IntPoly::from_coeffs(coeffs);
        deriv = deriv.derivative();
    }
    Ok(acc)
}
