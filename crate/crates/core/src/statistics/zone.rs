//! Zone-crossing vectors: coordinate `k` counts pairs `(a, b)` of a given
//! kind with `a <= k < b`, i.e. pairs straddling the cut after position `k`.

use super::PairKind;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// `(z_1, ..., z_{n-1})`, or `(0, z_1, ..., z_{n-1}, 0)` when `augmented`.
pub fn zone_vector(pi: &Permutation, kind: PairKind, augmented: bool) -> Vec<u64> {
    let v = pi.values();
    let n = v.len();
    // diff[k] accumulates +1 at a and -1 at b for each pair, over cuts 0..=n
    let mut diff = vec![0i64; n + 1];
    for a in 0..n {
        for b in a + 1..n {
            if kind.holds(v[a], v[b]) {
                diff[a + 1] += 1;
                diff[b + 1] -= 1;
            }
        }
    }
    let mut running = 0i64;
    let cuts: Vec<u64> = diff
        .iter()
        .map(|d| {
            running += d;
            running as u64
        })
        .collect();
    // cuts[k] for k = 0..=n; interior cuts are 1..n-1, cuts[0] = cuts[n] = 0
    if augmented {
        cuts
    } else {
        cuts[1..n].to_vec()
    }
}

/// Inverts the augmented non-inversion zone-crossing vector
/// `v = (v_0, v_1, ..., v_n)` of a rank-n permutation with
/// π_k = n - (k - 1) - (v_k - v_{k-1}).
///
/// Any vector that does not round-trip is rejected.
pub fn from_augmented_ninv_zone_vector(v: &[i64]) -> Result<Permutation> {
    if v.len() < 2 || v[0] != 0 || v[v.len() - 1] != 0 {
        return Err(Error::NotARealizableVector);
    }
    let n = v.len() - 1;
    let values = (1..=n)
        .map(|k| {
            let val = n as i128 - (k as i128 - 1) - (v[k] as i128 - v[k - 1] as i128);
            usize::try_from(val).map_err(|_| Error::NotARealizableVector)
        })
        .collect::<Result<Vec<_>>>()?;
    let pi = Permutation::new(values).map_err(|_| Error::NotARealizableVector)?;
    let back = zone_vector(&pi, PairKind::NonInversions, true);
    if back.iter().zip(v).any(|(&b, &x)| b as i64 != x) {
        return Err(Error::NotARealizableVector);
    }
    Ok(pi)
}
