//! Permutations in one-line notation.
//!
//! Positions and values are 1-based at the API surface: `at(k)` is π(k) and
//! a permutation of rank `n` holds a rearrangement of `1..=n`. Storage is a
//! plain 0-indexed vector, so `values()[k - 1] == at(k)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<usize>,
}

/// The three symmetries of the permutation diagram used throughout.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "reverse" | "r" => Ok(Symmetry::Reverse),
            "complement" | "c" => Ok(Symmetry::Complement),
            "inverse" | "i" => Ok(Symmetry::Inverse),
            other => Err(Error::BadParams(format!("unknown symmetry {other:?}"))),
        }
    }
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=values.len()`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::NotAPermutation(format!(
                    "entry {v} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutation(format!("entry {v} repeated")));
            }
        }
        Ok(Permutation { values })
    }

    /// Caller guarantees `values` is a permutation of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(values.clone()).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        Ok(Permutation {
            values: (1..=n).collect(),
        })
    }

    /// n(n-1)...1
    pub fn reverse_identity(n: usize) -> Result<Self> {
        Ok(Permutation::identity(n)?.reverse())
    }

    pub fn rank(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn into_values(self) -> Vec<usize> {
        self.values
    }

    /// π(pos) for a 1-based position.
    ///
    /// Panics if `pos` is 0 or exceeds the rank.
    pub fn at(&self, pos: usize) -> usize {
        self.values[pos - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    pub fn complement(&self) -> Self {
        let n1 = self.rank() + 1;
        Permutation {
            values: self.values.iter().map(|&v| n1 - v).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut values = vec![0; self.rank()];
        for (i, &v) in self.values.iter().enumerate() {
            values[v - 1] = i + 1;
        }
        Permutation { values }
    }

    pub fn symmetry(&self, kind: Symmetry) -> Self {
        match kind {
            Symmetry::Reverse => self.reverse(),
            Symmetry::Complement => self.complement(),
            Symmetry::Inverse => self.inverse(),
        }
    }

    /// σ with σ(k) = self(other(k)).
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        self.check_rank(other)?;
        Ok(Permutation {
            values: other.values.iter().map(|&k| self.values[k - 1]).collect(),
        })
    }

    /// self ⊕ other: `self` followed by `other` shifted up by |self|.
    pub fn direct_sum(&self, other: &Permutation) -> Self {
        let shift = self.rank();
        let values = self
            .values
            .iter()
            .copied()
            .chain(other.values.iter().map(|&v| v + shift))
            .collect();
        Permutation { values }
    }

    /// self ⊖ other: `self` shifted up by |other| followed by `other`.
    pub fn skew_sum(&self, other: &Permutation) -> Self {
        let shift = other.rank();
        let values = self
            .values
            .iter()
            .map(|&v| v + shift)
            .chain(other.values.iter().copied())
            .collect();
        Permutation { values }
    }

    /// The permutation order-isomorphic to a sequence of distinct values.
    pub fn flatten<T: Ord>(values: &[T]) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut order: Vec<usize> = (0..values.len()).collect();
        order.sort_by(|&a, &b| values[a].cmp(&values[b]));
        if order.windows(2).any(|w| values[w[0]] == values[w[1]]) {
            return Err(Error::DuplicateEntries);
        }
        let mut out = vec![0; values.len()];
        for (rank, &idx) in order.iter().enumerate() {
            out[idx] = rank + 1;
        }
        Ok(Permutation { values: out })
    }

    /// Σ self(i)·other(i).
    pub fn dot(&self, other: &Permutation) -> Result<u64> {
        self.check_rank(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(&a, &b)| (a as u64) * (b as u64))
            .sum())
    }

    /// Inserts the value n+1 between positions k and k+1 (k = 0 puts it first).
    pub fn insert_max(&self, k: usize) -> Result<Self> {
        let n = self.rank();
        if k > n {
            return Err(Error::KOutOfRange { k, n });
        }
        let mut values = Vec::with_capacity(n + 1);
        values.extend_from_slice(&self.values[..k]);
        values.push(n + 1);
        values.extend_from_slice(&self.values[k..]);
        Ok(Permutation { values })
    }

    /// Steps to the lexicographic successor in place; false at the last one.
    pub(crate) fn next_lexicographic(&mut self) -> bool {
        let v = &mut self.values;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    fn check_rank(&self, other: &Permutation) -> Result<()> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts whitespace/comma separated entries ("3 1 4 5 6 2", "3,1,4")
    /// or, when no separator is present, one digit per entry ("314562").
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::EmptyInput);
        }
        let separated = text.contains(|c: char| c.is_whitespace() || c == ',');
        let values = if separated {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|tok| !tok.is_empty())
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::NotAPermutation(format!("bad entry {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::NotAPermutation(format!("bad character {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}
