//! Inversion and non-inversion statistics on permutations and their
//! distributions over the symmetric group.

pub mod combinat;
pub mod cosine;
pub mod distributions;
pub mod enumeration;
pub mod mesh;
pub mod error;
pub mod permutation;
pub mod poly;
pub mod statistics;
pub mod tables;
pub mod verify;

pub use enumeration::Sweep;
pub use error::{Error, Result};
pub use permutation::Permutation;
pub use poly::IntPoly;
pub use statistics::{Statistic, StatParams};
