//! Tagged statistic descriptors, the uniform input of the distribution engine.

use std::fmt;

use super::LbVariant;
use crate::error::{Error, Result};
use crate::permutation::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    InvSum,
    NinvSum,
    Cosine,
    InvK { k: usize },
    NinvK { k: usize },
    InvK1K2 { k1: usize, k2: usize },
    InvLeK { k: usize },
    ModInv { d: usize, k: usize },
    Ipcni { k: usize },
    LbSum(LbVariant),
}

/// Loose parameters as they arrive from the command line.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StatParams {
    pub k: Option<usize>,
    pub k2: Option<usize>,
    pub d: Option<usize>,
    pub variant: Option<String>,
}

pub const TAGS: [&str; 10] = [
    "invsum",
    "ninvsum",
    "cosine",
    "inv_k",
    "ninv_k",
    "inv_k1k2",
    "inv_le_k",
    "modinv_dk",
    "ipcni_k",
    "lbsum_variant",
];

impl Statistic {
    /// Validates that exactly the parameters the tag needs are present.
    pub fn from_parts(tag: &str, params: &StatParams) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidStatistic(format!("{tag}: {msg}")));
        let positive = |name: &str, v: Option<usize>| match v {
            Some(0) => Err(Error::InvalidStatistic(format!("{tag}: {name} must be >= 1"))),
            Some(v) => Ok(v),
            None => Err(Error::InvalidStatistic(format!("{tag}: missing {name}"))),
        };
        let uses = |k: bool, k2: bool, d: bool, variant: bool| {
            (params.k.is_some() && !k)
                || (params.k2.is_some() && !k2)
                || (params.d.is_some() && !d)
                || (params.variant.is_some() && !variant)
        };
        let stat = match tag {
            "invsum" | "ninvsum" | "cosine" => {
                if uses(false, false, false, false) {
                    return bad("takes no parameters");
                }
                match tag {
                    "invsum" => Statistic::InvSum,
                    "ninvsum" => Statistic::NinvSum,
                    _ => Statistic::Cosine,
                }
            }
            "inv_k" | "ninv_k" | "inv_le_k" | "ipcni_k" => {
                if uses(true, false, false, false) {
                    return bad("takes only k");
                }
                let k = positive("k", params.k)?;
                match tag {
                    "inv_k" => Statistic::InvK { k },
                    "ninv_k" => Statistic::NinvK { k },
                    "inv_le_k" => Statistic::InvLeK { k },
                    _ => Statistic::Ipcni { k },
                }
            }
            "inv_k1k2" => {
                if uses(true, true, false, false) {
                    return bad("takes only k and k2");
                }
                Statistic::InvK1K2 {
                    k1: positive("k", params.k)?,
                    k2: positive("k2", params.k2)?,
                }
            }
            "modinv_dk" => {
                if uses(true, false, true, false) {
                    return bad("takes only d and k");
                }
                let d = positive("d", params.d)?;
                if d < 2 {
                    return bad("d must be >= 2");
                }
                Statistic::ModInv {
                    d,
                    k: positive("k", params.k)?,
                }
            }
            "lbsum_variant" | "lbsum" => {
                if uses(true, false, false, true) {
                    return bad("takes only variant and k");
                }
                let name = params.variant.as_deref().unwrap_or("base");
                let variant = LbVariant::new(name, params.k)?;
                if variant == LbVariant::Base && params.k.is_some() {
                    return bad("base variant takes no k");
                }
                Statistic::LbSum(variant)
            }
            _ => return bad("unknown statistic"),
        };
        Ok(stat)
    }

    pub fn tag(&self) -> &'static str {
        match self {
            Statistic::InvSum => "invsum",
            Statistic::NinvSum => "ninvsum",
            Statistic::Cosine => "cosine",
            Statistic::InvK { .. } => "inv_k",
            Statistic::NinvK { .. } => "ninv_k",
            Statistic::InvK1K2 { .. } => "inv_k1k2",
            Statistic::InvLeK { .. } => "inv_le_k",
            Statistic::ModInv { .. } => "modinv_dk",
            Statistic::Ipcni { .. } => "ipcni_k",
            Statistic::LbSum(_) => "lbsum_variant",
        }
    }

    /// Named parameters in a fixed order, for table headers.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match *self {
            Statistic::InvSum | Statistic::NinvSum | Statistic::Cosine => vec![],
            Statistic::InvK { k }
            | Statistic::NinvK { k }
            | Statistic::InvLeK { k }
            | Statistic::Ipcni { k } => vec![("k", k.to_string())],
            Statistic::InvK1K2 { k1, k2 } => vec![("k1", k1.to_string()), ("k2", k2.to_string())],
            Statistic::ModInv { d, k } => vec![("d", d.to_string()), ("k", k.to_string())],
            Statistic::LbSum(v) => {
                let mut out = vec![("variant", v.name().to_string())];
                if let Some(k) = v.k() {
                    out.push(("k", k.to_string()));
                }
                out
            }
        }
    }

    pub fn evaluate(&self, pi: &Permutation) -> u64 {
        use super::*;
        match *self {
            Statistic::InvSum => invsum(pi),
            Statistic::NinvSum => ninvsum(pi),
            Statistic::Cosine => cosine(pi),
            Statistic::InvK { k } => inv_k(pi, k),
            Statistic::NinvK { k } => ninv_k(pi, k),
            Statistic::InvK1K2 { k1, k2 } => inv_k1k2(pi, k1, k2),
            Statistic::InvLeK { k } => inv_le_k(pi, k),
            Statistic::ModInv { d, k } => modinv(pi, d, k),
            Statistic::Ipcni { k } => ipcni_k(pi, k),
            Statistic::LbSum(v) => lbsum(pi, v),
        }
    }
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())?;
        let params = self.params();
        if !params.is_empty() {
            let inner: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, "({})", inner.join(","))?;
        }
        Ok(())
    }
}
