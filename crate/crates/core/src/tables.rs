//! The distribution tables, regenerated row by row.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distributions::DistributionRequest;
use crate::enumeration::Sweep;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::statistics::Statistic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Table {
    /// ninvsum
    N,
    /// k-step inversions
    H,
    /// (≤k)-step inversions
    J,
    /// k-step inversions with even top
    L,
    /// ipcni_k
    K,
    /// (k1,k2)-step inversions
    Hk1k2,
}

impl Table {
    pub const ALL: [Table; 6] = [Table::N, Table::H, Table::J, Table::L, Table::K, Table::Hk1k2];

    pub fn name(self) -> &'static str {
        match self {
            Table::N => "N",
            Table::H => "H",
            Table::J => "J",
            Table::L => "L",
            Table::K => "K",
            Table::Hk1k2 => "Hk1k2",
        }
    }

    /// Largest rank in the printed table.
    pub fn default_n_max(self) -> usize {
        match self {
            Table::N | Table::K => 8,
            Table::H => 9,
            Table::J | Table::L => 7,
            Table::Hk1k2 => 5,
        }
    }

    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Table::N => &[],
            Table::H | Table::J | Table::K => &["k"],
            Table::L => &["d", "k"],
            Table::Hk1k2 => &["k1", "k2"],
        }
    }

    /// Parameter tuples and statistics of the rows at rank `n`, in table order.
    fn cells(self, n: usize) -> Vec<(Vec<usize>, Statistic)> {
        match self {
            Table::N => vec![(vec![], Statistic::NinvSum)],
            Table::H => {
                // the printed n = 9 block stops at k = 4
                let top = if n == 9 { 4 } else { n };
                (1..=top).map(|k| (vec![k], Statistic::InvK { k })).collect()
            }
            Table::J => (1..=(n - 1).max(1)).map(|k| (vec![k], Statistic::InvLeK { k })).collect(),
            Table::L => (1..=n).map(|k| (vec![2, k], Statistic::ModInv { d: 2, k })).collect(),
            Table::K => (1..=n).map(|k| (vec![k], Statistic::Ipcni { k })).collect(),
            Table::Hk1k2 => {
                let mut out = Vec::new();
                for k1 in 1..=n {
                    for k2 in 1..=n.min(4) {
                        out.push((vec![k1, k2], Statistic::InvK1K2 { k1, k2 }));
                    }
                }
                out
            }
        }
    }
}

impl FromStr for Table {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Table::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::BadParams(format!("unknown table {s:?}")))
    }
}

impl fmt::Display for Table {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub n: usize,
    pub params: Vec<usize>,
    pub poly: IntPoly,
}

/// Rows for every rank `1..=n_max`.
pub fn rows(table: Table, n_max: usize, sweep: &Sweep) -> Result<Vec<TableRow>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for (params, stat) in table.cells(n) {
            let poly = DistributionRequest::new(stat, n).compute(sweep)?.poly;
            out.push(TableRow { n, params, poly });
        }
    }
    Ok(out)
}

/// `n,<params>,coeffs_ascending` with the coefficients in one quoted field.
pub fn to_csv(table: Table, rows: &[TableRow]) -> String {
    let mut out = String::from("n,");
    for name in table.param_names() {
        out.push_str(name);
        out.push(',');
    }
    out.push_str("coeffs_ascending\n");
    for row in rows {
        out.push_str(&row.n.to_string());
        out.push(',');
        for p in &row.params {
            out.push_str(&p.to_string());
            out.push(',');
        }
        out.push('"');
        out.push_str(&row.poly.to_decimal_strings().join(" "));
        out.push_str("\"\n");
    }
    out
}

/// An array of `{"n", <param>..., "coeffs"}` objects.
pub fn to_json(table: Table, rows: &[TableRow]) -> String {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::Map::new();
            obj.insert("n".into(), row.n.into());
            for (name, value) in table.param_names().iter().zip(&row.params) {
                obj.insert((*name).into(), (*value).into());
            }
            obj.insert("coeffs".into(), row.poly.to_decimal_strings().into());
            serde_json::Value::Object(obj)
        })
        .collect();
    serde_json::json!({ "table": table.name(), "rows": items }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let sweep = Sweep::default();
        assert_eq!(rows(Table::N, 8, &sweep).unwrap().len(), 8);
        assert_eq!(rows(Table::H, 9, &sweep).unwrap().len(), 45 - 9 + 4);
        assert_eq!(rows(Table::J, 3, &sweep).unwrap().len(), 1 + 1 + 2);
        assert_eq!(rows(Table::Hk1k2, 5, &sweep).unwrap().len(), 1 + 4 + 9 + 16 + 20);
        assert_eq!("hk1k2".parse::<Table>().unwrap(), Table::Hk1k2);
        assert!("Q".parse::<Table>().is_err());
    }

    #[test]
    fn csv_and_json() {
        let sweep = Sweep::default();
        let r = rows(Table::N, 3, &sweep).unwrap();
        assert_eq!(to_csv(Table::N, &r), "n,coeffs_ascending\n1,\"1\"\n2,\"1 1\"\n3,\"1 2 0 2 1\"\n");
        let r = rows(Table::L, 2, &sweep).unwrap();
        assert_eq!(to_csv(Table::L, &r), "n,d,k,coeffs_ascending\n1,2,1,\"1\"\n2,2,1,\"1 1\"\n2,2,2,\"2\"\n");
        let json: serde_json::Value = serde_json::from_str(&to_json(Table::L, &r)).unwrap();
        assert_eq!(json["rows"][1]["coeffs"], serde_json::json!(["1", "1"]));
        assert_eq!(json["rows"][2]["k"], 2);
    }
}
