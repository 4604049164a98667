//! Marked mesh patterns of length at most 3, enough to express the step
//! statistics as occurrence counts.
//!
//! For an occurrence at positions `x_1 < ... < x_p` with sorted values
//! `y_1 < ... < y_p`, boundary lines are `X = (0, x_1, ..., x_p, n+1)` and
//! `Y = (0, y_1, ..., y_p, n+1)`. Band `c` is the open strip between `X[c]`
//! and `X[c+1]`; cell `(i, j)` is column band `i` crossed with row band `j`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

pub const MAX_PATTERN_LEN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparator {
    Eq,
    Le,
    Ge,
}

impl Comparator {
    fn holds(self, count: u64, bound: u64) -> bool {
        match self {
            Comparator::Eq => count == bound,
            Comparator::Le => count <= bound,
            Comparator::Ge => count >= bound,
        }
    }
}

impl fmt::Display for Comparator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparator::Eq => "=",
            Comparator::Le => "<=",
            Comparator::Ge => ">=",
        })
    }
}

/// Column bands `cols.0 .. cols.1` crossed with row bands `rows.0 .. rows.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub cols: (usize, usize),
    pub rows: (usize, usize),
}

impl Region {
    pub fn cell(i: usize, j: usize) -> Self {
        Region {
            cols: (i, i + 1),
            rows: (j, j + 1),
        }
    }

    /// Column bands `c1..c2` across every row.
    pub fn columns(c1: usize, c2: usize, p: usize) -> Self {
        Region {
            cols: (c1, c2),
            rows: (0, p + 1),
        }
    }

    /// Row bands `r1..r2` across every column.
    pub fn rows(r1: usize, r2: usize, p: usize) -> Self {
        Region {
            cols: (0, p + 1),
            rows: (r1, r2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Constraint {
    pub region: Region,
    pub cmp: Comparator,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedMeshPattern {
    base: Permutation,
    shaded: Vec<(usize, usize)>,
    constraints: Vec<Constraint>,
}

impl MarkedMeshPattern {
    pub fn new(
        base: Permutation,
        shaded: Vec<(usize, usize)>,
        constraints: Vec<Constraint>,
    ) -> Result<Self> {
        let p = base.rank();
        if p > MAX_PATTERN_LEN {
            return Err(Error::BadParams(format!("pattern length {p} exceeds {MAX_PATTERN_LEN}")));
        }
        if let Some(&(i, j)) = shaded.iter().find(|&&(i, j)| i > p || j > p) {
            return Err(Error::BadParams(format!("cell ({i},{j}) outside the {p}-pattern")));
        }
        let span_ok = |(a, b): (usize, usize)| a < b && b <= p + 1;
        if let Some(c) = constraints
            .iter()
            .find(|c| !span_ok(c.region.cols) || !span_ok(c.region.rows))
        {
            return Err(Error::BadParams(format!("bad region {:?}", c.region)));
        }
        Ok(MarkedMeshPattern {
            base,
            shaded,
            constraints,
        })
    }

    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn shaded(&self) -> &[(usize, usize)] {
        &self.shaded
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Number of matching position tuples in `pi`.
    pub fn occurrences(&self, pi: &Permutation) -> u64 {
        let mut count = 0;
        self.for_each_match(pi, |_| count += 1);
        count
    }

    /// Matching position tuples (1-based, increasing), in lexicographic order.
    pub fn matches(&self, pi: &Permutation) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_match(pi, |m| out.push(m.to_vec()));
        out
    }

    fn for_each_match(&self, pi: &Permutation, mut f: impl FnMut(&[usize])) {
        let p = self.base.rank();
        let n = pi.rank();
        if p > n {
            return;
        }
        let grid = Prefix::new(pi);
        let mut pos = vec![0usize; p];
        // odometer over increasing p-tuples of 1..=n
        for (i, slot) in pos.iter_mut().enumerate() {
            *slot = i + 1;
        }
        loop {
            if self.accepts(pi, &grid, &pos) {
                f(&pos);
            }
            let Some(i) = (0..p).rev().find(|&i| pos[i] < n - (p - 1 - i)) else {
                return;
            };
            pos[i] += 1;
            for j in i + 1..p {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }

    fn accepts(&self, pi: &Permutation, grid: &Prefix, pos: &[usize]) -> bool {
        let p = pos.len();
        let n = pi.rank();
        let vals: Vec<usize> = pos.iter().map(|&x| pi.at(x)).collect();
        let order_ok = (0..p).all(|a| (a + 1..p).all(|b| (vals[a] < vals[b]) == (self.base.at(a + 1) < self.base.at(b + 1))));
        if !order_ok {
            return false;
        }
        let mut xs = Vec::with_capacity(p + 2);
        xs.push(0);
        xs.extend_from_slice(pos);
        xs.push(n + 1);
        let mut ys = Vec::with_capacity(p + 2);
        ys.push(0);
        ys.extend(self.base.inverse().values().iter().map(|&i| vals[i - 1]));
        ys.push(n + 1);
        let inside = |r: Region| -> u64 {
            let (x1, x2) = (xs[r.cols.0], xs[r.cols.1]);
            let (y1, y2) = (ys[r.rows.0], ys[r.rows.1]);
            let all = grid.open_rect(x1, x2, y1, y2);
            let matched = pos
                .iter()
                .zip(&vals)
                .filter(|&(&x, &y)| x1 < x && x < x2 && y1 < y && y < y2)
                .count() as u64;
            all - matched
        };
        self.shaded.iter().all(|&(i, j)| inside(Region::cell(i, j)) == 0)
            && self
                .constraints
                .iter()
                .all(|c| c.cmp.holds(inside(c.region), c.bound))
    }
}

/// `table[x][y]` = #{i ≤ x : π(i) ≤ y}.
struct Prefix {
    table: Vec<Vec<u64>>,
}

impl Prefix {
    fn new(pi: &Permutation) -> Self {
        let n = pi.rank();
        let mut table = vec![vec![0u64; n + 2]; n + 2];
        for x in 1..=n + 1 {
            for y in 1..=n + 1 {
                let hit = u64::from(x <= n && pi.at(x) == y);
                table[x][y] = hit + table[x - 1][y] + table[x][y - 1] - table[x - 1][y - 1];
            }
        }
        Prefix { table }
    }

    /// Points with x1 < x < x2 and y1 < y < y2.
    fn open_rect(&self, x1: usize, x2: usize, y1: usize, y2: usize) -> u64 {
        if x2 <= x1 + 1 || y2 <= y1 + 1 {
            return 0;
        }
        let t = &self.table;
        t[x2 - 1][y2 - 1] + t[x1][y1] - t[x1][y2 - 1] - t[x2 - 1][y1]
    }
}

/// The pattern families that encode step statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    KStepInv,
    LeKStepInv,
    K1K2Inv,
    ZcvCoord,
    ModInvTop,
    CertifiedKStep,
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kstep_inv" => Ok(Builtin::KStepInv),
            "le_kstep_inv" => Ok(Builtin::LeKStepInv),
            "k1k2_inv" => Ok(Builtin::K1K2Inv),
            "zcv_coord" => Ok(Builtin::ZcvCoord),
            "modinv_top" => Ok(Builtin::ModInvTop),
            "certified_kstep" => Ok(Builtin::CertifiedKStep),
            other => Err(Error::UnknownPattern(other.to_owned())),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PatternParams {
    pub k: Option<usize>,
    pub k2: Option<usize>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub l: Option<usize>,
}

fn need(name: &str, v: Option<usize>, min: usize) -> Result<usize> {
    match v {
        Some(v) if v >= min => Ok(v),
        Some(v) => Err(Error::BadParams(format!("{name} = {v} must be at least {min}"))),
        None => Err(Error::BadParams(format!("missing {name}"))),
    }
}

/// Looks up a pattern family by name and instantiates it.
pub fn builtin(name: &str, params: &PatternParams) -> Result<MarkedMeshPattern> {
    let family: Builtin = name.parse()?;
    let pat21 = Permutation::from_vec_unchecked(vec![2, 1]);
    let exactly = |region, bound| Constraint {
        region,
        cmp: Comparator::Eq,
        bound,
    };
    match family {
        Builtin::KStepInv | Builtin::LeKStepInv => {
            let k = need("k", params.k, 1)?;
            let cmp = if family == Builtin::KStepInv {
                Comparator::Eq
            } else {
                Comparator::Le
            };
            let c = Constraint {
                region: Region::columns(1, 2, 2),
                cmp,
                bound: k as u64 - 1,
            };
            MarkedMeshPattern::new(pat21, vec![], vec![c])
        }
        Builtin::K1K2Inv => {
            let k1 = need("k", params.k, 1)?;
            let k2 = need("k2", params.k2, 1)?;
            MarkedMeshPattern::new(
                pat21,
                vec![],
                vec![
                    exactly(Region::columns(1, 2, 2), k1 as u64 - 1),
                    exactly(Region::rows(1, 2, 2), k2 as u64 - 1),
                ],
            )
        }
        Builtin::ZcvCoord => {
            let k = need("k", params.k, 1)?;
            let n = need("n", params.n, k + 1)?;
            MarkedMeshPattern::new(
                pat21,
                vec![],
                vec![
                    Constraint {
                        region: Region::columns(0, 1, 2),
                        cmp: Comparator::Le,
                        bound: k as u64 - 1,
                    },
                    Constraint {
                        region: Region::columns(2, 3, 2),
                        cmp: Comparator::Le,
                        bound: (n - k - 1) as u64,
                    },
                ],
            )
        }
        Builtin::ModInvTop => {
            let d = need("d", params.d, 2)?;
            let k = need("k", params.k, 1)?;
            let n = need("n", params.n, 1)?;
            let l = need("l", params.l, 1)?;
            let top = d * l;
            if top > n {
                return Err(Error::BadParams(format!("d*l = {top} exceeds n = {n}")));
            }
            MarkedMeshPattern::new(
                pat21,
                vec![],
                vec![
                    exactly(Region::columns(1, 2, 2), k as u64 - 1),
                    exactly(Region::rows(2, 3, 2), (n - top) as u64),
                ],
            )
        }
        Builtin::CertifiedKStep => {
            let k = need("k", params.k, 2)?;
            MarkedMeshPattern::new(
                Permutation::from_vec_unchecked(vec![1, 3, 2]),
                vec![(1, 3), (2, 3)],
                vec![exactly(Region::columns(1, 3, 3), k as u64 - 2)],
            )
        }
    }
}

/// Σ_{ℓ ≥ 1} occurrences of the mod-d top pattern with top value dℓ.
pub fn modinv_top_total(pi: &Permutation, d: usize, k: usize) -> Result<u64> {
    let n = pi.rank();
    let mut total = 0;
    for l in 1..=n / d.max(1) {
        let params = PatternParams {
            d: Some(d),
            k: Some(k),
            n: Some(n),
            l: Some(l),
            ..PatternParams::default()
        };
        total += builtin("modinv_top", &params)?.occurrences(pi);
    }
    Ok(total)
}
