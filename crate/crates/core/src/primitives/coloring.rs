use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Cap on explicit table cells used when callers have no budget of their own.
pub const DEFAULT_MAX_CELLS: u64 = 1 << 24;

/// Evaluation rule for colorings whose domain is too large to tabulate.
///
/// Points handed to [`ColorRule::color`] are already validated: strictly
/// increasing, of the coloring's dimension, and inside its interval.
pub trait ColorRule: Send + Sync + fmt::Debug {
    fn color(&self, points: &[u64]) -> Result<u32>;

    /// Constructor name used in the `coloring-rule` file header.
    fn name(&self) -> &str;

    /// Extra `key=value` parameters for the file header.
    fn params(&self) -> Vec<(String, String)> {
        Vec::new()
    }

    /// Colorings the rule was built from, serialized inline after the header.
    fn sources(&self) -> Vec<&Coloring> {
        Vec::new()
    }
}

#[derive(Debug, Clone)]
enum Repr {
    /// Indexed by the colex rank of the cell, see [`Coloring::cell_index`].
    Table(Arc<[u32]>),
    Rule(Arc<dyn ColorRule>),
}

/// A total map from increasing `dim`-subsets of `[lo, hi]` to `0..colors`.
#[derive(Debug, Clone)]
pub struct Coloring {
    dim: usize,
    colors: u32,
    lo: u64,
    hi: u64,
    repr: Repr,
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

fn check_header(dim: usize, colors: u32, lo: u64, hi: u64) -> Result<u128> {
    if dim == 0 {
        return Err(Error::domain("coloring dimension must be at least 1"));
    }
    if lo > hi {
        return Err(Error::domain(format!("empty interval [{lo},{hi}]")));
    }
    let cells = binomial(hi - lo + 1, dim as u64);
    if colors == 0 && cells > 0 {
        return Err(Error::domain(format!(
            "0 colors but [{lo},{hi}] has {cells} cells of dimension {dim}"
        )));
    }
    Ok(cells)
}

impl Coloring {
    /// Tabulates `rule` over every cell, refusing more than `max_cells` cells.
    pub fn from_fn<F>(
        dim: usize,
        colors: u32,
        lo: u64,
        hi: u64,
        max_cells: u64,
        mut rule: F,
    ) -> Result<Self>
    where
        F: FnMut(&[u64]) -> u32,
    {
        let cells = check_header(dim, colors, lo, hi)?;
        if cells > max_cells as u128 {
            return Err(Error::budget(
                format!("tabulating a {dim}-dim coloring on [{lo},{hi}]"),
                format!("{cells} cells"),
            ));
        }
        let mut table = vec![0u32; cells as usize];
        for cell in Combinations::over_range(lo, hi, dim) {
            let c = rule(&cell);
            if c >= colors {
                return Err(Error::domain(format!(
                    "color {c} at {cell:?} out of range for {colors} colors"
                )));
            }
            table[colex_rank(&cell, lo)] = c;
        }
        Ok(Coloring {
            dim,
            colors,
            lo,
            hi,
            repr: Repr::Table(table.into()),
        })
    }

    /// Builds a table from cell colors listed in lexicographic cell order.
    pub fn from_lex_colors(
        dim: usize,
        colors: u32,
        lo: u64,
        hi: u64,
        values: &[u32],
    ) -> Result<Self> {
        let cells = check_header(dim, colors, lo, hi)?;
        if values.len() as u128 != cells {
            return Err(Error::domain(format!(
                "expected {cells} cell colors, got {}",
                values.len()
            )));
        }
        let mut it = values.iter();
        Self::from_fn(dim, colors, lo, hi, u64::MAX, |_| *it.next().unwrap())
    }

    pub fn constant(dim: usize, colors: u32, lo: u64, hi: u64, color: u32) -> Result<Self> {
        Self::from_fn(dim, colors, lo, hi, DEFAULT_MAX_CELLS, |_| color)
    }

    pub fn from_rule(
        dim: usize,
        colors: u32,
        lo: u64,
        hi: u64,
        rule: Arc<dyn ColorRule>,
    ) -> Result<Self> {
        check_header(dim, colors, lo, hi)?;
        Ok(Coloring {
            dim,
            colors,
            lo,
            hi,
            repr: Repr::Rule(rule),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }

    /// Number of points in `[lo, hi]`.
    pub fn width(&self) -> u64 {
        self.hi - self.lo + 1
    }

    pub fn cell_count(&self) -> u128 {
        binomial(self.width(), self.dim as u64)
    }

    pub fn rule(&self) -> Option<&Arc<dyn ColorRule>> {
        match &self.repr {
            Repr::Rule(r) => Some(r),
            Repr::Table(_) => None,
        }
    }

    pub fn is_tabulated(&self) -> bool {
        matches!(self.repr, Repr::Table(_))
    }

    pub fn contains(&self, x: u64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn color(&self, points: &[u64]) -> Result<u32> {
        if points.len() != self.dim {
            return Err(Error::Arity {
                expected: self.dim,
                found: points.len(),
            });
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::domain(format!(
                "{points:?} is not strictly increasing"
            )));
        }
        if let Some(&x) = points.iter().find(|&&x| !self.contains(x)) {
            return Err(Error::domain(format!(
                "point {x} outside [{},{}]",
                self.lo, self.hi
            )));
        }
        match &self.repr {
            Repr::Table(t) => Ok(t[colex_rank(points, self.lo)]),
            Repr::Rule(r) => r.color(points),
        }
    }

    /// Colors of every cell in lexicographic cell order.
    pub fn lex_cells(&self) -> impl Iterator<Item = Result<(Vec<u64>, u32)>> + '_ {
        Combinations::over_range(self.lo, self.hi, self.dim).map(move |cell| {
            let c = self.color(&cell)?;
            Ok((cell, c))
        })
    }

    /// Materializes a rule-backed coloring as a table.
    pub fn tabulate(&self, max_cells: u64) -> Result<Coloring> {
        let mut err = None;
        let out =
            Self::from_fn(
                self.dim,
                self.colors,
                self.lo,
                self.hi,
                max_cells,
                |cell| match self.color(cell) {
                    Ok(c) => c,
                    Err(e) => {
                        err.get_or_insert(e);
                        0
                    }
                },
            )?;
        match err {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }
}

/// Two colorings are equal when they share the header and agree on every cell.
impl PartialEq for Coloring {
    fn eq(&self, other: &Self) -> bool {
        if (self.dim, self.colors, self.lo, self.hi)
            != (other.dim, other.colors, other.lo, other.hi)
        {
            return false;
        }
        if let (Repr::Table(a), Repr::Table(b)) = (&self.repr, &other.repr) {
            return a == b;
        }
        self.lex_cells()
            .zip(other.lex_cells())
            .all(|(a, b)| matches!((a, b), (Ok(a), Ok(b)) if a == b))
    }
}

fn colex_rank(points: &[u64], lo: u64) -> usize {
    points
        .iter()
        .enumerate()
        .map(|(i, &x)| binomial(x - lo, i as u64 + 1) as usize)
        .sum()
}

/// Strictly increasing `k`-subsets of a sorted pool, in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    pool: Vec<u64>,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    pub fn new(pool: Vec<u64>, k: usize) -> Self {
        let done = k > pool.len();
        Combinations {
            idx: (0..k).collect(),
            pool,
            done,
        }
    }

    pub fn over_range(lo: u64, hi: u64, k: usize) -> Self {
        Self::new((lo..=hi).collect(), k)
    }
}

impl Iterator for Combinations {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.idx.iter().map(|&i| self.pool[i]).collect();
        let (n, k) = (self.pool.len(), self.idx.len());
        match (0..k).rev().find(|&i| self.idx[i] != i + n - k) {
            Some(i) => {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}
