//! The two directions between bad pair colorings and bad sequences.
//!
//! A bad coloring `C: [a, R]^2 → c` yields an `(a, f)`-bad sequence of
//! `R - a + 1` tuples through the course-of-values recursion [`compute_h`];
//! a bad sequence yields a coloring by the least strictly decreasing
//! coordinate of each pair.

use crate::error::{Error, Result};
use crate::primitives::{Coloring, FSpec, Tuple, TupleSequence, DEFAULT_MAX_CELLS};
use crate::search;

/// Table `h(i, k)` for `i ∈ [0, R - a]` and colors `k ∈ [0, c - 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HMatrix {
    rows: usize,
    cols: usize,
    values: Vec<u64>,
}

impl HMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, k: usize) -> u64 {
        self.values[i * self.cols + k]
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.values[i * self.cols..(i + 1) * self.cols]
    }
}

fn require_pairs(c: &Coloring) -> Result<()> {
    if c.dim() != 2 {
        return Err(Error::precondition(format!(
            "expected a pair coloring, got dimension {}",
            c.dim()
        )));
    }
    Ok(())
}

/// `h(i,k) = min({f(a+i)} ∪ {h(j,k) ∸ 1 : j < i, C(a+j, a+i) = k})`.
///
/// Fails unless `coloring` is `f`-bad; on bad colorings every entry is at
/// least 1 and an edge `C(a+j, a+i) = k` forces `h(j,k) > h(i,k)`.
pub fn compute_h(coloring: &Coloring, f: &FSpec) -> Result<HMatrix> {
    require_pairs(coloring)?;
    if let Some(w) = search::find_weakly_homogeneous_exceeding(coloring, f)? {
        return Err(Error::precondition(format!(
            "coloring is not {f}-bad: {w}, H = {:?}",
            w.set().unwrap_or_default()
        )));
    }
    let a = coloring.lo();
    let rows = coloring.width() as usize;
    let cols = coloring.colors() as usize;
    let mut values = vec![0u64; rows * cols];
    for i in 0..rows {
        let cap = f.eval(a + i as u64);
        for k in 0..cols {
            values[i * cols + k] = cap;
        }
        for j in 0..i {
            let k = coloring.color(&[a + j as u64, a + i as u64])? as usize;
            let via = values[j * cols + k].saturating_sub(1);
            let slot = &mut values[i * cols + k];
            *slot = (*slot).min(via);
        }
        if let Some(k) = (0..cols).find(|&k| values[i * cols + k] == 0) {
            return Err(Error::precondition(format!(
                "h({i},{k}) = 0 on an {f}-bad coloring"
            )));
        }
    }
    Ok(HMatrix { rows, cols, values })
}

/// `m_i = (h(i,0) - 1, …, h(i,c-1) - 1)` for `i ∈ [0, R - a]`.
pub fn coloring_to_sequence(coloring: &Coloring, f: &FSpec) -> Result<TupleSequence> {
    let h = compute_h(coloring, f)?;
    let items = (0..h.rows())
        .map(|i| Tuple::new(h.row(i).iter().map(|v| v - 1).collect()))
        .collect();
    TupleSequence::new(h.cols(), items)
}

/// `C(a+i, a+j)` = least `k` with `(m_i)_k > (m_j)_k`, on `[a, a + D]`.
pub fn sequence_to_coloring(seq: &TupleSequence, a: u64) -> Result<Coloring> {
    if seq.is_empty() {
        return Err(Error::precondition("empty sequence has no coloring domain"));
    }
    if let Some((i, j)) = seq.first_domination() {
        return Err(Error::precondition(format!(
            "not a bad sequence: items {i} ≤ {j}"
        )));
    }
    let colors = u32::try_from(seq.arity())
        .map_err(|_| Error::domain(format!("arity {} too large", seq.arity())))?;
    let hi = a + seq.len() as u64 - 1;
    let items = seq.items();
    Coloring::from_fn(2, colors, a, hi, DEFAULT_MAX_CELLS, |p| {
        let (s, t) = (&items[(p[0] - a) as usize], &items[(p[1] - a) as usize]);
        s.coords()
            .iter()
            .zip(t.coords())
            .position(|(x, y)| x > y)
            .expect("bad sequences have a decreasing coordinate") as u32
    })
}
