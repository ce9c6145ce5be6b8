//! Exhaustive oracles: weakly homogeneous set search, longest bad sequences,
//! and the least-witness functions `D`, `R` and `wr` computed by brute force.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::primitives::{binomial, Coloring, FSpec, Tuple, TupleSequence, Witness};

/// Explicit work limits for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Most colorings a single enumeration may visit.
    pub max_colorings: u64,
    /// Most memoized states the bad-sequence search may create.
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_colorings: 1 << 22,
            max_nodes: 1 << 24,
        }
    }
}

// ---------------------------------------------------------------------------
// Weakly homogeneous sets
// ---------------------------------------------------------------------------

/// Depth-first search for weakly homogeneous sets, extending increasing
/// paths and pruning as soon as a window changes color.
struct WeakHomDfs<'a> {
    coloring: &'a Coloring,
    size: usize,
    nodes: u64,
    max_nodes: u64,
}

impl WeakHomDfs<'_> {
    /// Lexicographically least set with minimum `h0` and exactly `size` elements.
    fn from(&mut self, h0: u64) -> Result<Option<Vec<u64>>> {
        let c = self.coloring;
        if self.size == 0 || (c.hi() - h0 + 1) < self.size as u64 {
            return Ok(None);
        }
        let mut path = vec![h0];
        let window = if c.dim() == 1 {
            Some(c.color(&path)?)
        } else {
            None
        };
        if self.extend(&mut path, window)? {
            Ok(Some(path))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, path: &mut Vec<u64>, window: Option<u32>) -> Result<bool> {
        if path.len() == self.size {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::budget(
                "weakly homogeneous set search",
                format!("more than {} search nodes", self.max_nodes),
            ));
        }
        let c = self.coloring;
        let d = c.dim();
        let need = (self.size - path.len()) as u64;
        let last = *path.last().unwrap();
        let mut cell = Vec::with_capacity(d);
        // Leave room for the elements still to be placed after x.
        let top = c.hi() + 1 - need;
        for x in last + 1..=top {
            let mut next_window = window;
            if path.len() + 1 >= d {
                cell.clear();
                cell.extend_from_slice(&path[path.len() + 1 - d..]);
                cell.push(x);
                let col = c.color(&cell)?;
                match window {
                    Some(w) if w != col => continue,
                    _ => next_window = Some(col),
                }
            }
            path.push(x);
            if self.extend(path, next_window)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

fn weak_hom_from(c: &Coloring, h0: u64, size: usize) -> Result<Option<Vec<u64>>> {
    WeakHomDfs {
        coloring: c,
        size,
        nodes: 0,
        max_nodes: u64::MAX,
    }
    .from(h0)
}

/// Some weakly homogeneous `H ⊆ [lo, hi]` with `|H| > f(min H)`.
///
/// Candidates are ordered by `min H` and then lexicographically; the returned
/// set has exactly `f(min H) + 1` elements (contiguous prefixes of weakly
/// homogeneous sets stay weakly homogeneous).
pub fn find_weakly_homogeneous_exceeding(c: &Coloring, f: &FSpec) -> Result<Option<Witness>> {
    for h0 in c.lo()..=c.hi() {
        let need = f.eval(h0).saturating_add(1);
        if need > c.hi() - h0 + 1 {
            continue;
        }
        if let Some(set) = weak_hom_from(c, h0, need as usize)? {
            return Witness::weak_hom_set(c.clone(), set, Some(f.clone()), 0).map(Some);
        }
    }
    Ok(None)
}

/// Every weakly homogeneous set `H` satisfies `|H| ≤ f(min H)`.
pub fn is_f_bad_coloring(c: &Coloring, f: &FSpec) -> Result<bool> {
    Ok(find_weakly_homogeneous_exceeding(c, f)?.is_none())
}

/// Lexicographically least weakly homogeneous set of exactly `size` elements.
pub fn find_weakly_homogeneous_of_size(c: &Coloring, size: usize) -> Result<Option<Vec<u64>>> {
    find_weakly_homogeneous_of_size_with(c, size, u64::MAX)
}

/// As [`find_weakly_homogeneous_of_size`], giving up after `max_nodes` search nodes.
pub fn find_weakly_homogeneous_of_size_with(
    c: &Coloring,
    size: usize,
    max_nodes: u64,
) -> Result<Option<Vec<u64>>> {
    let mut dfs = WeakHomDfs {
        coloring: c,
        size,
        nodes: 0,
        max_nodes,
    };
    for h0 in c.lo()..=c.hi() {
        if let Some(set) = dfs.from(h0)? {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

/// Size of the largest weakly homogeneous set.
pub fn max_weakly_homogeneous_size(c: &Coloring) -> Result<usize> {
    let mut best = 0;
    while best < c.width() as usize && find_weakly_homogeneous_of_size(c, best + 1)?.is_some() {
        best += 1;
    }
    Ok(best)
}

// ---------------------------------------------------------------------------
// Coloring enumeration
// ---------------------------------------------------------------------------

/// Number of colorings `[lo, hi]^dim → colors`, or `None` past `u128`.
pub fn coloring_count(dim: usize, colors: u32, lo: u64, hi: u64) -> Option<u128> {
    let cells = binomial(hi - lo + 1, dim as u64);
    let cells = u32::try_from(cells).ok()?;
    (colors as u128).checked_pow(cells)
}

/// All colorings `[lo, hi]^dim → colors` in ascending mixed-radix order.
///
/// The digit of the first cell (in lexicographic cell order) is the least
/// significant one, so consecutive colorings differ first in that cell.
#[derive(Debug, Clone)]
pub struct ColoringEnumerator {
    dim: usize,
    colors: u32,
    lo: u64,
    hi: u64,
    digits: Vec<u32>,
    remaining: u128,
}

impl ColoringEnumerator {
    pub fn new(dim: usize, colors: u32, lo: u64, hi: u64, max_colorings: u64) -> Result<Self> {
        if dim == 0 || lo > hi {
            return Err(Error::domain(format!(
                "cannot enumerate colorings of [{lo},{hi}]^{dim}"
            )));
        }
        let total = coloring_count(dim, colors, lo, hi);
        match total {
            Some(t) if t <= max_colorings as u128 => {}
            _ => {
                let cells = binomial(hi - lo + 1, dim as u64);
                return Err(Error::budget(
                    format!("enumerating colorings [{lo},{hi}]^{dim} -> {colors}"),
                    format!("{colors}^{cells} colorings, limit {max_colorings}"),
                ));
            }
        }
        let cells = binomial(hi - lo + 1, dim as u64) as usize;
        Ok(ColoringEnumerator {
            dim,
            colors,
            lo,
            hi,
            digits: vec![0; cells],
            remaining: total.unwrap(),
        })
    }

    pub fn total(&self) -> u128 {
        self.remaining
    }
}

impl Iterator for ColoringEnumerator {
    type Item = Coloring;

    fn next(&mut self) -> Option<Coloring> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let out = Coloring::from_lex_colors(self.dim, self.colors, self.lo, self.hi, &self.digits)
            .expect("enumerated digits are in range");
        for d in self.digits.iter_mut() {
            *d += 1;
            if *d < self.colors {
                break;
            }
            *d = 0;
        }
        Some(out)
    }
}

/// First `f`-bad coloring `[lo, hi]^dim → colors` in enumeration order.
pub fn first_bad_coloring(
    dim: usize,
    colors: u32,
    lo: u64,
    hi: u64,
    f: &FSpec,
    budget: &SearchBudget,
) -> Result<Option<Coloring>> {
    for c in ColoringEnumerator::new(dim, colors, lo, hi, budget.max_colorings)? {
        if is_f_bad_coloring(&c, f)? {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Outcome of a search for the least `R` with no `f`-bad coloring on `[lo, R]`.
#[derive(Debug, Clone)]
pub struct ForcingInterval {
    pub value: u64,
    /// A bad coloring on `[lo, value - 1]`, when `value > lo`.
    pub bad_witness: Option<Coloring>,
}

fn least_forcing_endpoint(
    dim: usize,
    colors: u32,
    lo: u64,
    f: &FSpec,
    budget: &SearchBudget,
) -> Result<ForcingInterval> {
    let mut witness = None;
    for hi in lo.. {
        let found = first_bad_coloring(dim, colors, lo, hi, f, budget).map_err(|e| match e {
            Error::Budget { what, estimate } => Error::Budget {
                what: format!(
                    "{what}; every endpoint in [{lo},{}] admits an {f}-bad coloring",
                    hi.saturating_sub(1)
                ),
                estimate,
            },
            other => other,
        })?;
        match found {
            Some(c) => witness = Some(c),
            None => {
                return Ok(ForcingInterval {
                    value: hi,
                    bad_witness: witness,
                })
            }
        }
    }
    unreachable!("endpoint loop is bounded by the coloring budget")
}

// ---------------------------------------------------------------------------
// Bad sequences
// ---------------------------------------------------------------------------

/// Result of [`longest_bad_sequence`].
#[derive(Debug, Clone)]
pub struct LongestBad {
    /// Maximum length found; only a lower bound when `capped`.
    pub length: usize,
    pub capped: bool,
    pub witness: Witness,
}

struct BadSearch<'a> {
    arity: usize,
    a: u64,
    f: &'a FSpec,
    cap: usize,
    max_nodes: u64,
    memo: HashMap<(usize, Vec<Tuple>), usize>,
}

impl BadSearch<'_> {
    /// Tuples of `[0, bound)^arity` in decreasing lexicographic order.
    fn candidates(&self, bound: u64) -> impl Iterator<Item = Tuple> {
        let arity = self.arity;
        let total = if bound == 0 {
            0
        } else {
            (bound as u128).saturating_pow(arity as u32)
        };
        let mut digits = vec![bound.saturating_sub(1); arity];
        let mut left = total;
        std::iter::from_fn(move || {
            if left == 0 {
                return None;
            }
            left -= 1;
            let out = Tuple::new(digits.clone());
            for d in digits.iter_mut().rev() {
                if *d > 0 {
                    *d -= 1;
                    break;
                }
                *d = bound - 1;
            }
            Some(out)
        })
    }

    fn bound_at(&self, depth: usize) -> u64 {
        self.f.eval(self.a.saturating_add(depth as u64))
    }

    /// Longest continuation from `depth` given the minimal earlier items.
    fn best(&mut self, depth: usize, minimal: &[Tuple]) -> Result<usize> {
        if depth == self.cap {
            return Ok(0);
        }
        let key = (depth, minimal.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        if self.memo.len() as u64 >= self.max_nodes {
            return Err(Error::budget(
                "longest bad sequence search",
                format!("more than {} memoized states", self.max_nodes),
            ));
        }
        let mut best = 0;
        for t in self.candidates(self.bound_at(depth)).collect::<Vec<_>>() {
            if minimal.iter().any(|s| s.le_unchecked(&t)) {
                continue;
            }
            let next = push_minimal(minimal, &t);
            let v = 1 + self.best(depth + 1, &next)?;
            if v > best {
                best = v;
                if depth + best == self.cap {
                    break;
                }
            }
        }
        self.memo.insert(key, best);
        Ok(best)
    }

    /// Walks the memo table, taking the first candidate that attains the maximum.
    fn reconstruct(&mut self, length: usize) -> Result<Vec<Tuple>> {
        let mut items = Vec::with_capacity(length);
        let mut minimal: Vec<Tuple> = Vec::new();
        for depth in 0..length {
            let want = length - depth;
            let mut chosen = None;
            for t in self.candidates(self.bound_at(depth)).collect::<Vec<_>>() {
                if minimal.iter().any(|s| s.le_unchecked(&t)) {
                    continue;
                }
                let next = push_minimal(&minimal, &t);
                if 1 + self.best(depth + 1, &next)? >= want {
                    chosen = Some((t, next));
                    break;
                }
            }
            let (t, next) = chosen.expect("memo promised a continuation");
            items.push(t);
            minimal = next;
        }
        Ok(items)
    }
}

/// Minimal elements of `minimal ∪ {t}`, assuming `t` dominates none of them.
fn push_minimal(minimal: &[Tuple], t: &Tuple) -> Vec<Tuple> {
    let mut next: Vec<Tuple> = minimal
        .iter()
        .filter(|s| !t.le_unchecked(s))
        .cloned()
        .collect();
    next.push(t.clone());
    next.sort_unstable();
    next
}

/// Longest `(a, f)`-bad sequence in `N^arity`, searched to depth `cap`.
///
/// Depth-first over candidates in decreasing lexicographic order, memoized
/// on the antichain of minimal items so far. The witness is the first
/// maximum in that order.
pub fn longest_bad_sequence(arity: usize, a: u64, f: &FSpec, cap: usize) -> Result<LongestBad> {
    longest_bad_sequence_with(arity, a, f, cap, &SearchBudget::default())
}

pub fn longest_bad_sequence_with(
    arity: usize,
    a: u64,
    f: &FSpec,
    cap: usize,
    budget: &SearchBudget,
) -> Result<LongestBad> {
    let mut search = BadSearch {
        arity,
        a,
        f,
        cap,
        max_nodes: budget.max_nodes,
        memo: HashMap::new(),
    };
    let length = search.best(0, &[])?;
    let items = search.reconstruct(length)?;
    let sequence = TupleSequence::new(arity, items)?;
    Ok(LongestBad {
        length,
        capped: length == cap,
        witness: Witness::bad_sequence(sequence, a, f.clone())?,
    })
}

/// `D^f_c(a)`: the least `D` such that every `(a, f)`-bounded sequence of
/// `D + 1` tuples has a dominating pair. Equals the longest bad length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounded {
    pub value: u64,
    /// `value` is only a lower bound.
    pub capped: bool,
}

pub fn compute_d(arity: usize, a: u64, f: &FSpec, cap: usize) -> Result<Bounded> {
    let r = longest_bad_sequence(arity, a, f, cap)?;
    Ok(Bounded {
        value: r.length as u64,
        capped: r.capped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RMethod {
    /// `D^f_c(a) + a`.
    ViaD,
    /// Enumerate every pair coloring of `[a, R]` for growing `R`.
    Brute,
}

/// `R^f_c(a)`: the least `R` such that every `C: [a, R]^2 → c` has a weakly
/// homogeneous `H` with `|H| > f(min H)`.
pub fn compute_r(
    colors: u32,
    a: u64,
    f: &FSpec,
    method: RMethod,
    cap: usize,
    budget: &SearchBudget,
) -> Result<Bounded> {
    match method {
        RMethod::ViaD => {
            let d = longest_bad_sequence_with(colors as usize, a, f, cap, budget)?;
            Ok(Bounded {
                value: d.length as u64 + a,
                capped: d.capped,
            })
        }
        RMethod::Brute => {
            let r = least_forcing_endpoint(2, colors, a, f, budget)?;
            Ok(Bounded {
                value: r.value,
                capped: false,
            })
        }
    }
}

// ---------------------------------------------------------------------------
// Weak Ramsey numbers
// ---------------------------------------------------------------------------

/// `wr_c(a) = a^c`; the case `a = c = 0` is excluded.
pub fn compute_wr(colors: u32, a: u64) -> Result<u128> {
    if colors == 0 && a == 0 {
        return Err(Error::ExcludedCase("wr_c(a) with a = c = 0".into()));
    }
    (a as u128)
        .checked_pow(colors)
        .ok_or_else(|| Error::budget(format!("{a}^{colors}"), "more than 128 bits"))
}

/// Least `R` such that every `C: [0, R]^dim → colors` has a weakly
/// homogeneous set of size `a + 1`, by exhaustive enumeration. The bad
/// coloring found one step below is returned alongside.
pub fn brute_wr(colors: u32, a: u64, dim: usize, budget: &SearchBudget) -> Result<ForcingInterval> {
    if dim == 0 {
        return Err(Error::domain("dimension must be at least 1"));
    }
    least_forcing_endpoint(dim, colors, 0, &FSpec::Const(a), budget)
}

/// All `a^c` tuples of `{0, …, a-1}^c` in strictly decreasing lexicographic order.
pub fn lex_decreasing_bad_sequence(arity: usize, a: u64) -> TupleSequence {
    let search = BadSearch {
        arity,
        a: 0,
        f: &FSpec::Const(a),
        cap: 0,
        max_nodes: 0,
        memo: HashMap::new(),
    };
    let items = search.candidates(a).collect();
    TupleSequence::new(arity, items).expect("uniform arity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primitives::is_weakly_homogeneous;

    #[test]
    fn weak_hom_search_examples() {
        let c = Coloring::constant(2, 1, 0, 3, 0).unwrap();
        let w = find_weakly_homogeneous_exceeding(&c, &FSpec::Const(3))
            .unwrap()
            .unwrap();
        assert_eq!(w.set().unwrap(), &[0, 1, 2, 3]);

        let c = Coloring::from_fn(2, 2, 0, 4, 100, |p| (p[0] + p[1]) as u32 % 2).unwrap();
        assert!(find_weakly_homogeneous_exceeding(&c, &FSpec::Const(5))
            .unwrap()
            .is_none());
    }

    #[test]
    fn f_bad_examples() {
        let c = Coloring::constant(2, 1, 0, 2, 0).unwrap();
        assert!(is_f_bad_coloring(&c, &FSpec::Const(3)).unwrap());
        let c = Coloring::constant(2, 1, 0, 3, 0).unwrap();
        assert!(!is_f_bad_coloring(&c, &FSpec::Const(3)).unwrap());
        let c = Coloring::constant(2, 0, 4, 4, 0).unwrap();
        assert!(is_f_bad_coloring(&c, &FSpec::Const(1)).unwrap());
    }

    #[test]
    fn found_sets_are_lexicographically_least() {
        // Color 1 only on (1,2), so the DFS skips 2 after {0,1}.
        let c = Coloring::from_fn(2, 2, 0, 4, 100, |p| u32::from(p == [1, 2])).unwrap();
        let set = find_weakly_homogeneous_of_size(&c, 3).unwrap().unwrap();
        assert_eq!(set, vec![0, 1, 3]);
        assert!(is_weakly_homogeneous(&c, &set).unwrap());
    }

    #[test]
    fn enumerator_counts_and_order() {
        let e = ColoringEnumerator::new(2, 2, 0, 2, 1 << 10).unwrap();
        assert_eq!(e.total(), 8);
        let all: Vec<_> = e.collect();
        assert_eq!(all.len(), 8);
        assert_eq!(all[1].color(&[0, 1]).unwrap(), 1);
        assert_eq!(all[1].color(&[0, 2]).unwrap(), 0);
        assert!(ColoringEnumerator::new(2, 2, 0, 9, 1 << 10).is_err());
        // One empty coloring, even with zero colors.
        assert_eq!(ColoringEnumerator::new(2, 0, 3, 3, 1).unwrap().count(), 1);
        assert_eq!(ColoringEnumerator::new(2, 0, 3, 4, 1).unwrap().count(), 0);
    }

    #[test]
    fn longest_bad_examples() {
        let r = longest_bad_sequence(1, 0, &FSpec::Const(3), 10).unwrap();
        assert_eq!(r.length, 3);
        assert!(!r.capped);
        assert_eq!(r.witness.sequence().unwrap().to_string(), "(2),(1),(0)");

        let r = longest_bad_sequence(2, 0, &FSpec::Const(2), 10).unwrap();
        assert_eq!(r.length, 4);
        assert_eq!(
            r.witness.sequence().unwrap().to_string(),
            "(1,1),(1,0),(0,1),(0,0)"
        );

        let r = longest_bad_sequence(0, 0, &FSpec::Const(1), 10).unwrap();
        assert_eq!(r.length, 1);
        assert_eq!(r.witness.sequence().unwrap().to_string(), "()");
    }

    #[test]
    fn cap_is_reported() {
        let r = longest_bad_sequence(1, 0, &FSpec::Const(10), 4).unwrap();
        assert_eq!(r.length, 4);
        assert!(r.capped);
    }

    #[test]
    fn compute_d_examples() {
        assert_eq!(compute_d(1, 7, &FSpec::Id, 100).unwrap().value, 7);
        assert_eq!(compute_d(0, 5, &FSpec::Const(0), 100).unwrap().value, 0);
        assert!(compute_d(2, 2, &FSpec::Id, 1000).unwrap().value >= 4);
    }

    #[test]
    fn compute_r_examples() {
        let b = SearchBudget::default();
        let r = |c, a, f: FSpec, m| compute_r(c, a, &f, m, 100, &b).unwrap().value;
        assert_eq!(r(2, 0, FSpec::Const(2), RMethod::ViaD), 4);
        assert_eq!(r(1, 3, FSpec::Id, RMethod::ViaD), 6);
        assert_eq!(r(2, 0, FSpec::Const(2), RMethod::Brute), 4);
    }

    #[test]
    fn brute_budget_error_names_frontier() {
        let b = SearchBudget {
            max_colorings: 64,
            max_nodes: 1,
        };
        let err = compute_r(2, 0, &FSpec::Const(2), RMethod::Brute, 10, &b).unwrap_err();
        match err {
            Error::Budget { what, .. } => assert!(what.contains("[0,3]"), "{what}"),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn wr_formula() {
        assert_eq!(compute_wr(2, 2).unwrap(), 4);
        assert_eq!(compute_wr(1, 5).unwrap(), 5);
        assert_eq!(compute_wr(0, 3).unwrap(), 1);
        assert!(matches!(compute_wr(0, 0), Err(Error::ExcludedCase(_))));
    }

    #[test]
    fn brute_wr_small() {
        let b = SearchBudget::default();
        assert_eq!(brute_wr(1, 3, 2, &b).unwrap().value, 3);
        assert_eq!(brute_wr(2, 1, 2, &b).unwrap().value, 1);
        assert_eq!(brute_wr(0, 3, 2, &b).unwrap().value, 1);
        let r = brute_wr(2, 2, 2, &b).unwrap();
        assert_eq!(r.value, 4);
        let bad = r.bad_witness.unwrap();
        assert_eq!(bad.hi(), 3);
        assert!(is_f_bad_coloring(&bad, &FSpec::Const(2)).unwrap());
    }

    #[test]
    fn lex_sequence_examples() {
        assert_eq!(
            lex_decreasing_bad_sequence(2, 2).to_string(),
            "(1,1),(1,0),(0,1),(0,0)"
        );
        assert_eq!(lex_decreasing_bad_sequence(1, 3).to_string(), "(2),(1),(0)");
        let s = lex_decreasing_bad_sequence(0, 4);
        assert_eq!(s.len(), 1);
        assert_eq!(s.items()[0].arity(), 0);
        assert!(lex_decreasing_bad_sequence(3, 0).is_empty());
    }
}
