//! Higher-dimensional constructions.
//!
//! The lower-bound side lifts an `m`-bad `d`-dimensional coloring on
//! `[0, R-1]` to an `m`-bad `(d+1)`-dimensional coloring on `[0, 2^R - 1]`
//! using the highest differing bit [`alpha`]. The upper-bound side grows an
//! Erdős–Rado tree of `min_d`-homogeneous sequences, takes its deepest
//! branch, and drops one dimension by fixing the top element.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::primitives::{
    is_min_d_homogeneous, is_weakly_homogeneous, ColorRule, Coloring, FSpec, Witness,
    DEFAULT_MAX_CELLS,
};
use crate::search;

/// Largest `R` accepted by [`lift_bad_coloring`]; the lifted domain is `[0, 2^R - 1]`.
pub const MAX_LIFT_WIDTH: u64 = 16;

/// Highest bit position where `x` and `y` differ, for `x < y`.
pub fn alpha(x: u64, y: u64) -> Result<u32> {
    if x >= y {
        return Err(Error::Order { x, y });
    }
    Ok(63 - (x ^ y).leading_zeros())
}

/// `α` over consecutive pairs of `points`.
pub fn alpha_chain(points: &[u64]) -> Result<Vec<u32>> {
    points.windows(2).map(|w| alpha(w[0], w[1])).collect()
}

fn monotone_prefix(chain: &[u32], cmp: impl Fn(u32, u32) -> bool) -> usize {
    chain.windows(2).take_while(|w| cmp(w[0], w[1])).count()
}

/// Parities of the largest `i` (resp. `j`) such that the α chain is strictly
/// increasing (resp. decreasing) through position `i` (resp. `j`).
pub fn g_parities(points: &[u64]) -> Result<(u32, u32)> {
    let chain = alpha_chain(points)?;
    let up = monotone_prefix(&chain, |a, b| a < b);
    let down = monotone_prefix(&chain, |a, b| a > b);
    Ok(((up % 2) as u32, (down % 2) as u32))
}

/// `C` read off the α chain when it is strictly monotone, `0` otherwise.
pub fn cbar(c: &Coloring, points: &[u64]) -> Result<u32> {
    if points.len() != c.dim() + 1 {
        return Err(Error::Arity {
            expected: c.dim() + 1,
            found: points.len(),
        });
    }
    let mut chain: Vec<u64> = alpha_chain(points)?.into_iter().map(u64::from).collect();
    if chain.windows(2).all(|w| w[0] < w[1]) {
        c.color(&chain)
    } else if chain.windows(2).all(|w| w[0] > w[1]) {
        chain.reverse();
        c.color(&chain)
    } else {
        Ok(0)
    }
}

/// `4·C̄ + 2·g0 + g1`, a color in `[0, 4c - 1]`.
pub fn combine_d(c: &Coloring, points: &[u64]) -> Result<u32> {
    let base = cbar(c, points)?;
    let (g0, g1) = g_parities(points)?;
    Ok(4 * base + 2 * g0 + g1)
}

/// The two parity colorings `g0`, `g1` of dimension `dim` on `[lo, hi]`.
pub fn parity_colorings(dim: usize, lo: u64, hi: u64) -> Result<(Coloring, Coloring)> {
    let g = |pick: fn((u32, u32)) -> u32| {
        Coloring::from_fn(dim, 2, lo, hi, DEFAULT_MAX_CELLS, |p| {
            pick(g_parities(p).expect("cells are increasing"))
        })
    };
    Ok((g(|p| p.0)?, g(|p| p.1)?))
}

/// Rule behind [`lift_bad_coloring`].
#[derive(Debug)]
pub struct LiftedRule {
    source: Coloring,
    m: u64,
    memo: Mutex<HashMap<Vec<u64>, u32>>,
}

impl LiftedRule {
    pub fn source(&self) -> &Coloring {
        &self.source
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    fn uncached(&self, points: &[u64]) -> Result<u32> {
        let own = combine_d(&self.source, points)?;
        let d = self.source.dim();
        let mut window = Vec::with_capacity(d + 1);
        for y in 0..points[0] {
            window.clear();
            window.push(y);
            window.extend_from_slice(&points[..d]);
            if combine_d(&self.source, &window)? == own {
                return Ok(own + 1);
            }
        }
        Ok(0)
    }
}

impl ColorRule for LiftedRule {
    fn color(&self, points: &[u64]) -> Result<u32> {
        if let Some(&v) = self.memo.lock().unwrap().get(points) {
            return Ok(v);
        }
        let v = self.uncached(points)?;
        self.memo.lock().unwrap().insert(points.to_vec(), v);
        Ok(v)
    }

    fn name(&self) -> &str {
        "lift"
    }

    fn params(&self) -> Vec<(String, String)> {
        vec![("m".into(), self.m.to_string())]
    }

    fn sources(&self) -> Vec<&Coloring> {
        vec![&self.source]
    }
}

/// Lifts an `m`-bad `C: [0, R-1]^d → c` to `D̄: [0, 2^R - 1]^{d+1} → 4c + 1`.
///
/// `D̄(x̄) = D(x̄) + 1` when some `y < x_0` makes `{y} ∪ x̄` weakly
/// homogeneous for `D = 4·C̄ + 2·g0 + g1`, and `0` otherwise. Every
/// `D̄`-weakly homogeneous set of more than `d + 1` elements has at most
/// `m` elements.
pub fn lift_bad_coloring(c: &Coloring, m: u64) -> Result<Coloring> {
    let d = c.dim() as u64;
    if c.lo() != 0 {
        return Err(Error::precondition(format!(
            "source coloring must start at 0, starts at {}",
            c.lo()
        )));
    }
    if c.colors() == 0 {
        return Err(Error::precondition(
            "source coloring needs at least one color",
        ));
    }
    if m < d {
        return Err(Error::precondition(format!(
            "m = {m} is below the dimension {d}"
        )));
    }
    let width = c.width();
    if width > MAX_LIFT_WIDTH {
        return Err(Error::budget(
            format!("lifting a coloring on [0,{}]", c.hi()),
            format!("a domain of 2^{width} points, limit 2^{MAX_LIFT_WIDTH}"),
        ));
    }
    if let Some(w) = search::find_weakly_homogeneous_exceeding(c, &FSpec::Const(m))? {
        return Err(Error::precondition(format!(
            "source coloring is not {m}-bad: {w}"
        )));
    }
    let colors = c
        .colors()
        .checked_mul(4)
        .and_then(|x| x.checked_add(1))
        .ok_or_else(|| Error::domain("too many colors to lift"))?;
    let rule = LiftedRule {
        source: c.clone(),
        m,
        memo: Mutex::new(HashMap::new()),
    };
    Coloring::from_rule(c.dim() + 1, colors, 0, (1u64 << width) - 1, Arc::new(rule))
}

// ---------------------------------------------------------------------------
// Erdős–Rado tree
// ---------------------------------------------------------------------------

/// Tree of increasing sequences closed under prefixes, one node per step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ERTree {
    /// Node sequences in insertion order; index 0 is the root `⟨⟩`.
    nodes: Vec<Vec<u64>>,
    parent: Vec<Option<usize>>,
}

impl ERTree {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[Vec<u64>] {
        &self.nodes
    }

    pub fn parent(&self, node: usize) -> Option<usize> {
        self.parent[node]
    }

    pub fn children(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(move |&i| self.parent[i] == Some(node))
    }

    /// Length of the longest node sequence.
    pub fn depth(&self) -> usize {
        self.nodes.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Longest node, leftmost (lexicographically least) among ties.
    pub fn leftmost_deepest(&self) -> &[u64] {
        leftmost_longest(self.nodes.iter().map(|n| (n, ()))).0
    }
}

fn leftmost_longest<'a, T>(it: impl Iterator<Item = (&'a Vec<u64>, T)>) -> (&'a [u64], T)
where
    T: Copy,
{
    let mut best: Option<(&Vec<u64>, T)> = None;
    for (n, tag) in it {
        let better = match best {
            None => true,
            Some((b, _)) => n.len() > b.len() || (n.len() == b.len() && n < b),
        };
        if better {
            best = Some((n, tag));
        }
    }
    let (n, tag) = best.expect("tree has a root");
    (n, tag)
}

/// `T_0 = {⟨⟩}`, `T_{i+1} = T_i ∪ {σ⌢⟨i⟩}` for the leftmost longest `σ ∈ T_i`
/// such that `σ⌢⟨i⟩` is `min_d`-homogeneous, over every `i` in the domain.
pub fn build_er_tree(c: &Coloring) -> Result<ERTree> {
    let mut nodes: Vec<Vec<u64>> = vec![Vec::new()];
    let mut parent = vec![None];
    let mut candidate = Vec::new();
    for i in c.lo()..=c.hi() {
        let mut eligible = Vec::new();
        for (idx, sigma) in nodes.iter().enumerate() {
            candidate.clear();
            candidate.extend_from_slice(sigma);
            candidate.push(i);
            if is_min_d_homogeneous(c, &candidate)? {
                eligible.push(idx);
            }
        }
        let (_, at) = leftmost_longest(eligible.iter().map(|&k| (&nodes[k], k)));
        let mut child = nodes[at].clone();
        child.push(i);
        nodes.push(child);
        parent.push(Some(at));
    }
    Ok(ERTree { nodes, parent })
}

/// Deepest leftmost branch of the Erdős–Rado tree, greedily extended by any
/// later points that keep it `min_d`-homogeneous.
pub fn extract_min_d_homogeneous(c: &Coloring) -> Result<Witness> {
    let tree = build_er_tree(c)?;
    let mut set = tree.leftmost_deepest().to_vec();
    let start = set.last().map_or(c.lo(), |&x| x + 1);
    for z in start..=c.hi() {
        set.push(z);
        if !is_min_d_homogeneous(c, &set)? {
            set.pop();
        }
    }
    Witness::min_d_hom_set(c.clone(), set)
}

/// `D(x̄) = C(x̄, max X)` on `X ∖ {max X}`, relabeled to `[0, |X| - 2]`.
#[derive(Debug, Clone)]
pub struct ReducedColoring {
    pub coloring: Coloring,
    /// `ground[i]` is the original point behind label `i`.
    pub ground: Vec<u64>,
    /// `max X`.
    pub top: u64,
}

impl ReducedColoring {
    /// Original points for a set of labels.
    pub fn unlabel(&self, labels: &[u64]) -> Vec<u64> {
        labels.iter().map(|&l| self.ground[l as usize]).collect()
    }
}

pub fn reduce_dimension(c: &Coloring, x: &[u64]) -> Result<ReducedColoring> {
    if c.dim() < 2 {
        return Err(Error::precondition(
            "need a coloring of dimension at least 2",
        ));
    }
    let d = c.dim() - 1;
    if x.len() <= d {
        return Err(Error::precondition(format!(
            "set of size {} is too small to reduce dimension {}",
            x.len(),
            c.dim()
        )));
    }
    if !is_min_d_homogeneous(c, x)? {
        return Err(Error::precondition(format!(
            "{x:?} is not min_{d}-homogeneous"
        )));
    }
    let (&top, ground) = x.split_last().unwrap();
    let ground = ground.to_vec();
    let hi = ground.len() as u64 - 1;
    let mut cell = Vec::with_capacity(d + 1);
    let mut err = None;
    let coloring = Coloring::from_fn(d, c.colors(), 0, hi, DEFAULT_MAX_CELLS, |labels| {
        cell.clear();
        cell.extend(labels.iter().map(|&l| ground[l as usize]));
        cell.push(top);
        c.color(&cell).unwrap_or_else(|e| {
            err.get_or_insert(e);
            0
        })
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(ReducedColoring {
        coloring,
        ground,
        top,
    })
}

/// One dimension-reduction step of [`find_weakly_homogeneous_recursive`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelReport {
    pub dim: usize,
    pub domain_size: u64,
    pub target: usize,
    /// Size of the extracted `min_d`-homogeneous set; `None` at dimension 2,
    /// which is searched exhaustively.
    pub extracted: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct RecursiveSearch {
    pub found: Option<Witness>,
    pub levels: Vec<LevelReport>,
}

/// Weakly homogeneous set of at least `target` points, obtained by
/// repeatedly extracting a `min_d`-homogeneous set and fixing its maximum
/// until dimension 2, where the search is exhaustive.
pub fn find_weakly_homogeneous_recursive(c: &Coloring, target: usize) -> Result<RecursiveSearch> {
    if c.dim() < 2 {
        return Err(Error::precondition(
            "recursive search needs dimension at least 2",
        ));
    }
    let mut levels = Vec::new();
    let set = recurse(c, target, &mut levels)?;
    let found = match set {
        Some(set) if set.len() >= target && is_weakly_homogeneous(c, &set)? => {
            Some(Witness::weak_hom_set(c.clone(), set, None, target)?)
        }
        _ => None,
    };
    Ok(RecursiveSearch { found, levels })
}

fn recurse(c: &Coloring, target: usize, levels: &mut Vec<LevelReport>) -> Result<Option<Vec<u64>>> {
    let mut report = LevelReport {
        dim: c.dim(),
        domain_size: c.width(),
        target,
        extracted: None,
    };
    if c.dim() == 2 || target <= c.dim() {
        levels.push(report);
        return search::find_weakly_homogeneous_of_size(c, target);
    }
    let x = extract_min_d_homogeneous(c)?;
    let x = x.set().unwrap().to_vec();
    report.extracted = Some(x.len());
    levels.push(report);
    if x.len() < c.dim() {
        return Ok(None);
    }
    let reduced = reduce_dimension(c, &x)?;
    let Some(labels) = recurse(&reduced.coloring, target - 1, levels)? else {
        return Ok(None);
    };
    let mut set = reduced.unlabel(&labels);
    set.push(reduced.top);
    Ok(Some(set))
}
