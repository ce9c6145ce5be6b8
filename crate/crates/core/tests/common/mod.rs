//! Brute-force oracles that share no search code with the library.

#![allow(dead_code)]

use weak_ramsey::{Coloring, FSpec};

/// Every subset of `[lo, hi]` as an increasing vector, by bitmask.
pub fn subsets(lo: u64, hi: u64) -> impl Iterator<Item = Vec<u64>> {
    let width = (hi - lo + 1) as u32;
    assert!(width <= 20, "oracle subset scan is exponential");
    (0u64..1 << width).map(move |mask| {
        (0..width as u64)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| lo + b)
            .collect()
    })
}

/// Consecutive windows all share one color.
pub fn weak_hom(c: &Coloring, h: &[u64]) -> bool {
    let d = c.dim();
    if h.len() <= d {
        return true;
    }
    let first = c.color(&h[..d]).unwrap();
    h.windows(d).all(|w| c.color(w).unwrap() == first)
}

/// No weakly homogeneous `H` with `|H| > f(min H)`, by scanning every subset.
pub fn f_bad(c: &Coloring, f: &FSpec) -> bool {
    subsets(c.lo(), c.hi())
        .all(|h| h.is_empty() || h.len() as u64 <= f.eval(h[0]) || !weak_hom(c, &h))
}

/// Largest weakly homogeneous subset size.
pub fn max_weak_hom(c: &Coloring) -> usize {
    subsets(c.lo(), c.hi())
        .filter(|h| weak_hom(c, h))
        .map(|h| h.len())
        .max()
        .unwrap_or(0)
}

pub fn le(s: &[u64], t: &[u64]) -> bool {
    s.iter().zip(t).all(|(x, y)| x <= y)
}

pub fn bad(rows: &[Vec<u64>]) -> bool {
    (0..rows.len()).all(|j| (0..j).all(|i| !le(&rows[i], &rows[j])))
}

pub fn bounded(rows: &[Vec<u64>], a: u64, f: &FSpec) -> bool {
    rows.iter()
        .enumerate()
        .all(|(i, r)| r.iter().copied().max().unwrap_or(0) < f.eval(a + i as u64))
}

/// Longest `(a, f)`-bad sequence by plain DFS over all candidates, no memo.
pub fn longest_bad(arity: usize, a: u64, f: &FSpec, cap: usize) -> usize {
    fn go(arity: usize, a: u64, f: &FSpec, cap: usize, seq: &mut Vec<Vec<u64>>) -> usize {
        if seq.len() == cap {
            return cap;
        }
        let bound = f.eval(a + seq.len() as u64);
        let mut best = seq.len();
        let mut t = vec![0u64; arity];
        if bound == 0 {
            return best;
        }
        loop {
            if seq.iter().all(|s| !le(s, &t)) {
                seq.push(t.clone());
                best = best.max(go(arity, a, f, cap, seq));
                seq.pop();
            }
            // odometer over [0, bound)^arity
            let mut k = 0;
            loop {
                if k == arity {
                    return best;
                }
                t[k] += 1;
                if t[k] < bound {
                    break;
                }
                t[k] = 0;
                k += 1;
            }
        }
    }
    go(arity, a, f, cap, &mut Vec::new())
}

/// Highest differing bit, read off binary strings.
pub fn alpha(x: u64, y: u64) -> u32 {
    let (xs, ys) = (format!("{x:064b}"), format!("{y:064b}"));
    let first = xs
        .chars()
        .zip(ys.chars())
        .position(|(p, q)| p != q)
        .unwrap();
    63 - first as u32
}

/// `C(x̄, y) = C(x̄, z)` for all `x̄ < y < z` from `x`.
pub fn min_d_hom(c: &Coloring, x: &[u64]) -> bool {
    let d = c.dim() - 1;
    let n = x.len();
    let mut ok = true;
    let idx: Vec<usize> = (0..n).collect();
    for_each_subset(&idx, d, &mut |pre| {
        let start = pre.last().map_or(0, |&i| i + 1);
        let mut first = None;
        for y in start..n {
            let mut cell: Vec<u64> = pre.iter().map(|&i| x[i]).collect();
            cell.push(x[y]);
            let col = c.color(&cell).unwrap();
            match first {
                None => first = Some(col),
                Some(f) if f != col => ok = false,
                _ => {}
            }
        }
    });
    ok
}

fn for_each_subset(pool: &[usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn rec(pool: &[usize], k: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            visit(cur);
            return;
        }
        for (i, &p) in pool.iter().enumerate() {
            cur.push(p);
            rec(&pool[i + 1..], k, cur, visit);
            cur.pop();
        }
    }
    rec(pool, k, &mut Vec::new(), visit);
}
