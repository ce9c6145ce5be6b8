use crate::error::{Error, Result};
use crate::primitives::{Coloring, Combinations};

fn check_set(c: &Coloring, h: &[u64]) -> Result<()> {
    if h.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(format!("{h:?} is not strictly increasing")));
    }
    if let Some(&x) = h.iter().find(|&&x| !c.contains(x)) {
        return Err(Error::domain(format!(
            "element {x} outside [{},{}]",
            c.lo(),
            c.hi()
        )));
    }
    Ok(())
}

/// All consecutive `d`-windows of `h` share one color. Vacuous when `|h| ≤ d`.
pub fn is_weakly_homogeneous(c: &Coloring, h: &[u64]) -> Result<bool> {
    check_set(c, h)?;
    let d = c.dim();
    if h.len() <= d {
        return Ok(true);
    }
    let first = c.color(&h[..d])?;
    for w in h.windows(d).skip(1) {
        if c.color(w)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All `d`-subsets of `h` share one color.
pub fn is_homogeneous(c: &Coloring, h: &[u64]) -> Result<bool> {
    check_set(c, h)?;
    let mut cells = Combinations::new(h.to_vec(), c.dim());
    let Some(first) = cells.next() else {
        return Ok(true);
    };
    let first = c.color(&first)?;
    for cell in cells {
        if c.color(&cell)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For a `(d+1)`-dimensional coloring: `C(x̄, y) = C(x̄, z)` whenever
/// `x_0 < … < x_{d-1} < y < z` all lie in `x`.
pub fn is_min_d_homogeneous(c: &Coloring, x: &[u64]) -> Result<bool> {
    check_set(c, x)?;
    let d = c.dim() - 1;
    let mut cell = Vec::with_capacity(d + 1);
    for prefix in Combinations::new(x.to_vec(), d) {
        let start = match prefix.last() {
            Some(&p) => x.partition_point(|&v| v <= p),
            None => 0,
        };
        let tail = &x[start..];
        let Some((&y, rest)) = tail.split_first() else {
            continue;
        };
        cell.clear();
        cell.extend_from_slice(&prefix);
        cell.push(y);
        let want = c.color(&cell)?;
        for &z in rest {
            cell[d] = z;
            if c.color(&cell)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
