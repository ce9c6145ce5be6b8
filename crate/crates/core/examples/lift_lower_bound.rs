// Lifting a bad coloring one dimension up through bit positions.

use weak_ramsey::lift::{alpha, alpha_chain, combine_d, g_parities, lift_bad_coloring};
use weak_ramsey::primitives::{is_weakly_homogeneous, Combinations};
use weak_ramsey::{Coloring, Result};

pub fn run_example() -> Result<()> {
    println!("alpha(3, 11) = {}", alpha(3, 11)?);
    for pts in [[0u64, 1, 2], [0, 2, 3], [1, 2, 3]] {
        println!(
            "{pts:?}: alpha chain {:?}, (g0, g1) = {:?}",
            alpha_chain(&pts)?,
            g_parities(&pts)?
        );
    }

    let source = Coloring::constant(2, 1, 0, 2, 0)?;
    println!("D(0,1,2) = {}", combine_d(&source, &[0, 1, 2])?);
    let lifted = lift_bad_coloring(&source, 3)?;
    println!(
        "lifted: {} colors, dimension {}, on [{}, {}]",
        lifted.colors(),
        lifted.dim(),
        lifted.lo(),
        lifted.hi()
    );

    // Scan every subset of size 4..8 for weak homogeneity.
    let mut hits = Vec::new();
    for k in 4..=8 {
        for s in Combinations::over_range(0, 7, k) {
            if is_weakly_homogeneous(&lifted, &s)? {
                hits.push(s);
            }
        }
    }
    println!("weakly homogeneous subsets of size >= 4: {}", hits.len());
    if let Some(s) = hits.first() {
        let colors: Vec<u32> = s
            .windows(3)
            .map(|w| lifted.color(w))
            .collect::<Result<_>>()?;
        println!("  e.g. {s:?} with window colors {colors:?}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
