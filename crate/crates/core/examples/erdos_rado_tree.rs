// Erdős–Rado trees, min_d-homogeneous extraction and dimension reduction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use weak_ramsey::lift::{
    build_er_tree, extract_min_d_homogeneous, find_weakly_homogeneous_recursive, reduce_dimension,
};
use weak_ramsey::primitives::DEFAULT_MAX_CELLS;
use weak_ramsey::{Coloring, Result};

pub fn run_example() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = Coloring::from_fn(3, 2, 0, 12, DEFAULT_MAX_CELLS, |_| rng.gen_range(0..2))?;

    let tree = build_er_tree(&c)?;
    println!("tree: {} nodes, depth {}", tree.len(), tree.depth());
    println!("leftmost deepest branch: {:?}", tree.leftmost_deepest());

    let w = extract_min_d_homogeneous(&c)?;
    let x = w.set().unwrap().to_vec();
    println!("{}: {x:?}", w.certificate());

    if x.len() > 2 {
        let reduced = reduce_dimension(&c, &x)?;
        println!(
            "reduced to dimension {} on {} points, top {}",
            reduced.coloring.dim(),
            reduced.ground.len(),
            reduced.top
        );
    }

    let found = find_weakly_homogeneous_recursive(&c, 4)?;
    for lvl in &found.levels {
        println!("  level {lvl:?}");
    }
    match found.found {
        Some(w) => println!("weakly homogeneous: {:?}", w.set().unwrap()),
        None => println!("reduction fell short of size 4"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
