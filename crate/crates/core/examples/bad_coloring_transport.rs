// Moving between f-bad pair colorings and bad sequences.

use weak_ramsey::format::write_coloring;
use weak_ramsey::search::{self, lex_decreasing_bad_sequence};
use weak_ramsey::transforms::{coloring_to_sequence, compute_h, sequence_to_coloring};
use weak_ramsey::{Coloring, FSpec, Result, Witness};

pub fn run_example() -> Result<()> {
    // A constant coloring on [0,2] is const:3-bad; its h-values fall by one per step.
    let f = FSpec::Const(3);
    let constant = Coloring::constant(2, 1, 0, 2, 0)?;
    let h = compute_h(&constant, &f)?;
    println!(
        "h rows: {:?}",
        (0..h.rows()).map(|i| h.row(i).to_vec()).collect::<Vec<_>>()
    );
    let seq = coloring_to_sequence(&constant, &f)?;
    println!("sequence: {seq}");
    println!("{}", Witness::bad_sequence(seq, 0, f)?.certificate());

    // Back again: the lex-decreasing sequence over {0,1}^2 colors [2,5].
    let lex = lex_decreasing_bad_sequence(2, 2);
    let coloring = sequence_to_coloring(&lex, 2)?;
    print!("{}", write_coloring(&coloring)?);
    let hom = search::max_weakly_homogeneous_size(&coloring)?;
    println!("largest weakly homogeneous set: {hom}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
