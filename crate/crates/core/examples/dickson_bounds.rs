// Longest bad sequences under Dickson's lemma, with their witnesses.

use weak_ramsey::format::write_sequence;
use weak_ramsey::search;
use weak_ramsey::{FSpec, Result};

pub fn run_example() -> Result<()> {
    // One coordinate: the longest bad sequence is exactly f(a) long.
    let d1 = search::compute_d(1, 7, &FSpec::Id, 100)?;
    println!("D^id_1(7) = {}", d1.value);

    // Constant bound 2 on pairs: every tuple of {0,1}^2 once, decreasing.
    let r = search::longest_bad_sequence(2, 0, &FSpec::Const(2), 100)?;
    println!(
        "D^const:2_2(0) = {}: {}",
        r.length,
        r.witness.sequence().unwrap()
    );

    // Growing bound: the norm may rise with the index.
    let r = search::longest_bad_sequence(2, 2, &FSpec::Id, 100)?;
    println!("D^id_2(2) = {} ({})", r.length, r.witness.certificate());
    print!("{}", write_sequence(r.witness.sequence().unwrap()));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
