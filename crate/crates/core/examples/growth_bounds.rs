// Tower bounds, the fast-growing hierarchy and slow threshold functions.

use num_bigint::BigUint;
use weak_ramsey::bounds::{fgh, lb_bound, log_iter, threshold_f, tower, ub_bound};
use weak_ramsey::{Error, Result};

pub fn run_example() -> Result<()> {
    println!("tower(2, 3) = {}", tower(2, &BigUint::from(3u32))?);
    for (c, m) in [(1, 2), (2, 3), (3, 5)] {
        let (colors, lb) = lb_bound(2, c, m)?;
        println!(
            "d=2 c={c} m={m}: lb {lb} ({colors} colors), ub {}",
            ub_bound(2, c, m)?
        );
    }
    match ub_bound(3, 1, 3) {
        Ok(v) => println!("ub(3,1,3) has {} bits", v.bits()),
        Err(Error::Budget { estimate, .. }) => println!("ub(3,1,3) refused: {estimate}"),
        Err(e) => return Err(e),
    }
    for n in 0..=2 {
        println!("F_{n}(2) = {}", fgh(n, 2)?);
    }
    println!("F_3(1) = {}", fgh(3, 1)?);
    if let Err(Error::Budget { estimate, .. }) = fgh(3, 2) {
        println!("F_3(2) refused: {estimate}");
    }
    let x = BigUint::from(1u64) << 64u32;
    println!("log^(2)(2^64) = {}", log_iter(2, &x)?);
    println!("f_2(2^64) at d=3 = {}", threshold_f(3, 2, &x)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
