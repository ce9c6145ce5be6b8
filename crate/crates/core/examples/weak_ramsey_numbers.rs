// Weak Ramsey numbers for pair colorings: the closed form `a^c` against an
// exhaustive search over every coloring, and `R = D + a` both ways.

use weak_ramsey::search::{self, RMethod, SearchBudget};
use weak_ramsey::{FSpec, Result};

pub fn run_example() -> Result<()> {
    let budget = SearchBudget::default();
    for (c, a) in [(1, 1), (1, 2), (1, 3), (2, 2)] {
        let formula = search::compute_wr(c, a)?;
        let brute = search::brute_wr(c, a, 2, &budget)?;
        println!(
            "wr_{c}({a}): formula {formula}, brute force {}",
            brute.value
        );
        if let Some(w) = &brute.bad_witness {
            println!(
                "  bad coloring one step below lives on [{}, {}]",
                w.lo(),
                w.hi()
            );
        }
        assert_eq!(formula, brute.value as u128);
    }

    let f = FSpec::Const(2);
    for c in 1..=2 {
        let via_d = search::compute_r(c, 1, &f, RMethod::ViaD, 100, &budget)?;
        let brute = search::compute_r(c, 1, &f, RMethod::Brute, 100, &budget)?;
        println!(
            "R^{f}_{c}(1): via D {}, by enumeration {}",
            via_d.value, brute.value
        );
        assert_eq!(via_d, brute);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
