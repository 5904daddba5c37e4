// Graphs without three pairwise non-adjacent vertices: a single vertex
// deletion becomes a single split, and short induced cycles are found through
// the complement.

use vsplit::families::{cycle, fig6};
use vsplit::solver::{chvs1_witness_from_chvd1, find_induced_c4_or_c5};
use vsplit::splitting::verify;
use vsplit::{GraphClass, SplitSequence};

pub fn run_example() -> vsplit::Result<()> {
    let c5 = cycle(5)?;
    let s = chvs1_witness_from_chvd1(&c5)?;
    let (ok, _) = verify(&c5, &SplitSequence(vec![s.clone()]), GraphClass::Chordal)?;
    println!("C5: split `{s}` gives chordal: {ok}");

    for (name, g) in [("complement of C7", cycle(7)?.complement()), ("nine-vertex", fig6())] {
        println!("{name}: independence at most two {}", g.independence_at_most_two().0);
        println!("  induced cycle {:?}", find_induced_c4_or_c5(&g)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
