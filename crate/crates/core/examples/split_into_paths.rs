// Optimal splitting into a disjoint union of paths from a minimum trail
// partition.

use vsplit::families::{cubic_sample, cycle, t_d_star};
use vsplit::paths::{min_splits_to_paths, split_sequence_to_paths, trail_partition};
use vsplit::{apply_sequence, recognize, GraphClass};

pub fn run_example() -> vsplit::Result<()> {
    for (name, g) in [("C6", cycle(6)?), ("K4", cubic_sample("k4")?), ("cube", cubic_sample("cube")?), ("star", t_d_star(5, 2)?)] {
        let trails = trail_partition(&g);
        let seq = split_sequence_to_paths(&g);
        let (h, _) = apply_sequence(&g, &seq)?;
        assert!(recognize(&h, GraphClass::UnionOfPaths).verdict);
        println!("{name}: {} trails, {} splits (formula {})", trails.len(), seq.len(), min_splits_to_paths(&g));
        for t in &trails.trails {
            println!("  trail {:?}", t.walk);
        }
        print!("{}", seq.to_text());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
