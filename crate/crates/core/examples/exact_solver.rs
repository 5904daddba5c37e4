// Exhaustive optima for every splitting and deletion parameter on a few small
// graphs, with the report lines the command line prints.

use vsplit::families::{cycle, net, star_of_c4};
use vsplit::solver::{solve, Param, SearchOptions};

pub fn run_example() -> vsplit::Result<()> {
    let opts = SearchOptions::new(3).max_secs(30.0);
    for (name, g) in [("C5", cycle(5)?), ("net", net()), ("star of three C4", star_of_c4(3)?)] {
        println!("{name}:");
        for param in Param::ALL {
            let r = solve(&g, param, &opts)?;
            println!("  {:<6} {:>4}  ({} nodes)", r.param, r.optimum.to_string(), r.stats.nodes);
        }
    }
    let r = solve(&cycle(6)?, Param::ChVS, &opts)?;
    for (k, v) in r.lines() {
        println!("{k} {v}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
