// Vertex deletion, splitting and edge deletion toward chordal graphs, and the
// conversion of an edge deletion set into a split sequence of equal length.

use vsplit::families::{fig4_gk, fig6, star_of_c4};
use vsplit::solver::{solve, Param, SearchOptions, SolverWitness};
use vsplit::splitting::{edge_deletions_to_splits, verify};
use vsplit::GraphClass;

pub fn run_example() -> vsplit::Result<()> {
    let graphs = [("gadget k=3", fig4_gk(3)?), ("star of three C4", star_of_c4(3)?), ("nine-vertex", fig6())];
    for (name, g) in &graphs {
        let opts = SearchOptions::new(3).max_secs(60.0);
        let vd = solve(g, Param::ChVD, &opts)?;
        let vs = solve(g, Param::ChVS, &opts)?;
        let ed = solve(g, Param::ChED, &opts)?;
        println!("{name}: ChVD {}  ChVS {}  ChED {}", vd.optimum, vs.optimum, ed.optimum);
        if let Some(SolverWitness::Edges(es)) = &ed.witness {
            let seq = edge_deletions_to_splits(g, es)?;
            println!("  {} deletions -> {} splits, chordal {}", es.len(), seq.len(), verify(g, &seq, GraphClass::Chordal)?.0);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
