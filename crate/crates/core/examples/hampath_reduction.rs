// Building exclusive interval splitting instances from cubic graphs and
// moving between Hamiltonian paths and solutions in both directions.

use vsplit::families::cubic_sample;
use vsplit::reduction::{extract_hampath, forward_witness, reduce_hampath_to_ivxs};
use vsplit::solver::{hamiltonian_path_exists, min_splits, SearchOptions, SolverWitness, SplitMode};
use vsplit::GraphClass;

pub fn run_example() -> vsplit::Result<()> {
    for name in ["k4", "fig2", "prism", "cube", "no16"] {
        let g = cubic_sample(name)?;
        let inst = reduce_hampath_to_ivxs(&g)?;
        let path = hamiltonian_path_exists(&g)?;
        let r = min_splits(&inst.graph, GraphClass::Interval, SplitMode::Exclusive, &SearchOptions::new(inst.budget))?;
        println!(
            "{name}: {} vertices after subdivision, budget {}, path {:?}, search {}",
            inst.graph.n(),
            inst.budget,
            path,
            r.optimum
        );
        if let Some(p) = &path {
            let seq = forward_witness(&inst, p)?;
            println!("  from the path: {}", seq.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("; "));
        }
        if let Some(SolverWitness::Splits(seq)) = &r.witness {
            println!("  back from the search: {:?}", extract_hampath(&inst, seq)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
