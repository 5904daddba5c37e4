// Reading and writing the edge-list format, including labels and a budget.

use vsplit::families::fig4_gk;
use vsplit::io::{format_edge_list, parse_edge_list};
use vsplit::ParseMode;

pub fn run_example() -> vsplit::Result<()> {
    let text = "# a triangle with a pendant\nn 5\n0 1\n1 2\n2 0\n2 3\n";
    let parsed = parse_edge_list(text, ParseMode::Strict)?;
    println!("{} vertices, {} edges, vertex 4 isolated: {}", parsed.graph.n(), parsed.graph.m(), parsed.graph.degree(4) == 0);

    let messy = "0 1\n1 0\n2 2\n1 2\n";
    assert!(parse_edge_list(messy, ParseMode::Strict).is_err());
    let lenient = parse_edge_list(messy, ParseMode::Lenient)?;
    println!("lenient: dropped {} pair(s)", lenient.warnings.total());

    let g = fig4_gk(2)?;
    let out = format_edge_list(&g);
    print!("{out}");
    assert_eq!(parse_edge_list(&out, ParseMode::Strict)?.graph, g);

    let instance = "# k = 4\n0 1\n";
    println!("budget: {:?}", parse_edge_list(instance, ParseMode::Strict)?.budget);
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
