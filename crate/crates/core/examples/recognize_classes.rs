// Membership tests with their certificates: an elimination order for chordal
// graphs, a spine for caterpillars, and a forbidden pattern otherwise.

use vsplit::families::{claw, cycle, net, t2, tent};
use vsplit::recognition::verify_report;
use vsplit::{recognize, GraphClass};

pub fn run_example() -> vsplit::Result<()> {
    let graphs = [("claw", claw()), ("net", net()), ("tent", tent()), ("T2", t2()), ("C5", cycle(5)?)];
    for (name, g) in &graphs {
        println!("{name}:");
        for class in [GraphClass::Chordal, GraphClass::Interval, GraphClass::UnitInterval, GraphClass::CaterpillarForest]
        {
            let report = recognize(g, class);
            assert!(verify_report(g, &report));
            let detail: Vec<String> = report.lines().iter().skip(1).map(|(k, v)| format!("{k} {v}")).collect();
            println!("  {:<20} {:<5} {}", class.name(), report.verdict, detail.join(", "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
