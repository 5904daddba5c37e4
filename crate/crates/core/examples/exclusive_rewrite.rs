// Turning inclusive split sequences on triangle-free graphs into exclusive ones
// of no greater length.

use vsplit::families::{claw, cycle};
use vsplit::splitting::{make_exclusive, verify};
use vsplit::{GraphClass, SplitSequence};

pub fn run_example() -> vsplit::Result<()> {
    let cases = [
        ("claw", claw(), "0 : 1,2 | 2,3\n", GraphClass::UnitInterval),
        ("C6", cycle(6)?, "0 : 1 | 1,5\n1 : 0,2 | 6\n", GraphClass::Chordal),
    ];
    for (name, g, text, class) in cases {
        let seq = SplitSequence::parse(text)?;
        assert!(verify(&g, &seq, class)?.0);
        let exclusive = make_exclusive(&g, &seq, class)?;
        let (ok, _) = verify(&g, &exclusive, class)?;
        println!("{name} toward {class}: verified {ok}");
        print!("  before\n{}  after\n{}", indent(&seq), indent(&exclusive));
    }
    Ok(())
}

fn indent(seq: &SplitSequence) -> String {
    seq.iter().map(|s| format!("    {s}\n")).collect()
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
