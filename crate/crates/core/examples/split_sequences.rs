// Splitting vertices by hand, tracking descendants and round-tripping the
// text form of a sequence.

use vsplit::families::{claw, cycle};
use vsplit::{apply_sequence, recognize, GraphClass, Split, SplitSequence};

pub fn run_example() -> vsplit::Result<()> {
    // cutting a 4-cycle open
    let c4 = cycle(4)?;
    let seq = SplitSequence(vec![Split::new(0, vec![1], vec![3])]);
    let (p5, map) = apply_sequence(&c4, &seq)?;
    println!("C4 after `{}`: {:?}", seq.0[0], p5.edge_list());
    println!("copies of 0: {:?}", map.descendants[0]);
    println!("union of paths: {}", recognize(&p5, GraphClass::UnionOfPaths).verdict);

    // an inclusive split keeps the shared neighbor on both copies
    let text = "0 : 1,2 | 2,3\n";
    let seq = SplitSequence::parse(text)?;
    let (h, _) = apply_sequence(&claw(), &seq)?;
    println!("claw after `{}`: {:?} (exclusive: {})", text.trim(), h.edge_list(), seq.is_exclusive());
    assert_eq!(seq.to_text(), text);
    Ok(())
}

#[allow(dead_code)]
fn main() -> vsplit::Result<()> {
    run_example()
}
