//! Packet sequencing: minimum and maximum decoding time when laminar pairs of
//! packets may be exchanged, with the decomposition trace.
//!
//! cargo run -p dtso --example sequencing

use dtso::sequencing::{order_cost, solve_sequencing_traced};
use dtso::{Mode, SequencingInstance, SwapPair};

fn main() -> Result<(), dtso::Error> {
    let d = vec![vec![1, 4, 9], vec![3, 0, 2], vec![7, 5, 1]];
    let pairs = [(1, 8), (2, 4), (5, 7), (9, 10)]
        .into_iter()
        .map(|(a, b)| SwapPair::new(a, b).unwrap())
        .collect();
    let inst = SequencingInstance {
        num_types: 3,
        types: vec![1, 2, 3, 1, 3, 2, 1, 2, 3, 1],
        d,
        pairs,
        mode: Mode::Min,
    };
    println!("as given: {}", order_cost(&inst, &inst.types));
    for mode in [Mode::Min, Mode::Max] {
        let (result, trace) = solve_sequencing_traced(&inst.with_mode(mode))?;
        println!(
            "\n{mode:?}: {} with order {:?}",
            result.objective, result.final_order
        );
        println!("swapped: {:?}", result.swapped);
        print!("{trace}");
    }
    Ok(())
}
