//! Cross-check every solver against its brute-force oracle on the bundled
//! sample instances.
//!
//! cargo run -p dtso --example verify

use dtso::oracle::{verify_placement, verify_schedule, verify_sequencing};
use dtso::placement::Objective;
use dtso::{parse_instance, PlacementInstance, SchedulingInstance, SequencingInstance};

fn main() -> Result<(), dtso::Error> {
    let placement: PlacementInstance = parse_instance(include_bytes!("data/placement.json"))?;
    for objective in [Objective::Center, Objective::Median] {
        let outcome = verify_placement(&placement, objective)?;
        println!("{objective:?}: {outcome:?}");
    }

    let sequencing: SequencingInstance = parse_instance(include_bytes!("data/sequencing.json"))?;
    println!("sequencing: {:?}", verify_sequencing(&sequencing)?);

    let scheduling: SchedulingInstance = parse_instance(include_bytes!("data/scheduling.json"))?;
    let (outcome, method) = verify_schedule(&scheduling)?;
    println!("scheduling ({method:?}): {outcome:?}");
    Ok(())
}
