//! Unrestricted makespan scheduling with the arrival-time heap greedy.
//!
//! cargo run -p dtso --example scheduling_greedy

use dtso::{greedy_schedule, SchedulingInstance, TransferPath};

fn main() -> Result<(), dtso::Error> {
    let paths = vec![
        TransferPath::new(0, 100),
        TransferPath::new(1, 1),
        TransferPath::new(5, 2),
        TransferPath::new(12, 0),
    ];
    for n in [1, 5, 20, 200] {
        let inst = SchedulingInstance::unrestricted(paths.clone(), n);
        let r = greedy_schedule(&inst)?;
        println!(
            "n = {n:3}: makespan {:3}, counts {:?}",
            r.makespan, r.counts
        );
    }
    Ok(())
}
