//! Makespan scheduling when at most `q` paths may be used: the binary search
//! and the capacity probes it evaluates.
//!
//! cargo run -p dtso --example scheduling_restricted

use dtso::scheduling::{binary_search_makespan, feasible, makespan_upper_bound};
use dtso::{SchedulingInstance, TransferPath};

fn main() -> Result<(), dtso::Error> {
    let paths = vec![
        TransferPath::new(0, 4),
        TransferPath::new(3, 2),
        TransferPath::new(10, 1),
        TransferPath::new(2, 3),
    ];
    let base = SchedulingInstance::unrestricted(paths, 30);
    for q in 1..=base.paths.len() {
        let inst = base.with_q(q);
        let r = binary_search_makespan(&inst)?;
        let probe = feasible(&inst, r.makespan);
        let before = feasible(&inst, r.makespan - 1);
        println!(
            "q = {q}: makespan {} (search range [0, {}]), capacities {:?} sum {} vs {} at t-1",
            r.makespan,
            makespan_upper_bound(&inst),
            probe.np,
            probe.sumnp,
            before.sumnp
        );
        println!("       counts {:?}", r.counts);
    }
    Ok(())
}
