//! Connected K-center: place 3 consecutive servers on a path of 8 nodes and
//! show the two half-line envelopes the sweep reads from.
//!
//! cargo run -p dtso --example k_center

use dtso::placement::{build_envelopes, solve_k_center};
use dtso::PlacementInstance;

fn main() -> Result<(), dtso::Error> {
    let inst =
        PlacementInstance::from_parts(&[0, 4, 5, 9, 14, 15, 22, 30], &[6, 1, 3, 2, 5, 4, 1, 2], 3);
    let (right, left) = build_envelopes(&inst)?;
    println!(
        "right-oriented envelope ({} segments):",
        right.segments.len()
    );
    print!("{}", right.to_csv());
    println!("left-oriented envelope ({} segments):", left.segments.len());
    print!("{}", left.to_csv());

    let best = solve_k_center(&inst)?;
    println!(
        "servers on nodes {}..={}, max weighted distance {}",
        best.q,
        best.q + inst.k - 1,
        best.objective
    );
    Ok(())
}
