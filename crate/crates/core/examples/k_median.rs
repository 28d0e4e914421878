//! Connected K-median: sweep every window size on one path and print the best
//! interval for each.
//!
//! cargo run -p dtso --example k_median

use dtso::placement::solve_k_median;
use dtso::PlacementInstance;

fn main() -> Result<(), dtso::Error> {
    let xs = [0, 3, 4, 10, 11, 12, 20, 27, 28, 40];
    let ws = [5, 1, 2, 8, 1, 1, 3, 6, 2, 1];
    for k in 1..=xs.len() {
        let inst = PlacementInstance::from_parts(&xs, &ws, k);
        let best = solve_k_median(&inst)?;
        println!(
            "k = {k:2}: servers on [{}, {}], total weighted distance {}",
            best.q,
            best.q + k - 1,
            best.objective
        );
    }
    Ok(())
}
