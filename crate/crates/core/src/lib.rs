//! Exact solvers for three data-transfer optimization problems:
//!
//! * [`placement`]: connected K-center and K-median server placement on a
//!   path network,
//! * [`sequencing`]: minimum or maximum total decoding time of a packet
//!   sequence whose laminar special pairs may be swapped,
//! * [`scheduling`]: minimum-makespan distribution of identical packets over
//!   disjoint paths with connection initiation times.
//!
//! Every solver has a brute-force counterpart in [`oracle`], and every solve
//! re-evaluates its witness before returning.

pub mod cli;
pub mod error;
pub mod model;
pub mod oracle;
pub mod placement;
pub mod scheduling;
pub mod sequencing;

pub use error::{Error, Result};
pub use model::{
    parse_instance, parse_report, serialize_instance, serialize_report, validate_pairs,
    validate_placement, validate_scheduling, validate_sequencing, Mode, PairMap, PathNode,
    PlacementInstance, SchedulingInstance, SequencingInstance, SolveReport, SwapPair, TransferPath,
    Witness,
};
pub use placement::{solve_k_center, solve_k_median, Objective, PlacementResult};
pub use scheduling::{binary_search_makespan, greedy_schedule, solve_schedule, ScheduleResult};
pub use sequencing::{solve_sequencing, SequencingResult};
