//! Brute-force reference answers, written from the problem definitions and
//! sharing no code with the solvers beyond the instance types.

use crate::error::{Error, Result};
use crate::model::{
    serialize_instance, InstanceDocument, Mode, PlacementInstance, SchedulingInstance,
    SequencingInstance,
};
use crate::placement::{self, Objective};
use crate::scheduling;
use crate::sequencing;

pub const PLACEMENT_CAP: usize = 500;
pub const PAIR_CAP: usize = 20;
pub const EXHAUSTIVE_MAX_PATHS: usize = 5;
pub const EXHAUSTIVE_MAX_PACKETS: i64 = 14;
/// Work budget (path-checks) of the candidate scan.
pub const SCAN_BUDGET: u128 = 200_000_000;

/// Best interval cost, trying every interval and every node.
pub fn brute_placement(inst: &PlacementInstance, objective: Objective) -> Result<i64> {
    brute_placement_capped(inst, objective, PLACEMENT_CAP)
}

pub fn brute_placement_capped(
    inst: &PlacementInstance,
    objective: Objective,
    cap: usize,
) -> Result<i64> {
    let n = inst.nodes.len();
    if n > cap {
        return Err(Error::InstanceTooLarge(format!("{n} nodes, cap {cap}")));
    }
    Ok(brute_placement_costs(inst, objective)
        .into_iter()
        .min()
        .expect("k <= n leaves at least one interval"))
}

/// Cost of every interval; entry `i` is the interval starting at node `i+1`.
pub fn brute_placement_costs(inst: &PlacementInstance, objective: Objective) -> Vec<i64> {
    let n = inst.nodes.len();
    let k = inst.k;
    let mut costs = Vec::with_capacity(n + 1 - k);
    for start in 0..=n - k {
        let end = start + k - 1;
        let (xa, xb) = (inst.nodes[start].x, inst.nodes[end].x);
        let mut worst = 0i64;
        let mut total = 0i64;
        for (j, node) in inst.nodes.iter().enumerate() {
            if (start..=end).contains(&j) {
                continue;
            }
            let to_a = (xa - node.x).abs();
            let to_b = (xb - node.x).abs();
            let d = node.w * to_a.min(to_b);
            worst = worst.max(d);
            total += d;
        }
        costs.push(match objective {
            Objective::Center => worst,
            Objective::Median => total,
        });
    }
    costs
}

/// Optimal decoding time over every subset of swapped pairs.
pub fn brute_sequencing(inst: &SequencingInstance) -> Result<i64> {
    let costs = brute_sequencing_costs(inst)?;
    let best = match inst.mode {
        Mode::Min => costs.iter().min(),
        Mode::Max => costs.iter().max(),
    };
    Ok(*best.expect("at least one subset"))
}

/// Decoding time of every swap subset; bit `i` of the index swaps pair `i`.
pub fn brute_sequencing_costs(inst: &SequencingInstance) -> Result<Vec<i64>> {
    let k = inst.pairs.len();
    if k > PAIR_CAP {
        return Err(Error::TooManyPairs {
            pairs: k,
            cap: PAIR_CAP,
        });
    }
    if inst.types.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut costs = Vec::with_capacity(1 << k);
    for mask in 0u32..(1 << k) {
        let mut order = inst.types.clone();
        for (bit, pair) in inst.pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                let (a, b) = (pair.a() - 1, pair.b() - 1);
                order.swap(a, b);
            }
        }
        let mut cost = 0i64;
        for i in 1..order.len() {
            cost += inst.d[order[i - 1] - 1][order[i] - 1];
        }
        costs.push(cost);
    }
    Ok(costs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScheduleOracleMethod {
    /// Every count vector enumerated.
    Exhaustive,
    /// Candidate arrival times scanned in increasing order with a capacity
    /// test; weaker, as it reasons about capacities like the solver does.
    CandidateScan,
}

/// Minimum makespan by enumerating all count vectors with at most `q` used
/// paths. Only for `P ≤ 5` and `n ≤ 14`.
pub fn brute_schedule_exhaustive(inst: &SchedulingInstance) -> Result<i64> {
    let p = inst.paths.len();
    if p > EXHAUSTIVE_MAX_PATHS || inst.n > EXHAUSTIVE_MAX_PACKETS {
        return Err(Error::InstanceTooLarge(format!(
            "{p} paths and {} packets exceed the exhaustive cap",
            inst.n
        )));
    }
    let mut counts = vec![0i64; p];
    let mut best = i64::MAX;
    enumerate(inst, 0, inst.n, &mut counts, &mut best);
    Ok(best)
}

fn enumerate(
    inst: &SchedulingInstance,
    i: usize,
    remaining: i64,
    counts: &mut [i64],
    best: &mut i64,
) {
    if i + 1 == counts.len() {
        counts[i] = remaining;
        let used = counts.iter().filter(|&&k| k > 0).count();
        if used <= inst.q {
            let mut finish = 0;
            for (path, &k) in inst.paths.iter().zip(counts.iter()) {
                if k > 0 {
                    finish = finish.max(path.ci + k * path.ps);
                }
            }
            *best = (*best).min(finish);
        }
        return;
    }
    for k in 0..=remaining {
        counts[i] = k;
        enumerate(inst, i + 1, remaining - k, counts, best);
    }
}

/// Minimum makespan by testing every possible arrival time in increasing
/// order. The optimum is always the arrival time of some packet.
pub fn brute_schedule_scan(inst: &SchedulingInstance) -> Result<i64> {
    if inst.n == 0 {
        return Ok(0);
    }
    let p = inst.paths.len() as u128;
    let n = inst.n as u128;
    if p * n * p > SCAN_BUDGET {
        return Err(Error::InstanceTooLarge(format!(
            "{p} paths and {n} packets exceed the scan budget"
        )));
    }
    let mut candidates: Vec<i64> = Vec::new();
    for path in &inst.paths {
        for k in 1..=inst.n {
            candidates.push(path.ci + k * path.ps);
            if path.ps == 0 {
                break;
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for t in candidates {
        let mut capacity: Vec<i64> = inst
            .paths
            .iter()
            .map(|path| {
                if path.ci > t {
                    0
                } else if path.ps == 0 {
                    inst.n
                } else {
                    ((t - path.ci) / path.ps).min(inst.n)
                }
            })
            .collect();
        capacity.sort_unstable_by(|a, b| b.cmp(a));
        if capacity.iter().take(inst.q).sum::<i64>() >= inst.n {
            return Ok(t);
        }
    }
    unreachable!("the largest candidate is always feasible")
}

/// Exhaustive when small enough, candidate scan otherwise.
pub fn brute_schedule(inst: &SchedulingInstance) -> Result<(i64, ScheduleOracleMethod)> {
    if inst.paths.len() <= EXHAUSTIVE_MAX_PATHS && inst.n <= EXHAUSTIVE_MAX_PACKETS {
        Ok((
            brute_schedule_exhaustive(inst)?,
            ScheduleOracleMethod::Exhaustive,
        ))
    } else {
        Ok((
            brute_schedule_scan(inst)?,
            ScheduleOracleMethod::CandidateScan,
        ))
    }
}

/// Solver answer next to the oracle answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationOutcome {
    pub solver_objective: i64,
    pub oracle_objective: i64,
    pub matched: bool,
    /// The instance as JSON when the two disagree.
    pub counterexample: Option<String>,
}

impl VerificationOutcome {
    fn new<T: InstanceDocument>(inst: &T, solver_objective: i64, oracle_objective: i64) -> Self {
        let matched = solver_objective == oracle_objective;
        VerificationOutcome {
            solver_objective,
            oracle_objective,
            matched,
            counterexample: (!matched).then(|| serialize_instance(inst)),
        }
    }
}

pub fn verify_placement(
    inst: &PlacementInstance,
    objective: Objective,
) -> Result<VerificationOutcome> {
    let solved = placement::solve(inst, objective)?;
    let oracle = brute_placement(inst, objective)?;
    Ok(VerificationOutcome::new(inst, solved.objective, oracle))
}

pub fn verify_sequencing(inst: &SequencingInstance) -> Result<VerificationOutcome> {
    let solved = sequencing::solve_sequencing(inst)?;
    let oracle = brute_sequencing(inst)?;
    Ok(VerificationOutcome::new(inst, solved.objective, oracle))
}

pub fn verify_schedule(
    inst: &SchedulingInstance,
) -> Result<(VerificationOutcome, ScheduleOracleMethod)> {
    let solved = scheduling::solve_schedule(inst)?;
    let (oracle, method) = brute_schedule(inst)?;
    Ok((
        VerificationOutcome::new(inst, solved.makespan, oracle),
        method,
    ))
}
