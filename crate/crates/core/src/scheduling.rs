//! Minimum-makespan distribution of identical packets over disjoint paths.
//!
//! Sending `k > 0` packets on path `i` finishes at `ci + k·ps`; an unused path
//! costs nothing. Without a cap on used paths a heap greedy picks the `n`
//! earliest arrivals among all paths. With at most `q` usable paths the
//! makespan is found by binary search over a capacity predicate.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::{validate_scheduling, SchedulingInstance, TransferPath};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScheduleResult {
    pub counts: Vec<i64>,
    pub makespan: i64,
}

/// Finish time of a count vector, 0 when nothing is sent.
pub fn evaluate_counts(paths: &[TransferPath], counts: &[i64]) -> i64 {
    paths
        .iter()
        .zip(counts)
        .filter(|(_, &k)| k > 0)
        .map(|(path, &k)| path.ci + k * path.ps)
        .max()
        .unwrap_or(0)
}

/// Checks that `result` sends exactly `n` packets on at most `q` paths and
/// that its makespan is what the counts evaluate to.
pub fn check_schedule(inst: &SchedulingInstance, result: &ScheduleResult) -> Result<()> {
    let total: i64 = result.counts.iter().sum();
    let used = result.counts.iter().filter(|&&k| k > 0).count();
    let evaluated = evaluate_counts(&inst.paths, &result.counts);
    if total != inst.n
        || used > inst.q
        || result.counts.len() != inst.paths.len()
        || result.counts.iter().any(|&k| k < 0)
        || evaluated != result.makespan
    {
        return Err(Error::WitnessMismatch {
            reported: result.makespan,
            evaluated,
        });
    }
    Ok(())
}

/// Packets `path` can deliver by time `t`, capped at `n_cap`.
pub fn np_count(path: &TransferPath, t: i64, n_cap: i64) -> i64 {
    if path.ci > t {
        0
    } else if path.ps == 0 {
        n_cap
    } else {
        ((t - path.ci) / path.ps).min(n_cap)
    }
}

/// Capacities at a candidate makespan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityProbe {
    pub t: i64,
    pub np: Vec<i64>,
    /// Sum of the `q` largest capacities.
    pub sumnp: i64,
    pub feasible: bool,
}

pub fn feasible(inst: &SchedulingInstance, t: i64) -> FeasibilityProbe {
    let np: Vec<i64> = inst
        .paths
        .iter()
        .map(|path| np_count(path, t, inst.n))
        .collect();
    let mut top = np.clone();
    let q = inst.q.min(top.len());
    if q < top.len() {
        top.select_nth_unstable_by(q, |a, b| b.cmp(a));
    }
    let sumnp = top[..q].iter().sum();
    FeasibilityProbe {
        t,
        np,
        sumnp,
        feasible: sumnp >= inst.n,
    }
}

/// Upper end of the search range: one path carrying every packet.
pub fn makespan_upper_bound(inst: &SchedulingInstance) -> i64 {
    inst.paths
        .iter()
        .map(|path| path.ci + inst.n * path.ps)
        .min()
        .expect("at least one path")
}

/// Fills the `q` most capacious paths in order, ties to the lower index,
/// trimming the last one so the total is `n`.
fn counts_from_probe(inst: &SchedulingInstance, probe: &FeasibilityProbe) -> Vec<i64> {
    let mut order: Vec<usize> = (0..probe.np.len()).collect();
    order.sort_by_key(|&i| Reverse(probe.np[i]));
    let mut counts = vec![0; probe.np.len()];
    let mut remaining = inst.n;
    for &i in order.iter().take(inst.q) {
        if remaining == 0 {
            break;
        }
        let take = probe.np[i].min(remaining);
        counts[i] = take;
        remaining -= take;
    }
    counts
}

/// Smallest feasible makespan, searched over `[0, TMAX]`.
pub fn binary_search_makespan(inst: &SchedulingInstance) -> Result<ScheduleResult> {
    validate_scheduling(inst)?;
    if inst.n == 0 {
        return Ok(ScheduleResult {
            counts: vec![0; inst.paths.len()],
            makespan: 0,
        });
    }
    let (mut lo, mut hi) = (0i64, makespan_upper_bound(inst));
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible(inst, mid).feasible {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let probe = feasible(inst, lo);
    debug_assert!(probe.feasible);
    let result = ScheduleResult {
        counts: counts_from_probe(inst, &probe),
        makespan: lo,
    };
    check_schedule(inst, &result)?;
    Ok(result)
}

/// Heap greedy for the unrestricted case (`q = P`).
///
/// Each path is keyed by the arrival time of its next packet, so the first
/// key is `ci + ps`, not `ci`: keying by the send time would let a path with a
/// small `ci` but a huge `ps` win the first extraction.
pub fn greedy_schedule(inst: &SchedulingInstance) -> Result<ScheduleResult> {
    validate_scheduling(inst)?;
    if inst.q != inst.paths.len() {
        return Err(Error::RestrictedQ {
            q: inst.q,
            p: inst.paths.len(),
        });
    }
    let mut heap: BinaryHeap<Reverse<(i64, usize)>> = inst
        .paths
        .iter()
        .enumerate()
        .map(|(i, path)| Reverse((path.ci + path.ps, i)))
        .collect();
    let mut counts = vec![0i64; inst.paths.len()];
    let mut makespan = 0;
    for _ in 0..inst.n {
        let mut top = heap.peek_mut().expect("heap holds every path");
        let (key, i) = top.0;
        counts[i] += 1;
        makespan = key;
        top.0 = (key + inst.paths[i].ps, i);
    }
    let result = ScheduleResult { counts, makespan };
    check_schedule(inst, &result)?;
    Ok(result)
}

/// Greedy when every path may be used, binary search otherwise.
pub fn solve_schedule(inst: &SchedulingInstance) -> Result<ScheduleResult> {
    if inst.q == inst.paths.len() {
        greedy_schedule(inst)
    } else {
        binary_search_makespan(inst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paths(list: &[(i64, i64)]) -> Vec<TransferPath> {
        list.iter()
            .map(|&(ci, ps)| TransferPath::new(ci, ps))
            .collect()
    }

    #[test]
    fn np_count_examples() {
        assert_eq!(np_count(&TransferPath::new(2, 3), 10, 100), 2);
        assert_eq!(np_count(&TransferPath::new(2, 3), 1, 100), 0);
        assert_eq!(np_count(&TransferPath::new(3, 0), 3, 7), 7);
        assert_eq!(np_count(&TransferPath::new(3, 0), 2, 7), 0);
        assert_eq!(np_count(&TransferPath::new(0, 1), 50, 4), 4);
    }

    #[test]
    fn feasibility_examples() {
        let inst = SchedulingInstance {
            paths: paths(&[(0, 1), (0, 1), (0, 1)]),
            n: 6,
            q: 2,
        };
        let probe = feasible(&inst, 3);
        assert_eq!(probe.np, vec![3, 3, 3]);
        assert_eq!(probe.sumnp, 6);
        assert!(probe.feasible);
        let probe = feasible(&inst, 2);
        assert_eq!(probe.sumnp, 4);
        assert!(!probe.feasible);
        assert!(feasible(&SchedulingInstance { n: 0, ..inst }, 0).feasible);
    }

    #[test]
    fn binary_search_examples() {
        let inst = SchedulingInstance {
            paths: paths(&[(0, 1), (0, 1), (0, 1)]),
            n: 6,
            q: 2,
        };
        assert_eq!(binary_search_makespan(&inst).unwrap().makespan, 3);

        let inst = SchedulingInstance {
            paths: paths(&[(0, 2), (3, 1)]),
            n: 4,
            q: 1,
        };
        let r = binary_search_makespan(&inst).unwrap();
        assert_eq!(
            r,
            ScheduleResult {
                counts: vec![0, 4],
                makespan: 7
            }
        );

        let r = binary_search_makespan(&SchedulingInstance { n: 0, ..inst }).unwrap();
        assert_eq!(
            r,
            ScheduleResult {
                counts: vec![0, 0],
                makespan: 0
            }
        );
    }

    #[test]
    fn greedy_examples() {
        let r = greedy_schedule(&SchedulingInstance::unrestricted(
            paths(&[(0, 100), (1, 1)]),
            1,
        ))
        .unwrap();
        assert_eq!(
            r,
            ScheduleResult {
                counts: vec![0, 1],
                makespan: 2
            }
        );

        let r = greedy_schedule(&SchedulingInstance::unrestricted(
            paths(&[(0, 1), (0, 1)]),
            4,
        ))
        .unwrap();
        assert_eq!(
            r,
            ScheduleResult {
                counts: vec![2, 2],
                makespan: 2
            }
        );

        let r = greedy_schedule(&SchedulingInstance::unrestricted(
            paths(&[(2, 3), (0, 5), (4, 1)]),
            5,
        ))
        .unwrap();
        assert_eq!(
            r,
            ScheduleResult {
                counts: vec![1, 1, 3],
                makespan: 7
            }
        );
    }

    #[test]
    fn greedy_rejects_restricted_q() {
        let inst = SchedulingInstance {
            paths: paths(&[(0, 1), (0, 1)]),
            n: 3,
            q: 1,
        };
        assert_eq!(
            greedy_schedule(&inst),
            Err(Error::RestrictedQ { q: 1, p: 2 })
        );
        assert_eq!(solve_schedule(&inst).unwrap().makespan, 3);
    }

    #[test]
    fn zero_send_time_absorbs_everything() {
        let inst = SchedulingInstance::unrestricted(paths(&[(5, 0), (0, 2)]), 1000);
        let greedy = greedy_schedule(&inst).unwrap();
        let search = binary_search_makespan(&inst).unwrap();
        assert_eq!(greedy.makespan, 5);
        assert_eq!(search.makespan, 5);
    }

    #[test]
    fn witness_check_catches_bad_counts() {
        let inst = SchedulingInstance::unrestricted(paths(&[(0, 1), (0, 1)]), 2);
        let bad = ScheduleResult {
            counts: vec![2, 1],
            makespan: 2,
        };
        assert!(check_schedule(&inst, &bad).is_err());
    }
}
