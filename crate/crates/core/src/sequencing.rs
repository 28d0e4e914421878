//! Optimal packet sequencing under laminar swappable pairs.
//!
//! Position intervals are decomposed top-down: an interval whose first
//! position is paired with its last becomes a spanning pair around an inner
//! interval; otherwise it is cut after the partner of its first position.
//! Each interval carries a 2×2 table of optimal internal costs indexed by the
//! swap states of its two endpoint positions, and tables are combined
//! bottom-up. The tree lives in an arena so nesting depth never touches the
//! call stack.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{validate_sequencing, Mode, PairMap, SequencingInstance};

type Entries = [[Option<i64>; 2]; 2];

/// Optimal costs of positions `a..=b` for each pair of endpoint swap states.
/// `rez[p][q]` is `None` when the state combination is infeasible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndpointCostTable {
    pub a: usize,
    pub b: usize,
    pub rez: Entries,
}

impl EndpointCostTable {
    /// Table of a lone position: both states cost nothing, mixed states are
    /// impossible.
    pub fn single(position: usize) -> Self {
        EndpointCostTable {
            a: position,
            b: position,
            rez: [[Some(0), None], [None, Some(0)]],
        }
    }

    pub fn absent(a: usize, b: usize) -> Self {
        EndpointCostTable {
            a,
            b,
            rez: [[None; 2]; 2],
        }
    }

    /// Best entry and its endpoint states; ties keep the earliest in
    /// `(0,0), (0,1), (1,0), (1,1)` order.
    pub fn best(&self, mode: Mode) -> Option<(i64, usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for p in 0..2 {
            for q in 0..2 {
                if let Some(v) = self.rez[p][q] {
                    if best.is_none_or(|(b, _, _)| mode.improves(v, b)) {
                        best = Some((v, p, q));
                    }
                }
            }
        }
        best
    }
}

/// How an interval splits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    Single,
    /// The first and last positions form a pair.
    SpanningPair,
    /// `[a, cut]` followed by `[cut+1, b]`.
    Concat {
        cut: usize,
    },
}

pub fn decompose(a: usize, b: usize, pairs: &PairMap) -> Result<Step> {
    let partner = pairs[a];
    if partner < a || partner > b {
        return Err(Error::DecompositionViolation { a, b, partner });
    }
    Ok(if a == b {
        Step::Single
    } else if partner == b {
        Step::SpanningPair
    } else {
        Step::Concat { cut: partner }
    })
}

/// A combined table plus, for each output entry, the operand states that
/// produced it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Combination {
    pub table: EndpointCostTable,
    choice: [[Option<(usize, usize)>; 2]; 2],
}

/// Type found at `position` when its swap state is `state`.
#[inline]
fn type_at(inst: &SequencingInstance, pairs: &PairMap, position: usize, state: usize) -> usize {
    if state == 0 {
        inst.types[position - 1]
    } else {
        inst.types[pairs[position] - 1]
    }
}

fn consider(
    mode: Mode,
    slot: &mut Option<i64>,
    pick: &mut Option<(usize, usize)>,
    cost: i64,
    from: (usize, usize),
) {
    if slot.is_none_or(|current| mode.improves(cost, current)) {
        *slot = Some(cost);
        *pick = Some(from);
    }
}

/// Wraps the interval strictly inside the pair `(a, b)` with both endpoints,
/// once in original order and once exchanged. `inner` is `None` when the pair
/// is adjacent.
pub fn combine_spanning(
    inner: Option<&EndpointCostTable>,
    a: usize,
    b: usize,
    inst: &SequencingInstance,
    pairs: &PairMap,
) -> Combination {
    let mut table = EndpointCostTable::absent(a, b);
    let mut choice = [[None; 2]; 2];
    let (ta, tb) = (inst.types[a - 1], inst.types[b - 1]);
    let Some(inner) = inner else {
        table.rez[0][0] = Some(inst.cost(ta, tb));
        table.rez[1][1] = Some(inst.cost(tb, ta));
        return Combination { table, choice };
    };
    for (state, (front, back)) in [(0, (ta, tb)), (1, (tb, ta))] {
        for p in 0..2 {
            for q in 0..2 {
                let Some(internal) = inner.rez[p][q] else {
                    continue;
                };
                let cost = inst.cost(front, type_at(inst, pairs, inner.a, p))
                    + internal
                    + inst.cost(type_at(inst, pairs, inner.b, q), back);
                consider(
                    inst.mode,
                    &mut table.rez[state][state],
                    &mut choice[state][state],
                    cost,
                    (p, q),
                );
            }
        }
    }
    Combination { table, choice }
}

#[allow(clippy::needless_range_loop)]
/// Joins `left = [a, m]` and `right = [m+1, b]` across the transition
/// `m -> m+1`.
pub fn combine_concat(
    left: &EndpointCostTable,
    right: &EndpointCostTable,
    inst: &SequencingInstance,
    pairs: &PairMap,
) -> Combination {
    debug_assert_eq!(left.b + 1, right.a);
    let mut table = EndpointCostTable::absent(left.a, right.b);
    let mut choice = [[None; 2]; 2];
    for q in 0..2 {
        let tq = type_at(inst, pairs, left.b, q);
        for r in 0..2 {
            let transition = inst.cost(tq, type_at(inst, pairs, right.a, r));
            for p in 0..2 {
                let Some(lv) = left.rez[p][q] else { continue };
                for s in 0..2 {
                    let Some(rv) = right.rez[r][s] else { continue };
                    consider(
                        inst.mode,
                        &mut table.rez[p][s],
                        &mut choice[p][s],
                        lv + transition + rv,
                        (q, r),
                    );
                }
            }
        }
    }
    Combination { table, choice }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencingResult {
    pub objective: i64,
    /// One decision per pair, in instance order.
    pub swapped: Vec<bool>,
    /// Packet types after applying the swaps.
    pub final_order: Vec<usize>,
}

/// Total decoding time of a type order; the first packet is free.
pub fn order_cost(inst: &SequencingInstance, order: &[usize]) -> i64 {
    order.windows(2).map(|w| inst.cost(w[0], w[1])).sum()
}

/// Type order obtained by exchanging the selected pairs.
pub fn apply_swaps(inst: &SequencingInstance, swapped: &[bool]) -> Vec<usize> {
    let mut order = inst.types.clone();
    for (pair, _) in inst.pairs.iter().zip(swapped).filter(|(_, &s)| s) {
        order.swap(pair.a() - 1, pair.b() - 1);
    }
    order
}

#[derive(Debug, Clone, Copy)]
enum Kind {
    Pending,
    Single,
    Spanning { inner: Option<usize> },
    Concat { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy)]
struct Node {
    a: usize,
    b: usize,
    kind: Kind,
}

fn build_tree(n: usize, pairs: &PairMap) -> Result<Vec<Node>> {
    let mut nodes = vec![Node {
        a: 1,
        b: n,
        kind: Kind::Pending,
    }];
    let mut todo = vec![0usize];
    while let Some(id) = todo.pop() {
        let Node { a, b, .. } = nodes[id];
        let kind = match decompose(a, b, pairs)? {
            Step::Single => Kind::Single,
            Step::SpanningPair if a + 1 > b - 1 => Kind::Spanning { inner: None },
            Step::SpanningPair => {
                nodes.push(Node {
                    a: a + 1,
                    b: b - 1,
                    kind: Kind::Pending,
                });
                todo.push(nodes.len() - 1);
                Kind::Spanning {
                    inner: Some(nodes.len() - 1),
                }
            }
            Step::Concat { cut } => {
                let left = nodes.len();
                nodes.push(Node {
                    a,
                    b: cut,
                    kind: Kind::Pending,
                });
                nodes.push(Node {
                    a: cut + 1,
                    b,
                    kind: Kind::Pending,
                });
                todo.push(left);
                todo.push(left + 1);
                Kind::Concat {
                    left,
                    right: left + 1,
                }
            }
        };
        nodes[id].kind = kind;
    }
    Ok(nodes)
}

/// Minimum or maximum total decoding time over all swap subsets, with an
/// optimal swap set. Ties prefer leaving pairs unswapped.
pub fn solve_sequencing(inst: &SequencingInstance) -> Result<SequencingResult> {
    solve_inner(inst, None)
}

/// Same as [`solve_sequencing`], also returning the decomposition tree as
/// indented text (interval, case, chosen endpoint states and cost).
pub fn solve_sequencing_traced(inst: &SequencingInstance) -> Result<(SequencingResult, String)> {
    let mut trace = String::new();
    let result = solve_inner(inst, Some(&mut trace))?;
    Ok((result, trace))
}

fn solve_inner(
    inst: &SequencingInstance,
    mut trace: Option<&mut String>,
) -> Result<SequencingResult> {
    let pairs = validate_sequencing(inst)?;
    let n = inst.types.len();
    let nodes = build_tree(n, &pairs)?;

    // Children always sit after their parent in the arena.
    let mut combos: Vec<Option<Combination>> = vec![None; nodes.len()];
    for id in (0..nodes.len()).rev() {
        let node = nodes[id];
        let combo = match node.kind {
            Kind::Single => Combination {
                table: EndpointCostTable::single(node.a),
                choice: [[None; 2]; 2],
            },
            Kind::Spanning { inner } => {
                let inner = inner.map(|i| &combos[i].as_ref().expect("child computed").table);
                combine_spanning(inner, node.a, node.b, inst, &pairs)
            }
            Kind::Concat { left, right } => combine_concat(
                &combos[left].as_ref().expect("child computed").table,
                &combos[right].as_ref().expect("child computed").table,
                inst,
                &pairs,
            ),
            Kind::Pending => unreachable!("every node is expanded"),
        };
        combos[id] = Some(combo);
    }
    let combos: Vec<Combination> = combos.into_iter().map(Option::unwrap).collect();

    let (objective, p0, q0) = combos[0]
        .table
        .best(inst.mode)
        .expect("root table has a feasible entry");

    let mut pair_index = vec![usize::MAX; n + 1];
    for (i, pair) in inst.pairs.iter().enumerate() {
        pair_index[pair.a()] = i;
    }
    let mut swapped = vec![false; inst.pairs.len()];
    let mut stack = vec![(0usize, p0, q0, 0usize)];
    while let Some((id, p, q, depth)) = stack.pop() {
        let node = nodes[id];
        let combo = &combos[id];
        if let Some(out) = trace.as_deref_mut() {
            let case = match node.kind {
                Kind::Single => "single",
                Kind::Spanning { .. } => "spanning pair",
                Kind::Concat { .. } => "concat",
                Kind::Pending => unreachable!(),
            };
            let cost = combo.table.rez[p][q].expect("chosen entry exists");
            writeln!(
                out,
                "{:indent$}[{}, {}] {case} states ({p}, {q}) cost {cost}",
                "",
                node.a,
                node.b,
                indent = depth * 2
            )
            .unwrap();
        }
        match node.kind {
            Kind::Single | Kind::Pending => {}
            Kind::Spanning { inner } => {
                swapped[pair_index[node.a]] = p == 1;
                if let Some(inner) = inner {
                    let (ip, iq) = combo.choice[p][q].expect("choice recorded");
                    stack.push((inner, ip, iq, depth + 1));
                }
            }
            Kind::Concat { left, right } => {
                let (lq, rp) = combo.choice[p][q].expect("choice recorded");
                stack.push((right, rp, q, depth + 1));
                stack.push((left, p, lq, depth + 1));
            }
        }
    }

    let final_order = apply_swaps(inst, &swapped);
    let evaluated = order_cost(inst, &final_order);
    if evaluated != objective {
        return Err(Error::WitnessMismatch {
            reported: objective,
            evaluated,
        });
    }
    Ok(SequencingResult {
        objective,
        swapped,
        final_order,
    })
}
