//! Connected K-center and K-median on a path.
//!
//! Servers occupy `k` consecutive nodes `[q, q+k-1]`. A node left of the
//! interval is served by node `q`, a node right of it by node `q+k-1`.
//!
//! The K-center sweep reads the largest weighted distance to each interval
//! endpoint from two upper envelopes of half-lines: the right-oriented
//! `w(j)·(x - x(j))` for `x ≥ x(j)` and the left-oriented `w(j)·(x(j) - x)`
//! for `x ≤ x(j)`. Both are queried at nondecreasing coordinates, so a
//! monotone cursor makes the sweep linear once the envelopes exist.
//!
//! Envelope construction inserts half-lines in anchor order. Once the sweep
//! coordinate has reached an anchor, every earlier half-line is a full line on
//! the remaining domain, so the part of the envelope right of the current
//! anchor is the upper hull of full lines. That hull is kept in a map keyed by
//! slope (`O(log N)` per insertion); the finished part left of the next anchor
//! is emitted as segments and pruned.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::Bound::{Excluded, Unbounded};

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::model::{validate_placement, PlacementInstance};

/// Exact breakpoint coordinate.
pub type Breakpoint = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Right,
    Left,
}

impl Orientation {
    pub fn as_str(self) -> &'static str {
        match self {
            Orientation::Right => "right",
            Orientation::Left => "left",
        }
    }
}

/// A maximal coordinate range on which one node's half-line is on top.
/// `None` bounds are unbounded (`-∞` for `x_lo`, `+∞` for `x_hi`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnvelopeSegment {
    /// 1-based node index.
    pub source: usize,
    pub x_lo: Option<Breakpoint>,
    pub x_hi: Option<Breakpoint>,
    anchor: i64,
    weight: i64,
}

impl EnvelopeSegment {
    pub fn anchor(&self) -> i64 {
        self.anchor
    }

    pub fn weight(&self) -> i64 {
        self.weight
    }

    fn contains(&self, x: &Breakpoint) -> bool {
        self.x_lo.as_ref().is_none_or(|lo| lo <= x) && self.x_hi.as_ref().is_none_or(|hi| x <= hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub orientation: Orientation,
    pub segments: Vec<EnvelopeSegment>,
}

/// Position state for monotone envelope queries.
#[derive(Debug, Clone, Default)]
pub struct EnvelopeCursor {
    index: usize,
    last: Option<i64>,
}

impl EnvelopeCursor {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Envelope {
    fn value(&self, segment: &EnvelopeSegment, x: i64) -> i64 {
        match self.orientation {
            Orientation::Right => segment.weight * (x - segment.anchor),
            Orientation::Left => segment.weight * (segment.anchor - x),
        }
    }

    /// Value at `x`, advancing `cursor`. Successive calls on one cursor must
    /// use nondecreasing `x`; the total work over a sweep is linear.
    pub fn eval(&self, cursor: &mut EnvelopeCursor, x: i64) -> Result<i64> {
        if let Some(previous) = cursor.last {
            if x < previous {
                return Err(Error::CursorMisuse {
                    previous,
                    requested: x,
                });
            }
        }
        cursor.last = Some(x);
        let point = Breakpoint::from_integer(x as i128);
        if let Some(first) = self.segments.first() {
            if first.x_lo.as_ref().is_some_and(|lo| point < *lo) {
                return Ok(0);
            }
        }
        while cursor.index < self.segments.len() {
            match &self.segments[cursor.index].x_hi {
                Some(hi) if point > *hi => cursor.index += 1,
                _ => break,
            }
        }
        Ok(self
            .segments
            .get(cursor.index)
            .map_or(0, |segment| self.value(segment, x)))
    }

    /// Value at `x` without a cursor (binary search over the segments).
    pub fn value_at(&self, x: i64) -> i64 {
        let point = Breakpoint::from_integer(x as i128);
        let idx = self
            .segments
            .partition_point(|s| s.x_hi.as_ref().is_some_and(|hi| *hi < point));
        match self.segments.get(idx) {
            Some(segment) if segment.contains(&point) => self.value(segment, x),
            _ => 0,
        }
    }

    /// One CSV row per segment:
    /// `orientation,source,x_lo_num,x_lo_den,x_hi_num,x_hi_den`.
    /// Unbounded ends are written as `-1,0` and `1,0`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for segment in &self.segments {
            let (lo_num, lo_den) = segment
                .x_lo
                .as_ref()
                .map_or((-1, 0), |r| (*r.numer(), *r.denom()));
            let (hi_num, hi_den) = segment
                .x_hi
                .as_ref()
                .map_or((1, 0), |r| (*r.numer(), *r.denom()));
            writeln!(
                out,
                "{},{},{lo_num},{lo_den},{hi_num},{hi_den}",
                self.orientation.as_str(),
                segment.source
            )
            .unwrap();
        }
        out
    }
}

#[derive(Debug, Clone, Copy)]
struct HullLine {
    intercept: i128,
    source: usize,
    anchor: i64,
    weight: i64,
}

/// Upper hull of full lines `slope·x + intercept`, keyed by slope.
#[derive(Default)]
struct LineHull {
    lines: BTreeMap<i64, HullLine>,
}

fn crossing(slope_a: i64, a: &HullLine, slope_b: i64, b: &HullLine) -> Breakpoint {
    debug_assert!(slope_a < slope_b);
    Breakpoint::new(a.intercept - b.intercept, (slope_b - slope_a) as i128)
}

impl LineHull {
    fn prev(&self, slope: i64) -> Option<(i64, HullLine)> {
        self.lines.range(..slope).next_back().map(|(&s, &l)| (s, l))
    }

    fn next(&self, slope: i64) -> Option<(i64, HullLine)> {
        self.lines
            .range((Excluded(slope), Unbounded))
            .next()
            .map(|(&s, &l)| (s, l))
    }

    fn insert(&mut self, slope: i64, line: HullLine) {
        if let Some(existing) = self.lines.get(&slope) {
            if existing.intercept >= line.intercept {
                return;
            }
            self.lines.remove(&slope);
        }
        if let (Some((ps, p)), Some((ns, n))) = (self.prev(slope), self.next(slope)) {
            if crossing(ps, &p, slope, &line) >= crossing(slope, &line, ns, &n) {
                return;
            }
        }
        self.lines.insert(slope, line);
        while let Some((ns, n)) = self.next(slope) {
            let Some((nns, nn)) = self.next(ns) else {
                break;
            };
            if crossing(slope, &line, ns, &n) >= crossing(ns, &n, nns, &nn) {
                self.lines.remove(&ns);
            } else {
                break;
            }
        }
        while let Some((ps, p)) = self.prev(slope) {
            let Some((pps, pp)) = self.prev(ps) else {
                break;
            };
            if crossing(pps, &pp, ps, &p) >= crossing(ps, &p, slope, &line) {
                self.lines.remove(&ps);
            } else {
                break;
            }
        }
    }

    /// Drops leading lines that never again reach the top at or after `cur`.
    fn prune_before(&mut self, cur: &Breakpoint) {
        loop {
            let mut it = self.lines.iter();
            let (Some((&s1, l1)), Some((&s2, l2))) = (it.next(), it.next()) else {
                break;
            };
            if crossing(s1, l1, s2, l2) <= *cur {
                self.lines.remove(&s1);
            } else {
                break;
            }
        }
    }
}

struct RawSegment {
    line: HullLine,
    lo: Breakpoint,
    hi: Option<Breakpoint>,
}

fn push_segment(out: &mut Vec<RawSegment>, line: HullLine, lo: Breakpoint, hi: Option<Breakpoint>) {
    if let Some(last) = out.last_mut() {
        if last.line.source == line.source && last.hi.as_ref() == Some(&lo) {
            last.hi = hi;
            return;
        }
    }
    out.push(RawSegment { line, lo, hi });
}

/// Right-oriented envelope of half-lines given as `(anchor, weight, source)`
/// with nondecreasing anchors, in coordinates relative to the first anchor.
fn right_envelope(lines: &[(i64, i64, usize)]) -> Vec<RawSegment> {
    let Some(&(base, _, _)) = lines.first() else {
        return Vec::new();
    };
    let mut hull = LineHull::default();
    let mut out = Vec::new();
    let mut i = 0;
    while i < lines.len() {
        let cur = lines[i].0 - base;
        let mut j = i;
        while j < lines.len() && lines[j].0 - base == cur {
            let (anchor, weight, source) = lines[j];
            hull.insert(
                weight,
                HullLine {
                    intercept: -(weight as i128) * cur as i128,
                    source,
                    anchor,
                    weight,
                },
            );
            j += 1;
        }
        let cur = Breakpoint::from_integer(cur as i128);
        hull.prune_before(&cur);
        let next = lines
            .get(j)
            .map(|&(anchor, _, _)| Breakpoint::from_integer((anchor - base) as i128));

        let mut start = cur;
        let mut it = hull.lines.iter().peekable();
        while let Some((&slope, &line)) = it.next() {
            match it.peek() {
                Some(&(&next_slope, next_line)) => {
                    let bp = crossing(slope, &line, next_slope, next_line);
                    if next.as_ref().is_some_and(|n| bp >= *n) {
                        push_segment(&mut out, line, start, next);
                        break;
                    }
                    push_segment(&mut out, line, start, Some(bp));
                    start = bp;
                }
                None => push_segment(&mut out, line, start, next),
            }
        }
        i = j;
    }
    out
}

/// Builds the right- and left-oriented upper envelopes of all nodes.
pub fn build_envelopes(inst: &PlacementInstance) -> Result<(Envelope, Envelope)> {
    validate_placement(inst)?;
    Ok(build_envelopes_unchecked(inst))
}

fn build_envelopes_unchecked(inst: &PlacementInstance) -> (Envelope, Envelope) {
    let forward: Vec<(i64, i64, usize)> = inst
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| (node.x, node.w, i + 1))
        .collect();
    let base = forward[0].0 as i128;
    let right = Envelope {
        orientation: Orientation::Right,
        segments: right_envelope(&forward)
            .into_iter()
            .map(|raw| EnvelopeSegment {
                source: raw.line.source,
                x_lo: Some(raw.lo + base),
                x_hi: raw.hi.map(|hi| hi + base),
                anchor: raw.line.anchor,
                weight: raw.line.weight,
            })
            .collect(),
    };

    // Mirror x -> -x so left-oriented half-lines become right-oriented.
    let mirrored: Vec<(i64, i64, usize)> = forward
        .iter()
        .rev()
        .map(|&(x, w, source)| (-x, w, source))
        .collect();
    let mirror_base = mirrored[0].0 as i128;
    let mut left_segments: Vec<EnvelopeSegment> = right_envelope(&mirrored)
        .into_iter()
        .map(|raw| EnvelopeSegment {
            source: raw.line.source,
            x_lo: raw.hi.map(|hi| -(hi + mirror_base)),
            x_hi: Some(-(raw.lo + mirror_base)),
            anchor: -raw.line.anchor,
            weight: raw.line.weight,
        })
        .collect();
    left_segments.reverse();
    let left = Envelope {
        orientation: Orientation::Left,
        segments: left_segments,
    };
    (right, left)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Center,
    Median,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlacementResult {
    /// 1-based start of the server interval.
    pub q: usize,
    pub objective: i64,
}

/// Cost of placing servers on `[q, q+k-1]`, evaluated node by node.
pub fn evaluate_interval(inst: &PlacementInstance, q: usize, objective: Objective) -> i64 {
    let first = inst.nodes[q - 1].x;
    let last = inst.nodes[q + inst.k - 2].x;
    let distances = inst.nodes.iter().enumerate().map(|(i, node)| {
        let pos = i + 1;
        if pos < q {
            node.w * (first - node.x)
        } else if pos >= q + inst.k {
            node.w * (node.x - last)
        } else {
            0
        }
    });
    match objective {
        Objective::Center => distances.max().unwrap_or(0),
        Objective::Median => distances.sum(),
    }
}

fn checked(
    inst: &PlacementInstance,
    result: PlacementResult,
    objective: Objective,
) -> Result<PlacementResult> {
    let evaluated = evaluate_interval(inst, result.q, objective);
    if evaluated != result.objective {
        return Err(Error::WitnessMismatch {
            reported: result.objective,
            evaluated,
        });
    }
    Ok(result)
}

/// Connected K-center. Ties go to the smallest `q`.
pub fn solve_k_center(inst: &PlacementInstance) -> Result<PlacementResult> {
    validate_placement(inst)?;
    let (right, left) = build_envelopes_unchecked(inst);
    let result = k_center_sweep(inst, &right, &left)?;
    checked(inst, result, Objective::Center)
}

/// The sliding sweep over both envelopes.
pub fn k_center_sweep(
    inst: &PlacementInstance,
    right: &Envelope,
    left: &Envelope,
) -> Result<PlacementResult> {
    let n = inst.nodes.len();
    let k = inst.k;
    let mut right_cursor = EnvelopeCursor::new();
    let mut left_cursor = EnvelopeCursor::new();
    let mut best = PlacementResult {
        q: 0,
        objective: i64::MAX,
    };
    for q in 1..=n - k + 1 {
        let to_first = right.eval(&mut right_cursor, inst.nodes[q - 1].x)?;
        let to_last = left.eval(&mut left_cursor, inst.nodes[q + k - 2].x)?;
        let cost = to_first.max(to_last);
        if cost < best.objective {
            best = PlacementResult { q, objective: cost };
        }
    }
    Ok(best)
}

/// Connected K-median with four running sums. Ties go to the smallest `q`.
pub fn solve_k_median(inst: &PlacementInstance) -> Result<PlacementResult> {
    validate_placement(inst)?;
    let nodes = &inst.nodes;
    let n = nodes.len();
    let k = inst.k;
    let x = |i: usize| nodes[i - 1].x;
    let w = |i: usize| nodes[i - 1].w;

    let mut weight_left = 0i64;
    let mut sum_left = 0i64;
    let mut weight_right: i64 = (k + 1..=n).map(w).sum();
    let mut sum_right: i64 = (k + 1..=n).map(|j| w(j) * (x(j) - x(k))).sum();

    let mut best = PlacementResult {
        q: 1,
        objective: sum_left + sum_right,
    };
    for q in 1..n - k + 1 {
        weight_left += w(q);
        sum_left += weight_left * (x(q + 1) - x(q));
        sum_right -= weight_right * (x(q + k) - x(q + k - 1));
        weight_right -= w(q + k);
        let cost = sum_left + sum_right;
        if cost < best.objective {
            best = PlacementResult {
                q: q + 1,
                objective: cost,
            };
        }
    }
    checked(inst, best, Objective::Median)
}

pub fn solve(inst: &PlacementInstance, objective: Objective) -> Result<PlacementResult> {
    match objective {
        Objective::Center => solve_k_center(inst),
        Objective::Median => solve_k_median(inst),
    }
}
