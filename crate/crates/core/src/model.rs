//! Problem instances, validation and the JSON document formats.
//!
//! All quantities are 64-bit signed integers. Instances whose objectives
//! could exceed [`SAFE_BOUND`] are rejected during validation so that no
//! solver ever has to reason about wraparound.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest magnitude any objective or intermediate sum may reach.
pub const SAFE_BOUND: i64 = 1 << 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathNode {
    pub x: i64,
    pub w: i64,
}

impl PathNode {
    pub fn new(x: i64, w: i64) -> Self {
        PathNode { x, w }
    }
}

/// Weighted nodes on a path plus the number of consecutive servers to place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PlacementInstance {
    pub nodes: Vec<PathNode>,
    pub k: usize,
}

impl PlacementInstance {
    /// Builds an instance from parallel coordinate and weight slices.
    pub fn from_parts(xs: &[i64], ws: &[i64], k: usize) -> Self {
        assert_eq!(xs.len(), ws.len(), "coordinate and weight counts differ");
        let nodes = xs
            .iter()
            .zip(ws)
            .map(|(&x, &w)| PathNode::new(x, w))
            .collect();
        PlacementInstance { nodes, k }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Two positions (1-based) whose packets may be exchanged. Always stored with
/// `a < b`; serialized as a two-element array in either order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "(usize, usize)", into = "(usize, usize)")]
pub struct SwapPair {
    a: usize,
    b: usize,
}

impl SwapPair {
    /// Returns `None` when both positions coincide.
    pub fn new(a: usize, b: usize) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(SwapPair { a, b }),
            std::cmp::Ordering::Greater => Some(SwapPair { a: b, b: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }
}

impl TryFrom<(usize, usize)> for SwapPair {
    type Error = String;

    fn try_from((a, b): (usize, usize)) -> std::result::Result<Self, String> {
        SwapPair::new(a, b).ok_or_else(|| format!("pair ({a}, {b}) repeats a position"))
    }
}

impl From<SwapPair> for (usize, usize) {
    fn from(p: SwapPair) -> Self {
        (p.a, p.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Min,
    Max,
}

impl Mode {
    /// True when `candidate` is strictly better than `incumbent`.
    pub fn improves(self, candidate: i64, incumbent: i64) -> bool {
        match self {
            Mode::Min => candidate < incumbent,
            Mode::Max => candidate > incumbent,
        }
    }
}

/// A typed packet sequence with decode costs and laminar swappable pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SequencingInstance {
    pub num_types: usize,
    pub types: Vec<usize>,
    /// `d[p-1][q-1]` is the cost of decoding type `q` right after type `p`.
    pub d: Vec<Vec<i64>>,
    #[serde(default)]
    pub pairs: Vec<SwapPair>,
    pub mode: Mode,
}

impl SequencingInstance {
    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Decode cost between two 1-based types.
    #[inline]
    pub fn cost(&self, from: usize, to: usize) -> i64 {
        self.d[from - 1][to - 1]
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        SequencingInstance {
            mode,
            ..self.clone()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransferPath {
    pub ci: i64,
    pub ps: i64,
}

impl TransferPath {
    pub fn new(ci: i64, ps: i64) -> Self {
        TransferPath { ci, ps }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawScheduling")]
pub struct SchedulingInstance {
    pub paths: Vec<TransferPath>,
    pub n: i64,
    pub q: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScheduling {
    paths: Vec<TransferPath>,
    n: i64,
    q: Option<usize>,
}

impl From<RawScheduling> for SchedulingInstance {
    fn from(raw: RawScheduling) -> Self {
        let q = raw.q.unwrap_or(raw.paths.len());
        SchedulingInstance {
            paths: raw.paths,
            n: raw.n,
            q,
        }
    }
}

impl SchedulingInstance {
    /// Instance where every path may be used.
    pub fn unrestricted(paths: Vec<TransferPath>, n: i64) -> Self {
        let q = paths.len();
        SchedulingInstance { paths, n, q }
    }

    pub fn with_q(&self, q: usize) -> Self {
        SchedulingInstance { q, ..self.clone() }
    }
}

/// The concrete solution object attached to a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    /// 1-based start of the server interval `[q, q+k-1]`.
    Placement { q: usize },
    /// One decision per pair (in instance order) and the resulting type order.
    Sequencing {
        swapped: Vec<bool>,
        order: Vec<usize>,
    },
    /// Packets per path.
    Schedule { counts: Vec<i64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolveReport {
    pub objective: i64,
    pub witness: Witness,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

/// Structural checks that serde alone cannot express.
pub trait InstanceDocument: DeserializeOwned + Serialize {
    fn check_schema(&self) -> Result<()>;
}

fn schema(path: &str, message: &str) -> Error {
    Error::SchemaViolation {
        path: path.to_string(),
        message: message.to_string(),
    }
}

impl InstanceDocument for PlacementInstance {
    fn check_schema(&self) -> Result<()> {
        if self.nodes.is_empty() {
            return Err(schema("nodes", "must contain at least one node"));
        }
        Ok(())
    }
}

impl InstanceDocument for SequencingInstance {
    fn check_schema(&self) -> Result<()> {
        if self.num_types == 0 {
            return Err(schema("num_types", "must be at least 1"));
        }
        if self.d.len() != self.num_types {
            return Err(schema("d", "must have num_types rows"));
        }
        for (i, row) in self.d.iter().enumerate() {
            if row.len() != self.num_types {
                return Err(schema(&format!("d[{i}]"), "must have num_types columns"));
            }
        }
        Ok(())
    }
}

impl InstanceDocument for SchedulingInstance {
    fn check_schema(&self) -> Result<()> {
        if self.paths.is_empty() {
            return Err(schema("paths", "must contain at least one path"));
        }
        Ok(())
    }
}

impl InstanceDocument for SolveReport {
    fn check_schema(&self) -> Result<()> {
        Ok(())
    }
}

fn from_json<T: DeserializeOwned>(bytes: &[u8]) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_slice(bytes);
    let value: T = serde_path_to_error::deserialize(de).map_err(|err| {
        let path = err.path().to_string();
        let inner = err.into_inner();
        if inner.is_data() {
            Error::SchemaViolation {
                path,
                message: inner.to_string(),
            }
        } else {
            Error::MalformedDocument(inner.to_string())
        }
    })?;
    Ok(value)
}

/// Parses one instance document and applies its structural checks.
///
/// Invariant validation (`validate_*`) is a separate step so callers can tell
/// a badly shaped document apart from a well-shaped but infeasible one.
pub fn parse_instance<T: InstanceDocument>(bytes: &[u8]) -> Result<T> {
    let value: T = from_json(bytes)?;
    value.check_schema()?;
    Ok(value)
}

pub fn serialize_instance<T: InstanceDocument>(instance: &T) -> String {
    serde_json::to_string(instance).expect("instances always serialize")
}

pub fn serialize_report(report: &SolveReport) -> String {
    serde_json::to_string(report).expect("reports always serialize")
}

pub fn parse_report(bytes: &[u8]) -> Result<SolveReport> {
    parse_instance(bytes)
}

pub fn validate_placement(inst: &PlacementInstance) -> Result<()> {
    let n = inst.nodes.len();
    if inst.k < 1 || inst.k > n {
        return Err(Error::BadK { k: inst.k, n });
    }
    if let Some(i) = inst.nodes.windows(2).position(|w| w[0].x > w[1].x) {
        return Err(Error::UnsortedCoordinates { index: i + 1 });
    }
    if let Some(i) = inst.nodes.iter().position(|node| node.w < 0) {
        return Err(Error::NegativeWeight { index: i + 1 });
    }
    let total_weight: i128 = inst.nodes.iter().map(|node| node.w as i128).sum();
    let span = inst.nodes[n - 1].x as i128 - inst.nodes[0].x as i128;
    if total_weight > SAFE_BOUND as i128 || span > SAFE_BOUND as i128 {
        return Err(Error::Overflow("total weight or coordinate span"));
    }
    if total_weight * span > SAFE_BOUND as i128 {
        return Err(Error::Overflow("total weight times coordinate span"));
    }
    Ok(())
}

/// The involution `C` over positions `0..=n`: partners for paired positions,
/// fixed points otherwise, with `C[0] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMap {
    partner: Vec<usize>,
}

impl PairMap {
    pub fn identity(n: usize) -> Self {
        PairMap {
            partner: (0..=n).collect(),
        }
    }

    /// Number of positions (excluding the sentinel).
    pub fn len(&self) -> usize {
        self.partner.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn partner(&self, position: usize) -> usize {
        self.partner[position]
    }

    pub fn is_paired(&self, position: usize) -> bool {
        self.partner[position] != position
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.partner
    }
}

impl std::ops::Index<usize> for PairMap {
    type Output = usize;

    fn index(&self, position: usize) -> &usize {
        &self.partner[position]
    }
}

/// Checks that `pairs` form a laminar family over positions `1..=n` in which
/// no position is used twice, and returns the partner map.
pub fn validate_pairs(n: usize, pairs: &[SwapPair]) -> Result<PairMap> {
    let mut map = PairMap::identity(n);
    for pair in pairs {
        for position in [pair.a, pair.b] {
            if position < 1 || position > n {
                return Err(Error::OutOfRange { position, n });
            }
            if map.is_paired(position) {
                return Err(Error::PositionReused { position });
            }
        }
        map.partner[pair.a] = pair.b;
        map.partner[pair.b] = pair.a;
    }

    // Every closing position must match the innermost open pair.
    let mut open: Vec<usize> = Vec::new();
    for position in 1..=n {
        let partner = map.partner[position];
        if partner > position {
            open.push(position);
        } else if partner < position {
            let top = *open.last().expect("a closing position has an opener");
            if top != partner {
                return Err(Error::CrossingPairs {
                    first: (partner, position),
                    second: (top, map.partner[top]),
                });
            }
            open.pop();
        }
    }
    Ok(map)
}

pub fn validate_sequencing(inst: &SequencingInstance) -> Result<PairMap> {
    let n = inst.types.len();
    if n == 0 {
        return Err(Error::EmptySequence);
    }
    for (i, &ty) in inst.types.iter().enumerate() {
        if ty < 1 || ty > inst.num_types {
            return Err(Error::BadType {
                position: i + 1,
                ty,
                num_types: inst.num_types,
            });
        }
    }
    let max_cost = inst
        .d
        .iter()
        .flatten()
        .map(|c| c.unsigned_abs() as i128)
        .max()
        .unwrap_or(0);
    if max_cost * (n as i128) > SAFE_BOUND as i128 {
        return Err(Error::Overflow("sequence length times largest decode cost"));
    }
    validate_pairs(n, &inst.pairs)
}

pub fn validate_scheduling(inst: &SchedulingInstance) -> Result<()> {
    let p = inst.paths.len();
    if inst.q < 1 || inst.q > p {
        return Err(Error::BadQ { q: inst.q, p });
    }
    if inst.n < 0 {
        return Err(Error::NegativePacketCount(inst.n));
    }
    if let Some(i) = inst
        .paths
        .iter()
        .position(|path| path.ci < 0 || path.ps < 0)
    {
        return Err(Error::NegativePathParameter { index: i + 1 });
    }
    let max_ci = inst.paths.iter().map(|path| path.ci).max().unwrap_or(0) as i128;
    let max_ps = inst.paths.iter().map(|path| path.ps).max().unwrap_or(0) as i128;
    if max_ci + inst.n as i128 * max_ps > SAFE_BOUND as i128 || inst.n > SAFE_BOUND {
        return Err(Error::Overflow(
            "initiation time plus packets times sending time",
        ));
    }
    Ok(())
}
