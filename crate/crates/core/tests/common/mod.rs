//! Seeded random instance generators shared by the integration suites.
#![allow(dead_code)]

use dtso::model::{
    Mode, PlacementInstance, SchedulingInstance, SequencingInstance, SwapPair, TransferPath,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` nodes with sorted coordinates and weights in `[0, max_value]`.
pub fn placement(rng: &mut impl Rng, n: usize, max_value: i64) -> PlacementInstance {
    let mut xs: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_value)).collect();
    xs.sort_unstable();
    let ws: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=max_value)).collect();
    let k = rng.gen_range(1..=n);
    PlacementInstance::from_parts(&xs, &ws, k)
}

/// A random laminar family over positions `1..=n` with at most `max_pairs`
/// pairs, returned in shuffled order with random orientation.
pub fn laminar_pairs(rng: &mut impl Rng, n: usize, max_pairs: usize) -> Vec<(usize, usize)> {
    let mut open: Vec<usize> = Vec::new();
    let mut pairs = Vec::new();
    for pos in 1..=n {
        let rest = n - pos;
        let s = open.len();
        let can_open = pairs.len() + s < max_pairs && s < rest;
        let can_skip = s <= rest;
        let can_close = s > 0;
        let mut options = Vec::with_capacity(3);
        if can_open {
            options.push(0);
        }
        if can_skip {
            options.push(1);
        }
        if can_close {
            options.push(2);
        }
        match *options
            .choose(rng)
            .expect("closing is always possible when forced")
        {
            0 => open.push(pos),
            1 => {}
            _ => pairs.push((open.pop().unwrap(), pos)),
        }
    }
    assert!(open.is_empty());
    pairs.shuffle(rng);
    pairs
        .into_iter()
        .map(|(a, b)| if rng.gen_bool(0.5) { (a, b) } else { (b, a) })
        .collect()
}

/// Every position paired: a random laminar perfect matching (`n` even).
pub fn laminar_matching(rng: &mut impl Rng, n: usize) -> Vec<(usize, usize)> {
    assert!(n.is_multiple_of(2));
    let mut open: Vec<usize> = Vec::new();
    let mut pairs = Vec::with_capacity(n / 2);
    for pos in 1..=n {
        let rest = n - pos;
        let must_close = open.len() > rest;
        if !open.is_empty() && (must_close || rng.gen_bool(0.5)) {
            pairs.push((open.pop().unwrap(), pos));
        } else {
            open.push(pos);
        }
    }
    pairs
}

pub fn to_pairs(list: &[(usize, usize)]) -> Vec<SwapPair> {
    list.iter()
        .map(|&(a, b)| SwapPair::new(a, b).unwrap())
        .collect()
}

pub fn sequencing(
    rng: &mut impl Rng,
    max_n: usize,
    max_types: usize,
    max_pairs: usize,
    cost_range: i64,
) -> SequencingInstance {
    let n = rng.gen_range(1..=max_n);
    let t = rng.gen_range(1..=max_types);
    let types = (0..n).map(|_| rng.gen_range(1..=t)).collect();
    let d = (0..t)
        .map(|_| {
            (0..t)
                .map(|_| rng.gen_range(-cost_range..=cost_range))
                .collect()
        })
        .collect();
    let pairs = to_pairs(&laminar_pairs(rng, n, max_pairs));
    let mode = if rng.gen_bool(0.5) {
        Mode::Min
    } else {
        Mode::Max
    };
    SequencingInstance {
        num_types: t,
        types,
        d,
        pairs,
        mode,
    }
}

pub fn paths(rng: &mut impl Rng, p: usize, max_ci: i64, max_ps: i64) -> Vec<TransferPath> {
    (0..p)
        .map(|_| TransferPath::new(rng.gen_range(0..=max_ci), rng.gen_range(0..=max_ps)))
        .collect()
}

pub fn scheduling(
    rng: &mut impl Rng,
    max_p: usize,
    max_n: i64,
    max_ci: i64,
    max_ps: i64,
) -> SchedulingInstance {
    let p = rng.gen_range(1..=max_p);
    let paths = paths(rng, p, max_ci, max_ps);
    let n = rng.gen_range(0..=max_n);
    let q = rng.gen_range(1..=p);
    SchedulingInstance { paths, n, q }
}

/// Pairwise check of the four nesting/disjointness conditions.
pub fn pairwise_laminar(pairs: &[SwapPair]) -> bool {
    for (i, p) in pairs.iter().enumerate() {
        for r in &pairs[i + 1..] {
            let (a, b, c, d) = (p.a(), p.b(), r.a(), r.b());
            let ok = (a < c && d < b) || (c < a && b < d) || b < c || d < a;
            if !ok {
                return false;
            }
        }
    }
    true
}
