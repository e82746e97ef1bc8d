//! Deterministic synthetic graph generators for tests and benchmarks.

/// SplitMix64 PRNG. Small, seedable, and stable across releases, which
/// keeps randomized fixtures reproducible.
#[derive(Clone, Debug)]
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Random directed temporal multigraph without self-loops.
///
/// Timestamps are uniform in `0..=t_max`; with probability
/// `dup_percent/100` an edge reuses a previously drawn timestamp, forcing
/// duplicates.
pub fn random_temporal_edges(
    seed: u64,
    n: u32,
    m: usize,
    t_max: i64,
    dup_percent: u64,
) -> Vec<(u32, u32, i64)> {
    assert!(n >= 2, "need at least two vertices");
    let mut rng = SplitMix64::new(seed);
    let mut edges = Vec::with_capacity(m);
    let mut seen_times: Vec<i64> = Vec::new();
    for _ in 0..m {
        let src = rng.below(n as u64) as u32;
        let mut dst = rng.below(n as u64 - 1) as u32;
        if dst >= src {
            dst += 1;
        }
        let t = if !seen_times.is_empty() && rng.below(100) < dup_percent {
            seen_times[rng.below(seen_times.len() as u64) as usize]
        } else {
            rng.below(t_max as u64 + 1) as i64
        };
        seen_times.push(t);
        edges.push((src, dst, t));
    }
    edges
}

/// Temporal fan: hub 0 joined to the path `1-2-...-path_len`, every static
/// edge carrying `multiplicity` random timestamps.
///
/// The static graph is a triangulated fan, so its degeneracy is 2 for any
/// size, while the temporal edge count scales with `multiplicity`. Useful
/// for scaling work with m at fixed kappa.
pub fn fan_temporal_edges(
    seed: u64,
    path_len: u32,
    multiplicity: usize,
    t_max: i64,
) -> Vec<(u32, u32, i64)> {
    assert!(path_len >= 2);
    let mut rng = SplitMix64::new(seed);
    let mut static_edges = Vec::new();
    for v in 1..=path_len {
        static_edges.push((0u32, v));
    }
    for v in 1..path_len {
        static_edges.push((v, v + 1));
    }
    let mut edges = Vec::new();
    for (a, b) in static_edges {
        for _ in 0..multiplicity {
            let (src, dst) = if rng.below(2) == 0 { (a, b) } else { (b, a) };
            edges.push((src, dst, rng.below(t_max as u64 + 1) as i64));
        }
    }
    edges
}
