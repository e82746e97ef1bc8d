//! Cumulative per-edge window counts over a source sequence.

use super::windows::{add_delta, edge_count, sub_delta, Window};

/// The per-element window shapes that the counting recurrences cumulate.
///
/// Each kind maps a source timestamp `t` to one window over the target
/// sequence. `Before` and `TrailOpen` are the strict-endpoint variants
/// used where the time order `t1 < t2 < t3` must exclude equal
/// timestamps; the closed kinds keep the plain gap semantics.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefixKind {
    /// `W(t) = [t, t + d]`
    LeadClosed(u64),
    /// `W(t) = [t, +inf)`
    FromHere,
    /// `W(t) = (-inf, t]`
    UpToHere,
    /// `W(t) = [t - d, t]`
    TrailClosed(u64),
    /// `W(t) = (-inf, t)`
    Before,
    /// `W(t) = [t - d, t)`
    TrailOpen(u64),
}

impl PrefixKind {
    pub fn window_at(self, t: i64) -> Window {
        match self {
            PrefixKind::LeadClosed(d) => Window::Closed(t, add_delta(t, d)),
            PrefixKind::FromHere => Window::From(t),
            PrefixKind::UpToHere => Window::To(t),
            PrefixKind::TrailClosed(d) => Window::Closed(sub_delta(t, d), t),
            PrefixKind::Before => Window::OpenTo(t),
            PrefixKind::TrailOpen(d) => Window::ClosedOpen(sub_delta(t, d), t),
        }
    }
}

/// Prefix sums of per-element window counts: `sums[l]` is the total count
/// over the first `l` source elements, so any contiguous source range is
/// answered by one subtraction.
///
/// The buffer is reused across rebuilds; it grows to the largest source
/// length seen and is never reallocated per triangle.
#[derive(Clone, Debug, Default)]
pub struct PrefixCounts {
    sums: Vec<u64>,
}

impl PrefixCounts {
    pub fn new() -> PrefixCounts {
        PrefixCounts::default()
    }

    pub fn build(source: &[i64], target: &[i64], kind: PrefixKind) -> PrefixCounts {
        let mut p = PrefixCounts::new();
        p.rebuild(source, target, kind);
        p
    }

    /// Recomputes the prefix sums in place: one pass over `source`, one
    /// window count (two binary searches) into `target` per element.
    pub fn rebuild(&mut self, source: &[i64], target: &[i64], kind: PrefixKind) {
        self.sums.clear();
        self.sums.reserve(source.len() + 1);
        self.sums.push(0);
        let mut acc = 0u64;
        for &t in source {
            acc += edge_count(kind.window_at(t), target) as u64;
            self.sums.push(acc);
        }
    }

    /// Summed window counts over source positions `a..b` (0-based,
    /// half-open).
    pub fn range(&self, a: usize, b: usize) -> u64 {
        debug_assert!(a <= b && b < self.sums.len());
        self.sums[b] - self.sums[a]
    }

    /// The raw cumulative array `[P0=0, P1, ..., P_sigma]`.
    pub fn sums(&self) -> &[u64] {
        &self.sums
    }
}
