//! Timestamp interval arithmetic and binary-search range counting.

/// `t + d` clamped into the `i64` range.
///
/// Deltas are unsigned 64-bit, so the exact sum is formed in 128 bits and
/// saturated at the representable maximum; comparisons against stored
/// timestamps are unaffected by the clamp.
pub fn add_delta(t: i64, d: u64) -> i64 {
    (t as i128 + d as i128).clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// `t - d` clamped into the `i64` range.
pub fn sub_delta(t: i64, d: u64) -> i64 {
    (t as i128 - d as i128).clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// Number of elements `< x` in an ascending slice.
pub fn count_lt(seq: &[i64], x: i64) -> usize {
    seq.partition_point(|&t| t < x)
}

/// Number of elements `<= x` in an ascending slice.
pub fn count_le(seq: &[i64], x: i64) -> usize {
    seq.partition_point(|&t| t <= x)
}

/// Number of elements `> x` in an ascending slice.
pub fn count_gt(seq: &[i64], x: i64) -> usize {
    seq.len() - count_le(seq, x)
}

/// A timestamp interval. Closed, half-open, and unbounded forms cover the
/// windows used by the counting recurrences.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Window {
    /// `[a, b]`
    Closed(i64, i64),
    /// `[a, b)`
    ClosedOpen(i64, i64),
    /// `(a, b]`
    OpenClosed(i64, i64),
    /// `[a, +inf)`
    From(i64),
    /// `(a, +inf)`
    OpenFrom(i64),
    /// `(-inf, b]`
    To(i64),
    /// `(-inf, b)`
    OpenTo(i64),
}

/// Counts elements of an ascending slice inside `window` with two binary
/// searches. Empty intervals (upper bound before lower) count zero.
pub fn edge_count(window: Window, seq: &[i64]) -> usize {
    match window {
        Window::Closed(a, b) => {
            if a > b {
                0
            } else {
                count_le(seq, b) - count_lt(seq, a)
            }
        }
        Window::ClosedOpen(a, b) => {
            if a >= b {
                0
            } else {
                count_lt(seq, b) - count_lt(seq, a)
            }
        }
        Window::OpenClosed(a, b) => {
            if a >= b {
                0
            } else {
                count_le(seq, b) - count_le(seq, a)
            }
        }
        Window::From(a) => seq.len() - count_lt(seq, a),
        Window::OpenFrom(a) => count_gt(seq, a),
        Window::To(b) => count_le(seq, b),
        Window::OpenTo(b) => count_lt(seq, b),
    }
}
