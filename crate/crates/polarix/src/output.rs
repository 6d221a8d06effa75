//! Deterministic numeric formatting for the CLI surfaces.

/// 17-significant-digit scientific notation: round-trips any f64 exactly and
/// is byte-stable across runs.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
