//! Bench-only crate; see `benches/series.rs`.
