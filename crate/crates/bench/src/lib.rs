//! Benchmark-only crate; see `benches/extremal.rs`.
