//! Benchmark-only crate; the measurements live in `benches/census.rs`.
