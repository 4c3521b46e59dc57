//! Criterion benchmarks for eulercert; see `benches/euler.rs`.
