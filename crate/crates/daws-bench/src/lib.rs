//! Criterion benchmarks for the core operations; see `benches/core_ops.rs`.
