//! Criterion benchmarks for `lcn-core`; see `benches/core.rs`.
