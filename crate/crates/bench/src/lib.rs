//! Benchmarks for the resemblance crate live in `benches/`.
