//! Criterion benchmarks for the paravec kernel live in `benches/`.
