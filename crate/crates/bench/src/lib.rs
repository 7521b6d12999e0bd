//! Criterion benchmarks for `tdpair` live in `benches/`.
