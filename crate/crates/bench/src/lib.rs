//! Benchmarks for the three Hurwitz models live in `benches/`.
