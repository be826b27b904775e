//! Criterion benchmarks for seqlab; see `benches/`.
