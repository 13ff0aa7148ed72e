//! Benchmarks for `hopf-core`; see `benches/`.
