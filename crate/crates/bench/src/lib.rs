//! Criterion benchmarks for `altexp`; see `benches/`.
