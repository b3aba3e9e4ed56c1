//! Criterion benchmarks for the idealprox kernels; see `benches/`.
