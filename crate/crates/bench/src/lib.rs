//! Empty on purpose; the crate exists for its Criterion benchmarks.
