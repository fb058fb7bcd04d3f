//! Criterion benchmarks for the search routines in `fixsub-core`.
//!
//! Run with `cargo bench -p fixsub-bench`.
