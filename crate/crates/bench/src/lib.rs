//! Criterion benchmarks for the cohomology pipeline; run with `cargo bench -p ybh-bench`.
