//! Inputs shared by the benchmarks.

use curlgraph_core::{verify_conjecture_with, ConjectureOptions, IntString};

/// First `len` terms of the extension stream started from `(1)`.
pub fn extension_stream(len: usize) -> IntString {
    let trace = verify_conjecture_with(
        &IntString::from([1]),
        ConjectureOptions {
            max_steps: len.max(1),
            stop_at_one: false,
        },
    )
    .expect("non-empty start");
    IntString::new(trace.appended)
}
