//! Compares invariant-decomposition enumeration against exhaustive search on small groups.

use std::time::Instant;

use cartesian_decomp::oracle::{oracle_check, oracle_corpus};
use cartesian_decomp::Limits;

fn main() -> cartesian_decomp::Result<()> {
    for case in oracle_corpus() {
        let start = Instant::now();
        let r = oracle_check(&case, &Limits::default())?;
        println!(
            "{:<24} degree {}  enumerated {}  brute force {}  {}  ({:.2?})",
            r.name,
            r.degree,
            r.enumerated,
            r.brute_force,
            if r.matches { "match" } else { "MISMATCH" },
            start.elapsed()
        );
    }
    Ok(())
}
