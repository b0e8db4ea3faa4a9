//! Seeded random sweeps: every sampled digraph runs through the
//! counterexample filter and the packing check; any refutation candidate
//! would be persisted with its full certificate.
//!
//! ```bash
//! cargo run -p cyclepack --example random_search
//! ```

use cyclepack::harness::{random_search, DEFAULT_BUDGET};

fn main() {
    // k = 3 with outdegree 5 on 12 vertices: the settled case, so every
    // trial must come back consistent.
    let summary = random_search(3, 12, 50, 7, DEFAULT_BUDGET, None).unwrap();
    println!(
        "k=3, m=12, 50 trials: {} consistent, {} inconclusive, {} candidates, {} filter passes",
        summary.consistent,
        summary.inconclusive,
        summary.refutation_candidates,
        summary.filter_passes
    );
    assert_eq!(summary.refutation_candidates, 0);

    // k = 2 with outdegree 3: settled since 1983, same expectation.
    let summary = random_search(2, 8, 50, 11, DEFAULT_BUDGET, None).unwrap();
    println!(
        "k=2, m=8, 50 trials: {} consistent, {} candidates",
        summary.consistent, summary.refutation_candidates
    );

    // k = 1: an outdegree-1 digraph always holds a cycle.
    let summary = random_search(1, 5, 10, 0, DEFAULT_BUDGET, None).unwrap();
    println!("k=1, m=5, 10 trials: {} consistent", summary.consistent);

    // identical parameters reproduce the identical summary, byte for byte
    let again = random_search(1, 5, 10, 0, DEFAULT_BUDGET, None).unwrap();
    assert_eq!(summary.to_json(), again.to_json());
    println!("rerun is byte-identical: ok");

    // To persist candidates (none will appear at these parameters), pass
    // an output directory:
    //   random_search(3, 12, 50, 7, DEFAULT_BUDGET, Some(Path::new("out")))
    // writes candidate_seed<N>.edges and candidate_seed<N>.json per hit.
}
