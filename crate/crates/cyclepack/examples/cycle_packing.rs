//! Cycle enumeration, exact maximum vertex-disjoint packings, certified
//! counting bounds, and the effect of removing a single arc.
//!
//! ```bash
//! cargo run -p cyclepack --example cycle_packing
//! ```

use cyclepack::generators::{self, OddVariant};
use cyclepack::packing::{self, BoundMode};
use cyclepack::{enumerate_cycles, max_disjoint_cycles};

fn main() {
    // All five cycles of the complete symmetric digraph on 3 vertices,
    // in canonical order: three digons and both triangle orientations.
    let k3 = generators::complete_symmetric(3).unwrap();
    let cycles = enumerate_cycles(&k3, None, 100);
    println!("cycles of K3*:");
    for c in &cycles.cycles {
        println!("  {:?}", c.vertices());
    }

    // Enumeration can be length-capped and truncates with a flag rather
    // than an error once the cap is hit.
    let truncated = enumerate_cycles(&k3, None, 2);
    println!(
        "capped at 2: got {} cycles, truncated = {}",
        truncated.cycles.len(),
        truncated.truncated
    );

    // The even-girth family at (4, 3) has minimum outdegree 4 but packs
    // only two disjoint cycles; the branch-and-bound proves optimality.
    let (family, params) = generators::even_girth(4, 3, 0).unwrap();
    let packing = max_disjoint_cycles(&family, 2_000_000);
    println!(
        "even-girth(4,3): packing in [{}, {}], optimal = {}",
        packing.lower_bound, packing.upper_bound, packing.optimal
    );
    for c in &packing.cycles {
        println!("  cycle {:?}", c.vertices());
    }

    // The same upper bound falls out of a counting argument: every cycle
    // alternates between X and Y and has length >= 4, so it uses at least
    // 2 of the 5 X-vertices -- at most floor(5/2) = 2 cycles fit. The
    // certified mode proves that premise structurally.
    let bound =
        packing::counting_bound(&family, &params.x_layer(), 2, BoundMode::Certified).unwrap();
    println!("certified counting bound over X: {bound}");

    // Complete symmetric digraph on 6 vertices: three disjoint digons.
    let k6 = generators::complete_symmetric(6).unwrap();
    let p6 = max_disjoint_cycles(&k6, 2_000_000);
    println!(
        "K6*: maximum packing {} (witnesses are digons: {:?})",
        p6.lower_bound,
        p6.cycles
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect::<Vec<_>>()
    );

    // Removing one arc changes the maximum packing by at most one. The
    // odd-girth chord is the interesting arc: it carries every g-cycle.
    let (odd, po) = generators::odd_girth(3, 2, OddVariant::WithChord).unwrap();
    let chord = (po.layer_count - 1, 0);
    let delta = packing::packing_delta_under_arc_removal(&odd, chord, 2_000_000).unwrap();
    println!(
        "odd-girth(3,2): packing {} with the chord, {} without (difference in {{0,1}}: {:?})",
        delta.with_arc.lower_bound, delta.without_arc.lower_bound, delta.delta_in_unit_range
    );
}
