//! Exact longest directed paths and the alternation bound that settles
//! the even-girth case of the long-path conjecture.
//!
//! ```bash
//! cargo run -p cyclepack --example longest_paths
//! ```

use cyclepack::generators;
use cyclepack::paths::{bipartite_alternation_path_bound, longest_path_exact};

fn main() {
    // The even-girth family member at (g=4, k=2): 16 vertices, minimum
    // outdegree h = 3, girth 4, and no digons. The conjecture would
    // promise a path of h(g-1) = 9 arcs.
    let (d, params) = generators::even_girth(4, 2, 0).unwrap();
    let h = params.min_outdegree;
    let n = params.layer_count;
    println!(
        "even-girth(4,2): {} vertices, h = {h}, n = {n}",
        d.vertex_count()
    );

    // A simple path must alternate the two sides of the bipartition, and
    // the X side has only n = 4 vertices: at most 2n = 8 arcs. That bound
    // alone already beats the conjectured 9.
    let bound = bipartite_alternation_path_bound(&d).unwrap();
    println!("alternation bound: {bound} arcs < h(g-1) = {}", h * 3);

    // The exhaustive search pins the exact value: 8, meeting the bound.
    let cert = longest_path_exact(&d, 50_000_000);
    assert!(cert.exact);
    println!("exact longest path: {} arcs", cert.length);
    println!("witness: {:?}", cert.witness);

    // The witness weaves through Y blocks, reusing the start block at the
    // end; that eighth arc is one more than 2n - 1.
    println!("2n - 1 = {}; the construction tops it by one", 2 * n - 1);

    // At k = 1 the numbers collapse: h = 2 and the longest path meets
    // h(g-1) = 6 exactly, so nothing is refuted down there.
    let (small, sp) = generators::even_girth(4, 1, 0).unwrap();
    let small_cert = longest_path_exact(&small, 50_000_000);
    println!(
        "even-girth(4,1): longest path {} = h(g-1) = {}",
        small_cert.length,
        sp.min_outdegree * 3
    );

    // Budgeted runs degrade honestly: the flag flips off and the length
    // pairs with a sound structural upper bound.
    let rough = longest_path_exact(&d, 100);
    println!(
        "with a 100-node budget: best {} arcs, exact = {}, upper bound {}",
        rough.length, rough.exact, rough.upper_bound
    );
}
