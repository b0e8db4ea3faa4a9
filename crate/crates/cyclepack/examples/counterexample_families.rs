//! Tour of the digraph families: the layered even- and odd-girth
//! constructions, the bipartite tournament, circular digraphs, complete
//! symmetric digraphs, source padding, and the seeded random generator.
//!
//! ```bash
//! cargo run -p cyclepack --example counterexample_families
//! ```

use cyclepack::generators::{self, OddVariant};

fn main() {
    // Even-girth family at (g=4, k=3): h = ceil(4*3/3) = 4 layers of Y
    // blocks around n = 5 X-vertices. Every vertex has outdegree 4, the
    // girth is exactly 4, yet only 2 disjoint cycles fit.
    let (even, p) = generators::even_girth(4, 3, 0).unwrap();
    println!(
        "even-girth(4,3): h={}, n={}, vertices={}, arcs={}, girth={:?}",
        p.min_outdegree,
        p.layer_count,
        even.vertex_count(),
        even.arc_count(),
        even.girth().girth
    );

    // The shift constant raises the outdegree without helping the packing.
    let (shifted, ps) = generators::even_girth(4, 5, 1).unwrap();
    println!(
        "even-girth(4,5,c=1): min outdegree {} on {} vertices",
        shifted.min_outdegree(),
        shifted.vertex_count()
    );
    assert_eq!(ps.min_outdegree, 8);

    // Odd-girth family: the chord variant has girth g, the chordless one
    // girth g+1; they differ in the single arc x_{rh} -> x_0.
    let (with, po) = generators::odd_girth(3, 2, OddVariant::WithChord).unwrap();
    let (without, _) = generators::odd_girth(3, 2, OddVariant::WithoutChord).unwrap();
    println!(
        "odd-girth(3,2): girth {:?} with chord, {:?} without; chord = ({}, 0)",
        with.girth().girth,
        without.girth().girth,
        po.layer_count - 1
    );

    // Bipartite tournament D*: every X-Y pair joined in exactly one
    // direction, minimum outdegree h, girth 4.
    let h = 2;
    let dstar = generators::bipartite_tournament(h).unwrap();
    println!(
        "bipartite-tournament(h={h}): {} vertices, min outdegree {}, girth {:?}",
        dstar.vertex_count(),
        dstar.min_outdegree(),
        dstar.girth().girth
    );

    // Circular digraph: n = p(g-1)+1 vertices, arcs i -> i+1..i+p.
    let circ = generators::circular(2, 3).unwrap();
    println!(
        "circular(p=2,g=3): {} vertices, girth {:?}",
        circ.vertex_count(),
        circ.girth().girth
    );

    // Complete symmetric digraph on 2k-1 vertices: the classical lower
    // bound instance for k disjoint cycles.
    let k6 = generators::complete_symmetric(6).unwrap();
    println!(
        "complete(6): {} arcs, min outdegree {}",
        k6.arc_count(),
        k6.min_outdegree()
    );

    // Padding sources never changes girth or packing: the new vertices
    // have no in-arcs, so they lie on no cycle.
    let padded = generators::pad_sources(&even, 3, 4, 7).unwrap();
    println!(
        "padded even-girth(4,3) by 3 sources: {} vertices, girth {:?}",
        padded.vertex_count(),
        padded.girth().girth
    );
    assert_eq!(padded.girth().girth, even.girth().girth);

    // The random generator gives every vertex exactly delta out-arcs and
    // is reproducible from the seed.
    let r1 = generators::random_min_outdegree(12, 5, 42).unwrap();
    let r2 = generators::random_min_outdegree(12, 5, 42).unwrap();
    assert_eq!(r1, r2);
    println!(
        "random(12,5,seed=42): girth {:?}, min outdegree {}",
        r1.girth().girth,
        r1.min_outdegree()
    );
}
