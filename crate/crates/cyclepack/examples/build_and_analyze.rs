//! Build digraphs by hand, measure the basics, and move them through the
//! text formats.
//!
//! ```bash
//! cargo run -p cyclepack --example build_and_analyze
//! ```

use cyclepack::digraph::DigraphBuilder;
use cyclepack::{io, Digraph};

fn main() {
    // a 5-cycle with one chord, built incrementally
    let mut b = DigraphBuilder::new(5);
    for i in 0..5 {
        b.add_arc(i, (i + 1) % 5).unwrap();
    }
    b.add_arc(2, 4).unwrap();
    let d = b.build();

    println!("vertices: {}, arcs: {}", d.vertex_count(), d.arc_count());
    println!("out-neighbors of 2: {:?}", d.out_neighbors(2));
    println!("min outdegree: {}", d.min_outdegree());

    // the chord shortens the girth from 5 to 4: (0,1,2,4)
    let cert = d.girth();
    println!("girth: {:?}, witness: {:?}", cert.girth, cert.witness);

    // Menger connectivity: one vertex cut suffices here
    println!("strong connectivity: {}", d.strong_connectivity().unwrap());

    // the canonical edge-list format round-trips exactly
    let text = io::to_edge_list(&d);
    print!("edge list:\n{text}");
    let back = io::parse_edge_list(&text).unwrap();
    assert_eq!(back, d);

    println!("dot:\n{}", io::to_dot(&d));

    // digons are legal; loops and parallel arcs are not
    let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
    println!("digon girth: {:?}", digon.girth().girth);
    assert!(Digraph::from_arcs(2, [(0, 0)]).is_err());
    assert!(Digraph::from_arcs(2, [(0, 1), (0, 1)]).is_err());
}
