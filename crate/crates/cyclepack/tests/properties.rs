//! Property tests over seeded random digraphs and the generator
//! families. The random generator itself is the sampling strategy:
//! proptest supplies (order, outdegree, seed) triples and shrinking works
//! on those.

use proptest::prelude::*;

use cyclepack::generators::{self, OddVariant};
use cyclepack::packing::{self, BoundMode};
use cyclepack::{brute, io, paths, probes, Digraph};

fn random_digraph(m: usize, delta: usize, seed: u64) -> Digraph {
    generators::random_min_outdegree(m, delta.min(m - 1).max(1), seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn girth_is_invariant_under_transposition(
        m in 4usize..10, delta in 1usize..4, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        let t = d.transpose();
        let a = d.girth();
        let b = t.girth();
        prop_assert_eq!(a.girth, b.girth);
        if let Some(g) = a.girth {
            prop_assert_eq!(a.witness.len(), g);
            let back = cyclepack::Cycle::from_vertices(b.witness.clone()).unwrap();
            prop_assert!(back.is_cycle_of(&t));
        }
    }

    #[test]
    fn girth_two_exactly_on_digon_presence(
        m in 3usize..10, delta in 1usize..5, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        let has_digon = probes::find_digon(&d).is_some();
        prop_assert_eq!(d.girth().girth == Some(2), has_digon);
    }

    #[test]
    fn girth_matches_brute_force_up_to_seven_vertices(
        m in 3usize..8, delta in 1usize..4, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        prop_assert_eq!(d.girth().girth, brute::girth(&d));
    }

    #[test]
    fn edge_list_round_trip_is_identity(
        m in 0usize..10, delta in 1usize..4, seed in 0u64..10_000
    ) {
        let d = if m < 2 {
            Digraph::from_arcs(m, []).unwrap()
        } else {
            random_digraph(m, delta, seed)
        };
        let text = io::to_edge_list(&d);
        let back = io::parse_edge_list(&text).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(io::to_edge_list(&back), text);
    }

    #[test]
    fn packing_matches_subset_dp_oracle(
        m in 4usize..9, delta in 1usize..4, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        let p = packing::max_disjoint_cycles(&d, 2_000_000);
        prop_assert!(p.optimal);
        prop_assert_eq!(p.lower_bound, brute::max_disjoint_cycles(&d));
        prop_assert!(p.verify(&d));
    }

    #[test]
    fn longest_path_matches_brute_force(
        m in 3usize..9, delta in 1usize..4, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        let c = paths::longest_path_exact(&d, 10_000_000);
        prop_assert!(c.exact);
        prop_assert_eq!(c.length, brute::longest_path(&d));
        prop_assert_eq!(
            c.length,
            paths::longest_path_exact(&d.transpose(), 10_000_000).length
        );
    }

    #[test]
    fn dprime_is_a_spanning_subdigraph(
        m in 4usize..10, delta in 2usize..5, seed in 0u64..10_000
    ) {
        let d = random_digraph(m, delta, seed);
        let dp = probes::build_dprime(&d);
        prop_assert_eq!(dp.vertex_count(), d.vertex_count());
        prop_assert!(dp.arcs().all(|(u, v)| d.has_arc(u, v)));
    }

    #[test]
    fn generators_are_deterministic(
        m in 3usize..12, delta in 1usize..5, seed in 0u64..10_000
    ) {
        let a = random_digraph(m, delta, seed);
        let b = random_digraph(m, delta, seed);
        prop_assert_eq!(io::to_edge_list(&a), io::to_edge_list(&b));
    }

    #[test]
    fn padding_preserves_girth_and_packing(
        m in 4usize..8, delta in 1usize..3, seed in 0u64..10_000, s in 1usize..4
    ) {
        let d = random_digraph(m, delta, seed);
        let padded = generators::pad_sources(&d, s, delta.min(m), seed ^ 0x5eed).unwrap();
        prop_assert_eq!(padded.girth().girth, d.girth().girth);
        let before = packing::max_disjoint_cycles(&d, 2_000_000);
        let after = packing::max_disjoint_cycles(&padded, 2_000_000);
        prop_assert_eq!(before.lower_bound, after.lower_bound);
        for v in m..m + s {
            prop_assert_eq!(padded.indegree(v), 0);
        }
    }
}

proptest! {
    // family sweeps are cheap; more cases are fine
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn even_family_invariants(g2 in 2usize..4, k in 1usize..6, c in 0usize..3) {
        let g = 2 * g2; // 4 or 6
        let (d, p) = generators::even_girth(g, k, c).unwrap();
        prop_assert_eq!(d.vertex_count(), p.layer_count * (p.min_outdegree + 1));
        prop_assert_eq!(d.min_outdegree(), p.min_outdegree);
        prop_assert_eq!(d.arc_count(), p.layer_count * p.min_outdegree * (p.min_outdegree + 1));
        // bipartite between the X layer and the rest
        let n = p.layer_count;
        prop_assert!(d.arcs().all(|(u, v)| (u < n) != (v < n)));
        prop_assert_eq!(d.girth().girth, Some(g));
        // the certified counting bound never undercuts a real packing
        let bound =
            packing::counting_bound(&d, &p.x_layer(), g / 2, BoundMode::Certified).unwrap();
        let found = packing::max_disjoint_cycles(&d, 50_000);
        prop_assert!(bound >= found.lower_bound);
    }

    #[test]
    fn odd_family_invariants(r in 1usize..3, k in 1usize..6) {
        let g = 2 * r + 1; // 3 or 5
        let (with, p) = generators::odd_girth(g, k, OddVariant::WithChord).unwrap();
        let (without, _) = generators::odd_girth(g, k, OddVariant::WithoutChord).unwrap();
        prop_assert_eq!(with.girth().girth, Some(g));
        prop_assert_eq!(without.girth().girth, Some(g + 1));
        prop_assert_eq!(with.arc_count(), without.arc_count() + 1);
        let chord = (p.layer_count - 1, 0);
        prop_assert!(with.has_arc(chord.0, chord.1));
        prop_assert!(without.arcs().all(|(u, v)| with.has_arc(u, v)));
    }

    #[test]
    fn bipartite_tournament_is_an_orientation(h in 1usize..5) {
        let d = generators::bipartite_tournament(h).unwrap();
        let y = generators::bipartite_tournament_y_side(h);
        for x in 0..(h + 1) * h {
            for &yv in &y {
                prop_assert!(d.has_arc(x, yv) ^ d.has_arc(yv, x));
            }
        }
        prop_assert_eq!(d.min_outdegree(), h);
        prop_assert_eq!(d.girth().girth, Some(4));
    }
}
