//! Acceptance suite: one test per release criterion, each printing a
//! single PASS line (run with `--nocapture` to see them). Combinatorial
//! quantities are exact; every tolerance here is zero. Runtime caps are
//! asserted with a stopwatch so a regression that blows the budget fails
//! loudly rather than silently slowing the suite.

use std::time::{Duration, Instant};

use cyclepack::digraph::{Digraph, DigraphBuilder};
use cyclepack::generators::{self, OddVariant};
use cyclepack::harness::{self, Verdict, DEFAULT_BUDGET};
use cyclepack::packing::{self, BoundMode};
use cyclepack::{brute, paths, probes};

fn finish(criterion: &str, started: Instant, cap: Duration) {
    let elapsed = started.elapsed();
    assert!(
        elapsed <= cap,
        "{criterion} exceeded its runtime cap: {elapsed:?} > {cap:?}"
    );
    println!("CRITERION {criterion} PASS ({elapsed:?})");
}

#[test]
fn criterion_1_conjecture2_refutation_at_g4_k3() {
    let t = Instant::now();
    let report = harness::verify_theorem2_instance(4, 3, 0, 0, DEFAULT_BUDGET).unwrap();
    assert_eq!(report.measured.girth, Some(4));
    assert_eq!(report.measured.min_outdegree, 4); // ceil(4*3/3)
    assert_eq!(report.measured.packing_lower, Some(2));
    assert_eq!(report.measured.packing_upper, Some(2));
    assert_eq!(report.measured.packing_optimal, Some(true));
    let claim = report
        .claims
        .iter()
        .find(|c| c.id == "girth-outdegree-packing-conjecture")
        .expect("conjecture claim present");
    assert_eq!(claim.verdict, Verdict::Refuted);

    // re-verify the two disjoint 4-cycle witnesses against the digraph
    let (d, _) = generators::even_girth(4, 3, 0).unwrap();
    let cycles = &report.witnesses.packing_cycles;
    assert_eq!(cycles.len(), 2);
    for cycle in cycles {
        assert_eq!(cycle.len(), 4);
        let c = cyclepack::Cycle::from_vertices(cycle.clone()).unwrap();
        assert!(c.is_cycle_of(&d));
    }
    let overlap = cycles[0].iter().any(|v| cycles[1].contains(v));
    assert!(!overlap);
    finish(
        "1 (conjecture 2 refuted at g=4, k=3)",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_corollary1_instance_g4_c1_k5() {
    let t = Instant::now();
    let report = harness::verify_theorem2_instance(4, 5, 0, 1, DEFAULT_BUDGET).unwrap();
    assert_eq!(report.measured.min_outdegree, 8); // ceil(20/3) + 1
    assert_eq!(report.measured.packing_upper, Some(4)); // = k - 1

    // the certified bound itself: S = X layer, q = g/2
    let (d, params) = generators::even_girth(4, 5, 1).unwrap();
    let bound = packing::counting_bound(&d, &params.x_layer(), 2, BoundMode::Certified).unwrap();
    assert_eq!(bound, 4);
    finish(
        "2 (corollary 1 instance g=4, c=1, k=5)",
        t,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_3_corollary2_at_k2() {
    let t = Instant::now();
    let report = harness::verify_corollary2_instance(2, DEFAULT_BUDGET).unwrap();
    assert_eq!(report.measured.girth, Some(4));
    assert_eq!(report.measured.min_outdegree, 2);
    assert_eq!(report.measured.packing_lower, Some(1));
    assert_eq!(report.measured.packing_upper, Some(1));
    assert_eq!(report.measured.packing_optimal, Some(true));
    finish("3 (corollary 2 at k=2)", t, Duration::from_secs(5));
}

#[test]
fn criterion_4_odd_family_g3_k2() {
    let t = Instant::now();
    let (with_chord, params) = generators::odd_girth(3, 2, OddVariant::WithChord).unwrap();
    let (without_chord, _) = generators::odd_girth(3, 2, OddVariant::WithoutChord).unwrap();
    assert_eq!(with_chord.girth().girth, Some(3));
    assert_eq!(without_chord.girth().girth, Some(4));

    // the variants differ in exactly the chord arc
    assert_eq!(with_chord.arc_count(), without_chord.arc_count() + 1);
    let chord = (params.layer_count - 1, 0);
    assert!(with_chord.has_arc(chord.0, chord.1));
    assert!(!without_chord.has_arc(chord.0, chord.1));
    for (u, v) in without_chord.arcs() {
        assert!(with_chord.has_arc(u, v));
    }

    let delta =
        packing::packing_delta_under_arc_removal(&with_chord, chord, DEFAULT_BUDGET).unwrap();
    assert!(delta.with_arc.optimal && delta.without_arc.optimal);
    assert_eq!(delta.delta_in_unit_range, Some(true));
    finish("4 (odd family g=3, k=2)", t, Duration::from_secs(10));
}

#[test]
fn criterion_5_theorem4_at_g4_k2() {
    let t = Instant::now();
    let report = harness::verify_conjecture3_instance(4, 2, DEFAULT_BUDGET).unwrap();
    // exhaustive search completed on the 16-vertex instance
    assert_eq!(report.measured.longest_path_exact, Some(true));
    let measured = report.measured.longest_path.unwrap();
    assert!(measured < 9, "L* = {measured} not below h(g-1) = 9");

    let conjecture = report
        .claims
        .iter()
        .find(|c| c.id == "long-path-conjecture")
        .expect("conjecture verdict present");
    assert_eq!(conjecture.verdict, Verdict::Refuted);

    // the 2n-1 cap gets its own verdict, whatever the exact value says
    let cap_claim = report
        .claims
        .iter()
        .find(|c| c.id == "path-upper-bound-2n-minus-1")
        .expect("cap verdict present");
    assert!(matches!(
        cap_claim.verdict,
        Verdict::Consistent | Verdict::Refuted
    ));
    finish("5 (longest path at g=4, k=2)", t, Duration::from_secs(60));
}

#[test]
fn criterion_6_bermond_thomassen_sanity_sweep() {
    let t = Instant::now();
    for seed in 0..50u64 {
        let d = generators::random_min_outdegree(12, 5, 6000 + seed).unwrap();
        let p = packing::max_disjoint_cycles(&d, DEFAULT_BUDGET);
        assert!(
            p.lower_bound >= 3,
            "delta=5 seed {seed}: packing {}",
            p.lower_bound
        );
    }
    for seed in 0..50u64 {
        let d = generators::random_min_outdegree(12, 3, 6100 + seed).unwrap();
        let p = packing::max_disjoint_cycles(&d, DEFAULT_BUDGET);
        assert!(
            p.lower_bound >= 2,
            "delta=3 seed {seed}: packing {}",
            p.lower_bound
        );
    }
    finish(
        "6 (threshold sanity sweep, 100 instances)",
        t,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_7_oracle_equivalence_on_200_small_digraphs() {
    let t = Instant::now();
    let mut checked = 0;
    for i in 0..200u64 {
        let m = 5 + (i % 5) as usize; // 5..=9 vertices
        let delta = 1 + (i % 4) as usize;
        let delta = delta.min(m - 1);
        let d = generators::random_min_outdegree(m, delta, 7000 + i).unwrap();

        let girth = d.girth();
        assert_eq!(girth.girth, brute::girth(&d), "girth mismatch at i={i}");
        if let Some(g) = girth.girth {
            assert_eq!(girth.witness.len(), g);
        }

        let packing = packing::max_disjoint_cycles(&d, DEFAULT_BUDGET);
        assert!(packing.optimal, "packing not settled at i={i}");
        assert_eq!(
            packing.lower_bound,
            brute::max_disjoint_cycles(&d),
            "packing mismatch at i={i}"
        );

        let path = paths::longest_path_exact(&d, DEFAULT_BUDGET);
        assert!(path.exact, "path search not settled at i={i}");
        assert_eq!(
            path.length,
            brute::longest_path(&d),
            "path mismatch at i={i}"
        );
        checked += 1;
    }
    assert_eq!(checked, 200);
    finish(
        "7 (oracle equivalence, 200 instances)",
        t,
        Duration::from_secs(120),
    );
}

/// Digon- and triangle-free digraph with minimum outdegree 5 that
/// survives most of the probe gauntlet; see the probes module tests.
fn layered_c4() -> Digraph {
    let mut b = DigraphBuilder::new(16);
    for layer in 0..4 {
        let base = 4 * layer;
        for i in 0..4 {
            b.add_arc(base + i, base + (i + 1) % 4).unwrap();
            for j in 0..4 {
                b.add_arc(base + i, (base + 4 + j) % 16).unwrap();
            }
        }
    }
    b.build()
}

#[test]
fn criterion_8_probe_soundness() {
    let t = Instant::now();
    let mut gauntlet: Vec<(String, Digraph)> = Vec::new();
    gauntlet.push(("K6".into(), generators::complete_symmetric(6).unwrap()));
    for n in [3usize, 5, 8] {
        let cycle = Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        gauntlet.push((format!("C{n}"), cycle));
    }
    gauntlet.push(("layered-c4".into(), layered_c4()));
    for seed in 0..20u64 {
        let m = 12 + (seed % 3) as usize * 2; // 12, 14, 16
        gauntlet.push((
            format!("random(m={m},seed={seed})"),
            generators::random_min_outdegree(m, 5, 8000 + seed).unwrap(),
        ));
    }
    for (label, d) in &gauntlet {
        let report = probes::counterexample_filter(d);
        if report.possible_minimal_counterexample {
            let p = packing::max_disjoint_cycles(d, DEFAULT_BUDGET);
            assert!(
                p.lower_bound >= 3,
                "{label} passed every probe but packs only {}",
                p.lower_bound
            );
        }
        // spot-check that returned witnesses hold up against the digraph
        if let Some(c) = &report.digon {
            assert!(c.is_cycle_of(d) && c.len() == 2, "{label}");
        }
        if let Some(c) = &report.triangle {
            assert!(c.is_cycle_of(d) && c.len() == 3, "{label}");
        }
        if let Some((u, v)) = report.undominated_arc {
            assert!(
                d.has_arc(u, v) && !brute::arc_is_dominated(d, u, v),
                "{label}"
            );
        }
    }
    finish("8 (probe soundness)", t, Duration::from_secs(120));
}

mod cli_determinism {
    use super::finish;
    use std::process::Command;
    use std::time::{Duration, Instant};

    fn run(args: &[&str]) -> (Vec<u8>, Option<i32>) {
        let out = Command::new(env!("CARGO_BIN_EXE_cyclepack"))
            .args(args)
            .output()
            .expect("binary runs");
        (out.stdout, out.status.code())
    }

    #[test]
    fn criterion_9_cli_reruns_are_byte_identical() {
        let t = Instant::now();
        let commands: Vec<Vec<&str>> = vec![
            vec![
                "generate",
                "--family",
                "even-girth",
                "--girth",
                "4",
                "--packing-target",
                "3",
            ],
            vec![
                "analyze",
                "--family",
                "even-girth",
                "--girth",
                "4",
                "--packing-target",
                "3",
                "--json",
            ],
            vec![
                "pack",
                "--family",
                "even-girth",
                "--girth",
                "4",
                "--packing-target",
                "3",
                "--json",
            ],
            vec!["pack", "--family", "complete", "--order", "6", "--json"],
            vec![
                "longest-path",
                "--family",
                "even-girth",
                "--girth",
                "4",
                "--packing-target",
                "2",
                "--json",
            ],
            vec![
                "probe",
                "--family",
                "random",
                "--order",
                "12",
                "--outdegree",
                "5",
                "--seed",
                "3",
                "--json",
            ],
            vec![
                "verify",
                "theorem2",
                "--girth",
                "4",
                "--packing-target",
                "3",
                "--json",
            ],
            vec![
                "verify",
                "theorem2",
                "--girth",
                "3",
                "--packing-target",
                "2",
                "--json",
            ],
            vec!["verify", "corollary2", "--packing-target", "2", "--json"],
            vec![
                "verify",
                "conjecture3",
                "--girth",
                "4",
                "--packing-target",
                "2",
                "--json",
            ],
            vec![
                "verify",
                "bt",
                "--family",
                "complete",
                "--order",
                "6",
                "--packing-target",
                "3",
                "--json",
            ],
            vec![
                "search",
                "--packing-target",
                "2",
                "--order",
                "8",
                "--trials",
                "5",
                "--seed",
                "7",
                "--json",
            ],
        ];
        for args in &commands {
            let (first, code_first) = run(args);
            let (second, code_second) = run(args);
            assert!(!first.is_empty(), "no output from {args:?}");
            assert_eq!(code_first, Some(0), "unexpected exit for {args:?}");
            assert_eq!(code_first, code_second);
            assert_eq!(first, second, "output differs between reruns of {args:?}");
        }
        finish("9 (CLI determinism)", t, Duration::from_secs(120));
    }

    #[test]
    fn cli_exit_codes_follow_the_contract() {
        let t = Instant::now();
        // usage error: missing required instance
        let out = Command::new(env!("CARGO_BIN_EXE_cyclepack"))
            .args(["analyze"])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(1));
        // input error: malformed edge list
        let dir = std::env::temp_dir().join("cyclepack-acceptance");
        std::fs::create_dir_all(&dir).unwrap();
        let bad = dir.join("bad.edges");
        std::fs::write(&bad, "2 1\n0 0\n").unwrap();
        let out = Command::new(env!("CARGO_BIN_EXE_cyclepack"))
            .args(["analyze", "--input", bad.to_str().unwrap()])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(1));
        finish("9b (CLI exit codes)", t, Duration::from_secs(60));
    }
}
