//! Command-line front end: every library capability behind one
//! subcommand, reading and writing the canonical edge-list format.
//!
//! Exit codes: 0 on completion, 1 on usage or input errors, 2 when a
//! verification run surfaces a refutation candidate (for CI wiring).

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cyclepack::digraph::Digraph;
use cyclepack::generators::{self, OddVariant};
use cyclepack::harness::{self, DEFAULT_BUDGET};
use cyclepack::packing::{self, BoundMode};
use cyclepack::{io as graph_io, paths, probes};

#[derive(Parser)]
#[command(
    name = "cyclepack",
    about = "Digraph girth, vertex-disjoint cycle packings, longest paths, \
             counterexample families and conjecture verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a digraph family member as an edge list
    Generate(GenerateArgs),
    /// Girth, degrees and strong connectivity of a digraph
    Analyze(AnalyzeArgs),
    /// Maximum vertex-disjoint cycle packing
    Pack(PackArgs),
    /// Exact longest directed path
    LongestPath(LongestPathArgs),
    /// Structural probes of the minimal-counterexample conditions
    Probe(ProbeArgs),
    /// Conjecture-level verification on a generated or given instance
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Seeded random sweep of the packing check plus probe filter
    Search(SearchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Layered even-girth family
    EvenGirth,
    /// Layered odd-girth family (chord variant unless --without-chord)
    OddGirth,
    /// Bipartite tournament with h+1 blocks of size h
    BipartiteTournament,
    /// Circular digraph on p(g-1)+1 vertices with reach p
    Circular,
    /// Complete symmetric digraph
    Complete,
    /// Random digraph with every outdegree exactly delta
    Random,
}

/// Instance selection shared by most subcommands: an edge-list file or a
/// generated family member.
#[derive(Args)]
struct InstanceArgs {
    /// Edge-list input file ("-" for stdin)
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    /// Generate a family member instead of reading a file
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Girth target g (even-girth, odd-girth, circular)
    #[arg(long)]
    girth: Option<usize>,
    /// Packing target k (even-girth, odd-girth)
    #[arg(long)]
    packing_target: Option<usize>,
    /// Additive outdegree shift c (even-girth)
    #[arg(long, default_value_t = 0)]
    shift: usize,
    /// Use the chordless odd-girth variant
    #[arg(long, default_value_t = false)]
    without_chord: bool,
    /// Step reach p (circular)
    #[arg(long)]
    reach: Option<usize>,
    /// Vertex count m (complete, random)
    #[arg(long)]
    order: Option<usize>,
    /// Outdegree: block size h (bipartite-tournament) or delta (random)
    #[arg(long)]
    outdegree: Option<usize>,
    /// Seed for randomized generators and padding
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Append this many source vertices after generating
    #[arg(long)]
    pad_sources: Option<usize>,
    /// Outdegree of each padded source vertex
    #[arg(long)]
    pad_outdegree: Option<usize>,
}

impl InstanceArgs {
    fn load(&self) -> Result<(Digraph, String), String> {
        let (mut d, label) = match (&self.input, self.family) {
            (Some(path), None) => {
                let text = if path.as_os_str() == "-" {
                    let mut buf = String::new();
                    std::io::stdin()
                        .read_to_string(&mut buf)
                        .map_err(|e| format!("reading stdin: {e}"))?;
                    buf
                } else {
                    std::fs::read_to_string(path)
                        .map_err(|e| format!("reading {}: {e}", path.display()))?
                };
                let d = graph_io::parse_edge_list(&text).map_err(|e| e.to_string())?;
                (d, path.display().to_string())
            }
            (None, Some(family)) => self.generate(family)?,
            (None, None) => return Err("pass either --input or --family".to_string()),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };
        if let Some(s) = self.pad_sources {
            let degree = self
                .pad_outdegree
                .ok_or("--pad-sources needs --pad-outdegree")?;
            d = generators::pad_sources(&d, s, degree, self.seed).map_err(|e| e.to_string())?;
        }
        Ok((d, label))
    }

    fn generate(&self, family: Family) -> Result<(Digraph, String), String> {
        let need =
            |opt: Option<usize>, flag: &str| opt.ok_or_else(|| format!("--family requires {flag}"));
        match family {
            Family::EvenGirth => {
                let g = need(self.girth, "--girth")?;
                let k = need(self.packing_target, "--packing-target")?;
                let (d, _) = generators::even_girth(g, k, self.shift).map_err(|e| e.to_string())?;
                Ok((d, format!("even-girth(g={g},k={k},c={})", self.shift)))
            }
            Family::OddGirth => {
                let g = need(self.girth, "--girth")?;
                let k = need(self.packing_target, "--packing-target")?;
                let variant = if self.without_chord {
                    OddVariant::WithoutChord
                } else {
                    OddVariant::WithChord
                };
                let (d, _) = generators::odd_girth(g, k, variant).map_err(|e| e.to_string())?;
                let tag = if self.without_chord {
                    ",without-chord"
                } else {
                    ""
                };
                Ok((d, format!("odd-girth(g={g},k={k}{tag})")))
            }
            Family::BipartiteTournament => {
                let h = need(self.outdegree, "--outdegree")?;
                let d = generators::bipartite_tournament(h).map_err(|e| e.to_string())?;
                Ok((d, format!("bipartite-tournament(h={h})")))
            }
            Family::Circular => {
                let p = need(self.reach, "--reach")?;
                let g = need(self.girth, "--girth")?;
                let d = generators::circular(p, g).map_err(|e| e.to_string())?;
                Ok((d, format!("circular(p={p},g={g})")))
            }
            Family::Complete => {
                let m = need(self.order, "--order")?;
                let d = generators::complete_symmetric(m).map_err(|e| e.to_string())?;
                Ok((d, format!("complete({m})")))
            }
            Family::Random => {
                let m = need(self.order, "--order")?;
                let delta = need(self.outdegree, "--outdegree")?;
                let d = generators::random_min_outdegree(m, delta, self.seed)
                    .map_err(|e| e.to_string())?;
                Ok((d, format!("random(m={m},delta={delta},seed={})", self.seed)))
            }
        }
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Write the edge list here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write a DOT rendering to this path
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
    /// Skip the Menger connectivity computation
    #[arg(long)]
    no_connectivity: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CliBoundMode {
    /// Use the solver's structural bound, tightened by a certified
    /// counting bound when the digraph happens to be bipartite
    Auto,
    /// Require the certified counting bound over a bipartition side
    Certified,
    /// Verify the counting premise by full cycle enumeration
    Enumerative,
}

#[derive(Args)]
struct PackArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Node-expansion budget for the branch-and-bound search
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Only pack cycles of at most this length
    #[arg(long)]
    max_len: Option<usize>,
    /// How to justify the reported upper bound
    #[arg(long, value_enum, default_value = "auto")]
    bound_mode: CliBoundMode,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LongestPathArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Node-expansion budget for the exhaustive search
    #[arg(long, default_value_t = 50_000_000)]
    budget: u64,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ProbeArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Even- or odd-girth family instance against the packing conjecture
    Theorem2 {
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        packing_target: usize,
        #[arg(long, default_value_t = 0)]
        deficiency: usize,
        #[arg(long, default_value_t = 0)]
        shift: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Bipartite tournament sharpness instance at packing target k
    Corollary2 {
        #[arg(long)]
        packing_target: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Longest-path conjecture on the even-girth family
    Conjecture3 {
        #[arg(long)]
        girth: usize,
        #[arg(long)]
        packing_target: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
    /// Disjoint-cycle threshold check on any instance. The shared
    /// --packing-target flag is the tested k (and the family parameter,
    /// when the instance is generated).
    Bt {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Packing target k; instances get minimum outdegree 2k-1
    #[arg(long)]
    packing_target: usize,
    /// Vertex count of each sampled digraph
    #[arg(long)]
    order: usize,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Persist any refutation candidate (edge list + report) here
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Emit a JSON report
    #[arg(long)]
    json: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap help/version are not errors
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Analyze(args) => analyze(args),
        Command::Pack(args) => pack(args),
        Command::LongestPath(args) => longest_path(args),
        Command::Probe(args) => probe(args),
        Command::Verify(args) => verify(args),
        Command::Search(args) => search(args),
    }
}

fn generate(args: GenerateArgs) -> Result<ExitCode, String> {
    let (d, _) = args.instance.load()?;
    let edge_list = graph_io::to_edge_list(&d);
    match &args.out {
        Some(path) => std::fs::write(path, &edge_list)
            .map_err(|e| format!("writing {}: {e}", path.display()))?,
        None => print!("{edge_list}"),
    }
    if let Some(path) = &args.dot {
        std::fs::write(path, graph_io::to_dot(&d))
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct AnalyzeReport {
    schema: u32,
    instance: String,
    vertex_count: usize,
    arc_count: usize,
    min_outdegree: usize,
    min_indegree: usize,
    girth: Option<usize>,
    girth_witness: Vec<usize>,
    strongly_connected: bool,
    strong_connectivity: Option<usize>,
}

fn analyze(args: AnalyzeArgs) -> Result<ExitCode, String> {
    let (d, label) = args.instance.load()?;
    let cert = d.girth();
    let connectivity = if args.no_connectivity || d.vertex_count() < 2 {
        None
    } else {
        Some(d.strong_connectivity().map_err(|e| e.to_string())?)
    };
    let report = AnalyzeReport {
        schema: 1,
        instance: label,
        vertex_count: d.vertex_count(),
        arc_count: d.arc_count(),
        min_outdegree: d.min_outdegree(),
        min_indegree: d.min_indegree(),
        girth: cert.girth,
        girth_witness: cert.witness,
        strongly_connected: d.is_strongly_connected(),
        strong_connectivity: connectivity,
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        );
    } else {
        println!("instance           {}", report.instance);
        println!(
            "vertices / arcs    {} / {}",
            report.vertex_count, report.arc_count
        );
        println!(
            "min out/in degree  {} / {}",
            report.min_outdegree, report.min_indegree
        );
        match report.girth {
            Some(g) => println!("girth              {g}  witness {:?}", report.girth_witness),
            None => println!("girth              acyclic"),
        }
        match report.strong_connectivity {
            Some(s) => println!("strong connectivity {s}"),
            None => println!(
                "strong connectivity skipped ({})",
                if args.no_connectivity {
                    "--no-connectivity"
                } else {
                    "fewer than 2 vertices"
                }
            ),
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct PackReport {
    lower: usize,
    upper: usize,
    optimal: bool,
    cycles: Vec<Vec<usize>>,
}

fn pack(args: PackArgs) -> Result<ExitCode, String> {
    let (d, _) = args.instance.load()?;
    let mut packing = packing::max_disjoint_cycles_limited(&d, args.budget, args.max_len);
    let refinement = match args.bound_mode {
        CliBoundMode::Auto => bipartite_counting_bound(&d, BoundMode::Certified).ok(),
        CliBoundMode::Certified => Some(bipartite_counting_bound(&d, BoundMode::Certified)?),
        CliBoundMode::Enumerative => Some(bipartite_counting_bound(&d, BoundMode::Enumerative)?),
    };
    if let Some(bound) = refinement {
        packing.upper_bound = packing.upper_bound.min(bound).max(packing.lower_bound);
        packing.optimal = packing.lower_bound == packing.upper_bound;
    }
    let report = PackReport {
        lower: packing.lower_bound,
        upper: packing.upper_bound,
        optimal: packing.optimal,
        cycles: packing
            .cycles
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect(),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        );
    } else {
        println!(
            "packing in [{}, {}] (optimal: {})",
            report.lower, report.upper, report.optimal
        );
        for c in &report.cycles {
            println!("  cycle {c:?}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Certified or enumeratively verified counting bound over a side of the
/// underlying bipartition, when one exists.
fn bipartite_counting_bound(d: &Digraph, mode: BoundMode) -> Result<usize, String> {
    let color = d
        .underlying_bipartition()
        .ok_or("counting bound unavailable: the underlying graph is not bipartite")?;
    let girth = d
        .girth()
        .girth
        .ok_or("counting bound is pointless on an acyclic digraph")?;
    let side: Vec<usize> = {
        let ones: Vec<usize> = (0..d.vertex_count()).filter(|&v| color[v] == 1).collect();
        let zeros: Vec<usize> = (0..d.vertex_count()).filter(|&v| color[v] == 0).collect();
        if ones.len() < zeros.len() {
            ones
        } else {
            zeros
        }
    };
    packing::counting_bound(d, &side, girth / 2, mode).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct LongestPathReport {
    length: usize,
    exact: bool,
    witness: Vec<usize>,
}

fn longest_path(args: LongestPathArgs) -> Result<ExitCode, String> {
    let (d, _) = args.instance.load()?;
    let cert = paths::longest_path_exact(&d, args.budget);
    let report = LongestPathReport {
        length: cert.length,
        exact: cert.exact,
        witness: cert.witness.clone(),
    };
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        );
    } else {
        println!(
            "longest path {} arcs (exact: {}, upper bound {})",
            cert.length, cert.exact, cert.upper_bound
        );
        println!("  witness {:?}", cert.witness);
    }
    Ok(ExitCode::SUCCESS)
}

fn probe(args: ProbeArgs) -> Result<ExitCode, String> {
    let (d, label) = args.instance.load()?;
    let report = probes::counterexample_filter(&d);
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("serializes")
        );
    } else {
        println!("instance {label}");
        if report.advisory_low_outdegree {
            println!(
                "note: minimum outdegree {} is below 5; advisory run",
                report.min_outdegree
            );
        }
        if report.failed_conditions.is_empty() {
            println!("passes every necessary condition: possible minimal counterexample");
            println!("run `pack` next; a true counterexample would pack fewer than 3 cycles");
        } else {
            println!("certified not a minimal counterexample; failed conditions:");
            for c in &report.failed_conditions {
                println!("  {c}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(cmd: VerifyCommand) -> Result<ExitCode, String> {
    let (report, json) = match cmd {
        VerifyCommand::Theorem2 {
            girth,
            packing_target,
            deficiency,
            shift,
            budget,
            json,
        } => (
            harness::verify_theorem2_instance(girth, packing_target, deficiency, shift, budget)
                .map_err(|e| e.to_string())?,
            json,
        ),
        VerifyCommand::Corollary2 {
            packing_target,
            budget,
            json,
        } => (
            harness::verify_corollary2_instance(packing_target, budget)
                .map_err(|e| e.to_string())?,
            json,
        ),
        VerifyCommand::Conjecture3 {
            girth,
            packing_target,
            budget,
            json,
        } => (
            harness::verify_conjecture3_instance(girth, packing_target, budget)
                .map_err(|e| e.to_string())?,
            json,
        ),
        VerifyCommand::Bt {
            instance,
            budget,
            json,
        } => {
            let k = instance
                .packing_target
                .ok_or("verify bt requires --packing-target")?;
            let (d, label) = instance.load()?;
            (harness::verify_bt(&d, k, budget, &label), json)
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        println!("instance {}", report.instance);
        for claim in &report.claims {
            println!(
                "  [{:?}] {}: measured {}",
                claim.verdict, claim.id, claim.measured
            );
            if let Some(note) = &claim.note {
                println!("         note: {note}");
            }
        }
    }
    Ok(if report.has_refutation_candidate() {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}

fn search(args: SearchArgs) -> Result<ExitCode, String> {
    let summary = harness::random_search(
        args.packing_target,
        args.order,
        args.trials,
        args.seed,
        args.budget,
        args.out_dir.as_deref(),
    )
    .map_err(|e| e.to_string())?;
    if args.json {
        println!("{}", summary.to_json());
    } else {
        println!(
            "{} trials: {} consistent, {} inconclusive, {} refutation candidates \
             ({} passed every probe)",
            summary.trials,
            summary.consistent,
            summary.inconclusive,
            summary.refutation_candidates,
            summary.filter_passes
        );
        for c in &summary.candidates {
            println!("  candidate at seed {}", c.seed);
        }
    }
    Ok(if summary.refutation_candidates > 0 {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    })
}
