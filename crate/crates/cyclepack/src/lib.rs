//! Exact analysis of vertex-disjoint cycle packings in digraphs.
//!
//! This crate builds the digraph families that separate minimum-outdegree
//! conditions from disjoint-cycle and long-path guarantees, and measures
//! them exactly at desk scale: girth with witness cycles, maximum
//! vertex-disjoint cycle packings, certified counting bounds, exact
//! longest directed paths, and the structural probes a hypothetical
//! minimal counterexample to the Bermond-Thomassen conjecture (at k = 3)
//! would have to satisfy. The [`harness`] module turns those measurements
//! into machine-readable verdicts on the conjectures themselves.
//!
//! Everything is deterministic: digraphs are immutable after
//! construction, all algorithms are pure functions with canonical
//! tie-breaking, randomized generators are seed-deterministic, and search
//! budgets are counted in node expansions rather than wall time. Rerunning
//! any computation reproduces its output byte for byte.
//!
//! Start with the `examples/` directory; each example is a runnable tour
//! of one capability. The `cyclepack` binary exposes the same operations
//! as subcommands over a plain edge-list file format (see [`io`]).

pub mod brute;
pub mod cycles;
pub mod digraph;
pub mod generators;
pub mod harness;
pub mod io;
pub mod packing;
pub mod paths;
pub mod probes;

mod connectivity;
mod girth;

pub use connectivity::ConnectivityError;
pub use cycles::{enumerate_cycles, Cycle, CycleEnumeration};
pub use digraph::{BuildError, Digraph, DigraphBuilder, Vertex};
pub use girth::GirthCertificate;
pub use packing::{
    counting_bound, max_disjoint_cycles, max_disjoint_cycles_limited,
    packing_delta_under_arc_removal, BoundMode, Packing,
};
pub use paths::{longest_path_exact, PathCertificate};
pub use probes::{build_dprime, counterexample_filter, find_undominated_arc, ProbeReport};
