//! Exact and bounded reasoning about vertex-disjoint cycle packings.
//!
//! The solver is a deterministic branch-and-bound: at each node it picks
//! the lowest-indexed vertex still usable that lies on some cycle, and
//! branches over every cycle through it (shortest first, canonical order
//! within a length) versus excluding it. Cycles through the pivot are
//! enumerated lazily, one length class at a time, so instances whose
//! total cycle count explodes stay solvable as long as the bound closes
//! the long classes. The budget is counted in search-tree node
//! expansions, never wall time, so identical inputs always produce
//! identical packings.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cycles::{cycles_through_exact, enumerate_cycles, Cycle};
use crate::digraph::{Digraph, Vertex};

/// A set of pairwise vertex-disjoint cycles with a bound pair.
/// `lower_bound` always equals `cycles.len()`; `optimal` means the two
/// bounds met, i.e. the packing is a maximum one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Packing {
    pub cycles: Vec<Cycle>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub optimal: bool,
}

impl Packing {
    /// Re-check the structural invariants against the host digraph:
    /// every cycle is a cycle of `d` and they are pairwise disjoint.
    pub fn verify(&self, d: &Digraph) -> bool {
        if self.lower_bound != self.cycles.len() || self.lower_bound > self.upper_bound {
            return false;
        }
        if self.optimal && self.lower_bound != self.upper_bound {
            return false;
        }
        let mut used = vec![false; d.vertex_count()];
        for c in &self.cycles {
            if !c.is_cycle_of(d) {
                return false;
            }
            for &v in c.vertices() {
                if used[v] {
                    return false;
                }
                used[v] = true;
            }
        }
        true
    }
}

/// Exact maximum vertex-disjoint cycle packing within `budget` node
/// expansions. If the search completes, `optimal` is true and the bounds
/// agree; otherwise the best packing found is returned with a sound
/// structural upper bound.
pub fn max_disjoint_cycles(d: &Digraph, budget: u64) -> Packing {
    max_disjoint_cycles_limited(d, budget, None)
}

/// Like [`max_disjoint_cycles`], but only cycles of length at most
/// `max_len` may enter the packing. The bounds still refer to the
/// unrestricted problem, so the result can only be optimal when the
/// restricted search meets the structural upper bound.
pub fn max_disjoint_cycles_limited(d: &Digraph, budget: u64, max_len: Option<usize>) -> Packing {
    let girth = match d.girth().girth {
        None => {
            return Packing {
                cycles: Vec::new(),
                lower_bound: 0,
                upper_bound: 0,
                optimal: true,
            }
        }
        Some(g) => g,
    };
    let alternation = AlternationBound::of(d, girth);
    let n = d.vertex_count();
    let mut search = Search {
        d,
        girth,
        alternation,
        max_len,
        usable: vec![true; n],
        chosen: Vec::new(),
        best: Vec::new(),
        have_best: false,
        expansions: 0,
        budget,
        aborted: false,
    };
    let (root_bound, _) = search.structural_bound();
    search.expand();
    let lower = search.best.len();
    let complete = !search.aborted;
    let settled = (complete && max_len.is_none()) || lower == root_bound;
    let (upper, optimal) = if settled {
        (lower, true)
    } else {
        (root_bound, false)
    };
    let packing = Packing {
        cycles: search.best,
        lower_bound: lower,
        upper_bound: upper,
        optimal,
    };
    assert!(packing.verify(d), "solver produced an invalid packing");
    packing
}

/// Alternation machinery behind the structural bound. A 2-coloring of
/// the underlying graph minus a few conflicting arcs certifies that all
/// other cycles alternate sides; a packing holds at most one cycle per
/// conflict arc on top of what the alternating side counts allow, since
/// disjoint cycles are arc-disjoint.
struct AlternationBound {
    colors: Vec<u8>,
    /// Arcs joining same-colored endpoints; empty means truly bipartite.
    conflicts: Vec<(Vertex, Vertex)>,
    /// Girth of the digraph without the conflict arcs; `None` when that
    /// digraph is acyclic (every cycle then uses a conflict arc).
    reduced_girth: Option<usize>,
}

impl AlternationBound {
    /// Proper bipartition if one exists, else the first arc (canonical
    /// order) whose removal leaves the underlying graph bipartite. The
    /// girth families live one chord away from bipartite, which is the
    /// case this pays for.
    fn of(d: &Digraph, girth: usize) -> Option<Self> {
        if let Some(colors) = d.underlying_bipartition() {
            return Some(Self {
                colors,
                conflicts: Vec::new(),
                reduced_girth: Some(girth),
            });
        }
        for (u, v) in d.arcs() {
            if let Some(colors) = bipartition_excluding(d, (u, v)) {
                let reduced = d.without_arc(u, v).expect("arc exists");
                return Some(Self {
                    colors,
                    conflicts: vec![(u, v)],
                    reduced_girth: reduced.girth().girth,
                });
            }
        }
        None
    }

    /// Upper bound on disjoint cycles within one strongly connected
    /// vertex set (given by original IDs, sorted).
    fn component_cap(&self, members: &[Vertex]) -> usize {
        let conflicts_inside = self
            .conflicts
            .iter()
            .filter(|(u, v)| members.binary_search(u).is_ok() && members.binary_search(v).is_ok())
            .count();
        match self.reduced_girth {
            // conflict-free cycles alternate and are at least this long
            Some(gr) => {
                let ones = members.iter().filter(|&&v| self.colors[v] == 1).count();
                let side = ones.min(members.len() - ones);
                side / (gr / 2).max(1) + conflicts_inside
            }
            // every cycle uses some conflict arc
            None => conflicts_inside,
        }
    }
}

/// 2-coloring of the underlying graph with one directed arc deleted.
/// The deleted arc's underlying edge survives when its twin exists.
fn bipartition_excluding(d: &Digraph, skip: (Vertex, Vertex)) -> Option<Vec<u8>> {
    let n = d.vertex_count();
    let mut color = vec![u8::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let crosses = |x: Vertex, w: Vertex| {
        // the underlying edge x~w exists unless its only arc is `skip`
        let forward = d.has_arc(x, w) && (x, w) != skip;
        let backward = d.has_arc(w, x) && (w, x) != skip;
        forward || backward
    };
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &w in d.out_neighbors(x).iter().chain(d.in_neighbors(x)) {
                if !crosses(x, w) {
                    continue;
                }
                if color[w] == u8::MAX {
                    color[w] = 1 - color[x];
                    queue.push_back(w);
                } else if color[w] == color[x] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

struct Search<'a> {
    d: &'a Digraph,
    girth: usize,
    alternation: Option<AlternationBound>,
    max_len: Option<usize>,
    usable: Vec<bool>,
    chosen: Vec<Cycle>,
    best: Vec<Cycle>,
    have_best: bool,
    expansions: u64,
    budget: u64,
    aborted: bool,
}

impl Search<'_> {
    /// Sound upper bound on how many more disjoint cycles fit in the
    /// usable subgraph, together with the branching pivot (the lowest
    /// usable vertex lying on any cycle). Per strongly connected
    /// component the bound is floor(size / girth), tightened by the
    /// alternation cap where a near-bipartition exists.
    fn structural_bound(&self) -> (usize, Option<Vertex>) {
        let (induced, back) = self.d.induced(&usable_vertices(&self.usable));
        let mut bound = 0;
        let mut pivot: Option<Vertex> = None;
        for comp in induced.strongly_connected_components() {
            if comp.len() < 2 {
                continue;
            }
            let mut cap = comp.len() / self.girth;
            if let Some(alt) = &self.alternation {
                // comp holds induced IDs; map back (stays sorted: `induced`
                // numbers vertices in ascending original order)
                let members: Vec<Vertex> = comp.iter().map(|&v| back[v]).collect();
                cap = cap.min(alt.component_cap(&members));
            }
            bound += cap;
            let candidate = back[comp[0]];
            pivot = Some(pivot.map_or(candidate, |p| p.min(candidate)));
        }
        (bound, pivot)
    }

    /// Largest number of further cycles possible once one more cycle of
    /// length `len` is taken out of `usable_count` vertices. A cycle
    /// crossing `c` conflict arcs changes color only `len - c` times, so
    /// it holds at least `(len - c) / 2` vertices of each side; the rest
    /// of the packing pays the same way, plus one cycle per conflict arc.
    fn class_tail_bound(
        &self,
        len: usize,
        usable_count: usize,
        min_side: usize,
        usable_conflicts: usize,
    ) -> usize {
        let mut tail = (usable_count - len) / self.girth;
        if let Some(alt) = &self.alternation {
            let alt_tail = match alt.reduced_girth {
                Some(gr) => {
                    let eaten = len.saturating_sub(usable_conflicts) / 2;
                    usable_conflicts + min_side.saturating_sub(eaten) / (gr / 2).max(1)
                }
                None => usable_conflicts,
            };
            tail = tail.min(alt_tail);
        }
        tail
    }

    fn expand(&mut self) {
        if self.aborted {
            return;
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            self.aborted = true;
            return;
        }

        let (extra, pivot) = self.structural_bound();
        if self.have_best && self.chosen.len() + extra <= self.best.len() {
            return;
        }

        let pivot = match pivot {
            Some(p) => p,
            None => {
                // no usable vertex lies on a cycle: this branch is maximal
                if !self.have_best || self.chosen.len() > self.best.len() {
                    self.best = self.chosen.clone();
                    self.have_best = true;
                }
                return;
            }
        };

        let usable_count = self.usable.iter().filter(|&&u| u).count();
        let (min_side, usable_conflicts) = match &self.alternation {
            Some(alt) => {
                let ones = (0..self.d.vertex_count())
                    .filter(|&v| self.usable[v] && alt.colors[v] == 1)
                    .count();
                let conflicts = alt
                    .conflicts
                    .iter()
                    .filter(|&&(u, v)| self.usable[u] && self.usable[v])
                    .count();
                (ones.min(usable_count - ones), conflicts)
            }
            None => (usable_count, 0),
        };
        let len_cap = self.max_len.unwrap_or(usable_count).min(usable_count);
        for len in self.girth..=len_cap {
            // no cycle of this class or longer can lead to an improvement
            let after = self.chosen.len()
                + 1
                + self.class_tail_bound(len, usable_count, min_side, usable_conflicts);
            if self.have_best && after <= self.best.len() {
                break;
            }
            let class = cycles_through_exact(self.d, pivot, &self.usable, len);
            for cycle in class {
                self.with_cycle(&cycle);
                if self.aborted {
                    return;
                }
            }
        }

        // exclude the pivot from every packing in this subtree
        self.usable[pivot] = false;
        self.expand();
        self.usable[pivot] = true;
    }

    fn with_cycle(&mut self, cycle: &Cycle) {
        for &v in cycle.vertices() {
            self.usable[v] = false;
        }
        self.chosen.push(cycle.clone());
        self.expand();
        self.chosen.pop();
        for &v in cycle.vertices() {
            self.usable[v] = true;
        }
    }
}

fn usable_vertices(usable: &[bool]) -> Vec<Vertex> {
    usable
        .iter()
        .enumerate()
        .filter_map(|(v, &u)| if u { Some(v) } else { None })
        .collect()
}

/// How the premise of [`counting_bound`] is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundMode {
    /// Structural proof: every arc has exactly one endpoint in S and the
    /// girth is at least 2q, which together force every cycle to
    /// alternate in and out of S at least q times.
    Certified,
    /// Exhaustive proof: enumerate every cycle and check the intersection
    /// directly. Desk scale only.
    Enumerative,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("vertex {0} in S is out of range")]
    VertexOutOfRange(Vertex),
    #[error("q must be at least 1")]
    QuotientZero,
    #[error("premise not established: {0}")]
    PremiseNotEstablished(String),
}

/// Upper bound floor(|S| / q) on the maximum packing, valid only when
/// every cycle of `d` meets `S` in at least `q` vertices; errors out
/// loudly when the chosen mode cannot establish that premise.
pub fn counting_bound(
    d: &Digraph,
    s: &[Vertex],
    q: usize,
    mode: BoundMode,
) -> Result<usize, BoundError> {
    if q == 0 {
        return Err(BoundError::QuotientZero);
    }
    let n = d.vertex_count();
    let mut in_s = vec![false; n];
    for &v in s {
        if v >= n {
            return Err(BoundError::VertexOutOfRange(v));
        }
        in_s[v] = true;
    }
    let s_size = in_s.iter().filter(|&&b| b).count();
    match mode {
        BoundMode::Certified => {
            for (u, v) in d.arcs() {
                if in_s[u] == in_s[v] {
                    return Err(BoundError::PremiseNotEstablished(format!(
                        "arc {u} -> {v} does not alternate across S"
                    )));
                }
            }
            if let Some(g) = d.girth().girth {
                if g < 2 * q {
                    return Err(BoundError::PremiseNotEstablished(format!(
                        "girth {g} is below 2q = {}",
                        2 * q
                    )));
                }
            }
            Ok(s_size / q)
        }
        BoundMode::Enumerative => {
            let enumeration = enumerate_cycles(d, None, 200_000);
            if enumeration.truncated {
                return Err(BoundError::PremiseNotEstablished(
                    "too many cycles to enumerate".into(),
                ));
            }
            for c in &enumeration.cycles {
                let hits = c.vertices().iter().filter(|&&v| in_s[v]).count();
                if hits < q {
                    return Err(BoundError::PremiseNotEstablished(format!(
                        "cycle {:?} meets S only {hits} < {q} times",
                        c.vertices()
                    )));
                }
            }
            Ok(s_size / q)
        }
    }
}

/// Maximum packings of `d` and of `d` minus one arc. Removing a single
/// arc destroys at most one cycle of an optimal packing, so the exact
/// difference always lies in {0, 1}; `delta_in_unit_range` reports
/// whether the measurement confirms that, and is `None` when either side
/// ran out of budget before proving optimality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcRemovalDelta {
    pub with_arc: Packing,
    pub without_arc: Packing,
    pub delta_in_unit_range: Option<bool>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArcRemovalError {
    #[error(transparent)]
    ArcNotPresent(#[from] crate::digraph::ArcNotPresent),
}

pub fn packing_delta_under_arc_removal(
    d: &Digraph,
    arc: (Vertex, Vertex),
    budget: u64,
) -> Result<ArcRemovalDelta, ArcRemovalError> {
    let removed = d.without_arc(arc.0, arc.1)?;
    let with_arc = max_disjoint_cycles(d, budget);
    let without_arc = max_disjoint_cycles(&removed, budget);
    let delta_in_unit_range = if with_arc.optimal && without_arc.optimal {
        let p = with_arc.lower_bound;
        let q = without_arc.lower_bound;
        Some(p >= q && p - q <= 1)
    } else {
        // downgrade to a bound check on the intervals
        let lo = with_arc.lower_bound.saturating_sub(without_arc.upper_bound);
        if lo > 1 {
            Some(false)
        } else {
            None
        }
    };
    Ok(ArcRemovalDelta {
        with_arc,
        without_arc,
        delta_in_unit_range,
    })
}
