//! Exact longest simple directed path.
//!
//! Exhaustive depth-first search over simple paths with two prunes: the
//! set of unused vertices still reachable from the head caps how far the
//! path can grow, and unused vertices with no unused out-neighbor can
//! only ever terminate a path, so all but one of them is dead weight.
//! Start vertices ascend and neighbors are tried in ascending order; the
//! first maximum encountered is kept, which pins the witness.

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, Vertex};

/// Result of a longest-path computation. `length` counts arcs. When
/// `exact` is false the search ran out of budget; `length` is then the
/// best found and `upper_bound` a sound structural cap (they coincide
/// when `exact`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathCertificate {
    pub length: usize,
    pub witness: Vec<Vertex>,
    pub exact: bool,
    pub upper_bound: usize,
}

impl PathCertificate {
    /// Re-check the witness against the host digraph.
    pub fn verify(&self, d: &Digraph) -> bool {
        if self.witness.len() != self.length + 1 && !(self.length == 0 && self.witness.len() <= 1) {
            return false;
        }
        let mut seen = vec![false; d.vertex_count()];
        for &v in &self.witness {
            if v >= d.vertex_count() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        self.witness.windows(2).all(|w| d.has_arc(w[0], w[1])) && self.length <= self.upper_bound
    }
}

/// Longest-path cap from bipartite alternation: a simple path alternates
/// sides of any 2-coloring of the underlying graph, so it has at most
/// 2 * min(|X|, |Y|) arcs (one fewer when the sides are equal). `None`
/// when the underlying graph is not bipartite.
///
/// Kept separate from the search so the cap can be evaluated on instances
/// far too large for exhaustive search.
pub fn bipartite_alternation_path_bound(d: &Digraph) -> Option<usize> {
    let color = d.underlying_bipartition()?;
    let ones = color.iter().filter(|&&c| c == 1).count();
    let zeros = color.len() - ones;
    let smaller = zeros.min(ones);
    if zeros == ones {
        Some((2 * smaller).saturating_sub(1))
    } else {
        Some(2 * smaller)
    }
}

/// Structural cap used whenever the search cannot finish: the tighter of
/// the alternation bound and vertex_count - 1.
pub fn structural_path_bound(d: &Digraph) -> usize {
    let trivial = d.vertex_count().saturating_sub(1);
    match bipartite_alternation_path_bound(d) {
        Some(b) => b.min(trivial),
        None => trivial,
    }
}

/// Exact longest simple directed path within `budget` node expansions.
/// Inexactness is flagged, never silent.
pub fn longest_path_exact(d: &Digraph, budget: u64) -> PathCertificate {
    let n = d.vertex_count();
    if n == 0 {
        return PathCertificate {
            length: 0,
            witness: Vec::new(),
            exact: true,
            upper_bound: 0,
        };
    }
    let cap = structural_path_bound(d);
    let mut search = PathSearch {
        d,
        on_path: vec![false; n],
        path: Vec::new(),
        best: Vec::new(),
        cap,
        expansions: 0,
        budget,
        aborted: false,
    };
    for start in 0..n {
        if search.aborted {
            break;
        }
        if !search.best.is_empty() && search.best.len() - 1 == cap {
            break;
        }
        search.on_path[start] = true;
        search.path.push(start);
        if search.best.is_empty() {
            search.best.push(start); // a single vertex is the zero-arc path
        }
        search.extend();
        search.path.pop();
        search.on_path[start] = false;
    }
    let length = search.best.len().saturating_sub(1);
    let exact = !search.aborted;
    PathCertificate {
        length,
        witness: search.best,
        exact,
        upper_bound: if exact { length } else { cap },
    }
}

struct PathSearch<'a> {
    d: &'a Digraph,
    on_path: Vec<bool>,
    path: Vec<Vertex>,
    best: Vec<Vertex>,
    cap: usize,
    expansions: u64,
    budget: u64,
    aborted: bool,
}

impl PathSearch<'_> {
    fn extend(&mut self) {
        if self.aborted {
            return;
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            self.aborted = true;
            return;
        }
        if self.path.len() > self.best.len() {
            self.best = self.path.clone();
        }
        if self.best.len().saturating_sub(1) == self.cap {
            return; // structural cap reached, nothing longer exists
        }
        let head = *self.path.last().expect("path never empty");
        if !self.can_still_improve(head) {
            return;
        }
        for i in 0..self.d.out_neighbors(head).len() {
            let next = self.d.out_neighbors(head)[i];
            if self.on_path[next] {
                continue;
            }
            self.on_path[next] = true;
            self.path.push(next);
            self.extend();
            self.path.pop();
            self.on_path[next] = false;
            if self.aborted {
                return;
            }
        }
    }

    /// Reachability and dead-end prune: every future vertex lies in the
    /// set reachable from the head through unused vertices, and reachable
    /// unused vertices whose out-neighbors are all on the current path
    /// can only terminate it, so at most one of them counts.
    fn can_still_improve(&self, head: Vertex) -> bool {
        let n = self.d.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![head];
        seen[head] = true;
        let mut reachable = 1usize;
        while let Some(u) = stack.pop() {
            for &w in self.d.out_neighbors(u) {
                if !seen[w] && !self.on_path[w] {
                    seen[w] = true;
                    reachable += 1;
                    stack.push(w);
                }
            }
        }
        let mut dead_ends = 0usize;
        for (v, &in_reach) in seen.iter().enumerate() {
            if in_reach && v != head && self.d.out_neighbors(v).iter().all(|&w| self.on_path[w]) {
                dead_ends += 1;
            }
        }
        let usable = reachable - dead_ends.saturating_sub(1);
        // vertex count of the longest completion through this prefix
        let potential_vertices = self.path.len() + usable - 1;
        potential_vertices > self.best.len()
    }
}
