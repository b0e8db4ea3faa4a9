//! Simple directed cycles: the canonical [`Cycle`] type and exhaustive
//! enumeration of elementary circuits.
//!
//! Unbounded enumeration is Johnson's algorithm (blocked sets, per-start
//! strongly connected restriction). Length-bounded enumeration uses a
//! plain depth-first search with a shortest-return-distance prune instead,
//! since Johnson's blocking logic is not sound under a depth cutoff.
//! Both explore starts and neighbors in ascending order, which makes the
//! output exactly the sorted order of canonical vertex sequences.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

/// A simple directed cycle in canonical form: the vertex sequence rotated
/// so that the smallest vertex comes first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(Vec<Vertex>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least 2 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(Vertex),
}

impl Cycle {
    /// Canonicalize a vertex sequence into a cycle. The sequence lists the
    /// vertices in traversal order; the closing arc back to the first
    /// vertex is implicit.
    pub fn from_vertices(seq: Vec<Vertex>) -> Result<Self, CycleError> {
        if seq.len() < 2 {
            return Err(CycleError::TooShort(seq.len()));
        }
        let mut sorted = seq.clone();
        sorted.sort_unstable();
        for w in sorted.windows(2) {
            if w[0] == w[1] {
                return Err(CycleError::RepeatedVertex(w[0]));
            }
        }
        let min_pos = seq
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| v)
            .map(|(i, _)| i)
            .expect("nonempty");
        let mut rotated = Vec::with_capacity(seq.len());
        rotated.extend_from_slice(&seq[min_pos..]);
        rotated.extend_from_slice(&seq[..min_pos]);
        Ok(Cycle(rotated))
    }

    /// Internal constructor for sequences already starting at their
    /// minimum vertex with no repeats.
    pub(crate) fn from_canonical_unchecked(seq: Vec<Vertex>) -> Self {
        debug_assert!(seq.len() >= 2);
        debug_assert!(seq.iter().skip(1).all(|&v| v > seq[0]));
        Cycle(seq)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// A cycle always has at least 2 vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Do all consecutive arcs (including the closing one) exist in `d`?
    pub fn is_cycle_of(&self, d: &Digraph) -> bool {
        self.0
            .iter()
            .zip(self.0.iter().cycle().skip(1))
            .all(|(&u, &v)| d.has_arc(u, v))
    }

    pub fn is_disjoint_from(&self, other: &Cycle) -> bool {
        self.0.iter().all(|v| !other.0.contains(v))
    }
}

/// Result of cycle enumeration. When more cycles exist than the cap, the
/// first `cap` cycles in canonical order are returned and `truncated` is
/// set; truncation is a flagged result, not an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleEnumeration {
    pub cycles: Vec<Cycle>,
    pub truncated: bool,
}

/// Every simple directed cycle of length at most `max_len` (all lengths
/// when `None`), canonical, in sorted order, stopping after `cap` cycles.
///
/// # Panics
/// Panics if `cap` is 0.
pub fn enumerate_cycles(d: &Digraph, max_len: Option<usize>, cap: usize) -> CycleEnumeration {
    assert!(cap >= 1, "enumeration cap must be at least 1");
    let n = d.vertex_count();
    let mut out = Vec::new();
    let mut truncated = false;
    'starts: for start in 0..n {
        // restrict to the strongly connected component of `start` within
        // the subgraph on vertices >= start; every cycle whose minimum
        // vertex is `start` lives there
        let members = scc_of_start(d, start);
        if members.iter().filter(|&&m| m).count() < 2 {
            continue;
        }
        let emitted = match max_len {
            Some(limit) => bounded_search(d, start, limit, &members, cap, &mut out),
            None => johnson_search(d, start, &members, cap, &mut out),
        };
        if emitted == Emit::CapHit {
            truncated = true;
            break 'starts;
        }
    }
    CycleEnumeration {
        cycles: out,
        truncated,
    }
}

#[derive(PartialEq, Eq)]
enum Emit {
    Done,
    CapHit,
}

/// Membership mask of the SCC containing `start` in the subgraph induced
/// by vertices `>= start`: vertices both reachable from `start` and able
/// to reach it.
fn scc_of_start(d: &Digraph, start: Vertex) -> Vec<bool> {
    let n = d.vertex_count();
    let forward = reach(d, start, false);
    let backward = reach(d, start, true);
    (0..n).map(|v| forward[v] && backward[v]).collect()
}

fn reach(d: &Digraph, start: Vertex, reverse: bool) -> Vec<bool> {
    let n = d.vertex_count();
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let neighbors = if reverse {
            d.in_neighbors(u)
        } else {
            d.out_neighbors(u)
        };
        for &w in neighbors {
            if w >= start && !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Johnson's circuit search from `start` within its component. Ascending
/// neighbor order makes emission order lexicographic.
fn johnson_search(
    d: &Digraph,
    start: Vertex,
    members: &[bool],
    cap: usize,
    out: &mut Vec<Cycle>,
) -> Emit {
    let n = d.vertex_count();
    let mut blocked = vec![false; n];
    let mut block_map: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    let mut path = vec![start];
    let mut hit_cap = false;
    circuit(
        d,
        start,
        start,
        members,
        &mut blocked,
        &mut block_map,
        &mut path,
        cap,
        out,
        &mut hit_cap,
    );
    if hit_cap {
        Emit::CapHit
    } else {
        Emit::Done
    }
}

#[allow(clippy::too_many_arguments)]
fn circuit(
    d: &Digraph,
    v: Vertex,
    start: Vertex,
    members: &[bool],
    blocked: &mut Vec<bool>,
    block_map: &mut Vec<Vec<Vertex>>,
    path: &mut Vec<Vertex>,
    cap: usize,
    out: &mut Vec<Cycle>,
    hit_cap: &mut bool,
) -> bool {
    blocked[v] = true;
    let mut found = false;
    for &w in d.out_neighbors(v) {
        if *hit_cap {
            break;
        }
        if w == start {
            if out.len() == cap {
                *hit_cap = true;
                break;
            }
            out.push(Cycle::from_canonical_unchecked(path.clone()));
            found = true;
        } else if members[w] && !blocked[w] {
            path.push(w);
            if circuit(
                d, w, start, members, blocked, block_map, path, cap, out, hit_cap,
            ) {
                found = true;
            }
            path.pop();
        }
    }
    if found {
        unblock(v, blocked, block_map);
    } else {
        for &w in d.out_neighbors(v) {
            if members[w] && !block_map[w].contains(&v) {
                block_map[w].push(v);
            }
        }
    }
    found
}

fn unblock(v: Vertex, blocked: &mut Vec<bool>, block_map: &mut Vec<Vec<Vertex>>) {
    blocked[v] = false;
    let waiters = std::mem::take(&mut block_map[v]);
    for w in waiters {
        if blocked[w] {
            unblock(w, blocked, block_map);
        }
    }
}

/// Depth-bounded search from `start`; prunes on the shortest return
/// distance so only extendable prefixes are visited.
fn bounded_search(
    d: &Digraph,
    start: Vertex,
    max_len: usize,
    members: &[bool],
    cap: usize,
    out: &mut Vec<Cycle>,
) -> Emit {
    let dist_back = distances_to_start(d, start, members);
    let n = d.vertex_count();
    let mut on_path = vec![false; n];
    on_path[start] = true;
    let mut path = vec![start];
    let mut hit_cap = false;
    bounded_dfs(
        d,
        start,
        max_len,
        members,
        &dist_back,
        &mut on_path,
        &mut path,
        cap,
        out,
        &mut hit_cap,
    );
    if hit_cap {
        Emit::CapHit
    } else {
        Emit::Done
    }
}

fn distances_to_start(d: &Digraph, start: Vertex, members: &[bool]) -> Vec<usize> {
    let n = d.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &u in d.in_neighbors(start) {
        if members[u] && dist[u] == usize::MAX {
            dist[u] = 1;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in d.in_neighbors(u) {
            if w != start && members[w] && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

#[allow(clippy::too_many_arguments)]
fn bounded_dfs(
    d: &Digraph,
    start: Vertex,
    max_len: usize,
    members: &[bool],
    dist_back: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<Vertex>,
    cap: usize,
    out: &mut Vec<Cycle>,
    hit_cap: &mut bool,
) {
    let current = *path.last().expect("path never empty");
    for &w in d.out_neighbors(current) {
        if *hit_cap {
            return;
        }
        if w == start {
            if out.len() == cap {
                *hit_cap = true;
                return;
            }
            out.push(Cycle::from_canonical_unchecked(path.clone()));
            continue;
        }
        if !members[w] || on_path[w] || path.len() + 1 > max_len {
            continue;
        }
        if dist_back[w] == usize::MAX || path.len() + dist_back[w] > max_len {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        bounded_dfs(
            d, start, max_len, members, dist_back, on_path, path, cap, out, hit_cap,
        );
        path.pop();
        on_path[w] = false;
    }
}

/// Cycles of length exactly `len` through `pivot` inside the `usable`
/// vertex mask, in canonical (lexicographic) order. The pivot must be the
/// smallest usable vertex lying on any cycle, so every emitted sequence
/// is canonical: lower usable vertices exist on no cycle and thus never
/// appear.
pub(crate) fn cycles_through_exact(
    d: &Digraph,
    pivot: Vertex,
    usable: &[bool],
    len: usize,
) -> Vec<Cycle> {
    debug_assert!(usable[pivot]);
    let dist_back = distances_to_start(d, pivot, usable);
    let n = d.vertex_count();
    let mut on_path = vec![false; n];
    on_path[pivot] = true;
    let mut path = vec![pivot];
    let mut out = Vec::new();
    exact_dfs(
        d,
        pivot,
        len,
        usable,
        &dist_back,
        &mut on_path,
        &mut path,
        &mut out,
    );
    out
}

#[allow(clippy::too_many_arguments)]
fn exact_dfs(
    d: &Digraph,
    pivot: Vertex,
    len: usize,
    usable: &[bool],
    dist_back: &[usize],
    on_path: &mut [bool],
    path: &mut Vec<Vertex>,
    out: &mut Vec<Cycle>,
) {
    let current = *path.last().expect("path never empty");
    let remaining = len - path.len();
    for &w in d.out_neighbors(current) {
        if w == pivot {
            if remaining == 0 {
                out.push(Cycle::from_canonical_unchecked(path.clone()));
            }
            continue;
        }
        if remaining == 0 || !usable[w] || on_path[w] {
            continue;
        }
        if dist_back[w] == usize::MAX || dist_back[w] > remaining {
            continue;
        }
        on_path[w] = true;
        path.push(w);
        exact_dfs(d, pivot, len, usable, dist_back, on_path, path, out);
        path.pop();
        on_path[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brute;
    use crate::generators;

    fn seqs(e: &CycleEnumeration) -> Vec<Vec<Vertex>> {
        e.cycles.iter().map(|c| c.vertices().to_vec()).collect()
    }

    #[test]
    fn complete_symmetric_three_vertices() {
        let d = generators::complete_symmetric(3).unwrap();
        let e = enumerate_cycles(&d, None, 100);
        assert!(!e.truncated);
        assert_eq!(
            seqs(&e),
            vec![
                vec![0, 1],
                vec![0, 1, 2],
                vec![0, 2],
                vec![0, 2, 1],
                vec![1, 2],
            ]
        );
    }

    #[test]
    fn directed_four_cycle_has_one() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let e = enumerate_cycles(&d, None, 10);
        assert_eq!(seqs(&e), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn enumeration_agrees_with_brute_force() {
        for seed in 0..8 {
            let d = generators::random_min_outdegree(7, 2, seed).unwrap();
            let e = enumerate_cycles(&d, None, 10_000);
            assert!(!e.truncated);
            assert_eq!(seqs(&e), brute::all_cycles(&d), "seed {seed}");
        }
    }

    #[test]
    fn bounded_enumeration_matches_filtered_brute() {
        for seed in 0..8 {
            let d = generators::random_min_outdegree(7, 3, seed).unwrap();
            for max_len in 2..=5 {
                let e = enumerate_cycles(&d, Some(max_len), 10_000);
                let expect: Vec<Vec<Vertex>> = brute::all_cycles(&d)
                    .into_iter()
                    .filter(|c| c.len() <= max_len)
                    .collect();
                assert_eq!(seqs(&e), expect, "seed {seed} max_len {max_len}");
            }
        }
    }

    #[test]
    fn truncation_returns_prefix_and_flag() {
        let d = generators::complete_symmetric(3).unwrap();
        let e = enumerate_cycles(&d, None, 3);
        assert!(e.truncated);
        assert_eq!(seqs(&e), vec![vec![0, 1], vec![0, 1, 2], vec![0, 2]]);
        let exact = enumerate_cycles(&d, None, 5);
        assert!(!exact.truncated);
    }

    #[test]
    fn even_family_short_cycles_alternate_sides() {
        let (d, p) = generators::even_girth(4, 3, 0).unwrap();
        let e = enumerate_cycles(&d, Some(4), 100_000);
        assert!(!e.cycles.is_empty());
        for c in &e.cycles {
            assert_eq!(c.len(), 4);
            for pair in c.vertices().chunks(2) {
                assert!(pair[0] < p.layer_count && pair[1] >= p.layer_count);
            }
        }
    }

    #[test]
    fn canonical_form_and_validation() {
        let c = Cycle::from_vertices(vec![4, 2, 7]).unwrap();
        assert_eq!(c.vertices(), &[2, 7, 4]);
        assert!(Cycle::from_vertices(vec![3]).is_err());
        assert!(Cycle::from_vertices(vec![1, 2, 1]).is_err());
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(Cycle::from_vertices(vec![1, 2, 0]).unwrap().is_cycle_of(&d));
        assert!(!Cycle::from_vertices(vec![0, 2, 1]).unwrap().is_cycle_of(&d));
    }

    #[test]
    fn cycles_through_pivot_by_exact_length() {
        let d = generators::complete_symmetric(4).unwrap();
        let usable = vec![true; 4];
        let digons = cycles_through_exact(&d, 0, &usable, 2);
        assert_eq!(
            digons
                .iter()
                .map(|c| c.vertices().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0, 1], vec![0, 2], vec![0, 3]]
        );
        let triangles = cycles_through_exact(&d, 0, &usable, 3);
        assert_eq!(triangles.len(), 6);
        let mut masked = usable.clone();
        masked[1] = false;
        let digons2 = cycles_through_exact(&d, 0, &masked, 2);
        assert_eq!(digons2.len(), 2);
    }
}
