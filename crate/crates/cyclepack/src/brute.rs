//! Naive reference implementations used to cross-check the optimized
//! algorithms in this crate.
//!
//! Everything here trades speed for obviousness: plain depth-first
//! enumeration without the pruning, blocking or bounding machinery of the
//! production code paths, so the two can disagree only if one of them is
//! wrong. Intended for small instances (roughly 12 vertices or fewer,
//! depending on density) and for the acceptance suite's oracle checks.

use crate::digraph::{Digraph, Vertex};

/// Every simple directed cycle, as rotated-to-minimum vertex sequences,
/// sorted lexicographically. Exponential; small instances only.
pub fn all_cycles(d: &Digraph) -> Vec<Vec<Vertex>> {
    let n = d.vertex_count();
    let mut found: Vec<Vec<Vertex>> = Vec::new();
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = vec![false; n];
    for head in 0..n {
        path.push(head);
        on_path[head] = true;
        collect_cycles(d, head, &mut path, &mut on_path, &mut found);
        on_path[head] = false;
        path.pop();
    }
    found.sort();
    found
}

fn collect_cycles(
    d: &Digraph,
    head: Vertex,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<Vertex>>,
) {
    let current = *path.last().unwrap();
    for &next in d.out_neighbors(current) {
        if next == head {
            found.push(path.clone());
        } else if next > head && !on_path[next] {
            path.push(next);
            on_path[next] = true;
            collect_cycles(d, head, path, on_path, found);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Girth by exhaustive cycle enumeration. `None` when acyclic.
pub fn girth(d: &Digraph) -> Option<usize> {
    all_cycles(d).iter().map(Vec::len).min()
}

/// Is there a directed cycle of length at most `max_len`? Returns the
/// shortest length found, scanning exhaustively but never deeper than
/// `max_len`. Usable on larger instances than [`girth`].
pub fn shortest_cycle_up_to(d: &Digraph, max_len: usize) -> Option<usize> {
    let n = d.vertex_count();
    let mut best: Option<usize> = None;
    let mut path: Vec<Vertex> = Vec::new();
    let mut on_path = vec![false; n];
    for head in 0..n {
        path.push(head);
        on_path[head] = true;
        bounded_shortest(d, head, max_len, &mut path, &mut on_path, &mut best);
        on_path[head] = false;
        path.pop();
    }
    best
}

fn bounded_shortest(
    d: &Digraph,
    head: Vertex,
    max_len: usize,
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    best: &mut Option<usize>,
) {
    let current = *path.last().unwrap();
    if let Some(b) = *best {
        if path.len() >= b {
            return;
        }
    }
    for &next in d.out_neighbors(current) {
        if next == head {
            if best.is_none_or(|b| path.len() < b) {
                *best = Some(path.len());
            }
        } else if next > head && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            bounded_shortest(d, head, max_len, path, on_path, best);
            on_path[next] = false;
            path.pop();
        }
    }
}

/// Exact maximum number of vertex-disjoint cycles, by dynamic programming
/// over vertex subsets. Requires `vertex_count <= 20`; practical well
/// below that.
pub fn max_disjoint_cycles(d: &Digraph) -> usize {
    let n = d.vertex_count();
    assert!(n <= 20, "subset DP oracle limited to 20 vertices");
    let cycles = all_cycles(d);
    let masks: Vec<u32> = cycles
        .iter()
        .map(|c| c.iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    // best[mask]: max disjoint cycles using only vertices inside mask
    let mut best = vec![0u8; 1usize << n];
    for mask in 1u32..(1u32 << n) {
        let low = mask.trailing_zeros();
        let without = mask & !(1 << low);
        let mut b = best[without as usize];
        for (cycle_mask, c) in masks.iter().zip(&cycles) {
            if c[0] == low as usize && cycle_mask & mask == *cycle_mask {
                b = b.max(1 + best[(mask & !cycle_mask) as usize]);
            }
        }
        best[mask as usize] = b;
    }
    best[(1usize << n) - 1] as usize
}

/// Exact longest simple directed path (arc count), by unpruned
/// depth-first search over every simple path.
pub fn longest_path(d: &Digraph) -> usize {
    let n = d.vertex_count();
    let mut best = 0usize;
    let mut on_path = vec![false; n];
    for start in 0..n {
        on_path[start] = true;
        walk(d, start, 0, &mut on_path, &mut best);
        on_path[start] = false;
    }
    best
}

fn walk(d: &Digraph, current: Vertex, len: usize, on_path: &mut [bool], best: &mut usize) {
    if len > *best {
        *best = len;
    }
    for &next in d.out_neighbors(current) {
        if !on_path[next] {
            on_path[next] = true;
            walk(d, next, len + 1, on_path, best);
            on_path[next] = false;
        }
    }
}

/// Does any vertex dominate the arc `(u, v)`, i.e. send arcs to both ends?
pub fn arc_is_dominated(d: &Digraph, u: Vertex, v: Vertex) -> bool {
    (0..d.vertex_count()).any(|w| w != u && w != v && d.has_arc(w, u) && d.has_arc(w, v))
}
