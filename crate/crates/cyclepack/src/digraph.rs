//! Immutable simple digraph with adjacency by sorted out- and in-lists.
//!
//! Digraphs here are finite and simple: no self-loops, no parallel arcs.
//! 2-cycles (digons) are allowed. Vertices are dense integer IDs
//! `0..vertex_count`. A [`Digraph`] is built once through
//! [`DigraphBuilder`], which validates simplicity, and is immutable
//! afterwards, so every analysis in this crate is a pure function and safe
//! to run concurrently on a shared reference.

use std::collections::BTreeSet;

use thiserror::Error;

/// Vertex identifier. Dense, `0..vertex_count`.
pub type Vertex = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("self-loop at vertex {0} is not allowed in a simple digraph")]
    SelfLoop(Vertex),
    #[error("parallel arc {0} -> {1} is not allowed in a simple digraph")]
    ParallelArc(Vertex, Vertex),
    #[error("vertex {vertex} out of range for digraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: Vertex, vertex_count: usize },
}

/// Incremental construction of a [`Digraph`]. Rejects loops, parallel arcs
/// and out-of-range endpoints at insertion time.
#[derive(Debug, Clone)]
pub struct DigraphBuilder {
    vertex_count: usize,
    arcs: BTreeSet<(Vertex, Vertex)>,
}

impl DigraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            arcs: BTreeSet::new(),
        }
    }

    pub fn add_arc(&mut self, from: Vertex, to: Vertex) -> Result<(), BuildError> {
        if from >= self.vertex_count {
            return Err(BuildError::VertexOutOfRange {
                vertex: from,
                vertex_count: self.vertex_count,
            });
        }
        if to >= self.vertex_count {
            return Err(BuildError::VertexOutOfRange {
                vertex: to,
                vertex_count: self.vertex_count,
            });
        }
        if from == to {
            return Err(BuildError::SelfLoop(from));
        }
        if !self.arcs.insert((from, to)) {
            return Err(BuildError::ParallelArc(from, to));
        }
        Ok(())
    }

    pub fn has_arc(&self, from: Vertex, to: Vertex) -> bool {
        self.arcs.contains(&(from, to))
    }

    /// Seal the builder into an immutable digraph.
    pub fn build(self) -> Digraph {
        let mut out_lists = vec![Vec::new(); self.vertex_count];
        let mut in_lists = vec![Vec::new(); self.vertex_count];
        let arc_count = self.arcs.len();
        // BTreeSet iteration is lexicographic, so out-lists come out sorted;
        // in-lists are sorted afterwards.
        for (u, v) in self.arcs {
            out_lists[u].push(v);
            in_lists[v].push(u);
        }
        for list in &mut in_lists {
            list.sort_unstable();
        }
        Digraph {
            out_lists,
            in_lists,
            arc_count,
        }
    }
}

/// Immutable simple digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    out_lists: Vec<Vec<Vertex>>,
    in_lists: Vec<Vec<Vertex>>,
    arc_count: usize,
}

impl Digraph {
    /// Build from an explicit arc list. Convenience for tests and fixtures.
    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self, BuildError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = DigraphBuilder::new(vertex_count);
        for (u, v) in arcs {
            b.add_arc(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.out_lists.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    /// Out-neighbors of `v`, sorted ascending.
    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_lists[v]
    }

    /// In-neighbors of `v`, sorted ascending.
    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_lists[v]
    }

    pub fn outdegree(&self, v: Vertex) -> usize {
        self.out_lists[v].len()
    }

    pub fn indegree(&self, v: Vertex) -> usize {
        self.in_lists[v].len()
    }

    pub fn has_arc(&self, from: Vertex, to: Vertex) -> bool {
        from < self.vertex_count() && self.out_lists[from].binary_search(&to).is_ok()
    }

    /// All arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out_lists
            .iter()
            .enumerate()
            .flat_map(|(u, outs)| outs.iter().map(move |&v| (u, v)))
    }

    /// Minimum outdegree over all vertices; 0 for the empty digraph.
    pub fn min_outdegree(&self) -> usize {
        self.out_lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Minimum indegree over all vertices; 0 for the empty digraph.
    pub fn min_indegree(&self) -> usize {
        self.in_lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// The digraph with every arc reversed.
    pub fn transpose(&self) -> Digraph {
        Digraph {
            out_lists: self.in_lists.clone(),
            in_lists: self.out_lists.clone(),
            arc_count: self.arc_count,
        }
    }

    /// Copy of `self` with one arc removed.
    pub fn without_arc(&self, from: Vertex, to: Vertex) -> Result<Digraph, ArcNotPresent> {
        if !self.has_arc(from, to) {
            return Err(ArcNotPresent(from, to));
        }
        let mut g = self.clone();
        g.out_lists[from].retain(|&v| v != to);
        g.in_lists[to].retain(|&u| u != from);
        g.arc_count -= 1;
        Ok(g)
    }

    /// Subdigraph induced by `vertices` (deduplicated, any order), together
    /// with the map from new IDs back to the originals. New IDs follow the
    /// sorted order of the selected vertices.
    pub fn induced(&self, vertices: &[Vertex]) -> (Digraph, Vec<Vertex>) {
        let selected: BTreeSet<Vertex> = vertices.iter().copied().collect();
        let old_ids: Vec<Vertex> = selected.iter().copied().collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = DigraphBuilder::new(old_ids.len());
        for &u in &old_ids {
            for &v in &self.out_lists[u] {
                if selected.contains(&v) {
                    b.add_arc(new_id[u], new_id[v])
                        .expect("induced arcs are simple");
                }
            }
        }
        (b.build(), old_ids)
    }

    /// 2-coloring of the underlying undirected graph, or `None` if it is
    /// not bipartite. Components are colored independently; the root of
    /// each component (its lowest vertex) gets color 0.
    pub fn underlying_bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..n {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in self.out_lists[u].iter().chain(self.in_lists[u].iter()) {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Strongly connected components, each sorted ascending, listed in
    /// order of their smallest vertex. Tarjan's algorithm, iterative.
    pub fn strongly_connected_components(&self) -> Vec<Vec<Vertex>> {
        let n = self.vertex_count();
        const UNSET: usize = usize::MAX;
        let mut index = vec![UNSET; n];
        let mut low = vec![0usize; n];
        let mut on_stack = vec![false; n];
        let mut stack: Vec<Vertex> = Vec::new();
        let mut next_index = 0usize;
        let mut comps: Vec<Vec<Vertex>> = Vec::new();

        struct Frame {
            v: Vertex,
            next: usize,
        }

        for start in 0..n {
            if index[start] != UNSET {
                continue;
            }
            let mut call: Vec<Frame> = vec![Frame { v: start, next: 0 }];
            index[start] = next_index;
            low[start] = next_index;
            next_index += 1;
            stack.push(start);
            on_stack[start] = true;

            while let Some(frame) = call.last_mut() {
                let v = frame.v;
                if frame.next < self.out_lists[v].len() {
                    let w = self.out_lists[v][frame.next];
                    frame.next += 1;
                    if index[w] == UNSET {
                        index[w] = next_index;
                        low[w] = next_index;
                        next_index += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push(Frame { v: w, next: 0 });
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                } else {
                    if low[v] == index[v] {
                        let mut comp = Vec::new();
                        loop {
                            let w = stack.pop().expect("tarjan stack underflow");
                            on_stack[w] = false;
                            comp.push(w);
                            if w == v {
                                break;
                            }
                        }
                        comp.sort_unstable();
                        comps.push(comp);
                    }
                    call.pop();
                    if let Some(parent) = call.last() {
                        let pv = parent.v;
                        low[pv] = low[pv].min(low[v]);
                    }
                }
            }
        }
        comps.sort_by_key(|c| c[0]);
        comps
    }

    /// True iff the digraph is strongly connected (vacuously true for
    /// vertex counts 0 and 1).
    pub fn is_strongly_connected(&self) -> bool {
        self.strongly_connected_components().len() <= 1
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("arc {0} -> {1} is not present in the digraph")]
pub struct ArcNotPresent(pub Vertex, pub Vertex);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_rejects_loops_parallels_and_range() {
        let mut b = DigraphBuilder::new(3);
        assert_eq!(b.add_arc(0, 0), Err(BuildError::SelfLoop(0)));
        assert_eq!(
            b.add_arc(0, 3),
            Err(BuildError::VertexOutOfRange {
                vertex: 3,
                vertex_count: 3
            })
        );
        b.add_arc(0, 1).unwrap();
        assert_eq!(b.add_arc(0, 1), Err(BuildError::ParallelArc(0, 1)));
    }

    #[test]
    fn lists_are_sorted_and_transposed() {
        let d = Digraph::from_arcs(4, [(2, 0), (0, 1), (0, 3), (3, 0), (1, 3)]).unwrap();
        assert_eq!(d.out_neighbors(0), &[1, 3]);
        assert_eq!(d.in_neighbors(0), &[2, 3]);
        assert_eq!(d.in_neighbors(3), &[0, 1]);
        assert_eq!(d.arc_count(), 5);
        let t = d.transpose();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(d.has_arc(u, v), t.has_arc(v, u));
            }
        }
        // digons survive transposition as themselves
        assert!(d.has_arc(0, 3) && d.has_arc(3, 0));
    }

    #[test]
    fn arcs_iterate_lexicographically() {
        let d = Digraph::from_arcs(3, [(2, 1), (0, 2), (2, 0), (0, 1)]).unwrap();
        let arcs: Vec<_> = d.arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (0, 2), (2, 0), (2, 1)]);
    }

    #[test]
    fn degrees_and_empty_conventions() {
        let empty = Digraph::from_arcs(0, []).unwrap();
        assert_eq!(empty.min_outdegree(), 0);
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        assert_eq!(d.min_outdegree(), 1);
        assert_eq!(d.outdegree(0), 2);
        assert_eq!(d.indegree(2), 2);
    }

    #[test]
    fn induced_subdigraph_maps_back() {
        let d = Digraph::from_arcs(5, [(0, 1), (1, 4), (4, 0), (4, 3), (3, 4), (2, 4)]).unwrap();
        let (h, back) = d.induced(&[4, 0, 1]);
        assert_eq!(back, vec![0, 1, 4]);
        assert_eq!(h.vertex_count(), 3);
        let arcs: Vec<_> = h.arcs().collect();
        assert_eq!(arcs, vec![(0, 1), (1, 2), (2, 0)]);
    }

    #[test]
    fn scc_splits_disjoint_cycles() {
        // two disjoint triangles
        let d = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let comps = d.strongly_connected_components();
        assert_eq!(comps, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert!(!d.is_strongly_connected());
        let cycle = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(cycle.is_strongly_connected());
    }

    #[test]
    fn bipartition_detects_underlying_odd_cycles() {
        let even = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let color = even.underlying_bipartition().unwrap();
        assert_eq!(color, vec![0, 1, 0, 1]);
        let odd = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(odd.underlying_bipartition().is_none());
        // a digon is an underlying multi-edge, still 2-colorable
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert!(digon.underlying_bipartition().is_some());
    }

    #[test]
    fn without_arc_removes_exactly_one() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        let g = d.without_arc(1, 0).unwrap();
        assert!(g.has_arc(0, 1) && !g.has_arc(1, 0));
        assert_eq!(g.arc_count(), 1);
        assert_eq!(g.without_arc(1, 0), Err(ArcNotPresent(1, 0)));
    }
}
