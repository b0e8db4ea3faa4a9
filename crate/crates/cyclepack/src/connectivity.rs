//! Strong connectivity of a digraph in the Menger sense: the minimum,
//! over ordered non-adjacent vertex pairs, of the maximum number of
//! internally vertex-disjoint paths, computed by unit-capacity max-flow
//! on the vertex-split graph.

use thiserror::Error;

use crate::digraph::{Digraph, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConnectivityError {
    #[error("strong connectivity needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
}

impl Digraph {
    /// Exact strong connectivity. Returns 0 iff the digraph is not
    /// strongly connected; returns `n - 1` for digraphs where every
    /// ordered pair is adjacent (complete symmetric), where no demand
    /// pair exists.
    pub fn strong_connectivity(&self) -> Result<usize, ConnectivityError> {
        let n = self.vertex_count();
        if n < 2 {
            return Err(ConnectivityError::TooFewVertices(n));
        }
        if !self.is_strongly_connected() {
            return Ok(0);
        }
        let mut best = n - 1;
        for u in 0..n {
            for v in 0..n {
                if u == v || self.has_arc(u, v) {
                    continue;
                }
                // max-flow capped at `best`: a pair can only lower the minimum
                let flow = disjoint_path_count(self, u, v, best);
                if flow < best {
                    best = flow;
                    if best == 0 {
                        return Ok(0); // cannot happen when strongly connected
                    }
                }
            }
        }
        Ok(best)
    }
}

/// Maximum number of internally vertex-disjoint `source -> sink` paths,
/// stopping early once `cap` paths are found. Vertex-split construction:
/// node `2v` is the in-side of `v` and `2v + 1` the out-side, joined by a
/// unit-capacity edge; every arc gets effectively unbounded capacity.
fn disjoint_path_count(d: &Digraph, source: Vertex, sink: Vertex, cap: usize) -> usize {
    let n = d.vertex_count();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1);
    }
    for (u, v) in d.arcs() {
        net.add_edge(2 * u + 1, 2 * v, u32::MAX / 2);
    }
    net.max_flow(2 * source + 1, 2 * sink, cap as u32) as usize
}

struct Edge {
    to: usize,
    residual: u32,
}

/// Minimal max-flow network with BFS augmenting paths. All our flows are
/// small integers so Edmonds-Karp is plenty.
struct FlowNetwork {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl FlowNetwork {
    fn new(node_count: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); node_count],
            edges: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, capacity: u32) {
        self.adjacency[from].push(self.edges.len());
        self.edges.push(Edge {
            to,
            residual: capacity,
        });
        self.adjacency[to].push(self.edges.len());
        self.edges.push(Edge {
            to: from,
            residual: 0,
        });
    }

    fn max_flow(&mut self, source: usize, sink: usize, cap: u32) -> u32 {
        let mut total = 0u32;
        let mut parent_edge = vec![usize::MAX; self.adjacency.len()];
        while total < cap {
            parent_edge.iter_mut().for_each(|x| *x = usize::MAX);
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(source);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &eid in &self.adjacency[u] {
                    let e = &self.edges[eid];
                    if e.residual > 0 && e.to != source && parent_edge[e.to] == usize::MAX {
                        parent_edge[e.to] = eid;
                        if e.to == sink {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(e.to);
                    }
                }
            }
            if !reached {
                break;
            }
            // unit augmentation is enough: every path crosses a splitter edge
            let mut v = sink;
            while v != source {
                let eid = parent_edge[v];
                self.edges[eid].residual -= 1;
                self.edges[eid ^ 1].residual += 1;
                v = self.edges[eid ^ 1].to;
            }
            total += 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn rejects_tiny_digraphs() {
        let d = Digraph::from_arcs(1, []).unwrap();
        assert_eq!(
            d.strong_connectivity(),
            Err(ConnectivityError::TooFewVertices(1))
        );
    }

    #[test]
    fn complete_symmetric_has_full_connectivity() {
        for n in 2..=6 {
            let d = generators::complete_symmetric(n).unwrap();
            assert_eq!(d.strong_connectivity().unwrap(), n - 1);
        }
    }

    #[test]
    fn directed_cycle_has_connectivity_one() {
        for n in 3..=6 {
            let d = Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
            assert_eq!(d.strong_connectivity().unwrap(), 1);
        }
    }

    #[test]
    fn disconnected_reports_zero() {
        let d = Digraph::from_arcs(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(d.strong_connectivity().unwrap(), 0);
    }

    #[test]
    fn cut_vertex_gives_connectivity_one() {
        // two triangles sharing vertex 0: removing 0 disconnects
        let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(d.strong_connectivity().unwrap(), 1);
    }
}
