//! Simple connected graphs carrying a unit gain on every oriented edge.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gain::UnitGain;

/// An undirected edge `{u, v}` with `u < v`; `gain` is the gain of `u -> v`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub gain: UnitGain,
}

impl Edge {
    /// Gain of the orientation `from -> to`, if `{from, to}` is this edge.
    pub fn oriented_gain(&self, from: usize, to: usize) -> Option<UnitGain> {
        if (from, to) == (self.u, self.v) {
            Some(self.gain)
        } else if (from, to) == (self.v, self.u) {
            Some(self.gain.conj())
        } else {
            None
        }
    }
}

/// A complex unit gain graph on vertices `0..n`.
///
/// Construction rejects loops, repeated edges and disconnected graphs, so every
/// value of this type is simple and connected.
#[derive(Clone, Debug)]
pub struct GainGraph {
    n: usize,
    edges: Vec<Edge>,
    // (neighbor, edge index), sorted by neighbor
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl GainGraph {
    /// Builds a graph from `(a, b, gain of a -> b)` triples in any orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, UnitGain)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut stored = Vec::new();
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (a, b, gain) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { vertex: a });
            }
            let edge = if a < b {
                Edge { u: a, v: b, gain }
            } else {
                Edge { u: b, v: a, gain: gain.conj() }
            };
            if adjacency[edge.u].iter().any(|&(w, _)| w == edge.v) {
                return Err(Error::DuplicateEdge { u: edge.u, v: edge.v });
            }
            let idx = stored.len();
            adjacency[edge.u].push((edge.v, idx));
            adjacency[edge.v].push((edge.u, idx));
            stored.push(edge);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = Self { n, edges: stored, adjacency };
        if let Some(vertex) = graph.first_unreachable() {
            return Err(Error::Disconnected { vertex });
        }
        Ok(graph)
    }

    /// `K_n` with gain `gain` on every orientation `i -> j`, `i < j`.
    pub fn complete(n: usize, gain: UnitGain) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j, gain))))
    }

    /// Path `0 - 1 - ... - k` with `gains[i]` on `i -> i+1`.
    pub fn path(gains: &[UnitGain]) -> Result<Self> {
        Self::new(gains.len() + 1, gains.iter().enumerate().map(|(i, &g)| (i, i + 1, g)))
    }

    /// Cycle on `gains.len()` vertices with `gains[i]` on `i -> (i+1) mod n`.
    pub fn cycle(gains: &[UnitGain]) -> Result<Self> {
        let n = gains.len();
        if n < 3 {
            return Err(Error::Precondition("a cycle needs at least three vertices"));
        }
        Self::new(n, gains.iter().enumerate().map(|(i, &g)| (i, (i + 1) % n, g)))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in insertion order, each stored with `u < v`.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbors of `v` in increasing order, with the gain of `v -> w`.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, UnitGain)> + '_ {
        self.adjacency[v].iter().map(move |&(w, e)| {
            let edge = &self.edges[e];
            let gain = if edge.u == v { edge.gain } else { edge.gain.conj() };
            (w, gain)
        })
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let list = self.adjacency.get(a)?;
        list.binary_search_by_key(&b, |&(w, _)| w).ok().map(|i| list[i].1)
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    /// Gain of the orientation `a -> b`, if adjacent.
    pub fn gain(&self, a: usize, b: usize) -> Option<UnitGain> {
        self.edge_index(a, b).and_then(|e| self.edges[e].oriented_gain(a, b))
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    /// Same vertex count and the same set of unordered edges.
    pub fn same_underlying(&self, other: &GainGraph) -> bool {
        self.n == other.n
            && self.edges.len() == other.edges.len()
            && self.edges.iter().all(|e| other.is_adjacent(e.u, e.v))
    }

    /// Replaces every stored gain `g(u -> v)` by `f(u, v, g)`.
    pub fn map_gains<F>(&self, mut f: F) -> GainGraph
    where
        F: FnMut(usize, usize, UnitGain) -> UnitGain,
    {
        let mut out = self.clone();
        for e in &mut out.edges {
            e.gain = f(e.u, e.v, e.gain);
        }
        out
    }

    /// `-Phi`: every gain negated.
    pub fn negated(&self) -> GainGraph {
        self.map_gains(|_, _, g| -g)
    }

    /// The underlying graph with every gain set to `1`.
    pub fn underlying(&self) -> GainGraph {
        self.map_gains(|_, _, _| UnitGain::one())
    }

    fn first_unreachable(&self) -> Option<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().position(|s| !s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_input() {
        let one = UnitGain::one();
        assert_eq!(GainGraph::new(0, []).unwrap_err(), Error::EmptyGraph);
        assert_eq!(GainGraph::new(2, [(0, 0, one)]).unwrap_err(), Error::SelfLoop { vertex: 0 });
        assert_eq!(
            GainGraph::new(2, [(0, 1, one), (1, 0, one)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        );
        assert_eq!(
            GainGraph::new(2, [(0, 2, one)]).unwrap_err(),
            Error::VertexOutOfRange { vertex: 2, n: 2 }
        );
        assert_eq!(GainGraph::new(3, [(0, 1, one)]).unwrap_err(), Error::Disconnected { vertex: 2 });
    }

    #[test]
    fn single_vertex_is_allowed() {
        let g = GainGraph::new(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert!(g.is_complete() && g.is_tree());
    }

    #[test]
    fn reversed_input_is_stored_conjugated() {
        let g = GainGraph::new(2, [(1, 0, UnitGain::i())]).unwrap();
        assert_eq!(g.edges()[0].gain, UnitGain::i().conj());
        assert_eq!(g.gain(1, 0), Some(UnitGain::i()));
        assert_eq!(g.gain(0, 1), Some(-UnitGain::i()));
        let nb: Vec<_> = g.neighbors(1).collect();
        assert_eq!(nb, alloc::vec![(0, UnitGain::i())]);
    }

    #[test]
    fn families() {
        let k4 = GainGraph::complete(4, UnitGain::one()).unwrap();
        assert_eq!(k4.edge_count(), 6);
        assert!(k4.is_complete());
        let c5 = GainGraph::cycle(&[UnitGain::one(); 5]).unwrap();
        assert_eq!(c5.gain(4, 0), Some(UnitGain::one()));
        assert!(c5.same_underlying(&c5.negated()));
        assert!(!c5.same_underlying(&GainGraph::path(&[UnitGain::one(); 4]).unwrap()));
    }
}
