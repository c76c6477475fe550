//! Hop distances, transmissions and the Wiener index.
//!
//! All quantities here depend only on the underlying graph, never on gains.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::GainGraph;

/// BFS from `source`: hop distances and the visiting order (layer by layer).
pub(crate) fn bfs(g: &GainGraph, source: usize) -> (Vec<usize>, Vec<usize>) {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut queue = VecDeque::from([source]);
    dist[source] = 0;
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for (w, _) in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    (dist, order)
}

/// Hop distances from `source`; `d(source, source) = 0`.
pub fn bfs_distances(g: &GainGraph, source: usize) -> Vec<usize> {
    bfs(g, source).0
}

/// All-pairs hop distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    data: Vec<usize>,
}

impl DistanceTable {
    pub fn new(g: &GainGraph) -> Self {
        let n = g.vertex_count();
        let mut data = Vec::with_capacity(n * n);
        for s in 0..n {
            data.extend(bfs_distances(g, s));
        }
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: usize, t: usize) -> usize {
        self.data[s * self.n + t]
    }

    pub fn row(&self, s: usize) -> &[usize] {
        &self.data[s * self.n..(s + 1) * self.n]
    }

    pub fn diameter(&self) -> usize {
        self.data.iter().copied().max().unwrap_or(0)
    }

    pub fn transmissions(&self) -> Vec<u64> {
        (0..self.n).map(|s| self.row(s).iter().map(|&d| d as u64).sum()).collect()
    }
}

/// `Tr(v) = sum over t of d(v, t)` for every vertex.
pub fn transmissions(g: &GainGraph) -> Vec<u64> {
    DistanceTable::new(g).transmissions()
}

/// `W(G)`: sum of distances over unordered vertex pairs.
pub fn wiener_index(g: &GainGraph) -> u64 {
    let d = DistanceTable::new(g);
    let n = d.dim();
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| d.get(i, j) as u64).sum()
}
