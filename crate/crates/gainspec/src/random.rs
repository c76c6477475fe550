//! Seeded generators for gain graphs, orderings, switching functions and weights.
//!
//! Gains are drawn as exact `e^{i pi p/q}` with `q` in `{1, 2, 3, 4, 6}` so that
//! every balance and compatibility decision downstream is exact.

use std::collections::BTreeSet;

use gainspec_core::switching::{is_balanced, switch};
use gainspec_core::{is_distance_compatible, GainGraph, SwitchingFunction, UnitGain, VertexOrdering};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const DENOMINATORS: [i64; 5] = [1, 2, 3, 4, 6];

/// Independent stream `stream` of the generator seeded with `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn rational_gain<R: Rng + ?Sized>(rng: &mut R) -> UnitGain {
    let q = DENOMINATORS[rng.random_range(0..DENOMINATORS.len())];
    UnitGain::pi_fraction(rng.random_range(1 - q..=q), q)
}

pub fn switching_function<R: Rng + ?Sized>(rng: &mut R, n: usize) -> SwitchingFunction {
    SwitchingFunction::new((0..n).map(|_| rational_gain(rng)).collect())
}

pub fn ordering<R: Rng + ?Sized>(rng: &mut R, n: usize) -> VertexOrdering {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    VertexOrdering::from_sequence(&seq).expect("a shuffle is a permutation")
}

/// Weights in `(0, 10]`.
pub fn weights<R: Rng + ?Sized>(rng: &mut R, m: usize) -> Vec<f64> {
    (0..m).map(|_| 10.0 - rng.random_range(0.0..10.0)).collect()
}

/// Underlying edges of a random connected graph: a uniform random recursive
/// tree on a shuffled vertex order, plus each other pair with probability `density`.
pub fn connected_edges<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let (a, b) = (order[k], order[rng.random_range(0..k)]);
        edges.push((a.min(b), a.max(b)));
    }
    let tree: BTreeSet<_> = edges.iter().copied().collect();
    for a in 0..n {
        for b in a + 1..n {
            if !tree.contains(&(a, b)) && rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges
}

fn with_gains<R: Rng + ?Sized>(rng: &mut R, n: usize, edges: Vec<(usize, usize)>) -> GainGraph {
    let triples: Vec<_> = edges.into_iter().map(|(a, b)| (a, b, rational_gain(rng))).collect();
    GainGraph::new(n, triples).expect("connected by construction")
}

/// Random connected graph with random rational gains.
pub fn gain_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    let density = rng.random_range(0.0..0.8);
    let edges = connected_edges(rng, n, density);
    with_gains(rng, n, edges)
}

pub fn tree<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    let edges = connected_edges(rng, n, 0.0);
    with_gains(rng, n, edges)
}

/// An all-ones connected graph switched by a random `zeta`.
pub fn balanced_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    let density = rng.random_range(0.0..0.8);
    let edges = connected_edges(rng, n, density);
    let ones = GainGraph::new(n, edges.into_iter().map(|(a, b)| (a, b, UnitGain::one()))).expect("connected");
    switch(&ones, &switching_function(rng, n)).expect("matching length")
}

/// Rejection-sampled unbalanced graph; `n >= 3` since smaller graphs are trees.
pub fn unbalanced_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    assert!(n >= 3, "graphs on fewer than 3 vertices are always balanced");
    loop {
        let density = rng.random_range(0.2..0.9);
        let edges = connected_edges(rng, n, density);
        if edges.len() < n {
            continue;
        }
        let g = with_gains(rng, n, edges);
        if !is_balanced(&g) {
            return g;
        }
    }
}

/// `(K_n, -1)` switched by a random `zeta`.
pub fn negative_complete_class<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    let k = GainGraph::complete(n, UnitGain::minus_one()).expect("n >= 1");
    switch(&k, &switching_function(rng, n)).expect("matching length")
}

/// A distance compatible graph from one of several families: balanced graphs,
/// gain trees, odd cycles and complete graphs with arbitrary gains, and random
/// graphs that pass the compatibility test.
pub fn compatible_graph<R: Rng + ?Sized>(rng: &mut R, n: usize) -> GainGraph {
    let g = match rng.random_range(0..5) {
        0 => balanced_graph(rng, n),
        1 => tree(rng, n),
        2 if n >= 3 && n % 2 == 1 => {
            let gains: Vec<UnitGain> = (0..n).map(|_| rational_gain(rng)).collect();
            let cycle = GainGraph::cycle(&gains).expect("n >= 3");
            relabel(rng, &cycle)
        }
        // every pair of a complete graph has a unique geodesic
        3 => GainGraph::complete(n, UnitGain::one()).expect("n >= 1").map_gains(|_, _, _| rational_gain(rng)),
        _ => {
            for _ in 0..50 {
                let g = gain_graph(rng, n);
                if is_distance_compatible(&g).expect("small graph") {
                    return g;
                }
            }
            tree(rng, n)
        }
    };
    debug_assert!(is_distance_compatible(&g).unwrap());
    g
}

/// `g` with its vertices renamed by a random permutation.
pub fn relabel<R: Rng + ?Sized>(rng: &mut R, g: &GainGraph) -> GainGraph {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    GainGraph::new(n, g.edges().iter().map(|e| (perm[e.u], perm[e.v], e.gain))).expect("isomorphic copy")
}
