#![allow(dead_code)]

use std::collections::BTreeSet;

use gainspec_core::{GainGraph, SwitchingFunction, UnitGain, VertexOrdering};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational_gain<R: Rng>(rng: &mut R) -> UnitGain {
    let q = [1i64, 2, 3, 4, 6][rng.random_range(0..5)];
    UnitGain::pi_fraction(rng.random_range(-q + 1..=q), q)
}

/// Random spanning tree plus each remaining pair with probability `density`.
pub fn connected<R: Rng>(rng: &mut R, n: usize, density: f64, mut gain: impl FnMut(&mut R) -> UnitGain) -> GainGraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for k in 1..n {
        let a = order[k];
        let b = order[rng.random_range(0..k)];
        edges.push((a.min(b), a.max(b)));
    }
    let present: BTreeSet<_> = edges.iter().copied().collect();
    for a in 0..n {
        for b in a + 1..n {
            if !present.contains(&(a, b)) && rng.random_bool(density) {
                edges.push((a, b));
            }
        }
    }
    let triples: Vec<_> = edges.into_iter().map(|(a, b)| (a, b, gain(rng))).collect();
    GainGraph::new(n, triples).expect("connected by construction")
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize) -> GainGraph {
    let density = rng.random_range(0.0..0.8);
    connected(rng, n, density, |r| rational_gain(r))
}

pub fn switching<R: Rng>(rng: &mut R, n: usize) -> SwitchingFunction {
    SwitchingFunction::new((0..n).map(|_| rational_gain(rng)).collect())
}

pub fn ordering<R: Rng>(rng: &mut R, n: usize) -> VertexOrdering {
    let mut seq: Vec<usize> = (0..n).collect();
    seq.shuffle(rng);
    VertexOrdering::from_sequence(&seq).unwrap()
}
