//! Gains of shortest paths.
//!
//! [`gain_sets_from`] pushes the full set of distinct path gains through the
//! shortest-path DAG of a source. Keeping only a running lexicographic maximum
//! would be wrong: multiplying by an edge gain rotates the set and can change
//! which element is largest.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::gain::UnitGain;
use crate::graph::GainGraph;
use crate::metric::{bfs, bfs_distances};

/// Maximum number of distinct gains tracked at a single vertex.
pub const GAIN_SET_CAP: usize = 100_000;

/// Distinct gains of all shortest `source -> target` paths, sorted by angle.
#[derive(Clone, Debug, PartialEq)]
pub struct PathGainSet {
    pub source: usize,
    pub target: usize,
    pub distance: usize,
    pub gains: Vec<UnitGain>,
}

impl PathGainSet {
    pub fn is_singleton(&self) -> bool {
        self.gains.len() == 1
    }

    /// Lexicographic maximum.
    pub fn max(&self) -> UnitGain {
        *self.gains.iter().max_by(|a, b| a.lex_cmp(b)).expect("gain sets are nonempty")
    }

    /// Lexicographic minimum.
    pub fn min(&self) -> UnitGain {
        *self.gains.iter().min_by(|a, b| a.lex_cmp(b)).expect("gain sets are nonempty")
    }
}

/// Sorts by canonical angle and drops gain-equal duplicates.
pub(crate) fn dedup_gains(gains: &mut Vec<UnitGain>) {
    gains.sort_by(|a, b| a.angle_cmp(b));
    gains.dedup_by(|a, b| a.eq_gain(b));
    // angles near -1 and 1 are the same point of the circle
    if gains.len() > 1 && gains[0].eq_gain(gains.last().unwrap()) {
        gains.pop();
    }
}

/// Gain sets of shortest paths from `source` to every vertex (`{1}` at the source).
pub fn gain_sets_from(g: &GainGraph, source: usize) -> Result<Vec<Vec<UnitGain>>> {
    gain_sets_from_capped(g, source, GAIN_SET_CAP)
}

pub fn gain_sets_from_capped(g: &GainGraph, source: usize, cap: usize) -> Result<Vec<Vec<UnitGain>>> {
    let n = g.vertex_count();
    if source >= n {
        return Err(Error::VertexOutOfRange { vertex: source, n });
    }
    let (dist, order) = bfs(g, source);
    let mut sets: Vec<Vec<UnitGain>> = vec![Vec::new(); n];
    sets[source].push(UnitGain::one());
    for &v in order.iter().skip(1) {
        let mut acc = Vec::new();
        for (u, _) in g.neighbors(v) {
            if dist[u] + 1 == dist[v] {
                let step = g.gain(u, v).expect("neighbor");
                acc.extend(sets[u].iter().map(|&x| x * step));
            }
        }
        dedup_gains(&mut acc);
        if acc.len() > cap {
            return Err(Error::GainSetOverflow { vertex: v, size: acc.len(), cap });
        }
        sets[v] = acc;
    }
    Ok(sets)
}

pub fn shortest_path_gain_set(g: &GainGraph, source: usize, target: usize) -> Result<PathGainSet> {
    let n = g.vertex_count();
    if target >= n {
        return Err(Error::VertexOutOfRange { vertex: target, n });
    }
    if source == target {
        return Err(Error::SameEndpoints { vertex: source });
    }
    let mut sets = gain_sets_from(g, source)?;
    let distance = bfs_distances(g, source)[target];
    Ok(PathGainSet { source, target, distance, gains: core::mem::take(&mut sets[target]) })
}

/// Largest graph the exhaustive path enumeration accepts.
pub const ORACLE_MAX_VERTICES: usize = 10;

/// Enumerates every shortest `source -> target` path one by one and collects
/// the distinct gains.
///
/// Independent of [`shortest_path_gain_set`]: paths are walked explicitly by
/// depth-first search over the distance layers, and each path gain is the
/// product of its own edge gains.
pub fn brute_force_gain_set(g: &GainGraph, source: usize, target: usize) -> Result<PathGainSet> {
    let n = g.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::TooLarge { n, max: ORACLE_MAX_VERTICES });
    }
    for x in [source, target] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if source == target {
        return Err(Error::SameEndpoints { vertex: source });
    }
    let from_source = bfs_distances(g, source);
    let to_target = bfs_distances(g, target);
    let distance = from_source[target];

    let mut found: Vec<UnitGain> = Vec::new();
    let mut path = vec![source];
    let mut stack: Vec<Vec<usize>> = vec![next_layer(g, source, &from_source, &to_target)];
    while let Some(frontier) = stack.last_mut() {
        match frontier.pop() {
            Some(w) => {
                path.push(w);
                if w == target {
                    let gain = path.windows(2).map(|e| g.gain(e[0], e[1]).expect("edge")).product();
                    if !found.iter().any(|x: &UnitGain| x.eq_gain(&gain)) {
                        found.push(gain);
                    }
                    path.pop();
                } else {
                    stack.push(next_layer(g, w, &from_source, &to_target));
                }
            }
            None => {
                stack.pop();
                path.pop();
            }
        }
    }
    found.sort_by(|a, b| a.angle().partial_cmp(&b.angle()).unwrap_or(Ordering::Equal));
    Ok(PathGainSet { source, target, distance, gains: found })
}

fn next_layer(g: &GainGraph, u: usize, from_source: &[usize], to_target: &[usize]) -> Vec<usize> {
    g.neighbors(u)
        .map(|(w, _)| w)
        .filter(|&w| from_source[w] == from_source[u] + 1 && to_target[w] + 1 == to_target[u])
        .collect()
}
