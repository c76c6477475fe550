//! Switching, balance and switching equivalence.
//!
//! Balance is decided with spanning-tree potentials: a BFS tree from vertex 0
//! assigns `zeta(v)` = gain of the tree path `0 -> v`, and the graph is
//! balanced iff every non-tree edge satisfies `phi(u -> v) = zeta(u)^{-1} zeta(v)`.
//! A violating edge closes a fundamental cycle whose gain is not `1`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gain::UnitGain;
use crate::graph::GainGraph;

/// `zeta: V -> T`, one gain per vertex.
#[derive(Clone, Debug, PartialEq)]
pub struct SwitchingFunction(Vec<UnitGain>);

impl SwitchingFunction {
    pub fn new(values: Vec<UnitGain>) -> Self {
        Self(values)
    }

    pub fn identity(n: usize) -> Self {
        Self(vec![UnitGain::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> UnitGain {
        self.0[v]
    }

    pub fn values(&self) -> &[UnitGain] {
        &self.0
    }

    /// Pointwise product; switching by `a` then by `b` equals switching by `a * b`.
    pub fn compose(&self, other: &SwitchingFunction) -> SwitchingFunction {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a * b).collect())
    }
}

/// An oriented closed walk `vertices[0] -> vertices[1] -> ... -> vertices[0]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub gain: UnitGain,
}

/// Outcome of the balance test.
#[derive(Clone, Debug)]
pub struct BalanceReport {
    /// Tree potential `zeta(v)` = gain of the BFS-tree path from vertex 0.
    pub potential: SwitchingFunction,
    /// A fundamental cycle with gain different from `1`, when unbalanced.
    pub violation: Option<Cycle>,
}

impl BalanceReport {
    pub fn is_balanced(&self) -> bool {
        self.violation.is_none()
    }
}

/// `psi(i -> j) = zeta(i)^{-1} phi(i -> j) zeta(j)`.
pub fn switch(g: &GainGraph, zeta: &SwitchingFunction) -> Result<GainGraph> {
    if zeta.len() != g.vertex_count() {
        return Err(Error::DimensionMismatch { expected: g.vertex_count(), found: zeta.len() });
    }
    Ok(g.map_gains(|u, v, gain| zeta.get(u).inv() * gain * zeta.get(v)))
}

/// Gain of the closed walk through `vertices` (consecutive vertices must be adjacent).
pub fn cycle_gain(g: &GainGraph, vertices: &[usize]) -> Option<UnitGain> {
    let k = vertices.len();
    (0..k).map(|i| g.gain(vertices[i], vertices[(i + 1) % k])).product()
}

pub fn balance(g: &GainGraph) -> BalanceReport {
    let n = g.vertex_count();
    let mut potential = vec![UnitGain::one(); n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for (w, gain) in g.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                depth[w] = depth[u] + 1;
                potential[w] = potential[u] * gain;
                queue.push_back(w);
            }
        }
    }

    let violation = g.edges().iter().find_map(|e| {
        if parent[e.v] == e.u || parent[e.u] == e.v {
            return None;
        }
        let expected = potential[e.u].inv() * potential[e.v];
        if e.gain.eq_gain(&expected) {
            return None;
        }
        // u -> v, then v up to the common ancestor, then down to u.
        let (mut a, mut b) = (e.v, e.u);
        let mut up = Vec::new();
        let mut down = Vec::new();
        while depth[a] > depth[b] {
            up.push(a);
            a = parent[a];
        }
        while depth[b] > depth[a] {
            down.push(b);
            b = parent[b];
        }
        while a != b {
            up.push(a);
            down.push(b);
            a = parent[a];
            b = parent[b];
        }
        if a != e.u {
            up.push(a);
        }
        let mut vertices = vec![e.u];
        vertices.extend(up);
        vertices.extend(down.into_iter().rev().filter(|&x| x != e.u));
        let gain = cycle_gain(g, &vertices).expect("fundamental cycle follows edges");
        Some(Cycle { vertices, gain })
    });

    BalanceReport { potential: SwitchingFunction(potential), violation }
}

/// Every cycle has gain `1`.
pub fn is_balanced(g: &GainGraph) -> bool {
    balance(g).is_balanced()
}

/// `-Phi` is balanced.
pub fn is_antibalanced(g: &GainGraph) -> bool {
    is_balanced(&g.negated())
}

/// A `zeta` with `switch(h, zeta) == g`, if one exists.
///
/// The quotient graph with gains `phi(i -> j) conj(psi(i -> j))` is balanced
/// exactly when such a `zeta` exists, and its tree potential is one.
pub fn switching_witness(g: &GainGraph, h: &GainGraph) -> Result<Option<SwitchingFunction>> {
    if !g.same_underlying(h) {
        return Err(Error::UnderlyingGraphMismatch);
    }
    let quotient = g.map_gains(|u, v, gain| gain * h.gain(u, v).expect("same underlying").conj());
    let report = balance(&quotient);
    Ok(report.is_balanced().then_some(report.potential))
}

pub fn switching_equivalent(g: &GainGraph, h: &GainGraph) -> Result<bool> {
    switching_witness(g, h).map(|w| w.is_some())
}
