//! Transmission, adjacency and (signless) gain distance Laplacian matrices,
//! plus positively weighted gain graphs and their incidence factorization.

use alloc::vec::Vec;

use itertools::Itertools;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gain::UnitGain;
use crate::gain_distance::{auxiliary_gain, gain_distance_matrix, GainDistanceMatrix, Mode};
use crate::graph::GainGraph;
use crate::matrix::{ComplexMatrix, HermitianMatrix};
use crate::metric::DistanceTable;
use crate::ordering::VertexOrdering;

/// `Tr(G) - D` or `Tr(G) + D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LaplacianSign {
    Laplacian,
    Signless,
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `diag(Tr(v_1), ..., Tr(v_n))`.
pub fn transmission_matrix(g: &GainGraph) -> HermitianMatrix {
    let tr: Vec<f64> = DistanceTable::new(g).transmissions().into_iter().map(|t| t as f64).collect();
    HermitianMatrix::from_real_diagonal(&tr)
}

/// `A(Phi)`: `phi(i -> j)` where adjacent, zero elsewhere.
pub fn adjacency_matrix(g: &GainGraph) -> HermitianMatrix {
    HermitianMatrix::from_upper(g.vertex_count(), |i, j| {
        g.gain(i, j).map_or(real(0.0), |x| x.to_complex())
    })
}

/// `Tr(G) -/+ D` for an already computed gain distance matrix.
pub fn laplacian_from_distance(d: &GainDistanceMatrix, sign: LaplacianSign) -> HermitianMatrix {
    let tr = d.distances().transmissions();
    let k = match sign {
        LaplacianSign::Laplacian => -1.0,
        LaplacianSign::Signless => 1.0,
    };
    HermitianMatrix::from_upper(d.dim(), |i, j| if i == j { real(tr[i] as f64) } else { d.entry(i, j) * k })
}

/// `DL^mode_<(Phi)` or `DQ^mode_<(Phi)`.
pub fn distance_laplacian(
    g: &GainGraph,
    ord: &VertexOrdering,
    mode: Mode,
    sign: LaplacianSign,
) -> Result<HermitianMatrix> {
    Ok(laplacian_from_distance(&gain_distance_matrix(g, ord, mode)?, sign))
}

/// Gain-free matrices of the underlying graph.
#[derive(Clone, Debug)]
pub struct UnderlyingMatrices {
    /// `D(G)`
    pub distance: HermitianMatrix,
    /// `DL(G) = Tr(G) - D(G)`
    pub laplacian: HermitianMatrix,
    /// `DQ(G) = Tr(G) + D(G)`
    pub signless: HermitianMatrix,
}

pub fn underlying_distance_matrices(g: &GainGraph) -> UnderlyingMatrices {
    let d = DistanceTable::new(g);
    let n = d.dim();
    let tr = d.transmissions();
    let distance = HermitianMatrix::from_upper(n, |i, j| real(d.get(i, j) as f64));
    let laplacian = HermitianMatrix::from_upper(n, |i, j| {
        if i == j { real(tr[i] as f64) } else { real(-(d.get(i, j) as f64)) }
    });
    let signless = HermitianMatrix::from_upper(n, |i, j| {
        if i == j { real(tr[i] as f64) } else { real(d.get(i, j) as f64) }
    });
    UnderlyingMatrices { distance, laplacian, signless }
}

/// `Phi_w`: a gain graph with a positive weight on every edge, aligned with
/// [`GainGraph::edges`].
#[derive(Clone, Debug)]
pub struct WeightedGainGraph {
    base: GainGraph,
    weights: Vec<f64>,
}

impl WeightedGainGraph {
    pub fn new(base: GainGraph, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != base.edge_count() {
            return Err(Error::DimensionMismatch { expected: base.edge_count(), found: weights.len() });
        }
        if let Some((edge, &weight)) = weights.iter().enumerate().find(|(_, w)| !(**w > 0.0 && w.is_finite())) {
            return Err(Error::NonPositiveWeight { edge, weight });
        }
        Ok(Self { base, weights })
    }

    /// `(K_n, psi = phi^<_mode, w = d_G)`, whose Laplacian is `DL^mode_<(Phi)`.
    pub fn from_auxiliary(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<Self> {
        let table = auxiliary_gain(g, ord, mode)?;
        let d = DistanceTable::new(g);
        let n = g.vertex_count();
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        let base = GainGraph::new(n, pairs.iter().map(|&(i, j)| (i, j, table.gain(i, j).expect("off-diagonal"))))?;
        // GainGraph keeps insertion order, so weights line up with `pairs`
        let weights = pairs.iter().map(|&(i, j)| d.get(i, j) as f64).collect();
        Self::new(base, weights)
    }

    pub fn base(&self) -> &GainGraph {
        &self.base
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// `L(Phi_w) = D(Phi_w) - A(Phi_w)`.
pub fn weighted_laplacian(wg: &WeightedGainGraph) -> HermitianMatrix {
    let g = &wg.base;
    let n = g.vertex_count();
    let mut degree = alloc::vec![0.0; n];
    for (e, &w) in g.edges().iter().zip(&wg.weights) {
        degree[e.u] += w;
        degree[e.v] += w;
    }
    HermitianMatrix::from_upper(n, |i, j| {
        if i == j {
            real(degree[i])
        } else {
            g.edge_index(i, j).map_or(real(0.0), |e| {
                -g.edges()[e].oriented_gain(i, j).expect("edge").to_complex() * wg.weights[e]
            })
        }
    })
}

/// Which endpoint of an edge `{u, v}` (`u < v`) is the tail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrientation {
    /// `u -> v`
    Forward,
    /// `v -> u`
    Backward,
}

impl EdgeOrientation {
    /// Tail at the smaller index for every edge.
    pub fn canonical(m: usize) -> Vec<EdgeOrientation> {
        alloc::vec![EdgeOrientation::Forward; m]
    }
}

/// `I(Phi_w)` together with the `(tail, head)` pair of every column.
#[derive(Clone, Debug)]
pub struct IncidenceMatrix {
    pub matrix: ComplexMatrix,
    pub arcs: Vec<(usize, usize)>,
}

/// Column `j` has `phi(e_j) sqrt(w_j)` at the tail and `-sqrt(w_j)` at the head.
pub fn incidence_matrix(wg: &WeightedGainGraph, orientation: &[EdgeOrientation]) -> Result<IncidenceMatrix> {
    let g = &wg.base;
    if orientation.len() != g.edge_count() {
        return Err(Error::DimensionMismatch { expected: g.edge_count(), found: orientation.len() });
    }
    let mut matrix = ComplexMatrix::zeros(g.vertex_count(), g.edge_count());
    let mut arcs = Vec::with_capacity(g.edge_count());
    for (j, (e, o)) in g.edges().iter().zip(orientation).enumerate() {
        let (tail, head) = match o {
            EdgeOrientation::Forward => (e.u, e.v),
            EdgeOrientation::Backward => (e.v, e.u),
        };
        let gain: UnitGain = e.oriented_gain(tail, head).expect("endpoints");
        let root = libm::sqrt(wg.weights[j]);
        matrix.set(tail, j, gain.to_complex() * root);
        matrix.set(head, j, real(-root));
        arcs.push((tail, head));
    }
    Ok(IncidenceMatrix { matrix, arcs })
}

/// `max |L(Phi_w) - I I*|` over all entries.
pub fn verify_incidence_factorization(wg: &WeightedGainGraph, orientation: &[EdgeOrientation]) -> Result<f64> {
    let l = weighted_laplacian(wg);
    let product = incidence_matrix(wg, orientation)?.matrix.mul_adjoint();
    Ok(l.as_slice().iter().zip(&product).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max))
}
