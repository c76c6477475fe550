//! Auxiliary gain functions and gain distance matrices.
//!
//! For an ordering `<` and `s < t`, the maximum (minimum) auxiliary gain is
//! the lexicographically largest (smallest) gain among shortest `s -> t`
//! paths; the value for `(t, s)` is its conjugate and the diagonal is zero.
//! Multiplying by the hop distance gives the entries of `D^max_<` / `D^min_<`.

use alloc::vec::Vec;
use core::fmt;

use itertools::Itertools;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gain::UnitGain;
use crate::graph::GainGraph;
use crate::matrix::HermitianMatrix;
use crate::metric::DistanceTable;
use crate::ordering::VertexOrdering;
use crate::paths::gain_sets_from;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Max,
    Min,
}

impl Mode {
    pub const BOTH: [Mode; 2] = [Mode::Max, Mode::Min];

    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Max => "max",
            Mode::Min => "min",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One value of an auxiliary gain function: a unit gain off the diagonal and
/// the zero marker on it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AuxiliaryGain {
    Zero,
    Unit(UnitGain),
}

impl AuxiliaryGain {
    pub fn unit(&self) -> Option<UnitGain> {
        match self {
            AuxiliaryGain::Zero => None,
            AuxiliaryGain::Unit(g) => Some(*g),
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        self.unit().map_or(Complex64::new(0.0, 0.0), |g| g.to_complex())
    }
}

#[derive(Clone, Debug)]
pub struct AuxiliaryGainTable {
    n: usize,
    mode: Mode,
    ordering: VertexOrdering,
    values: Vec<AuxiliaryGain>,
}

impl AuxiliaryGainTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.ordering
    }

    pub fn get(&self, s: usize, t: usize) -> AuxiliaryGain {
        self.values[s * self.n + t]
    }

    /// Off-diagonal value as a gain.
    pub fn gain(&self, s: usize, t: usize) -> Option<UnitGain> {
        self.get(s, t).unit()
    }

    /// Entrywise gain equality.
    pub fn same_values(&self, other: &AuxiliaryGainTable) -> bool {
        self.n == other.n
            && self.values.iter().zip(&other.values).all(|(a, b)| match (a, b) {
                (AuxiliaryGain::Zero, AuxiliaryGain::Zero) => true,
                (AuxiliaryGain::Unit(x), AuxiliaryGain::Unit(y)) => x.eq_gain(y),
                _ => false,
            })
    }
}

pub fn auxiliary_gain(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<AuxiliaryGainTable> {
    let n = g.vertex_count();
    if ord.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: ord.len() });
    }
    let mut values = alloc::vec![AuxiliaryGain::Zero; n * n];
    for s in 0..n {
        let sets = gain_sets_from(g, s)?;
        for t in (0..n).filter(|&t| t != s && ord.less(s, t)) {
            let candidates = sets[t].iter();
            let pick = match mode {
                Mode::Max => candidates.max_by(|a, b| a.lex_cmp(b)),
                Mode::Min => candidates.min_by(|a, b| a.lex_cmp(b)),
            };
            let value = *pick.expect("connected graph has a path");
            values[s * n + t] = AuxiliaryGain::Unit(value);
            values[t * n + s] = AuxiliaryGain::Unit(value.conj());
        }
    }
    Ok(AuxiliaryGainTable { n, mode, ordering: ord.clone(), values })
}

/// `D^mode_<(Phi)`: entry `(s, t)` is the auxiliary gain times `d(s, t)`.
#[derive(Clone, Debug)]
pub struct GainDistanceMatrix {
    auxiliary: AuxiliaryGainTable,
    distances: DistanceTable,
}

impl GainDistanceMatrix {
    pub fn dim(&self) -> usize {
        self.auxiliary.n
    }

    pub fn mode(&self) -> Mode {
        self.auxiliary.mode
    }

    pub fn ordering(&self) -> &VertexOrdering {
        &self.auxiliary.ordering
    }

    pub fn auxiliary(&self) -> &AuxiliaryGainTable {
        &self.auxiliary
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.distances
    }

    pub fn entry(&self, s: usize, t: usize) -> Complex64 {
        self.auxiliary.get(s, t).to_complex() * self.distances.get(s, t) as f64
    }

    pub fn to_matrix(&self) -> HermitianMatrix {
        HermitianMatrix::from_upper(self.dim(), |s, t| self.entry(s, t))
    }

    /// Entrywise equality; exact when all gains are rational angles.
    pub fn same_entries(&self, other: &GainDistanceMatrix) -> bool {
        self.distances == other.distances && self.auxiliary.same_values(&other.auxiliary)
    }
}

pub fn gain_distance_matrix(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<GainDistanceMatrix> {
    Ok(GainDistanceMatrix { auxiliary: auxiliary_gain(g, ord, mode)?, distances: DistanceTable::new(g) })
}

/// `D^max_< = D^max_<r` and `D^min_< = D^min_<r` for the standard ordering.
pub fn is_ordering_independent(g: &GainGraph) -> Result<bool> {
    let std = VertexOrdering::standard(g.vertex_count());
    let rev = std.reverse();
    for mode in Mode::BOTH {
        if !auxiliary_gain(g, &std, mode)?.same_values(&auxiliary_gain(g, &rev, mode)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest graph accepted by [`is_ordering_independent_exhaustive`].
pub const EXHAUSTIVE_ORDERING_MAX: usize = 7;

/// Whether `D^max_<` and `D^min_<` are the same for every one of the `n!`
/// vertex orderings. A diagnostic beyond the standard/reverse definition.
pub fn is_ordering_independent_exhaustive(g: &GainGraph) -> Result<bool> {
    let n = g.vertex_count();
    if n > EXHAUSTIVE_ORDERING_MAX {
        return Err(Error::TooLarge { n, max: EXHAUSTIVE_ORDERING_MAX });
    }
    let std = VertexOrdering::standard(n);
    let reference = [auxiliary_gain(g, &std, Mode::Max)?, auxiliary_gain(g, &std, Mode::Min)?];
    for seq in (0..n).permutations(n) {
        let ord = VertexOrdering::from_sequence(&seq)?;
        for (mode, base) in Mode::BOTH.iter().zip(&reference) {
            if !auxiliary_gain(g, &ord, *mode)?.same_values(base) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `D^max_< = D^min_<` for the standard ordering.
pub fn is_distance_compatible(g: &GainGraph) -> Result<bool> {
    let std = VertexOrdering::standard(g.vertex_count());
    Ok(auxiliary_gain(g, &std, Mode::Max)?.same_values(&auxiliary_gain(g, &std, Mode::Min)?))
}

/// Every pair of vertices has a single shortest-path gain. Equivalent to
/// [`is_distance_compatible`], computed from the gain sets directly.
pub fn all_gain_sets_singleton(g: &GainGraph) -> Result<bool> {
    for s in 0..g.vertex_count() {
        if gain_sets_from(g, s)?.iter().any(|set| set.len() != 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `K^{D^mode_<}(Phi)`: the complete gain graph with gain `phi^<_mode(i, j)` on `i -> j`.
pub fn complete_gain_graph(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<GainGraph> {
    let table = auxiliary_gain(g, ord, mode)?;
    let n = g.vertex_count();
    GainGraph::new(
        n,
        (0..n).tuple_combinations().map(|(i, j)| (i, j, table.gain(i, j).expect("off-diagonal"))),
    )
}
