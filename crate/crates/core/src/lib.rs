//! Complex unit gain graphs and their gain distance Laplacians.
//!
//! A gain graph attaches a unit complex number to every oriented edge of a
//! simple connected graph, with the reversed orientation carrying the
//! conjugate. This crate builds the lexicographic gain distance matrices
//! `D^max_<` / `D^min_<` for a vertex ordering `<`, the associated distance
//! Laplacians `Tr(G) - D` and signless Laplacians `Tr(G) + D`, computes their
//! spectra with a cyclic complex Jacobi solver, and evaluates the balance,
//! nullity and spectral-radius statements about them as [`theorems`] verdicts.
//!
//! The crate is `no_std` and only needs `alloc`. Gains whose angle is a
//! rational multiple of pi are stored exactly, so balance tests, path-gain
//! deduplication and lexicographic comparison are exact for them.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod gain;
pub mod gain_distance;
pub mod graph;
pub mod laplacian;
pub mod matrix;
pub mod metric;
pub mod ordering;
pub mod paths;
pub mod spectrum;
pub mod switching;
pub mod theorems;

pub use error::{Error, Result};
pub use gain::UnitGain;
pub use gain_distance::{
    auxiliary_gain, complete_gain_graph, gain_distance_matrix, is_distance_compatible,
    is_ordering_independent, AuxiliaryGainTable, GainDistanceMatrix, Mode,
};
pub use graph::{Edge, GainGraph};
pub use laplacian::{LaplacianSign, WeightedGainGraph};
pub use matrix::HermitianMatrix;
pub use ordering::VertexOrdering;
pub use spectrum::{hermitian_eigenvalues, Spectrum};
pub use switching::{Cycle, SwitchingFunction};
pub use theorems::{TheoremId, TheoremVerdict, Tolerances, Witness};
