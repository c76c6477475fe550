//! A pair of switching equivalent gain graphs on five vertices whose
//! `DL^max` matrices (standard ordering) are not cospectral.
//!
//! The two 5x5 matrices ship as a result document in
//! `fixtures/switching_pair.json`; the graph files next to it give graphs
//! consistent with their distance pattern.

use gainspec_core::{GainGraph, HermitianMatrix, UnitGain};
use num_complex::Complex64;

use crate::document::{matrix_data, matrix_from_data, ResultDocument};
use crate::graph_file::parse_graph;

pub const FIXTURE_JSON: &str = include_str!("../fixtures/switching_pair.json");
pub const PHI_GRAPH: &str = include_str!("../fixtures/switching_pair_phi.graph");
pub const PSI_GRAPH: &str = include_str!("../fixtures/switching_pair_psi.graph");

pub const PHI_KEY: &str = "DL_max_phi";
pub const PSI_KEY: &str = "DL_max_psi";

/// Transmissions, shared by both graphs.
pub const DIAGONAL: [f64; 5] = [5.0, 6.0, 7.0, 6.0, 8.0];

/// Upper-triangle entries `-d e^{i pi p/q}` as `(i, j, d, p, q)`, 0-based.
type Entry = (usize, usize, u32, i64, i64);

pub const PHI_ENTRIES: [Entry; 10] = [
    (0, 1, 1, 0, 1),
    (0, 2, 2, 1, 6),
    (0, 3, 1, 0, 1),
    (0, 4, 1, 1, 3),
    (1, 2, 1, 1, 6),
    (1, 3, 2, 0, 1),
    (1, 4, 2, 1, 3),
    (2, 3, 1, 1, 6),
    (2, 4, 3, 1, 6),
    (3, 4, 2, 1, 3),
];

pub const PSI_ENTRIES: [Entry; 10] = [
    (0, 1, 1, 1, 3),
    (0, 2, 2, 1, 3),
    (0, 3, 1, 0, 1),
    (0, 4, 1, 1, 3),
    (1, 2, 1, 0, 1),
    (1, 3, 2, 0, 1),
    (1, 4, 2, 0, 1),
    (2, 3, 1, 0, 1),
    (2, 4, 3, 1, 3),
    (3, 4, 2, 1, 3),
];

fn assemble(entries: &[Entry]) -> HermitianMatrix {
    HermitianMatrix::from_upper(5, |i, j| {
        if i == j {
            return Complex64::new(DIAGONAL[i], 0.0);
        }
        let &(_, _, d, p, q) = entries.iter().find(|e| (e.0, e.1) == (i, j)).expect("full upper triangle");
        -UnitGain::pi_fraction(p, q).to_complex() * f64::from(d)
    })
}

/// `(DL^max(Phi), DL^max(Psi))` assembled from the exact entry tables.
pub fn switching_pair() -> (HermitianMatrix, HermitianMatrix) {
    (assemble(&PHI_ENTRIES), assemble(&PSI_ENTRIES))
}

pub fn fixture_document() -> ResultDocument {
    let (phi, psi) = switching_pair();
    let mut doc = ResultDocument::default();
    doc.matrices.insert(PHI_KEY.into(), matrix_data(&phi));
    doc.matrices.insert(PSI_KEY.into(), matrix_data(&psi));
    doc
}

/// The two matrices as read from the bundled JSON.
pub fn load_switching_pair() -> (HermitianMatrix, HermitianMatrix) {
    let doc = ResultDocument::from_json(FIXTURE_JSON).expect("bundled fixture parses");
    let get = |key: &str| matrix_from_data(&doc.matrices[key]).expect("bundled fixture is Hermitian");
    (get(PHI_KEY), get(PSI_KEY))
}

pub fn phi_graph() -> GainGraph {
    parse_graph(PHI_GRAPH).expect("bundled graph parses").graph
}

pub fn psi_graph() -> GainGraph {
    parse_graph(PSI_GRAPH).expect("bundled graph parses").graph
}
