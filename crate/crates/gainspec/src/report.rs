//! Builds the result document of each CLI command.

use gainspec_core::gain_distance::is_ordering_independent_exhaustive;
use gainspec_core::laplacian::{distance_laplacian, underlying_distance_matrices, EdgeOrientation};
use gainspec_core::metric::{transmissions, wiener_index};
use gainspec_core::switching::{balance, is_antibalanced};
use gainspec_core::theorems::{
    check_balance_nullity, check_balanced_cospectral, check_dq_upper_bound, check_incidence_factorization,
    check_positive_semidefinite, check_seven_equivalences, check_switching_cospectral, check_transmission_upper_bound,
    check_wiener_lower_bound,
};
use gainspec_core::{
    gain_distance_matrix, hermitian_eigenvalues, is_distance_compatible, is_ordering_independent, GainGraph,
    HermitianMatrix, LaplacianSign, Mode, Result, Tolerances, VertexOrdering, WeightedGainGraph, Witness,
};
use serde_json::{json, Value};

use crate::document::{matrix_data, witness_value, ResultDocument, SpectrumRecord, VerdictRecord};
use crate::random::{stream_rng, switching_function};

/// Which matrix a command works on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// `D^mode_<`
    Distance,
    /// `DL^mode_<`
    Laplacian,
    /// `DQ^mode_<`
    Signless,
}

impl MatrixKind {
    pub fn label(&self, mode: Mode) -> String {
        let prefix = match self {
            MatrixKind::Distance => "D",
            MatrixKind::Laplacian => "DL",
            MatrixKind::Signless => "DQ",
        };
        format!("{prefix}_{mode}")
    }
}

pub fn build_matrix(g: &GainGraph, ord: &VertexOrdering, mode: Mode, kind: MatrixKind) -> Result<HermitianMatrix> {
    match kind {
        MatrixKind::Distance => Ok(gain_distance_matrix(g, ord, mode)?.to_matrix()),
        MatrixKind::Laplacian => distance_laplacian(g, ord, mode, LaplacianSign::Laplacian),
        MatrixKind::Signless => distance_laplacian(g, ord, mode, LaplacianSign::Signless),
    }
}

fn one_based(ord: &VertexOrdering) -> Vec<usize> {
    ord.sequence().iter().map(|v| v + 1).collect()
}

fn ordering_facts(doc: &mut ResultDocument, ord: &VertexOrdering) {
    doc.facts.insert("ordering".into(), json!(one_based(ord)));
}

pub fn matrices_document(g: &GainGraph, ord: &VertexOrdering, modes: &[Mode], kinds: &[MatrixKind]) -> Result<ResultDocument> {
    let mut doc = ResultDocument::default();
    for &mode in modes {
        for &kind in kinds {
            doc.matrices.insert(kind.label(mode), matrix_data(&build_matrix(g, ord, mode, kind)?));
        }
    }
    ordering_facts(&mut doc, ord);
    Ok(doc)
}

pub fn spectrum_document(g: &GainGraph, ord: &VertexOrdering, modes: &[Mode], kinds: &[MatrixKind]) -> Result<ResultDocument> {
    let mut doc = ResultDocument::default();
    for &mode in modes {
        for &kind in kinds {
            let s = hermitian_eigenvalues(&build_matrix(g, ord, mode, kind)?)?;
            doc.spectra.insert(kind.label(mode), SpectrumRecord::new(&s));
        }
    }
    ordering_facts(&mut doc, ord);
    Ok(doc)
}

pub fn balance_document(g: &GainGraph) -> ResultDocument {
    let report = balance(g);
    let mut doc = ResultDocument::default();
    doc.facts.insert("balanced".into(), Value::Bool(report.is_balanced()));
    doc.facts.insert("antibalanced".into(), Value::Bool(is_antibalanced(g)));
    let witness = match report.violation {
        Some(cycle) => Witness::Cycle(cycle),
        None => Witness::Switching(report.potential),
    };
    doc.facts.insert("witness".into(), witness_value(&witness));
    doc
}

pub fn compatible_document(g: &GainGraph) -> Result<ResultDocument> {
    let mut doc = ResultDocument::default();
    doc.facts.insert("distance_compatible".into(), Value::Bool(is_distance_compatible(g)?));
    doc.facts.insert("ordering_independent".into(), Value::Bool(is_ordering_independent(g)?));
    if let Ok(all) = is_ordering_independent_exhaustive(g) {
        doc.facts.insert("ordering_independent_all_orderings".into(), Value::Bool(all));
    }
    Ok(doc)
}

/// Switching function used by `verify` for the switching-cospectral check.
pub fn verify_switching(n: usize) -> gainspec_core::SwitchingFunction {
    switching_function(&mut stream_rng(0, 0), n)
}

/// Every applicable check on one graph.
pub fn verify_document(g: &GainGraph, ord: &VertexOrdering, tol: &Tolerances) -> Result<ResultDocument> {
    let n = g.vertex_count();
    let compatible = is_distance_compatible(g)?;
    let mut verdicts = Vec::new();
    for mode in Mode::BOTH {
        verdicts.push(check_balance_nullity(g, ord, mode)?);
    }
    verdicts.push(check_balanced_cospectral(g, tol)?);
    verdicts.push(check_seven_equivalences(g)?);
    if n >= 2 {
        for mode in Mode::BOTH {
            verdicts.push(check_wiener_lower_bound(g, ord, mode, tol)?);
        }
    }
    if compatible {
        verdicts.push(check_dq_upper_bound(g, tol)?);
        verdicts.push(check_transmission_upper_bound(g, tol)?);
    }
    verdicts.push(check_switching_cospectral(g, &verify_switching(n), tol)?);
    for mode in Mode::BOTH {
        verdicts.push(check_positive_semidefinite(g, ord, mode)?);
    }
    let wg = WeightedGainGraph::from_auxiliary(g, ord, Mode::Max)?;
    let orientation = EdgeOrientation::canonical(wg.base().edge_count());
    verdicts.push(check_incidence_factorization(&wg, &orientation, tol)?);

    let mut doc = ResultDocument { verdicts: verdicts.iter().map(VerdictRecord::from).collect(), ..Default::default() };
    doc.facts.insert("vertices".into(), json!(n));
    doc.facts.insert("edges".into(), json!(g.edge_count()));
    doc.facts.insert("balanced".into(), Value::Bool(balance(g).is_balanced()));
    doc.facts.insert("distance_compatible".into(), Value::Bool(compatible));
    doc.facts.insert("ordering_independent".into(), Value::Bool(is_ordering_independent(g)?));
    doc.facts.insert("wiener_index".into(), json!(wiener_index(g)));
    doc.facts.insert("transmissions".into(), json!(transmissions(g)));
    let dq = hermitian_eigenvalues(&underlying_distance_matrices(g).signless)?;
    doc.facts.insert("dq_spectral_radius".into(), json!(crate::document::snap(dq.spectral_radius())));
    doc.facts.insert("cospectral_tolerance".into(), json!(tol.cospectral));
    ordering_facts(&mut doc, ord);
    Ok(doc)
}
