//! Executable checks of the balance, nullity and spectral-radius statements
//! about gain distance Laplacians.
//!
//! Every check returns a [`TheoremVerdict`]. `slack >= 0` always means the
//! statement holds; for inequalities it is the margin `rhs - lhs` (or
//! `lhs - rhs` for lower bounds), for pure boolean statements it is `0` or `-1`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::gain::UnitGain;
use crate::gain_distance::{gain_distance_matrix, is_distance_compatible, is_ordering_independent, Mode};
use crate::graph::GainGraph;
use crate::laplacian::{
    laplacian_from_distance, underlying_distance_matrices, verify_incidence_factorization, EdgeOrientation,
    LaplacianSign, WeightedGainGraph,
};
use crate::matrix::HermitianMatrix;
use crate::metric::{transmissions, wiener_index};
use crate::ordering::VertexOrdering;
use crate::spectrum::{hermitian_eigenvalues, Spectrum, COSPECTRAL_TOLERANCE};
use crate::switching::{balance, switch, switching_witness, Cycle, SwitchingFunction};

/// Numeric tolerances used by the checks.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Slack allowed on spectral-radius inequalities.
    pub bound: f64,
    /// `|rho_1 - rho_2|` at most this counts as equality.
    pub equality: f64,
    /// Relative tolerance for cospectrality.
    pub cospectral: f64,
    /// Largest accepted `|L - I I*|`.
    pub factorization: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { bound: 1e-8, equality: 1e-7, cospectral: COSPECTRAL_TOLERANCE, factorization: 1e-10 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// nullity(DL^mode_<) is 1 when balanced and 0 otherwise.
    BalanceNullity(Mode),
    /// Balanced iff DL^max = DL^min = DL and DL is cospectral with DL(G).
    BalancedCospectral,
    /// Seven equivalent characterizations of balance.
    SevenEquivalences,
    /// rho(DL^mode_<) >= 2W(G)/(n-1).
    WienerLowerBound(Mode),
    /// rho(DL) <= rho(DQ(G)), equality iff switching equivalent to (K_n, -1).
    DqUpperBound,
    /// rho(DL) <= 2 max Tr(v), equality iff switching equivalent to (K_n, -1).
    TransmissionUpperBound,
    /// Switching a compatible graph keeps it compatible and preserves spec(DL).
    SwitchingCospectral,
    /// L(Phi_w) = I(Phi_w) I(Phi_w)*.
    IncidenceFactorization,
    /// DL^mode_< is positive semi-definite.
    PositiveSemidefinite(Mode),
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremId::BalanceNullity(m) => write!(f, "balance-nullity[{m}]"),
            TheoremId::BalancedCospectral => f.write_str("balanced-cospectral"),
            TheoremId::SevenEquivalences => f.write_str("seven-equivalences"),
            TheoremId::WienerLowerBound(m) => write!(f, "wiener-lower-bound[{m}]"),
            TheoremId::DqUpperBound => f.write_str("dq-upper-bound"),
            TheoremId::TransmissionUpperBound => f.write_str("transmission-upper-bound"),
            TheoremId::SwitchingCospectral => f.write_str("switching-cospectral"),
            TheoremId::IncidenceFactorization => f.write_str("incidence-factorization"),
            TheoremId::PositiveSemidefinite(m) => write!(f, "positive-semidefinite[{m}]"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Witness {
    Cycle(Cycle),
    Switching(SwitchingFunction),
    Ordering(VertexOrdering),
    /// Truth values of a list of statements, in order.
    Statements(Vec<bool>),
    Spectra { first: Vec<f64>, second: Vec<f64> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct TheoremVerdict {
    pub theorem: TheoremId,
    pub holds: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub witness: Option<Witness>,
    pub notes: Vec<String>,
}

impl TheoremVerdict {
    fn boolean(theorem: TheoremId, holds: bool) -> Self {
        Self {
            theorem,
            holds,
            lhs: 0.0,
            rhs: 0.0,
            slack: if holds { 0.0 } else { -1.0 },
            witness: None,
            notes: Vec::new(),
        }
    }
}

fn spectrum_of(m: &HermitianMatrix) -> Result<Spectrum> {
    hermitian_eigenvalues(m)
}

fn dl(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<HermitianMatrix> {
    Ok(laplacian_from_distance(&gain_distance_matrix(g, ord, mode)?, LaplacianSign::Laplacian))
}

/// Shared `DL(Phi)` for a distance compatible graph, or [`Error::Incompatible`].
fn compatible_dl(g: &GainGraph) -> Result<HermitianMatrix> {
    if !is_distance_compatible(g)? {
        return Err(Error::Incompatible);
    }
    dl(g, &VertexOrdering::standard(g.vertex_count()), Mode::Max)
}

/// Whether `g ~ (K_n, -1)`, with a switching function `zeta` such that
/// switching `(K_n, -1)` by `zeta` gives `g`.
pub fn negative_complete_witness(g: &GainGraph) -> Result<Option<SwitchingFunction>> {
    if !g.is_complete() {
        return Ok(None);
    }
    let negative = GainGraph::complete(g.vertex_count(), UnitGain::minus_one())?;
    switching_witness(g, &negative)
}

/// `nullity(DL^mode_<) = 1` iff balanced and `0` otherwise.
///
/// `slack` is the distance of the spectrum from the zero threshold on the
/// side the statement requires.
pub fn check_balance_nullity(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<TheoremVerdict> {
    let report = balance(g);
    let spectrum = spectrum_of(&dl(g, ord, mode)?)?;
    let nullity = spectrum.nullity();
    let balanced = report.is_balanced();
    let expected = usize::from(balanced);
    let eig = spectrum.eigenvalues();
    let tau = spectrum.zero_threshold();
    let slack = if balanced {
        let second = eig.get(1).map_or(f64::INFINITY, |l| l.abs() - tau);
        (tau - eig[0].abs()).min(second)
    } else {
        eig[0].abs() - tau
    };
    let mut notes = Vec::new();
    if nullity > 1 {
        notes.push(format!("nullity {nullity} outside {{0, 1}}"));
    }
    Ok(TheoremVerdict {
        theorem: TheoremId::BalanceNullity(mode),
        holds: nullity == expected,
        lhs: nullity as f64,
        rhs: expected as f64,
        slack,
        witness: report.violation.map(Witness::Cycle),
        notes,
    })
}

/// Balanced iff `DL^max_< = DL^min_< = DL^max_<r` and `DL` is cospectral with `DL(G)`.
pub fn check_balanced_cospectral(g: &GainGraph, tol: &Tolerances) -> Result<TheoremVerdict> {
    let n = g.vertex_count();
    let std = VertexOrdering::standard(n);
    let report = balance(g);
    let dmax = gain_distance_matrix(g, &std, Mode::Max)?;
    let dmin = gain_distance_matrix(g, &std, Mode::Min)?;
    let dmax_rev = gain_distance_matrix(g, &std.reverse(), Mode::Max)?;
    let equal = dmax.same_entries(&dmin) && dmax.same_entries(&dmax_rev);

    let gain_spectrum = spectrum_of(&laplacian_from_distance(&dmax, LaplacianSign::Laplacian))?;
    let plain_spectrum = spectrum_of(&underlying_distance_matrices(g).laplacian)?;
    let deviation = gain_spectrum.max_deviation(&plain_spectrum)?;
    let cospectral = gain_spectrum.cospectral(&plain_spectrum, tol.cospectral)?;
    let conjunction = equal && cospectral;
    let balanced = report.is_balanced();

    let mut verdict = TheoremVerdict::boolean(TheoremId::BalancedCospectral, conjunction == balanced);
    verdict.lhs = deviation;
    verdict.rhs = tol.cospectral * gain_spectrum.spectral_radius().max(1.0);
    verdict.notes.push(format!("balanced={balanced} matrices_equal={equal} cospectral={cospectral}"));
    verdict.witness = Some(match report.violation {
        Some(cycle) => Witness::Cycle(cycle),
        None => Witness::Switching(report.potential),
    });
    Ok(verdict)
}

/// Evaluates the seven statements and requires them to agree:
///
/// 1. balanced
/// 2. ordering independent and `nullity(DL^max) = 1`
/// 3. ordering independent and `nullity(DL^min) = 1`
/// 4. distance compatible and `nullity(DL) = 1`
/// 5. `det DL^max = 0`
/// 6. `det DL^min = 0`
/// 7. `det DL = 0` (false when `DL` is undefined, i.e. not compatible)
///
/// Determinants vanish exactly when the nullity is at least one; all matrices
/// use the standard ordering.
pub fn check_seven_equivalences(g: &GainGraph) -> Result<TheoremVerdict> {
    let std = VertexOrdering::standard(g.vertex_count());
    let balanced = balance(g).is_balanced();
    let independent = is_ordering_independent(g)?;
    let compatible = is_distance_compatible(g)?;
    let null_max = spectrum_of(&dl(g, &std, Mode::Max)?)?.nullity();
    let null_min = spectrum_of(&dl(g, &std, Mode::Min)?)?.nullity();
    let statements = vec![
        balanced,
        independent && null_max == 1,
        independent && null_min == 1,
        compatible && null_max == 1,
        null_max >= 1,
        null_min >= 1,
        compatible && null_max >= 1,
    ];
    let agree = statements.iter().all(|&s| s == statements[0]);
    let mut verdict = TheoremVerdict::boolean(TheoremId::SevenEquivalences, agree);
    verdict.lhs = statements.iter().filter(|&&s| s).count() as f64;
    verdict.rhs = if statements[0] { 7.0 } else { 0.0 };
    verdict.witness = Some(Witness::Statements(statements));
    Ok(verdict)
}

/// `rho(DL^mode_<) >= 2 W(G) / (n - 1)`.
pub fn check_wiener_lower_bound(g: &GainGraph, ord: &VertexOrdering, mode: Mode, tol: &Tolerances) -> Result<TheoremVerdict> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::Precondition("the Wiener bound needs at least one edge"));
    }
    let rho = spectrum_of(&dl(g, ord, mode)?)?.spectral_radius();
    let bound = 2.0 * wiener_index(g) as f64 / (n as f64 - 1.0);
    let slack = rho - bound;
    let mut notes = Vec::new();
    if g.is_complete() && g.edges().iter().all(|e| e.gain.is_one()) {
        notes.push(format!("sharp case (K_{n}, 1): DL = nI - J, rho = n = {n} = 2W/(n-1), not n-1"));
    }
    Ok(TheoremVerdict {
        theorem: TheoremId::WienerLowerBound(mode),
        holds: slack >= -tol.bound,
        lhs: rho,
        rhs: bound,
        slack,
        witness: Some(Witness::Ordering(ord.clone())),
        notes,
    })
}

fn upper_bound_verdict(
    theorem: TheoremId,
    g: &GainGraph,
    rho: f64,
    bound: f64,
    tol: &Tolerances,
) -> Result<TheoremVerdict> {
    let witness = negative_complete_witness(g)?;
    let in_class = witness.is_some();
    let numerically_equal = (rho - bound).abs() <= tol.equality;
    let holds = rho <= bound + tol.bound && numerically_equal == in_class;
    let mut notes = vec![format!("equality_class={in_class} numerically_equal={numerically_equal}")];
    if numerically_equal != in_class {
        notes.push(String::from("equality case does not match switching class of (K_n, -1)"));
    }
    Ok(TheoremVerdict {
        theorem,
        holds,
        lhs: rho,
        rhs: bound,
        slack: bound - rho,
        witness: witness.map(Witness::Switching),
        notes,
    })
}

/// `rho(DL(Phi)) <= rho(DQ(G))`, with equality exactly on the switching class
/// of `(K_n, -1)`. Requires a distance compatible graph.
pub fn check_dq_upper_bound(g: &GainGraph, tol: &Tolerances) -> Result<TheoremVerdict> {
    let rho = spectrum_of(&compatible_dl(g)?)?.spectral_radius();
    let bound = spectrum_of(&underlying_distance_matrices(g).signless)?.spectral_radius();
    upper_bound_verdict(TheoremId::DqUpperBound, g, rho, bound, tol)
}

/// `rho(DL(Phi)) <= 2 max Tr(v)`, with equality exactly on the switching class
/// of `(K_n, -1)`. Requires a distance compatible graph.
pub fn check_transmission_upper_bound(g: &GainGraph, tol: &Tolerances) -> Result<TheoremVerdict> {
    let rho = spectrum_of(&compatible_dl(g)?)?.spectral_radius();
    let bound = 2.0 * transmissions(g).into_iter().max().unwrap_or(0) as f64;
    upper_bound_verdict(TheoremId::TransmissionUpperBound, g, rho, bound, tol)
}

/// For compatible `g`: `switch(g, zeta)` is compatible and `spec(DL)` is unchanged.
///
/// For incompatible `g` the statement does not apply; the verdict holds
/// vacuously and reports whether the `DL^max_<` spectra differ.
pub fn check_switching_cospectral(g: &GainGraph, zeta: &SwitchingFunction, tol: &Tolerances) -> Result<TheoremVerdict> {
    let switched = switch(g, zeta)?;
    let std = VertexOrdering::standard(g.vertex_count());
    let compatible = is_distance_compatible(g)?;
    let s1 = spectrum_of(&dl(g, &std, Mode::Max)?)?;
    let s2 = spectrum_of(&dl(&switched, &std, Mode::Max)?)?;
    let deviation = s1.max_deviation(&s2)?;
    let cospectral = s1.cospectral(&s2, tol.cospectral)?;
    let mut verdict = if compatible {
        let stays = is_distance_compatible(&switched)?;
        let mut v = TheoremVerdict::boolean(TheoremId::SwitchingCospectral, stays && cospectral);
        v.notes.push(format!("switched_compatible={stays} cospectral={cospectral}"));
        v
    } else {
        let mut v = TheoremVerdict::boolean(TheoremId::SwitchingCospectral, true);
        v.notes.push(format!("not distance compatible: hypothesis not met; DL^max spectra differ={}", !cospectral));
        v
    };
    verdict.lhs = deviation;
    verdict.rhs = tol.cospectral * s1.spectral_radius().max(1.0);
    verdict.witness = Some(Witness::Spectra { first: s1.eigenvalues().to_vec(), second: s2.eigenvalues().to_vec() });
    Ok(verdict)
}

/// `max |L - I I*| <= tol.factorization` for the given edge orientation.
pub fn check_incidence_factorization(
    wg: &WeightedGainGraph,
    orientation: &[EdgeOrientation],
    tol: &Tolerances,
) -> Result<TheoremVerdict> {
    let residual = verify_incidence_factorization(wg, orientation)?;
    Ok(TheoremVerdict {
        theorem: TheoremId::IncidenceFactorization,
        holds: residual <= tol.factorization,
        lhs: residual,
        rhs: tol.factorization,
        slack: tol.factorization - residual,
        witness: None,
        notes: Vec::new(),
    })
}

/// `lambda_min(DL^mode_<) >= -1e-8 max(1, ||DL||_F)`.
pub fn check_positive_semidefinite(g: &GainGraph, ord: &VertexOrdering, mode: Mode) -> Result<TheoremVerdict> {
    let s = spectrum_of(&dl(g, ord, mode)?)?;
    Ok(TheoremVerdict {
        theorem: TheoremId::PositiveSemidefinite(mode),
        holds: s.is_positive_semidefinite(),
        lhs: s.min(),
        rhs: -s.zero_threshold(),
        slack: s.min() + s.zero_threshold(),
        witness: None,
        notes: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn triangle(c: UnitGain) -> GainGraph {
        GainGraph::new(3, [(0, 1, UnitGain::one()), (1, 2, UnitGain::one()), (0, 2, c)]).unwrap()
    }

    #[test]
    fn balance_nullity_examples() {
        let one = UnitGain::one();
        let zeta = SwitchingFunction::new(vec![UnitGain::i(), UnitGain::pi_fraction(1, 3), one, -one]);
        let balanced = switch(&GainGraph::cycle(&[one; 4]).unwrap(), &zeta).unwrap();
        for mode in Mode::BOTH {
            let v = check_balance_nullity(&balanced, &VertexOrdering::standard(4), mode).unwrap();
            assert!(v.holds && v.lhs == 1.0 && v.slack >= 0.0, "{v:?}");
            let v = check_balance_nullity(&triangle(-one), &VertexOrdering::standard(3).reverse(), mode).unwrap();
            assert!(v.holds && v.lhs == 0.0 && v.slack > 0.0);
            assert!(matches!(v.witness, Some(Witness::Cycle(_))));
        }
        let single = GainGraph::new(1, []).unwrap();
        let v = check_balance_nullity(&single, &VertexOrdering::standard(1), Mode::Max).unwrap();
        assert!(v.holds && v.lhs == 1.0);
    }

    #[test]
    fn balanced_cospectral_examples() {
        let tree = GainGraph::path(&[UnitGain::i(), UnitGain::pi_fraction(5, 6), UnitGain::pi_fraction(-1, 4)]).unwrap();
        assert!(check_balanced_cospectral(&tree, &tol()).unwrap().holds);
        let one = UnitGain::one();
        let c4 = GainGraph::cycle(&[UnitGain::i(), one, one, one]).unwrap();
        let v = check_balanced_cospectral(&c4, &tol()).unwrap();
        assert!(v.holds);
        assert!(v.notes[0].contains("matrices_equal=false"));
        // C_5 with gain e^{i pi/5} on every forward edge, switched back to cycle gain 1
        let mut gains = vec![UnitGain::pi_fraction(1, 5); 5];
        gains[4] = UnitGain::pi_fraction(-4, 5);
        let c5 = GainGraph::cycle(&gains).unwrap();
        assert!(balance(&c5).is_balanced());
        assert!(check_balanced_cospectral(&c5, &tol()).unwrap().holds);
    }

    #[test]
    fn seven_equivalences_examples() {
        let balanced = GainGraph::complete(4, UnitGain::one()).unwrap();
        let v = check_seven_equivalences(&balanced).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(Witness::Statements(vec![true; 7])));
        let v = check_seven_equivalences(&triangle(-UnitGain::one())).unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, Some(Witness::Statements(vec![false; 7])));
    }

    #[test]
    fn wiener_examples() {
        for n in 2..7 {
            let k = GainGraph::complete(n, UnitGain::one()).unwrap();
            let v = check_wiener_lower_bound(&k, &VertexOrdering::standard(n), Mode::Max, &tol()).unwrap();
            assert!(v.holds);
            assert!((v.lhs - n as f64).abs() < 1e-9 && (v.rhs - n as f64).abs() < 1e-12);
            assert!(v.slack.abs() < 1e-9);
            assert_eq!(v.notes.len(), 1);
        }
        let p3 = GainGraph::path(&[UnitGain::one(), UnitGain::one()]).unwrap();
        let v = check_wiener_lower_bound(&p3, &VertexOrdering::standard(3), Mode::Min, &tol()).unwrap();
        assert!(v.holds && v.rhs == 4.0 && v.lhs > 4.0);
        let single = GainGraph::new(1, []).unwrap();
        assert!(check_wiener_lower_bound(&single, &VertexOrdering::standard(1), Mode::Max, &tol()).is_err());
    }

    #[test]
    fn upper_bound_examples() {
        let neg = GainGraph::complete(4, UnitGain::minus_one()).unwrap();
        let v = check_dq_upper_bound(&neg, &tol()).unwrap();
        assert!(v.holds && (v.lhs - 6.0).abs() < 1e-9 && (v.rhs - 6.0).abs() < 1e-9);
        assert!(matches!(v.witness, Some(Witness::Switching(_))));
        let ones = GainGraph::complete(4, UnitGain::one()).unwrap();
        let v = check_dq_upper_bound(&ones, &tol()).unwrap();
        assert!(v.holds && (v.lhs - 4.0).abs() < 1e-9 && v.slack > 1.0);

        for n in 2..8 {
            let neg = GainGraph::complete(n, UnitGain::minus_one()).unwrap();
            let v = check_transmission_upper_bound(&neg, &tol()).unwrap();
            assert!(v.holds && (v.lhs - 2.0 * (n as f64 - 1.0)).abs() < 1e-9);
        }
        let v = check_transmission_upper_bound(&GainGraph::complete(3, UnitGain::one()).unwrap(), &tol()).unwrap();
        assert!(v.holds && (v.lhs - 3.0).abs() < 1e-9 && v.rhs == 4.0);

        let tree = GainGraph::path(&[UnitGain::i(), UnitGain::pi_fraction(2, 3), UnitGain::one()]).unwrap();
        let v = check_dq_upper_bound(&tree, &tol()).unwrap();
        assert!(v.holds && v.slack > 1e-3);

        let c4 = GainGraph::cycle(&[UnitGain::i(), UnitGain::one(), UnitGain::one(), UnitGain::one()]).unwrap();
        assert_eq!(check_dq_upper_bound(&c4, &tol()).unwrap_err(), Error::Incompatible);
        assert_eq!(check_transmission_upper_bound(&c4, &tol()).unwrap_err(), Error::Incompatible);
    }

    #[test]
    fn switching_cospectral_examples() {
        let g = GainGraph::complete(4, UnitGain::pi_fraction(1, 3)).unwrap();
        let zeta = SwitchingFunction::new(vec![UnitGain::i(), UnitGain::pi_fraction(-1, 6), UnitGain::one(), UnitGain::minus_one()]);
        assert!(check_switching_cospectral(&g, &zeta, &tol()).unwrap().holds);
        let v = check_switching_cospectral(&g, &SwitchingFunction::identity(4), &tol()).unwrap();
        assert!(v.holds && v.lhs == 0.0);
    }

    #[test]
    fn psd_and_factorization() {
        let g = GainGraph::cycle(&[UnitGain::i(), UnitGain::one(), UnitGain::pi_fraction(2, 3), UnitGain::one(), UnitGain::one()]).unwrap();
        for mode in Mode::BOTH {
            assert!(check_positive_semidefinite(&g, &VertexOrdering::standard(5), mode).unwrap().holds);
            let wg = WeightedGainGraph::from_auxiliary(&g, &VertexOrdering::standard(5), mode).unwrap();
            let o = EdgeOrientation::canonical(wg.base().edge_count());
            assert!(check_incidence_factorization(&wg, &o, &tol()).unwrap().holds);
        }
    }
}
