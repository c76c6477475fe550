//! Randomized property sweeps.
//!
//! Sample `i` draws everything from stream `i` of a ChaCha8 generator seeded
//! with the sweep seed, so a sample can be replayed on its own and results are
//! aggregated in sample order.

use std::collections::BTreeMap;

use gainspec_core::laplacian::EdgeOrientation;
use gainspec_core::theorems::{
    check_balance_nullity, check_balanced_cospectral, check_dq_upper_bound, check_incidence_factorization,
    check_positive_semidefinite, check_seven_equivalences, check_switching_cospectral, check_transmission_upper_bound,
    check_wiener_lower_bound, TheoremVerdict,
};
use gainspec_core::{is_distance_compatible, GainGraph, Mode, Result, Tolerances, VertexOrdering, WeightedGainGraph};
use rand::Rng;
use serde_json::{json, Value};

use crate::document::{snap, to_json, VerdictRecord};
use crate::graph_file::write_graph;
use crate::random;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// All-ones graphs switched by a random `zeta`.
    Balanced,
    /// Rejection-sampled unbalanced graphs, `n >= 3`.
    Unbalanced,
    /// Distance compatible graphs, each paired with a random `zeta`.
    Compatible,
    /// `(K_n, -1)` switched by a random `zeta`.
    NegativeComplete,
    /// Random gain graphs with random positive weights.
    Weighted,
    /// Unrestricted random gain graphs.
    Random,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Balanced,
        Family::Unbalanced,
        Family::Compatible,
        Family::NegativeComplete,
        Family::Weighted,
        Family::Random,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Balanced => "balanced",
            Family::Unbalanced => "unbalanced",
            Family::Compatible => "compatible",
            Family::NegativeComplete => "negative-complete",
            Family::Weighted => "weighted",
            Family::Random => "random",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepConfig {
    /// Largest vertex count; samples use `n` in `[2, max_n]` (`[3, max_n]` for unbalanced).
    pub max_n: usize,
    pub samples: usize,
    pub seed: u64,
    pub tolerances: Tolerances,
}

/// One evaluated check, with enough context to replay it.
#[derive(Clone, Debug)]
pub struct Record {
    pub sample: usize,
    pub family: Family,
    pub verdict: TheoremVerdict,
    /// Graph file text, with an `order` line when the check used an ordering.
    pub graph: String,
    /// Extra inputs such as a switching function or weights.
    pub context: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tally {
    pub checked: usize,
    pub failed: usize,
    pub min_slack: f64,
}

#[derive(Clone, Debug)]
pub struct SweepReport {
    pub config: SweepConfig,
    pub records: Vec<Record>,
}

fn vertex_count<R: Rng>(rng: &mut R, lo: usize, max_n: usize) -> usize {
    rng.random_range(lo..=max_n.max(lo))
}

struct Sampler<'a> {
    sample: usize,
    tol: &'a Tolerances,
    out: Vec<Record>,
}

impl Sampler<'_> {
    fn push(&mut self, family: Family, g: &GainGraph, ord: Option<&VertexOrdering>, context: Option<String>, verdict: TheoremVerdict) {
        self.out.push(Record { sample: self.sample, family, verdict, graph: write_graph(g, ord), context });
    }

    /// Checks that apply to any connected graph.
    fn general<R: Rng>(&mut self, rng: &mut R, family: Family, g: &GainGraph, orderings: usize) -> Result<()> {
        let n = g.vertex_count();
        for _ in 0..orderings {
            let ord = random::ordering(rng, n);
            for mode in Mode::BOTH {
                self.push(family, g, Some(&ord), None, check_balance_nullity(g, &ord, mode)?);
                self.push(family, g, Some(&ord), None, check_positive_semidefinite(g, &ord, mode)?);
                if n >= 2 {
                    self.push(family, g, Some(&ord), None, check_wiener_lower_bound(g, &ord, mode, self.tol)?);
                }
            }
        }
        self.push(family, g, None, None, check_balanced_cospectral(g, self.tol)?);
        self.push(family, g, None, None, check_seven_equivalences(g)?);
        Ok(())
    }

    fn bounds(&mut self, family: Family, g: &GainGraph) -> Result<()> {
        if is_distance_compatible(g)? {
            self.push(family, g, None, None, check_dq_upper_bound(g, self.tol)?);
            self.push(family, g, None, None, check_transmission_upper_bound(g, self.tol)?);
        }
        Ok(())
    }
}

/// All checks of one sample.
pub fn run_sample(config: &SweepConfig, sample: usize) -> Result<Vec<Record>> {
    let mut rng = random::stream_rng(config.seed, sample as u64);
    let max_n = config.max_n.max(2);
    let mut s = Sampler { sample, tol: &config.tolerances, out: Vec::new() };

    let n = vertex_count(&mut rng, 2, max_n);
    let g = random::balanced_graph(&mut rng, n);
    s.general(&mut rng, Family::Balanced, &g, 3)?;
    s.bounds(Family::Balanced, &g)?;

    if max_n >= 3 {
        let n = vertex_count(&mut rng, 3, max_n);
        let g = random::unbalanced_graph(&mut rng, n);
        s.general(&mut rng, Family::Unbalanced, &g, 3)?;
        s.bounds(Family::Unbalanced, &g)?;
    }

    let n = vertex_count(&mut rng, 2, max_n);
    let g = random::compatible_graph(&mut rng, n);
    let zeta = random::switching_function(&mut rng, n);
    let context = zeta.values().iter().map(|z| z.to_string()).collect::<Vec<_>>().join(" ");
    s.push(Family::Compatible, &g, None, Some(format!("zeta {context}")), check_switching_cospectral(&g, &zeta, s.tol)?);
    s.general(&mut rng, Family::Compatible, &g, 1)?;
    s.bounds(Family::Compatible, &g)?;

    let n = vertex_count(&mut rng, 2, max_n);
    let g = random::negative_complete_class(&mut rng, n);
    s.bounds(Family::NegativeComplete, &g)?;
    s.general(&mut rng, Family::NegativeComplete, &g, 1)?;

    let n = vertex_count(&mut rng, 2, max_n);
    let g = random::gain_graph(&mut rng, n);
    let weights = random::weights(&mut rng, g.edge_count());
    let wg = WeightedGainGraph::new(g.clone(), weights.clone())?;
    let random_orientation: Vec<EdgeOrientation> = (0..g.edge_count())
        .map(|_| if rng.random_bool(0.5) { EdgeOrientation::Forward } else { EdgeOrientation::Backward })
        .collect();
    let weight_text = weights.iter().map(|w| format!("{w:?}")).collect::<Vec<_>>().join(" ");
    for orientation in [EdgeOrientation::canonical(g.edge_count()), random_orientation] {
        let verdict = check_incidence_factorization(&wg, &orientation, s.tol)?;
        s.push(Family::Weighted, &g, None, Some(format!("weights {weight_text}")), verdict);
    }

    let n = vertex_count(&mut rng, 2, max_n);
    let g = random::gain_graph(&mut rng, n);
    s.general(&mut rng, Family::Random, &g, 1)?;
    s.bounds(Family::Random, &g)?;

    Ok(s.out)
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepReport> {
    let mut records = Vec::new();
    for sample in 0..config.samples {
        records.extend(run_sample(config, sample)?);
    }
    Ok(SweepReport { config: *config, records })
}

impl SweepReport {
    pub fn all_hold(&self) -> bool {
        self.records.iter().all(|r| r.verdict.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.verdict.holds)
    }

    /// Records of one family whose theorem id starts with `prefix`.
    pub fn select<'a>(&'a self, family: Option<Family>, prefix: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records
            .iter()
            .filter(move |r| family.is_none_or(|f| r.family == f) && r.verdict.theorem.to_string().starts_with(prefix))
    }

    /// Per `(family, theorem)` counts.
    pub fn tallies(&self) -> BTreeMap<(Family, String), Tally> {
        let mut out: BTreeMap<(Family, String), Tally> = BTreeMap::new();
        for r in &self.records {
            let t = out
                .entry((r.family, r.verdict.theorem.to_string()))
                .or_insert(Tally { checked: 0, failed: 0, min_slack: f64::INFINITY });
            t.checked += 1;
            t.failed += usize::from(!r.verdict.holds);
            t.min_slack = t.min_slack.min(r.verdict.slack);
        }
        out
    }

    pub fn to_value(&self) -> Value {
        let tallies: Vec<Value> = self
            .tallies()
            .into_iter()
            .map(|((family, theorem), t)| {
                json!({
                    "family": family.as_str(),
                    "theorem_id": theorem,
                    "checked": t.checked,
                    "failed": t.failed,
                    "min_slack": snap(t.min_slack),
                })
            })
            .collect();
        let failures: Vec<Value> = self
            .failures()
            .map(|r| {
                json!({
                    "sample": r.sample,
                    "family": r.family.as_str(),
                    "graph": r.graph,
                    "context": r.context,
                    "verdict": serde_json::to_value(VerdictRecord::from(&r.verdict)).expect("serializable"),
                })
            })
            .collect();
        json!({
            "config": {
                "max_n": self.config.max_n,
                "samples": self.config.samples,
                "seed": self.config.seed,
                "cospectral_tolerance": self.config.tolerances.cospectral,
            },
            "checks": self.records.len(),
            "all_hold": self.all_hold(),
            "tallies": tallies,
            "failures": failures,
        })
    }

    pub fn to_json(&self) -> String {
        to_json(&self.to_value())
    }
}
