//! Per-graph analysis reports.

use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::automorphism::automorphisms;
use crate::families::{FamilyError, FamilySpec};
use crate::graph::{ColoredGraph, Graph};
use crate::minors::{hadwiger_number_with_budget, MinorError};
use crate::perm::{composition_factors_with, min_theta_degree, CompositionFactor, CompositionOptions, StructureTree};
use crate::separators::vertex_connectivity;
use crate::structure::{decompose, verify_tree};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub hadwiger_budget: u64,
    pub group_order_cap: BigUint,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            hadwiger_budget: 200_000,
            group_order_cap: BigUint::from(crate::perm::DEFAULT_ORDER_CAP),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Hadwiger {
    Exact { value: usize },
    LowerBound { value: usize, budget: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Factors {
    Computed { factors: Vec<CompositionFactor> },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub micros: u64,
}

/// Field order is the serialization order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    /// File labels of the vertices, when the input named them.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub vertex_connectivity: Option<usize>,
    pub regular_degree: Option<usize>,
    pub vertex_orbits: usize,
    pub edge_orbits: usize,
    pub vertex_transitive: bool,
    pub edge_transitive: bool,
    pub aut_order: String,
    pub composition_factors: Factors,
    pub structure: Option<StructureTree>,
    pub min_theta_d: Option<usize>,
    pub hadwiger: Hadwiger,
    /// Names of violated invariants, each with its witness.
    pub failures: Vec<String>,
    /// Wall-clock data; the only field outside the determinism guarantee.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    pub fn budget_exceeded(&self) -> bool {
        matches!(self.hadwiger, Hadwiger::LowerBound { .. })
    }

    /// The report without its timing, for determinism comparisons.
    pub fn untimed(&self) -> Report {
        Report {
            timing: None,
            ..self.clone()
        }
    }

    pub fn to_text(&self) -> String {
        let factors = match &self.composition_factors {
            Factors::Computed { factors } => {
                factors.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
            }
            Factors::Skipped { reason } => format!("skipped ({reason})"),
        };
        let hadwiger = match &self.hadwiger {
            Hadwiger::Exact { value } => value.to_string(),
            Hadwiger::LowerBound { value, budget } => format!(">= {value} (budget {budget})"),
        };
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let mut out = format!(
            "input: {}\nn: {}  m: {}  connected: {}  connectivity: {}  regular: {}\n\
             |Aut|: {}  vertex orbits: {}  edge orbits: {}  vertex-transitive: {}  edge-transitive: {}\n\
             composition factors: {}\nmin theta d: {}\nhadwiger: {}\n",
            self.input,
            self.n,
            self.m,
            self.connected,
            opt(self.vertex_connectivity),
            opt(self.regular_degree),
            self.aut_order,
            self.vertex_orbits,
            self.edge_orbits,
            self.vertex_transitive,
            self.edge_transitive,
            factors,
            opt(self.min_theta_d),
            hadwiger,
        );
        for f in &self.failures {
            out.push_str(&format!("FAILURE: {f}\n"));
        }
        out
    }
}

pub fn analyze(input: &str, g: &ColoredGraph, opts: &AnalyzeOptions) -> Report {
    let start = Instant::now();
    let graph = &g.graph;
    let aut = automorphisms(g);
    let connected = graph.is_connected();
    let copts = CompositionOptions {
        order_cap: opts.group_order_cap.clone(),
        ..CompositionOptions::default()
    };
    let composition_factors = match composition_factors_with(&aut.group, &copts) {
        Ok(factors) => Factors::Computed { factors },
        Err(e) => Factors::Skipped { reason: e.to_string() },
    };
    let mut failures = Vec::new();
    let structure = match decompose(g) {
        Ok(tree) => Some(tree),
        Err(e) => {
            failures.push(format!("decompose: {e}"));
            None
        }
    };
    if let Some(tree) = &structure {
        match verify_tree(tree, g) {
            Ok(v) if !v.ok() => failures.push(format!(
                "tree order {} differs from |Aut| {}",
                v.tree_order, v.aut_order
            )),
            Ok(_) => {}
            Err(e) => failures.push(format!("verify_tree: {e}")),
        }
    }
    let min_theta_d = structure.as_ref().and_then(|t| min_theta_degree(t).ok());
    let hadwiger = match hadwiger_number_with_budget(graph, opts.hadwiger_budget) {
        Ok(value) => Hadwiger::Exact { value },
        Err(MinorError::BudgetExceeded { lower_bound }) => Hadwiger::LowerBound {
            value: lower_bound.unwrap_or(0),
            budget: opts.hadwiger_budget,
        },
        Err(e) => {
            failures.push(format!("hadwiger: {e}"));
            Hadwiger::LowerBound {
                value: 0,
                budget: opts.hadwiger_budget,
            }
        }
    };
    Report {
        input: input.to_string(),
        labels: Vec::new(),
        n: graph.n(),
        m: graph.m(),
        connected,
        vertex_connectivity: vertex_connectivity(graph).ok(),
        regular_degree: (graph.n() > 0 && graph.is_regular()).then(|| graph.degree(0)),
        vertex_orbits: aut.vertex_orbits.len(),
        edge_orbits: aut.edge_orbits.len(),
        vertex_transitive: aut.is_vertex_transitive(),
        edge_transitive: aut.is_edge_transitive(),
        aut_order: aut.group.order().to_string(),
        composition_factors,
        structure,
        min_theta_d,
        hadwiger,
        failures,
        timing: Some(Timing {
            micros: start.elapsed().as_micros() as u64,
        }),
    }
}

/// One report per family member, in generation order, computed in parallel.
pub fn run_family(spec: &FamilySpec, opts: &AnalyzeOptions) -> Result<Vec<Report>, FamilyError> {
    let graphs = spec.graphs()?;
    let single = graphs.len() == 1;
    Ok(analyze_members(spec, graphs.into_iter().enumerate().collect(), single, opts))
}

/// Reports for `k` members chosen uniformly by `seed`, in generation order.
/// The seed only selects members; each report is the same as in
/// [`run_family`].
pub fn sample_family(
    spec: &FamilySpec,
    k: usize,
    seed: u64,
    opts: &AnalyzeOptions,
) -> Result<Vec<Report>, FamilyError> {
    let graphs = spec.graphs()?;
    let single = graphs.len() == 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen = sample(&mut rng, graphs.len(), k.min(graphs.len())).into_vec();
    chosen.sort_unstable();
    let members = chosen.into_iter().map(|i| (i, graphs[i].clone())).collect();
    Ok(analyze_members(spec, members, single, opts))
}

fn analyze_members(
    spec: &FamilySpec,
    members: Vec<(usize, Graph)>,
    single: bool,
    opts: &AnalyzeOptions,
) -> Vec<Report> {
    members
        .into_par_iter()
        .map(|(i, g)| {
            let input = if single {
                spec.to_string()
            } else {
                format!("{spec}#{i}")
            };
            analyze(&input, &ColoredGraph::uncolored(g), opts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{petersen, twisted_grid};

    #[test]
    fn petersen_report() {
        let r = analyze("petersen", &ColoredGraph::uncolored(petersen()), &AnalyzeOptions::default());
        assert_eq!(r.aut_order, "120");
        assert_eq!(r.hadwiger, Hadwiger::Exact { value: 5 });
        assert_eq!(r.min_theta_d, Some(5));
        assert!(r.failures.is_empty());
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn twisted_grid_report() {
        let opts = AnalyzeOptions {
            hadwiger_budget: 2_000,
            ..Default::default()
        };
        let r = analyze("twisted_grid:5,5", &ColoredGraph::uncolored(twisted_grid(5, 5).unwrap()), &opts);
        assert_eq!(r.regular_degree, Some(4));
        assert!(r.vertex_transitive && r.connected);
    }

    #[test]
    fn family_reports_follow_generation_order() {
        let spec: FamilySpec = "small_corpus:6".parse().unwrap();
        let reports = run_family(&spec, &AnalyzeOptions::default()).unwrap();
        assert_eq!(reports.len(), 1 + 1 + 2 + 6 + 21 + 112);
        assert_eq!(reports[0].input, "small_corpus:6#0");
        assert!(reports.iter().all(|r| r.failures.is_empty()));
        let sampled = sample_family(&spec, 5, 7, &AnalyzeOptions::default()).unwrap();
        assert_eq!(sampled.len(), 5);
        for r in &sampled {
            let i: usize = r.input.rsplit('#').next().unwrap().parse().unwrap();
            assert_eq!(r.untimed(), reports[i].untimed());
        }
    }
}
