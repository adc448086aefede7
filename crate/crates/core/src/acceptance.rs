//! The acceptance suite: ten exact checks over exhaustive corpora, random
//! instances and the generated families.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automorphism::{automorphisms, brute_force_aut, check_mader};
use crate::families::{
    biregular_degrees, biregular_family, biregular_order, complete, complete_bipartite, cycle,
    petersen, small_corpus, twisted_grid, CorpusFilters,
};
use crate::graph::{cartesian_product, is_biregular, twin_classes, ColoredGraph, Graph};
use crate::minors::{action_on_minor, find_minor, hadwiger_number, invariant_contraction, is_clique_minor_free, validate_model};
use crate::oracle::partition_minor_table;
use crate::pebble::{plan_to_minor_model, replay_and_validate, solve_pebble};
use crate::perm::{composition_factors, constructions, min_theta_degree, FactorKind, PermGroup, Permutation};
use crate::separators::{
    all_min_separators, is_separator, leftmost_among, leftmost_min_separator, max_disjoint_paths,
    min_separator_size, min_separators_through, sides, uncross_cap, uncross_cup, double_matching_paths,
};
use crate::structure::{decompose, regular_abelian_orbit_check, verify_tree, StructureError};

#[derive(Clone, Debug)]
pub struct AcceptanceConfig {
    pub corpus_max_n: usize,
    pub random_instances: usize,
    pub seed: u64,
}

impl Default for AcceptanceConfig {
    fn default() -> Self {
        AcceptanceConfig {
            corpus_max_n: 8,
            random_instances: 500,
            seed: 0x5eed,
        }
    }
}

/// One violated check. `tag` names the property, `witness` the object.
#[derive(Clone, Debug)]
pub struct Failure {
    pub tag: &'static str,
    pub witness: String,
}

/// Checks whose failure is a documented consequence of an incorrect
/// expectation rather than of the implementation.
pub const KNOWN_DEFECTS: &[(u8, &str, &str)] = &[
    (2, "hadwiger Petersen", "the Petersen graph has Hadwiger number 5, not 6"),
    (6, "biregular twin-free", "members with t = 2 or r = h >= 2 have twins"),
    (6, "twisted grid edge-transitive", "the twisted grid is edge-transitive only for some (t, k)"),
];

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Failure>,
    pub notes: Vec<String>,
    pub seconds: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Every failure is listed in [`KNOWN_DEFECTS`].
    KnownDefect,
    Fail,
}

impl CriterionResult {
    pub fn outcome(&self) -> Outcome {
        if self.failures.is_empty() {
            Outcome::Pass
        } else if self.failures.iter().all(|f| known_defect(self.id, f.tag).is_some()) {
            Outcome::KnownDefect
        } else {
            Outcome::Fail
        }
    }
}

pub fn known_defect(id: u8, tag: &str) -> Option<&'static str> {
    KNOWN_DEFECTS
        .iter()
        .find(|(c, t, _)| *c == id && *t == tag)
        .map(|(_, _, why)| *why)
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.outcome() {
            Outcome::Pass => "PASS".to_string(),
            Outcome::Fail => "FAIL".to_string(),
            Outcome::KnownDefect => {
                let mut tags: Vec<&str> = self.failures.iter().map(|x| x.tag).collect();
                tags.sort_unstable();
                tags.dedup();
                let why: Vec<&str> = tags.iter().filter_map(|t| known_defect(self.id, t)).collect();
                format!("FAIL (known expectation defect: {})", why.join("; "))
            }
        };
        write!(
            f,
            "criterion {:>2} {:<30} {status}  [{} checked, {} failed, {:.1}s]",
            self.id,
            self.name,
            self.checked,
            self.failures.len(),
            self.seconds
        )?;
        for n in &self.notes {
            write!(f, "\n    {n}")?;
        }
        let mut shown: BTreeMap<&str, usize> = BTreeMap::new();
        for x in &self.failures {
            let c = shown.entry(x.tag).or_default();
            *c += 1;
            if *c <= 3 {
                write!(f, "\n    {}: {}", x.tag, x.witness)?;
            }
        }
        for (tag, c) in shown.into_iter().filter(|&(_, c)| c > 3) {
            write!(f, "\n    {tag}: {} more", c - 3)?;
        }
        Ok(())
    }
}

/// Runs every criterion in order.
pub fn run_acceptance(cfg: &AcceptanceConfig) -> Vec<CriterionResult> {
    let corpus = small_corpus(cfg.corpus_max_n, &CorpusFilters::default())
        .expect("corpus order within range");
    let criteria: Vec<Box<dyn Fn() -> CriterionResult + '_>> = vec![
        Box::new(|| automorphism_oracle(&corpus)),
        Box::new(|| minor_oracle(&corpus)),
        Box::new(|| menger_uncrossing(cfg)),
        Box::new(|| double_matching(cfg)),
        Box::new(pebble_lemma),
        Box::new(family_fidelity),
        Box::new(|| theta_certification(&corpus)),
        Box::new(|| mader(&corpus)),
        Box::new(|| invariant_minor(&corpus)),
        Box::new(regular_abelian),
    ];
    criteria
        .iter()
        .map(|run| {
            let start = Instant::now();
            let mut r = run();
            r.seconds = start.elapsed().as_secs_f64();
            r
        })
        .collect()
}

/// 0 iff every criterion passes.
pub fn exit_code(results: &[CriterionResult]) -> i32 {
    i32::from(results.iter().any(|r| r.outcome() != Outcome::Pass))
}

fn edges_str(g: &Graph) -> String {
    format!("n={} {:?}", g.n(), g.edges())
}

fn collect<T: Send>(items: Vec<Vec<T>>) -> Vec<T> {
    items.into_iter().flatten().collect()
}

fn fail(tag: &'static str, witness: impl Into<String>) -> Failure {
    Failure {
        tag,
        witness: witness.into(),
    }
}

fn automorphism_oracle(corpus: &[Graph]) -> CriterionResult {
    let failures = collect(
        corpus
            .par_iter()
            .map(|g| {
                let cg = ColoredGraph::uncolored(g.clone());
                let fast = automorphisms(&cg).group;
                let Ok(slow) = brute_force_aut(&cg) else {
                    return vec![fail("oracle", edges_str(g))];
                };
                let mut out = Vec::new();
                if fast.order() != slow.order() {
                    out.push(fail("order", format!("{} vs {}: {}", fast.order(), slow.order(), edges_str(g))));
                }
                let mutual = fast.generators().iter().all(|x| slow.contains(x))
                    && slow.generators().iter().all(|x| fast.contains(x));
                if !mutual {
                    out.push(fail("generators", edges_str(g)));
                }
                out
            })
            .collect(),
    );
    CriterionResult {
        id: 1,
        name: "automorphism oracle",
        checked: corpus.len(),
        failures,
        notes: vec![],
        seconds: 0.0,
    }
}

fn minor_patterns() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("K5", complete(5).unwrap()),
        ("K6", complete(6).unwrap()),
        ("K2,2", complete_bipartite(2, 2).unwrap()),
        ("K3,3", complete_bipartite(3, 3).unwrap()),
    ]
}

fn minor_oracle(corpus: &[Graph]) -> CriterionResult {
    let patterns = minor_patterns();
    let graphs: Vec<Graph> = patterns.iter().map(|(_, p)| p.clone()).collect();
    let mut failures = collect(
        corpus
            .par_iter()
            .map(|host| {
                let table = partition_minor_table(host, &graphs);
                let mut out = Vec::new();
                for ((name, p), &expected) in patterns.iter().zip(&table) {
                    let found = match find_minor(p, host) {
                        Ok(Some(model)) => {
                            if validate_model(&model).is_err() {
                                out.push(fail("invalid model", format!("{name} in {}", edges_str(host))));
                            }
                            true
                        }
                        Ok(None) => false,
                        Err(e) => {
                            out.push(fail("undecided", format!("{name} in {}: {e}", edges_str(host))));
                            continue;
                        }
                    };
                    if found != expected {
                        out.push(fail(
                            "oracle disagreement",
                            format!("{name} in {}: search {found}, oracle {expected}", edges_str(host)),
                        ));
                    }
                }
                out
            })
            .collect(),
    );
    let mut spots: Vec<(&'static str, String, Graph, usize)> = vec![("hadwiger K5", "K5".into(), complete(5).unwrap(), 5)];
    for n in 3..=10 {
        spots.push(("hadwiger cycle", format!("C{n}"), cycle(n).unwrap(), 3));
    }
    spots.push(("hadwiger Petersen", "Petersen".into(), petersen(), 6));
    let mut notes = Vec::new();
    for (tag, name, g, expected) in &spots {
        match hadwiger_number(g) {
            Ok(h) if h == *expected => {}
            Ok(h) => failures.push(fail(tag, format!("{name}: computed {h}, expected {expected}"))),
            Err(e) => failures.push(fail(tag, format!("{name}: {e}"))),
        }
    }
    notes.push(format!("{} hosts x {} patterns, {} spot values", corpus.len(), patterns.len(), spots.len()));
    CriterionResult {
        id: 2,
        name: "minor oracle agreement",
        checked: corpus.len() * patterns.len() + spots.len(),
        failures,
        notes,
        seconds: 0.0,
    }
}

fn random_connected(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.5);
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges_lossy(n, edges).expect("indices in range")
}

fn subset(x: &[usize], y: &[usize]) -> bool {
    x.iter().all(|v| y.contains(v))
}

fn menger_instance(g: &Graph, a: &[usize], b: &[usize]) -> Vec<Failure> {
    let w = || format!("{} A={a:?} B={b:?}", edges_str(g));
    let mut out = Vec::new();
    let (Ok(k), Ok(paths)) = (min_separator_size(g, a, b), max_disjoint_paths(g, a, b)) else {
        return vec![fail("error", w())];
    };
    if k != paths.len() || !paths.is_valid_in(g) {
        out.push(fail("menger", format!("separator {k}, paths {}: {}", paths.len(), w())));
    }
    let Ok(all) = all_min_separators(g, a, b) else {
        return vec![fail("error", w())];
    };
    if all.iter().any(|s| s.separator.len() != k) {
        out.push(fail("menger", format!("exhaustive size differs: {}", w())));
    }
    let mut on_min: Vec<usize> = all.iter().flat_map(|s| s.separator.clone()).collect();
    on_min.sort_unstable();
    on_min.dedup();
    for v in on_min {
        let through = min_separators_through(g, a, b, v).expect("checked above");
        let fast = leftmost_min_separator(g, a, b, v);
        match (fast, leftmost_among(&through)) {
            (Ok(f), Ok(e)) if f.separator == e.separator => {}
            (f, e) => out.push(fail(
                "leftmost",
                format!("v={v} flow {:?} exhaustive {:?}: {}", f.map(|s| s.separator), e.map(|s| s.separator), w()),
            )),
        }
        for (i, s) in through.iter().enumerate() {
            for t in &through[i + 1..] {
                let cap = uncross_cap(s, t);
                let cup = uncross_cup(s, t);
                let cap_sides = sides(g, a, b, &cap);
                let ok = cap.len() == k
                    && is_separator(g, a, b, &cap)
                    && cap.contains(&v)
                    && subset(&cap_sides.left_side, &s.left_side)
                    && subset(&cap_sides.left_side, &t.left_side)
                    && cup.len() + cap.len() == 2 * k
                    && is_separator(g, a, b, &cup);
                if !ok {
                    out.push(fail(
                        "uncrossing",
                        format!("v={v} S={:?} S'={:?} cap={cap:?} cup={cup:?}: {}", s.separator, t.separator, w()),
                    ));
                }
            }
        }
    }
    out
}

fn menger_uncrossing(cfg: &AcceptanceConfig) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let instances: Vec<(Graph, Vec<usize>, Vec<usize>)> = (0..cfg.random_instances)
        .map(|_| {
            let n = rng.gen_range(4..=12);
            let g = random_connected(&mut rng, n);
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(&mut rng);
            let ka = rng.gen_range(1..=3);
            let kb = rng.gen_range(1..=3.min(n - ka));
            let mut a = vs[..ka].to_vec();
            let mut b = vs[ka..ka + kb].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            (g, a, b)
        })
        .collect();
    let failures = collect(instances.par_iter().map(|(g, a, b)| menger_instance(g, a, b)).collect());
    CriterionResult {
        id: 3,
        name: "Menger and uncrossing",
        checked: instances.len(),
        failures,
        notes: vec![],
        seconds: 0.0,
    }
}

/// Biregular coupling: left vertex `i` is joined to right positions
/// `i*d + s mod |right|`, `s < d`, through the relabeling `perm`.
fn coupling(left: &[usize], right: &[usize], d: usize, perm: &[usize]) -> Vec<(usize, usize)> {
    let b = right.len();
    left.iter()
        .enumerate()
        .flat_map(|(i, &u)| (0..d).map(move |s| (u, right[perm[(i * d + s) % b]])))
        .collect()
}

fn double_matching(cfg: &AcceptanceConfig) -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xd0b1e);
    let mut triples = Vec::new();
    for a in 1..=8usize {
        for b in a..=8usize {
            let degrees: Vec<usize> = (1..=b).filter(|d| a * d % b == 0).collect();
            for &d1 in &degrees {
                for &d2 in &degrees {
                    let av: Vec<usize> = (0..a).collect();
                    let bv: Vec<usize> = (a..a + b).collect();
                    let cv: Vec<usize> = (a + b..2 * a + b).collect();
                    let mut p1: Vec<usize> = (0..b).collect();
                    let mut p2 = p1.clone();
                    p1.shuffle(&mut rng);
                    p2.shuffle(&mut rng);
                    let mut edges = coupling(&av, &bv, d1, &p1);
                    edges.extend(coupling(&cv, &bv, d2, &p2));
                    for set in [&av, &bv, &cv] {
                        for (i, &u) in set.iter().enumerate() {
                            for &v in &set[i + 1..] {
                                if rng.gen_bool(0.3) {
                                    edges.push((u, v));
                                }
                            }
                        }
                    }
                    let g = Graph::new(2 * a + b, edges).expect("couplings are simple");
                    triples.push((g, av, bv, cv));
                }
            }
        }
    }
    let failures = collect(
        triples
            .par_iter()
            .map(|(g, a, b, c)| {
                let precondition = matches!(is_biregular(g, a, b), Ok(Some((d, _))) if d > 0)
                    && matches!(is_biregular(g, b, c), Ok(Some((d, _))) if d > 0);
                if !precondition {
                    return vec![fail("generator", edges_str(g))];
                }
                match double_matching_paths(g, a, b, c) {
                    Ok(p) if p.len() == a.len() && p.is_valid_in(g) => vec![],
                    Ok(p) => vec![fail("paths", format!("{} of {}: {}", p.len(), a.len(), edges_str(g)))],
                    Err(e) => vec![fail("paths", format!("{e}: {}", edges_str(g)))],
                }
            })
            .collect(),
    );
    CriterionResult {
        id: 4,
        name: "double matching",
        checked: triples.len(),
        failures,
        notes: vec![],
        seconds: 0.0,
    }
}

fn pebble_lemma() -> CriterionResult {
    let filters = CorpusFilters {
        min_n: Some(4),
        biconnected: true,
        non_cycle: true,
        ..Default::default()
    };
    let hosts = small_corpus(7, &filters).expect("corpus order within range");
    let results: Vec<(Vec<Failure>, usize)> = hosts
        .par_iter()
        .map(|h| {
            let plan = match solve_pebble(h) {
                Ok(p) => p,
                Err(e) => return (vec![fail("solve", format!("{e}: {}", edges_str(h)))], 0),
            };
            let replay = replay_and_validate(&plan);
            if !replay.legal || !replay.all_met() {
                return (vec![fail("replay", edges_str(h))], plan.moves.len());
            }
            match plan_to_minor_model(&plan) {
                Ok(m) if m.pattern.n() == h.n() - 1 && validate_model(&m).is_ok() => (vec![], plan.moves.len()),
                Ok(_) => (vec![fail("model", edges_str(h))], plan.moves.len()),
                Err(e) => (vec![fail("model", format!("{e}: {}", edges_str(h)))], plan.moves.len()),
            }
        })
        .collect();
    let longest = results.iter().map(|r| r.1).max().unwrap_or(0);
    CriterionResult {
        id: 5,
        name: "pebble lemma",
        checked: hosts.len(),
        failures: collect(results.into_iter().map(|r| r.0).collect()),
        notes: vec![format!("longest plan: {longest} moves")],
        seconds: 0.0,
    }
}

fn family_fidelity() -> CriterionResult {
    let mut params = Vec::new();
    for t in 2..=4 {
        for h in 1..=5 {
            for r in 1..=h {
                params.push((t, h, r));
            }
        }
    }
    let mut failures = collect(
        params
            .par_iter()
            .map(|&(t, h, r)| {
                let w = format!("biregular({t},{h},{r})");
                let fam = biregular_family(t, h, r).expect("parameters in range");
                let g = &fam.graph;
                let mut out = Vec::new();
                if g.n() != biregular_order(t, h, r) {
                    out.push(fail("biregular order", format!("{w}: {}", g.n())));
                }
                let degrees = is_biregular(g, &fam.u_side, &fam.v_side).ok().flatten();
                if degrees != Some(biregular_degrees(h, r)) {
                    out.push(fail("biregular degrees", format!("{w}: {degrees:?}")));
                }
                if !g.is_connected() {
                    out.push(fail("biregular connected", w.clone()));
                }
                let twins = twin_classes(g);
                if twins.len() != g.n() {
                    let class = twins.blocks().iter().find(|c| c.len() > 1).cloned().unwrap_or_default();
                    out.push(fail("biregular twin-free", format!("{w}: twins {class:?}")));
                }
                let aut = automorphisms(&ColoredGraph::uncolored(g.clone()));
                if !aut.is_edge_transitive() {
                    out.push(fail("biregular edge-transitive", format!("{w}: {} edge orbits", aut.edge_orbits.len())));
                }
                out
            })
            .collect(),
    );
    let mut grids = Vec::new();
    for t in 3..=8 {
        for k in 3..=8 {
            grids.push((t, k));
        }
    }
    let mut non_et = Vec::new();
    for (t, k) in &grids {
        let w = format!("twisted_grid({t},{k})");
        let g = twisted_grid(*t, *k).expect("parameters in range");
        if !(g.is_regular() && g.degree(0) == 4) {
            failures.push(fail("twisted grid 4-regular", w.clone()));
        }
        if !g.is_connected() {
            failures.push(fail("twisted grid connected", w.clone()));
        }
        let aut = automorphisms(&ColoredGraph::uncolored(g));
        if !aut.is_vertex_transitive() {
            failures.push(fail("twisted grid vertex-transitive", w.clone()));
        }
        if !aut.is_edge_transitive() {
            non_et.push(format!("({t},{k})"));
            failures.push(fail("twisted grid edge-transitive", format!("{w}: {} edge orbits", aut.edge_orbits.len())));
        }
    }
    let notes = vec![format!(
        "{} biregular members (t in 2..=4), {} twisted grids; not edge-transitive grids: {}",
        params.len(),
        grids.len(),
        if non_et.is_empty() { "none".into() } else { non_et.join(" ") }
    )];
    CriterionResult {
        id: 6,
        name: "family fidelity",
        checked: params.len() + grids.len(),
        failures,
        notes,
        seconds: 0.0,
    }
}

fn theta_certification(corpus: &[Graph]) -> CriterionResult {
    struct Row {
        failures: Vec<Failure>,
        k5_free: bool,
        factors: Vec<FactorKind>,
        other_orders: Vec<BigUint>,
        theta: Option<usize>,
    }
    let rows: Vec<Row> = corpus
        .par_iter()
        .map(|g| {
            let cg = ColoredGraph::uncolored(g.clone());
            let mut row = Row {
                failures: vec![],
                k5_free: false,
                factors: vec![],
                other_orders: vec![],
                theta: None,
            };
            let tree = match decompose(&cg) {
                Ok(t) => t,
                Err(e) => {
                    row.failures.push(fail("decompose", format!("{e}: {}", edges_str(g))));
                    return row;
                }
            };
            match verify_tree(&tree, &cg) {
                Ok(v) if v.ok() => {}
                Ok(v) => row.failures.push(fail(
                    "tree order",
                    format!("{} vs {}: {}", v.tree_order, v.aut_order, edges_str(g)),
                )),
                Err(e) => row.failures.push(fail("tree order", format!("{e}: {}", edges_str(g)))),
            }
            match is_clique_minor_free(g, 5) {
                Ok(true) => row.k5_free = true,
                Ok(false) => return row,
                Err(e) => {
                    row.failures.push(fail("K5 test", format!("{e}: {}", edges_str(g))));
                    return row;
                }
            }
            row.theta = min_theta_degree(&tree).ok();
            if !row.theta.is_some_and(|d| d <= 8) {
                row.failures.push(fail("theta", format!("min d {:?}: {}", row.theta, edges_str(g))));
            }
            match composition_factors(&automorphisms(&cg).group) {
                Ok(fs) => {
                    for f in fs {
                        if f.kind == FactorKind::Other {
                            row.other_orders.push(f.order.clone());
                        }
                        row.factors.push(f.kind);
                    }
                }
                Err(e) => row.failures.push(fail("factors", format!("{e}: {}", edges_str(g)))),
            }
            row
        })
        .collect();
    let k5_free = rows.iter().filter(|r| r.k5_free).count();
    let mut distribution: BTreeMap<String, usize> = BTreeMap::new();
    for r in &rows {
        for f in &r.factors {
            let key = match f {
                FactorKind::Cyclic { p } => format!("C{p}"),
                FactorKind::Alternating { m } => format!("A{m}"),
                FactorKind::Other => "other".into(),
            };
            *distribution.entry(key).or_default() += 1;
        }
    }
    let max_other = rows.iter().flat_map(|r| r.other_orders.iter()).max();
    let max_theta = rows.iter().filter_map(|r| r.theta).max();
    let dist: Vec<String> = distribution.iter().map(|(k, v)| format!("{k}:{v}")).collect();
    let notes = vec![
        format!("K5-minor-free sub-corpus: {k5_free} graphs, largest certified d: {max_theta:?}"),
        format!("factor distribution: {}", dist.join(" ")),
        format!(
            "largest non-cyclic non-alternating factor order: {}",
            max_other.map_or("none".into(), ToString::to_string)
        ),
    ];
    CriterionResult {
        id: 7,
        name: "theta certification",
        checked: corpus.len(),
        failures: collect(rows.into_iter().map(|r| r.failures).collect()),
        notes,
        seconds: 0.0,
    }
}

fn mader(corpus: &[Graph]) -> CriterionResult {
    let mut graphs: Vec<(String, Graph)> = corpus
        .par_iter()
        .filter(|g| automorphisms(&ColoredGraph::uncolored((*g).clone())).is_edge_transitive())
        .map(|g| (edges_str(g), g.clone()))
        .collect();
    let corpus_et = graphs.len();
    let mut family = Vec::new();
    for t in 3..=8 {
        for k in 3..=8 {
            family.push((format!("twisted_grid({t},{k})"), twisted_grid(t, k).unwrap()));
        }
    }
    for t in 2..=4 {
        for h in 1..=5 {
            for r in 1..=h {
                family.push((format!("biregular({t},{h},{r})"), biregular_family(t, h, r).unwrap().graph));
            }
        }
    }
    let family_total = family.len();
    let (et, skipped): (Vec<_>, Vec<_>) = family
        .into_par_iter()
        .partition(|(_, g)| automorphisms(&ColoredGraph::uncolored(g.clone())).is_edge_transitive());
    graphs.extend(et);
    let failures = collect(
        graphs
            .par_iter()
            .map(|(name, g)| match check_mader(g) {
                Ok(true) => vec![],
                Ok(false) => vec![fail("connectivity", name.clone())],
                Err(e) => vec![fail("hypothesis", format!("{e}: {name}"))],
            })
            .collect(),
    );
    CriterionResult {
        id: 8,
        name: "Mader connectivity",
        checked: graphs.len(),
        failures,
        notes: vec![format!(
            "{corpus_et} edge-transitive corpus graphs; {} of {family_total} family members edge-transitive, the rest lack the hypothesis",
            family_total - skipped.len()
        )],
        seconds: 0.0,
    }
}

fn invariant_minor(corpus: &[Graph]) -> CriterionResult {
    let results: Vec<(Vec<Failure>, usize)> = corpus
        .par_iter()
        .map(|g| {
            let cg = ColoredGraph::uncolored(g.clone());
            let aut = automorphisms(&cg);
            let mut out = Vec::new();
            let orbits = aut.edge_orbits.len();
            for o in 0..orbits {
                let w = || format!("orbit {o}: {}", edges_str(g));
                let c = match invariant_contraction(&cg, &aut, o) {
                    Ok(c) => c,
                    Err(e) => {
                        out.push(fail("contraction", format!("{e}: {}", w())));
                        continue;
                    }
                };
                match action_on_minor(&cg, &aut, &c.blocks) {
                    Ok((image, kernel)) => {
                        if image.order() * kernel.order() != *aut.group.order() {
                            out.push(fail(
                                "order",
                                format!("{} * {} != {}: {}", image.order(), kernel.order(), aut.group.order(), w()),
                            ));
                        }
                        if !image.generators().iter().all(|x| c.graph.is_automorphism(x.images())) {
                            out.push(fail("image", w()));
                        }
                    }
                    Err(e) => out.push(fail("kernel", format!("{e}: {}", w()))),
                }
            }
            (out, orbits)
        })
        .collect();
    let checked = results.iter().map(|r| r.1).sum();
    CriterionResult {
        id: 9,
        name: "invariant minor homomorphism",
        checked,
        failures: collect(results.into_iter().map(|r| r.0).collect()),
        notes: vec![format!("{} graphs", corpus.len())],
        seconds: 0.0,
    }
}

fn rotation(n: usize, shift: usize) -> Permutation {
    Permutation::new((0..n).map(|i| (i + shift) % n).collect()).expect("rotation is a bijection")
}

fn regular_abelian() -> CriterionResult {
    let mut failures = Vec::new();
    let mut checked = 0;
    let mut accept = |name: String, g: &Graph, group: &PermGroup, alpha: u64| {
        checked += 1;
        match regular_abelian_orbit_check(g, group, alpha) {
            Ok(r) if r.holds() => {}
            Ok(r) => failures.push(fail("accept", format!("{name}: {r:?}"))),
            Err(e) => failures.push(fail("accept", format!("{name}: {e}"))),
        }
    };
    for p in [3usize, 5, 7, 11, 13] {
        accept(format!("C{p} rotations"), &cycle(p).unwrap(), &constructions::cyclic(p), p as u64 - 1);
    }
    accept("C15 rotations".into(), &cycle(15).unwrap(), &constructions::cyclic(15), 2);
    let torus = cartesian_product(&cycle(5).unwrap(), &cycle(7).unwrap());
    let z35 = PermGroup::new(35, vec![rotation(35, 7), {
        let images = (0..35).map(|v| v / 7 * 7 + (v % 7 + 1) % 7).collect();
        Permutation::new(images).unwrap()
    }])
    .unwrap();
    accept("C5 x C7 rotations".into(), &torus, &z35, 4);
    let mut reject = |name: &str, g: &Graph, group: &PermGroup, alpha: u64, want_subgroup_error: bool| {
        checked += 1;
        match regular_abelian_orbit_check(g, group, alpha) {
            Err(StructureError::NotASubgroup) if want_subgroup_error => {}
            Err(StructureError::HypothesisViolated(_)) if !want_subgroup_error => {}
            other => failures.push(fail("reject", format!("{name}: {other:?}"))),
        }
    };
    let k4 = complete(4).unwrap();
    reject("Aut(K4), alpha 2", &k4, &automorphisms(&ColoredGraph::uncolored(k4.clone())).group, 2, false);
    reject("C6 rotations, alpha 1", &cycle(6).unwrap(), &constructions::cyclic(6), 1, false);
    let not_aut = PermGroup::new(5, vec![Permutation::from_cycles(5, &[&[0, 2]]).unwrap()]).unwrap();
    reject("transposition on C5", &cycle(5).unwrap(), &not_aut, 1, true);
    CriterionResult {
        id: 10,
        name: "regular abelian orbit",
        checked,
        failures,
        notes: vec![],
        seconds: 0.0,
    }
}
