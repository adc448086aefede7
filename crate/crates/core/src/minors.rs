//! Minor models, minor search, Hadwiger numbers, and contraction of an
//! invariant edge orbit together with the induced action on the minor.

use std::collections::HashSet;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphism::{canonical_form, AutResult, CanonicalForm};
use crate::families::{complete, complete_bipartite};
use crate::graph::{contract_partition, ColoredGraph, Graph, Partition};
use crate::perm::{PermError, PermGroup};

/// Default node budget for contraction searches.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MinorError {
    #[error("search budget exhausted (best known lower bound {lower_bound:?})")]
    BudgetExceeded { lower_bound: Option<usize> },
    #[error("edge orbit {0} does not exist")]
    NoSuchEdgeOrbit(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("kernel generator does not act blockwise by automorphisms")]
    KernelNotBlockwise,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub host: Graph,
    pub pattern: Graph,
    /// `branch[u]` is the host vertex set representing pattern vertex `u`.
    pub branch: Vec<Vec<usize>>,
}

/// Reason a candidate model is rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModelDefect {
    BranchCount,
    EmptyBranch(usize),
    OutOfRange(usize),
    Disjointness(usize),
    Connectivity(usize),
    EdgeCover(usize, usize),
}

impl MinorModel {
    pub fn is_valid(&self) -> bool {
        validate_model(self).is_ok()
    }
}

pub fn validate_model(m: &MinorModel) -> Result<(), ModelDefect> {
    let n = m.host.n();
    if m.branch.len() != m.pattern.n() {
        return Err(ModelDefect::BranchCount);
    }
    let mut owner = vec![usize::MAX; n];
    for (u, b) in m.branch.iter().enumerate() {
        if b.is_empty() {
            return Err(ModelDefect::EmptyBranch(u));
        }
        for &v in b {
            if v >= n {
                return Err(ModelDefect::OutOfRange(v));
            }
            if owner[v] != usize::MAX {
                return Err(ModelDefect::Disjointness(v));
            }
            owner[v] = u;
        }
    }
    for (u, b) in m.branch.iter().enumerate() {
        if !m.host.induces_connected(b) {
            return Err(ModelDefect::Connectivity(u));
        }
    }
    let mut covered = HashSet::new();
    for &(x, y) in m.host.edges() {
        let (a, b) = (owner[x], owner[y]);
        if a != usize::MAX && b != usize::MAX && a != b {
            covered.insert((a.min(b), a.max(b)));
        }
    }
    for &(u, v) in m.pattern.edges() {
        if !covered.contains(&(u, v)) {
            return Err(ModelDefect::EdgeCover(u, v));
        }
    }
    Ok(())
}

/// Injective homomorphism from `h` into `g` (subgraph embedding).
pub fn subgraph_embedding(h: &Graph, g: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() || h.m() > g.m() {
        return None;
    }
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&u| !placed[u])
            .max_by_key(|&u| {
                let back = h.neighbors(u).iter().filter(|&&w| placed[w]).count();
                (back, h.degree(u), std::cmp::Reverse(u))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; k];
    let mut used = vec![false; g.n()];
    fn rec(
        h: &Graph,
        g: &Graph,
        order: &[usize],
        i: usize,
        image: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let Some(&u) = order.get(i) else {
            return true;
        };
        for w in 0..g.n() {
            if used[w] || g.degree(w) < h.degree(u) {
                continue;
            }
            let ok = h
                .neighbors(u)
                .iter()
                .all(|&x| image[x] == usize::MAX || g.has_edge(image[x], w));
            if !ok {
                continue;
            }
            image[u] = w;
            used[w] = true;
            if rec(h, g, order, i + 1, image, used) {
                return true;
            }
            used[w] = false;
            image[u] = usize::MAX;
        }
        false
    }
    rec(h, g, &order, 0, &mut image, &mut used).then_some(image)
}

fn contract_edge(g: &Graph, parts: &[Vec<usize>], u: usize, v: usize) -> (Graph, Vec<Vec<usize>>) {
    let relabel = |x: usize| {
        if x == v {
            u
        } else if x > v {
            x - 1
        } else {
            x
        }
    };
    let h = Graph::from_edges_lossy(
        g.n() - 1,
        g.edges()
            .iter()
            .filter(|&&e| e != (u, v))
            .map(|&(a, b)| (relabel(a), relabel(b))),
    )
    .expect("contraction stays in range");
    let mut p = parts.to_vec();
    let merged = p.remove(v);
    p[u].extend(merged);
    (h, p)
}

/// Search over edge contractions, deduplicated up to isomorphism, looking
/// for a contraction that contains the pattern as a subgraph.
struct ContractionSearch<'a> {
    pattern: &'a Graph,
    budget: u64,
    nodes: u64,
    seen: HashSet<CanonicalForm>,
}

impl ContractionSearch<'_> {
    fn visit(&mut self, g: &Graph, parts: &[Vec<usize>]) -> Result<Option<Vec<Vec<usize>>>, ()> {
        let k = self.pattern.n();
        if g.n() < k || g.m() < self.pattern.m() {
            return Ok(None);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(());
        }
        if !self.seen.insert(canonical_form(&ColoredGraph::uncolored(g.clone())).form) {
            return Ok(None);
        }
        if let Some(phi) = subgraph_embedding(self.pattern, g) {
            return Ok(Some(phi.iter().map(|&w| parts[w].clone()).collect()));
        }
        if g.n() == k {
            return Ok(None);
        }
        for &(u, v) in g.edges() {
            let (h, p) = contract_edge(g, parts, u, v);
            if let Some(found) = self.visit(&h, &p)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }
}

/// A model of `pattern` in `host`, `None` if the completed search found
/// none, or `BudgetExceeded` if the search was cut short.
pub fn find_minor(pattern: &Graph, host: &Graph) -> Result<Option<MinorModel>, MinorError> {
    find_minor_with_budget(pattern, host, DEFAULT_BUDGET)
}

pub fn find_minor_with_budget(
    pattern: &Graph,
    host: &Graph,
    budget: u64,
) -> Result<Option<MinorModel>, MinorError> {
    if pattern.n() > host.n() {
        return Ok(None);
    }
    let mut search = ContractionSearch {
        pattern,
        budget,
        nodes: 0,
        seen: HashSet::new(),
    };
    let parts: Vec<Vec<usize>> = (0..host.n()).map(|v| vec![v]).collect();
    match search.visit(host, &parts) {
        Err(()) => Err(MinorError::BudgetExceeded { lower_bound: None }),
        Ok(None) => Ok(None),
        Ok(Some(mut branch)) => {
            branch.iter_mut().for_each(|b| b.sort_unstable());
            let model = MinorModel {
                host: host.clone(),
                pattern: pattern.clone(),
                branch,
            };
            debug_assert!(model.is_valid());
            Ok(Some(model))
        }
    }
}

/// Largest `h` with `K_h` a minor of `g`.
pub fn hadwiger_number(g: &Graph) -> Result<usize, MinorError> {
    hadwiger_number_with_budget(g, DEFAULT_BUDGET)
}

pub fn hadwiger_number_with_budget(g: &Graph, budget: u64) -> Result<usize, MinorError> {
    let mut h = match (g.n(), g.m()) {
        (0, _) => return Ok(0),
        (_, 0) => 1,
        _ => 2,
    };
    while h < g.n() {
        match find_minor_with_budget(&complete(h + 1).unwrap(), g, budget) {
            Ok(Some(_)) => h += 1,
            Ok(None) => break,
            Err(_) => return Err(MinorError::BudgetExceeded { lower_bound: Some(h) }),
        }
    }
    Ok(h)
}

/// True iff `g` has no `K_h` minor.
pub fn is_clique_minor_free(g: &Graph, h: usize) -> Result<bool, MinorError> {
    if h == 0 {
        return Ok(false);
    }
    Ok(find_minor(&complete(h).unwrap(), g)?.is_none())
}

/// A model of `K_{c,c}` in `g`.
pub fn find_kcc_minor(g: &Graph, c: usize) -> Result<Option<MinorModel>, MinorError> {
    find_minor(&complete_bipartite(c, c).unwrap(), g)
}

/// `⌈a·h·√(ln h)⌉`, the average-degree threshold forcing a `K_h` minor.
pub fn kostochka_alpha(a: f64, h: usize) -> u64 {
    let h = h as f64;
    (a * h * h.ln().max(0.0).sqrt()).ceil() as u64
}

/// Checks that the average degree of `g` does not exceed `α_{h'}` where
/// `h'` is the Hadwiger number.
pub fn kostochka_consistent(g: &Graph, a: f64) -> Result<bool, MinorError> {
    let h = hadwiger_number(g)?;
    let Ok(avg) = crate::graph::average_degree(g) else {
        return Ok(true);
    };
    Ok(avg <= Ratio::from_integer(kostochka_alpha(a, h)))
}

#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: ColoredGraph,
    /// Components of the chosen edge-orbit subgraph, in quotient vertex order.
    pub blocks: Partition,
    /// `block_of[v]` is the quotient vertex containing `v`.
    pub block_of: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum ColorKey {
    Kept(u32),
    Fresh(CanonicalForm),
}

/// Contracts the components of the subgraph formed by one edge orbit.
/// Contracted components get a fresh color per isomorphism type; untouched
/// vertices keep their colors.
pub fn invariant_contraction(
    g: &ColoredGraph,
    aut: &AutResult,
    edge_orbit: usize,
) -> Result<Contraction, MinorError> {
    let orbit = aut
        .edge_orbits
        .blocks()
        .get(edge_orbit)
        .ok_or(MinorError::NoSuchEdgeOrbit(edge_orbit))?;
    let edges: Vec<(usize, usize)> = orbit.iter().map(|&i| g.graph.edges()[i]).collect();
    let sub = Graph::new(g.n(), edges).expect("subgraph of a simple graph");
    let blocks = Partition::new(g.n(), sub.components()).expect("components partition the vertices");
    let (quotient, block_of) =
        contract_partition(&g.graph, &blocks).expect("components are connected");
    let keys: Vec<ColorKey> = blocks
        .blocks()
        .iter()
        .map(|b| match b.as_slice() {
            [v] => ColorKey::Kept(g.color(*v)),
            _ => ColorKey::Fresh(canonical_form(&g.induced(b)).form),
        })
        .collect();
    Ok(Contraction {
        graph: ColoredGraph::from_keys(quotient, &keys),
        blocks,
        block_of,
    })
}

/// Action of `Aut(g)` on an invariant block system, with the check that the
/// kernel acts on every block by automorphisms of the induced subgraph.
pub fn action_on_minor(
    g: &ColoredGraph,
    aut: &AutResult,
    blocks: &Partition,
) -> Result<(PermGroup, PermGroup), MinorError> {
    let (image, kernel) = aut.group.induced_action(blocks.blocks())?;
    for k in kernel.generators() {
        for b in blocks.blocks() {
            let sub = g.induced(b);
            let Some(r) = k.restrict(b) else {
                return Err(MinorError::KernelNotBlockwise);
            };
            if !sub.is_automorphism(r.images()) {
                return Err(MinorError::KernelNotBlockwise);
            }
        }
    }
    Ok((image, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::automorphisms;
    use crate::families::{cycle, path, petersen, wheel};

    #[test]
    fn validation_reasons() {
        let host = cycle(4).unwrap();
        let pattern = complete(2).unwrap();
        let ok = MinorModel {
            host: host.clone(),
            pattern: pattern.clone(),
            branch: vec![vec![0, 1], vec![2]],
        };
        assert_eq!(validate_model(&ok), Ok(()));
        let overlap = MinorModel {
            branch: vec![vec![0, 1], vec![1]],
            ..ok.clone()
        };
        assert_eq!(validate_model(&overlap), Err(ModelDefect::Disjointness(1)));
        let broken = MinorModel {
            branch: vec![vec![0, 2], vec![1]],
            ..ok.clone()
        };
        assert_eq!(validate_model(&broken), Err(ModelDefect::Connectivity(0)));
        let uncovered = MinorModel {
            host: Graph::new(4, [(0, 1), (2, 3)]).unwrap(),
            pattern,
            branch: vec![vec![0, 1], vec![2]],
        };
        assert_eq!(validate_model(&uncovered), Err(ModelDefect::EdgeCover(0, 1)));
    }

    #[test]
    fn petersen_spoke_contraction_is_k5() {
        let g = petersen();
        let model = MinorModel {
            host: g,
            pattern: complete(5).unwrap(),
            branch: (0..5).map(|i| vec![i, i + 5]).collect(),
        };
        assert!(model.is_valid());
    }

    #[test]
    fn clique_minors() {
        let w4 = wheel(4).unwrap();
        assert!(find_minor(&complete(4).unwrap(), &w4).unwrap().unwrap().is_valid());
        assert!(find_minor(&complete(4).unwrap(), &cycle(5).unwrap()).unwrap().is_none());
        let m = find_minor(&complete(5).unwrap(), &petersen()).unwrap().unwrap();
        assert!(m.is_valid());
        assert!(find_minor(&complete(6).unwrap(), &petersen()).unwrap().is_none());
        assert!(find_minor(&complete(7).unwrap(), &petersen()).unwrap().is_none());
    }

    #[test]
    fn hadwiger_numbers() {
        assert_eq!(hadwiger_number(&complete(5).unwrap()), Ok(5));
        assert_eq!(hadwiger_number(&cycle(7).unwrap()), Ok(3));
        assert_eq!(hadwiger_number(&path(4).unwrap()), Ok(2));
        assert_eq!(hadwiger_number(&Graph::empty(3)), Ok(1));
        assert_eq!(hadwiger_number(&petersen()), Ok(5));
        assert_eq!(
            hadwiger_number_with_budget(&petersen(), 1),
            Err(MinorError::BudgetExceeded { lower_bound: Some(2) })
        );
    }

    #[test]
    fn complete_bipartite_minors() {
        assert!(find_kcc_minor(&cycle(4).unwrap(), 2).unwrap().is_some());
        assert!(find_kcc_minor(&path(6).unwrap(), 2).unwrap().is_none());
        // Six branch sets cannot fit into five vertices.
        assert!(find_kcc_minor(&complete(5).unwrap(), 3).unwrap().is_none());
        assert!(find_kcc_minor(&complete(6).unwrap(), 3).unwrap().is_some());
        assert!(find_kcc_minor(&petersen(), 3).unwrap().is_some());
    }

    #[test]
    fn contraction_examples() {
        let matching = ColoredGraph::uncolored(Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap());
        let aut = automorphisms(&matching);
        assert_eq!(aut.edge_orbits.len(), 1);
        let c = invariant_contraction(&matching, &aut, 0).unwrap();
        assert_eq!((c.graph.n(), c.graph.graph.m()), (3, 0));
        let (image, kernel) = action_on_minor(&matching, &aut, &c.blocks).unwrap();
        assert_eq!((image.order_u64(), kernel.order_u64()), (Some(6), Some(8)));

        let p3 = ColoredGraph::uncolored(path(3).unwrap());
        let aut = automorphisms(&p3);
        assert_eq!(invariant_contraction(&p3, &aut, 0).unwrap().graph.n(), 1);

        let c6 = ColoredGraph::new(cycle(6).unwrap(), vec![0, 1, 0, 1, 0, 1]).unwrap();
        let aut = automorphisms(&c6);
        assert_eq!(aut.group.order_u64(), Some(6));
        assert_eq!(aut.edge_orbits.len(), 1);
        let c = invariant_contraction(&c6, &aut, 0).unwrap();
        assert_eq!(c.graph.n(), 1);
        let (image, kernel) = action_on_minor(&c6, &aut, &c.blocks).unwrap();
        assert_eq!((image.order_u64(), kernel.order_u64()), (Some(1), Some(6)));

        let singletons = Partition::singletons(6);
        let (image, kernel) = action_on_minor(&c6, &aut, &singletons).unwrap();
        assert_eq!((image.order_u64(), kernel.order_u64()), (Some(6), Some(1)));
        assert!(matches!(
            invariant_contraction(&c6, &aut, 3),
            Err(MinorError::NoSuchEdgeOrbit(3))
        ));
    }

    #[test]
    fn kostochka_threshold() {
        assert_eq!(kostochka_alpha(4.0, 1), 0);
        assert_eq!(kostochka_alpha(4.0, 2), 7);
        assert!(kostochka_consistent(&petersen(), 4.0).unwrap());
    }
}
