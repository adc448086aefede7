//! Recursive decomposition of `Aut(G)` into direct products, wreath products
//! with symmetric top groups, and extensions by the action on an orbit.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automorphism::{automorphisms, canonical_form, AutResult, CanonicalForm};
use crate::graph::{ColoredGraph, Graph};
use crate::perm::{
    composition_factors, is_gamma_d, is_regular_on, min_theta_degree, prime_factors_exceed,
    PermError, PermGroup, Permutation, StructureTree,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("tree order {tree} differs from |Aut| = {aut}")]
    OrderMismatch { tree: String, aut: String },
    #[error("group is not a subgroup of Aut(G)")]
    NotASubgroup,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

/// Smallest orbit by size, ties broken by smallest vertex.
pub fn min_orbit(aut: &AutResult) -> Vec<usize> {
    smallest_block(aut.vertex_orbits.blocks())
}

fn smallest_block(blocks: &[Vec<usize>]) -> Vec<usize> {
    let mut best = blocks
        .iter()
        .min_by_key(|b| (b.len(), b.iter().min().copied()))
        .cloned()
        .unwrap_or_default();
    best.sort_unstable();
    best
}

/// Deletes `removed` and recolors every other vertex by its old color and
/// its adjacency to each removed vertex.
fn individualize_and_delete(g: &ColoredGraph, removed: &[usize]) -> ColoredGraph {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !removed.contains(v)).collect();
    let keys: Vec<(u32, Vec<bool>)> = keep
        .iter()
        .map(|&v| {
            let bits = removed.iter().map(|&o| g.graph.has_edge(v, o)).collect();
            (g.color(v), bits)
        })
        .collect();
    let (sub, _) = g.graph.induced_subgraph(&keep);
    ColoredGraph::from_keys(sub, &keys)
}

/// Structure tree whose order equals `|Aut(g)|`.
pub fn decompose(g: &ColoredGraph) -> Result<StructureTree, StructureError> {
    if g.n() == 0 {
        return Ok(StructureTree::Trivial);
    }
    if !g.graph.is_connected() {
        return decompose_components(g);
    }
    let aut = automorphisms(g);
    let tree = decompose_connected(g, &aut)?;
    if &tree.tree_order() != aut.group.order() {
        return Err(StructureError::OrderMismatch {
            tree: tree.tree_order().to_string(),
            aut: aut.group.order().to_string(),
        });
    }
    Ok(tree)
}

fn decompose_components(g: &ColoredGraph) -> Result<StructureTree, StructureError> {
    let mut types: BTreeMap<CanonicalForm, (Vec<usize>, usize)> = BTreeMap::new();
    for comp in g.graph.components() {
        let form = canonical_form(&g.induced(&comp)).form;
        types.entry(form).or_insert((comp, 0)).1 += 1;
    }
    let mut ordered: Vec<(Vec<usize>, usize)> = types.into_values().collect();
    ordered.sort();
    let mut children = Vec::new();
    for (rep, t) in ordered {
        let sub = decompose(&g.induced(&rep))?;
        if t > 1 {
            children.push(StructureTree::wreath_sym(sub, t));
        } else if sub != StructureTree::Trivial {
            children.push(sub);
        }
    }
    Ok(match children.len() {
        0 => StructureTree::Trivial,
        1 => children.pop().unwrap(),
        _ => StructureTree::direct(children),
    })
}

fn decompose_connected(g: &ColoredGraph, aut: &AutResult) -> Result<StructureTree, StructureError> {
    if aut.group.is_trivial() {
        return Ok(StructureTree::Trivial);
    }
    if let Some(fixed) = aut.vertex_orbits.blocks().iter().filter(|o| o.len() == 1).map(|o| o[0]).min() {
        return decompose(&individualize_and_delete(g, &[fixed]));
    }
    let orbit = min_orbit(aut);
    let quotient = aut.group.restrict_to(&orbit)?;
    let factors = composition_factors(&quotient).ok();
    let kernel = decompose(&individualize_and_delete(g, &orbit))?;
    Ok(StructureTree::extension_by(kernel, &quotient, factors))
}

pub fn tree_order(tree: &StructureTree) -> BigUint {
    tree.tree_order()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeVerification {
    #[serde(with = "crate::util::decimal")]
    pub aut_order: BigUint,
    #[serde(with = "crate::util::decimal")]
    pub tree_order: BigUint,
    /// Smallest `d` for which the tree certifies membership in Θ_d, when
    /// the composition-factor computations stayed within their caps.
    pub min_theta_d: Option<usize>,
}

impl TreeVerification {
    pub fn ok(&self) -> bool {
        self.aut_order == self.tree_order
    }
}

/// Recomputes `|Aut(g)|`, compares it with the tree, and records the least
/// Θ degree the tree certifies.
pub fn verify_tree(tree: &StructureTree, g: &ColoredGraph) -> Result<TreeVerification, StructureError> {
    tree.check_consistency()?;
    let aut_order = if g.graph.is_connected() {
        automorphisms(g).group.order().clone()
    } else {
        component_aut_order(g)
    };
    Ok(TreeVerification {
        aut_order,
        tree_order: tree.tree_order(),
        min_theta_d: min_theta_degree(tree).ok(),
    })
}

/// `|Aut|` of a disconnected colored graph: per isomorphism type of
/// component, `|Aut(C)|^t · t!`.
fn component_aut_order(g: &ColoredGraph) -> BigUint {
    let mut types: BTreeMap<CanonicalForm, (BigUint, usize)> = BTreeMap::new();
    for comp in g.graph.components() {
        let c = canonical_form(&g.induced(&comp));
        types.entry(c.form).or_insert((c.aut.group.order().clone(), 0)).1 += 1;
    }
    types.into_values().fold(BigUint::one(), |acc, (o, t)| {
        let fact: BigUint = (1..=t).map(BigUint::from).product();
        acc * o.pow(t as u32) * fact
    })
}

/// Whether the action of `Aut(g)` on a minimum orbit lies in Γ_d.
pub fn min_orbit_gamma_check(g: &ColoredGraph, d: usize) -> Result<bool, StructureError> {
    if !g.graph.is_connected() {
        return Err(StructureError::HypothesisViolated("graph is disconnected".into()));
    }
    let aut = automorphisms(g);
    let orbit = min_orbit(&aut);
    let induced = aut.group.restrict_to(&orbit)?;
    Ok(is_gamma_d(&induced, d)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularAbelianReport {
    pub orbit: Vec<usize>,
    pub regular: bool,
    pub abelian: bool,
    pub fixed_point_free: bool,
    /// An element moving every vertex, when the subgroup fixes no vertex.
    pub witness: Option<Permutation>,
}

impl RegularAbelianReport {
    pub fn holds(&self) -> bool {
        self.regular && self.abelian && (!self.fixed_point_free || self.witness.is_some())
    }
}

const ELEMENT_SCAN_CAP: u64 = 100_000;

fn derangement(group: &PermGroup) -> Option<Permutation> {
    let moves_all = |p: &Permutation| (0..p.degree()).all(|x| p.image(x) != x);
    if let Some(g) = group.generators().iter().find(|g| moves_all(g)) {
        return Some(g.clone());
    }
    let order = group.order_u64().filter(|&o| o <= ELEMENT_SCAN_CAP)?;
    (0..order).map(|r| group.unrank(r)).find(moves_all)
}

/// Checks that a subgroup of `Aut(g)` whose order has only primes above
/// `alpha` acts regularly and abelianly on a minimum orbit.
pub fn regular_abelian_orbit_check(
    g: &Graph,
    subgroup: &PermGroup,
    alpha: u64,
) -> Result<RegularAbelianReport, StructureError> {
    if !g.is_connected() {
        return Err(StructureError::HypothesisViolated("graph is disconnected".into()));
    }
    let plain = ColoredGraph::uncolored(g.clone());
    if subgroup.degree() != g.n()
        || !subgroup.generators().iter().all(|s| plain.is_automorphism(s.images()))
    {
        return Err(StructureError::NotASubgroup);
    }
    let bound = alpha.max(2);
    if !prime_factors_exceed(subgroup, bound) {
        return Err(StructureError::HypothesisViolated(format!(
            "|group| = {} has a prime factor at most {bound}",
            subgroup.order()
        )));
    }
    let orbits = subgroup.orbits();
    let orbit = smallest_block(orbits.blocks());
    let regular = is_regular_on(subgroup, &orbit)?;
    let abelian = subgroup.restrict_to(&orbit)?.is_abelian();
    let fixed_point_free = orbits.blocks().iter().all(|o| o.len() > 1);
    let witness = if fixed_point_free { derangement(subgroup) } else { None };
    Ok(RegularAbelianReport {
        orbit,
        regular,
        abelian,
        fixed_point_free,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, petersen};
    use crate::perm::{certify_theta, constructions::cyclic};

    fn plain(g: Graph) -> ColoredGraph {
        ColoredGraph::uncolored(g)
    }

    #[test]
    fn three_squares() {
        let c4 = cycle(4).unwrap();
        let g = c4.disjoint_union(&c4).disjoint_union(&c4);
        let tree = decompose(&plain(g.clone())).unwrap();
        assert!(matches!(tree, StructureTree::WreathSym { t: 3, .. }));
        assert_eq!(tree.tree_order(), BigUint::from(3072u32));
        let v = verify_tree(&tree, &plain(g)).unwrap();
        assert!(v.ok());
        assert_eq!(v.min_theta_d, Some(1));
    }

    #[test]
    fn star() {
        let tree = decompose(&plain(complete_bipartite(1, 3).unwrap())).unwrap();
        assert_eq!(tree, StructureTree::wreath_sym(StructureTree::Trivial, 3));
        assert_eq!(tree.tree_order(), BigUint::from(6u32));
    }

    #[test]
    fn hexagon() {
        let tree = decompose(&plain(cycle(6).unwrap())).unwrap();
        match &tree {
            StructureTree::ExtensionBy { kernel, quotient, .. } => {
                assert_eq!(**kernel, StructureTree::Trivial);
                assert_eq!(quotient.degree, 6);
                assert_eq!(quotient.order, BigUint::from(12u32));
            }
            other => panic!("unexpected tree {other:?}"),
        }
    }

    #[test]
    fn petersen_and_complete() {
        let tree = decompose(&plain(petersen())).unwrap();
        assert_eq!(tree.tree_order(), BigUint::from(120u32));
        assert!(certify_theta(&tree, 5).unwrap());
        assert!(!certify_theta(&tree, 4).unwrap());
        let tree = decompose(&plain(complete(6).unwrap())).unwrap();
        assert_eq!(tree.tree_order(), BigUint::from(720u32));
        assert_eq!(min_theta_degree(&tree).unwrap(), 6);
    }

    #[test]
    fn gamma_on_min_orbit() {
        assert!(min_orbit_gamma_check(&plain(cycle(6).unwrap()), 1).unwrap());
        assert!(min_orbit_gamma_check(&plain(petersen()), 5).unwrap());
        assert!(!min_orbit_gamma_check(&plain(petersen()), 4).unwrap());
        assert!(min_orbit_gamma_check(&plain(Graph::empty(1)), 1).unwrap());
    }

    #[test]
    fn regular_abelian() {
        let r = regular_abelian_orbit_check(&cycle(7).unwrap(), &cyclic(7), 6).unwrap();
        assert!(r.holds() && r.fixed_point_free);
        assert_eq!(r.witness.unwrap().image(0), 1);
        let r = regular_abelian_orbit_check(&cycle(15).unwrap(), &cyclic(15), 2).unwrap();
        assert!(r.holds());
        let k4 = complete(4).unwrap();
        let aut = automorphisms(&plain(k4.clone())).group;
        assert!(matches!(
            regular_abelian_orbit_check(&k4, &aut, 2),
            Err(StructureError::HypothesisViolated(_))
        ));
        assert_eq!(
            regular_abelian_orbit_check(&cycle(6).unwrap(), &cyclic(6).point_stabilizer(0).unwrap(), 2)
                .map(|_| ()),
            Ok(())
        );
        let p4 = crate::families::path(4).unwrap();
        assert_eq!(
            regular_abelian_orbit_check(&p4, &cyclic(4), 2),
            Err(StructureError::NotASubgroup)
        );
    }
}
