//! Automorphism groups of colored graphs, orbits, transitivity predicates
//! and canonical forms.

mod canon;
mod refine;
mod search;

use thiserror::Error;

use crate::graph::{ColoredGraph, Graph, Partition};
use crate::perm::{PermGroup, Permutation};
use crate::separators::vertex_connectivity;
use crate::util::UnionFind;

pub use canon::{canonical_form, canonical_form_with, Canonical, CanonicalForm};

/// Hard cap on the vertex count accepted by [`brute_force_aut`].
pub const BRUTE_FORCE_MAX_N: usize = 9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutError {
    #[error("brute force is limited to {BRUTE_FORCE_MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("graph is not edge-transitive")]
    NotEdgeTransitive,
    #[error("graph is disconnected")]
    Disconnected,
}

#[derive(Clone, Debug)]
pub struct AutResult {
    pub group: PermGroup,
    pub vertex_orbits: Partition,
    /// Orbits on the edges, as blocks of indices into `Graph::edges`.
    pub edge_orbits: Partition,
}

impl AutResult {
    fn from_group(g: &Graph, group: PermGroup) -> Self {
        let vertex_orbits = group.orbits();
        let mut uf = UnionFind::new(g.m());
        for gamma in group.generators() {
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                let j = g
                    .edge_index(gamma.image(u), gamma.image(v))
                    .expect("automorphisms map edges to edges");
                uf.union(i, j);
            }
        }
        let edge_orbits = Partition::from_labels(&uf.labels());
        AutResult {
            group,
            vertex_orbits,
            edge_orbits,
        }
    }

    pub fn is_vertex_transitive(&self) -> bool {
        self.vertex_orbits.len() <= 1
    }

    pub fn is_edge_transitive(&self) -> bool {
        self.edge_orbits.len() <= 1
    }
}

/// The group of color- and adjacency-preserving permutations of `g`.
pub fn automorphisms(g: &ColoredGraph) -> AutResult {
    let out = search::search_automorphisms(g);
    let group = PermGroup::from_strong_generators(g.n(), out.generators, out.base)
        .expect("generators act on the vertex set");
    AutResult::from_group(&g.graph, group)
}

pub fn is_vertex_transitive(g: &ColoredGraph) -> bool {
    automorphisms(g).is_vertex_transitive()
}

/// Transitivity on unordered edges; edgeless graphs count as edge-transitive.
pub fn is_edge_transitive(g: &ColoredGraph) -> bool {
    automorphisms(g).is_edge_transitive()
}

/// Enumerates every automorphism by backtracking over all bijections that
/// respect colors and adjacency. Intended as a test oracle.
pub fn brute_force_automorphisms(g: &ColoredGraph) -> Result<Vec<Permutation>, AutError> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(AutError::TooLarge(n));
    }
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &ColoredGraph,
        v: usize,
        images: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let n = g.n();
        if v == n {
            out.push(Permutation::new(images.clone()).expect("bijection"));
            return;
        }
        for w in 0..n {
            if used[w] || g.color(w) != g.color(v) {
                continue;
            }
            let consistent =
                (0..v).all(|u| g.graph.has_edge(u, v) == g.graph.has_edge(images[u], w));
            if !consistent {
                continue;
            }
            images[v] = w;
            used[w] = true;
            rec(g, v + 1, images, used, out);
            used[w] = false;
        }
        images[v] = usize::MAX;
    }
    rec(g, 0, &mut images, &mut used, &mut out);
    Ok(out)
}

/// Group generated by all automorphisms found by [`brute_force_automorphisms`].
pub fn brute_force_aut(g: &ColoredGraph) -> Result<PermGroup, AutError> {
    let elements = brute_force_automorphisms(g)?;
    let mut group = PermGroup::trivial(g.n());
    for e in &elements {
        if !group.contains(e) {
            group = group.extend(std::slice::from_ref(e)).expect("same degree");
        }
    }
    debug_assert_eq!(group.order_u64(), Some(elements.len() as u64));
    Ok(group)
}

/// Checks that a connected edge-transitive graph has vertex connectivity at
/// least its minimum degree.
pub fn check_mader(g: &Graph) -> Result<bool, AutError> {
    if !g.is_connected() {
        return Err(AutError::Disconnected);
    }
    if !automorphisms(&ColoredGraph::uncolored(g.clone())).is_edge_transitive() {
        return Err(AutError::NotEdgeTransitive);
    }
    let kappa = vertex_connectivity(g).map_err(|_| AutError::Disconnected)?;
    Ok(kappa >= g.min_degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn plain(g: Graph) -> ColoredGraph {
        ColoredGraph::uncolored(g)
    }

    fn order(g: &ColoredGraph) -> u64 {
        automorphisms(g).group.order_u64().unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(order(&plain(cycle(5).unwrap())), 10);
        assert_eq!(order(&plain(complete_bipartite(3, 3).unwrap())), 72);
        assert_eq!(order(&plain(petersen())), 120);
        assert_eq!(order(&plain(complete(6).unwrap())), 720);
        assert_eq!(order(&plain(Graph::empty(1))), 1);
        let p3 = ColoredGraph::new(path(3).unwrap(), vec![1, 0, 2]).unwrap();
        assert_eq!(order(&p3), 1);
    }

    #[test]
    fn brute_force_oracle() {
        assert_eq!(brute_force_aut(&plain(complete(3).unwrap())).unwrap().order_u64(), Some(6));
        assert_eq!(brute_force_aut(&plain(Graph::empty(1))).unwrap().order_u64(), Some(1));
        assert_eq!(brute_force_aut(&plain(cycle(6).unwrap())).unwrap().order_u64(), Some(12));
        assert_eq!(brute_force_aut(&plain(petersen())), Err(AutError::TooLarge(10)));
    }

    #[test]
    fn petersen_matches_brute_force_count() {
        // Oracle: exhaustive count of Petersen automorphisms, computed on the
        // fly since brute_force_aut caps at 9 vertices.
        let g = petersen();
        let mut count = 0;
        let mut images = [usize::MAX; 10];
        fn rec(g: &Graph, v: usize, images: &mut [usize; 10], count: &mut usize) {
            if v == 10 {
                *count += 1;
                return;
            }
            for w in 0..10 {
                if images[..v].contains(&w) {
                    continue;
                }
                if (0..v).all(|u| g.has_edge(u, v) == g.has_edge(images[u], w)) {
                    images[v] = w;
                    rec(g, v + 1, images, count);
                }
            }
            images[v] = usize::MAX;
        }
        rec(&g, 0, &mut images, &mut count);
        assert_eq!(count, 120);
    }

    #[test]
    fn transitivity() {
        let k23 = automorphisms(&plain(complete_bipartite(2, 3).unwrap()));
        assert!(!k23.is_vertex_transitive() && k23.is_edge_transitive());
        let pet = automorphisms(&plain(petersen()));
        assert!(pet.is_vertex_transitive() && pet.is_edge_transitive());
        let p4 = automorphisms(&plain(path(4).unwrap()));
        assert!(!p4.is_vertex_transitive() && !p4.is_edge_transitive());
        assert_eq!(p4.edge_orbits.len(), 2);
    }

    #[test]
    fn path_end_stabilizer_is_trivial() {
        let aut = automorphisms(&plain(path(4).unwrap()));
        assert_eq!(aut.group.order_u64(), Some(2));
        assert!(aut.group.point_stabilizer(0).unwrap().is_trivial());
    }

    #[test]
    fn mader() {
        assert_eq!(check_mader(&cycle(5).unwrap()), Ok(true));
        assert_eq!(check_mader(&complete(4).unwrap()), Ok(true));
        assert_eq!(check_mader(&petersen()), Ok(true));
        assert_eq!(check_mader(&path(4).unwrap()), Err(AutError::NotEdgeTransitive));
        assert_eq!(check_mader(&Graph::empty(2)), Err(AutError::Disconnected));
    }

    #[test]
    fn canonical_forms_identify_relabelings() {
        let g = plain(petersen());
        let perm = [3, 7, 1, 9, 0, 2, 8, 5, 4, 6];
        let h = plain(petersen().relabel(&perm));
        assert_eq!(canonical_form(&g).form, canonical_form(&h).form);
        let c10 = plain(cycle(10).unwrap());
        assert_ne!(canonical_form(&g).form, canonical_form(&c10).form);
    }

    #[test]
    fn canonical_forms_respect_colors() {
        let a = ColoredGraph::new(path(3).unwrap(), vec![0, 0, 1]).unwrap();
        let b = ColoredGraph::new(path(3).unwrap(), vec![1, 0, 0]).unwrap();
        let c = ColoredGraph::new(path(3).unwrap(), vec![0, 1, 0]).unwrap();
        assert_eq!(canonical_form(&a).form, canonical_form(&b).form);
        assert_ne!(canonical_form(&a).form, canonical_form(&c).form);
    }
}
