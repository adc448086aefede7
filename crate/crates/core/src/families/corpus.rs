//! Isomorphism-free generation of small connected graphs by canonical
//! augmentation: a graph is accepted as a child of its parent only when the
//! added vertex is equivalent to the canonically chosen deletion vertex.

use crate::automorphism::{automorphisms, canonical_form};
use crate::graph::{ColoredGraph, Graph};
use crate::minors::is_clique_minor_free;
use crate::util::UnionFind;

use super::FamilyError;

pub const CORPUS_MAX_N: usize = 9;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusFilters {
    /// Smallest order emitted.
    pub min_n: Option<usize>,
    pub biconnected: bool,
    pub edge_transitive: bool,
    /// Keep only graphs without a `K_h` minor.
    pub minor_free: Option<usize>,
    pub non_cycle: bool,
}

impl CorpusFilters {
    /// Applies one token: `min_n=K`, `biconnected`, `edge_transitive`,
    /// `minor_free=H` or `non_cycle`.
    pub fn apply_token(&mut self, token: &str) -> Result<(), FamilyError> {
        let err = || FamilyError::Parse(token.to_string());
        match token.split_once('=') {
            Some(("min_n", v)) => self.min_n = Some(v.parse().map_err(|_| err())?),
            Some(("minor_free", v)) => self.minor_free = Some(v.parse().map_err(|_| err())?),
            None if token == "biconnected" => self.biconnected = true,
            None if token == "edge_transitive" => self.edge_transitive = true,
            None if token == "non_cycle" => self.non_cycle = true,
            _ => return Err(err()),
        }
        Ok(())
    }

    pub fn tokens(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(k) = self.min_n {
            out.push(format!("min_n={k}"));
        }
        if self.biconnected {
            out.push("biconnected".into());
        }
        if self.edge_transitive {
            out.push("edge_transitive".into());
        }
        if let Some(h) = self.minor_free {
            out.push(format!("minor_free={h}"));
        }
        if self.non_cycle {
            out.push("non_cycle".into());
        }
        out
    }

    /// Graphs whose minor test exceeds the search budget are rejected.
    pub fn accepts(&self, g: &Graph) -> bool {
        self.min_n.is_none_or(|k| g.n() >= k)
            && (!self.biconnected || g.is_biconnected())
            && (!self.non_cycle || !g.is_cycle())
            && (!self.edge_transitive
                || automorphisms(&ColoredGraph::uncolored(g.clone())).is_edge_transitive())
            && self
                .minor_free
                .is_none_or(|h| is_clique_minor_free(g, h).unwrap_or(false))
    }
}

fn connected_without(g: &Graph, x: usize) -> bool {
    let mut keep = vec![true; g.n()];
    keep[x] = false;
    g.components_within(&keep).len() <= 1
}

/// Canonically relabeled child if adding vertex `v` is the canonical
/// augmentation of `g - v`.
fn accept(g: &Graph, v: usize) -> Option<Graph> {
    let candidates: Vec<usize> = (0..g.n()).filter(|&x| connected_without(g, x)).collect();
    let dmin = candidates.iter().map(|&x| g.degree(x)).min()?;
    if g.degree(v) != dmin {
        return None;
    }
    let canon = canonical_form(&ColoredGraph::uncolored(g.clone()));
    let chosen = candidates
        .into_iter()
        .filter(|&x| g.degree(x) == dmin)
        .max_by_key(|&x| canon.labeling[x])?;
    let orbit = canon.aut.vertex_orbits.block_map();
    (orbit[chosen] == orbit[v]).then(|| canon.form.to_colored_graph().graph)
}

/// Accepted children of `parent`, one per orbit of neighborhoods of the new
/// vertex under `Aut(parent)`.
fn children(parent: &Graph) -> Vec<Graph> {
    let n = parent.n();
    let aut = automorphisms(&ColoredGraph::uncolored(parent.clone()));
    let masks = 1usize << n;
    let mut uf = UnionFind::new(masks);
    for gamma in aut.group.generators() {
        for mask in 1..masks {
            let image = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .fold(0, |acc, i| acc | 1 << gamma.image(i));
            uf.union(mask, image);
        }
    }
    let mut out = Vec::new();
    for mask in 1..masks {
        if uf.find(mask) != mask {
            continue;
        }
        let extra = (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| (i, n));
        let child = Graph::new(n + 1, parent.edges().iter().copied().chain(extra))
            .expect("new edges are fresh");
        if let Some(c) = accept(&child, n) {
            out.push(c);
        }
    }
    out
}

/// Depth-first stream of connected graphs on `1..=max_n` vertices, one per
/// isomorphism class, each canonically labeled.
pub struct CorpusIter {
    max_n: usize,
    filters: CorpusFilters,
    stack: Vec<Graph>,
}

impl Iterator for CorpusIter {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(g) = self.stack.pop() {
            if g.n() < self.max_n {
                let mut kids = children(&g);
                kids.reverse();
                self.stack.extend(kids);
            }
            if self.filters.accepts(&g) {
                return Some(g);
            }
        }
        None
    }
}

pub fn small_corpus_iter(max_n: usize, filters: &CorpusFilters) -> Result<CorpusIter, FamilyError> {
    if max_n > CORPUS_MAX_N {
        return Err(FamilyError::TooLarge(max_n));
    }
    let stack = if max_n == 0 { Vec::new() } else { vec![Graph::empty(1)] };
    Ok(CorpusIter {
        max_n,
        filters: filters.clone(),
        stack,
    })
}

/// All corpus graphs, ordered by vertex count, then edge count, then edges.
pub fn small_corpus(max_n: usize, filters: &CorpusFilters) -> Result<Vec<Graph>, FamilyError> {
    let mut all: Vec<Graph> = small_corpus_iter(max_n, filters)?.collect();
    all.sort_by(|a, b| (a.n(), a.m(), a.edges()).cmp(&(b.n(), b.m(), b.edges())));
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;
    use crate::oracle::brute_force_connected_classes;

    fn exact(n: usize) -> CorpusFilters {
        CorpusFilters {
            min_n: Some(n),
            ..Default::default()
        }
    }

    #[test]
    fn counts_per_order() {
        let all = small_corpus(7, &CorpusFilters::default()).unwrap();
        let mut counts = [0usize; 8];
        all.iter().for_each(|g| counts[g.n()] += 1);
        assert_eq!(&counts[1..], &[1, 1, 2, 6, 21, 112, 853]);
        assert!(all.iter().all(Graph::is_connected));
    }

    #[test]
    fn matches_brute_force_classification() {
        for n in 1..=6 {
            let ours = small_corpus(n, &exact(n)).unwrap();
            assert_eq!(ours.len(), brute_force_connected_classes(n), "n = {n}");
        }
    }

    #[test]
    fn filters() {
        let f = CorpusFilters {
            min_n: Some(4),
            biconnected: true,
            non_cycle: true,
            ..Default::default()
        };
        let g = small_corpus(4, &f).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!((g[0].m(), g[1].m()), (5, 6));
        let k5_free = CorpusFilters {
            min_n: Some(5),
            minor_free: Some(5),
            ..Default::default()
        };
        assert_eq!(small_corpus(5, &k5_free).unwrap().len(), 20);
        assert!(!small_corpus(5, &k5_free).unwrap().contains(&complete(5).unwrap()));
        let et = CorpusFilters {
            edge_transitive: true,
            ..exact(4)
        };
        // P_4 is not edge-transitive; K_{1,3}, C_4 and K_4 are.
        assert_eq!(small_corpus(4, &et).unwrap().len(), 3);
        assert_eq!(small_corpus(10, &f), Err(FamilyError::TooLarge(10)));
    }

    #[test]
    fn filter_tokens_round_trip() {
        let mut f = CorpusFilters::default();
        for t in ["min_n=3", "biconnected", "edge_transitive", "minor_free=5", "non_cycle"] {
            f.apply_token(t).unwrap();
        }
        assert_eq!(
            f.tokens(),
            ["min_n=3", "biconnected", "edge_transitive", "minor_free=5", "non_cycle"]
        );
        assert!(f.apply_token("bogus").is_err());
    }
}
