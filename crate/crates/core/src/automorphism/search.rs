//! Individualization–refinement search for a strong generating set of the
//! automorphism group.

use super::refine::{mix, Coloring, Workspace};
use crate::graph::ColoredGraph;
use crate::perm::Permutation;
use crate::util::UnionFind;

pub(crate) struct SearchOutput {
    pub generators: Vec<Permutation>,
    /// Vertices individualized along the first path; a base for the group.
    pub base: Vec<usize>,
}

struct Searcher<'a> {
    g: &'a ColoredGraph,
    ws: Workspace,
    /// Trace hash after refinement at each depth of the first path.
    traces: Vec<u64>,
    /// Target cell start at each depth of the first path.
    targets: Vec<usize>,
    first_leaf: Vec<usize>,
    gens: Vec<Permutation>,
}

/// Individualizes `v` in `c` and refines, returning the child trace.
pub(crate) fn child(
    g: &ColoredGraph,
    c: &Coloring,
    v: usize,
    target: usize,
    ws: &mut Workspace,
) -> (Coloring, u64) {
    let mut next = c.clone();
    let s = next.individualize(v);
    let h = next.refine(&g.graph, &[s], ws);
    (next, mix(h, target as u64))
}

pub(crate) fn root(g: &ColoredGraph, ws: &mut Workspace) -> (Coloring, u64) {
    let (mut c, starts) = Coloring::from_colors(g.colors());
    let h = c.refine(&g.graph, &starts, ws);
    (c, h)
}

/// Orbit labels of the points under those generators that fix `prefix`.
pub(crate) fn stabilizer_orbits(n: usize, gens: &[Permutation], prefix: &[usize]) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for g in gens.iter().filter(|g| prefix.iter().all(|&p| g.image(p) == p)) {
        for x in 0..n {
            uf.union(x, g.image(x));
        }
    }
    uf
}

impl<'a> Searcher<'a> {
    fn leaf_automorphism(&self, leaf: &Coloring) -> Option<Permutation> {
        let n = self.g.n();
        let mut images = vec![0; n];
        for i in 0..n {
            images[self.first_leaf[i]] = leaf.lab[i];
        }
        let gamma = Permutation::from_vec_unchecked(images);
        self.g.is_automorphism(gamma.images()).then_some(gamma)
    }

    /// Looks for a leaf below `node` equivalent to the first leaf.
    fn explore(&mut self, node: &Coloring, depth: usize, prefix: &mut Vec<usize>) -> Option<Permutation> {
        if node.is_discrete() {
            return self.leaf_automorphism(node);
        }
        let t = node.target_cell()?;
        if t != self.targets[depth] {
            return None;
        }
        let mut uf = stabilizer_orbits(self.g.n(), &self.gens, prefix);
        let mut tried: Vec<usize> = Vec::new();
        for &x in node.cell_members(t) {
            let rx = uf.find(x);
            if tried.contains(&rx) {
                continue;
            }
            tried.push(rx);
            let (next, h) = child(self.g, node, x, t, &mut self.ws);
            if h != self.traces[depth + 1] {
                continue;
            }
            prefix.push(x);
            let found = self.explore(&next, depth + 1, prefix);
            prefix.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

pub(crate) fn search_automorphisms(g: &ColoredGraph) -> SearchOutput {
    let n = g.n();
    let mut ws = Workspace::new(n);
    let (mut cur, h0) = root(g, &mut ws);
    let mut traces = vec![h0];
    let mut targets = Vec::new();
    let mut nodes = Vec::new();
    let mut base = Vec::new();
    while let Some(t) = cur.target_cell() {
        let v = cur.lab[t];
        let (next, h) = child(g, &cur, v, t, &mut ws);
        nodes.push(cur);
        targets.push(t);
        traces.push(h);
        base.push(v);
        cur = next;
    }
    let mut s = Searcher {
        g,
        ws,
        traces,
        targets,
        first_leaf: cur.lab,
        gens: Vec::new(),
    };
    let mut orbits = UnionFind::new(n);
    for level in (0..nodes.len()).rev() {
        let node = &nodes[level];
        let t = s.targets[level];
        let v = base[level];
        let mut failed: Vec<usize> = Vec::new();
        for &w in node.cell_members(t) {
            if w == v || orbits.find(w) == orbits.find(v) {
                continue;
            }
            if failed.iter().any(|&f| orbits.find(f) == orbits.find(w)) {
                continue;
            }
            let (next, h) = child(g, node, w, t, &mut s.ws);
            let found = if h == s.traces[level + 1] {
                let mut prefix = base[..level].to_vec();
                prefix.push(w);
                s.explore(&next, level + 1, &mut prefix)
            } else {
                None
            };
            match found {
                Some(gamma) => {
                    for x in 0..n {
                        orbits.union(x, gamma.image(x));
                    }
                    s.gens.push(gamma);
                }
                None => failed.push(w),
            }
        }
    }
    SearchOutput {
        generators: s.gens,
        base,
    }
}
