//! Canonical labeling by exhaustive individualization–refinement with trace
//! and automorphism pruning.

use serde::{Deserialize, Serialize};

use super::refine::{Coloring, Workspace};
use super::search::{child, root, stabilizer_orbits};
use super::{automorphisms, AutResult};
use crate::graph::{ColoredGraph, Graph};

/// A labeled colored graph equal for two inputs iff they are isomorphic as
/// colored graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub colors: Vec<u32>,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_colored_graph(&self) -> ColoredGraph {
        let g = Graph::new(self.n, self.edges.iter().copied()).expect("canonical edges are simple");
        ColoredGraph::new(g, self.colors.clone()).expect("one color per vertex")
    }
}

#[derive(Clone, Debug)]
pub struct Canonical {
    pub form: CanonicalForm,
    /// `labeling[v]` is the canonical index of vertex `v`.
    pub labeling: Vec<usize>,
    pub aut: AutResult,
}

fn certificate(g: &ColoredGraph, lab: &[usize]) -> CanonicalForm {
    let n = lab.len();
    let mut pos = vec![0; n];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    let colors = lab.iter().map(|&v| g.color(v)).collect();
    let mut edges: Vec<(usize, usize)> = g
        .graph
        .edges()
        .iter()
        .map(|&(u, v)| (pos[u].min(pos[v]), pos[u].max(pos[v])))
        .collect();
    edges.sort_unstable();
    CanonicalForm { n, colors, edges }
}

struct Best {
    traces: Vec<u64>,
    form: CanonicalForm,
    lab: Vec<usize>,
}

struct CanonSearch<'a> {
    g: &'a ColoredGraph,
    ws: Workspace,
    gens: &'a [crate::perm::Permutation],
    best: Option<Best>,
}

impl CanonSearch<'_> {
    fn visit(&mut self, node: &Coloring, traces: &mut Vec<u64>, prefix: &mut Vec<usize>) {
        if let Some(best) = &self.best {
            let k = traces.len().min(best.traces.len());
            if traces[..k] < best.traces[..k] {
                return;
            }
        }
        if node.is_discrete() {
            let form = certificate(self.g, &node.lab);
            let better = match &self.best {
                None => true,
                Some(b) => (traces.as_slice(), &form) > (b.traces.as_slice(), &b.form),
            };
            if better {
                self.best = Some(Best {
                    traces: traces.clone(),
                    form,
                    lab: node.lab.clone(),
                });
            }
            return;
        }
        let t = node.target_cell().expect("non-discrete node has a target");
        let mut uf = stabilizer_orbits(self.g.n(), self.gens, prefix);
        let mut tried: Vec<usize> = Vec::new();
        for &x in node.cell_members(t) {
            let rx = uf.find(x);
            if tried.contains(&rx) {
                continue;
            }
            tried.push(rx);
            let (next, h) = child(self.g, node, x, t, &mut self.ws);
            traces.push(h);
            prefix.push(x);
            self.visit(&next, traces, prefix);
            prefix.pop();
            traces.pop();
        }
    }
}

/// Canonical form, canonical labeling and automorphism group of `g`.
pub fn canonical_form(g: &ColoredGraph) -> Canonical {
    let aut = automorphisms(g);
    canonical_form_with(g, aut)
}

/// Like [`canonical_form`], reusing an already computed automorphism group.
pub fn canonical_form_with(g: &ColoredGraph, aut: AutResult) -> Canonical {
    let n = g.n();
    let mut ws = Workspace::new(n);
    let (node, h0) = root(g, &mut ws);
    let gens = aut.group.strong_generators().to_vec();
    let mut search = CanonSearch {
        g,
        ws,
        gens: &gens,
        best: None,
    };
    search.visit(&node, &mut vec![h0], &mut Vec::new());
    let best = search.best.expect("every search tree has a leaf");
    let mut labeling = vec![0; n];
    for (i, &v) in best.lab.iter().enumerate() {
        labeling[v] = i;
    }
    Canonical {
        form: best.form,
        labeling,
        aut,
    }
}
