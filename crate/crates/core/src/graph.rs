//! Finite simple undirected graphs, vertex colorings and vertex partitions.
//!
//! Vertices are dense indices `0..n`. A [`Graph`] is immutable once built and
//! keeps three views of its edge set: a sorted pair list, sorted adjacency
//! lists, and an adjacency bit matrix for constant-time edge tests.

use std::collections::{BTreeMap, VecDeque};

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("block {0} does not induce a connected subgraph")]
    DisconnectedBlock(usize),
    #[error("the two sides overlap")]
    OverlappingSides,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("coloring has {got} entries for a graph on {expected} vertices")]
    ColoringLength { got: usize, expected: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    words: usize,
    bits: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, GraphError> {
        Graph::new(r.n, r.edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let words = n.div_ceil(64).max(1);
        let mut bits = vec![0u64; n * words];
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            if bits[a * words + b / 64] >> (b % 64) & 1 == 1 {
                return Err(GraphError::DuplicateEdge(a, b));
            }
            bits[a * words + b / 64] |= 1 << (b % 64);
            bits[b * words + a / 64] |= 1 << (a % 64);
            list.push((a, b));
        }
        list.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &list {
            adj[a].push(b);
            adj[b].push(a);
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: list,
            adj,
            words,
            bits,
        })
    }

    /// Like [`Graph::new`] but silently drops loops and repeated edges.
    pub fn from_edges_lossy<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = std::collections::BTreeSet::new();
        for (u, v) in edges {
            if u != v {
                set.insert((u.min(v), u.max(v)));
            }
        }
        Graph::new(n, set)
    }

    pub fn empty(n: usize) -> Self {
        Graph::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted pairs `(u, v)` with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Position of an edge in [`Graph::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// BFS distances from `source`; unreachable vertices get `None`.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&vec![true; self.n])
    }

    /// Components of the subgraph induced by the vertices with `keep[v]`.
    pub fn components_within(&self, keep: &[bool]) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] || !keep[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &w in &self.adj[u] {
                    if keep[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff `set` is nonempty and induces a connected subgraph.
    pub fn induces_connected(&self, set: &[usize]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut keep = vec![false; self.n];
        for &v in set {
            keep[v] = true;
        }
        let mut seen = vec![false; self.n];
        seen[set[0]] = true;
        let mut stack = vec![set[0]];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == set.len()
    }

    /// 2-connected: connected, at least 3 vertices, and no cut vertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| {
            let mut keep = vec![true; self.n];
            keep[v] = false;
            self.components_within(&keep).len() == 1
        })
    }

    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.degree(v) == 2)
    }

    /// Subgraph induced by `vertices` (in the given order) and the map from
    /// new indices back to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let g = Graph::new(vertices.len(), edges).expect("induced subgraph of a simple graph");
        (g, vertices.to_vec())
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling preserves simplicity")
    }

    /// Disjoint union, `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union is simple")
    }
}

/// A graph together with a vertex coloring by small integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    pub graph: Graph,
    colors: Vec<u32>,
}

impl ColoredGraph {
    pub fn new(graph: Graph, colors: Vec<u32>) -> Result<Self, GraphError> {
        if colors.len() != graph.n() {
            return Err(GraphError::ColoringLength {
                got: colors.len(),
                expected: graph.n(),
            });
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn uncolored(graph: Graph) -> Self {
        let n = graph.n();
        ColoredGraph {
            graph,
            colors: vec![0; n],
        }
    }

    /// Colors every vertex by the rank of its key among all distinct keys.
    /// Isomorphism-invariant keys yield an isomorphism-invariant coloring.
    pub fn from_keys<K: Ord + Clone>(graph: Graph, keys: &[K]) -> Self {
        let ranks = dense_ranks(keys);
        ColoredGraph::new(graph, ranks).expect("one key per vertex")
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    pub fn induced(&self, vertices: &[usize]) -> ColoredGraph {
        let (g, _) = self.graph.induced_subgraph(vertices);
        let colors = vertices.iter().map(|&v| self.colors[v]).collect();
        ColoredGraph { graph: g, colors }
    }

    /// True iff `images` is an automorphism of the colored graph.
    pub fn is_automorphism(&self, images: &[usize]) -> bool {
        images.len() == self.n()
            && (0..self.n()).all(|v| self.colors[v] == self.colors[images[v]])
            && self
                .graph
                .edges()
                .iter()
                .all(|&(u, v)| self.graph.has_edge(images[u], images[v]))
    }
}

/// Maps each key to the rank of its value among the sorted distinct keys.
pub fn dense_ranks<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut distinct: BTreeMap<K, u32> = keys.iter().map(|k| (k.clone(), 0)).collect();
    for (i, v) in distinct.values_mut().enumerate() {
        *v = i as u32;
    }
    keys.iter().map(|k| distinct[k]).collect()
}

/// A partition of `0..n` into nonempty disjoint blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(GraphError::InvalidPartition(format!("block {i} is empty")));
            }
            for &v in block {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if seen[v] {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} appears twice"
                    )));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(Partition { blocks })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|v| vec![v]).collect(),
        }
    }

    /// Builds the partition with one block per label value, blocks ordered by
    /// their smallest element.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut first: BTreeMap<usize, usize> = BTreeMap::new();
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            let idx = *first.entry(l).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[idx].push(v);
        }
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }

    /// `map[v]` = index of the block containing `v`.
    pub fn block_map(&self) -> Vec<usize> {
        let n = self.blocks.iter().map(Vec::len).sum();
        let mut map = vec![0; n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in b {
                map[v] = i;
            }
        }
        map
    }

    /// Same partition with sorted blocks ordered by smallest element.
    pub fn normalized(&self) -> Partition {
        let mut blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| {
                let mut b = b.clone();
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort();
        Partition { blocks }
    }
}

/// Contracts every block of `p` to a single vertex. Returns the quotient graph
/// and the map sending each original vertex to its block index.
pub fn contract_partition(g: &Graph, p: &Partition) -> Result<(Graph, Vec<usize>), GraphError> {
    if p.blocks.iter().map(Vec::len).sum::<usize>() != g.n() {
        return Err(GraphError::InvalidPartition(
            "partition does not cover the graph".into(),
        ));
    }
    for (i, b) in p.blocks.iter().enumerate() {
        if !g.induces_connected(b) {
            return Err(GraphError::DisconnectedBlock(i));
        }
    }
    let map = p.block_map();
    let quotient = Graph::from_edges_lossy(
        p.len(),
        g.edges().iter().map(|&(u, v)| (map[u], map[v])),
    )?;
    Ok((quotient, map))
}

/// Cartesian product; vertex `(a, b)` gets index `a * h.n() + b`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let k = h.n();
    let mut edges = Vec::with_capacity(g.m() * k + h.m() * g.n());
    for &(u, v) in g.edges() {
        for b in 0..k {
            edges.push((u * k + b, v * k + b));
        }
    }
    for a in 0..g.n() {
        for &(u, v) in h.edges() {
            edges.push((a * k + u, a * k + v));
        }
    }
    Graph::new(g.n() * k, edges).expect("product of simple graphs is simple")
}

/// Maximal classes of vertices with equal open neighborhoods.
pub fn twin_classes(g: &Graph) -> Partition {
    let mut by_nbhd: BTreeMap<&[usize], Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_nbhd.entry(g.neighbors(v)).or_default().push(v);
    }
    let mut blocks: Vec<Vec<usize>> = by_nbhd.into_values().collect();
    blocks.sort();
    Partition { blocks }
}

/// Keeps one vertex (the smallest) per class of same-colored twins.
/// Returns the reduced colored graph and the size of each kept class.
pub fn reduce_twins(g: &ColoredGraph) -> (ColoredGraph, Vec<usize>) {
    let mut by_key: BTreeMap<(u32, &[usize]), Vec<usize>> = BTreeMap::new();
    for v in 0..g.n() {
        by_key
            .entry((g.color(v), g.graph.neighbors(v)))
            .or_default()
            .push(v);
    }
    let mut classes: Vec<Vec<usize>> = by_key.into_values().collect();
    classes.sort();
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let sizes = classes.iter().map(Vec::len).collect();
    (g.induced(&reps), sizes)
}

/// Degrees `(d1, d2)` of the bipartite graph `G[side1, side2]` if it is
/// biregular. An empty side contributes degree 0.
pub fn is_biregular(
    g: &Graph,
    side1: &[usize],
    side2: &[usize],
) -> Result<Option<(usize, usize)>, GraphError> {
    let mut mark = vec![0u8; g.n()];
    for &v in side1 {
        g.check_vertex(v)?;
        mark[v] = 1;
    }
    for &v in side2 {
        g.check_vertex(v)?;
        if mark[v] == 1 {
            return Err(GraphError::OverlappingSides);
        }
        mark[v] = 2;
    }
    let side_degree = |side: &[usize], other: u8| -> Option<usize> {
        let mut degs = side
            .iter()
            .map(|&v| g.neighbors(v).iter().filter(|&&w| mark[w] == other).count());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    };
    Ok(side_degree(side1, 2).zip(side_degree(side2, 1)))
}

/// Exact average degree `2|E| / |V|`.
pub fn average_degree(g: &Graph) -> Result<Ratio<u64>, GraphError> {
    if g.n() == 0 {
        return Err(GraphError::EmptyGraph);
    }
    Ok(Ratio::new(2 * g.m() as u64, g.n() as u64))
}

/// All vertices within distance `t` of `v`, sorted.
pub fn ball(g: &Graph, v: usize, t: usize) -> Result<Vec<usize>, GraphError> {
    g.check_vertex(v)?;
    Ok(g
        .distances(v)
        .iter()
        .enumerate()
        .filter(|(_, d)| matches!(d, Some(d) if *d <= t))
        .map(|(w, _)| w)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, complete_bipartite, cycle, path, petersen};

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn contract_cycle_pairs() {
        let c6 = cycle(6).unwrap();
        let p = Partition::new(6, vec![vec![0, 1], vec![2, 3], vec![4, 5]]).unwrap();
        let (q, map) = contract_partition(&c6, &p).unwrap();
        assert_eq!(q, cycle(3).unwrap());
        assert_eq!(map, vec![0, 0, 1, 1, 2, 2]);
    }

    #[test]
    fn contract_singletons_is_identity() {
        let g = petersen();
        let (q, _) = contract_partition(&g, &Partition::singletons(10)).unwrap();
        assert_eq!(q, g);
    }

    #[test]
    fn contract_petersen_spokes() {
        // Oracle: list the quotient edges by hand from the outer 5-cycle,
        // inner pentagram and spokes; every pair of spoke classes is joined.
        let g = petersen();
        let blocks = (0..5).map(|i| vec![i, i + 5]).collect();
        let (q, _) = contract_partition(&g, &Partition::new(10, blocks).unwrap()).unwrap();
        let mut expected = Vec::new();
        for i in 0..5 {
            expected.push((i, (i + 1) % 5));
            expected.push((i, (i + 2) % 5));
        }
        assert_eq!(q, Graph::from_edges_lossy(5, expected).unwrap());
        assert_eq!(q, complete(5).unwrap());
    }

    #[test]
    fn contract_rejects_disconnected_block() {
        let p4 = path(4).unwrap();
        let p = Partition::new(4, vec![vec![0, 2], vec![1], vec![3]]).unwrap();
        assert_eq!(
            contract_partition(&p4, &p),
            Err(GraphError::DisconnectedBlock(0))
        );
    }

    #[test]
    fn products() {
        let k2 = complete(2).unwrap();
        assert_eq!(cartesian_product(&k2, &k2).m(), 4);
        assert!(cartesian_product(&k2, &k2).is_cycle());
        let k1 = complete(1).unwrap();
        let c5 = cycle(5).unwrap();
        assert_eq!(cartesian_product(&k1, &c5), c5);
        // Product rule: 3 triangle edges per layer times 2 layers, plus 3 rungs.
        let prism = cartesian_product(&cycle(3).unwrap(), &path(2).unwrap());
        assert_eq!(prism.n(), 6);
        assert_eq!(prism.m(), 9);
        assert!(prism.is_regular() && prism.degree(0) == 3);
    }

    #[test]
    fn twins() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(twin_classes(&k23).block_sizes(), vec![2, 3]);
        assert_eq!(twin_classes(&cycle(5).unwrap()).len(), 5);
        // K4 minus the edge {0,1}: only 0 and 1 share an open neighborhood.
        let diamond = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let classes = twin_classes(&diamond);
        assert_eq!(classes.blocks(), &[vec![0, 1], vec![2], vec![3]]);
    }

    #[test]
    fn twin_reduction() {
        let k23 = ColoredGraph::uncolored(complete_bipartite(2, 3).unwrap());
        let (r, sizes) = reduce_twins(&k23);
        assert_eq!(r.graph, complete(2).unwrap());
        assert_eq!(sizes, vec![2, 3]);
        let c5 = ColoredGraph::uncolored(cycle(5).unwrap());
        let (r, sizes) = reduce_twins(&c5);
        assert_eq!(r, c5);
        assert_eq!(sizes, vec![1; 5]);
        let k44 = ColoredGraph::uncolored(complete_bipartite(4, 4).unwrap());
        let (r, sizes) = reduce_twins(&k44);
        assert_eq!(r.graph, complete(2).unwrap());
        assert_eq!(sizes, vec![4, 4]);
    }

    #[test]
    fn biregularity() {
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(is_biregular(&k23, &[0, 1], &[2, 3, 4]), Ok(Some((3, 2))));
        let p4 = path(4).unwrap();
        assert_eq!(is_biregular(&p4, &[0, 2], &[1, 3]), Ok(None));
        assert_eq!(is_biregular(&p4, &[], &[]), Ok(Some((0, 0))));
        assert_eq!(
            is_biregular(&p4, &[0, 1], &[1]),
            Err(GraphError::OverlappingSides)
        );
    }

    #[test]
    fn average_degrees() {
        assert_eq!(average_degree(&complete(4).unwrap()), Ok(Ratio::from(3)));
        assert_eq!(average_degree(&cycle(7).unwrap()), Ok(Ratio::from(2)));
        assert_eq!(average_degree(&petersen()), Ok(Ratio::from(3)));
        assert_eq!(average_degree(&path(2).unwrap()), Ok(Ratio::from(1)));
        assert_eq!(average_degree(&path(3).unwrap()), Ok(Ratio::new(4, 3)));
        assert_eq!(average_degree(&Graph::empty(0)), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn balls() {
        let p5 = path(5).unwrap();
        assert_eq!(ball(&p5, 2, 1).unwrap(), vec![1, 2, 3]);
        assert_eq!(ball(&p5, 4, 0).unwrap(), vec![4]);
        assert_eq!(ball(&petersen(), 7, 2).unwrap(), (0..10).collect::<Vec<_>>());
        assert!(ball(&p5, 5, 1).is_err());
    }

    #[test]
    fn connectivity_predicates() {
        assert!(cycle(5).unwrap().is_biconnected());
        assert!(!path(4).unwrap().is_biconnected());
        assert!(complete(4).unwrap().is_biconnected());
        assert!(!Graph::empty(2).is_connected());
    }
}
