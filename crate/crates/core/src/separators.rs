//! Menger-type computations: disjoint path systems, minimum vertex
//! separators, leftmost separators and their uncrossing, the double-matching
//! path lemma, auxiliary path graphs and vertex connectivity.
//!
//! Separators may contain terminal vertices and paths are disjoint including
//! their endpoints. All flows use the vertex-split reduction with unit vertex
//! capacities and breadth-first augmenting paths.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{is_biregular, Graph};

/// Largest host accepted by the exhaustive separator enumeration.
pub const EXHAUSTIVE_MAX_N: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeparatorError {
    #[error("terminal set is empty")]
    EmptyTerminalSet,
    #[error("terminal sets overlap")]
    OverlappingTerminals,
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("vertex {0} lies on no minimum separator")]
    NotOnMinSeparator(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("paths are not vertex-disjoint")]
    PathsNotDisjoint,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("exhaustive enumeration is limited to {EXHAUSTIVE_MAX_N} vertices, got {0}")]
    TooLarge(usize),
    #[error("expected {expected} disjoint paths, found {found}")]
    LemmaFailure { expected: usize, found: usize },
    #[error("leftmost separator is not unique")]
    NotUnique,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Every sequence is a path of `g` and the paths are pairwise disjoint.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.paths.iter().all(|p| {
            !p.is_empty()
                && p.windows(2).all(|w| w[1] < g.n() && g.has_edge(w[0], w[1]))
                && p.iter().all(|&v| v < g.n() && !std::mem::replace(&mut used[v], true))
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorResult {
    pub separator: Vec<usize>,
    /// Union of the components of `G - S` meeting `A \ S`.
    pub left_side: Vec<usize>,
    /// Union of the components of `G - S` meeting `B \ S`.
    pub right_side: Vec<usize>,
}

struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

const INF: u32 = u32::MAX / 2;

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    fn arc(&mut self, u: usize, v: usize, c: u32) {
        self.head[u].push(self.to.len());
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        self.head[v].push(self.to.len());
        self.to.push(u);
        self.cap.push(0);
        self.orig.push(0);
    }

    fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut via = vec![None; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    via[v] = Some(e);
                    queue.push_back(v);
                }
            }
        }
        via
    }

    fn max_flow(&mut self, s: usize, t: usize) -> usize {
        let mut flow = 0;
        loop {
            let via = self.bfs(s);
            if via[t].is_none() {
                return flow;
            }
            let mut v = t;
            while v != s {
                let e = via[v].unwrap();
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                v = self.to[e ^ 1];
            }
            flow += 1;
        }
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let via = self.bfs(s);
        (0..self.head.len()).map(|v| v == s || via[v].is_some()).collect()
    }

    fn flow_on(&self, e: usize) -> u32 {
        self.orig[e].saturating_sub(self.cap[e])
    }
}

/// Vertex-split network for `A`–`B` flows in `g` minus the `removed` vertices.
struct Menger {
    net: Network,
    n: usize,
    flow: usize,
}

impl Menger {
    fn run(g: &Graph, a: &[usize], b: &[usize], removed: &[bool]) -> Menger {
        let n = g.n();
        let (s, t) = (2 * n, 2 * n + 1);
        let mut net = Network::new(2 * n + 2);
        for v in (0..n).filter(|&v| !removed[v]) {
            net.arc(2 * v, 2 * v + 1, 1);
        }
        for &(u, v) in g.edges() {
            if !removed[u] && !removed[v] {
                net.arc(2 * u + 1, 2 * v, INF);
                net.arc(2 * v + 1, 2 * u, INF);
            }
        }
        for &x in a.iter().filter(|&&x| !removed[x]) {
            net.arc(s, 2 * x, INF);
        }
        for &x in b.iter().filter(|&&x| !removed[x]) {
            net.arc(2 * x + 1, t, INF);
        }
        let flow = net.max_flow(s, t);
        Menger { net, n, flow }
    }

    fn paths(&mut self, a: &[usize], b: &[usize]) -> Vec<Vec<usize>> {
        let n = self.n;
        let s = 2 * n;
        let t = 2 * n + 1;
        let mut in_a = vec![false; n];
        let mut in_b = vec![false; n];
        a.iter().for_each(|&x| in_a[x] = true);
        b.iter().for_each(|&x| in_b[x] = true);
        let mut out = Vec::new();
        for _ in 0..self.flow {
            let mut path = Vec::new();
            let mut u = s;
            while u != t {
                let e = *self.net.head[u]
                    .iter()
                    .find(|&&e| e % 2 == 0 && self.net.flow_on(e) > 0)
                    .expect("flow is conserved");
                self.net.cap[e] += 1;
                let v = self.net.to[e];
                if v < 2 * n && v.is_multiple_of(2) {
                    path.push(v / 2);
                }
                u = v;
            }
            let start = path.iter().rposition(|&v| in_a[v]).unwrap();
            let end = start + path[start..].iter().position(|&v| in_b[v]).unwrap();
            out.push(path[start..=end].to_vec());
        }
        out
    }

    /// Vertices whose split arc crosses the closest-to-source minimum cut.
    fn source_cut(&self) -> Vec<usize> {
        let r = self.net.reachable(2 * self.n);
        (0..self.n).filter(|&v| r[2 * v] && !r[2 * v + 1]).collect()
    }
}

fn check_terminals(g: &Graph, a: &[usize], b: &[usize]) -> Result<(), SeparatorError> {
    if a.is_empty() || b.is_empty() {
        return Err(SeparatorError::EmptyTerminalSet);
    }
    let mut mark = vec![0u8; g.n()];
    for &x in a {
        if x >= g.n() {
            return Err(SeparatorError::VertexOutOfRange(x));
        }
        mark[x] = 1;
    }
    for &x in b {
        if x >= g.n() {
            return Err(SeparatorError::VertexOutOfRange(x));
        }
        if mark[x] == 1 {
            return Err(SeparatorError::OverlappingTerminals);
        }
    }
    Ok(())
}

/// A maximum system of vertex-disjoint `A`–`B` paths.
pub fn max_disjoint_paths(g: &Graph, a: &[usize], b: &[usize]) -> Result<PathSystem, SeparatorError> {
    check_terminals(g, a, b)?;
    let mut m = Menger::run(g, a, b, &vec![false; g.n()]);
    Ok(PathSystem { paths: m.paths(a, b) })
}

/// Components of `G - S` meeting `A \ S` and `B \ S`.
pub fn sides(g: &Graph, a: &[usize], b: &[usize], separator: &[usize]) -> SeparatorResult {
    let mut keep = vec![true; g.n()];
    separator.iter().for_each(|&v| keep[v] = false);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for comp in g.components_within(&keep) {
        let mut set = vec![false; g.n()];
        comp.iter().for_each(|&v| set[v] = true);
        if a.iter().any(|&x| set[x]) {
            left.extend(&comp);
        }
        if b.iter().any(|&x| set[x]) {
            right.extend(&comp);
        }
    }
    let mut separator = separator.to_vec();
    separator.sort_unstable();
    left.sort_unstable();
    right.sort_unstable();
    SeparatorResult {
        separator,
        left_side: left,
        right_side: right,
    }
}

/// True iff `G - S` has no path from `A \ S` to `B \ S`.
pub fn is_separator(g: &Graph, a: &[usize], b: &[usize], s: &[usize]) -> bool {
    let r = sides(g, a, b, s);
    let mut left = vec![false; g.n()];
    r.left_side.iter().for_each(|&v| left[v] = true);
    !r.right_side.iter().any(|&v| left[v])
}

/// The minimum `A`–`B` separator closest to `A`.
pub fn min_separator(g: &Graph, a: &[usize], b: &[usize]) -> Result<SeparatorResult, SeparatorError> {
    check_terminals(g, a, b)?;
    let m = Menger::run(g, a, b, &vec![false; g.n()]);
    Ok(sides(g, a, b, &m.source_cut()))
}

pub fn min_separator_size(g: &Graph, a: &[usize], b: &[usize]) -> Result<usize, SeparatorError> {
    check_terminals(g, a, b)?;
    Ok(Menger::run(g, a, b, &vec![false; g.n()]).flow)
}

/// The minimum separator through `v` whose left side is contained in the
/// left side of every minimum separator through `v`.
///
/// Minimum separators through `v` are `{v}` plus the minimum separators of
/// `G - v` of size one less; the one closest to `A` is taken.
pub fn leftmost_min_separator(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    v: usize,
) -> Result<SeparatorResult, SeparatorError> {
    check_terminals(g, a, b)?;
    if v >= g.n() {
        return Err(SeparatorError::VertexOutOfRange(v));
    }
    let k = Menger::run(g, a, b, &vec![false; g.n()]).flow;
    let mut removed = vec![false; g.n()];
    removed[v] = true;
    let m = Menger::run(g, a, b, &removed);
    if k == 0 || m.flow + 1 != k {
        return Err(SeparatorError::NotOnMinSeparator(v));
    }
    let mut sep = m.source_cut();
    sep.push(v);
    Ok(sides(g, a, b, &sep))
}

fn combinations(pool: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            rec(pool, k, i + 1, cur, f);
            cur.pop();
        }
    }
    rec(pool, k, 0, &mut Vec::new(), f);
}

/// Every minimum `A`–`B` separator, by exhaustive enumeration.
pub fn all_min_separators(
    g: &Graph,
    a: &[usize],
    b: &[usize],
) -> Result<Vec<SeparatorResult>, SeparatorError> {
    check_terminals(g, a, b)?;
    if g.n() > EXHAUSTIVE_MAX_N {
        return Err(SeparatorError::TooLarge(g.n()));
    }
    let pool: Vec<usize> = (0..g.n()).collect();
    let mut k = 0;
    loop {
        let mut found = Vec::new();
        combinations(&pool, k, &mut |s| {
            if is_separator(g, a, b, s) {
                found.push(sides(g, a, b, s));
            }
        });
        if !found.is_empty() {
            return Ok(found);
        }
        k += 1;
    }
}

/// Every minimum separator containing `v`, by exhaustive enumeration.
pub fn min_separators_through(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    v: usize,
) -> Result<Vec<SeparatorResult>, SeparatorError> {
    Ok(all_min_separators(g, a, b)?
        .into_iter()
        .filter(|s| s.separator.contains(&v))
        .collect())
}

/// The separator among `candidates` whose left side is contained in all
/// others, checked to be unique.
pub fn leftmost_among(candidates: &[SeparatorResult]) -> Result<SeparatorResult, SeparatorError> {
    let subset = |x: &[usize], y: &[usize]| x.iter().all(|v| y.binary_search(v).is_ok());
    let winners: Vec<&SeparatorResult> = candidates
        .iter()
        .filter(|s| candidates.iter().all(|o| subset(&s.left_side, &o.left_side)))
        .collect();
    match winners.as_slice() {
        [one] => Ok((*one).clone()),
        [] => Err(SeparatorError::NotUnique),
        many => {
            if many.iter().all(|w| w.separator == many[0].separator) {
                Ok(many[0].clone())
            } else {
                Err(SeparatorError::NotUnique)
            }
        }
    }
}

fn set_union(parts: &[Vec<usize>]) -> Vec<usize> {
    let mut out: Vec<usize> = parts.concat();
    out.sort_unstable();
    out.dedup();
    out
}

fn intersect(x: &[usize], y: &[usize]) -> Vec<usize> {
    x.iter().copied().filter(|v| y.binary_search(v).is_ok()).collect()
}

/// `S∩ = (S ∩ S') ∪ (S ∩ S'^L) ∪ (S^L ∩ S')`.
pub fn uncross_cap(s: &SeparatorResult, t: &SeparatorResult) -> Vec<usize> {
    set_union(&[
        intersect(&s.separator, &t.separator),
        intersect(&s.separator, &t.left_side),
        intersect(&s.left_side, &t.separator),
    ])
}

/// `S∪ = (S ∩ S') ∪ (S ∩ S'^R) ∪ (S^R ∩ S')`.
pub fn uncross_cup(s: &SeparatorResult, t: &SeparatorResult) -> Vec<usize> {
    set_union(&[
        intersect(&s.separator, &t.separator),
        intersect(&s.separator, &t.right_side),
        intersect(&s.right_side, &t.separator),
    ])
}

/// `|A|` disjoint `A`–`C` paths through `B` when `G[A,B]` and `G[B,C]` are
/// non-edgeless biregular graphs and `|A| = |C| <= |B|`.
pub fn double_matching_paths(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    c: &[usize],
) -> Result<PathSystem, SeparatorError> {
    let violated = |s: &str| Err(SeparatorError::HypothesisViolated(s.to_string()));
    let n = g.n();
    let mut side = vec![0u8; n];
    for (tag, set) in [(1u8, a), (2, b), (3, c)] {
        for &v in set {
            if v >= n {
                return Err(SeparatorError::VertexOutOfRange(v));
            }
            if side[v] != 0 {
                return violated("sets are not disjoint");
            }
            side[v] = tag;
        }
    }
    if a.len() != c.len() || a.len() > b.len() {
        return violated("need |A| = |C| <= |B|");
    }
    for (x, y, name) in [(a, b, "G[A,B]"), (b, c, "G[B,C]")] {
        match is_biregular(g, x, y) {
            Ok(Some((d1, _))) if d1 > 0 => {}
            Ok(Some(_)) => return violated(&format!("{name} is edgeless")),
            _ => return violated(&format!("{name} is not biregular")),
        }
    }
    let layered: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| matches!((side[u], side[v]), (1, 2) | (2, 1) | (2, 3) | (3, 2)))
        .collect();
    let h = Graph::new(n, layered).expect("subgraph of a simple graph");
    let paths = max_disjoint_paths(&h, a, c)?;
    if paths.len() != a.len() {
        return Err(SeparatorError::LemmaFailure {
            expected: a.len(),
            found: paths.len(),
        });
    }
    Ok(paths)
}

/// Graph on the path indices; `i ~ j` iff `g` has a path from `P_i` to `P_j`
/// with all vertices in `s` and no internal vertex on any of the paths.
pub fn auxiliary_path_graph(
    g: &Graph,
    paths: &PathSystem,
    s: Option<&[usize]>,
) -> Result<Graph, SeparatorError> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (i, p) in paths.paths.iter().enumerate() {
        for &v in p {
            if v >= n {
                return Err(SeparatorError::VertexOutOfRange(v));
            }
            if owner[v] != usize::MAX {
                return Err(SeparatorError::PathsNotDisjoint);
            }
            owner[v] = i;
        }
    }
    let allowed: Vec<bool> = match s {
        None => vec![true; n],
        Some(set) => {
            let mut m = vec![false; n];
            set.iter().filter(|&&v| v < n).for_each(|&v| m[v] = true);
            m
        }
    };
    let mut edges = Vec::new();
    for (i, p) in paths.paths.iter().enumerate() {
        let mut seen = vec![false; n];
        let mut queue: VecDeque<usize> = p.iter().copied().filter(|&v| allowed[v]).collect();
        queue.iter().for_each(|&v| seen[v] = true);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if seen[w] || !allowed[w] {
                    continue;
                }
                seen[w] = true;
                match owner[w] {
                    usize::MAX => queue.push_back(w),
                    j if j != i => edges.push((i.min(j), i.max(j))),
                    _ => {}
                }
            }
        }
    }
    Ok(Graph::from_edges_lossy(paths.len(), edges).expect("indices in range"))
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent `s`, `t`.
pub fn local_connectivity(g: &Graph, s: usize, t: usize) -> usize {
    let ns = g.neighbors(s);
    let nt = g.neighbors(t);
    let common: Vec<usize> = ns.iter().copied().filter(|v| nt.binary_search(v).is_ok()).collect();
    let mut removed = vec![false; g.n()];
    removed[s] = true;
    removed[t] = true;
    common.iter().for_each(|&v| removed[v] = true);
    let a: Vec<usize> = ns.iter().copied().filter(|v| !removed[*v]).collect();
    let b: Vec<usize> = nt.iter().copied().filter(|v| !removed[*v]).collect();
    common.len() + Menger::run(g, &a, &b, &removed).flow
}

/// Vertex connectivity; `n - 1` for complete graphs.
pub fn vertex_connectivity(g: &Graph) -> Result<usize, SeparatorError> {
    if !g.is_connected() {
        return Err(SeparatorError::Disconnected);
    }
    let n = g.n();
    if g.is_complete() {
        return Ok(n.saturating_sub(1));
    }
    let mut kappa = g.min_degree();
    let mut i = 0;
    while i <= kappa && i < n {
        for j in i + 1..n {
            if !g.has_edge(i, j) {
                kappa = kappa.min(local_connectivity(g, i, j));
            }
        }
        i += 1;
    }
    Ok(kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, ladder, path, petersen, twisted_grid};

    #[test]
    fn disjoint_paths() {
        let p5 = path(5).unwrap();
        let ps = max_disjoint_paths(&p5, &[0], &[4]).unwrap();
        assert_eq!(ps.paths, vec![vec![0, 1, 2, 3, 4]]);
        let l = ladder(5).unwrap();
        let ps = max_disjoint_paths(&l, &[0, 1], &[8, 9]).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.is_valid_in(&l));
        assert_eq!(max_disjoint_paths(&complete(4).unwrap(), &[0], &[3]).unwrap().len(), 1);
        assert_eq!(
            max_disjoint_paths(&p5, &[], &[4]),
            Err(SeparatorError::EmptyTerminalSet)
        );
    }

    #[test]
    fn separators() {
        let p5 = path(5).unwrap();
        assert_eq!(min_separator(&p5, &[0], &[4]).unwrap().separator.len(), 1);
        let l = ladder(5).unwrap();
        assert_eq!(min_separator(&l, &[0, 1], &[8, 9]).unwrap().separator.len(), 2);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let r = min_separator(&two, &[0], &[3]).unwrap();
        assert!(r.separator.is_empty());
        assert_eq!((r.left_side, r.right_side), (vec![0, 1], vec![2, 3]));
    }

    #[test]
    fn leftmost() {
        let p5 = path(5).unwrap();
        assert_eq!(leftmost_min_separator(&p5, &[0], &[4], 2).unwrap().separator, vec![2]);
        // Ladder columns c = {2c, 2c+1}; through the top of column 1 the
        // leftmost separator uses the bottom of column 0. Oracle: exhaustive
        // enumeration of the 2-separators through vertex 2.
        let l = ladder(5).unwrap();
        let a = [0, 1];
        let b = [8, 9];
        let flow = leftmost_min_separator(&l, &a, &b, 2).unwrap();
        assert_eq!(flow.separator, vec![1, 2]);
        let exhaustive = leftmost_among(&min_separators_through(&l, &a, &b, 2).unwrap()).unwrap();
        assert_eq!(flow, exhaustive);
        // A itself is a minimum separator; it is leftmost for its vertices.
        assert_eq!(leftmost_min_separator(&l, &a, &b, 0).unwrap().separator, vec![0, 1]);
        assert_eq!(
            leftmost_min_separator(&complete(4).unwrap(), &[0], &[3], 1),
            Err(SeparatorError::NotOnMinSeparator(1))
        );
    }

    #[test]
    fn double_matching() {
        // A = {0,1}, B = {2,3,4}, C = {5,6}, complete couplings.
        let mut edges = Vec::new();
        for x in [0, 1, 5, 6] {
            for y in [2, 3, 4] {
                edges.push((x, y));
            }
        }
        let g = Graph::new(7, edges).unwrap();
        let ps = double_matching_paths(&g, &[0, 1], &[2, 3, 4], &[5, 6]).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.is_valid_in(&g));
        // Perfect matchings on 3 + 3 + 3.
        let g = Graph::new(9, [(0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (5, 8)]).unwrap();
        let ps = double_matching_paths(&g, &[0, 1, 2], &[3, 4, 5], &[6, 7, 8]).unwrap();
        assert_eq!(ps.len(), 3);
        let p = path(3).unwrap();
        assert!(matches!(
            double_matching_paths(&p, &[0], &[1], &[1]),
            Err(SeparatorError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn auxiliary_graphs() {
        let l = ladder(5).unwrap();
        let rows = PathSystem {
            paths: vec![vec![0, 2, 4, 6, 8], vec![1, 3, 5, 7, 9]],
        };
        assert_eq!(auxiliary_path_graph(&l, &rows, None).unwrap(), complete(2).unwrap());
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let ps = PathSystem {
            paths: vec![vec![0, 1], vec![2, 3]],
        };
        assert_eq!(auxiliary_path_graph(&two, &ps, None).unwrap().m(), 0);
        let g = twisted_grid(8, 3).unwrap();
        let straight = PathSystem {
            paths: (0..3).map(|j| (0..8).map(|i| i * 3 + j).collect()).collect(),
        };
        assert!(straight.is_valid_in(&g));
        assert_eq!(auxiliary_path_graph(&g, &straight, None).unwrap(), cycle(3).unwrap());
        let overlapping = PathSystem {
            paths: vec![vec![0, 1], vec![1, 2]],
        };
        assert_eq!(
            auxiliary_path_graph(&l, &overlapping, None),
            Err(SeparatorError::PathsNotDisjoint)
        );
    }

    #[test]
    fn connectivity() {
        assert_eq!(vertex_connectivity(&cycle(5).unwrap()), Ok(2));
        assert_eq!(vertex_connectivity(&complete(4).unwrap()), Ok(3));
        assert_eq!(vertex_connectivity(&petersen()), Ok(3));
        assert_eq!(vertex_connectivity(&path(4).unwrap()), Ok(1));
        assert_eq!(vertex_connectivity(&Graph::empty(2)), Err(SeparatorError::Disconnected));
    }
}
