//! Exhaustive reference implementations used to cross-check the fast
//! algorithms on small inputs.

use std::collections::HashSet;

use crate::graph::Graph;

/// Index of the pair `{i, j}` (i < j) in the upper-triangle bit layout.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = (i.min(j), i.max(j));
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Smallest adjacency bitmask over all relabelings; `n <= 8`.
pub fn brute_force_certificate(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 8, "brute-force certificate limited to 8 vertices");
    let mut p: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mask = g
            .edges()
            .iter()
            .fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit(n, p[u], p[v]));
        best = best.min(mask);
        if !next_permutation(&mut p) {
            return best;
        }
    }
}

/// Number of isomorphism classes of connected graphs on exactly `n`
/// vertices, by classifying every labeled graph; `n <= 6`.
pub fn brute_force_connected_classes(n: usize) -> usize {
    assert!(n <= 6, "labeled enumeration limited to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let mut classes = std::collections::HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if !g.is_connected() {
            continue;
        }
        let cert = perms
            .iter()
            .map(|p| {
                g.edges()
                    .iter()
                    .fold(0u64, |acc, &(u, v)| acc | 1 << pair_bit(n, p[u], p[v]))
            })
            .min()
            .unwrap();
        classes.insert(cert);
    }
    classes.len()
}

/// Decides whether `pattern` is a minor of `host` by trying every map from
/// host vertices to pattern vertices or deletion; `host.n() <= 9`.
pub fn brute_force_has_minor(pattern: &Graph, host: &Graph) -> bool {
    let (k, n) = (pattern.n(), host.n());
    assert!(n <= 9, "brute-force minor test limited to 9 host vertices");
    if k > n {
        return false;
    }
    if k == 0 {
        return true;
    }
    let mut label = vec![0usize; n];
    loop {
        if model_ok(pattern, host, &label) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            label[i] += 1;
            if label[i] <= k {
                break;
            }
            label[i] = 0;
            i += 1;
        }
    }
}

/// `label[v] = 0` deletes `v`; otherwise `v` joins branch set `label[v] - 1`.
fn model_ok(pattern: &Graph, host: &Graph, label: &[usize]) -> bool {
    let k = pattern.n();
    let branches: Vec<Vec<usize>> = (1..=k)
        .map(|b| (0..host.n()).filter(|&v| label[v] == b).collect())
        .collect();
    if branches.iter().any(|b| b.is_empty() || !host.induces_connected(b)) {
        return false;
    }
    pattern.edges().iter().all(|&(u, w)| {
        host.edges().iter().any(|&(x, y)| {
            (label[x] == u + 1 && label[y] == w + 1) || (label[x] == w + 1 && label[y] == u + 1)
        })
    })
}

/// For each pattern, whether it is a minor of `host`, by enumerating every
/// partition of the host vertices into a deleted set and connected branch
/// sets and testing the pattern as a subgraph of each quotient;
/// `host.n() <= 9`, patterns on at most 8 vertices.
///
/// A connected host needs no deleted set: every deleted vertex can join an
/// adjacent branch set without breaking the model.
pub fn partition_minor_table(host: &Graph, patterns: &[Graph]) -> Vec<bool> {
    let n = host.n();
    assert!(n <= 9, "partition enumeration limited to 9 host vertices");
    assert!(patterns.iter().all(|p| p.n() <= 8), "patterns limited to 8 vertices");
    let max_k = patterns.iter().map(Graph::n).max().unwrap_or(0);
    let wanted: Vec<bool> = (0..=max_k).map(|k| patterns.iter().any(|p| p.n() == k)).collect();
    // Quotients by block count, as per-block adjacency masks.
    let mut quotients: Vec<HashSet<Vec<u8>>> = vec![HashSet::new(); max_k + 1];
    let mut label = vec![0usize; n];
    let lowest = usize::from(host.is_connected());
    enumerate_labels(host, &mut label, 0, 0, lowest, max_k, &wanted, &mut quotients);
    patterns
        .iter()
        .map(|p| {
            let k = p.n();
            k == 0 || quotients[k].iter().any(|q| contains_spanning(p, q))
        })
        .collect()
}

/// `label[v] = 0` deletes `v`; blocks `1..` appear in first-use order.
#[allow(clippy::too_many_arguments)]
fn enumerate_labels(
    host: &Graph,
    label: &mut [usize],
    i: usize,
    blocks: usize,
    lowest: usize,
    max_k: usize,
    wanted: &[bool],
    quotients: &mut [HashSet<Vec<u8>>],
) {
    if i == label.len() {
        if blocks > 0 && wanted[blocks] {
            if let Some(q) = quotient(host, label, blocks) {
                quotients[blocks].insert(q);
            }
        }
        return;
    }
    for l in lowest..=(blocks + 1).min(max_k) {
        label[i] = l;
        enumerate_labels(host, label, i + 1, blocks.max(l), lowest, max_k, wanted, quotients);
    }
}

fn quotient(host: &Graph, label: &[usize], blocks: usize) -> Option<Vec<u8>> {
    let nbr: Vec<u16> = (0..host.n())
        .map(|v| host.neighbors(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect();
    let mut members = vec![0u16; blocks];
    for (v, &l) in label.iter().enumerate() {
        if l != 0 {
            members[l - 1] |= 1 << v;
        }
    }
    let mut adj = vec![0u8; blocks];
    for (b, &set) in members.iter().enumerate() {
        let mut reached = set & set.wrapping_neg();
        loop {
            let grown = (0..host.n())
                .filter(|v| reached >> v & 1 == 1)
                .fold(reached, |m, v| m | (nbr[v] & set));
            if grown == reached {
                break;
            }
            reached = grown;
        }
        if reached != set {
            return None;
        }
        let touched = (0..host.n())
            .filter(|v| set >> v & 1 == 1)
            .fold(0u16, |m, v| m | nbr[v]);
        for (c, &other) in members.iter().enumerate() {
            if c != b && touched & other != 0 {
                adj[b] |= 1 << c;
            }
        }
    }
    Some(adj)
}

/// Whether some bijection maps every pattern edge onto a quotient edge.
fn contains_spanning(pattern: &Graph, adj: &[u8]) -> bool {
    let mut have: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut need: Vec<u32> = (0..pattern.n()).map(|v| pattern.degree(v) as u32).collect();
    have.sort_unstable();
    need.sort_unstable();
    if need.iter().zip(&have).any(|(n, h)| n > h) {
        return false;
    }
    let mut p: Vec<usize> = (0..pattern.n()).collect();
    loop {
        if pattern.edges().iter().all(|&(u, v)| adj[p[u]] >> p[v] & 1 == 1) {
            return true;
        }
        if !next_permutation(&mut p) {
            return false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, path, wheel};

    #[test]
    fn connected_class_counts() {
        let counts: Vec<usize> = (1..=5).map(brute_force_connected_classes).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21]);
    }

    #[test]
    fn certificates() {
        let c = cycle(5).unwrap();
        assert_eq!(
            brute_force_certificate(&c),
            brute_force_certificate(&c.relabel(&[2, 4, 1, 0, 3]))
        );
        assert_ne!(brute_force_certificate(&c), brute_force_certificate(&path(5).unwrap()));
    }

    #[test]
    fn minors() {
        assert!(brute_force_has_minor(&complete(4).unwrap(), &wheel(4).unwrap()));
        assert!(!brute_force_has_minor(&complete(4).unwrap(), &cycle(6).unwrap()));
        assert!(brute_force_has_minor(&complete(3).unwrap(), &cycle(6).unwrap()));
    }

    #[test]
    fn partition_table_matches_labeling_oracle() {
        let patterns = [complete(3).unwrap(), complete(4).unwrap(), cycle(4).unwrap(), complete(5).unwrap()];
        let two_triangles = complete(3).unwrap().disjoint_union(&complete(3).unwrap());
        for host in [wheel(5).unwrap(), cycle(6).unwrap(), complete(5).unwrap(), path(4).unwrap(), two_triangles] {
            let table = partition_minor_table(&host, &patterns);
            let direct: Vec<bool> = patterns.iter().map(|p| brute_force_has_minor(p, &host)).collect();
            assert_eq!(table, direct);
        }
    }
}
