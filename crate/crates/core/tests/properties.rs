use std::collections::HashSet;

use gsym::automorphism::{automorphisms, canonical_form};
use gsym::families::{complete, cycle, path, small_corpus, CorpusFilters};
use gsym::graph::{cartesian_product, contract_partition, is_biregular, Partition};
use gsym::minors::{action_on_minor, hadwiger_number, invariant_contraction, kostochka_consistent};
use gsym::report::{analyze, AnalyzeOptions, Report};
use gsym::separators::{
    double_matching_paths, is_separator, max_disjoint_paths, min_separator, min_separator_size,
};
use gsym::{ColoredGraph, Graph};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn connected(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_map(|g| {
        let comps = g.components();
        let bridges = comps.windows(2).map(|w| (w[0][0], w[1][0]));
        Graph::new(g.n(), g.edges().iter().copied().chain(bridges)).unwrap()
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn plain(g: &Graph) -> ColoredGraph {
    ColoredGraph::uncolored(g.clone())
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn relabeling_preserves_group_order_and_canonical_form((g, p) in with_permutation(9)) {
        let h = g.relabel(&p);
        let (cg, ch) = (canonical_form(&plain(&g)), canonical_form(&plain(&h)));
        prop_assert_eq!(cg.aut.group.order(), ch.aut.group.order());
        prop_assert_eq!(cg.form, ch.form);
    }

    #[test]
    fn product_is_commutative(a in connected(4), b in connected(4)) {
        let ab = canonical_form(&plain(&cartesian_product(&a, &b)));
        let ba = canonical_form(&plain(&cartesian_product(&b, &a)));
        prop_assert_eq!(ab.form, ba.form);
    }

    #[test]
    fn menger_duality(g in connected(10), split in 1usize..4) {
        let n = g.n();
        prop_assume!(n >= 2);
        let k = split.min(n - 1).min(n / 2).max(1);
        let a: Vec<usize> = (0..k).collect();
        let b: Vec<usize> = (n - k..n).collect();
        let size = min_separator_size(&g, &a, &b).unwrap();
        let paths = max_disjoint_paths(&g, &a, &b).unwrap();
        let sep = min_separator(&g, &a, &b).unwrap();
        prop_assert_eq!(size, paths.len());
        prop_assert!(paths.is_valid_in(&g));
        prop_assert_eq!(sep.separator.len(), size);
        prop_assert!(is_separator(&g, &a, &b, &sep.separator));
    }

    #[test]
    fn double_matching_on_random_couplings(a in 1usize..6, extra in 0usize..3, d in 1usize..8, shift in 0usize..8) {
        let b = a + extra;
        let d1 = (1..=b).filter(|x| a * x % b == 0).nth(d % b).unwrap_or(b);
        let av: Vec<usize> = (0..a).collect();
        let bv: Vec<usize> = (a..a + b).collect();
        let cv: Vec<usize> = (a + b..2 * a + b).collect();
        let mut edges = Vec::new();
        for i in 0..a {
            for s in 0..d1 {
                edges.push((av[i], bv[(i * d1 + s) % b]));
                edges.push((cv[i], bv[(i * d1 + s + shift) % b]));
            }
        }
        let g = Graph::new(2 * a + b, edges).unwrap();
        prop_assert!(is_biregular(&g, &av, &bv).unwrap().is_some());
        let paths = double_matching_paths(&g, &av, &bv, &cv).unwrap();
        prop_assert_eq!(paths.len(), a);
    }

    #[test]
    fn contraction_splits_group_order(g in connected(7)) {
        let cg = plain(&g);
        let aut = automorphisms(&cg);
        for o in 0..aut.edge_orbits.len() {
            let c = invariant_contraction(&cg, &aut, o).unwrap();
            let (image, kernel) = action_on_minor(&cg, &aut, &c.blocks).unwrap();
            prop_assert_eq!(image.order() * kernel.order(), aut.group.order().clone());
            for x in image.generators() {
                prop_assert!(c.graph.is_automorphism(x.images()));
            }
        }
    }

    #[test]
    fn contracting_in_stages_matches_contracting_at_once(g in connected(7), seed in any::<u64>()) {
        let n = g.n();
        let labels: Vec<usize> = (0..n).map(|v| (seed >> (v % 32)) as usize % 3 + 3 * (v % 2)).collect();
        let fine = Partition::new(n, connected_classes(&g, &labels)).unwrap();
        let (q1, map1) = contract_partition(&g, &fine).unwrap();
        let coarse_labels: Vec<usize> = (0..q1.n()).map(|i| i / 2).collect();
        let coarse = Partition::new(q1.n(), connected_classes(&q1, &coarse_labels)).unwrap();
        let (q2, map2) = contract_partition(&q1, &coarse).unwrap();
        let composed: Vec<usize> = (0..n).map(|v| map2[map1[v]]).collect();
        let direct = Partition::from_labels(&composed);
        let (q3, map3) = contract_partition(&g, &direct).unwrap();
        let relabel: Vec<usize> = {
            let mut r = vec![usize::MAX; q3.n()];
            for v in 0..n {
                r[map3[v]] = composed[v];
            }
            r
        };
        prop_assert_eq!(q3.relabel(&relabel), q2);
    }

    #[test]
    fn hadwiger_is_minor_monotone(g in connected(7), e in any::<prop::sample::Index>()) {
        prop_assume!(g.m() > 0);
        let h = hadwiger_number(&g).unwrap();
        let (u, v) = g.edges()[e.index(g.m())];
        let deleted = Graph::new(g.n(), g.edges().iter().copied().filter(|&x| x != (u, v))).unwrap();
        prop_assert!(hadwiger_number(&deleted).unwrap() <= h);
        let labels: Vec<usize> = (0..g.n()).map(|x| if x == v { u } else { x }).collect();
        let (contracted, _) = contract_partition(&g, &Partition::from_labels(&labels)).unwrap();
        prop_assert!(hadwiger_number(&contracted).unwrap() <= h);
        prop_assert!(h <= hadwiger_number(&contracted).unwrap() + 1);
    }

    #[test]
    fn reports_round_trip_through_json(g in graph(7)) {
        let r = analyze("random", &plain(&g), &AnalyzeOptions::default());
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &r);
        let again = analyze("random", &plain(&g), &AnalyzeOptions::default());
        prop_assert_eq!(
            serde_json::to_string(&again.untimed()).unwrap(),
            serde_json::to_string(&r.untimed()).unwrap()
        );
    }
}

/// Connected pieces of the label classes of `g`.
fn connected_classes(g: &Graph, labels: &[usize]) -> Vec<Vec<usize>> {
    let classes = Partition::from_labels(labels);
    classes
        .blocks()
        .iter()
        .flat_map(|b| g.components_within(&(0..g.n()).map(|v| b.contains(&v)).collect::<Vec<_>>()))
        .collect()
}

#[test]
fn corpus_has_no_isomorphic_duplicates() {
    let corpus = small_corpus(7, &CorpusFilters::default()).unwrap();
    let forms: HashSet<_> = corpus.iter().map(|g| canonical_form(&plain(g)).form).collect();
    assert_eq!(forms.len(), corpus.len());
    assert!(corpus.iter().all(Graph::is_connected));
}

#[test]
fn kostochka_bound_holds_on_corpus() {
    for g in small_corpus(7, &CorpusFilters::default()).unwrap() {
        assert!(kostochka_consistent(&g, 1.5).unwrap(), "{:?}", g.edges());
    }
    for g in [complete(8).unwrap(), cycle(9).unwrap(), path(9).unwrap()] {
        assert!(kostochka_consistent(&g, 1.5).unwrap());
    }
}
