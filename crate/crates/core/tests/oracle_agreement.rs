mod common;

use std::collections::BTreeSet;
use std::time::Duration;

use common::*;
use treerep::derive::{derive_graph, DeriveMode};
use treerep::graph::{recognize, Property};
use treerep::mixed::verify_mixed_partition;
use treerep::oracle::{
    enumerate_chordless_cycles, nonisomorphic_trees, search_mixed_partition, search_overlap_rep,
    SearchBudget, SearchOutcome,
};
use treerep::tree::{canonical_form, is_covering_subtree, tree_isomorphic, Tree};
use treerep::workbench::gen::gen_covered_instance;

fn budget() -> SearchBudget {
    SearchBudget::default().with_time_limit(Duration::from_secs(60))
}

fn induced_cycle_subsets(g: &treerep::graph::SimpleGraph) -> usize {
    let n = g.vertex_count();
    (0u32..(1 << n))
        .filter(|&m| m.count_ones() >= 4)
        .filter(|&m| {
            let vs: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
            let two = vs.iter().all(|&v| vs.iter().filter(|&&u| g.has_edge(u, v)).count() == 2);
            two && {
                // connected 2-regular means a single cycle
                let mut seen = vec![vs[0]];
                let mut i = 0;
                while i < seen.len() {
                    for &u in &vs {
                        if g.has_edge(seen[i], u) && !seen.contains(&u) {
                            seen.push(u);
                        }
                    }
                    i += 1;
                }
                seen.len() == vs.len()
            }
        })
        .count()
}

#[test]
fn chordless_cycles_agree_with_chordality() {
    for seed in 0..500u64 {
        let n = 1 + (seed % 6) as usize;
        let g = random_graph(n, 0.3 + 0.4 * ((seed % 5) as f64 / 4.0), seed);
        let cycles = enumerate_chordless_cycles(&g).unwrap();
        let chordal = recognize(&g, Property::Chordal).unwrap().holds;
        assert_eq!(cycles.is_empty(), chordal, "seed {seed}");
        assert_eq!(chordal, chordal_by_subsets(&g), "seed {seed}");
        assert_eq!(cycles.len(), induced_cycle_subsets(&g), "seed {seed}");
        for c in &cycles {
            assert!(c.len() >= 4);
            let k = c.len();
            for i in 0..k {
                for j in i + 1..k {
                    let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                    assert_eq!(g.has_edge_between(&c[i], &c[j]), consecutive, "seed {seed} {c:?}");
                }
            }
        }
    }
}

#[test]
fn eight_vertex_cycles_and_wheels() {
    let c8 = cycle(8);
    assert_eq!(enumerate_chordless_cycles(&c8).unwrap().len(), 1);
    assert_eq!(enumerate_chordless_cycles(&c8.complement()).unwrap().len(), induced_cycle_subsets(&c8.complement()));
}

#[test]
fn mixed_search_results_always_verify() {
    let mut found = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed % 6) as usize;
        let g = random_graph(n, 0.5, seed);
        match search_mixed_partition(&g, &budget()).unwrap() {
            SearchOutcome::Found(p) => {
                found += 1;
                assert!(verify_mixed_partition(&p, None).is_valid(), "seed {seed}");
                assert!(p.represented_graph().same_labelled_graph(&g));
            }
            SearchOutcome::NotFound => {}
            SearchOutcome::Inconclusive { .. } => panic!("seed {seed} ran out of time"),
        }
    }
    assert!(found > 0);
}

#[test]
fn covered_overlap_graphs_always_have_a_partition() {
    for seed in 0..150u64 {
        let (f, _) = gen_covered_instance(3 + (seed % 8) as usize, 1 + (seed % 6) as usize, 2, seed).unwrap();
        let g = derive_graph(&f, DeriveMode::Overlap);
        let out = search_mixed_partition(&g, &budget()).unwrap();
        assert!(out.found().is_some(), "seed {seed}: {out:?}");
    }
}

#[test]
fn chordal_graphs_take_everything_as_e1() {
    // (V, E1) = complement(g) is cochordal exactly when g is chordal
    for seed in 0..100u64 {
        let g = random_graph(5, 0.5, seed);
        if chordal_by_subsets(&g) {
            assert!(search_mixed_partition(&g, &budget()).unwrap().found().is_some());
        }
    }
}

#[test]
fn k1_cover_matches_cocomparability_on_small_graphs() {
    let k1 = Tree::single("r");
    let check = |g: &treerep::graph::SimpleGraph| {
        let coc = comparability_by_orientations(&complement_graph(g));
        assert_eq!(recognize(g, Property::Cocomparability).unwrap().holds, coc);
        match search_overlap_rep(g, &budget(), Some(&k1)).unwrap() {
            SearchOutcome::Found(f) => {
                assert!(coc, "{g:?} represented but not cocomparability");
                assert_eq!(overlap_pairs_sorted(&f), graph_pairs(g));
                let any_vertex_covers = f
                    .host()
                    .labels()
                    .iter()
                    .any(|v| is_covering_subtree(&f, &BTreeSet::from([v.clone()])).unwrap());
                assert!(any_vertex_covers);
            }
            SearchOutcome::NotFound => assert!(!coc, "{g:?} cocomparability but no K1 rep"),
            SearchOutcome::Inconclusive { .. } => panic!("{g:?} ran out of time"),
        }
    };
    for n in 1..=4 {
        for mask in 0u32..(1 << (n * (n - 1) / 2)) {
            let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|i| mask >> i & 1 == 1).collect();
            check(&graph_from_bits(n, &bits));
        }
    }
    for seed in 0..40u64 {
        check(&random_graph(5, 0.5, seed));
    }
    check(&cycle(5));
}

#[test]
fn overlap_search_finds_true_representations() {
    for seed in 0..60u64 {
        let n = 1 + (seed % 5) as usize;
        let g = random_graph(n, 0.5, seed);
        if let SearchOutcome::Found(f) = search_overlap_rep(&g, &budget(), None).unwrap() {
            assert_eq!(overlap_pairs_sorted(&f), graph_pairs(&g), "seed {seed}");
            for m in f.members() {
                assert!(subset_connected(f.host(), &m.vertices));
            }
        }
    }
}

#[test]
fn k2_covered_c4_has_an_edge_cover() {
    let k2 = Tree::path(["a", "b"]).unwrap();
    let f = search_overlap_rep(&cycle(4), &budget(), Some(&k2)).unwrap();
    let f = f.found().expect("found");
    assert_eq!(overlap_pairs_sorted(f), graph_pairs(&cycle(4)));
    let edge_covers = f.host().edges().into_iter().filter(|(a, b)| {
        covers(f, &BTreeSet::from([a.clone(), b.clone()]))
    });
    assert!(edge_covers.count() > 0);
}

#[test]
fn host_enumeration_is_isomorph_free() {
    let hosts = nonisomorphic_trees(7);
    for (i, a) in hosts.iter().enumerate() {
        for b in &hosts[i + 1..] {
            assert!(tree_isomorphic(a, b).is_none());
        }
    }
    // every labelled tree on six vertices is isomorphic to some listed host
    for seed in 0..200 {
        let t = treerep::workbench::gen_tree(6, seed).unwrap();
        assert!(hosts.iter().any(|h| canonical_form(h) == canonical_form(&t)));
    }
}

#[test]
fn searches_are_reproducible() {
    for seed in 0..30u64 {
        let g = random_graph(1 + (seed % 5) as usize, 0.5, seed);
        assert_eq!(
            search_mixed_partition(&g, &budget()).unwrap(),
            search_mixed_partition(&g, &budget()).unwrap()
        );
        assert_eq!(
            search_overlap_rep(&g, &budget(), None).unwrap(),
            search_overlap_rep(&g, &budget(), None).unwrap()
        );
    }
}

#[test]
fn tiny_budget_is_inconclusive_not_negative() {
    let b = SearchBudget::new(7, 5, Duration::from_nanos(1)).unwrap();
    let out = search_overlap_rep(&cycle(5), &b, Some(&Tree::single("r"))).unwrap();
    assert!(out.is_inconclusive(), "{out:?}");
}
