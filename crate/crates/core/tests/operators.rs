mod common;

use common::small_corpus;
use proptest::prelude::*;
use wtoll::generators::random_connected_gnp;
use wtoll::interval::{interval_by_membership, pair_interval, PairIntervals};
use wtoll::oracle::{oracle_interval, Oracle};
use wtoll::{
    brute_force_wth, extreme_vertices, hull, interval, representatives, twin_classes, wth, wtn,
    Graph, VertexSet,
};

fn pairs(g: &Graph) -> Vec<(usize, usize)> {
    g.non_edges().collect()
}

#[test]
fn longer_walk_bound_changes_nothing() {
    let long = |n: usize| Oracle { cap: 9, max_len: Some(3 * n) };
    for g in small_corpus().iter().filter(|g| g.n() <= 6) {
        for (u, w) in pairs(g) {
            for v in g.vertices().filter(|&v| v != u && v != w) {
                let short = Oracle::default().membership(g, u, w, v).unwrap();
                let longer = long(g.n()).membership(g, u, w, v).unwrap();
                assert_eq!(short.is_some(), longer.is_some());
                if let Some(walk) = longer {
                    assert!(walk.is_weakly_toll(g));
                    assert!(walk.sequence.contains(&v));
                    assert_eq!(walk.sequence[0], u);
                    assert_eq!(*walk.sequence.last().unwrap(), w);
                }
            }
        }
    }
}

#[test]
fn pair_intervals_match_oracle() {
    for g in small_corpus() {
        for (a, b) in pairs(&g) {
            let s = VertexSet::from([a, b]);
            assert_eq!(pair_interval(&g, a, b), oracle_interval(&g, &s).unwrap());
        }
    }
}

#[test]
fn twin_interchange() {
    for g in small_corpus() {
        let p = twin_classes(&g);
        for (w, z) in pairs(&g) {
            let iv = pair_interval(&g, w, z);
            for class in &p.classes {
                let inside: Vec<usize> = class.iter().filter(|&x| x != w && x != z).collect();
                let hits = inside.iter().filter(|&&x| iv.contains(x)).count();
                assert!(hits == 0 || hits == inside.len());
            }
        }
    }
}

#[test]
fn interval_of_representatives() {
    for g in small_corpus() {
        let p = twin_classes(&g);
        let n = g.n();
        for mask in 1u32..(1 << n) {
            let s: VertexSet = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            let hat = representatives(&p, &s);
            assert_eq!(interval(&g, &s), s.union(&interval(&g, &hat)));
        }
    }
}

#[test]
fn extreme_classes_are_uniform() {
    for g in small_corpus() {
        let ext = extreme_vertices(&g);
        for class in &twin_classes(&g).classes {
            assert!(class.is_subset(&ext) || class.is_disjoint(&ext));
        }
    }
}

#[test]
fn invariant_witness_relations() {
    for g in small_corpus() {
        let n_result = wtn(&g).unwrap();
        let h_result = wth(&g).unwrap();
        assert!(h_result.value <= n_result.value);
        let ext = extreme_vertices(&g);
        assert!(ext.is_subset(&n_result.witness));
        assert!(ext.is_subset(&h_result.witness));
        assert!(ext.is_subset(&brute_force_wth(&g).unwrap().witness));
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, 0.1f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| random_connected_gnp(n, p, seed))
}

fn arb_graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), proptest::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let s: VertexSet = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect();
            (g, s)
        })
    })
}

proptest! {
    #[test]
    fn batched_interval_matches_membership((g, s) in arb_graph_and_set(9)) {
        let fast = interval(&g, &s);
        prop_assert_eq!(&fast, &interval_by_membership(&g, &s));
        prop_assert_eq!(&fast, &oracle_interval(&g, &s).unwrap());
        prop_assert_eq!(&fast, &PairIntervals::new(&g).interval(&s));
    }

    #[test]
    fn hull_is_least_convex_superset((g, s) in arb_graph_and_set(10)) {
        let h = hull(&g, &s);
        prop_assert!(s.is_subset(&h));
        prop_assert_eq!(&interval(&g, &h), &h);
        prop_assert_eq!(&PairIntervals::new(&g).hull(&s), &h);
        // every step of the closure stays inside h
        let mut cur = s.clone();
        loop {
            let next = interval(&g, &cur);
            prop_assert!(next.is_subset(&h));
            if next == cur {
                break;
            }
            cur = next;
        }
        prop_assert_eq!(cur, h);
    }

    #[test]
    fn extreme_vertices_match_definition(g in arb_graph(12)) {
        let ext = extreme_vertices(&g);
        for x in g.vertices() {
            let rest = g.all_vertices().difference(&VertexSet::from([x]));
            let generated = hull(&g, &rest).contains(x);
            prop_assert_eq!(ext.contains(x), !generated);
        }
    }
}
