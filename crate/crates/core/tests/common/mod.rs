#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wtoll::generators::gnp_with;
use wtoll::{connected_components, is_clique, parse_graph6, Graph, VertexSet};

const CONNECTED_UPTO_7: &str = include_str!("../data/connected_upto7.g6");

/// All 996 connected graphs on 1..=7 vertices up to isomorphism.
pub fn small_corpus() -> Vec<Graph> {
    CONNECTED_UPTO_7
        .lines()
        .map(|l| parse_graph6(l).expect("corpus line parses"))
        .collect()
}

/// Seeded connected `G(n, p)` graphs with `n` in `lo..=hi` and `p` drawn from
/// `[0.15, 0.7)`.
pub fn random_connected(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.15..0.7);
            loop {
                let g = gnp_with(n, p, &mut rng);
                if g.is_connected() {
                    break g;
                }
            }
        })
        .collect()
}

fn subsets(members: &[usize]) -> impl Iterator<Item = VertexSet> + '_ {
    (0u32..(1 << members.len())).map(move |mask| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    })
}

/// `G[s]` is connected and no clique of it separates it.
pub fn brute_is_prime_subset(g: &Graph, s: &VertexSet) -> bool {
    let (h, _) = g.induced(s);
    let all: Vec<usize> = h.vertices().collect();
    let prime = subsets(&all)
        .filter(|c| is_clique(&h, c))
        .all(|c| connected_components(&h, &c).len() <= 1);
    prime
}

/// Maximal vertex sets inducing prime subgraphs, sorted lexicographically.
pub fn brute_atoms(g: &Graph) -> Vec<VertexSet> {
    let all: Vec<usize> = g.vertices().collect();
    let mut prime: Vec<VertexSet> = subsets(&all)
        .filter(|s| !s.is_empty() && brute_is_prime_subset(g, s))
        .collect();
    prime.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut maximal: Vec<VertexSet> = Vec::new();
    for s in prime {
        if !maximal.iter().any(|m| s.is_subset(m)) {
            maximal.push(s);
        }
    }
    maximal.sort();
    maximal
}

/// Pass/fail line in the acceptance log format.
pub fn report(id: &str, title: &str, violations: usize, detail: &str) {
    let status = if violations == 0 { "PASS" } else { "FAIL" };
    println!("[{status}] {id} {title}: {violations} violations ({detail})");
}
