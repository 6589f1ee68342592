#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strength_core::corpus::{enumerate_labeled, Filter};
use strength_core::Graph;

pub const RANDOM_SEED: u64 = 0x5eed_2024;

/// `count` Erdos-Renyi graphs G(n, 1/2) from a fixed seed.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(0.5) {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
        .collect()
}

/// Every labeled graph with order in `orders`.
pub fn labeled(orders: std::ops::RangeInclusive<usize>, filter: Filter) -> Vec<Graph> {
    orders
        .flat_map(|n| enumerate_labeled(n, filter).unwrap())
        .collect()
}

/// Minimum over all numberings by recursive permutation, independent of the
/// library solvers.
pub fn strength_by_permutations(g: &Graph) -> usize {
    fn go(g: &Graph, labels: &mut Vec<usize>, free: &mut Vec<bool>, best: &mut usize) {
        let n = g.order();
        let v = labels.len();
        if v == n {
            let s = g.edges().iter().map(|&(a, b)| labels[a] + labels[b]).max().unwrap();
            *best = (*best).min(s);
            return;
        }
        for l in 1..=n {
            if free[l] {
                free[l] = false;
                labels.push(l);
                go(g, labels, free, best);
                labels.pop();
                free[l] = true;
            }
        }
    }
    let mut best = usize::MAX;
    go(g, &mut Vec::new(), &mut vec![true; g.order() + 1], &mut best);
    best
}
