mod common;

use proptest::prelude::*;
use strength_core::corpus::{canonical_code, Filter};
use strength_core::graph::fk_adjacent;
use strength_core::{emit_graph6, parse_graph6, Family, Graph};

#[test]
fn complement_is_an_involution_up_to_order_6() {
    for g in common::labeled(1..=6, Filter::All) {
        let c = g.complement();
        assert_eq!(c.edge_count() + g.edge_count(), g.order() * (g.order() - 1) / 2);
        assert_eq!(c.complement(), g);
    }
}

#[test]
fn c5_is_self_complementary() {
    let c5 = Graph::generate(Family::Cycle, 5).unwrap();
    let comp = c5.complement();
    assert_eq!(comp.edge_count(), 5);
    assert_eq!(canonical_code(&c5).unwrap(), canonical_code(&comp).unwrap());
    // explicit isomorphism: i -> 2i mod 5 maps C_5 onto its complement
    let perm: Vec<usize> = (0..5).map(|i| 2 * i % 5).collect();
    assert_eq!(c5.permute(&perm), comp);
}

#[test]
fn fk_edge_count_and_closed_form() {
    for k in 2..=40 {
        let f = Graph::generate(Family::Fk, k).unwrap();
        assert_eq!(f.edge_count(), k * k / 4, "F_{k}");
        // interval definition: i in [1, floor(k/2)], j in [1+i, k+1-i]
        for i in 1..=k {
            for j in (i + 1)..=k {
                let by_interval = i <= k / 2 && (1 + i..=k + 1 - i).contains(&j);
                assert_eq!(by_interval, fk_adjacent(k, i, j), "F_{k} v{i}v{j}");
                assert_eq!(by_interval, f.has_edge(i - 1, j - 1), "F_{k} v{i}v{j}");
            }
        }
    }
}

#[test]
fn fk_nests_under_identity() {
    for k in 2..40 {
        let small = Graph::generate(Family::Fk, k).unwrap();
        let big = Graph::generate(Family::Fk, k + 1).unwrap();
        assert!(small.edges().iter().all(|&(u, v)| big.has_edge(u, v)), "F_{k} in F_{}", k + 1);
    }
}

#[test]
fn graph6_round_trip_up_to_order_6() {
    for g in common::labeled(1..=6, Filter::All) {
        let token = emit_graph6(&g);
        assert_eq!(parse_graph6(&token).unwrap(), g);
        assert_eq!(emit_graph6(&parse_graph6(&token).unwrap()), token);
    }
}

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=64).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..200).prop_map(move |pairs| {
            let edges: Vec<_> = pairs.into_iter().filter(|(u, v)| u != v).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip_any_order(g in arb_graph()) {
        let token = emit_graph6(&g);
        prop_assert_eq!(parse_graph6(&token).unwrap(), g);
    }

    #[test]
    fn adjacency_is_symmetric_and_loop_free(g in arb_graph()) {
        for u in 0..g.order() {
            prop_assert!(!g.has_edge(u, u));
            for v in 0..g.order() {
                prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn canonical_code_ignores_relabeling(seed in any::<u64>(), n in 1usize..=7) {
        let g = common::random_graphs(n, 1, seed).pop().unwrap();
        let mut perm: Vec<usize> = (0..n).collect();
        // deterministic shuffle from the seed
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&g.permute(&perm)).unwrap());
    }
}
