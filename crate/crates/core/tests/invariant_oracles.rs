mod common;

use strength_core::corpus::Filter;
use strength_core::invariants::{
    brute_invariant, domination_number, edge_cover_number, independence_number, is_dominating,
    is_edge_cover, is_independent, is_matching, is_vertex_cover, matching_number, vertex_cover_number,
    InvariantBundle, InvariantError, Param,
};
use strength_core::{Family, Graph, VertexSet};

fn solver_value(g: &Graph, p: Param) -> Result<usize, InvariantError> {
    match p {
        Param::Gamma => domination_number(g).map(|r| r.0),
        Param::Alpha => vertex_cover_number(g).map(|r| r.0),
        Param::Alpha1 => edge_cover_number(g).map(|r| r.0),
        Param::Beta => independence_number(g).map(|r| r.0),
        Param::Beta1 => matching_number(g).map(|r| r.0),
    }
}

fn assert_matches_oracle(g: &Graph) {
    for p in Param::ALL {
        let oracle = brute_invariant(g, p);
        let solver = solver_value(g, p);
        match (oracle, solver) {
            (Ok(a), Ok(b)) => assert_eq!(a, b, "{p} on {g:?}"),
            (Err(InvariantError::IsolatedVertex(_)), Err(InvariantError::IsolatedVertex(_))) => {
                assert_eq!(p, Param::Alpha1)
            }
            (a, b) => panic!("{p} on {g:?}: oracle {a:?} vs solver {b:?}"),
        }
    }
}

#[test]
fn solvers_match_oracle_exhaustive_up_to_5() {
    for g in common::labeled(1..=5, Filter::All) {
        assert_matches_oracle(&g);
    }
}

#[test]
fn solvers_match_oracle_on_random_order_7() {
    for g in common::random_graphs(7, 100, common::RANDOM_SEED) {
        assert_matches_oracle(&g);
    }
}

#[test]
fn gallai_identities_and_witnesses_up_to_6() {
    for g in common::labeled(1..=6, Filter::All) {
        let b = InvariantBundle::compute(&g).unwrap();
        b.verify(&g).unwrap();
        assert_eq!(b.alpha + b.beta, g.order());
        if g.min_degree() >= 1 {
            assert_eq!(b.alpha1.unwrap() + b.beta1, g.order());
            // a maximal independent set dominates
            assert!(b.gamma <= b.beta);
        } else {
            assert_eq!(b.alpha1, None);
        }
    }
}

#[test]
fn witnesses_are_lexicographically_smallest_up_to_5() {
    // compare against the first optimal subset in sorted-sequence order
    fn lex_first(n: usize, size: usize, ok: impl Fn(VertexSet) -> bool) -> VertexSet {
        fn combos(start: usize, n: usize, left: usize, cur: &mut Vec<usize>, ok: &dyn Fn(VertexSet) -> bool) -> Option<Vec<usize>> {
            if left == 0 {
                return ok(VertexSet::from_vertices(cur.iter().copied())).then(|| cur.clone());
            }
            for v in start..n {
                cur.push(v);
                if let Some(r) = combos(v + 1, n, left - 1, cur, ok) {
                    return Some(r);
                }
                cur.pop();
            }
            None
        }
        VertexSet::from_vertices(combos(0, n, size, &mut Vec::new(), &ok).unwrap())
    }
    for g in common::labeled(1..=5, Filter::All) {
        let n = g.order();
        let (gamma, ds) = domination_number(&g).unwrap();
        assert_eq!(ds, lex_first(n, gamma, |s| is_dominating(&g, s)));
        let (beta, is) = independence_number(&g).unwrap();
        assert_eq!(is, lex_first(n, beta, |s| is_independent(&g, s)));
        let (alpha, vc) = vertex_cover_number(&g).unwrap();
        assert_eq!(vc, lex_first(n, alpha, |s| is_vertex_cover(&g, s)));
    }
}

#[test]
fn edge_witnesses_are_feasible_on_random_graphs() {
    for n in [8, 12, 16] {
        for g in common::random_graphs(n, 20, common::RANDOM_SEED + n as u64) {
            let (b1, m) = matching_number(&g).unwrap();
            assert!(is_matching(&g, &m) && m.len() == b1);
            if g.min_degree() >= 1 {
                let (a1, c) = edge_cover_number(&g).unwrap();
                assert!(is_edge_cover(&g, &c) && c.len() == a1);
                assert_eq!(a1 + b1, n);
            }
        }
    }
}

#[test]
fn odd_cycle_values() {
    for k in 1..=5 {
        let c = Graph::generate(Family::Cycle, 2 * k + 1).unwrap();
        let b = InvariantBundle::compute(&c).unwrap();
        assert_eq!((b.alpha, b.alpha1, b.beta, b.beta1), (k + 1, Some(k + 1), k, k));
    }
}

#[test]
fn solvers_handle_the_order_cap() {
    let g = common::random_graphs(32, 1, 7).pop().unwrap();
    let b = InvariantBundle::compute(&g).unwrap();
    b.verify(&g).unwrap();
}
