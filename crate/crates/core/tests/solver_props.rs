//! Solver properties against the oracle on random small inputs.

mod common;

use common::{graph_strategy, instance_strategy, Checker};
use proptest::prelude::*;
use pvc4::oracle::{brute_min_disjoint, brute_min_pvc4};
use pvc4::solver::{iterative_compression_with, minimize_with, solve_disjoint_with};
use pvc4::{verify_cover, SolveOptions};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn minimum_matches_oracle(g in graph_strategy(10)) {
        let mut checker = Checker::default();
        let got = minimize_with(&g, SolveOptions::default(), &mut checker).unwrap();
        prop_assert_eq!(got.size, brute_min_pvc4(&g).unwrap().min_size);
        prop_assert!(verify_cover(&g, &got.cover));
        checker.assert_clean();
    }

    #[test]
    fn compression_is_monotone_in_k(g in graph_strategy(10)) {
        let mut checker = Checker::default();
        let best = brute_min_pvc4(&g).unwrap().min_size as i64;
        for k in 0..=g.num_vertices() as i64 {
            let res = iterative_compression_with(&g, k, SolveOptions::default(), &mut checker).unwrap();
            prop_assert_eq!(res.cover.is_some(), k >= best);
            if let Some(c) = res.cover {
                prop_assert!(c.len() as i64 <= k && verify_cover(&g, &c));
            }
        }
        checker.assert_clean();
    }

    #[test]
    fn disjoint_covers_avoid_v1(inst in instance_strategy(12)) {
        let Some(inst) = inst else { return Ok(()) };
        let mut checker = Checker::default();
        let best = brute_min_disjoint(&inst).unwrap().map(|a| a.min_size as i64);
        prop_assert!(best.is_some());
        for k in 0..=inst.v2_count() as i64 {
            let res = solve_disjoint_with(&inst.with_k(k), SolveOptions::default(), &mut checker).unwrap();
            prop_assert_eq!(res.cover.is_some(), Some(k) >= best);
            if let Some(c) = res.cover {
                prop_assert!(c.len() as i64 <= k);
                prop_assert!(c.iter().all(|&v| !inst.is_v1(v)));
                prop_assert!(verify_cover(inst.graph(), &c));
            }
        }
        checker.assert_clean();
    }
}

#[test]
fn node_cap_is_enforced() {
    let g = pvc4::generate::gnp(20, 0.2, &mut pvc4::generate::rng_seeded(3));
    let err = pvc4::solver::iterative_compression_with(&g, 4, SolveOptions { node_cap: 2 }, &mut pvc4::solver::Quiet);
    assert_eq!(err.unwrap_err(), pvc4::SolveError::NodeBudgetExceeded { cap: 2 });
}

#[test]
fn negative_budget_is_rejected() {
    let g = pvc4::generate::path(5);
    assert_eq!(pvc4::iterative_compression(&g, -1).unwrap_err(), pvc4::SolveError::NegativeBudget(-1));
}
