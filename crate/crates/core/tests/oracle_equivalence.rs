mod common;

use common::Checker;
use pvc4::generate::{gnp, make_disjoint_instance, rng_seeded};
use pvc4::oracle::{brute_min_disjoint, brute_min_pvc4, enumerate_labeled_graphs};
use pvc4::solver::{minimize_with, solve_disjoint_with, verify_cover, SolveOptions};
use pvc4::Graph;

fn check_minimum(g: &Graph, checker: &mut Checker) {
    let want = brute_min_pvc4(g).unwrap().min_size;
    let got = minimize_with(g, SolveOptions::default(), checker).unwrap();
    assert_eq!(got.size, want, "graph {:?}", g.edges().collect::<Vec<_>>());
    assert!(verify_cover(g, &got.cover));
}

#[test]
fn all_labeled_graphs_up_to_five() {
    let mut checker = Checker::default();
    for n in 0..=5 {
        for g in enumerate_labeled_graphs(n).unwrap() {
            check_minimum(&g, &mut checker);
        }
    }
    checker.assert_clean();
}

#[test]
fn random_graphs_up_to_eight() {
    let mut checker = Checker::default();
    let mut rng = rng_seeded(11);
    for n in 6..=8 {
        for i in 0..200 {
            let p = [0.2, 0.35, 0.5, 0.7][i % 4];
            check_minimum(&gnp(n, p, &mut rng), &mut checker);
        }
    }
    checker.assert_clean();
}

#[test]
fn random_disjoint_instances() {
    let mut checker = Checker::default();
    let mut rng = rng_seeded(12);
    let mut done = 0;
    for seed in 0..400u64 {
        let n = 8 + (seed % 9) as usize;
        let g = gnp(n, [0.15, 0.25, 0.35][(seed % 3) as usize], &mut rng);
        let Ok(inst) = make_disjoint_instance(&g, seed, 0) else { continue };
        let Some(best) = brute_min_disjoint(&inst).unwrap() else { continue };
        for k in 0..=best.min_size as i64 + 1 {
            let res = solve_disjoint_with(&inst.with_k(k), SolveOptions::default(), &mut checker).unwrap();
            assert_eq!(res.cover.is_some(), k >= best.min_size as i64, "seed {seed} k {k}");
            if let Some(c) = res.cover {
                assert!(c.len() as i64 <= k && c.iter().all(|&v| !inst.is_v1(v)));
                assert!(verify_cover(inst.graph(), &c));
            }
        }
        done += 1;
    }
    assert!(done > 300, "only {done} instances");
    checker.assert_clean();
}
