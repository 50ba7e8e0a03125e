//! Property tests over randomly generated graphs and constraint sets.

use proptest::prelude::*;

use kirchhoff::generators::{erdos_renyi_connected, RngSeed};
use kirchhoff::majorization::{
    majorizes, minimal_element, sample_feasible, schur_eval, ConstrainedSet,
};
use kirchhoff::spectral::{kirchhoff_index, laplacian_spectrum};
use kirchhoff::Graph;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (2usize..12, any::<u64>()).prop_map(|(n, bits)| {
        let mut pairs = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in (u + 1)..n {
                if (bits >> (k % 64)) & 1 == 1 {
                    pairs.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edge_list(n, &pairs).unwrap()
    })
}

proptest! {
    #[test]
    fn degree_sum_is_twice_edge_count(g in arb_graph()) {
        let total: usize = g.degree_sequence().as_slice().iter().sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn laplacian_rows_sum_to_zero(g in arb_graph()) {
        let l = g.laplacian();
        for i in 0..g.n() {
            prop_assert_eq!(l.row(i).iter().sum::<i64>(), 0);
        }
    }

    #[test]
    fn add_then_remove_is_identity(g in arb_graph(), idx in any::<usize>()) {
        let absent = g.non_edges();
        prop_assume!(!absent.is_empty());
        let (u, v) = absent[idx % absent.len()];
        let back = g.add_edge(u, v).unwrap().remove_edge(u, v).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn diameter_one_iff_complete(g in arb_graph()) {
        prop_assume!(g.n() >= 2 && g.is_connected());
        prop_assert_eq!(g.diameter().unwrap() == 1, g.is_complete());
        prop_assert_eq!(g.density().unwrap() == 1.0, g.is_complete());
    }

    #[test]
    fn edge_list_text_round_trips(g in arb_graph()) {
        let parsed = Graph::from_edge_list_str(&g.to_edge_list_string()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn connectivity_agrees_with_algebraic_connectivity(g in arb_graph()) {
        let s = laplacian_spectrum(&g).unwrap();
        let spectral_connected = g.n() == 1 || s.mu(g.n() - 1) > s.residual_tol();
        prop_assert_eq!(g.is_connected(), spectral_connected);
    }

    #[test]
    fn majorizes_is_reflexive_and_antisymmetric(
        mut x in proptest::collection::vec(0.0f64..10.0, 2..8),
        mut y in proptest::collection::vec(0.0f64..10.0, 2..8),
    ) {
        x.sort_by(|a, b| b.total_cmp(a));
        y.sort_by(|a, b| b.total_cmp(a));
        prop_assert!(majorizes(&x, &x).unwrap());
        if x.len() == y.len() {
            let fwd = majorizes(&x, &y).unwrap();
            let bwd = majorizes(&y, &x).unwrap();
            if fwd && bwd {
                for (a, b) in x.iter().zip(&y) {
                    prop_assert!((a - b).abs() <= 1e-9 * (1.0 + a.abs()));
                }
            }
        }
    }
}

#[test]
fn rayleigh_monotonicity_under_perturbation() {
    use rand::seq::IteratorRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for s in 0..30 {
        let g = erdos_renyi_connected(10, 0.4, &RngSeed::new(100, s)).unwrap();
        let k = kirchhoff_index(&g).unwrap();
        if let Some((u, v)) = g.non_edges().into_iter().choose(&mut rng) {
            let k_plus = kirchhoff_index(&g.add_edge(u, v).unwrap()).unwrap();
            assert!(k_plus < k, "K must strictly drop on edge addition");
        }
        for (u, v) in g.edges().collect::<Vec<_>>() {
            let g_minus = g.remove_edge(u, v).unwrap();
            if g_minus.is_connected() {
                let k_minus = kirchhoff_index(&g_minus).unwrap();
                assert!(k_minus > k, "K must strictly rise on edge removal");
                break;
            }
        }
    }
}

#[test]
fn minimal_element_is_majorized_by_samples() {
    use rand::Rng as _;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
    for _ in 0..25 {
        let n = rng.random_range(2..8);
        let a = rng.random_range(5.0..30.0);
        let mut lower: Vec<f64> = (0..n).map(|_| rng.random_range(0.0..a / n as f64)).collect();
        lower.sort_by(|x, y| y.total_cmp(x));
        let s = match ConstrainedSet::with_lower_bounds(a, lower) {
            Ok(s) => s,
            Err(_) => continue,
        };
        let me = minimal_element(&s).unwrap();
        assert!(s.contains(me.point()));
        let baseline = schur_eval(me.point(), 1.0).unwrap();
        for _ in 0..200 {
            if let Some(x) = sample_feasible(&s, &mut rng) {
                assert!(majorizes(me.point(), &x).unwrap());
                if x.iter().all(|&xi| xi > 0.0) {
                    assert!(schur_eval(&x, 1.0).unwrap() >= baseline - 1e-9);
                }
            }
        }
    }
}

#[test]
fn majorizes_is_transitive_on_sampled_triples() {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
    let s = ConstrainedSet::with_lower_bounds(12.0, vec![2.0, 1.0, 0.0, 0.0, 0.0]).unwrap();
    let mut triple = Vec::new();
    for _ in 0..300 {
        if let Some(x) = sample_feasible(&s, &mut rng) {
            triple.push(x);
            if triple.len() == 3 {
                let (a, b, c) = (&triple[0], &triple[1], &triple[2]);
                if majorizes(a, b).unwrap() && majorizes(b, c).unwrap() {
                    assert!(majorizes(a, c).unwrap());
                }
                triple.clear();
            }
        }
    }
}
