mod common;

use gainspec_core::gain_distance::{all_gain_sets_singleton, is_ordering_independent_exhaustive};
use gainspec_core::laplacian::{distance_laplacian, transmission_matrix, underlying_distance_matrices, weighted_laplacian};
use gainspec_core::metric::{transmissions, wiener_index};
use gainspec_core::paths::{brute_force_gain_set, shortest_path_gain_set};
use gainspec_core::switching::{balance, is_balanced, switch, switching_equivalent};
use gainspec_core::*;
use proptest::prelude::*;
use rand::Rng;

use common::*;

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(config(150))]

    #[test]
    fn dag_propagation_matches_enumeration(seed in any::<u64>(), n in 1usize..=7) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                let fast = shortest_path_gain_set(&g, s, t).unwrap();
                let slow = brute_force_gain_set(&g, s, t).unwrap();
                prop_assert_eq!(fast.distance, slow.distance);
                prop_assert_eq!(&fast.gains, &slow.gains);
                prop_assert!(fast.gains.iter().all(|x| x.is_exact()));
            }
        }
    }

    #[test]
    fn distance_matrices_hermitian_with_hop_modulus(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let ord = ordering(&mut r, n);
        for mode in Mode::BOTH {
            let d = gain_distance_matrix(&g, &ord, mode).unwrap();
            let dist = d.distances();
            for i in 0..n {
                prop_assert_eq!(d.entry(i, i).norm(), 0.0);
                for j in 0..n {
                    prop_assert!((d.entry(j, i) - d.entry(i, j).conj()).norm() <= 1e-12);
                    prop_assert!((d.entry(i, j).norm() - dist.get(i, j) as f64).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn min_never_exceeds_max(seed in any::<u64>(), n in 2usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let ord = ordering(&mut r, n);
        let hi = auxiliary_gain(&g, &ord, Mode::Max).unwrap();
        let lo = auxiliary_gain(&g, &ord, Mode::Min).unwrap();
        for s in 0..n {
            for t in 0..n {
                if ord.less(s, t) {
                    let (a, b) = (lo.gain(s, t).unwrap(), hi.gain(s, t).unwrap());
                    prop_assert!(a.lex_cmp(&b) != core::cmp::Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn balance_equivalences_via_complete_graph(seed in any::<u64>(), n in 2usize..=7, balanced in any::<bool>()) {
        let mut r = rng(seed);
        let g = if balanced {
            let base = connected(&mut r, n, 0.5, |_| UnitGain::one());
            let zeta = switching(&mut r, n);
            switch(&base, &zeta).unwrap()
        } else {
            random_graph(&mut r, n)
        };
        let std = VertexOrdering::standard(n);
        let b = is_balanced(&g);
        let kmax = complete_gain_graph(&g, &std, Mode::Max).unwrap();
        let kmin = complete_gain_graph(&g, &std, Mode::Min).unwrap();
        prop_assert_eq!(b, is_balanced(&kmax));
        prop_assert_eq!(b, is_balanced(&kmin));
        prop_assert_eq!(b, is_distance_compatible(&g).unwrap() && is_balanced(&kmax));
        if balanced {
            prop_assert!(b);
        }
    }

    #[test]
    fn compatibility_routes_agree_and_imply_independence(seed in any::<u64>(), n in 1usize..=7) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let compatible = is_distance_compatible(&g).unwrap();
        prop_assert_eq!(compatible, all_gain_sets_singleton(&g).unwrap());
        if compatible {
            prop_assert!(is_ordering_independent(&g).unwrap());
        }
        if is_ordering_independent_exhaustive(&g).unwrap() {
            prop_assert!(is_ordering_independent(&g).unwrap());
        }
    }

    #[test]
    fn switching_invariants(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let z1 = switching(&mut r, n);
        let z2 = switching(&mut r, n);
        let h = switch(&g, &z1).unwrap();
        let k = switch(&h, &z2).unwrap();
        prop_assert_eq!(is_balanced(&g), is_balanced(&h));
        prop_assert!(switching_equivalent(&g, &g).unwrap());
        prop_assert!(switching_equivalent(&g, &h).unwrap() && switching_equivalent(&h, &g).unwrap());
        prop_assert!(switching_equivalent(&h, &k).unwrap() && switching_equivalent(&g, &k).unwrap());
        let composed = switch(&g, &z1.compose(&z2)).unwrap();
        for (a, b) in composed.edges().iter().zip(k.edges()) {
            prop_assert!(a.gain.eq_gain(&b.gain));
        }
        let witness = gainspec_core::switching::switching_witness(&h, &g).unwrap().unwrap();
        let back = switch(&g, &witness).unwrap();
        for (a, b) in back.edges().iter().zip(h.edges()) {
            prop_assert!(a.gain.eq_gain(&b.gain));
        }
    }

    #[test]
    fn wiener_is_half_transmission_sum(seed in any::<u64>(), n in 1usize..=10) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        prop_assert_eq!(2 * wiener_index(&g), transmissions(&g).iter().sum::<u64>());
    }

    #[test]
    fn laplacian_identities(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let ord = ordering(&mut r, n);
        for mode in Mode::BOTH {
            let l = distance_laplacian(&g, &ord, mode, LaplacianSign::Laplacian).unwrap();
            let q = distance_laplacian(&g, &ord, mode, LaplacianSign::Signless).unwrap();
            prop_assert_eq!(&l + &q, transmission_matrix(&g).scale(2.0));
            let s = hermitian_eigenvalues(&l).unwrap();
            prop_assert!(s.is_positive_semidefinite());
        }
        if is_distance_compatible(&g).unwrap() {
            let l = distance_laplacian(&g, &VertexOrdering::standard(n), Mode::Max, LaplacianSign::Laplacian).unwrap();
            prop_assert!(l.entrywise_modulus().max_abs_diff(&underlying_distance_matrices(&g).signless) <= 1e-12);
        }
    }

    #[test]
    fn balanced_laplacian_is_diagonal_similar(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let base = connected(&mut r, n, 0.4, |_| UnitGain::one());
        let g = switch(&base, &switching(&mut r, n)).unwrap();
        let report = balance(&g);
        prop_assert!(report.is_balanced());
        let p: Vec<_> = report.potential.values().iter().map(|z| z.to_complex()).collect();
        let dl = distance_laplacian(&g, &VertexOrdering::standard(n), Mode::Max, LaplacianSign::Laplacian).unwrap();
        let plain = underlying_distance_matrices(&g).laplacian;
        prop_assert!(plain.diagonal_similarity(&p).max_abs_diff(&dl) <= 1e-10);
    }

    #[test]
    fn weighted_laplacian_degrees(seed in any::<u64>(), n in 1usize..=8) {
        let mut r = rng(seed);
        let g = random_graph(&mut r, n);
        let weights: Vec<f64> = (0..g.edge_count()).map(|_| r.random_range(0.0..10.0f64).max(1e-3)).collect();
        let wg = WeightedGainGraph::new(g.clone(), weights.clone()).unwrap();
        let l = weighted_laplacian(&wg);
        for v in 0..n {
            let expected: f64 = g.edges().iter().zip(&weights).filter(|(e, _)| e.u == v || e.v == v).map(|(_, w)| *w).sum();
            prop_assert_eq!(l.get(v, v).re, expected);
        }
    }
}
