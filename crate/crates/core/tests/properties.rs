use proptest::prelude::*;

use ndl_core::graph6::{encode_graph6, parse_graph6};
use ndl_core::rayleigh::{partial_transmissions, rayleigh_sos, sign_partition};
use ndl_core::spectral::{build_ndl, harmonic, kernel_residual, ndl_spectrum};
use ndl_core::{all_pairs_distances, BarbellParams, Graph};

fn connected_graph() -> impl Strategy<Value = Graph> {
    (2usize..=16, 0.3f64..0.95, any::<u64>())
        .prop_map(|(n, p, seed)| Graph::random_connected(n, p, seed).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_metric(g in connected_graph()) {
        let dd = all_pairs_distances(&g).unwrap();
        let n = g.n();
        for i in 0..n {
            prop_assert_eq!(dd.dist(i, i), 0);
            let mut t = 0u64;
            for j in 0..n {
                prop_assert_eq!(dd.dist(i, j), dd.dist(j, i));
                prop_assert_eq!(dd.dist(i, j) == 1, g.has_edge(i, j));
                for k in 0..n {
                    prop_assert!(dd.dist(i, k) <= dd.dist(i, j) + dd.dist(j, k));
                }
                t += dd.dist(i, j) as u64;
            }
            prop_assert_eq!(dd.transmission(i), t);
            prop_assert!(t >= n as u64 - 1);
            prop_assert_eq!(t == n as u64 - 1, g.degree(i) == n - 1);
        }
    }

    #[test]
    fn spectrum_invariants(g in connected_graph()) {
        let (spec, dd) = ndl_spectrum(&g).unwrap();
        let n = g.n() as f64;
        let eig = spec.eigenvalues();
        prop_assert!((eig.iter().sum::<f64>() - n).abs() < 1e-8);
        prop_assert!(eig[0].abs() < 1e-9);
        prop_assert!(eig.windows(2).all(|w| w[0] <= w[1]));
        // K_2 attains 2 = n/(n-1); larger graphs stay strictly below.
        prop_assert!(spec.max() < 2.0 || (g.n() == 2 && (spec.max() - 2.0).abs() < 1e-12));
        prop_assert!(eig[1] <= n / (n - 1.0) + 1e-9);
        prop_assert!(spec.max() >= n / (n - 1.0) - 1e-9);
        let a = build_ndl(&dd).unwrap();
        prop_assert!(kernel_residual(&a, &dd) < 1e-10);
    }

    #[test]
    fn rayleigh_min_max(g in connected_graph(), raw in prop::collection::vec(-1.0f64..1.0, 16)) {
        let (spec, dd) = ndl_spectrum(&g).unwrap();
        let n = g.n();
        let mut y = raw[..n].to_vec();
        prop_assume!(y.iter().any(|v| v.abs() > 1e-3));
        prop_assert!(rayleigh_sos(&dd, &y).unwrap() <= spec.max() + 1e-9);
        // Project out the kernel in the T-weighted inner product.
        let t: Vec<f64> = dd.transmissions().iter().map(|&t| t as f64).collect();
        let shift = y.iter().zip(&t).map(|(a, b)| a * b).sum::<f64>() / t.iter().sum::<f64>();
        y.iter_mut().for_each(|v| *v -= shift);
        prop_assume!(y.iter().map(|v| v * v).sum::<f64>() > 1e-6);
        let q = rayleigh_sos(&dd, &y).unwrap();
        prop_assert!(q >= spec.eigenvalues()[1] - 1e-9);
        prop_assert!(q <= spec.max() + 1e-9);
    }

    #[test]
    fn harmonic_vectors_are_t_orthogonal(g in connected_graph()) {
        let (spec, dd) = ndl_spectrum(&g).unwrap();
        for k in 1..g.n() {
            let h = harmonic(&spec, &dd, k).unwrap();
            prop_assert!(h.transmission_weighted_sum(&dd).abs() < 1e-9);
            prop_assert!((rayleigh_sos(&dd, &h.y).unwrap() - h.eigenvalue).abs() < 1e-9);
        }
    }

    #[test]
    fn partial_transmissions_split_exactly(g in connected_graph(), signs in prop::collection::vec(any::<bool>(), 16)) {
        let dd = all_pairs_distances(&g).unwrap();
        let y: Vec<f64> = signs[..g.n()].iter().map(|&s| if s { 1.0 } else { -1.0 }).collect();
        let part = sign_partition(&g, &dd, &y).unwrap();
        let (tp, tn) = partial_transmissions(&dd, &part);
        for i in 0..g.n() {
            prop_assert_eq!(tp[i] + tn[i], dd.transmission(i));
        }
        prop_assert_eq!(part.geodesic.len() as u32, dd.diameter() + 1);
        prop_assert_eq!(
            part.positive_on_geodesic.len() + part.negative_on_geodesic.len(),
            part.geodesic.len()
        );
    }

    #[test]
    fn graph6_round_trips_connected_graphs(g in connected_graph()) {
        let token = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&token).unwrap(), g);
    }

    #[test]
    fn barbell_structure(k1 in 1usize..8, p in 0usize..6, k2 in 1usize..8) {
        let params = BarbellParams::new(k1, p, k2);
        let g = Graph::barbell(params).unwrap();
        let n = params.n();
        prop_assert_eq!(g.n(), n);
        let cliques = k1 * (k1 - 1) / 2 + k2 * (k2 - 1) / 2;
        let bridges = if p == 0 { 1 } else { k1 + (p - 1) + k2 };
        prop_assert_eq!(g.edge_count(), cliques + bridges);
        let dd = all_pairs_distances(&g).unwrap();
        // Every clique vertex touches its path endpoint; with no path the
        // cliques share the single edge (0, k1).
        let expected = if p == 0 {
            1 + u32::from(k1 > 1) + u32::from(k2 > 1)
        } else {
            p as u32 + 1
        };
        prop_assert_eq!(dd.diameter(), expected);
    }
}

#[test]
fn kpk_matches_barbell() {
    for (n1, n2, n3) in [(2, 1, 2), (3, 2, 4), (5, 3, 5)] {
        let kpk = Graph::kpk(n1, n2, n3).unwrap();
        let barbell = Graph::barbell(BarbellParams::from_kpk(n1, n2, n3).unwrap()).unwrap();
        assert_eq!(kpk, barbell);
        assert_eq!(kpk.n() + 2, n1 + n2 + n3);
    }
}

#[test]
fn complete_graph_is_the_unique_minimiser_on_small_n() {
    let (spec, _) = ndl_spectrum(&Graph::complete(6).unwrap()).unwrap();
    let (other, _) = ndl_spectrum(&Graph::complete(6).unwrap().with_toggled(0, 1)).unwrap();
    assert!((spec.max() - 1.2).abs() < 1e-12);
    assert!(other.max() > spec.max() + 1e-3);
}
